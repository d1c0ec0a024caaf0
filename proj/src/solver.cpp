#include "gaudin/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "gaudin/linalg.hpp"
#include "gaudin/prng.hpp"

namespace gaudin {

using nlohmann::json;

void SolverConfig::validate() const {
    if (precision < kMinPrecision) throw std::invalid_argument("precision must be >= 64 bits");
    if (residual_tolerance <= 0) throw std::invalid_argument("residual tolerance must be > 0");
    if (dedupe_tolerance <= residual_tolerance)
        throw std::invalid_argument("dedupe tolerance must exceed the residual tolerance");
}

namespace {

struct Shape {
    std::vector<std::pair<int, std::size_t>> slots;  // (color, index)
    static Shape of(const ProblemInstance& instance) {
        Shape s;
        for (int i = 0; i < instance.rank(); ++i)
            for (std::size_t j = 0; j < instance.l[i]; ++j) s.slots.emplace_back(i, j);
        return s;
    }
};

BetheCandidate unflatten(const ProblemInstance& instance, const Shape& shape,
                         const std::vector<BigComplex>& v) {
    BetheCandidate t = BetheCandidate::empty(instance.l);
    for (std::size_t k = 0; k < shape.slots.size(); ++k)
        t.t[shape.slots[k].first][shape.slots[k].second] = Scalar(v[k]);
    return t;
}

// Residual and Jacobian of the critical system at a numeric point.
bool residual_and_jacobian(const ProblemInstance& instance, const PairingTable& pairs,
                           const Shape& shape, const std::vector<BigComplex>& v,
                           mpfr_prec_t prec, Vector* res, Matrix* jac) {
    const std::size_t m = shape.slots.size();
    const std::size_t n = instance.points();
    *res = Vector(m, Scalar(0));
    if (jac) *jac = matrix_zero(m, m);

    for (std::size_t a = 0; a < m; ++a) {
        auto [i, j] = shape.slots[a];
        BigComplex acc(prec);
        for (std::size_t s = 0; s < n; ++s) {
            const Rational& w = pairs.weight_alpha[s][i];
            if (w == 0) continue;
            BigComplex d = v[a] - instance.z[s].to_complex(prec);
            if (d.is_zero()) return false;
            BigComplex winv = BigComplex::from_rational(w, prec) / d;
            acc = acc - winv;
            if (jac) (*jac)[a][a] += Scalar(winv / d);
        }
        for (std::size_t b = 0; b < m; ++b) {
            if (b == a) continue;
            auto [s, k] = shape.slots[b];
            (void)k;
            const Rational& pal = pairs.alpha_alpha[s][i];
            if (pal == 0) continue;
            BigComplex d = v[a] - v[b];
            if (d.is_zero()) return false;
            BigComplex term = BigComplex::from_rational(pal, prec) / d;
            acc = acc + term;
            if (jac) {
                BigComplex dd = term / d;
                (*jac)[a][a] -= Scalar(dd);
                (*jac)[a][b] += Scalar(dd);
            }
        }
        (*res)[a] = Scalar(acc);
    }
    return true;
}

double vec_max_abs(const Vector& v) {
    double m = 0.0;
    for (const auto& s : v) m = std::max(m, s.abs_double());
    return m;
}

double instance_scale(const ProblemInstance& instance) {
    double m = 1.0;
    for (const auto& z : instance.z)
        m = std::max(m, z.to_complex(kMinPrecision).abs().to_double());
    return m;
}

// Newton iteration from a start; false on breakdown, runaway, or no
// convergence.
bool newton(const ProblemInstance& instance, const PairingTable& pairs, const Shape& shape,
            std::vector<BigComplex>& v, mpfr_prec_t prec, double tol, unsigned max_iters,
            double escape, double* out_residual) {
    Vector res;
    Matrix jac;
    for (unsigned it = 0; it < max_iters; ++it) {
        for (const auto& c : v)
            if (c.abs().to_double() > escape) return false;
        if (!residual_and_jacobian(instance, pairs, shape, v, prec, &res, &jac)) return false;
        double rnorm = vec_max_abs(res);
        if (rnorm <= tol) {
            *out_residual = rnorm;
            return true;
        }
        auto step = solve_linear(jac, res);
        if (!step) return false;
        for (std::size_t k = 0; k < v.size(); ++k)
            v[k] = v[k] - (*step)[k].to_complex(prec);
    }
    if (!residual_and_jacobian(instance, pairs, shape, v, prec, &res, nullptr)) return false;
    *out_residual = vec_max_abs(res);
    return *out_residual <= tol;
}

void fill_flags(const ProblemInstance& instance, const PairingTable& pairs,
                SolutionRecord& rec, double tol) {
    rec.coordinates_distinct = true;
    rec.avoids_z = true;
    rec.linked_colors_distinct = true;
    const int r = instance.rank();
    for (int i = 0; i < r; ++i) {
        for (std::size_t a = 0; a < rec.t.t[i].size(); ++a) {
            for (std::size_t b = a + 1; b < rec.t.t[i].size(); ++b)
                if ((rec.t.t[i][a] - rec.t.t[i][b]).abs_double() <= tol)
                    rec.coordinates_distinct = false;
            for (std::size_t s = 0; s < instance.points(); ++s)
                if (pairs.weight_alpha[s][i] != 0 &&
                    (rec.t.t[i][a] - instance.z[s]).abs_double() <= tol)
                    rec.avoids_z = false;
            for (int s = 0; s < r; ++s) {
                if (s == i || pairs.alpha_alpha[i][s] == 0) continue;
                for (std::size_t b = 0; b < rec.t.t[s].size(); ++b)
                    if ((rec.t.t[i][a] - rec.t.t[s][b]).abs_double() <= tol)
                        rec.linked_colors_distinct = false;
            }
        }
    }
}

// Sort key comparing mpfr values exactly; deterministic.
bool scalar_less(const Scalar& a, const Scalar& b) {
    BigComplex ca = a.to_complex(kMinPrecision), cb = b.to_complex(kMinPrecision);
    int c = ca.re().compare(cb.re());
    if (c != 0) return c < 0;
    return ca.im().compare(cb.im()) < 0;
}

void canonicalize(SolutionRecord& rec) {
    for (auto& col : rec.t.t) std::sort(col.begin(), col.end(), scalar_less);
}

double orbit_distance(const SolutionRecord& a, const SolutionRecord& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.t.t.size(); ++i)
        for (std::size_t j = 0; j < a.t.t[i].size(); ++j)
            m = std::max(m, (a.t.t[i][j] - b.t.t[i][j]).abs_double());
    return m;
}

}  // namespace

std::vector<SolutionRecord> solve_bae(const ProblemInstance& instance,
                                      const PairingTable& pairs, const SolverConfig& config) {
    config.validate();
    const Shape shape = Shape::of(instance);
    const mpfr_prec_t prec = config.precision;

    if (shape.slots.empty()) {
        SolutionRecord rec;
        rec.t = BetheCandidate::empty(instance.l);
        rec.mu = eigenvalues_from_t(instance, pairs, rec.t);
        rec.precision = prec;
        return {rec};
    }

    // Starts are sampled from a disk around the z-centroid with radius
    // box_scale * spread.
    double cre = 0.0, cim = 0.0;
    for (const auto& z : instance.z) {
        BigComplex c = z.to_complex(kMinPrecision);
        cre += c.re().to_double();
        cim += c.im().to_double();
    }
    cre /= static_cast<double>(instance.points());
    cim /= static_cast<double>(instance.points());
    double spread = 1.0;
    for (const auto& z : instance.z) {
        BigComplex c = z.to_complex(kMinPrecision);
        double dre = c.re().to_double() - cre, dim = c.im().to_double() - cim;
        spread = std::max(spread, std::sqrt(dre * dre + dim * dim));
    }
    double radius = config.box_scale * spread;

    SplitMix64 rng(config.seed);
    std::vector<SolutionRecord> found;
    for (unsigned start = 0; start < config.starts; ++start) {
        // alternate between the wide disk and a tight one hugging the z's,
        // where the roots cluster at desk scale
        double r_start = (start % 2 == 0) ? radius : 0.35 * radius;
        std::vector<BigComplex> v;
        for (std::size_t k = 0; k < shape.slots.size(); ++k) {
            double a, b;
            do {
                a = 2.0 * rng.unit() - 1.0;
                b = 2.0 * rng.unit() - 1.0;
            } while (a * a + b * b > 1.0);
            v.push_back(BigComplex::from_doubles(cre + r_start * a, cim + r_start * b, prec));
        }
        double residual = 0.0;
        double escape = config.escape_factor * (1.0 + instance_scale(instance) + radius);
        if (!newton(instance, pairs, shape, v, prec, config.residual_tolerance,
                    config.max_iterations, escape, &residual))
            continue;
        SolutionRecord rec;
        rec.t = unflatten(instance, shape, v);
        rec.residual = residual;
        rec.precision = prec;
        fill_flags(instance, pairs, rec, config.dedupe_tolerance);
        if (!rec.admissible()) continue;
        rec.mu = eigenvalues_from_t(instance, pairs, rec.t);
        found.push_back(std::move(rec));
    }
    return dedupe_modulo_Sl(std::move(found), config.dedupe_tolerance);
}

SolutionRecord refine(const ProblemInstance& instance, const PairingTable& pairs,
                      const SolutionRecord& record, mpfr_prec_t target_precision,
                      unsigned max_iterations) {
    const Shape shape = Shape::of(instance);
    SolutionRecord out = record;
    out.precision = target_precision;
    if (shape.slots.empty()) {
        out.refined_ok = true;
        return out;
    }
    if (record.t.is_exact()) {
        // exact rational roots stay exact; residual is computed exactly
        ResidualVector res = bae_residual(instance, pairs, record.t);
        if (res.max_norm() == 0.0) {
            out.refined_ok = true;
            out.residual = 0.0;
            out.mu = eigenvalues_from_t(instance, pairs, record.t);
            return out;
        }
    }
    std::vector<BigComplex> v;
    for (const auto& [i, j] : shape.slots)
        v.push_back(record.t.t[i][j].to_complex(target_precision));
    double tol = std::ldexp(1.0, static_cast<int>(16 - target_precision));
    if (tol == 0.0) tol = 1e-300;  // beyond double range; guarded below
    double residual = 0.0;
    double escape = 1e8 * (1.0 + instance_scale(instance));
    bool ok = newton(instance, pairs, shape, v, target_precision, tol, max_iterations,
                     escape, &residual);
    out.refined_ok = ok;
    if (ok) {
        out.t = unflatten(instance, shape, v);
        out.residual = residual;
        out.mu = eigenvalues_from_t(instance, pairs, out.t);
        canonicalize(out);
    }
    return out;
}

std::vector<SolutionRecord> dedupe_modulo_Sl(std::vector<SolutionRecord> records,
                                             double tolerance) {
    for (auto& rec : records) canonicalize(rec);
    std::vector<SolutionRecord> out;
    for (auto& rec : records) {
        bool merged = false;
        for (auto& kept : out) {
            if (orbit_distance(rec, kept) <= tolerance) {
                if (rec.residual < kept.residual) kept = rec;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
        for (std::size_t i = 0; i < a.t.t.size(); ++i)
            for (std::size_t j = 0; j < a.t.t[i].size(); ++j) {
                if (scalar_less(a.t.t[i][j], b.t.t[i][j])) return true;
                if (scalar_less(b.t.t[i][j], a.t.t[i][j])) return false;
            }
        return false;
    });
    return out;
}

namespace {

json scalar_to_archive(const Scalar& s) {
    if (s.is_exact()) return rational_to_string(s.rat());
    return json::array(
        {s.cplx().re().to_hex(), s.cplx().im().to_hex(),
         static_cast<long>(s.cplx().precision())});
}

Scalar scalar_from_archive(const json& v) {
    if (v.is_string()) return Scalar(parse_rational(v.get<std::string>()));
    if (v.is_array() && v.size() == 3) {
        mpfr_prec_t prec = v[2].get<long>();
        return Scalar(BigComplex(BigFloat::from_string(v[0].get<std::string>(), prec),
                                 BigFloat::from_string(v[1].get<std::string>(), prec)));
    }
    throw std::invalid_argument("malformed scalar in archive");
}

}  // namespace

std::string archive_to_json(const ProblemInstance& instance,
                            const std::vector<SolutionRecord>& records) {
    json j;
    j["schema"] = "gaudin-archive-v1";
    j["instance"] = json::parse(instance_to_json(instance));
    json recs = json::array();
    for (const auto& rec : records) {
        json r;
        json t = json::array();
        for (const auto& col : rec.t.t) {
            json c = json::array();
            for (const auto& v : col) c.push_back(scalar_to_archive(v));
            t.push_back(c);
        }
        r["t"] = t;
        json mu = json::array();
        for (const auto& v : rec.mu.mu) mu.push_back(scalar_to_archive(v));
        r["mu"] = mu;
        r["residual"] = rec.residual;
        r["precision"] = static_cast<long>(rec.precision);
        r["flags"] = {{"coordinates_distinct", rec.coordinates_distinct},
                      {"avoids_z", rec.avoids_z},
                      {"linked_colors_distinct", rec.linked_colors_distinct},
                      {"refined_ok", rec.refined_ok}};
        recs.push_back(r);
    }
    j["records"] = recs;
    return j.dump(2);
}

std::vector<SolutionRecord> archive_from_json(const ProblemInstance& instance,
                                              const std::string& text) {
    json j = json::parse(text);
    std::vector<SolutionRecord> out;
    for (const auto& r : j.at("records")) {
        SolutionRecord rec;
        rec.t = BetheCandidate::empty(instance.l);
        const auto& t = r.at("t");
        for (std::size_t i = 0; i < rec.t.t.size(); ++i)
            for (std::size_t k = 0; k < rec.t.t[i].size(); ++k)
                rec.t.t[i][k] = scalar_from_archive(t.at(i).at(k));
        for (const auto& v : r.at("mu")) rec.mu.mu.push_back(scalar_from_archive(v));
        rec.residual = r.at("residual").get<double>();
        rec.precision = r.at("precision").get<long>();
        const auto& f = r.at("flags");
        rec.coordinates_distinct = f.at("coordinates_distinct").get<bool>();
        rec.avoids_z = f.at("avoids_z").get<bool>();
        rec.linked_colors_distinct = f.at("linked_colors_distinct").get<bool>();
        rec.refined_ok = f.at("refined_ok").get<bool>();
        out.push_back(std::move(rec));
    }
    return out;
}

}  // namespace gaudin
