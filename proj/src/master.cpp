#include "gaudin/master.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudin {

std::vector<Scalar> BetheCandidate::flattened() const {
    std::vector<Scalar> out;
    for (const auto& col : t) out.insert(out.end(), col.begin(), col.end());
    return out;
}

bool BetheCandidate::is_exact() const {
    for (const auto& col : t)
        for (const auto& v : col)
            if (!v.is_exact()) return false;
    return true;
}

double ResidualVector::max_norm() const {
    double m = 0.0;
    for (const auto& col : values)
        for (const auto& v : col) m = std::max(m, v.abs_double());
    return m;
}

Scalar EigenvalueVector::sum() const {
    Scalar acc(0);
    for (const auto& m : mu) acc += m;
    return acc;
}

namespace {

void check_shape(const ProblemInstance& instance, const BetheCandidate& t) {
    if (t.t.size() != instance.l.size())
        throw std::invalid_argument("candidate has wrong number of colors");
    for (std::size_t i = 0; i < t.t.size(); ++i)
        if (t.t[i].size() != instance.l[i])
            throw std::invalid_argument("candidate color " + std::to_string(i + 1) +
                                        " has wrong coordinate count");
}

[[noreturn]] void pole_error(const std::string& what, std::size_t color, std::size_t idx) {
    throw std::domain_error("coincidence in equation for t^{(" + std::to_string(color + 1) +
                            ")}_" + std::to_string(idx + 1) + ": " + what);
}

}  // namespace

ResidualVector bae_residual(const ProblemInstance& instance, const PairingTable& pairs,
                            const BetheCandidate& t) {
    check_shape(instance, t);
    const int r = instance.rank();
    const std::size_t n = instance.points();
    ResidualVector out;
    out.values.resize(r);

    for (int i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < t.t[i].size(); ++j) {
            const Scalar& tij = t.t[i][j];
            Scalar acc(0);
            for (std::size_t s = 0; s < n; ++s) {
                if (pairs.weight_alpha[s][i] == 0) continue;
                Scalar d = tij - instance.z[s];
                if (d.is_zero()) pole_error("t = z_" + std::to_string(s + 1), i, j);
                acc -= Scalar(pairs.weight_alpha[s][i]) / d;
            }
            for (int s = 0; s < r; ++s) {
                const Rational& pal = pairs.alpha_alpha[s][i];
                if (pal == 0) continue;
                for (std::size_t k = 0; k < t.t[s].size(); ++k) {
                    if (s == i && k == j) continue;
                    Scalar d = tij - t.t[s][k];
                    if (d.is_zero())
                        pole_error("t coincides with t^{(" + std::to_string(s + 1) + ")}_" +
                                       std::to_string(k + 1),
                                   i, j);
                    acc += Scalar(pal) / d;
                }
            }
            out.values[i].push_back(acc);
        }
    }
    return out;
}

namespace {

// One factor (A - B)^exponent of the master function; each slot is either
// a z-point or a t-coordinate.
struct MasterFactor {
    enum class Slot { kZ, kT };
    Slot kind_a, kind_b;
    std::size_t a1, a2;  // z index, or (color, index)
    std::size_t b1, b2;
    Rational exponent;
};

std::vector<MasterFactor> master_factors(const ProblemInstance& instance,
                                         const PairingTable& pairs) {
    std::vector<MasterFactor> fs;
    const std::size_t n = instance.points();
    const int r = instance.rank();
    using Slot = MasterFactor::Slot;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            fs.push_back({Slot::kZ, Slot::kZ, i, 0, j, 0, pairs.weight_weight[i][j]});
    for (int i = 0; i < r; ++i)
        for (std::size_t j = 0; j < instance.l[i]; ++j)
            for (std::size_t s = 0; s < n; ++s)
                fs.push_back({Slot::kT, Slot::kZ, static_cast<std::size_t>(i), j, s, 0,
                              -pairs.weight_alpha[s][i]});
    // same-color pairs carry (a_i, a_i); cross-color pairs (a_i, a_s)
    for (int i = 0; i < r; ++i)
        for (std::size_t j = 0; j < instance.l[i]; ++j)
            for (std::size_t k = j + 1; k < instance.l[i]; ++k)
                fs.push_back({Slot::kT, Slot::kT, static_cast<std::size_t>(i), j,
                              static_cast<std::size_t>(i), k, pairs.alpha_alpha[i][i]});
    for (int i = 0; i < r; ++i)
        for (int s = i + 1; s < r; ++s)
            for (std::size_t j = 0; j < instance.l[i]; ++j)
                for (std::size_t k = 0; k < instance.l[s]; ++k)
                    fs.push_back({Slot::kT, Slot::kT, static_cast<std::size_t>(i), j,
                                  static_cast<std::size_t>(s), k, pairs.alpha_alpha[i][s]});
    return fs;
}

Scalar slot_value(const ProblemInstance& instance, const BetheCandidate& t,
                  MasterFactor::Slot kind, std::size_t i1, std::size_t i2) {
    return kind == MasterFactor::Slot::kZ ? instance.z[i1] : t.t[i1][i2];
}

}  // namespace

ResidualVector bae_residual_via_master(const ProblemInstance& instance,
                                       const PairingTable& pairs, const BetheCandidate& t) {
    check_shape(instance, t);
    auto factors = master_factors(instance, pairs);
    ResidualVector out;
    out.values.resize(instance.rank());
    for (int i = 0; i < instance.rank(); ++i)
        out.values[i].assign(instance.l[i], Scalar(0));

    using Slot = MasterFactor::Slot;
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        Scalar va = slot_value(instance, t, f.kind_a, f.a1, f.a2);
        Scalar vb = slot_value(instance, t, f.kind_b, f.b1, f.b2);
        Scalar diff = va - vb;
        if (f.kind_a == Slot::kT || f.kind_b == Slot::kT) {
            if (diff.is_zero())
                throw std::domain_error("master factor vanishes at the candidate");
            Scalar dlog = Scalar(f.exponent) / diff;
            if (f.kind_a == Slot::kT) out.values[f.a1][f.a2] += dlog;
            if (f.kind_b == Slot::kT) out.values[f.b1][f.b2] -= dlog;
        }
    }
    return out;
}

EigenvalueVector eigenvalues_from_t(const ProblemInstance& instance, const PairingTable& pairs,
                                    const BetheCandidate& t) {
    check_shape(instance, t);
    const std::size_t n = instance.points();
    EigenvalueVector out;
    for (std::size_t s = 0; s < n; ++s) {
        Scalar acc(0);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == s) continue;
            acc += Scalar(pairs.weight_weight[s][k]) / (instance.z[s] - instance.z[k]);
        }
        for (int i = 0; i < instance.rank(); ++i) {
            if (pairs.weight_alpha[s][i] == 0) continue;
            for (std::size_t j = 0; j < t.t[i].size(); ++j) {
                Scalar d = t.t[i][j] - instance.z[s];
                if (d.is_zero())
                    throw std::domain_error("eigenvalues_from_t: t coincides with z_" +
                                            std::to_string(s + 1));
                acc += Scalar(pairs.weight_alpha[s][i]) / d;
            }
        }
        out.mu.push_back(acc);
    }
    return out;
}

EigenvalueVector eigenvalues_via_master(const ProblemInstance& instance,
                                        const PairingTable& pairs, const BetheCandidate& t) {
    check_shape(instance, t);
    auto factors = master_factors(instance, pairs);
    EigenvalueVector out;
    out.mu.assign(instance.points(), Scalar(0));
    using Slot = MasterFactor::Slot;
    for (const auto& f : factors) {
        if (f.exponent == 0) continue;
        Scalar va = slot_value(instance, t, f.kind_a, f.a1, f.a2);
        Scalar vb = slot_value(instance, t, f.kind_b, f.b1, f.b2);
        Scalar diff = va - vb;
        if (f.kind_a == Slot::kZ || f.kind_b == Slot::kZ) {
            if (diff.is_zero())
                throw std::domain_error("master factor vanishes at the candidate");
            Scalar dlog = Scalar(f.exponent) / diff;
            if (f.kind_a == Slot::kZ) out.mu[f.a1] += dlog;
            if (f.kind_b == Slot::kZ) out.mu[f.b1] -= dlog;
        }
    }
    return out;
}

std::string residual_report(const ResidualVector& r) {
    std::ostringstream os;
    for (std::size_t i = 0; i < r.values.size(); ++i)
        for (std::size_t j = 0; j < r.values[i].size(); ++j)
            os << "eq(t^(" << i + 1 << ")_" << j + 1 << ") = " << r.values[i][j].to_string()
               << "\n";
    os << "max-norm = " << r.max_norm() << "\n";
    return os.str();
}

}  // namespace gaudin
