// Command-line front end: instance loading, solve/verify subcommands, and
// human/machine reports. Exit codes: 0 all checks pass, 1 a check failed,
// 2 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaudin/canonical.hpp"
#include "gaudin/forms.hpp"
#include "gaudin/report.hpp"
#include "gaudin/solver.hpp"
#include "gaudin/sov.hpp"

using namespace gaudin;

namespace {

struct CommonOptions {
    std::string instance_path;
    long precision = 128;
    std::uint64_t seed = 1;
    unsigned starts = 128;
    double tolerance = 1e-24;
    unsigned samples = 40;
    std::string format = "human";
    std::string out_path;
    std::string archive_path;
    std::string t_json;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool needs_instance = true) {
    auto* o = cmd->add_option("-i,--instance", opt.instance_path, "instance file (JSON)");
    if (needs_instance) o->required();
    cmd->add_option("--precision", opt.precision, "working precision in bits");
    cmd->add_option("--seed", opt.seed, "PRNG seed");
    cmd->add_option("--starts", opt.starts, "number of Newton starts");
    cmd->add_option("--tolerance", opt.tolerance, "residual tolerance");
    cmd->add_option("--samples", opt.samples, "sample count for identity certification");
    cmd->add_option("--format", opt.format, "report format: human|machine")
        ->check(CLI::IsMember({"human", "machine"}));
    cmd->add_option("-o,--out", opt.out_path, "write solution archive / report here");
}

BetheCandidate candidate_from_json_text(const ProblemInstance& instance,
                                        const std::string& text, mpfr_prec_t prec) {
    nlohmann::json j = nlohmann::json::parse(text);
    BetheCandidate t = BetheCandidate::empty(instance.l);
    if (j.size() != t.t.size()) throw std::invalid_argument("--t has wrong number of colors");
    for (std::size_t i = 0; i < t.t.size(); ++i) {
        if (j[i].size() != t.t[i].size())
            throw std::invalid_argument("--t color " + std::to_string(i + 1) +
                                        " has wrong coordinate count");
        for (std::size_t k = 0; k < t.t[i].size(); ++k) {
            const auto& v = j[i][k];
            if (v.is_string()) {
                std::string s = v.get<std::string>();
                if (s.find("0x") != std::string::npos)
                    t.t[i][k] = Scalar(BigComplex(BigFloat::from_string(s, prec),
                                                  BigFloat(prec)));
                else
                    t.t[i][k] = Scalar(parse_rational(s));
            } else if (v.is_number()) {
                t.t[i][k] = Scalar(BigComplex::from_doubles(v.get<double>(), 0.0, prec));
            } else if (v.is_array() && v.size() == 2) {
                t.t[i][k] = Scalar(BigComplex::from_doubles(v[0].get<double>(),
                                                            v[1].get<double>(), prec));
            } else {
                throw std::invalid_argument("malformed --t entry");
            }
        }
    }
    return t;
}

std::vector<SolutionRecord> candidates_for_verification(const ProblemInstance& instance,
                                                        const PairingTable& pairs,
                                                        const CommonOptions& opt) {
    if (!opt.t_json.empty()) {
        SolutionRecord rec;
        rec.t = candidate_from_json_text(instance, opt.t_json, opt.precision);
        rec.precision = opt.precision;
        try {
            rec.mu = eigenvalues_from_t(instance, pairs, rec.t);
        } catch (const std::exception&) {
        }
        return {rec};
    }
    if (!opt.archive_path.empty()) {
        std::ifstream in(opt.archive_path);
        if (!in) throw std::invalid_argument("cannot open archive: " + opt.archive_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        return archive_from_json(instance, buf.str());
    }
    SolverConfig cfg;
    cfg.precision = opt.precision;
    cfg.residual_tolerance = opt.tolerance;
    cfg.starts = opt.starts;
    cfg.seed = opt.seed;
    return solve_bae(instance, pairs, cfg);
}

int emit(const RunReport& report, const CommonOptions& opt) {
    std::string text = opt.format == "machine" ? report.to_json() : report.to_human();
    std::cout << text;
    return report.all_pass() ? 0 : 1;
}

double singular_tol(const SolutionRecord& rec, double fallback) {
    if (rec.t.is_exact()) return 0.0;
    return fallback;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic Gaudin model toolkit: Bethe vectors, equation forms, "
                 "separation of variables"};
    app.require_subcommand(1);

    CommonOptions opt;

    auto* solve = app.add_subcommand("solve", "solve the Bethe ansatz equations");
    add_common(solve, opt);

    auto* verify = app.add_subcommand("verify-forms",
                                      "check all equivalent forms on candidates");
    add_common(verify, opt);
    verify->add_option("--t", opt.t_json, "candidate t as JSON, e.g. [[\"1/2\"]]");
    verify->add_option("--archive", opt.archive_path, "solution archive from `solve`");

    auto* bethe = app.add_subcommand("bethe-vector",
                                     "build the canonical vector and check the Bethe theorem");
    add_common(bethe, opt);
    bethe->add_option("--t", opt.t_json, "candidate t as JSON");
    bethe->add_option("--archive", opt.archive_path, "solution archive from `solve`");

    auto* gaudin_check = app.add_subcommand("gaudin-check",
                                            "Gaudin algebra identities (sum zero, "
                                            "commutativity, sl3 grading)");
    add_common(gaudin_check, opt);

    auto* sov_check = app.add_subcommand("sov-check",
                                         "separation-of-variables identities");
    add_common(sov_check, opt);

    auto* render = app.add_subcommand("report", "re-verify and render a solution archive");
    add_common(render, opt);
    render->add_option("--archive", opt.archive_path, "solution archive from `solve`")
        ->required();

    CLI11_PARSE(app, argc, argv);

    auto started = std::chrono::steady_clock::now();
    RunReport report;
    report.seed = opt.seed;

    ProblemInstance instance;
    PairingTable pairs;
    try {
        instance = load_instance(opt.instance_path);
        pairs = pairings(instance);
        report.instance_digest = digest_hex(instance_to_json(instance));
    } catch (const std::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(solve)) {
            report.subcommand = "solve";
            SolverConfig cfg;
            cfg.precision = opt.precision;
            cfg.residual_tolerance = opt.tolerance;
            cfg.starts = opt.starts;
            cfg.seed = opt.seed;
            auto records = solve_bae(instance, pairs, cfg);
            report.checks.push_back({"solve_bae (orbits found: " +
                                         std::to_string(records.size()) + ")",
                                     true, 0.0, ""});
            for (const auto& rec : records)
                report.checks.push_back({"orbit residual", rec.residual <= cfg.residual_tolerance,
                                         rec.residual, ""});
            std::string archive = archive_to_json(instance, records);
            if (!opt.out_path.empty()) {
                std::ofstream out(opt.out_path);
                out << archive;
            } else if (opt.format == "machine") {
                std::cout << archive << "\n";
            }
        } else if (app.got_subcommand(verify)) {
            report.subcommand = "verify-forms";
            auto records = candidates_for_verification(instance, pairs, opt);
            if (records.empty())
                report.checks.push_back({"candidates available", false, 0.0, "no candidates"});
            for (const auto& rec : records) {
                double tol = rec.t.is_exact() ? 0.0 : opt.tolerance;
                FormsReport fr = forms_report(instance, pairs, rec.t, std::nullopt,
                                              std::nullopt, tol);
                for (const auto& c : fr.checks) {
                    if (!c.applicable) continue;
                    std::string detail = c.detail;
                    if (!c.residual_poly.empty())
                        detail += " | residual: " + c.residual_poly;
                    report.checks.push_back({c.name, c.pass, c.residual, detail});
                }
            }
        } else if (app.got_subcommand(bethe)) {
            report.subcommand = "bethe-vector";
            auto records = candidates_for_verification(instance, pairs, opt);
            RepSpace rep(instance);
            auto gaudin_ops = rep.gaudin_matrices(instance.l);
            const WeightBasis& basis = rep.basis(instance.l);
            for (const auto& rec : records) {
                TensorVector omega = canonical_vector(rep, instance.l, rec.t);
                if (opt.format == "machine") {
                    // labeled coefficient export of the Bethe vector
                    std::ostringstream os;
                    for (const auto& [pos, s] : omega.coeffs)
                        os << basis.indices()[pos].label(rep.gens()) << " : "
                           << s.to_string() << "; ";
                    report.checks.push_back({"bethe vector (basis labels)", true, 0.0,
                                             os.str()});
                }
                double tol = singular_tol(rec, opt.tolerance);
                double sres = rep.singular_residual(omega);
                report.checks.push_back({"is_singular(canonical_vector)", sres <= tol, sres, ""});
                EigenvalueVector mu = eigenvalues_from_t(instance, pairs, rec.t);
                double worst = 0.0;
                for (std::size_t i = 0; i < gaudin_ops.size(); ++i) {
                    TensorVector hv = rep.apply(gaudin_ops[i].op, omega);
                    TensorVector diff = hv;
                    for (auto& [pos, s] : omega.coeffs) {
                        auto it = diff.coeffs.find(pos);
                        Scalar sub = s * mu.mu[i];
                        if (it == diff.coeffs.end())
                            diff.coeffs.emplace(pos, -sub);
                        else {
                            it->second -= sub;
                            if (it->second.is_zero()) diff.coeffs.erase(it);
                        }
                    }
                    worst = std::max(worst, diff.max_abs());
                }
                report.checks.push_back({"H_i omega = mu_i omega", worst <= tol, worst, ""});
            }
        } else if (app.got_subcommand(gaudin_check)) {
            report.subcommand = "gaudin-check";
            RepSpace rep(instance);
            auto ops = rep.gaudin_matrices(instance.l);
            Matrix sum = matrix_zero(rep.basis(instance.l).dim(), rep.basis(instance.l).dim());
            for (const auto& h : ops) sum = matadd(sum, h.op.matrix);
            double sres = matrix_max_abs(sum);
            report.checks.push_back({"sum_i H_i = 0", sres == 0.0 || sres <= opt.tolerance,
                                     sres, ""});
            double cres = 0.0;
            for (std::size_t i = 0; i < ops.size(); ++i)
                for (std::size_t j = i + 1; j < ops.size(); ++j) {
                    Matrix c = matsub(matmul(ops[i].op.matrix, ops[j].op.matrix),
                                      matmul(ops[j].op.matrix, ops[i].op.matrix));
                    cres = std::max(cres, matrix_max_abs(c));
                }
            report.checks.push_back({"[H_i, H_j] = 0", cres == 0.0 || cres <= opt.tolerance,
                                     cres, ""});
            if (instance.rank() == 2) {
                auto gr = graded_casimir_checks(instance, pairs, instance.l,
                                                std::max(1u, opt.samples / 2), opt.seed);
                bool ok = gr.grading_ok && gr.parts_sum_ok && gr.annihilation_ok &&
                          gr.diagonal_vanishing_ok && gr.leading_term_ok;
                report.checks.push_back({"sl3 graded Casimir checks", ok, 0.0,
                                         ok ? "" : gr.first_failure});
            }
        } else if (app.got_subcommand(sov_check)) {
            report.subcommand = "sov-check";
            SplitMix64 rng(opt.seed);
            if (instance.rank() == 1) {
                RepSpace rep(instance);
                PolyModel model(instance, pairs);
                const WeightBasis& basis = rep.basis(instance.l);
                EigenvalueVector mu;
                std::vector<Rational> parts;
                Rational acc(0);
                for (std::size_t s = 0; s + 1 < instance.points(); ++s) {
                    Rational v = rng.rational();
                    parts.push_back(v);
                    acc += v;
                }
                for (std::size_t s = 0; s < instance.points(); ++s)
                    mu.mu.push_back(s + 1 < instance.points() ? Scalar(parts[s])
                                                              : Scalar(-acc));
                bool ok = true;
                std::string why;
                for (const auto& index : basis.indices()) {
                    auto v = verify_sklyanin_sl2(instance, pairs, model.monomial(index), mu);
                    auto w = verify_sklyanin_identities(instance, pairs,
                                                        model.monomial(index));
                    if (!v.equal || !w.equal) {
                        ok = false;
                        why = v.equal ? w.first_failure : v.first_failure;
                        break;
                    }
                }
                report.checks.push_back({"sklyanin operator identity (all basis monomials)",
                                         ok, 0.0, why});
            } else if (instance.rank() == 2) {
                BetheCandidate t = BetheCandidate::empty(instance.l);
                std::vector<Rational> avoid;
                for (const auto& z : instance.z)
                    if (z.is_exact()) avoid.push_back(z.rat());
                for (auto& col : t.t)
                    for (auto& v : col) {
                        Rational q = rng.rational_avoiding(avoid);
                        avoid.push_back(q);
                        v = Scalar(q);
                    }
                EigenvalueVector mu;
                Rational acc(0);
                for (std::size_t s = 0; s + 1 < instance.points(); ++s) {
                    Rational v = rng.rational();
                    mu.mu.push_back(Scalar(v));
                    acc += v;
                }
                mu.mu.push_back(Scalar(-acc));
                auto verdict = verify_separation_sl3(instance, pairs, t, mu, opt.samples,
                                                     opt.seed + 1);
                report.checks.push_back({"separation identity (coefficient-wise)",
                                         verdict.identity_ok, 0.0, verdict.first_failure});
                report.checks.push_back(
                    {"separation identity (samples " + std::to_string(verdict.sample_count) +
                         " > degree bound " + std::to_string(verdict.degree_bound) + ")",
                     verdict.samples_ok, 0.0, ""});
                // Psi cross-check at random diagonal-free points.
                RepSpace rep(instance);
                ChangeOfVariables cov(instance, pairs);
                bool psi_ok = true;
                for (unsigned s = 0; s < std::max(1u, opt.samples / 4); ++s) {
                    SeparationPoint p = cov.random_diagonal_point(rng, avoid);
                    // generic point: perturb y2 off the diagonal
                    for (auto& v : p.y[1]) {
                        Rational q = rng.rational_avoiding(avoid);
                        avoid.push_back(q);
                        v = Scalar(q);
                    }
                    Scalar via_formula = psi_separated(instance, pairs, t, p);
                    MultiPoly canon = canonical_x_polynomial(rep, cov.model(), instance.l, t);
                    auto x = cov.uy_to_x(p);
                    std::vector<Scalar> flat;
                    for (std::size_t f = 0; f < instance.points(); ++f)
                        for (int k = 1; k <= 3; ++k) flat.push_back(x[k - 1][f]);
                    Scalar via_canonical = canon.eval(flat);
                    if (!(via_formula == via_canonical)) psi_ok = false;
                }
                report.checks.push_back({"psi separated form matches canonical vector",
                                         psi_ok, 0.0, ""});
            }
        } else if (app.got_subcommand(render)) {
            report.subcommand = "report";
            auto records = candidates_for_verification(instance, pairs, opt);
            for (const auto& rec : records) {
                double res = 0.0;
                bool ok = true;
                try {
                    res = bae_residual(instance, pairs, rec.t).max_norm();
                    double stated = std::max(rec.residual, 1e-300);
                    ok = res <= 16.0 * stated || res <= opt.tolerance;
                } catch (const std::exception&) {
                    ok = false;
                }
                report.checks.push_back({"recomputed residual matches stored", ok, res, ""});
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    report.elapsed_ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    return emit(report, opt);
}
