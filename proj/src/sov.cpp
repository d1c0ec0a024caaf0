#include "gaudin/sov.hpp"

#include <sstream>
#include <stdexcept>

#include "gaudin/forms.hpp"

namespace gaudin {

bool SeparationPoint::on_main_diagonal() const {
    if (y.size() < 2) return true;
    for (std::size_t j = 0; j < y[0].size(); ++j)
        if (!(y[0][j] == y[1][j])) return false;
    return true;
}

namespace {

std::vector<std::string> uy_var_names(int rank, std::size_t n) {
    std::vector<std::string> names;
    if (rank == 1) {
        names.push_back("u");
        for (std::size_t j = 1; j < n; ++j) names.push_back("y" + std::to_string(j));
    } else {
        for (int k = 1; k <= 3; ++k) names.push_back("u" + std::to_string(k));
        for (std::size_t j = 1; j < n; ++j)
            for (int k = 1; k <= 3; ++k)
                names.push_back("y" + std::to_string(k) + "_" + std::to_string(j));
    }
    return names;
}

}  // namespace

ChangeOfVariables::ChangeOfVariables(const ProblemInstance& instance, const PairingTable& pairs)
    : instance_(&instance), model_(instance, pairs),
      colors_(instance.rank() == 1 ? 1 : 3),
      uy_vars_(VarSet::make(uy_var_names(instance.rank(), instance.points()))) {
    const std::size_t n = instance.points();
    for (std::size_t f = 0; f < n; ++f) {
        Scalar denom(1);
        for (std::size_t s = 0; s < n; ++s)
            if (s != f) denom *= instance.z[f] - instance.z[s];
        for (int k = 1; k <= colors_; ++k) {
            MultiPoly img = MultiPoly::variable(uy_vars_, u_index(k));
            for (std::size_t j = 0; j + 1 < n; ++j) {
                MultiPoly lin = MultiPoly::constant(uy_vars_, instance.z[f]) -
                                MultiPoly::variable(uy_vars_, y_index(k, j));
                img = img * lin;
            }
            images_.push_back(img.scaled(Scalar(1) / denom));
        }
    }
    // images_ is ordered factor-major then color, matching the model vars
    // (sl2: one var per factor; sl3: x1, x2, x3 per factor).
}

std::size_t ChangeOfVariables::u_index(int k) const {
    if (k < 1 || k > colors_) throw std::out_of_range("u index out of range");
    return static_cast<std::size_t>(k - 1);
}

std::size_t ChangeOfVariables::y_index(int k, std::size_t j) const {
    if (k < 1 || k > colors_) throw std::out_of_range("y color out of range");
    if (j + 1 >= instance_->points()) throw std::out_of_range("y upper index out of range");
    if (colors_ == 1) return 1 + j;
    return 3 + 3 * j + static_cast<std::size_t>(k - 1);
}

std::vector<std::vector<Scalar>> ChangeOfVariables::uy_to_x(const SeparationPoint& p) const {
    const std::size_t n = instance_->points();
    std::vector<std::vector<Scalar>> x(colors_, std::vector<Scalar>(n, Scalar(0)));
    for (int k = 0; k < colors_; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            Scalar num = p.u[k];
            for (std::size_t j = 0; j + 1 < n; ++j) num *= instance_->z[i] - p.y[k][j];
            Scalar den(1);
            for (std::size_t s = 0; s < n; ++s)
                if (s != i) den *= instance_->z[i] - instance_->z[s];
            x[k][i] = num / den;
        }
    return x;
}

SeparationPoint ChangeOfVariables::x_to_uy(const std::vector<std::vector<Scalar>>& x,
                                           mpfr_prec_t precision) const {
    const std::size_t n = instance_->points();
    SeparationPoint p;
    for (int k = 0; k < colors_; ++k) {
        Scalar u(0);
        for (std::size_t i = 0; i < n; ++i) u += x[k][i];
        if (u.is_zero())
            throw std::domain_error("x_to_uy: u_" + std::to_string(k + 1) +
                                    " = 0 lies on the excluded hyperplane");
        // numerator sum_i x_i prod_{s != i} (t - z_s); roots are the y's
        UniPoly num;
        for (std::size_t i = 0; i < n; ++i) {
            UniPoly prod = UniPoly::constant(x[k][i]);
            for (std::size_t s = 0; s < n; ++s) {
                if (s == i) continue;
                prod = prod * UniPoly({-instance_->z[s], Scalar(1)});
            }
            num = num + prod;
        }
        std::vector<BigComplex> roots = complex_roots(num, precision, 256);
        p.u.push_back(u);
        std::vector<Scalar> ys;
        for (const auto& r : roots) ys.emplace_back(r);
        p.y.push_back(std::move(ys));
    }
    return p;
}

MultiPoly ChangeOfVariables::compose_with_change(const MultiPoly& f) const {
    if (!same_vars(f.vars(), model_.vars()))
        throw std::invalid_argument("compose_with_change: polynomial is not in model variables");
    return f.substitute(images_);
}

std::vector<Scalar> ChangeOfVariables::point_vector(const SeparationPoint& p) const {
    std::vector<Scalar> v(uy_vars_->size(), Scalar(0));
    for (int k = 1; k <= colors_; ++k) {
        v[u_index(k)] = p.u[k - 1];
        for (std::size_t j = 0; j + 1 < instance_->points(); ++j)
            v[y_index(k, j)] = p.y[k - 1][j];
    }
    return v;
}

MultiPoly ChangeOfVariables::restrict_to_diagonal(const MultiPoly& f) const {
    if (colors_ != 3) return f;
    MultiPoly::TermMap terms;
    for (const auto& [e, s] : f.terms()) {
        MultiPoly::Exponents d = e;
        for (std::size_t j = 0; j + 1 < instance_->points(); ++j) {
            d[y_index(1, j)] += d[y_index(2, j)];
            d[y_index(2, j)] = 0;
        }
        auto it = terms.find(d);
        if (it == terms.end())
            terms.emplace(std::move(d), s);
        else
            it->second += s;
    }
    return MultiPoly::from_terms(f.vars(), std::move(terms));
}

SeparationPoint ChangeOfVariables::random_diagonal_point(
    SplitMix64& rng, const std::vector<Rational>& extra_avoid) const {
    const std::size_t n = instance_->points();
    SeparationPoint p;
    std::vector<Rational> avoid = extra_avoid;
    for (const auto& z : instance_->z)
        if (z.is_exact()) avoid.push_back(z.rat());
    std::vector<Rational> shared;
    for (std::size_t j = 0; j + 1 < n; ++j) {
        Rational w = rng.rational_avoiding(avoid);
        avoid.push_back(w);
        shared.push_back(w);
    }
    for (int k = 0; k < colors_; ++k) {
        Rational u(0);
        while (u == 0) u = rng.rational();
        p.u.push_back(Scalar(u));
        std::vector<Scalar> ys;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            if (colors_ == 3 && k < 2) {
                ys.emplace_back(shared[j]);
            } else {
                Rational w = rng.rational_avoiding(avoid);
                avoid.push_back(w);
                ys.emplace_back(w);
            }
        }
        p.y.push_back(std::move(ys));
    }
    return p;
}

namespace {

// prod over the listed z-indices of (y_var - z_k) as a MultiPoly.
MultiPoly y_z_product(const ChangeOfVariables& cov, const ProblemInstance& instance,
                      std::size_t y_var, long skip) {
    MultiPoly acc = MultiPoly::constant(cov.uy_vars(), Scalar(1));
    for (std::size_t k = 0; k < instance.points(); ++k) {
        if (static_cast<long>(k) == skip) continue;
        acc = acc * (MultiPoly::variable(cov.uy_vars(), y_var) -
                     MultiPoly::constant(cov.uy_vars(), instance.z[k]));
    }
    return acc;
}

}  // namespace

IdentityVerdict verify_sklyanin_sl2(const ProblemInstance& instance, const PairingTable& pairs,
                                    const MultiPoly& F, const EigenvalueVector& mu) {
    if (instance.rank() != 1)
        throw std::invalid_argument("verify_sklyanin_sl2 requires rank 1");
    ChangeOfVariables cov(instance, pairs);
    const PolyModel& model = cov.model();
    const std::size_t n = instance.points();

    IdentityVerdict verdict;
    std::vector<MultiPoly> transported;  // (H_i - mu_i) F, transported
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly hf = model.gaudin_op(i)(F) - F.scaled(mu.mu[i]);
        transported.push_back(cov.compose_with_change(hf));
    }
    MultiPoly G = cov.compose_with_change(F);

    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t yj = cov.y_index(1, j);
        MultiPoly lhs(cov.uy_vars());
        for (std::size_t i = 0; i < n; ++i)
            lhs = lhs + y_z_product(cov, instance, yj, static_cast<long>(i)) * transported[i];

        // K_j in the transport-derived form:
        //   +d^2_y - sum_i (L_i,a1)/(y-z_i) d_y + sum_i (-mu_i + g_i)/(y-z_i)
        MultiPoly rhs = y_z_product(cov, instance, yj, -1) * G.derive(yj).derive(yj);
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly w = y_z_product(cov, instance, yj, static_cast<long>(i));
            rhs = rhs - (w * G.derive(yj)).scaled(Scalar(pairs.weight_alpha[i][0]));
            Scalar g(0);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) g += Scalar(pairs.weight_weight[i][k]) /
                                 (instance.z[i] - instance.z[k]);
            rhs = rhs + (w * G).scaled(g - mu.mu[i]);
        }

        if (!(lhs == rhs)) {
            verdict.equal = false;
            if (verdict.first_failure.empty())
                verdict.first_failure = "j = " + std::to_string(j + 1);
        }
    }
    return verdict;
}

IdentityVerdict verify_sklyanin_identities(const ProblemInstance& instance,
                                           const PairingTable& pairs, const MultiPoly& F) {
    if (instance.rank() != 1)
        throw std::invalid_argument("verify_sklyanin_identities requires rank 1");
    ChangeOfVariables cov(instance, pairs);
    const PolyModel& model = cov.model();
    const std::size_t n = instance.points();
    IdentityVerdict verdict;

    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t yj = cov.y_index(1, j);
        MultiPoly G = cov.compose_with_change(F);

        // identity 1: d^2_y G = - sum_{i != k} x_i x_k /((y-z_i)(z_i-z_k)) (d_i-d_k)^2 F
        MultiPoly lhs1 = y_z_product(cov, instance, yj, -1) * G.derive(yj).derive(yj);
        MultiPoly rhs1(cov.uy_vars());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                std::size_t xi = model.var_index(1, i), xk = model.var_index(1, k);
                MultiPoly d2 = F.derive(xi) - F.derive(xk);
                d2 = d2.derive(xi) - d2.derive(xk);
                MultiPoly term = d2.mul_var(xi).mul_var(xk);
                Scalar w = Scalar(-1) / (instance.z[i] - instance.z[k]);
                rhs1 = rhs1 + (y_z_product(cov, instance, yj, static_cast<long>(i)) *
                               cov.compose_with_change(term))
                                  .scaled(w);
            }
        if (!(lhs1 == rhs1)) {
            verdict.equal = false;
            if (verdict.first_failure.empty())
                verdict.first_failure = "first identity, j = " + std::to_string(j + 1);
        }

        // identity 2: sum_i (L_i,a1)/(y-z_i) d_y G =
        //   - sum_{i != k} ((L_i,a1)x_k - (L_k,a1)x_i)/((y-z_i)(z_i-z_k)) (d_i-d_k) F
        MultiPoly lhs2(cov.uy_vars());
        for (std::size_t i = 0; i < n; ++i)
            lhs2 = lhs2 + (y_z_product(cov, instance, yj, static_cast<long>(i)) * G.derive(yj))
                              .scaled(Scalar(pairs.weight_alpha[i][0]));
        MultiPoly rhs2(cov.uy_vars());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i) continue;
                std::size_t xi = model.var_index(1, i), xk = model.var_index(1, k);
                MultiPoly d1 = F.derive(xi) - F.derive(xk);
                MultiPoly term = d1.mul_var(xk).scaled(Scalar(pairs.weight_alpha[i][0])) -
                                 d1.mul_var(xi).scaled(Scalar(pairs.weight_alpha[k][0]));
                Scalar w = Scalar(-1) / (instance.z[i] - instance.z[k]);
                rhs2 = rhs2 + (y_z_product(cov, instance, yj, static_cast<long>(i)) *
                               cov.compose_with_change(term))
                                  .scaled(w);
            }
        if (!(lhs2 == rhs2)) {
            verdict.equal = false;
            if (verdict.first_failure.empty())
                verdict.first_failure = "second identity, j = " + std::to_string(j + 1);
        }
    }
    return verdict;
}

std::vector<GradedComponent> degree_decompose(const PolyModel& model, const MultiPoly& F) {
    if (model.rank() != 2)
        throw std::invalid_argument("degree_decompose applies to the sl3 model");
    std::vector<std::size_t> x3;
    for (std::size_t f = 0; f < model.factors(); ++f) x3.push_back(model.var_index(3, f));
    std::vector<GradedComponent> out;
    unsigned top = F.degree_in(x3);
    for (unsigned d = 0; d <= top; ++d) {
        MultiPoly comp = F.component_of_degree(x3, d);
        if (!comp.is_zero() || (d == 0 && F.is_zero()))
            out.push_back(GradedComponent{d, std::move(comp)});
    }
    return out;
}

GradedCheckReport graded_casimir_checks(const ProblemInstance& instance,
                                        const PairingTable& pairs,
                                        const std::vector<unsigned>& l,
                                        unsigned samples_per_element, std::uint64_t seed) {
    if (instance.rank() != 2)
        throw std::invalid_argument("graded_casimir_checks requires rank 2");
    GradedCheckReport report;
    ChangeOfVariables cov(instance, pairs);
    const PolyModel& model = cov.model();
    RepSpace rep(instance);
    const WeightBasis& basis = rep.basis(l);
    SplitMix64 rng(seed);

    std::vector<std::size_t> x3;
    for (std::size_t f = 0; f < model.factors(); ++f) x3.push_back(model.var_index(3, f));

    auto fail = [&](bool& flag, const std::string& what) {
        flag = false;
        if (report.first_failure.empty()) report.first_failure = what;
    };

    std::vector<SeparationPoint> samples;
    for (unsigned s = 0; s < samples_per_element; ++s)
        samples.push_back(cov.random_diagonal_point(rng));

    const std::size_t n = instance.points();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            auto om0 = model.casimir_part_op(PolyModel::Part::kZero, i, j);
            auto om0t = model.casimir_part_op(PolyModel::Part::kZeroTilde, i, j);
            auto omUp = model.casimir_part_op(PolyModel::Part::kUp, i, j);
            auto omDown = model.casimir_part_op(PolyModel::Part::kDown, i, j);
            auto omega = model.casimir_op(i, j);

            for (const auto& index : basis.indices()) {
                MultiPoly F = model.monomial(index);
                unsigned d = F.degree_in(x3);
                std::string tag = "pair(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") " + index.label(rep.gens());

                MultiPoly p0 = om0(F), p0t = om0t(F), pu = omUp(F), pd = omDown(F);
                auto pure = [&](const MultiPoly& p, long expect) {
                    if (p.is_zero()) return true;
                    unsigned dd = p.degree_in(x3);
                    if (static_cast<long>(dd) != expect) return false;
                    return p.component_of_degree(x3, dd) == p;
                };
                if (!pure(p0, d)) fail(report.grading_ok, "Omega0 degree at " + tag);
                if (!pure(p0t, d)) fail(report.grading_ok, "Omega~0 degree at " + tag);
                if (!pure(pu, static_cast<long>(d) + 1))
                    fail(report.grading_ok, "Omega>0 degree at " + tag);
                if (!pure(pd, static_cast<long>(d) - 1))
                    fail(report.grading_ok, "Omega<0 degree at " + tag);

                if (!(p0 + p0t + pu + pd == omega(F)))
                    fail(report.parts_sum_ok, "graded parts do not sum to Omega at " + tag);

                if (d == 0) {
                    if (!p0t.is_zero())
                        fail(report.annihilation_ok, "Omega~0 nonzero on x3-free " + tag);
                    if (!pd.is_zero())
                        fail(report.annihilation_ok, "Omega<0 nonzero on x3-free " + tag);
                }

                if (!pd.is_zero()) {
                    MultiPoly tpd = cov.compose_with_change(pd);
                    for (std::size_t s = 0; s < samples.size(); ++s) {
                        if (!tpd.eval(cov.point_vector(samples[s])).is_zero())
                            fail(report.diagonal_vanishing_ok,
                                 "Omega<0 image nonzero on diagonal at " + tag);
                    }
                }
            }

            // Lemma on leading terms, on random mixed vectors.
            for (int trial = 0; trial < 3; ++trial) {
                MultiPoly F(model.vars());
                for (const auto& index : basis.indices())
                    F = F + model.monomial(index).scaled(Scalar(rng.rational(6, 4)));
                MultiPoly lhs = omega(F).component_of_degree(x3, 0);
                MultiPoly rhs = om0(F.component_of_degree(x3, 0));
                MultiPoly tl = cov.compose_with_change(lhs);
                MultiPoly tr = cov.compose_with_change(rhs);
                for (const auto& sp : samples) {
                    auto pv = cov.point_vector(sp);
                    if (!(tl.eval(pv) == tr.eval(pv)))
                        fail(report.leading_term_ok, "leading-term lemma fails on a sample");
                }
            }
        }
    }
    return report;
}

SeparationVerdict verify_separation_sl3(const ProblemInstance& instance,
                                        const PairingTable& pairs, const BetheCandidate& t,
                                        const EigenvalueVector& mu, unsigned samples,
                                        std::uint64_t seed) {
    if (instance.rank() != 2)
        throw std::invalid_argument("verify_separation_sl3 requires rank 2");
    ChangeOfVariables cov(instance, pairs);
    const PolyModel& model = cov.model();
    const std::size_t n = instance.points();
    SeparationVerdict verdict;

    std::vector<UniPoly> P = polys_from_candidate(t);
    Scalar norm(1);
    for (std::size_t s = 0; s < n; ++s) {
        Scalar v1 = P[0].eval(instance.z[s]);
        Scalar v2 = P[1].eval(instance.z[s]);
        if (v1.is_zero() || v2.is_zero())
            throw std::domain_error("verify_separation_sl3: P_i(z_s) = 0");
        norm *= v1 * v2;
    }

    // F0 as an x-polynomial: prod_k A_1(t^{(1)}_k) prod_m A_2(t^{(2)}_m) / norm,
    // A_c(tv) = sum_i x_c^{(i)} prod_{s != i} (tv - z_s).
    auto a_poly = [&](int color, const Scalar& tv) {
        MultiPoly acc(model.vars());
        for (std::size_t i = 0; i < n; ++i) {
            Scalar c(1);
            for (std::size_t s = 0; s < n; ++s)
                if (s != i) c *= tv - instance.z[s];
            acc = acc + MultiPoly::variable(model.vars(), model.var_index(color, i)).scaled(c);
        }
        return acc;
    };
    MultiPoly F0 = MultiPoly::constant(model.vars(), Scalar(1));
    for (const auto& tv : t.t[0]) F0 = F0 * a_poly(1, tv);
    for (const auto& tv : t.t[1]) F0 = F0 * a_poly(2, tv);
    F0 = F0.scaled(Scalar(1) / norm);

    // f = prod_j P1(y1_j) P2(y2_j) in (u, y) variables.
    MultiPoly f = MultiPoly::constant(cov.uy_vars(), Scalar(1));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        for (const auto& tv : t.t[0])
            f = f * (MultiPoly::constant(cov.uy_vars(), tv) -
                     MultiPoly::variable(cov.uy_vars(), cov.y_index(1, j)));
        for (const auto& tv : t.t[1])
            f = f * (MultiPoly::constant(cov.uy_vars(), tv) -
                     MultiPoly::variable(cov.uy_vars(), cov.y_index(2, j)));
    }
    MultiPoly u_prefactor = MultiPoly::variable(cov.uy_vars(), cov.u_index(1), instance.l[0]) *
                            MultiPoly::variable(cov.uy_vars(), cov.u_index(2), instance.l[1]);

    std::vector<MultiPoly> lhs_transported;
    for (std::size_t i = 0; i < n; ++i) {
        MultiPoly hf = model.gaudin0_op(i)(F0) - F0.scaled(mu.mu[i]);
        lhs_transported.push_back(cov.compose_with_change(hf));
    }

    SplitMix64 rng(seed);
    std::vector<SeparationPoint> pts;
    std::vector<MultiPoly> diffs;

    for (std::size_t j = 0; j + 1 < n; ++j) {
        std::size_t y1j = cov.y_index(1, j);
        std::size_t y2j = cov.y_index(2, j);

        MultiPoly lhs(cov.uy_vars());
        for (std::size_t i = 0; i < n; ++i)
            lhs = lhs + y_z_product(cov, instance, y1j, static_cast<long>(i)) *
                            lhs_transported[i];
        lhs = cov.restrict_to_diagonal(lhs);

        // separated operator, cleared by prod_i (y1_j - z_i):
        //   +f11 - f12 + f22 - A1 f1 - A2 f2 + sum (g_i - mu_i)/(y1_j - z_i) f
        MultiPoly full = y_z_product(cov, instance, y1j, -1);
        MultiPoly rhs = full * (f.derive(y1j).derive(y1j) - f.derive(y1j).derive(y2j) +
                                f.derive(y2j).derive(y2j));
        for (std::size_t i = 0; i < n; ++i) {
            MultiPoly w = y_z_product(cov, instance, y1j, static_cast<long>(i));
            rhs = rhs - (w * f.derive(y1j)).scaled(Scalar(pairs.weight_alpha[i][0]));
            rhs = rhs - (w * f.derive(y2j)).scaled(Scalar(pairs.weight_alpha[i][1]));
            Scalar g(0);
            for (std::size_t k = 0; k < n; ++k)
                if (k != i) g += Scalar(pairs.weight_weight[i][k]) /
                                 (instance.z[i] - instance.z[k]);
            rhs = rhs + (w * f).scaled(g - mu.mu[i]);
        }
        rhs = cov.restrict_to_diagonal(u_prefactor * rhs).scaled(Scalar(1) / norm);

        if (!(lhs == rhs)) {
            verdict.identity_ok = false;
            if (verdict.first_failure.empty())
                verdict.first_failure = "coefficient mismatch at j = " + std::to_string(j + 1);
        }
        MultiPoly diff = lhs - rhs;
        verdict.degree_bound = std::max(verdict.degree_bound,
                                        std::max(lhs.total_degree(), rhs.total_degree()));
        diffs.push_back(std::move(diff));
    }

    if (samples <= verdict.degree_bound)
        throw std::invalid_argument("verify_separation_sl3: sample count " +
                                    std::to_string(samples) + " does not exceed degree bound " +
                                    std::to_string(verdict.degree_bound));
    verdict.sample_count = samples;
    for (unsigned s = 0; s < samples; ++s) pts.push_back(cov.random_diagonal_point(rng));
    for (const auto& diff : diffs)
        for (std::size_t s = 0; s < pts.size(); ++s) {
            if (!diff.eval(cov.point_vector(pts[s])).is_zero()) {
                verdict.samples_ok = false;
                if (verdict.first_failure.empty())
                    verdict.first_failure = "sample " + std::to_string(s) + " disagrees";
            }
        }
    return verdict;
}

Scalar psi_term(const ProblemInstance& instance, const BetheCandidate& t,
                const std::vector<std::size_t>& k_tuple,
                const std::vector<std::size_t>& m_tuple, const SeparationPoint& point) {
    const std::size_t n = instance.points();
    Scalar acc(1);
    for (std::size_t a = 0; a < k_tuple.size(); ++a) {
        const Scalar& t1 = t.t[0][k_tuple[a]];
        const Scalar& t2 = t.t[1][m_tuple[a]];
        // cross-color difference oriented as in the omega chains,
        // 1/(t^{(2)} - t^{(1)}); the displayed form has it reversed
        Scalar d = t2 - t1;
        if (d.is_zero()) throw std::domain_error("psi_term: t^(1) and t^(2) roots coincide");
        Scalar factor = Scalar(1) / d;
        for (std::size_t j = 0; j + 1 < n; ++j) {
            Scalar d1 = t1 - point.y[0][j];
            Scalar d2 = t2 - point.y[1][j];
            if (d1.is_zero() || d2.is_zero())
                throw std::domain_error("psi_term: denominator (t - y) vanishes");
            factor *= (t1 - point.y[2][j]) / (d1 * d2);
        }
        for (std::size_t s = 0; s < n; ++s) factor *= t2 - instance.z[s];
        acc *= factor;
    }
    return acc;
}

namespace {

void ordered_tuples(std::size_t pool, std::size_t len, std::vector<std::size_t>& cur,
                    std::vector<bool>& used,
                    const std::function<void(const std::vector<std::size_t>&)>& emit) {
    if (cur.size() == len) {
        emit(cur);
        return;
    }
    for (std::size_t v = 0; v < pool; ++v) {
        if (used[v]) continue;
        used[v] = true;
        cur.push_back(v);
        ordered_tuples(pool, len, cur, used, emit);
        cur.pop_back();
        used[v] = false;
    }
}

}  // namespace

Scalar psi_separated_component(const ProblemInstance& instance, const BetheCandidate& t,
                               const SeparationPoint& point, unsigned d) {
    const std::size_t n = instance.points();
    const unsigned l1 = instance.l[0], l2 = instance.l[1];

    std::vector<UniPoly> P = polys_from_candidate(t);
    Scalar norm(1);
    for (std::size_t s = 0; s < n; ++s) {
        Scalar v = P[0].eval(instance.z[s]) * P[1].eval(instance.z[s]);
        if (v.is_zero()) throw std::domain_error("psi_separated: P_i(z_s) = 0");
        norm *= v;
    }
    Scalar psi0(1);
    for (unsigned e = 0; e < l1; ++e) psi0 *= point.u[0];
    for (unsigned e = 0; e < l2; ++e) psi0 *= point.u[1];
    for (std::size_t j = 0; j + 1 < n; ++j)
        psi0 *= P[0].eval(point.y[0][j]) * P[1].eval(point.y[1][j]);
    psi0 /= norm;

    if (d == 0) return psi0;
    if (d > std::min(l1, l2)) return Scalar(0);
    if (point.u[2].is_zero()) return Scalar(0);
    if (point.u[0].is_zero() || point.u[1].is_zero())
        throw std::domain_error("psi_separated: u1 u2 = 0 with a nonzero degree-d term");

    Scalar ratio = point.u[2] / (point.u[0] * point.u[1]);
    Scalar ratio_pow(1);
    for (unsigned e = 0; e < d; ++e) ratio_pow *= ratio;

    Scalar sum(0);
    std::vector<std::size_t> kt, mt;
    std::vector<bool> used_k(l1, false), used_m(l2, false);
    std::function<void(const std::vector<std::size_t>&)> inner =
        [&](const std::vector<std::size_t>& m_tuple) {
            sum += psi_term(instance, t, kt, m_tuple, point);
        };
    std::function<void(const std::vector<std::size_t>&)> outer =
        [&](const std::vector<std::size_t>& k_tuple) {
            kt = k_tuple;
            std::vector<std::size_t> cur;
            ordered_tuples(l2, d, cur, used_m, inner);
        };
    {
        std::vector<std::size_t> cur;
        ordered_tuples(l1, d, cur, used_k, outer);
    }
    return psi0 * ratio_pow * sum / Scalar(factorial(d));
}

Scalar psi_separated(const ProblemInstance& instance, const PairingTable& pairs,
                     const BetheCandidate& t, const SeparationPoint& point) {
    (void)pairs;
    Scalar acc(0);
    unsigned top = std::min(instance.l[0], instance.l[1]);
    for (unsigned d = 0; d <= top; ++d)
        acc += psi_separated_component(instance, t, point, d);
    return acc;
}

MultiPoly canonical_x_polynomial(const RepSpace& rep, const PolyModel& model,
                                 const std::vector<unsigned>& l, const BetheCandidate& t) {
    const WeightBasis& basis = rep.basis(l);
    MultiPoly acc(model.vars());
    for (std::size_t pos = 0; pos < basis.dim(); ++pos) {
        Scalar c = omega_coefficient(basis.indices()[pos], l, rep.gens(), t,
                                     rep.instance().z);
        if (!c.is_zero()) acc = acc + model.monomial(basis.indices()[pos]).scaled(c);
    }
    return acc;
}

}  // namespace gaudin
