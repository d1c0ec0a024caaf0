#include "gaudin/forms.hpp"

#include <sstream>
#include <stdexcept>

namespace gaudin {

namespace {

UniPoly monic_z_poly(const ProblemInstance& instance) {
    return poly_from_roots(instance.z, RootConvention::kMonic);
}

// sum_s c_s prod_{k != s} (x - z_k)
UniPoly cleared_pole_sum(const std::vector<Scalar>& z, const std::vector<Rational>& c) {
    UniPoly acc;
    for (std::size_t s = 0; s < z.size(); ++s) {
        if (c[s] == 0) continue;
        UniPoly prod = UniPoly::constant(Scalar(c[s]));
        for (std::size_t k = 0; k < z.size(); ++k) {
            if (k == s) continue;
            prod = prod * UniPoly({-z[k], Scalar(1)});
        }
        acc = acc + prod;
    }
    return acc;
}

Rational g_coeff(const PairingTable& pairs, const ProblemInstance& instance, std::size_t s) {
    // exact only; numeric z not supported on this path
    Rational acc(0);
    for (std::size_t k = 0; k < instance.points(); ++k) {
        if (k == s) continue;
        acc += pairs.weight_weight[s][k] /
               (instance.z[s].rat() - instance.z[k].rat());
    }
    return acc;
}

Scalar g_scalar(const PairingTable& pairs, const ProblemInstance& instance, std::size_t s) {
    Scalar acc(0);
    for (std::size_t k = 0; k < instance.points(); ++k) {
        if (k == s) continue;
        acc += Scalar(pairs.weight_weight[s][k]) / (instance.z[s] - instance.z[k]);
    }
    return acc;
}

}  // namespace

std::vector<UniPoly> polys_from_candidate(const BetheCandidate& t) {
    std::vector<UniPoly> out;
    for (const auto& col : t.t) out.push_back(poly_from_roots(col, RootConvention::kPaper));
    return out;
}

StieltjesData stieltjes_reduce(const ProblemInstance& instance, const PairingTable& pairs,
                               const std::vector<UniPoly>& P, double tolerance) {
    const int r = instance.rank();
    if (static_cast<int>(P.size()) != r)
        throw std::invalid_argument("stieltjes_reduce: one polynomial per color required");
    for (const auto& p : P)
        if (p.is_zero()) throw std::invalid_argument("stieltjes_reduce: zero polynomial");

    StieltjesData out;
    out.all_divisible = true;
    UniPoly Fz = monic_z_poly(instance);

    for (int i = 0; i < r; ++i) {
        StieltjesColor color;
        color.P = P[i];

        color.logT.poles = instance.z;
        color.logT.residues.clear();
        for (std::size_t s = 0; s < instance.points(); ++s)
            color.logT.residues.push_back(Scalar(pairs.coroot[s][i]));

        // F_i = prod(x - z_s) * prod_{j: a_ij < 0} P_j
        color.F = Fz;
        for (int j = 0; j < r; ++j)
            if (j != i && instance.cartan.a(i, j) < 0) color.F = color.F * P[j];

        // G_i = F_i T_i'/T_i - sum_{j != i} a_ij F_i P_j'/P_j
        std::vector<Rational> m_col;
        for (std::size_t s = 0; s < instance.points(); ++s) m_col.push_back(pairs.coroot[s][i]);
        UniPoly g = cleared_pole_sum(instance.z, m_col);
        for (int j = 0; j < r; ++j)
            if (j != i && instance.cartan.a(i, j) < 0) g = g * P[j];
        for (int j = 0; j < r; ++j) {
            if (j == i || instance.cartan.a(i, j) >= 0) continue;
            UniPoly term = Fz * P[j].derivative();
            for (int k = 0; k < r; ++k)
                if (k != i && k != j && instance.cartan.a(i, k) < 0) term = term * P[k];
            g = g - term.scaled(Scalar(Rational(instance.cartan.a(i, j))));
        }
        color.G = g;

        UniPoly lhs = color.F * P[i].derivative().derivative() - color.G * P[i].derivative();
        auto div = exact_divide(lhs, P[i], tolerance);
        color.divisible = div.exact;
        if (div.exact) {
            color.H = div.quotient;
            color.degree_ok = color.H.degree() <= color.F.degree() - 2;
        } else {
            color.remainder = div.remainder;
            out.all_divisible = false;
            if (out.failure.empty())
                out.failure = "color " + std::to_string(i + 1) +
                              ": F P'' - G P' not divisible by P (remainder degree " +
                              std::to_string(div.remainder.degree()) + ")";
        }
        out.colors.push_back(std::move(color));
    }
    return out;
}

EigenvalueVector mu_from_H(const ProblemInstance& instance, const PairingTable& pairs,
                           const UniPoly& H) {
    if (instance.rank() != 1)
        throw std::invalid_argument("mu_from_H is the rank-1 path");
    const long n = static_cast<long>(instance.points());
    if (H.degree() > n - 2)
        throw std::invalid_argument("mu_from_H: deg H must be <= n-2");
    SimplePoleSum pf = partial_fractions_simple(H, instance.z);
    EigenvalueVector mu;
    for (std::size_t s = 0; s < instance.points(); ++s)
        mu.mu.push_back(pf.residues[s] + g_scalar(pairs, instance, s));
    return mu;
}

NewFormResidual new_form_residual(const ProblemInstance& instance, const PairingTable& pairs,
                                  const std::vector<UniPoly>& P, const EigenvalueVector& mu) {
    const int r = instance.rank();
    const std::size_t n = instance.points();
    if (static_cast<int>(P.size()) != r)
        throw std::invalid_argument("new_form_residual: one polynomial per color required");
    if (mu.mu.size() != n) throw std::invalid_argument("new_form_residual: mu size mismatch");
    {
        Scalar s = EigenvalueVector{mu.mu}.sum();
        if (s.is_exact() && !s.is_zero())
            throw std::invalid_argument("new_form_residual: mu does not sum to zero");
    }

    UniPoly Fz = monic_z_poly(instance);
    auto prod_P_except = [&](int skip1, int skip2) {
        UniPoly acc = UniPoly::constant(Scalar(1));
        for (int k = 0; k < r; ++k)
            if (k != skip1 && k != skip2) acc = acc * P[k];
        return acc;
    };

    UniPoly res;
    for (int i = 0; i < r; ++i) {
        // (a_i,a_i)/2 * P_i'' * F * prod_{k != i} P_k
        Scalar di(pairs.alpha_alpha[i][i] / 2);
        res = res + (P[i].derivative().derivative() * Fz * prod_P_except(i, -1)).scaled(di);
    }
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            if (pairs.alpha_alpha[i][j] == 0) continue;
            res = res + (P[i].derivative() * P[j].derivative() * Fz * prod_P_except(i, j))
                            .scaled(Scalar(pairs.alpha_alpha[i][j]));
        }
    for (int i = 0; i < r; ++i) {
        // (a_i,a_i)/2 * T_i'/T_i has cleared numerator sum_s (L_s,a_i) prod_{k != s}(x-z_k)
        std::vector<Rational> wa;
        for (std::size_t s = 0; s < n; ++s) wa.push_back(pairs.weight_alpha[s][i]);
        UniPoly cleared = cleared_pole_sum(instance.z, wa);
        res = res - cleared * P[i].derivative() * prod_P_except(i, -1);
    }
    // + sum_s (g_s - mu_s) prod_{k != s}(x - z_k) * prod P
    UniPoly allP = prod_P_except(-1, -1);
    for (std::size_t s = 0; s < n; ++s) {
        Scalar c = g_scalar(pairs, instance, s) - mu.mu[s];
        if (c.is_zero()) continue;
        UniPoly prod = UniPoly::constant(c);
        for (std::size_t k = 0; k < n; ++k) {
            if (k == s) continue;
            prod = prod * UniPoly({-instance.z[k], Scalar(1)});
        }
        res = res + prod * allP;
    }

    return NewFormResidual{std::move(res), mu};
}

MuSolveResult mu_solve(const ProblemInstance& instance, const PairingTable& pairs,
                       const std::vector<UniPoly>& P, double tolerance) {
    MuSolveResult out;
    const std::size_t n = instance.points();
    for (int i = 0; i < instance.rank(); ++i)
        for (std::size_t s = 0; s < n; ++s)
            if (P[i].eval(instance.z[s]).is_zero()) {
                out.failure = "P_" + std::to_string(i + 1) + " vanishes at z_" +
                              std::to_string(s + 1);
                return out;
            }

    // Residual with mu = 0, and the mu-columns Q_s = prod_{k != s}(x-z_k) prod P.
    EigenvalueVector zero_mu;
    zero_mu.mu.assign(n, Scalar(0));
    UniPoly base = new_form_residual(instance, pairs, P, zero_mu).residual;
    UniPoly allP = UniPoly::constant(Scalar(1));
    for (const auto& p : P) allP = allP * p;
    std::vector<UniPoly> cols;
    for (std::size_t s = 0; s < n; ++s) {
        UniPoly prod = allP;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == s) continue;
            prod = prod * UniPoly({-instance.z[k], Scalar(1)});
        }
        cols.push_back(prod);
    }

    long deg = base.degree();
    for (const auto& c : cols) deg = std::max(deg, c.degree());
    bool exact = base.all_exact();
    for (const auto& c : cols) exact = exact && c.all_exact();

    if (exact) {
        // rows: coefficient identities of (base - sum_s mu_s Q_s = 0), plus sum mu = 0
        Matrix a = matrix_zero(static_cast<std::size_t>(deg + 1) + 1, n);
        Vector b(static_cast<std::size_t>(deg + 1) + 1, Scalar(0));
        for (long k = 0; k <= deg; ++k) {
            for (std::size_t s = 0; s < n; ++s)
                a[k][s] = cols[s].coeff(static_cast<std::size_t>(k));
            b[k] = base.coeff(static_cast<std::size_t>(k));
        }
        for (std::size_t s = 0; s < n; ++s) a[deg + 1][s] = Scalar(1);
        auto sol = solve_exact_system(std::move(a), std::move(b));
        if (!sol.consistent) {
            out.failure = "inconsistent linear system: the P's are not a Bethe solution";
            return out;
        }
        out.success = true;
        out.mu.mu = sol.solution;
        return out;
    }

    // Numeric track: mu_s = g_s - sum_i (L_s,a_i) (P_i'/P_i)(z_s), then verify.
    EigenvalueVector mu;
    for (std::size_t s = 0; s < n; ++s) {
        Scalar acc = g_scalar(pairs, instance, s);
        for (int i = 0; i < instance.rank(); ++i) {
            if (pairs.weight_alpha[s][i] == 0) continue;
            acc -= Scalar(pairs.weight_alpha[s][i]) * P[i].derivative().eval(instance.z[s]) /
                   P[i].eval(instance.z[s]);
        }
        mu.mu.push_back(acc);
    }
    UniPoly res = new_form_residual(instance, pairs, P, mu).residual;
    if (res.max_abs_coeff() <= tolerance) {
        out.success = true;
        out.mu = mu;
    } else {
        out.failure = "residual above tolerance: the P's are not a Bethe solution";
    }
    return out;
}

bool OperData::ok() const {
    if (!dtp1_zero || !regular_at_roots || !factors_match_expansion) return false;
    for (const auto& ic : indicial)
        if (!ic.regular || !ic.exponents_match) return false;
    return true;
}

namespace {

// Multiplicity of root a with a relative tolerance for the numeric track.
unsigned root_multiplicity_tol(const UniPoly& p, const Scalar& a, double tol) {
    if (p.is_zero()) return 0;
    double scale = p.max_abs_coeff();
    unsigned m = 0;
    UniPoly cur = p;
    UniPoly factor({-a, Scalar(1)});
    while (!cur.is_zero()) {
        auto [q, rem] = cur.divrem(factor);
        bool zero = cur.all_exact() ? rem.is_zero() : rem.max_abs_coeff() <= tol * scale;
        if (!zero) return m;
        ++m;
        cur = std::move(q);
    }
    return m;
}

std::optional<Scalar> shifted_limit_tol(const RatFunc& f, const Scalar& a, unsigned k,
                                        double tol) {
    if (f.num().all_exact() && f.den().all_exact()) return f.shifted_limit(a, k);
    if (f.is_zero()) return Scalar(0);
    unsigned ord_den = root_multiplicity_tol(f.den(), a, tol);
    unsigned ord_num = root_multiplicity_tol(f.num(), a, tol);
    long net = static_cast<long>(k) + static_cast<long>(ord_num) - static_cast<long>(ord_den);
    if (net > 0) return Scalar(0);
    if (net < 0) return std::nullopt;
    UniPoly factor({-a, Scalar(1)});
    UniPoly n0 = f.num();
    for (unsigned i = 0; i < ord_num; ++i) n0 = n0.divrem(factor).first;
    UniPoly d0 = f.den();
    for (unsigned i = 0; i < ord_den; ++i) d0 = d0.divrem(factor).first;
    return n0.eval(a) / d0.eval(a);
}

// Indicial cubic in rho at a finite point (A, B, C from the shifted limits).
UniPoly indicial_cubic(const Scalar& A, const Scalar& B, const Scalar& C) {
    // rho(rho-1)(rho-2) + A rho(rho-1) + B rho + C
    UniPoly rho = UniPoly::x();
    UniPoly p = rho * (rho - UniPoly::constant(Scalar(1))) *
                (rho - UniPoly::constant(Scalar(2)));
    p = p + (rho * (rho - UniPoly::constant(Scalar(1)))).scaled(A);
    p = p + rho.scaled(B);
    p = p + UniPoly::constant(C);
    return p;
}

UniPoly indicial_cubic_at_infinity(const Scalar& A, const Scalar& B, const Scalar& C) {
    // (-rho)(-rho-1)(-rho-2) + A (-rho)(-rho-1) + B (-rho) + C, negated to be monic
    UniPoly rho = UniPoly::x();
    UniPoly mr = -rho;
    UniPoly p = mr * (mr - UniPoly::constant(Scalar(1))) * (mr - UniPoly::constant(Scalar(2)));
    p = p + (mr * (mr - UniPoly::constant(Scalar(1)))).scaled(A);
    p = p + mr.scaled(B);
    p = p + UniPoly::constant(C);
    return -p;
}

bool poly_close(const UniPoly& a, const UniPoly& b, double tol) {
    UniPoly d = a - b;
    if (a.all_exact() && b.all_exact()) return d.is_zero();
    return d.max_abs_coeff() <= tol;
}

}  // namespace

OperData oper_check(const ProblemInstance& instance, const PairingTable& pairs,
                    const BetheCandidate& t, double tolerance) {
    if (instance.rank() != 2)
        throw std::invalid_argument("oper_check is defined for rank 2");
    OperData out;
    const std::size_t n = instance.points();

    std::vector<UniPoly> P = polys_from_candidate(t);
    UniPoly Fz = monic_z_poly(instance);

    auto logT = [&](int color) {
        std::vector<Rational> wa;
        for (std::size_t s = 0; s < n; ++s) wa.push_back(pairs.weight_alpha[s][color]);
        return RatFunc(cleared_pole_sum(instance.z, wa), Fz);
    };
    auto logP = [&](int color) { return RatFunc(P[color].derivative(), P[color]); };

    RatFunc c_right = logP(0);                          // ln'(P1)
    RatFunc b_mid = logP(1) + logT(0) - logP(0);        // ln'(P2 T1 / P1)
    RatFunc a_left = logT(0) + logT(1) - logP(1);       // ln'(T1 T2 / P2)
    out.factor_logs = {a_left, b_mid, c_right};

    // Compose (d - a)(d - b)(d - c); coefficients c_k of u^{(k)}.
    std::vector<RatFunc> coeff{-c_right, RatFunc::constant(Scalar(1))};
    for (const RatFunc& f : {b_mid, a_left}) {
        std::vector<RatFunc> next(coeff.size() + 1, RatFunc());
        for (std::size_t k = 0; k < coeff.size(); ++k) {
            next[k + 1] = next[k + 1] + coeff[k];
            next[k] = next[k] + coeff[k].derivative() - f * coeff[k];
        }
        coeff = std::move(next);
    }
    out.coefficients = coeff;

    // D_t P1 = 0 (identically, by the factored form).
    RatFunc dtp1;
    UniPoly der = P[0];
    for (std::size_t k = 0; k < coeff.size(); ++k) {
        dtp1 = dtp1 + coeff[k] * RatFunc::from_poly(der);
        der = der.derivative();
    }
    out.dtp1_zero = dtp1.num().all_exact() ? dtp1.is_zero()
                                           : dtp1.num().max_abs_coeff() <=
                                                 tolerance * std::max(1.0, dtp1.den().max_abs_coeff());

    // Factored and expanded forms agree on test polynomials.
    out.factors_match_expansion = true;
    for (unsigned k = 0; k <= 3 && out.factors_match_expansion; ++k) {
        RatFunc u = RatFunc::from_poly(UniPoly::monomial(Scalar(1), k));
        RatFunc via_factors = u;
        for (const RatFunc& f : {c_right, b_mid, a_left}) {
            via_factors = via_factors.derivative() - f * via_factors;
        }
        RatFunc via_coeffs;
        RatFunc cur = u;
        for (std::size_t j = 0; j < coeff.size(); ++j) {
            via_coeffs = via_coeffs + coeff[j] * cur;
            cur = cur.derivative();
        }
        RatFunc diff = via_factors - via_coeffs;
        bool zero = diff.num().all_exact()
                        ? diff.is_zero()
                        : diff.num().max_abs_coeff() <=
                              tolerance * std::max(1.0, diff.den().max_abs_coeff());
        out.factors_match_expansion = zero;
    }

    // Regularity at the roots of P1, P2: no surviving poles there.
    out.regular_at_roots = true;
    for (const auto& col : t.t)
        for (const auto& root : col)
            for (std::size_t k = 0; k + 1 < coeff.size(); ++k) {
                const RatFunc& f = coeff[k];
                unsigned ord = f.num().all_exact() && f.den().all_exact()
                                   ? f.pole_order(root)
                                   : root_multiplicity_tol(f.den(), root, tolerance) -
                                         std::min(root_multiplicity_tol(f.den(), root, tolerance),
                                                  root_multiplicity_tol(f.num(), root, tolerance));
                if (ord > 0) out.regular_at_roots = false;
            }

    // Indicial exponents at each z_s and at infinity.
    Rational l1(static_cast<long>(instance.l[0])), l2(static_cast<long>(instance.l[1]));
    for (std::size_t s = 0; s <= n; ++s) {
        IndicialCheck ic;
        bool at_inf = s == n;
        std::optional<Scalar> A, B, C;
        if (at_inf) {
            ic.point = "inf";
            A = coeff[2].shifted_limit_at_infinity(1);
            B = coeff[1].shifted_limit_at_infinity(2);
            C = coeff[0].shifted_limit_at_infinity(3);
            Rational wa1(0), wa2(0);
            for (std::size_t q = 0; q < n; ++q) {
                wa1 += pairs.weight_alpha[q][0];
                wa2 += pairs.weight_alpha[q][1];
            }
            // (L_inf, a_c) with L_inf = sum L_s - l1 a1 - l2 a2
            Rational la1 = wa1 - l1 * pairs.alpha_alpha[0][0] - l2 * pairs.alpha_alpha[1][0];
            Rational la2 = wa2 - l1 * pairs.alpha_alpha[0][1] - l2 * pairs.alpha_alpha[1][1];
            ic.expected = {Scalar(-l1), Scalar(-l1 - la1 - 1), Scalar(-l1 - la1 - la2 - 2)};
        } else {
            ic.point = "z_" + std::to_string(s + 1);
            A = shifted_limit_tol(coeff[2], instance.z[s], 1, tolerance);
            B = shifted_limit_tol(coeff[1], instance.z[s], 2, tolerance);
            C = shifted_limit_tol(coeff[0], instance.z[s], 3, tolerance);
            Rational a1 = pairs.weight_alpha[s][0];
            Rational a12 = pairs.weight_alpha[s][0] + pairs.weight_alpha[s][1];
            ic.expected = {Scalar(0), Scalar(a1 + 1), Scalar(a12 + 2)};
        }
        ic.regular = A.has_value() && B.has_value() && C.has_value();
        if (ic.regular) {
            UniPoly cubic = at_inf ? indicial_cubic_at_infinity(*A, *B, *C)
                                   : indicial_cubic(*A, *B, *C);
            UniPoly expected = poly_from_roots(ic.expected, RootConvention::kMonic);
            ic.exponents_match = poly_close(cubic, expected, tolerance);
        }
        out.indicial.push_back(std::move(ic));
    }
    return out;
}

FormsReport forms_report(const ProblemInstance& instance, const PairingTable& pairs,
                         const std::optional<BetheCandidate>& t,
                         const std::optional<std::vector<UniPoly>>& P_opt,
                         const std::optional<EigenvalueVector>& mu_opt, double tolerance) {
    FormsReport report;
    std::optional<std::vector<UniPoly>> P = P_opt;
    if (!P && t) P = polys_from_candidate(*t);
    if (!P) throw std::invalid_argument("forms_report needs a candidate or a P list");

    auto push = [&](FormCheck c) {
        if (c.applicable && !c.pass) report.all_pass = false;
        report.checks.push_back(std::move(c));
    };

    if (t) {
        FormCheck c;
        c.name = "direct (critical equations)";
        c.applicable = true;
        try {
            ResidualVector res = bae_residual(instance, pairs, *t);
            c.residual = res.max_norm();
            c.pass = c.residual <= tolerance;
            c.detail = "gradient convention; the BAE display is the negative";
            if (!c.pass) c.residual_poly = residual_report(res);
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        push(std::move(c));
    }

    StieltjesData st = stieltjes_reduce(instance, pairs, *P, tolerance);
    {
        FormCheck c;
        c.name = "stieltjes divisibility";
        c.applicable = true;
        c.pass = st.all_divisible;
        double rem = 0.0;
        for (const auto& col : st.colors) {
            if (!col.divisible) {
                rem = std::max(rem, col.remainder.max_abs_coeff());
                if (c.residual_poly.empty()) c.residual_poly = col.remainder.to_string();
            } else if (!col.degree_ok) {
                c.pass = false;
            }
        }
        c.residual = rem;
        c.detail = st.all_divisible ? "H_i computed, degree bounds hold" : st.failure;
        push(std::move(c));
    }

    MuSolveResult ms = mu_solve(instance, pairs, *P, tolerance);
    std::optional<EigenvalueVector> mu = mu_opt;
    if (!mu && ms.success) mu = ms.mu;
    if (!mu && t) {
        try {
            mu = eigenvalues_from_t(instance, pairs, *t);
        } catch (const std::exception&) {
        }
    }
    report.mu = mu;

    {
        FormCheck c;
        c.name = "new form (single equation)";
        c.applicable = true;
        if (mu) {
            Scalar total = mu->sum();
            bool balanced = total.is_exact() ? total.is_zero()
                                             : total.abs_double() <= tolerance;
            if (balanced) {
                UniPoly res = new_form_residual(instance, pairs, *P, *mu).residual;
                c.residual = res.max_abs_coeff();
                c.pass = res.all_exact() ? res.is_zero() : c.residual <= tolerance;
                c.detail = ms.success ? "mu from mu_solve" : "mu supplied/derived";
                if (!c.pass) c.residual_poly = res.to_string();
            } else {
                c.pass = false;
                c.detail = "derived mu does not sum to zero (not a critical point)";
            }
        } else {
            c.pass = false;
            c.detail = ms.failure;
        }
        push(std::move(c));
    }

    if (instance.rank() == 2 && t) {
        FormCheck c;
        c.name = "oper (third-order operator)";
        c.applicable = true;
        try {
            OperData od = oper_check(instance, pairs, *t, tolerance);
            c.pass = od.ok();
            std::ostringstream os;
            os << "DtP1=" << (od.dtp1_zero ? "0" : "nonzero")
               << ", regular=" << (od.regular_at_roots ? "yes" : "no") << ", exponents=";
            bool all = true;
            for (const auto& ic : od.indicial) all = all && ic.regular && ic.exponents_match;
            os << (all ? "match" : "mismatch");
            c.detail = os.str();
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = e.what();
        }
        push(std::move(c));
    }

    return report;
}

}  // namespace gaudin
