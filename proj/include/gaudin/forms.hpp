#pragma once

#include <optional>
#include <string>

#include "gaudin/master.hpp"
#include "gaudin/unipoly.hpp"

namespace gaudin {

// One color of the Stieltjes divisibility form: F_i P_i'' - G_i P_i' must
// be divisible by P_i, with quotient H_i of degree <= deg F_i - 2.
struct StieltjesColor {
    UniPoly P;  // paper convention prod (t_j - x)
    UniPoly F;
    UniPoly G;
    SimplePoleSum logT;  // T_i'/T_i as a simple pole sum over the z's
    bool divisible = false;
    UniPoly H;          // (F P'' - G P') / P when divisible
    UniPoly remainder;  // the nonzero remainder otherwise
    bool degree_ok = false;
};

struct StieltjesData {
    std::vector<StieltjesColor> colors;
    bool all_divisible = false;
    std::string failure;  // names the failing color when not divisible
};

std::vector<UniPoly> polys_from_candidate(const BetheCandidate& t);

StieltjesData stieltjes_reduce(const ProblemInstance& instance, const PairingTable& pairs,
                               const std::vector<UniPoly>& P, double tolerance = 0.0);

// Rank-1 path: partial fractions of H/F give c_s; mu_s = c_s + g_s with
// g_s = sum_{k != s} (L_s,L_k)/(z_s - z_k).
EigenvalueVector mu_from_H(const ProblemInstance& instance, const PairingTable& pairs,
                           const UniPoly& H);

struct NewFormResidual {
    UniPoly residual;  // the cleared polynomial; identically zero iff the form holds
    EigenvalueVector mu;
};

// Cleared residual of the Kac-Moody single-equation form:
//   [ sum_i (a_i,a_i)/2 P_i''/P_i + sum_{i<j} (a_i,a_j) P_i'P_j'/(P_iP_j)
//     - sum_i (a_i,a_i)/2 T_i'P_i'/(T_iP_i) + sum_s (g_s - mu_s)/(x-z_s) ]
//   * F * prod_i P_i.
NewFormResidual new_form_residual(const ProblemInstance& instance, const PairingTable& pairs,
                                  const std::vector<UniPoly>& P, const EigenvalueVector& mu);

struct MuSolveResult {
    bool success = false;
    EigenvalueVector mu;
    std::string failure;
};

// Recovers mu from the P's alone: the cleared residual is affine in mu;
// solve the exact linear system (with sum mu = 0) and verify. Requires
// P_i(z_s) != 0 for all i, s.
MuSolveResult mu_solve(const ProblemInstance& instance, const PairingTable& pairs,
                       const std::vector<UniPoly>& P, double tolerance = 0.0);

struct IndicialCheck {
    std::string point;             // "z_s" or "inf"
    bool regular = false;          // limits exist (regular singular point)
    bool exponents_match = false;
    std::vector<Scalar> expected;
};

struct OperData {
    // log-derivative data of the three first-order factors, left to right
    std::vector<RatFunc> factor_logs;
    std::vector<RatFunc> coefficients;  // c_0..c_3 with c_3 = 1
    bool dtp1_zero = false;
    bool regular_at_roots = false;  // no poles survive at the roots of P_1, P_2
    bool factors_match_expansion = false;
    std::vector<IndicialCheck> indicial;
    bool ok() const;
};

// sl3 only (rank 2); exact on rational candidates, tolerance-based otherwise.
OperData oper_check(const ProblemInstance& instance, const PairingTable& pairs,
                    const BetheCandidate& t, double tolerance = 0.0);

struct FormCheck {
    std::string name;
    bool applicable = false;
    bool pass = false;
    double residual = 0.0;
    std::string detail;
    std::string residual_poly;  // cleared residual polynomial, when meaningful
};

struct FormsReport {
    std::vector<FormCheck> checks;
    std::optional<EigenvalueVector> mu;
    bool all_pass = true;
};

// Evaluates every applicable form on a candidate (or on the P's alone) and
// aggregates pass/fail per form. Failures are data, not errors.
FormsReport forms_report(const ProblemInstance& instance, const PairingTable& pairs,
                         const std::optional<BetheCandidate>& t,
                         const std::optional<std::vector<UniPoly>>& P_opt,
                         const std::optional<EigenvalueVector>& mu_opt,
                         double tolerance = 0.0);

}  // namespace gaudin
