#pragma once

#include <string>
#include <vector>

#include "gaudin/cartan.hpp"

namespace gaudin {

// Bethe variables grouped by color: t[i][j] = t^{(i+1)}_{j+1}.
struct BetheCandidate {
    std::vector<std::vector<Scalar>> t;

    static BetheCandidate empty(const std::vector<unsigned>& l) {
        BetheCandidate c;
        for (unsigned li : l) c.t.emplace_back(li, Scalar(0));
        return c;
    }
    std::size_t total() const {
        std::size_t n = 0;
        for (const auto& col : t) n += col.size();
        return n;
    }
    std::vector<Scalar> flattened() const;
    bool is_exact() const;
};

// Left sides of the critical-point system, one entry per t-coordinate,
// in the gradient convention d/dt log Phi.
struct ResidualVector {
    std::vector<std::vector<Scalar>> values;
    double max_norm() const;
};

struct EigenvalueVector {
    std::vector<Scalar> mu;
    Scalar sum() const;
};

// Critical-point residuals (gradient convention; the sl2/sl3 BAE displays
// are the negatives). Throws std::domain_error on t = z or illegal
// coincidences among t's (only where the corresponding pairing is nonzero).
ResidualVector bae_residual(const ProblemInstance& instance, const PairingTable& pairs,
                            const BetheCandidate& t);

// Same values assembled by walking the factor list of the master function
// and differentiating each logarithm; an independent code path used to
// cross-check bae_residual.
ResidualVector bae_residual_via_master(const ProblemInstance& instance,
                                       const PairingTable& pairs, const BetheCandidate& t);

// mu_s = sum_{k != s} (L_s,L_k)/(z_s - z_k) + sum_{i,j} (L_s,a_i)/(t_j^{(i)} - z_s),
// the z_s-derivative of log Phi.
EigenvalueVector eigenvalues_from_t(const ProblemInstance& instance, const PairingTable& pairs,
                                    const BetheCandidate& t);

// Same via the master-function factor list.
EigenvalueVector eigenvalues_via_master(const ProblemInstance& instance,
                                        const PairingTable& pairs, const BetheCandidate& t);

std::string residual_report(const ResidualVector& r);

}  // namespace gaudin
