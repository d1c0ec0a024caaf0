#pragma once

#include <array>

#include "gaudin/master.hpp"
#include "gaudin/rep.hpp"

namespace gaudin {

// The combinatorial data behind one omega_I coefficient: the tuple set
// S(I), its color slices S_i(I), and the size of the bijection family B(I).
struct AdmissibleData {
    // (j, a, b, q): factor j, generator e_{a,b}, copy q; all 1-based.
    std::vector<std::array<int, 4>> s_tuples;
    std::vector<std::vector<std::size_t>> per_color;  // indices into s_tuples
    Rational bijection_count;                         // l_1! ... l_r!
};

AdmissibleData enumerate_admissible(const PBWIndex& index, const std::vector<unsigned>& l,
                                    const GeneratorList& gens);

// omega_I(t, z): 1/prod (i^j_{a,b})! * sum over B(I) of prod omega_{s,beta}.
// Throws std::domain_error naming the vanishing factor on poles.
Scalar omega_coefficient(const PBWIndex& index, const std::vector<unsigned>& l,
                         const GeneratorList& gens, const BetheCandidate& t,
                         const std::vector<Scalar>& z);

// sum_I omega_I F_I v in M_Lambda[l].
TensorVector canonical_vector(const RepSpace& rep, const std::vector<unsigned>& l,
                              const BetheCandidate& t);

}  // namespace gaudin
