#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gaudin/cartan.hpp"
#include "gaudin/linalg.hpp"

namespace gaudin {

// Lowering generators e_{a,b}, r+1 >= a > b >= 1, in the PBW order
// e_{a,b} < e_{a',b'} iff b < b' or (b = b' and a < a').
struct GeneratorList {
    int rank = 0;
    std::vector<std::pair<int, int>> gens;  // (a, b), 1-based

    static GeneratorList for_rank(int rank);
    std::size_t size() const { return gens.size(); }
    long index_of(int a, int b) const;
    // Colors b..a-1 get one unit each.
    std::vector<unsigned> color_vector(std::size_t gen_index) const;
};

// Exponents of the ordered PBW monomial per tensor factor, indexed by the
// generator list. Satisfies the color-sum constraint of its weight space.
struct PBWIndex {
    std::vector<std::vector<unsigned>> exps;  // [factor][generator]

    friend bool operator<(const PBWIndex& a, const PBWIndex& b) { return a.exps < b.exps; }
    friend bool operator==(const PBWIndex& a, const PBWIndex& b) { return a.exps == b.exps; }
    std::string label(const GeneratorList& gens) const;
};

// Enumerated basis of M_Lambda[l]; deterministic lexicographic order.
class WeightBasis {
  public:
    WeightBasis(const GeneratorList& gens, std::size_t factors, std::vector<unsigned> l);

    const std::vector<PBWIndex>& indices() const { return indices_; }
    std::size_t dim() const { return indices_.size(); }
    const std::vector<unsigned>& l() const { return l_; }
    long position_of(const PBWIndex& index) const;

  private:
    std::vector<unsigned> l_;
    std::vector<PBWIndex> indices_;
    std::map<PBWIndex, std::size_t> positions_;
};

// Element of M_Lambda[l] as a sparse map from basis positions to scalars.
struct TensorVector {
    std::vector<unsigned> l;
    std::map<std::size_t, Scalar> coeffs;

    double max_abs() const;
    bool is_exact() const;
    TensorVector scaled(const Scalar& s) const;
};

// Straightens a word of gl generators applied to a highest-weight vector
// into the ordered PBW basis. `coroot_pairings` holds <Lambda, alpha_i^v>.
// Words may contain raising, diagonal, and lowering letters.
std::map<std::vector<unsigned>, Rational> straighten_word(
    const std::vector<std::pair<int, int>>& word,
    const std::vector<Rational>& coroot_pairings, const GeneratorList& gens);

// Matrix block of one linear operator between two enumerated weight bases.
struct LinearOperator {
    std::vector<unsigned> source_l;
    std::vector<unsigned> target_l;
    Matrix matrix;  // target_dim x source_dim
};

// The four sl3 graded Casimir parts plus their sum.
struct CasimirOperator {
    LinearOperator whole;
    std::optional<LinearOperator> part0;        // Omega_0
    std::optional<LinearOperator> part0_tilde;  // Omega~_0
    std::optional<LinearOperator> part_up;      // Omega_{>0} (degree +1, stored on the same basis)
    std::optional<LinearOperator> part_down;    // Omega_{<0}
};

struct GaudinOperator {
    int point = 0;  // 1-based marked-point index
    LinearOperator op;
};

// Weight-space representation engine for sl_{r+1} tensor products of Verma
// modules, built on the straightening engine; sl2/sl3 also carry the
// explicit polynomial model as an independent construction.
class RepSpace {
  public:
    explicit RepSpace(ProblemInstance instance);

    const ProblemInstance& instance() const { return instance_; }
    const PairingTable& pairs() const { return pairs_; }
    const GeneratorList& gens() const { return gens_; }
    const WeightBasis& basis(const std::vector<unsigned>& l) const;

    // Weight shift of e_{a,b} as an operator; nullopt when the target
    // weight space does not exist (operator is zero).
    std::optional<std::vector<unsigned>> shifted_l(int a, int b,
                                                   const std::vector<unsigned>& l) const;

    // e_{a,b} acting in the given tensor factor (0-based) on M[l].
    LinearOperator generator_matrix(int a, int b, std::size_t factor,
                                    const std::vector<unsigned>& l) const;
    // h_c acting in the given factor.
    LinearOperator cartan_matrix(int c, std::size_t factor,
                                 const std::vector<unsigned>& l) const;

    // Full Casimir Omega^{(i,j)} (factors 0-based, i != j); for rank 2 the
    // graded parts from the polynomial model are attached.
    CasimirOperator casimir_matrix(std::size_t i, std::size_t j,
                                   const std::vector<unsigned>& l) const;

    std::vector<GaudinOperator> gaudin_matrices(const std::vector<unsigned>& l) const;

    // max |e_{a,a+1} v| over simple raising generators; 0 iff singular.
    double singular_residual(const TensorVector& v) const;
    bool is_singular(const TensorVector& v, double tolerance = 0.0) const;

    TensorVector apply(const LinearOperator& op, const TensorVector& v) const;

  private:
    ProblemInstance instance_;
    PairingTable pairs_;
    GeneratorList gens_;
    mutable std::map<std::vector<unsigned>, std::unique_ptr<WeightBasis>> bases_;
};

}  // namespace gaudin
