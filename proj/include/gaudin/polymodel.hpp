#pragma once

#include <functional>
#include <optional>

#include "gaudin/multipoly.hpp"
#include "gaudin/rep.hpp"

namespace gaudin {

using PolyOp = std::function<MultiPoly(const MultiPoly&)>;

PolyOp op_zero();
PolyOp op_identity();
PolyOp op_sum(std::vector<PolyOp> ops);
PolyOp op_scale(Scalar s, PolyOp op);
PolyOp op_shift(Scalar s);                      // F -> s * F
// after(a, b): apply b first, then a.
PolyOp op_after(PolyOp a, PolyOp b);
PolyOp op_mul_var(VarSetPtr vars, std::size_t var);
PolyOp op_derive(std::size_t var);

// Explicit polynomial realization of the sl2 (rank 1) and sl3 (rank 2)
// Verma tensor product: monomials in x-variables stand for PBW basis
// vectors, generators act by differential operators.
class PolyModel {
  public:
    PolyModel(const ProblemInstance& instance, const PairingTable& pairs);

    int rank() const { return rank_; }
    std::size_t factors() const { return factors_; }
    const VarSetPtr& vars() const { return vars_; }

    // Variable index of x_k^{(factor)}; k = 1 for sl2, k in {1,2,3} for sl3.
    std::size_t var_index(int k, std::size_t factor) const;

    MultiPoly monomial(const PBWIndex& index) const;
    PBWIndex index_of_exponents(const MultiPoly::Exponents& e) const;

    PolyOp gen_op(int a, int b, std::size_t factor) const;
    PolyOp cartan_op(int c, std::size_t factor) const;

    // Full Casimir via generator composition (equals the displayed formula).
    PolyOp casimir_op(std::size_t i, std::size_t j) const;

    enum class Part { kZero, kZeroTilde, kUp, kDown };
    // sl3 graded parts of the Casimir.
    PolyOp casimir_part_op(Part part, std::size_t i, std::size_t j) const;

    PolyOp gaudin_op(std::size_t i) const;
    // Gaudin part assembled from Omega_0 alone (sl3).
    PolyOp gaudin0_op(std::size_t i) const;

    LinearOperator matrix_of(const PolyOp& op, const WeightBasis& source,
                             const WeightBasis& target) const;

    // Expands a polynomial supported on the target basis monomials.
    std::map<std::size_t, Scalar> decompose(const MultiPoly& p, const WeightBasis& basis) const;

    // All generator and Gaudin matrices on M[l], keyed for comparison with
    // the straightening engine.
    struct ModelMatrices {
        std::vector<std::pair<std::pair<int, int>, std::vector<LinearOperator>>> generators;
        std::vector<std::pair<int, std::vector<LinearOperator>>> cartans;
        std::vector<LinearOperator> gaudin;
    };
    ModelMatrices model_matrices(const RepSpace& rep, const std::vector<unsigned>& l) const;

    Rational weight_alpha(std::size_t factor, int color) const {
        return pairs_->weight_alpha[factor][color];
    }

  private:
    const ProblemInstance* instance_;
    const PairingTable* pairs_;
    int rank_;
    std::size_t factors_;
    VarSetPtr vars_;
    GeneratorList gens_;
};

}  // namespace gaudin
