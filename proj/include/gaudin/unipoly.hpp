#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gaudin/scalar.hpp"

namespace gaudin {

// Dense univariate polynomial over Scalar, constant term first.
// Invariant: no trailing exactly-zero coefficient; the zero polynomial is
// the empty coefficient list.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(Scalar s) { return UniPoly(std::vector<Scalar>{std::move(s)}); }
    static UniPoly x();  // the monomial x
    static UniPoly monomial(Scalar coeff, std::size_t degree);

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is -1 by convention.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<Scalar>& coeffs() const { return c_; }
    Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& leading() const { return c_.back(); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly operator-() const;
    UniPoly scaled(const Scalar& s) const;
    friend bool operator==(const UniPoly& a, const UniPoly& b);

    UniPoly derivative() const;
    Scalar eval(const Scalar& x) const;

    // Quotient/remainder; requires nonzero divisor.
    std::pair<UniPoly, UniPoly> divrem(const UniPoly& d) const;

    // Largest |coefficient| as a double (0 for the zero polynomial).
    double max_abs_coeff() const;

    bool all_exact() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Scalar> c_;
};

enum class RootConvention {
    kPaper,  // prod (t_j - x), the convention used throughout the text
    kMonic,  // prod (x - t_j)
};

UniPoly poly_from_roots(std::span<const Scalar> roots, RootConvention convention);
UniPoly poly_from_roots(const std::vector<Scalar>& roots, RootConvention convention);

struct DivisionResult {
    UniPoly quotient;
    bool exact = false;
    UniPoly remainder;
};

// Tests numer = q * denom. Over exact scalars the test is exact; if any
// coefficient is numeric the remainder is compared to zero with
// `tolerance` (max |coefficient|).
DivisionResult exact_divide(const UniPoly& numer, const UniPoly& denom,
                            double tolerance = 0.0);

// Sum of simple poles  sum_s c_s / (x - z_s), poles pairwise distinct.
struct SimplePoleSum {
    std::vector<Scalar> poles;
    std::vector<Scalar> residues;

    Scalar eval(const Scalar& x) const;
    Scalar residue_sum() const;
    // sum_s c_s * prod_{k != s} (x - z_k): the numerator over prod (x - z_s).
    UniPoly cleared_numerator() const;
};

// Residues of H / prod(x - z_s) at the given simple poles.
// Requires deg H <= |poles| - 1 and pairwise-distinct poles.
SimplePoleSum partial_fractions_simple(const UniPoly& H, std::span<const Scalar> poles);
SimplePoleSum partial_fractions_simple(const UniPoly& H, const std::vector<Scalar>& poles);

// Univariate rational function numerator/denominator. Exact-scalar inputs
// are kept gcd-reduced so pole orders are meaningful.
class RatFunc {
  public:
    RatFunc() : num_(), den_(UniPoly::constant(Scalar(1))) {}
    RatFunc(UniPoly num, UniPoly den);
    static RatFunc from_poly(UniPoly p) { return RatFunc(std::move(p), UniPoly::constant(Scalar(1))); }
    static RatFunc constant(Scalar s) { return from_poly(UniPoly::constant(std::move(s))); }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const;

    RatFunc derivative() const;
    Scalar eval(const Scalar& x) const;

    // lim_{x->a} (x-a)^k f(x); nullopt if the limit is infinite.
    std::optional<Scalar> shifted_limit(const Scalar& a, unsigned k) const;
    // lim_{x->inf} x^k f(x); nullopt if infinite.
    std::optional<Scalar> shifted_limit_at_infinity(unsigned k) const;

    // Multiplicity of `a` as a root of the reduced denominator.
    unsigned pole_order(const Scalar& a) const;

  private:
    void reduce();
    UniPoly num_, den_;
};

// Monic gcd over exact scalars (Euclid); returns 1 when any input has a
// numeric coefficient.
UniPoly poly_gcd(UniPoly a, UniPoly b);

// All complex roots at the given precision (Durand-Kerner with fixed
// deterministic starting values). Multiplicities are returned as clusters.
std::vector<BigComplex> complex_roots(const UniPoly& p, mpfr_prec_t precision,
                                      unsigned max_iterations = 200);

// Multiplicity of root a in p (exact scalars only; 0 if p(a) != 0).
unsigned root_multiplicity(const UniPoly& p, const Scalar& a);

}  // namespace gaudin
