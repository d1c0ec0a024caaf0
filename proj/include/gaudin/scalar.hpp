#pragma once

#include <string>
#include <variant>

#include "gaudin/bigcomplex.hpp"
#include "gaudin/rational.hpp"

namespace gaudin {

// Tagged union of an exact rational and a multiprecision complex.
// Mixed arithmetic promotes the exact operand to the numeric operand's
// precision; numeric-numeric arithmetic rounds to the smaller precision.
class Scalar {
  public:
    Scalar() : v_(Rational(0)) {}
    Scalar(Rational q) : v_(std::move(q)) {}
    Scalar(BigComplex c) : v_(std::move(c)) {}
    Scalar(long n) : v_(Rational(n)) {}
    Scalar(int n) : v_(Rational(n)) {}

    bool is_exact() const { return std::holds_alternative<Rational>(v_); }
    const Rational& rat() const { return std::get<Rational>(v_); }
    const BigComplex& cplx() const { return std::get<BigComplex>(v_); }

    BigComplex to_complex(mpfr_prec_t prec) const {
        if (is_exact()) return BigComplex::from_rational(rat(), prec);
        if (cplx().precision() == prec) return cplx();
        return cplx().with_precision(prec);
    }

    bool is_zero() const {
        return is_exact() ? rat() == 0 : cplx().is_zero();
    }

    // |.| as a double; adequate for tolerance checks and pivoting.
    double abs_double() const;

    // |.| at the value's own precision (exact values use the given one).
    BigFloat abs_big(mpfr_prec_t prec_if_exact = kDefaultPrecision) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
    Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

    // Exact equality (no tolerances): rationals compare by value, numerics
    // componentwise at their stored precision.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

  private:
    std::variant<Rational, BigComplex> v_;
};

inline Scalar scalar_one() { return Scalar(Rational(1)); }

}  // namespace gaudin
