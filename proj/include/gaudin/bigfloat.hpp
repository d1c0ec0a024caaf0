#pragma once

#include <mpfr.h>
#include <algorithm>
#include <string>

#include "gaudin/rational.hpp"

namespace gaudin {

constexpr mpfr_prec_t kMinPrecision = 64;
constexpr mpfr_prec_t kDefaultPrecision = 128;

// Arbitrary-precision binary float (MPFR). Every value carries its own
// precision; binary operations round the result to the smaller operand
// precision.
class BigFloat {
  public:
    explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_q(x.v_, q.get_mpq_t(), MPFR_RNDN);
        return x;
    }
    static BigFloat from_double(double d, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_d(x.v_, d, MPFR_RNDN);
        return x;
    }
    static BigFloat from_long(long n, mpfr_prec_t prec) {
        BigFloat x(prec);
        mpfr_set_si(x.v_, n, MPFR_RNDN);
        return x;
    }
    // Parses either decimal or hex ("0x1.8p-1") significand forms.
    static BigFloat from_string(const std::string& s, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    BigFloat with_precision(mpfr_prec_t prec) const {
        BigFloat x(prec);
        mpfr_set(x.v_, v_, MPFR_RNDN);
        return x;
    }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    BigFloat abs() const {
        BigFloat r(precision());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    BigFloat sqrt() const {
        BigFloat r(precision());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    static BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(join(a, b));
        mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    // 2^e at this object's precision.
    static BigFloat pow2(long e, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    int compare(const BigFloat& o) const { return mpfr_cmp(v_, o.v_); }
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return a.compare(b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return a.compare(b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return a.compare(b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return a.compare(b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return a.compare(b) == 0; }

    std::string to_decimal(std::size_t digits = 20) const;
    // Lossless hex-significand form, e.g. "0x1.8p-1".
    std::string to_hex() const;

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, kMinPrecision); }
    static mpfr_prec_t join(const BigFloat& a, const BigFloat& b) {
        return std::min(a.precision(), b.precision());
    }
    mpfr_t v_;
};

}  // namespace gaudin
