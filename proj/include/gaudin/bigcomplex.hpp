#pragma once

#include <string>

#include "gaudin/bigfloat.hpp"

namespace gaudin {

// Complex number with MPFR components sharing one precision.
class BigComplex {
  public:
    explicit BigComplex(mpfr_prec_t prec = kDefaultPrecision) : re_(prec), im_(prec) {}
    BigComplex(BigFloat re, BigFloat im)
        : re_(std::move(re)), im_(std::move(im)) {
        mpfr_prec_t p = std::min(re_.precision(), im_.precision());
        if (re_.precision() != p) re_ = re_.with_precision(p);
        if (im_.precision() != p) im_ = im_.with_precision(p);
    }
    static BigComplex from_rational(const Rational& q, mpfr_prec_t prec) {
        return BigComplex(BigFloat::from_rational(q, prec), BigFloat(prec));
    }
    static BigComplex from_doubles(double re, double im, mpfr_prec_t prec) {
        return BigComplex(BigFloat::from_double(re, prec), BigFloat::from_double(im, prec));
    }

    const BigFloat& re() const { return re_; }
    const BigFloat& im() const { return im_; }
    mpfr_prec_t precision() const { return re_.precision(); }
    BigComplex with_precision(mpfr_prec_t prec) const {
        return BigComplex(re_.with_precision(prec), im_.with_precision(prec));
    }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return BigComplex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re_ * b.re_ + b.im_ * b.im_;
        return BigComplex((a.re_ * b.re_ + a.im_ * b.im_) / d,
                          (a.im_ * b.re_ - a.re_ * b.im_) / d);
    }
    BigComplex operator-() const { return BigComplex(-re_, -im_); }

    BigFloat abs() const { return BigFloat::hypot(re_, im_); }

    std::string to_string(std::size_t digits = 20) const;
    // "hexre hexim" pair, lossless at the stored precision.
    std::string to_hex_pair() const { return re_.to_hex() + " " + im_.to_hex(); }

  private:
    BigFloat re_, im_;
};

}  // namespace gaudin
