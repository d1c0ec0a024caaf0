#include "gaudin/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace gaudin {

namespace {

template <typename Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
    if (a.is_exact() && b.is_exact()) return Scalar(op(a.rat(), b.rat()));
    mpfr_prec_t prec;
    if (!a.is_exact() && !b.is_exact())
        prec = std::min(a.cplx().precision(), b.cplx().precision());
    else
        prec = a.is_exact() ? b.cplx().precision() : a.cplx().precision();
    return Scalar(op(a.to_complex(prec), b.to_complex(prec)));
}

}  // namespace

Scalar operator+(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar operator-(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar operator*(const Scalar& a, const Scalar& b) {
    return combine(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar division by zero");
    return combine(a, b, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
    if (is_exact()) return Scalar(Rational(-rat()));
    return Scalar(-cplx());
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.is_exact() != b.is_exact()) {
        // Compare across tracks by promoting the exact side.
        const Scalar& num = a.is_exact() ? b : a;
        const Scalar& ex = a.is_exact() ? a : b;
        BigComplex p = ex.to_complex(num.cplx().precision());
        return (p - num.cplx()).is_zero();
    }
    if (a.is_exact()) return a.rat() == b.rat();
    return (a.cplx() - b.cplx()).is_zero();
}

double Scalar::abs_double() const {
    if (is_exact()) return std::fabs(rat().get_d());
    return cplx().abs().to_double();
}

BigFloat Scalar::abs_big(mpfr_prec_t prec_if_exact) const {
    if (is_exact()) {
        Rational a = rat() >= 0 ? rat() : Rational(-rat());
        return BigFloat::from_rational(a, prec_if_exact);
    }
    return cplx().abs();
}

std::string Scalar::to_string() const {
    if (is_exact()) return rational_to_string(rat());
    return cplx().to_string();
}

}  // namespace gaudin
