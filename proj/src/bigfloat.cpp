#include "gaudin/bigfloat.hpp"

#include <stdexcept>

namespace gaudin {

BigFloat BigFloat::from_string(const std::string& s, mpfr_prec_t prec) {
    BigFloat x(prec);
    // Base 0 auto-detects "0x..." hex significands.
    if (mpfr_set_str(x.v_, s.c_str(), 0, MPFR_RNDN) != 0)
        throw std::invalid_argument("malformed float literal: " + s);
    return x;
}

std::string BigFloat::to_decimal(std::size_t digits) const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", static_cast<int>(digits), v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string BigFloat::to_hex() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "%Ra", v_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

}  // namespace gaudin
