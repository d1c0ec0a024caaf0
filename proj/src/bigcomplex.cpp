#include "gaudin/bigcomplex.hpp"

namespace gaudin {

std::string BigComplex::to_string(std::size_t digits) const {
    if (im_.is_zero()) return re_.to_decimal(digits);
    std::string s = re_.to_decimal(digits);
    s += im_.is_negative() ? " - " : " + ";
    s += im_.abs().to_decimal(digits);
    s += "i";
    return s;
}

}  // namespace gaudin
