#include "vkl/gaussrat.hpp"

#include <sstream>

namespace vkl {

std::string rational_str(const mpq_class& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

std::string GaussRat::str() const {
    if (im_ == 0) return rational_str(re_);
    std::ostringstream os;
    if (re_ != 0) {
        os << "(" << rational_str(re_);
        if (im_ > 0) os << "+";
        if (im_ == 1)
            os << "I";
        else if (im_ == -1)
            os << "-I";
        else
            os << rational_str(im_) << "*I";
        os << ")";
        return os.str();
    }
    if (im_ == 1) return "I";
    if (im_ == -1) return "-I";
    os << rational_str(im_) << "*I";
    return os.str();
}

} // namespace vkl
