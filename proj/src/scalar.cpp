#include "sunvac/scalar.hpp"

#include <ostream>

namespace sunvac {

std::string rational_str(const Rational& q) { return q.get_str(); }

std::string GaussRat::str() const {
  if (is_zero()) return "0";
  std::string out;
  if (sgn(re_) != 0) out += rational_str(re_);
  if (sgn(im_) != 0) {
    if (!out.empty() && sgn(im_) > 0) out += "+";
    out += rational_str(im_) + "*i";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GaussRat& z) { return os << z.str(); }

}  // namespace sunvac
