#include "frpoisson/rational.hpp"

#include <stdexcept>

namespace frpoisson {

Rat rat_from_string(const std::string& text) {
  Rat r;
  if (r.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + text + "'");
  }
  if (sgn(r.get_den()) == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  }
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace frpoisson
