#include "symref/matrix.hpp"

namespace symref {

std::string to_string(const MatrixGQ& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) out += ",";
    out += "[";
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace symref
