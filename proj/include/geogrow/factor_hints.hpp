#pragma once

#include <vector>

#include "geogrow/polynomial.hpp"

namespace geogrow {

/// Irreducible factors that show up in the McKay-pair series; handed to
/// factor_with_hints so printed series come out in the familiar shape.
inline const std::vector<IntPolynomial>& known_factor_hints() {
  static const std::vector<IntPolynomial> hints{
      {1, 1},
      {1, 2, 0, -2, -4, -1},
      {1, 5, 10, 9, -5, -26, -34, -22, -1, 7, 4},
      {1, 4, 4, -3, -9, -5, 3, 1, -3, -3},
      {1, 3, 2, -3, -9, -8, 0, 4, 3, -1},
      {1, -8, -85, -243, -222, 332, 1194, 1349, 132, -1510, -2008, -1088, 28, 359, 170, 15},
  };
  return hints;
}

}  // namespace geogrow
