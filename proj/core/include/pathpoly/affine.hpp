#pragma once

#include <vector>

#include "pathpoly/basis.hpp"
#include "pathpoly/numeric.hpp"

namespace pathpoly {

// Exact affine map x -> A x + c between named coordinate spaces.
// columns[j] is the image of the j-th domain basis vector (without c).
struct AffineMap {
  Basis domain;
  Basis codomain;
  std::vector<QVec> columns;
  QVec constant;

  QVec apply(const QVec& x) const;
};

}  // namespace pathpoly
