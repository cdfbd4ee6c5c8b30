#include "pathpoly/affine.hpp"

#include "pathpoly/errors.hpp"

namespace pathpoly {

QVec AffineMap::apply(const QVec& x) const {
  if (x.size() != domain.size())
    fail(errc::dimension_mismatch, "point has " + std::to_string(x.size()) +
                                       " coordinates, map expects " +
                                       std::to_string(domain.size()));
  QVec y = constant;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (x[j] == 0) continue;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += columns[j][i] * x[j];
  }
  return y;
}

}  // namespace pathpoly
