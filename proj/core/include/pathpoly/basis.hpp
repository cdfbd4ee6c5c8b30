#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace pathpoly {

// Named coordinate order. Vectors and constraints are meaningful only
// relative to a basis; operations that combine objects check it.
struct Basis {
  std::vector<std::string> names;

  std::size_t size() const { return names.size(); }
  bool operator==(const Basis&) const = default;
};

}  // namespace pathpoly
