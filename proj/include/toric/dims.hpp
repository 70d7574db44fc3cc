#pragma once

#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Dimension of a graded piece; infinite for non-complete cases.
struct Dim {
  bool infinite = false;
  Int value = 0;

  bool zero() const { return !infinite && value == 0; }
  bool operator==(const Dim& o) const { return infinite == o.infinite && (infinite || value == o.value); }
  static Dim inf() { return Dim{true, 0}; }
};

inline std::string to_string(const Dim& d) { return d.infinite ? std::string("INF") : d.value.get_str(); }

using DimVec = std::vector<Dim>;

}  // namespace toric
