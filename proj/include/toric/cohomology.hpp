#pragma once

#include <optional>
#include <vector>

#include "toric/circuits.hpp"
#include "toric/dims.hpp"
#include "toric/fan.hpp"
#include "toric/homology.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

// I(m) = {i : l_i(m) < -c_i}
Mask signature(const Fan& fan, const IntVec& c, const IntVec& m);

struct SignatureRegion {
  Mask I = 0;
  System system;   // l_i(m) < -c_i on I, l_i(m) >= -c_i off I
  bool bounded = false;
  LatticeCount count;
};

// Region system for a signature (strict rows for members of I).
System region_system(const Fan& fan, const IntVec& c, Mask I);
// All signatures realized by a rational point, with boundedness and lattice counts.
std::vector<SignatureRegion> realized_signatures(const Fan& fan, const IntVec& c);

struct Character {
  IntVec m;
  Mask signature = 0;
  int degree = 0;
  std::size_t dim = 0;
};

struct GradedCohomology {
  DimVec h;  // degrees 0..max(d, top nonzero degree)
  std::vector<Character> characters;
  bool truncated = false;

  const Dim& operator[](std::size_t i) const;
  bool finite() const;
  bool vanishes_above(std::size_t i) const;  // h^j = 0 for all j > i
};

// V given as a list of cones; V = {empty cone} is the whole variety (global cohomology).
inline std::vector<Mask> whole_variety() { return {Mask(0)}; }

class CohomologyEngine {
public:
  CohomologyEngine(const Fan& fan, std::vector<Mask> V, Field field = {});

  const Fan& fan() const { return fan_; }
  // dims of the pair (Delta_I, Delta_{V,I}); entry k + 1 is degree k of reduced cohomology
  const CohomologyDims& pair_dims(Mask I) const { return table_[I]; }
  const std::vector<Mask>& contributing() const { return contributing_; }
  std::size_t top_degree() const { return top_; }

  // Characters are listed up to char_cap entries (0 lists none).
  GradedCohomology compute(const IntVec& c, std::size_t char_cap = 0) const;
  // h^i = 0 for all i < k, with early exit.
  bool vanishes_below(const IntVec& c, std::size_t k) const;

private:
  const Fan& fan_;
  std::vector<Mask> V_;
  Field field_;
  std::vector<CohomologyDims> table_;
  std::vector<Mask> contributing_;
  std::size_t top_ = 0;
};

GradedCohomology global_cohomology(const Fan& fan, const IntVec& c, Field field = {});
GradedCohomology local_cohomology(const Fan& fan, const std::vector<Mask>& V, const IntVec& c, Field field = {});

// Sum of (-1)^i h^i; empty when some degree is infinite.
std::optional<Int> euler_characteristic(const Fan& fan, const IntVec& c);
// Lattice points of P_D = {m : l_i(m) >= -c_i}.
LatticeCount polytope_points(const Fan& fan, const IntVec& c);
// Dimension of P_D (-1 when empty); bounded P_D only.
int polytope_dim(const Fan& fan, const IntVec& c);

// O(D) is MCM at every torus fixed point (local cohomology of each affine chart).
bool is_mcm_sheaf(const Fan& fan, const IntVec& c);

struct SerreCheck {
  bool precondition = false;  // O(D) is MCM
  bool holds = false;
};
// h^i(D) = h^{d-i}(K - D) for all i.
SerreCheck serre_duality_check(const Fan& fan, const IntVec& c);

struct Iitaka {
  int kappa = 0;
  std::vector<Circuit> fib;  // fibrational circuits C with D in H_C
};
// Throws std::invalid_argument when D is not nef.
Iitaka iitaka_dimension(const Fan& fan, const IntVec& c);
// For nef D: h^i(O(-D)) = 0 for all i != kappa(D).
bool antinef_vanishing_check(const Fan& fan, const IntVec& c);

}  // namespace toric
