#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/discriminantal.hpp"
#include "toric/frobenius.hpp"

namespace toric {

struct Triangulation {
  std::vector<Mask> cells;  // sorted maximal cones
  IntVec heights;           // regularity certificate

  bool operator==(const Triangulation& o) const { return cells == o.cells; }
};
std::string to_string(const Triangulation& t, bool one_based = true);

// Cells of the regular subdivision of the cone over `support` induced by heights:
// maximal tight sets of functionals m with <m, l_j> <= h_j on the support.
std::vector<Mask> regular_subdivision(const IntMatrix& rays, Mask support, const RatVec& heights);
bool is_triangulation_of(const IntMatrix& rays, Mask support, const std::vector<Mask>& cells);
// Heights reproduce the cells, every cell is simplicial and every ray is used.
bool verify_triangulation(const Fan& cone, const Triangulation& t);

// Affine toric variety of a single full-dimensional cone.
class AffineCone {
public:
  explicit AffineCone(const Fan& fan);

  const Fan& fan() const { return fan_; }
  Mask sigma() const { return sigma_; }
  const ClassGroup& A() const { return A_; }

  bool is_mcm(const IntVec& c) const;
  bool simplicial_facets() const;

  Triangulation pulling_triangulation(std::size_t i) const;
  // Chamber strategy: one interior point per chamber of the discriminantal arrangement.
  const std::vector<Triangulation>& regular_triangulations() const;
  // Grid strategy: integer heights in [-K, K] off a fixed basis.
  std::vector<Triangulation> regular_triangulations_grid(long K) const;

  // Global cohomology of O(D) on the triangulated fan, same coefficient vector.
  DimVec pushforward_vanishing(const Triangulation& t, const IntVec& c) const;

private:
  const Fan& fan_;
  Mask sigma_ = 0;
  ClassGroup A_;
  std::unique_ptr<CohomologyEngine> local_;
  mutable std::optional<std::vector<Triangulation>> triangulations_;
  struct Resolved {
    std::shared_ptr<Fan> fan;
    std::shared_ptr<CohomologyEngine> engine;
  };
  mutable std::map<std::vector<Mask>, Resolved> resolved_;
};

bool is_mcm(const Fan& fan, const IntVec& c);

struct McmEnumeration {
  std::vector<IntVec> classes;  // display coordinates (torsion appended)
  long radius = 0;
  long outer_radius = 0;
  bool stable = false;  // the enlarged window adds no class
};
long default_mcm_radius(const ClassGroup& A);
// radius 0 selects the default window.
McmEnumeration enumerate_mcm(const AffineCone& cone, long radius = 0);

struct CriterionReport {
  bool mcm = false;
  bool all_triangulations_vanish = false;
  std::optional<Triangulation> witness;  // a triangulation with R^i != 0 for some i > 0
  bool hypothesis_ok = false;            // facets simplicial
};
CriterionReport mcm_criterion_report(const AffineCone& cone, const IntVec& c);

// Rays forming one circuit with |c+|, |c-| >= 2: MCM iff D in F_c and F_{-c}.
bool circuit_cone_mcm(const Fan& fan, const IntVec& c);

}  // namespace toric
