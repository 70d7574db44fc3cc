#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/cohomology.hpp"
#include "toric/frobenius.hpp"

namespace toric {

struct OppositePair {
  std::size_t p = 0, q = 0;  // l_q = -l_p, p < q
  Mask A1 = 0, A2 = 0;       // l_i(m) < 0 on A1
  IntVec m;                  // primitive, l_p(m) = 0
  IntVec coefficients;       // sum over A1 of l_i(m) D_i
  IntVec direction;          // its class in display coordinates (D_{p,q})
};

// Rays must be listed counterclockwise on a complete surface fan.
std::vector<OppositePair> opposite_pairs(const Fan& fan, const ClassGroup& A);

// Closure of S_{p,q}: -nef intersected with H_{p,q}.
RatCone pq_stratum_closure(const ArithmeticCores& cores, const OppositePair& pr);
std::vector<OrientedCircuit> pq_flat(const ArithmeticCores& cores, const OppositePair& pr);
bool in_A_pq(const ArithmeticCores& cores, const OppositePair& pr, const IntVec& c);

enum class SurfaceLabel { in_A_nef, in_A_pq, residual_with_vanishing, has_cohomology };
std::string to_string(SurfaceLabel l);

struct SurfaceRow {
  IntVec cls;  // display coordinates
  IntVec coefficients;
  SurfaceLabel label = SurfaceLabel::has_cohomology;
  std::optional<std::size_t> pair;  // index into opposite_pairs for in_A_pq
  DimVec h;
};
// Vanishing means h^1 = h^2 = 0; precedence: cohomology, A_nef, A_{p,q}, residual.
std::vector<SurfaceRow> surface_classify_window(const ArithmeticCores& cores, long radius);

// b_i = -a_i for the self-intersections a_i
IntVec surface_b(const Fan& fan);
// e_i = c_{i-1} + c_{i+1} - b_i c_i
IntVec surface_e(const Fan& fan, const IntVec& c);

struct PairConditions {
  OppositePair pair;
  bool sum_ok = false;        // c_p + c_q = -1
  bool bounds_ok = false;     // e_i in [-1, b_i - 1] on A1 u A2
  bool symmetric_ok = false;  // e_i in [-1, min(1, b_i - 1)] on A1 u A2
};
std::vector<PairConditions> surface_conditions(const Fan& fan, const IntVec& c);
// Necessary conditions: hold for some opposite pair. Throws on non-smooth fans.
bool smooth_necessary_conditions(const Fan& fan, const IntVec& c);
// Two-sided bounds for some opposite pair; the pair sum is not part of this check.
bool symmetric_conditions(const Fan& fan, const IntVec& c);

}  // namespace toric
