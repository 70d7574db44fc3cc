#pragma once

#include <optional>
#include <vector>

#include "toric/fan.hpp"
#include "toric/lattice.hpp"

namespace toric {

// A_{d-1}(X) = Z^n / L(M) with a display basis for its free part.
struct ClassGroup {
  std::size_t n = 0, d = 0;
  AbelianGroup group;
  IntMatrix basis_lifts;  // free_rank x n; row k lifts display basis vector k
  RatMatrix to_display;   // free_rank x free_rank, internal free coordinates -> display
  bool declared_basis = false;

  std::size_t rank() const { return group.free_rank; }
  bool has_torsion() const { return !group.torsion.empty(); }
  // Normal form in internal coordinates (free part first, torsion reduced).
  IntVec normal_form(const IntVec& c) const { return group.normal_form(c); }
  IntVec torsion_part(const IntVec& c) const;
  // Free part in the display basis; torsion is dropped.
  IntVec display(const IntVec& c) const;
  RatVec rational(const IntVec& c) const;
  // Coefficient vector representing the given display coordinates plus torsion coordinates.
  IntVec lift(const IntVec& coords, const IntVec& torsion = {}) const;
  bool same_class(const IntVec& a, const IntVec& b) const { return normal_form(a) == normal_form(b); }
};

// Throws std::invalid_argument when the rays are not full-dimensional or a declared basis is not a Z-basis.
ClassGroup class_group(const Fan& fan);

// Rational images of D_1..D_n in display coordinates.
std::vector<RatVec> gale_transform(const ClassGroup& A);
std::vector<IntVec> gale_transform_integral(const ClassGroup& A);

struct CartierWitness {
  bool ok = false;
  std::vector<RatVec> m_sigma;  // one per maximal cone when ok
};

CartierWitness q_cartier_witness(const Fan& fan, const IntVec& c);
bool is_q_cartier(const Fan& fan, const IntVec& c);
std::optional<std::vector<IntVec>> cartier_witness(const Fan& fan, const IntVec& c);
bool is_cartier(const Fan& fan, const IntVec& c);

// Basis of Pic(X)_Q inside A_Q, display coordinates.
std::vector<RatVec> picard_rational(const Fan& fan, const ClassGroup& A);

struct PicardIntegral {
  std::vector<IntVec> generators;  // lifts to Z^n of the Cartier classes, Hermite reduced in class coordinates
  std::vector<IntVec> display;     // display coordinates of the generators
  std::optional<Int> index;        // [A : Pic], empty when infinite
};
PicardIntegral picard_integral(const Fan& fan, const ClassGroup& A);

IntVec canonical_divisor(std::size_t n);  // (-1, ..., -1)

}  // namespace toric
