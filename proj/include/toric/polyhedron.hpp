#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// a . x <= b, or a . x < b when strict.
struct Ineq {
  IntVec a;
  Int b;
  bool strict = false;
};

using System = std::vector<Ineq>;

struct LatticeCount {
  bool infinite = false;
  Int count = 0;  // meaningful when !infinite
};

// Fourier-Motzkin projection onto the first k coordinates. With integer_mode
// the derived rows are tightened by their gcd (valid for integer points only).
// Returns nullopt when the system is found infeasible.
std::optional<System> project(System sys, std::size_t dim, std::size_t k, bool integer_mode);

bool rational_feasible(const System& sys, std::size_t dim);
// Recession cone {a . r <= 0} is {0}.
bool is_bounded(const System& sys, std::size_t dim);

// Lattice points of the system; strict rows are read as a . x <= b - 1.
LatticeCount count_lattice_points(const System& sys, std::size_t dim);
bool has_lattice_point(const System& sys, std::size_t dim);
// Bounded systems only; throws std::domain_error when unbounded.
void for_each_lattice_point(const System& sys, std::size_t dim,
                            const std::function<void(const IntVec&)>& fn);

// Vertices of a pointed polyhedron {a . x <= b} (strictness ignored).
std::vector<RatVec> vertices(const System& sys, std::size_t dim);
// Primitive generators of the extreme rays of {a . r <= 0}; pointed cones only.
std::vector<IntVec> extreme_rays(const System& sys, std::size_t dim);

// Exact phase-one simplex: is there x >= 0 with A x = b?
std::optional<RatVec> lp_feasible_point(const RatMatrix& A, const RatVec& b);

}  // namespace toric
