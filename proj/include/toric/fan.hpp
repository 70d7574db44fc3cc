#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

// Subsets of the ray index set [n], n <= 24.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }
Mask mask_of(const std::vector<std::size_t>& idx);
std::vector<std::size_t> indices_of(Mask m);
std::string mask_to_string(Mask m, bool one_based = true);

struct Fan {
  std::string name;
  IntMatrix rays;                              // n x d, row i is l_i
  std::vector<Mask> max_cones;
  std::vector<Mask> subvariety;                // cones whose orbit closures form V
  std::vector<IntVec> basis;                   // optional display basis, as lifts to Z^n

  std::size_t n() const { return rays.rows(); }
  std::size_t d() const { return rays.cols(); }
  IntVec ray(std::size_t i) const { return rays.row(i); }
  Mask all() const { return n() == 32 ? ~Mask(0) : (Mask(1) << n()) - 1; }
  // Every cone of the fan, as ray-index sets.
  std::vector<Mask> cones() const;
};

Fan make_fan(const std::vector<std::vector<long>>& rays, const std::vector<std::vector<std::size_t>>& cones,
             std::string name = "");
// JSON document with rays, max_cones (0-based), optional subvariety, basis, name.
Fan load_fan(const std::string& path);
Fan parse_fan(const std::string& text);

struct Diagnostic {
  std::string code;
  std::string message;
};

struct Validation {
  std::vector<Diagnostic> errors;
  std::vector<Diagnostic> warnings;
  bool complete = false;
  bool ok() const { return errors.empty(); }
};

Validation validate(const Fan& fan);

// Faces of the cone spanned by the rays in `cone`, including the origin (empty mask) and the cone.
std::vector<Mask> cone_faces(const IntMatrix& rays, Mask cone);
std::vector<Mask> cone_facets(const IntMatrix& rays, Mask cone);
std::size_t cone_dim(const IntMatrix& rays, Mask cone);
bool is_simplicial_cone(const IntMatrix& rays, Mask cone);

// A downward closed family of subsets of [n]. No faces at all is the void complex;
// {∅} is the empty complex.
struct SimplicialComplex {
  std::size_t n = 0;
  std::vector<Mask> faces;  // sorted ascending as integers

  bool contains(Mask f) const;
  bool is_void() const { return faces.empty(); }
  // Faces ordered by size, then lexicographically by index.
  std::vector<Mask> ordered_faces() const;
  bool operator==(const SimplicialComplex& o) const { return n == o.n && faces == o.faces; }
};

// Union of the power sets of the generating sets.
SimplicialComplex complex_from_generators(std::size_t n, const std::vector<Mask>& gens);
SimplicialComplex simplicial_model(const Fan& fan);
SimplicialComplex full_subcomplex(const SimplicialComplex& K, Mask I);
// Complex of the cones whose orbit closures are not contained in V.
SimplicialComplex subvariety_complex(const Fan& fan, const std::vector<Mask>& V);
bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& K);

struct Wall {
  Mask tau = 0;
  std::size_t sigma = 0, sigma2 = 0;  // indices into max_cones
  Mask circuit = 0;
  IntVec relation;  // length n, zero off the circuit, primitive, first nonzero positive
};

// Inner walls of a simplicial fan; throws std::invalid_argument otherwise.
std::vector<Wall> walls(const Fan& fan);

// Indices sorted counterclockwise starting from ray 0 (d = 2 only).
std::vector<std::size_t> circular_order(const IntMatrix& rays);
// a_i with l_{i-1} + l_{i+1} + a_i l_i = 0, for a complete smooth surface fan listed counterclockwise.
IntVec surface_selfintersections(const Fan& fan);

}  // namespace toric
