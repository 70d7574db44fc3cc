#pragma once

#include <string>
#include <vector>

#include "toric/circuits.hpp"
#include "toric/classgroup.hpp"
#include "toric/fan.hpp"

namespace toric {

// Polyhedral cone in Q^r: lineality + cone(generators) = {x : a.x >= 0, e.x = 0}.
struct RatCone {
  std::size_t ambient = 0;
  std::vector<RatVec> generators;  // extreme rays of the pointed part, primitive
  std::vector<RatVec> lineality;   // basis
  std::vector<RatVec> inequalities;
  std::vector<RatVec> equations;

  bool contains(const RatVec& x) const;
  bool contains_interior(const RatVec& x) const;  // relative interior
  std::size_t dim() const;
  bool is_zero() const { return generators.empty() && lineality.empty(); }
};

RatCone cone_from_generators(const std::vector<RatVec>& gens, std::size_t r);
RatCone cone_from_inequalities(const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs,
                               std::size_t r);
RatCone intersect(const RatCone& a, const RatCone& b);
bool same_cone(const RatCone& a, const RatCone& b);
RatCone negate(const RatCone& c);
// Faces of a pointed cone, as generator subsets; includes {0} and the cone itself.
std::vector<RatCone> faces(const RatCone& c);
// Set of inequalities tight at x (x in the cone), identifying the face containing x in its interior.
std::vector<std::size_t> tight_set(const RatCone& c, const RatVec& x);

// Discriminantal data of a fan, in display coordinates of A_Q.
struct Arrangement {
  ClassGroup A;
  std::vector<RatVec> gale;  // D_i
  std::vector<Circuit> circuits;
  std::vector<OrientedCircuit> oriented;
  std::vector<RatVec> functionals;  // aligned with oriented; H_c = {x : f.x >= 0}

  std::size_t r() const { return A.rank(); }
  const RatVec& functional(const OrientedCircuit& oc) const;
};
Arrangement arrangement(const Fan& fan);

struct Hyperplane {
  Circuit circuit;
  std::vector<std::size_t> spanning;  // i not in C
  RatVec normal;                      // positive orientation functional
};
Hyperplane hyperplane(const Arrangement& arr, const Circuit& c);

enum class Side { interior, boundary, outside };
std::string to_string(Side s);
Side side(const Arrangement& arr, const OrientedCircuit& oc, const RatVec& x);
RatCone half_space(const Arrangement& arr, const OrientedCircuit& oc);

// H_I = span{D_i : i not in I}
std::vector<RatVec> span_H(const Arrangement& arr, Mask I);

// Oriented circuits c such that some C \ {j}, j in c+, is a face of the simplicial model.
std::vector<OrientedCircuit> nef_relevant_circuits(const Fan& fan, const Arrangement& arr);
RatCone nef_cone_from_bases(const Fan& fan, const Arrangement& arr);
RatCone nef_cone_from_halfspaces(const Fan& fan, const Arrangement& arr);
struct NefCone {
  RatCone cone;
  bool routes_agree = false;
};
NefCone nef_cone(const Fan& fan, const Arrangement& arr);

// All oriented circuits with S inside H_c.
std::vector<OrientedCircuit> oriented_flat(const Arrangement& arr, const RatCone& S);
std::vector<OrientedCircuit> nef_oriented_flat(const Arrangement& arr, const RatCone& nef);
// Flat of -F for a face F of the nef cone.
std::vector<OrientedCircuit> face_oriented_flat(const Arrangement& arr, const RatCone& face);

struct MoriGenerator {
  OrientedCircuit circuit;
  WallForm wall;
  RatVec form;  // functional on A_Q
  RatVec n1;    // values on the Pic_Q basis
};
// Extremal lifted wall forms of the nef-relevant circuits, one per ray of the Mori cone.
std::vector<MoriGenerator> mori_generators(const Fan& fan, const Arrangement& arr);
// The cone of curves in N_1 coordinates (dual to the Pic_Q basis).
RatCone mori_cone(const Fan& fan, const Arrangement& arr);

// K_B^I = cone({-D_i : i in I \ B} u {D_i : i not in I u B}); throws if B is not a basis.
RatCone secondary_cone(const Fan& fan, const Arrangement& arr, Mask I, Mask B);
// C_I = cone({-D_i : i in I} u {D_i : i not in I})
RatCone orthant_cone(const Arrangement& arr, Mask I);
// Compares the partition of a grid in A_Q by discriminantal sign vectors with the one by
// faces of all C_I and K_B^I.
bool chamber_equality_test(const Fan& fan, const Arrangement& arr, long radius = 4);

}  // namespace toric
