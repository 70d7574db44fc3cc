#pragma once

#include <string>
#include <vector>

#include "toric/classgroup.hpp"
#include "toric/dims.hpp"
#include "toric/fan.hpp"

namespace toric {

struct Circuit {
  Mask support = 0;
  std::vector<std::size_t> idx;
  IntVec alpha;  // aligned with idx; primitive, first entry positive

  std::size_t size() const { return idx.size(); }
  Int alpha_of(std::size_t i) const;  // 0 off the support
};

struct OrientedCircuit {
  Circuit circuit;
  int sign = 1;

  Int alpha_of(std::size_t i) const { return sign * circuit.alpha_of(i); }
  Mask plus() const;
  Mask minus() const;
  OrientedCircuit opposite() const { return {circuit, -sign}; }
  std::string label() const;  // e.g. "+{1,3} -{2}", one-based
  bool operator==(const OrientedCircuit& o) const {
    return circuit.support == o.circuit.support && sign == o.sign;
  }
};

// All circuits, ordered by size and then lexicographically.
std::vector<Circuit> enumerate_circuits(const IntMatrix& L);
// Both orientations of every circuit, positive first.
std::vector<OrientedCircuit> oriented_circuits(const std::vector<Circuit>& cs);
bool is_fibrational(const Circuit& c);

// Circuit fan with maximal cones C \ {i}, i in c+, on the circuit's rays written in a basis of
// their saturated span. Throws when c+ is empty.
Fan circuit_fan(const IntMatrix& L, const OrientedCircuit& oc);
// Rays xi(l_i) for the Gale duals l_i of alpha.
IntMatrix one_circuit_rays(const IntVec& alpha, const IntMatrix& xi);

// s_I = r_I^{-1} |Nbar_I / N_I| for I a subset of the circuit.
Rat s_index(const IntMatrix& L, const Circuit& c, Mask I);
Int one_circuit_pic_generator(const IntMatrix& L, const OrientedCircuit& oc);
bool one_circuit_smooth(const IntMatrix& L, const OrientedCircuit& oc);

struct WallForm {
  Mask tau = 0;            // C \ {i, j}
  std::size_t i = 0, j = 0;
  Rat t;                   // (s_tau / s) / lcm(alpha_i, alpha_j)
};
std::vector<WallForm> wall_forms(const IntMatrix& L, const OrientedCircuit& oc);

// The circuit functional sum alpha_i c_i as a linear form on A_Q (display coordinates).
RatVec circuit_functional(const ClassGroup& A, const OrientedCircuit& oc);
Int circuit_value(const OrientedCircuit& oc, const IntVec& c);
RatVec lifted_wall_form(const ClassGroup& A, const OrientedCircuit& oc, const WallForm& w);

struct AmplenessFlags {
  bool nef = false, ample = false, very_ample = false;
  std::vector<Rat> intersections;  // D.V(tau) per wall
};
// D is given by its value under the circuit functional.
AmplenessFlags one_circuit_ampleness(const IntMatrix& L, const OrientedCircuit& oc, const Rat& phi_value);

// Global cohomology of O(D) on the circuit variety, degrees 0..|C|-1.
DimVec one_circuit_cohomology(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c);
// Local cohomology along the maximal complete invariant subvariety, degrees 0..|C|-1;
// degree |C|-1 is reported as infinite (nonzero), degree |c-| counts lattice points.
DimVec one_circuit_local_cohomology(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c);

}  // namespace toric
