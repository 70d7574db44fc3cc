#pragma once

#include <optional>
#include <vector>

#include "toric/circuits.hpp"
#include "toric/classgroup.hpp"
#include "toric/cohomology.hpp"
#include "toric/discriminantal.hpp"

namespace toric {

// |{k in N^r : sum k_i w_i = target, k_i >= 1 where strict}|
Int denumerant(const std::vector<Int>& weights, const Int& target, const std::vector<bool>& strict);

// A_C = Z^C / L_C(M) with eta: Z^n -> A_C.
struct CircuitQuotient {
  Circuit circuit;
  AbelianGroup group;     // ambient |C|
  IntVec phi_of_gen;      // circuit functional (canonical sign) on each generator of group

  IntVec eta(const IntVec& c) const;        // c in Z^n
  IntVec eta_unit(std::size_t k) const;     // k-th circuit member
  Int phi(const IntVec& normal_form) const;
};

CircuitQuotient circuit_quotient(const IntMatrix& L, const Circuit& c);

// Number of u in N^C with u_i > 0 on c+ and eta(D) = sum_{c-} u_i eta(D_i) - sum_{c+} u_i eta(D_i).
Int semigroup_representations(const CircuitQuotient& Q, const OrientedCircuit& oc, const IntVec& c);
// D in F_c: no such representation exists.
bool in_F(const CircuitQuotient& Q, const OrientedCircuit& oc, const IntVec& c);
bool in_F(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c);

// Window of classes: free display coordinates in [-radius, radius]^r times all torsion elements.
std::vector<IntVec> window_classes(const ClassGroup& A, long radius);

// Cached discriminantal and arithmetic data of a fan.
class ArithmeticCores {
public:
  explicit ArithmeticCores(const Fan& fan);

  const Fan& fan() const { return fan_; }
  const Arrangement& arr() const { return arr_; }
  const ClassGroup& A() const { return arr_.A; }
  const RatCone& nef() const { return nef_; }
  const std::vector<OrientedCircuit>& nef_flat() const { return nef_flat_; }
  // Faces F of the nef cone whose relative interior has Iitaka dimension strictly between 0 and d.
  const std::vector<RatCone>& intermediate_faces() const { return faces_; }

  bool in_F(const OrientedCircuit& oc, const IntVec& c) const;
  bool in_core(const std::vector<OrientedCircuit>& flat, const IntVec& c) const;
  bool in_A_nef(const IntVec& c) const { return in_core(nef_flat_, c); }
  bool in_A_minus_face(const RatCone& F, const IntVec& c) const;
  // Intersection of F_c over all oriented circuits (0-essential classes).
  bool in_A_zero(const IntVec& c) const { return in_core(arr_.oriented, c); }

  // Iitaka dimension of a nef class given in display coordinates.
  int kappa(const RatVec& x) const;

private:
  const Fan& fan_;
  Arrangement arr_;
  RatCone nef_;
  std::vector<OrientedCircuit> nef_flat_;
  std::vector<RatCone> faces_;
  std::vector<CircuitQuotient> quotients_;  // aligned with arr_.circuits
};

enum class CoreVerdict { vanishes_by_nef_core, vanishes_by_minus_face_core, unknown };
std::string to_string(CoreVerdict v);
struct CoreResult {
  CoreVerdict verdict = CoreVerdict::unknown;
  std::optional<RatCone> face;  // set for the minus-face verdict
};
CoreResult vanishing_by_core(const ArithmeticCores& cores, const IntVec& c);

// Classes c in the window with no lattice point of signature I, lying in e_I + C_I.
std::vector<IntVec> vpf_zero_window(const Fan& fan, Mask I, long radius);

enum class StratumKind { nef, minus_face, zero };
struct Stratum {
  StratumKind kind = StratumKind::nef;
  std::string name;
  std::vector<OrientedCircuit> flat;
  IntVec direction;           // integral display direction for persistence, empty for the 0-stratum
  std::size_t first_degree;   // cohomology must vanish in degrees >= first_degree
};
Stratum nef_stratum(const ArithmeticCores& cores);
Stratum minus_face_stratum(const ArithmeticCores& cores, const RatCone& F, const std::string& name);
Stratum zero_stratum(const ArithmeticCores& cores);

struct ResidualScan {
  std::vector<IntVec> residual;  // display coordinates (torsion appended)
  std::size_t members = 0;       // window classes in the core
};
// Classes with the stratum's vanishing pattern persisting along its direction to the window
// edge that are not in the stratum's core. For the 0-stratum: h^{>0} = 0 outside the nef core
// and all minus-face cores.
ResidualScan residual_window(const ArithmeticCores& cores, const Stratum& S, long radius);

}  // namespace toric
