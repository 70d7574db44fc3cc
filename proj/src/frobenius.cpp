#include "toric/frobenius.hpp"

#include <map>
#include <numeric>
#include <stdexcept>

namespace toric {

Int denumerant(const std::vector<Int>& weights, const Int& target, const std::vector<bool>& strict) {
  Int t = target;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 1) throw std::invalid_argument("denumerant weights must be positive");
    if (i < strict.size() && strict[i]) t -= weights[i];
  }
  if (t < 0) return 0;
  if (!t.fits_slong_p()) throw std::overflow_error("denumerant target too large");
  const long T = t.get_si();
  std::vector<Int> ways(T + 1, 0);
  ways[0] = 1;
  for (const auto& w : weights) {
    const long wv = w.get_si();
    for (long v = wv; v <= T; ++v) ways[v] += ways[v - wv];
  }
  return ways[T];
}

IntVec CircuitQuotient::eta(const IntVec& c) const {
  IntVec local;
  for (auto i : circuit.idx) local.push_back(c.at(i));
  return group.normal_form(local);
}

IntVec CircuitQuotient::eta_unit(std::size_t k) const {
  IntVec e(circuit.idx.size(), 0);
  e[k] = 1;
  return group.normal_form(e);
}

Int CircuitQuotient::phi(const IntVec& nf) const {
  Int v = 0;
  for (std::size_t j = 0; j < nf.size(); ++j) v += nf[j] * phi_of_gen[j];
  return v;
}

CircuitQuotient circuit_quotient(const IntMatrix& L, const Circuit& c) {
  CircuitQuotient Q;
  Q.circuit = c;
  Q.group = cokernel_presentation(L.select_rows(c.idx));
  if (Q.group.free_rank != 1) throw std::logic_error("circuit quotient must have free rank one");
  Q.phi_of_gen.assign(Q.group.ngens(), 0);
  for (std::size_t j = 0; j < Q.group.ngens(); ++j)
    for (std::size_t k = 0; k < c.idx.size(); ++k) Q.phi_of_gen[j] += c.alpha[k] * Q.group.lift(k, j);
  return Q;
}

namespace {

IntVec add(const AbelianGroup& g, const IntVec& a, const IntVec& b) {
  IntVec s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
  return g.reduce(s);
}

}  // namespace

Int semigroup_representations(const CircuitQuotient& Q, const OrientedCircuit& oc, const IntVec& c) {
  const auto& idx = Q.circuit.idx;
  const int sgn = oc.sign;
  // generators: +eta_k on c-, -eta_k on c+; each has value -|alpha_k| under sgn * phi
  std::vector<IntVec> gens;
  std::vector<Int> vals;
  IntVec y = Q.eta(c);
  for (std::size_t k = 0; k < idx.size(); ++k) {
    IntVec e = Q.eta_unit(k);
    bool plus = oc.alpha_of(idx[k]) > 0;
    if (plus)
      for (auto& x : e) x = -x;
    e = Q.group.reduce(e);
    gens.push_back(e);
    vals.push_back(-abs(Q.circuit.alpha[k]));
    if (plus) {
      // u_k >= 1: move one copy to the target
      IntVec neg = e;
      for (auto& x : neg) x = -x;
      y = add(Q.group, y, neg);
    }
  }
  const Int floor_val = sgn * Q.phi(y);
  if (floor_val > 0) return 0;
  std::map<IntVec, Int> cur;
  cur[IntVec(Q.group.ngens(), 0)] = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    std::map<IntVec, Int> next;
    for (const auto& [s, cnt] : cur) {
      IntVec x = s;
      Int v = sgn * Q.phi(x);
      while (v >= floor_val) {
        next[x] += cnt;
        x = add(Q.group, x, gens[k]);
        v += vals[k];
      }
    }
    cur.swap(next);
  }
  auto it = cur.find(y);
  return it == cur.end() ? Int(0) : it->second;
}

bool in_F(const CircuitQuotient& Q, const OrientedCircuit& oc, const IntVec& c) {
  return semigroup_representations(Q, oc, c) == 0;
}

bool in_F(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c) {
  return in_F(circuit_quotient(L, oc.circuit), oc, c);
}

std::vector<IntVec> window_classes(const ClassGroup& A, long radius) {
  const std::size_t r = A.rank();
  std::vector<IntVec> tors = A.group.torsion_elements();
  std::vector<IntVec> out;
  std::vector<long> idx(r, -radius);
  while (true) {
    for (const auto& t : tors) {
      IntVec x;
      for (auto v : idx) x.push_back(Int(v));
      for (std::size_t j = r; j < t.size(); ++j) x.push_back(t[j]);
      out.push_back(x);
    }
    std::size_t k = 0;
    while (k < r && ++idx[k] > radius) idx[k++] = -radius;
    if (k == r) break;
  }
  return out;
}

namespace {

IntVec lift_window_class(const ClassGroup& A, const IntVec& x) {
  IntVec free(x.begin(), x.begin() + A.rank());
  IntVec tors(x.begin() + A.rank(), x.end());
  return A.lift(free, tors);
}

RatVec interior_point(const RatCone& F) {
  RatVec x(F.ambient, 0);
  for (const auto& g : F.generators)
    for (std::size_t k = 0; k < x.size(); ++k) x[k] += g[k];
  return x;
}

}  // namespace

ArithmeticCores::ArithmeticCores(const Fan& fan) : fan_(fan), arr_(arrangement(fan)) {
  nef_ = nef_cone(fan, arr_).cone;
  nef_flat_ = nef_oriented_flat(arr_, nef_);
  for (const auto& C : arr_.circuits) quotients_.push_back(circuit_quotient(fan.rays, C));
  if (nef_.lineality.empty())
    for (const auto& F : faces(nef_)) {
      if (F.generators.empty()) continue;
      int k = kappa(interior_point(F));
      if (k > 0 && k < static_cast<int>(fan.d())) faces_.push_back(F);
    }
}

int ArithmeticCores::kappa(const RatVec& x) const {
  Mask T = 0;
  for (const auto& C : arr_.circuits)
    if (is_fibrational(C) && dot(circuit_functional(arr_.A, OrientedCircuit{C, 1}), x) == 0) T |= C.support;
  return static_cast<int>(fan_.d()) - static_cast<int>(rank(fan_.rays.select_rows(indices_of(T))));
}

bool ArithmeticCores::in_F(const OrientedCircuit& oc, const IntVec& c) const {
  for (std::size_t k = 0; k < arr_.circuits.size(); ++k)
    if (arr_.circuits[k].support == oc.circuit.support) return toric::in_F(quotients_[k], oc, c);
  throw std::invalid_argument("unknown circuit " + oc.label());
}

bool ArithmeticCores::in_core(const std::vector<OrientedCircuit>& flat, const IntVec& c) const {
  for (const auto& oc : flat)
    if (!in_F(oc, c)) return false;
  return true;
}

bool ArithmeticCores::in_A_minus_face(const RatCone& F, const IntVec& c) const {
  return in_core(face_oriented_flat(arr_, F), c);
}

std::string to_string(CoreVerdict v) {
  switch (v) {
    case CoreVerdict::vanishes_by_nef_core: return "vanishes_by_nef_core";
    case CoreVerdict::vanishes_by_minus_face_core: return "vanishes_by_minus_face_core";
    default: return "unknown";
  }
}

CoreResult vanishing_by_core(const ArithmeticCores& cores, const IntVec& c) {
  CoreResult r;
  if (cores.in_A_nef(c)) {
    r.verdict = CoreVerdict::vanishes_by_nef_core;
    return r;
  }
  for (const auto& F : cores.intermediate_faces())
    if (cores.in_A_minus_face(F, c)) {
      r.verdict = CoreVerdict::vanishes_by_minus_face_core;
      r.face = F;
      return r;
    }
  return r;
}

std::vector<IntVec> vpf_zero_window(const Fan& fan, Mask I, long radius) {
  Arrangement arr = arrangement(fan);
  RatCone CI = orthant_cone(arr, I);
  RatVec e(arr.r(), 0);
  for (auto i : indices_of(I))
    for (std::size_t k = 0; k < e.size(); ++k) e[k] -= arr.gale[i][k];
  std::vector<IntVec> out;
  for (const auto& x : window_classes(arr.A, radius)) {
    IntVec c = lift_window_class(arr.A, x);
    RatVec y = arr.A.rational(c);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= e[k];
    if (!CI.contains(y)) continue;
    LatticeCount n = count_lattice_points(region_system(fan, c, I), fan.d());
    if (!n.infinite && n.count == 0) out.push_back(x);
  }
  return out;
}

Stratum nef_stratum(const ArithmeticCores& cores) {
  Stratum S;
  S.kind = StratumKind::nef;
  S.name = "nef";
  S.flat = cores.nef_flat();
  S.direction = primitive(interior_point(cores.nef()));
  S.first_degree = 1;
  return S;
}

Stratum minus_face_stratum(const ArithmeticCores& cores, const RatCone& F, const std::string& name) {
  Stratum S;
  S.kind = StratumKind::minus_face;
  S.name = name;
  S.flat = face_oriented_flat(cores.arr(), F);
  RatVec x = interior_point(F);
  for (auto& v : x) v = -v;
  S.direction = primitive(x);
  S.first_degree = 0;
  return S;
}

Stratum zero_stratum(const ArithmeticCores& cores) {
  Stratum S;
  S.kind = StratumKind::zero;
  S.name = "0";
  S.flat = cores.arr().oriented;
  S.first_degree = 1;
  return S;
}

ResidualScan residual_window(const ArithmeticCores& cores, const Stratum& S, long radius) {
  const ClassGroup& A = cores.A();
  CohomologyEngine eng(cores.fan(), whole_variety());
  std::map<IntVec, bool> vanish;
  auto vanishes = [&](const IntVec& x) {
    auto it = vanish.find(x);
    if (it != vanish.end()) return it->second;
    auto h = eng.compute(lift_window_class(A, x));
    bool v = true;
    for (std::size_t i = S.first_degree; i < h.h.size(); ++i)
      if (!h.h[i].zero()) v = false;
    vanish[x] = v;
    return v;
  };
  auto in_window = [&](const IntVec& x) {
    for (std::size_t k = 0; k < A.rank(); ++k)
      if (abs(x[k]) > radius) return false;
    return true;
  };
  ResidualScan out;
  for (const auto& x : window_classes(A, radius)) {
    IntVec c = lift_window_class(A, x);
    bool member;
    if (S.kind == StratumKind::zero) {
      member = cores.in_A_nef(c);
      for (const auto& F : cores.intermediate_faces())
        member = member || cores.in_A_minus_face(F, c);
    } else {
      member = cores.in_core(S.flat, c);
    }
    if (member) {
      ++out.members;
      continue;
    }
    if (!vanishes(x)) continue;
    bool persists = true;
    if (!S.direction.empty()) {
      IntVec y = x;
      while (persists) {
        for (std::size_t k = 0; k < A.rank(); ++k) y[k] += S.direction[k];
        if (!in_window(y)) break;
        persists = vanishes(y);
      }
    }
    if (persists) out.residual.push_back(x);
  }
  return out;
}

}  // namespace toric
