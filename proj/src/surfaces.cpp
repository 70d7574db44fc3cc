#include "toric/surfaces.hpp"

#include <stdexcept>

namespace toric {

std::vector<OppositePair> opposite_pairs(const Fan& fan, const ClassGroup& A) {
  if (fan.d() != 2) throw std::invalid_argument("surface fan must be 2-dimensional");
  surface_selfintersections(fan);  // validates order, completeness and smoothness
  std::vector<OppositePair> out;
  for (std::size_t p = 0; p < fan.n(); ++p)
    for (std::size_t q = p + 1; q < fan.n(); ++q) {
      if (fan.rays(p, 0) != -fan.rays(q, 0) || fan.rays(p, 1) != -fan.rays(q, 1)) continue;
      OppositePair pr;
      pr.p = p;
      pr.q = q;
      pr.m = {Int(-fan.rays(p, 1)), Int(fan.rays(p, 0))};
      pr.coefficients.assign(fan.n(), 0);
      for (std::size_t i = 0; i < fan.n(); ++i) {
        if (i == p || i == q) continue;
        Int v = dot(fan.ray(i), pr.m);
        if (v < 0) {
          pr.A1 |= Mask(1) << i;
          pr.coefficients[i] = v;
        } else {
          pr.A2 |= Mask(1) << i;
        }
      }
      pr.direction = A.display(pr.coefficients);
      out.push_back(pr);
    }
  return out;
}

namespace {

OrientedCircuit pair_circuit(const Arrangement& arr, const OppositePair& pr) {
  Mask s = (Mask(1) << pr.p) | (Mask(1) << pr.q);
  for (const auto& c : arr.circuits)
    if (c.support == s) return {c, 1};
  throw std::logic_error("opposite pair is not a circuit");
}

}  // namespace

RatCone pq_stratum_closure(const ArithmeticCores& cores, const OppositePair& pr) {
  RatCone neg = negate(cores.nef());
  RatCone H = cone_from_inequalities({}, {circuit_functional(cores.A(), pair_circuit(cores.arr(), pr))},
                                     cores.arr().r());
  return intersect(neg, H);
}

std::vector<OrientedCircuit> pq_flat(const ArithmeticCores& cores, const OppositePair& pr) {
  return oriented_flat(cores.arr(), pq_stratum_closure(cores, pr));
}

bool in_A_pq(const ArithmeticCores& cores, const OppositePair& pr, const IntVec& c) {
  return cores.in_core(pq_flat(cores, pr), c);
}

std::string to_string(SurfaceLabel l) {
  switch (l) {
    case SurfaceLabel::in_A_nef: return "in_A_nef";
    case SurfaceLabel::in_A_pq: return "in_A_pq";
    case SurfaceLabel::residual_with_vanishing: return "residual_with_vanishing";
    default: return "has_cohomology";
  }
}

std::vector<SurfaceRow> surface_classify_window(const ArithmeticCores& cores, long radius) {
  const Fan& fan = cores.fan();
  auto pairs = opposite_pairs(fan, cores.A());
  std::vector<std::vector<OrientedCircuit>> flats;
  for (const auto& pr : pairs) flats.push_back(pq_flat(cores, pr));
  CohomologyEngine eng(fan, whole_variety());
  std::vector<SurfaceRow> out;
  for (const auto& x : window_classes(cores.A(), radius)) {
    SurfaceRow row;
    row.cls = x;
    row.coefficients = cores.A().lift(IntVec(x.begin(), x.begin() + cores.A().rank()),
                                      IntVec(x.begin() + cores.A().rank(), x.end()));
    row.h = eng.compute(row.coefficients).h;
    bool vanish = true;
    for (std::size_t i = 1; i < row.h.size(); ++i)
      if (!row.h[i].zero()) vanish = false;
    if (!vanish) {
      row.label = SurfaceLabel::has_cohomology;
    } else if (cores.in_A_nef(row.coefficients)) {
      row.label = SurfaceLabel::in_A_nef;
    } else {
      row.label = SurfaceLabel::residual_with_vanishing;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (cores.in_core(flats[k], row.coefficients)) {
          row.label = SurfaceLabel::in_A_pq;
          row.pair = k;
          break;
        }
    }
    out.push_back(std::move(row));
  }
  return out;
}

IntVec surface_b(const Fan& fan) {
  IntVec b = surface_selfintersections(fan);
  for (auto& x : b) x = -x;
  return b;
}

IntVec surface_e(const Fan& fan, const IntVec& c) {
  IntVec b = surface_b(fan);
  const std::size_t n = fan.n();
  IntVec e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = c[(i + n - 1) % n] + c[(i + 1) % n] - b[i] * c[i];
  return e;
}

std::vector<PairConditions> surface_conditions(const Fan& fan, const IntVec& c) {
  if (c.size() != fan.n()) throw std::invalid_argument("divisor needs one coefficient per ray");
  IntVec b = surface_b(fan);
  IntVec e = surface_e(fan, c);
  std::vector<PairConditions> out;
  for (const auto& pr : opposite_pairs(fan, class_group(fan))) {
    PairConditions pc;
    pc.pair = pr;
    pc.sum_ok = c[pr.p] + c[pr.q] == -1;
    pc.bounds_ok = pc.symmetric_ok = true;
    for (auto i : indices_of(pr.A1 | pr.A2)) {
      if (e[i] < -1 || e[i] > b[i] - 1) pc.bounds_ok = false;
      Int hi = b[i] - 1 < 1 ? Int(b[i] - 1) : Int(1);
      if (e[i] < -1 || e[i] > hi) pc.symmetric_ok = false;
    }
    out.push_back(pc);
  }
  return out;
}

bool smooth_necessary_conditions(const Fan& fan, const IntVec& c) {
  for (const auto& pc : surface_conditions(fan, c))
    if (pc.sum_ok && pc.bounds_ok) return true;
  return false;
}

bool symmetric_conditions(const Fan& fan, const IntVec& c) {
  for (const auto& pc : surface_conditions(fan, c))
    if (pc.symmetric_ok) return true;
  return false;
}

}  // namespace toric
