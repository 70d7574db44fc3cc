#include "toric/cohomology.hpp"

#include <stdexcept>

#include "toric/classgroup.hpp"
#include "toric/discriminantal.hpp"

namespace toric {

Mask signature(const Fan& fan, const IntVec& c, const IntVec& m) {
  Mask I = 0;
  for (std::size_t i = 0; i < fan.n(); ++i)
    if (dot(fan.ray(i), m) < -c[i]) I |= Mask(1) << i;
  return I;
}

System region_system(const Fan& fan, const IntVec& c, Mask I) {
  System sys;
  for (std::size_t i = 0; i < fan.n(); ++i) {
    Ineq q;
    bool in = I & (Mask(1) << i);
    for (std::size_t j = 0; j < fan.d(); ++j) q.a.push_back(in ? fan.rays(i, j) : Int(-fan.rays(i, j)));
    q.b = in ? Int(-c[i]) : c[i];
    q.strict = in;
    sys.push_back(q);
  }
  return sys;
}

std::vector<SignatureRegion> realized_signatures(const Fan& fan, const IntVec& c) {
  std::vector<SignatureRegion> out;
  for (Mask I = 0; I <= fan.all(); ++I) {
    System sys = region_system(fan, c, I);
    if (!rational_feasible(sys, fan.d())) continue;
    SignatureRegion r;
    r.I = I;
    r.system = sys;
    r.bounded = is_bounded(sys, fan.d());
    r.count = count_lattice_points(sys, fan.d());
    out.push_back(std::move(r));
    if (I == fan.all()) break;
  }
  return out;
}

const Dim& GradedCohomology::operator[](std::size_t i) const {
  static const Dim zero;
  return i < h.size() ? h[i] : zero;
}

bool GradedCohomology::finite() const {
  for (const auto& x : h)
    if (x.infinite) return false;
  return true;
}

bool GradedCohomology::vanishes_above(std::size_t i) const {
  for (std::size_t j = i + 1; j < h.size(); ++j)
    if (!h[j].zero()) return false;
  return true;
}

CohomologyEngine::CohomologyEngine(const Fan& fan, std::vector<Mask> V, Field field)
    : fan_(fan), V_(std::move(V)), field_(field) {
  if (fan.n() > 20) throw std::invalid_argument("cohomology engine supports at most 20 rays");
  SimplicialComplex K = simplicial_model(fan);
  SimplicialComplex KV = subvariety_complex(fan, V_);
  table_.resize(std::size_t(1) << fan.n());
  top_ = fan.d();
  for (Mask I = 0; I <= fan.all(); ++I) {
    std::vector<Mask> faces;
    for (auto f : K.faces)
      if (subset_of(f, I) && !KV.contains(f)) faces.push_back(f);
    table_[I] = cohomology_of_faces(faces, field_);
    if (!table_[I].all_zero()) {
      contributing_.push_back(I);
      // degree k of the pair feeds h^{k+1}
      top_ = std::max(top_, table_[I].dims.size() - 1);
    }
    if (I == fan.all()) break;
  }
}

GradedCohomology CohomologyEngine::compute(const IntVec& c, std::size_t char_cap) const {
  if (c.size() != fan_.n()) throw std::invalid_argument("divisor needs one coefficient per ray");
  GradedCohomology out;
  out.h.assign(top_ + 1, Dim{});
  const std::size_t d = fan_.d();
  for (Mask I : contributing_) {
    System sys = region_system(fan_, c, I);
    LatticeCount cnt = count_lattice_points(sys, d);
    if (!cnt.infinite && cnt.count == 0) continue;
    const auto& dims = table_[I].dims;
    for (std::size_t k = 0; k < dims.size(); ++k) {
      if (dims[k] == 0) continue;
      Dim& h = out.h[k];
      if (cnt.infinite)
        h.infinite = true;
      else
        h.value += cnt.count * Int(static_cast<unsigned long>(dims[k]));
    }
    if (char_cap > 0 && !cnt.infinite) {
      for_each_lattice_point(sys, d, [&](const IntVec& m) {
        for (std::size_t k = 0; k < dims.size(); ++k) {
          if (dims[k] == 0) continue;
          if (out.characters.size() >= char_cap) {
            out.truncated = true;
            return;
          }
          out.characters.push_back({m, I, static_cast<int>(k), dims[k]});
        }
      });
    }
  }
  for (auto& h : out.h)
    if (h.infinite) h.value = 0;
  return out;
}

bool CohomologyEngine::vanishes_below(const IntVec& c, std::size_t k) const {
  for (Mask I : contributing_) {
    const auto& dims = table_[I].dims;
    bool relevant = false;
    for (std::size_t j = 0; j < dims.size() && j < k; ++j)
      if (dims[j] != 0) relevant = true;
    if (!relevant) continue;
    if (has_lattice_point(region_system(fan_, c, I), fan_.d())) return false;
  }
  return true;
}

GradedCohomology global_cohomology(const Fan& fan, const IntVec& c, Field field) {
  return CohomologyEngine(fan, whole_variety(), field).compute(c);
}

GradedCohomology local_cohomology(const Fan& fan, const std::vector<Mask>& V, const IntVec& c, Field field) {
  return CohomologyEngine(fan, V, field).compute(c);
}

std::optional<Int> euler_characteristic(const Fan& fan, const IntVec& c) {
  auto h = global_cohomology(fan, c);
  Int e = 0;
  for (std::size_t i = 0; i < h.h.size(); ++i) {
    if (h.h[i].infinite) return std::nullopt;
    e += (i % 2 == 0 ? 1 : -1) * h.h[i].value;
  }
  return e;
}

LatticeCount polytope_points(const Fan& fan, const IntVec& c) {
  return count_lattice_points(region_system(fan, c, 0), fan.d());
}

int polytope_dim(const Fan& fan, const IntVec& c) {
  System sys = region_system(fan, c, 0);
  if (!rational_feasible(sys, fan.d())) return -1;
  auto vs = vertices(sys, fan.d());
  if (vs.empty()) return -1;
  std::vector<RatVec> diffs;
  for (const auto& v : vs) {
    RatVec w(v.size());
    for (std::size_t j = 0; j < v.size(); ++j) w[j] = v[j] - vs[0][j];
    diffs.push_back(w);
  }
  return static_cast<int>(span_basis(diffs, fan.d()).size());
}

bool is_mcm_sheaf(const Fan& fan, const IntVec& c) {
  for (Mask sigma : fan.max_cones) {
    auto idx = indices_of(sigma);
    Fan chart;
    chart.rays = fan.rays.select_rows(idx);
    Mask all = (Mask(1) << idx.size()) - 1;
    chart.max_cones = {all};
    IntVec cs;
    for (auto i : idx) cs.push_back(c[i]);
    std::size_t dim = cone_dim(fan.rays, sigma);
    CohomologyEngine eng(chart, {all});
    if (!eng.vanishes_below(cs, dim)) return false;
  }
  return true;
}

SerreCheck serre_duality_check(const Fan& fan, const IntVec& c) {
  SerreCheck r;
  r.precondition = is_mcm_sheaf(fan, c);
  CohomologyEngine eng(fan, whole_variety());
  auto h = eng.compute(c);
  IntVec k(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) k[i] = -1 - c[i];
  auto hk = eng.compute(k);
  const std::size_t d = fan.d();
  r.holds = true;
  for (std::size_t i = 0; i <= std::max(h.h.size(), hk.h.size()); ++i) {
    if (i > d) {
      if (!h[i].zero() || !hk[i].zero()) r.holds = false;
      continue;
    }
    if (!(h[i] == hk[d - i])) r.holds = false;
  }
  return r;
}

Iitaka iitaka_dimension(const Fan& fan, const IntVec& c) {
  Arrangement arr = arrangement(fan);
  if (!nef_cone(fan, arr).cone.contains(arr.A.rational(c)))
    throw std::invalid_argument("divisor is not nef: " + to_string(c));
  Iitaka out;
  Mask T = 0;
  for (const auto& C : arr.circuits) {
    if (!is_fibrational(C) || circuit_value(OrientedCircuit{C, 1}, c) != 0) continue;
    out.fib.push_back(C);
    T |= C.support;
  }
  out.kappa = static_cast<int>(fan.d()) - static_cast<int>(rank(fan.rays.select_rows(indices_of(T))));
  return out;
}

bool antinef_vanishing_check(const Fan& fan, const IntVec& c) {
  const std::size_t kappa = static_cast<std::size_t>(iitaka_dimension(fan, c).kappa);
  IntVec m(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) m[i] = -c[i];
  auto h = global_cohomology(fan, m);
  for (std::size_t i = 0; i < h.h.size(); ++i)
    if (i != kappa && !h.h[i].zero()) return false;
  return true;
}

}  // namespace toric
