#include "toric/discriminantal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

RatVec normalized(const RatVec& v) { return to_rat(primitive(v)); }

bool is_zero_vec(const RatVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

RatVec scaled_diff(const Rat& s, const RatVec& a, const Rat& t, const RatVec& b) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i] - t * b[i];
  return out;
}

struct DD {
  std::vector<RatVec> rays;
  std::vector<RatVec> lin;
};

// Double description: {x : a.x >= 0 for a in ineqs} as lineality + cone(rays).
DD double_description(const std::vector<RatVec>& ineqs_in, std::size_t r) {
  std::vector<RatVec> ineqs;
  {
    std::set<RatVec> seen;
    for (const auto& a : ineqs_in) {
      if (is_zero_vec(a)) continue;
      RatVec n = normalized(a);
      if (seen.insert(n).second) ineqs.push_back(n);
    }
  }
  DD dd;
  for (std::size_t k = 0; k < r; ++k) {
    RatVec e(r, 0);
    e[k] = 1;
    dd.lin.push_back(e);
  }
  std::vector<RatVec> applied;
  for (const auto& a : ineqs) {
    std::size_t pivot = dd.lin.size();
    for (std::size_t k = 0; k < dd.lin.size(); ++k)
      if (dot(a, dd.lin[k]) != 0) {
        pivot = k;
        break;
      }
    if (pivot < dd.lin.size()) {
      RatVec l0 = dd.lin[pivot];
      Rat a0 = dot(a, l0);
      if (a0 < 0) {
        for (auto& x : l0) x = -x;
        a0 = -a0;
      }
      std::vector<RatVec> lin2;
      for (std::size_t k = 0; k < dd.lin.size(); ++k)
        if (k != pivot) lin2.push_back(scaled_diff(1, dd.lin[k], dot(a, dd.lin[k]) / a0, l0));
      for (auto& g : dd.rays) g = normalized(scaled_diff(1, g, dot(a, g) / a0, l0));
      dd.rays.push_back(normalized(l0));
      dd.lin = lin2;
      applied.push_back(a);
      continue;
    }
    std::vector<std::size_t> pos, neg, zero;
    for (std::size_t k = 0; k < dd.rays.size(); ++k) {
      Rat v = dot(a, dd.rays[k]);
      (v > 0 ? pos : v < 0 ? neg : zero).push_back(k);
    }
    if (neg.empty()) {
      applied.push_back(a);
      continue;
    }
    std::vector<std::vector<bool>> tight(dd.rays.size(), std::vector<bool>(applied.size()));
    for (std::size_t k = 0; k < dd.rays.size(); ++k)
      for (std::size_t j = 0; j < applied.size(); ++j) tight[k][j] = dot(applied[j], dd.rays[k]) == 0;
    std::vector<RatVec> next;
    for (auto k : pos) next.push_back(dd.rays[k]);
    for (auto k : zero) next.push_back(dd.rays[k]);
    for (auto p : pos)
      for (auto q : neg) {
        bool adjacent = true;
        for (std::size_t g = 0; g < dd.rays.size() && adjacent; ++g) {
          if (g == p || g == q) continue;
          bool covers = true;
          for (std::size_t j = 0; j < applied.size(); ++j)
            if (tight[p][j] && tight[q][j] && !tight[g][j]) {
              covers = false;
              break;
            }
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        Rat ap = dot(a, dd.rays[p]), aq = dot(a, dd.rays[q]);
        next.push_back(normalized(scaled_diff(ap, dd.rays[q], aq, dd.rays[p])));
      }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    dd.rays = next;
    applied.push_back(a);
  }
  std::sort(dd.rays.begin(), dd.rays.end());
  return dd;
}

std::vector<RatVec> with_negatives(const std::vector<RatVec>& a, const std::vector<RatVec>& eqs) {
  std::vector<RatVec> out = a;
  for (const auto& e : eqs) {
    out.push_back(e);
    RatVec m = e;
    for (auto& x : m) x = -x;
    out.push_back(m);
  }
  return out;
}

RatCone finish(std::size_t r, const DD& primal) {
  RatCone c;
  c.ambient = r;
  c.generators = primal.rays;
  c.lineality = primal.lin;
  DD dual = double_description(with_negatives(primal.rays, primal.lin), r);
  c.inequalities = dual.rays;
  c.equations = dual.lin;
  return c;
}

}  // namespace

bool RatCone::contains(const RatVec& x) const {
  for (const auto& a : inequalities)
    if (dot(a, x) < 0) return false;
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  return true;
}

bool RatCone::contains_interior(const RatVec& x) const {
  for (const auto& a : inequalities)
    if (dot(a, x) <= 0) return false;
  for (const auto& e : equations)
    if (dot(e, x) != 0) return false;
  return true;
}

std::size_t RatCone::dim() const { return ambient - equations.size(); }

RatCone cone_from_generators(const std::vector<RatVec>& gens, std::size_t r) {
  DD dual = double_description(gens, r);
  DD primal = double_description(with_negatives(dual.rays, dual.lin), r);
  return finish(r, primal);
}

RatCone cone_from_inequalities(const std::vector<RatVec>& ineqs, const std::vector<RatVec>& eqs,
                               std::size_t r) {
  return finish(r, double_description(with_negatives(ineqs, eqs), r));
}

RatCone intersect(const RatCone& a, const RatCone& b) {
  auto ineqs = a.inequalities;
  ineqs.insert(ineqs.end(), b.inequalities.begin(), b.inequalities.end());
  auto eqs = a.equations;
  eqs.insert(eqs.end(), b.equations.begin(), b.equations.end());
  return cone_from_inequalities(ineqs, eqs, a.ambient);
}

bool same_cone(const RatCone& a, const RatCone& b) {
  auto inside = [](const RatCone& x, const RatCone& y) {
    for (const auto& g : x.generators)
      if (!y.contains(g)) return false;
    for (const auto& l : x.lineality) {
      RatVec m = l;
      for (auto& v : m) v = -v;
      if (!y.contains(l) || !y.contains(m)) return false;
    }
    return true;
  };
  return a.ambient == b.ambient && inside(a, b) && inside(b, a);
}

RatCone negate(const RatCone& c) {
  RatCone m = c;
  for (auto& g : m.generators)
    for (auto& x : g) x = -x;
  for (auto& a : m.inequalities)
    for (auto& x : a) x = -x;
  std::sort(m.generators.begin(), m.generators.end());
  return m;
}

std::vector<RatCone> faces(const RatCone& c) {
  const std::size_t g = c.generators.size();
  if (g > 20) throw std::invalid_argument("too many generators for face enumeration");
  std::vector<std::vector<bool>> tight(g, std::vector<bool>(c.inequalities.size()));
  for (std::size_t k = 0; k < g; ++k)
    for (std::size_t j = 0; j < c.inequalities.size(); ++j)
      tight[k][j] = dot(c.inequalities[j], c.generators[k]) == 0;
  std::set<Mask> seen;
  std::vector<RatCone> out;
  for (Mask S = 0; S < (Mask(1) << g); ++S) {
    // closure: generators tight on every inequality tight on all of S
    std::vector<bool> common(c.inequalities.size(), true);
    for (auto k : indices_of(S))
      for (std::size_t j = 0; j < common.size(); ++j) common[j] = common[j] && tight[k][j];
    Mask closure = 0;
    for (std::size_t k = 0; k < g; ++k) {
      bool ok = true;
      for (std::size_t j = 0; j < common.size(); ++j)
        if (common[j] && !tight[k][j]) ok = false;
      if (ok) closure |= Mask(1) << k;
    }
    if (!seen.insert(closure).second) continue;
    std::vector<RatVec> gens;
    for (auto k : indices_of(closure)) gens.push_back(c.generators[k]);
    gens = with_negatives(gens, c.lineality);
    out.push_back(cone_from_generators(gens, c.ambient));
  }
  std::sort(out.begin(), out.end(), [](const RatCone& a, const RatCone& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.generators < b.generators;
  });
  return out;
}

std::vector<std::size_t> tight_set(const RatCone& c, const RatVec& x) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < c.inequalities.size(); ++j)
    if (dot(c.inequalities[j], x) == 0) out.push_back(j);
  return out;
}

const RatVec& Arrangement::functional(const OrientedCircuit& oc) const {
  for (std::size_t k = 0; k < oriented.size(); ++k)
    if (oriented[k] == oc) return functionals[k];
  throw std::invalid_argument("oriented circuit not in the arrangement");
}

Arrangement arrangement(const Fan& fan) {
  Arrangement arr{class_group(fan), {}, {}, {}, {}};
  arr.gale = gale_transform(arr.A);
  arr.circuits = enumerate_circuits(fan.rays);
  arr.oriented = oriented_circuits(arr.circuits);
  for (const auto& oc : arr.oriented) arr.functionals.push_back(circuit_functional(arr.A, oc));
  return arr;
}

Hyperplane hyperplane(const Arrangement& arr, const Circuit& c) {
  Hyperplane h{c, {}, circuit_functional(arr.A, OrientedCircuit{c, 1})};
  for (std::size_t i = 0; i < arr.A.n; ++i)
    if (!(c.support & (Mask(1) << i))) h.spanning.push_back(i);
  return h;
}

std::string to_string(Side s) {
  switch (s) {
    case Side::interior: return "interior";
    case Side::boundary: return "boundary";
    default: return "outside";
  }
}

Side side(const Arrangement& arr, const OrientedCircuit& oc, const RatVec& x) {
  Rat v = dot(circuit_functional(arr.A, oc), x);
  return v > 0 ? Side::interior : v == 0 ? Side::boundary : Side::outside;
}

RatCone half_space(const Arrangement& arr, const OrientedCircuit& oc) {
  return cone_from_inequalities({circuit_functional(arr.A, oc)}, {}, arr.r());
}

std::vector<RatVec> span_H(const Arrangement& arr, Mask I) {
  std::vector<RatVec> vs;
  for (std::size_t i = 0; i < arr.A.n; ++i)
    if (!(I & (Mask(1) << i))) vs.push_back(arr.gale[i]);
  return span_basis(vs, arr.r());
}

std::vector<OrientedCircuit> nef_relevant_circuits(const Fan& fan, const Arrangement& arr) {
  SimplicialComplex K = simplicial_model(fan);
  std::vector<OrientedCircuit> out;
  for (const auto& oc : arr.oriented)
    for (auto j : indices_of(oc.plus()))
      if (K.contains(oc.circuit.support & ~(Mask(1) << j))) {
        out.push_back(oc);
        break;
      }
  return out;
}

RatCone nef_cone_from_bases(const Fan& fan, const Arrangement& arr) {
  SimplicialComplex K = simplicial_model(fan);
  std::vector<RatVec> ineqs, eqs;
  for (auto B : K.faces) {
    if (popcount(B) != static_cast<int>(fan.d())) continue;
    if (rank(fan.rays.select_rows(indices_of(B))) != fan.d()) continue;
    std::vector<RatVec> gens;
    for (std::size_t i = 0; i < fan.n(); ++i)
      if (!(B & (Mask(1) << i))) gens.push_back(arr.gale[i]);
    RatCone KB = cone_from_generators(gens, arr.r());
    ineqs.insert(ineqs.end(), KB.inequalities.begin(), KB.inequalities.end());
    eqs.insert(eqs.end(), KB.equations.begin(), KB.equations.end());
  }
  return cone_from_inequalities(ineqs, eqs, arr.r());
}

RatCone nef_cone_from_halfspaces(const Fan& fan, const Arrangement& arr) {
  std::vector<RatVec> ineqs;
  for (const auto& oc : nef_relevant_circuits(fan, arr)) ineqs.push_back(circuit_functional(arr.A, oc));
  return cone_from_inequalities(ineqs, {}, arr.r());
}

NefCone nef_cone(const Fan& fan, const Arrangement& arr) {
  NefCone n{nef_cone_from_halfspaces(fan, arr), false};
  n.routes_agree = same_cone(n.cone, nef_cone_from_bases(fan, arr));
  return n;
}

std::vector<OrientedCircuit> oriented_flat(const Arrangement& arr, const RatCone& S) {
  auto pts = with_negatives(S.generators, S.lineality);
  std::vector<OrientedCircuit> out;
  for (std::size_t k = 0; k < arr.oriented.size(); ++k) {
    bool ok = true;
    for (const auto& p : pts)
      if (dot(arr.functionals[k], p) < 0) ok = false;
    if (ok) out.push_back(arr.oriented[k]);
  }
  return out;
}

std::vector<OrientedCircuit> nef_oriented_flat(const Arrangement& arr, const RatCone& nef) {
  return oriented_flat(arr, nef);
}

std::vector<OrientedCircuit> face_oriented_flat(const Arrangement& arr, const RatCone& face) {
  return oriented_flat(arr, negate(face));
}

namespace {

std::vector<MoriGenerator> wall_candidates(const Fan& fan, const Arrangement& arr) {
  auto pic = picard_rational(fan, arr.A);
  std::vector<MoriGenerator> out;
  for (const auto& oc : nef_relevant_circuits(fan, arr))
    for (const auto& w : wall_forms(fan.rays, oc)) {
      MoriGenerator g{oc, w, lifted_wall_form(arr.A, oc, w), {}};
      for (const auto& p : pic) g.n1.push_back(dot(g.form, p));
      if (!is_zero_vec(g.n1)) out.push_back(g);
    }
  return out;
}

}  // namespace

RatCone mori_cone(const Fan& fan, const Arrangement& arr) {
  std::vector<RatVec> gens;
  for (const auto& g : wall_candidates(fan, arr)) gens.push_back(g.n1);
  return cone_from_generators(gens, picard_rational(fan, arr.A).size());
}

std::vector<MoriGenerator> mori_generators(const Fan& fan, const Arrangement& arr) {
  auto cands = wall_candidates(fan, arr);
  std::vector<RatVec> gens;
  for (const auto& g : cands) gens.push_back(g.n1);
  RatCone cone = cone_from_generators(gens, picard_rational(fan, arr.A).size());
  std::vector<MoriGenerator> out;
  for (const auto& ray : cone.generators)
    for (const auto& g : cands)
      if (normalized(g.n1) == ray) {
        out.push_back(g);
        break;
      }
  return out;
}

RatCone secondary_cone(const Fan& fan, const Arrangement& arr, Mask I, Mask B) {
  if (popcount(B) != static_cast<int>(fan.d()) || rank(fan.rays.select_rows(indices_of(B))) != fan.d())
    throw std::invalid_argument("B is not a basis: " + mask_to_string(B, true));
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < fan.n(); ++i) {
    Mask bit = Mask(1) << i;
    if (B & bit) continue;
    RatVec v = arr.gale[i];
    if (I & bit)
      for (auto& x : v) x = -x;
    gens.push_back(v);
  }
  return cone_from_generators(gens, arr.r());
}

RatCone orthant_cone(const Arrangement& arr, Mask I) {
  std::vector<RatVec> gens;
  for (std::size_t i = 0; i < arr.A.n; ++i) {
    RatVec v = arr.gale[i];
    if (I & (Mask(1) << i))
      for (auto& x : v) x = -x;
    gens.push_back(v);
  }
  return cone_from_generators(gens, arr.r());
}

bool chamber_equality_test(const Fan& fan, const Arrangement& arr, long radius) {
  const std::size_t r = arr.r(), n = fan.n();
  if (r == 0 || r > 3) throw std::invalid_argument("chamber test supports class group rank 1..3");
  std::vector<RatCone> cones;
  for (Mask I = 0; I < (Mask(1) << n); ++I) {
    cones.push_back(orthant_cone(arr, I));
    for (Mask B = 0; B < (Mask(1) << n); ++B)
      if (popcount(B) == static_cast<int>(fan.d()) && rank(fan.rays.select_rows(indices_of(B))) == fan.d())
        cones.push_back(secondary_cone(fan, arr, I, B));
  }
  std::vector<RatVec> hyper;
  for (const auto& c : arr.circuits) hyper.push_back(circuit_functional(arr.A, OrientedCircuit{c, 1}));

  using Key = std::vector<int>;
  std::map<Key, Key> fwd, bwd;
  const long steps = 4 * radius;
  std::vector<long> idx(r, 0);
  while (true) {
    RatVec x(r);
    for (std::size_t k = 0; k < r; ++k) x[k] = Rat(idx[k] - 2 * radius, 2);
    Key a, b;
    for (const auto& h : hyper) a.push_back(sgn(dot(h, x)));
    for (const auto& c : cones) {
      if (!c.contains(x)) {
        b.push_back(-1);
        continue;
      }
      // the face containing x in its interior is determined by its tight set
      int code = 0;
      for (auto j : tight_set(c, x)) code |= 1 << j;
      b.push_back(code);
    }
    auto f = fwd.emplace(a, b);
    if (f.first->second != b) return false;
    auto g = bwd.emplace(b, a);
    if (g.first->second != a) return false;
    std::size_t k = 0;
    while (k < r && ++idx[k] > steps) idx[k++] = 0;
    if (k == r) break;
  }
  return true;
}

}  // namespace toric
