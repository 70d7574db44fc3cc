#include "toric/mcm.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace toric {

std::string to_string(const Triangulation& t, bool one_based) {
  std::string s;
  for (auto c : t.cells) s += mask_to_string(c, one_based);
  return s;
}

std::vector<Mask> regular_subdivision(const IntMatrix& rays, Mask support, const RatVec& heights) {
  const std::size_t d = rays.cols();
  auto idx = indices_of(support);
  std::set<Mask> cells;
  // every cell contains a basis; enumerate d-subsets
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t k) {
    if (k == d) {
      std::vector<std::size_t> B;
      for (auto p : pick) B.push_back(idx[p]);
      RatMatrix LB = to_rat(rays.select_rows(B));
      RatVec hB;
      for (auto j : B) hB.push_back(heights[j]);
      auto m = solve(LB, hB);
      if (!m || rank(LB) != d) return;
      Mask S = 0;
      for (auto j : idx) {
        Rat v = dot(to_rat(rays.row(j)), *m);
        if (v > heights[j]) return;
        if (v == heights[j]) S |= Mask(1) << j;
      }
      cells.insert(S);
      return;
    }
    for (std::size_t p = start; p < idx.size(); ++p) {
      pick[k] = p;
      rec(p + 1, k + 1);
    }
  };
  rec(0, 0);
  return std::vector<Mask>(cells.begin(), cells.end());
}

bool is_triangulation_of(const IntMatrix& rays, Mask support, const std::vector<Mask>& cells) {
  Mask used = 0;
  for (auto c : cells) {
    if (!is_simplicial_cone(rays, c) || cone_dim(rays, c) != rays.cols()) return false;
    used |= c;
  }
  return used == support;
}

bool verify_triangulation(const Fan& cone, const Triangulation& t) {
  Mask sigma = cone.max_cones.at(0);
  auto cells = regular_subdivision(cone.rays, sigma, to_rat(t.heights));
  return cells == t.cells && is_triangulation_of(cone.rays, sigma, cells);
}

AffineCone::AffineCone(const Fan& fan) : fan_(fan), A_(class_group(fan)) {
  if (fan.max_cones.size() != 1) throw std::invalid_argument("affine cone needs exactly one maximal cone");
  sigma_ = fan.max_cones[0];
  if (sigma_ != fan.all()) throw std::invalid_argument("affine cone must use every ray");
  if (cone_dim(fan.rays, sigma_) != fan.d()) throw std::invalid_argument("affine cone must be full-dimensional");
  local_ = std::make_unique<CohomologyEngine>(fan_, std::vector<Mask>{sigma_});
}

bool AffineCone::is_mcm(const IntVec& c) const { return local_->vanishes_below(c, fan_.d()); }

bool AffineCone::simplicial_facets() const {
  for (auto F : cone_facets(fan_.rays, sigma_))
    if (!is_simplicial_cone(fan_.rays, F)) return false;
  return true;
}

namespace {

// Heights scaled to clear denominators.
IntVec integral_heights(const RatVec& h) {
  Int den = 1;
  for (const auto& x : h) den = lcm(den, Int(x.get_den()));
  IntVec out;
  for (const auto& x : h) out.push_back(Int(x * den));
  return out;
}

std::optional<Triangulation> triangulation_from_heights(const Fan& fan, Mask sigma, const RatVec& h) {
  auto cells = regular_subdivision(fan.rays, sigma, h);
  if (!is_triangulation_of(fan.rays, sigma, cells)) return std::nullopt;
  return Triangulation{cells, integral_heights(h)};
}

void add_unique(std::vector<Triangulation>& ts, Triangulation t) {
  for (const auto& u : ts)
    if (u == t) return;
  ts.push_back(std::move(t));
}

void sort_triangulations(std::vector<Triangulation>& ts) {
  std::sort(ts.begin(), ts.end(), [](const Triangulation& a, const Triangulation& b) { return a.cells < b.cells; });
}

}  // namespace

Triangulation AffineCone::pulling_triangulation(std::size_t i) const {
  const std::size_t n = fan_.n();
  if (i >= n) throw std::invalid_argument("ray index out of range");
  // lexicographic pulling: i first, then the remaining rays in index order
  std::vector<std::size_t> order{i};
  for (std::size_t j = 0; j < n; ++j)
    if (j != i) order.push_back(j);
  RatVec h(n, 0);
  Rat w = 1;
  for (std::size_t k = order.size(); k-- > 0;) {
    h[order[k]] = -w;
    w *= Rat(static_cast<long>(4 * n + 4));
  }
  auto t = triangulation_from_heights(fan_, sigma_, h);
  if (!t) throw std::logic_error("pulling heights did not give a triangulation");
  return *t;
}

const std::vector<Triangulation>& AffineCone::regular_triangulations() const {
  if (triangulations_) return *triangulations_;
  if (fan_.n() - fan_.d() > 3) throw std::invalid_argument("regular triangulations limited to n - d <= 3");
  Arrangement arr = arrangement(fan_);
  const std::size_t r = arr.r();
  std::vector<IntVec> hyper;
  {
    std::set<IntVec> seen;
    for (const auto& c : arr.circuits) {
      IntVec f = primitive(circuit_functional(arr.A, OrientedCircuit{c, 1}));
      IntVec g = f;
      for (auto& x : g) x = -x;
      if (seen.count(f) || seen.count(g)) continue;
      seen.insert(f);
      hyper.push_back(f);
    }
  }
  // chambers as strict sign constraints
  std::vector<System> chambers{System{}};
  for (const auto& f : hyper) {
    std::vector<System> next;
    for (const auto& ch : chambers)
      for (int s : {1, -1}) {
        System sys = ch;
        Ineq q;
        for (const auto& x : f) q.a.push_back(-s * x);
        q.b = 0;
        q.strict = true;
        sys.push_back(q);
        if (rational_feasible(sys, r)) next.push_back(sys);
      }
    chambers = next;
  }
  std::vector<Triangulation> out;
  for (const auto& ch : chambers) {
    std::vector<RatVec> ineqs;
    for (const auto& q : ch) {
      RatVec a;
      for (const auto& x : q.a) a.push_back(Rat(-x));
      ineqs.push_back(a);
    }
    RatCone cone = cone_from_inequalities(ineqs, {}, r);
    RatVec x(r, 0);
    for (const auto& g : cone.generators)
      for (std::size_t k = 0; k < r; ++k) x[k] += g[k];
    IntVec xi = primitive(x);
    if (xi.empty()) xi.assign(r, 0);
    IntVec c = arr.A.lift(xi);
    auto t = triangulation_from_heights(fan_, sigma_, to_rat(c));
    if (t) add_unique(out, *t);
  }
  sort_triangulations(out);
  triangulations_ = out;
  return *triangulations_;
}

std::vector<Triangulation> AffineCone::regular_triangulations_grid(long K) const {
  const std::size_t n = fan_.n(), d = fan_.d();
  // a basis B0 carries height zero; the other heights run over the grid
  std::vector<std::size_t> free;
  Mask B0 = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mask T = B0 | (Mask(1) << j);
    if (popcount(B0) < static_cast<int>(d) && rank(fan_.rays.select_rows(indices_of(T))) == static_cast<std::size_t>(popcount(T)))
      B0 = T;
    else
      free.push_back(j);
  }
  std::vector<Triangulation> out;
  std::vector<long> g(free.size(), -K);
  while (true) {
    RatVec h(n, 0);
    for (std::size_t k = 0; k < free.size(); ++k) h[free[k]] = g[k];
    auto t = triangulation_from_heights(fan_, sigma_, h);
    if (t) add_unique(out, *t);
    std::size_t k = 0;
    while (k < g.size() && ++g[k] > K) g[k++] = -K;
    if (k == g.size()) break;
  }
  sort_triangulations(out);
  return out;
}

DimVec AffineCone::pushforward_vanishing(const Triangulation& t, const IntVec& c) const {
  auto it = resolved_.find(t.cells);
  if (it == resolved_.end()) {
    Resolved r;
    r.fan = std::make_shared<Fan>(fan_);
    r.fan->max_cones = t.cells;
    r.fan->subvariety.clear();
    r.engine = std::make_shared<CohomologyEngine>(*r.fan, whole_variety());
    it = resolved_.emplace(t.cells, r).first;
  }
  return it->second.engine->compute(c).h;
}

bool is_mcm(const Fan& fan, const IntVec& c) { return AffineCone(fan).is_mcm(c); }

long default_mcm_radius(const ClassGroup& A) {
  Int mx = 0;
  for (const auto& v : gale_transform_integral(A))
    for (const auto& x : v) mx = std::max(mx, Int(abs(x)));
  return std::max(8L, 2 * mx.get_si());
}

McmEnumeration enumerate_mcm(const AffineCone& cone, long radius) {
  McmEnumeration e;
  e.radius = radius > 0 ? radius : default_mcm_radius(cone.A());
  e.outer_radius = e.radius + (e.radius + 1) / 2;
  auto lift = [&](const IntVec& x) {
    const std::size_t r = cone.A().rank();
    return cone.A().lift(IntVec(x.begin(), x.begin() + r), IntVec(x.begin() + r, x.end()));
  };
  std::size_t outer = 0;
  for (const auto& x : window_classes(cone.A(), e.outer_radius)) {
    if (!cone.is_mcm(lift(x))) continue;
    bool inner = true;
    for (std::size_t k = 0; k < cone.A().rank(); ++k)
      if (abs(x[k]) > e.radius) inner = false;
    if (inner)
      e.classes.push_back(x);
    else
      ++outer;
  }
  std::sort(e.classes.begin(), e.classes.end());
  e.stable = outer == 0;
  return e;
}

CriterionReport mcm_criterion_report(const AffineCone& cone, const IntVec& c) {
  CriterionReport r;
  r.hypothesis_ok = cone.simplicial_facets();
  r.mcm = cone.is_mcm(c);
  r.all_triangulations_vanish = true;
  for (const auto& t : cone.regular_triangulations()) {
    auto h = cone.pushforward_vanishing(t, c);
    for (std::size_t i = 1; i < h.size(); ++i)
      if (!h[i].zero()) {
        r.all_triangulations_vanish = false;
        r.witness = t;
        return r;
      }
  }
  return r;
}

bool circuit_cone_mcm(const Fan& fan, const IntVec& c) {
  auto cs = enumerate_circuits(fan.rays);
  if (cs.size() != 1 || cs[0].support != fan.all())
    throw std::invalid_argument("rays do not form a single circuit");
  OrientedCircuit oc{cs[0], 1};
  if (popcount(oc.plus()) < 2 || popcount(oc.minus()) < 2)
    throw std::invalid_argument("circuit needs at least two positive and two negative entries");
  auto Q = circuit_quotient(fan.rays, oc.circuit);
  return in_F(Q, oc, c) && in_F(Q, oc.opposite(), c);
}

}  // namespace toric
