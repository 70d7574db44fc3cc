#include "toric/fan.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "toric/polyhedron.hpp"

namespace toric {

Mask mask_of(const std::vector<std::size_t>& idx) {
  Mask m = 0;
  for (auto i : idx) {
    if (i >= 32) throw std::out_of_range("ray index too large for a mask");
    m |= Mask(1) << i;
  }
  return m;
}

std::vector<std::size_t> indices_of(Mask m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

std::string mask_to_string(Mask m, bool one_based) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : indices_of(m)) {
    if (!first) os << ',';
    os << (one_based ? i + 1 : i);
    first = false;
  }
  os << '}';
  return os.str();
}

std::vector<Mask> Fan::cones() const {
  std::set<Mask> all_faces;
  for (auto c : max_cones)
    for (auto f : cone_faces(rays, c)) all_faces.insert(f);
  return {all_faces.begin(), all_faces.end()};
}

Fan make_fan(const std::vector<std::vector<long>>& rays, const std::vector<std::vector<std::size_t>>& cones,
             std::string name) {
  if (rays.empty()) throw std::invalid_argument("fan needs at least one ray");
  Fan f;
  f.name = std::move(name);
  f.rays = int_matrix(rays, rays[0].size());
  for (const auto& c : cones) f.max_cones.push_back(mask_of(c));
  return f;
}

namespace {

using nlohmann::json;

IntVec json_int_vec(const json& v, const std::string& ctx) {
  if (!v.is_array()) throw std::runtime_error(ctx + ": expected a list of integers");
  IntVec out;
  for (const auto& x : v) {
    if (x.is_number_integer())
      out.emplace_back(x.get<long>());
    else if (x.is_string())
      out.emplace_back(x.get<std::string>());
    else
      throw std::runtime_error(ctx + ": expected an integer");
  }
  return out;
}

Mask json_cone(const json& v, std::size_t n, const std::string& ctx) {
  if (!v.is_array()) throw std::runtime_error(ctx + ": expected a list of ray indices");
  Mask m = 0;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw std::runtime_error(ctx + ": ray index must be an integer");
    long i = x.get<long>();
    if (i < 0 || static_cast<std::size_t>(i) >= n)
      throw std::runtime_error(ctx + ": ray index " + std::to_string(i) + " out of range");
    if (m & (Mask(1) << i)) throw std::runtime_error(ctx + ": repeated ray index " + std::to_string(i));
    m |= Mask(1) << i;
  }
  return m;
}

}  // namespace

Fan parse_fan(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("fan file: ") + e.what());
  }
  if (!doc.is_object()) throw std::runtime_error("fan file: top level must be an object");
  if (!doc.contains("rays")) throw std::runtime_error("fan file: missing field 'rays'");
  if (!doc.contains("max_cones")) throw std::runtime_error("fan file: missing field 'max_cones'");
  Fan f;
  if (doc.contains("name")) f.name = doc["name"].get<std::string>();
  std::vector<IntVec> rays;
  std::size_t k = 0;
  for (const auto& r : doc["rays"]) {
    rays.push_back(json_int_vec(r, "rays[" + std::to_string(k) + "]"));
    ++k;
  }
  if (rays.empty()) throw std::runtime_error("fan file: 'rays' is empty");
  if (rays.size() > 24) throw std::runtime_error("fan file: more than 24 rays");
  std::size_t d = rays[0].size();
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (rays[i].size() != d)
      throw std::runtime_error("fan file: rays[" + std::to_string(i) + "] has wrong length");
  f.rays = IntMatrix(rays.size(), d);
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < d; ++j) f.rays(i, j) = rays[i][j];
  k = 0;
  for (const auto& c : doc["max_cones"]) {
    f.max_cones.push_back(json_cone(c, rays.size(), "max_cones[" + std::to_string(k) + "]"));
    ++k;
  }
  if (doc.contains("subvariety")) {
    k = 0;
    for (const auto& c : doc["subvariety"]) {
      f.subvariety.push_back(json_cone(c, rays.size(), "subvariety[" + std::to_string(k) + "]"));
      ++k;
    }
  }
  if (doc.contains("basis")) {
    k = 0;
    for (const auto& b : doc["basis"]) {
      auto v = json_int_vec(b, "basis[" + std::to_string(k) + "]");
      if (v.size() != rays.size())
        throw std::runtime_error("basis[" + std::to_string(k) + "]: needs one coefficient per ray");
      f.basis.push_back(v);
      ++k;
    }
  }
  return f;
}

Fan load_fan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fan file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_fan(ss.str());
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

std::size_t cone_dim(const IntMatrix& rays, Mask cone) {
  return rank(rays.select_rows(indices_of(cone)));
}

bool is_simplicial_cone(const IntMatrix& rays, Mask cone) {
  return cone_dim(rays, cone) == static_cast<std::size_t>(popcount(cone));
}

namespace {

void for_subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Mask> cone_facets(const IntMatrix& rays, Mask cone) {
  auto idx = indices_of(cone);
  RatMatrix R = to_rat(rays.select_rows(idx));
  auto red = rref(R);
  std::size_t k = red.pivots.size();
  if (k == 0) return {};
  // coordinates of each ray in a basis of the linear span
  RatMatrix B(k, rays.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < rays.cols(); ++j) B(i, j) = red.R(i, j);
  RatMatrix Bt = B.transpose();
  RatMatrix Y(idx.size(), k);
  for (std::size_t r = 0; r < idx.size(); ++r) {
    auto y = solve(Bt, R.row(r));
    for (std::size_t j = 0; j < k; ++j) Y(r, j) = (*y)[j];
  }
  std::set<Mask> out;
  for_subsets(idx.size(), k - 1, [&](const std::vector<std::size_t>& S) {
    RatMatrix A(S.size(), k);
    for (std::size_t a = 0; a < S.size(); ++a)
      for (std::size_t j = 0; j < k; ++j) A(a, j) = Y(S[a], j);
    auto ns = nullspace(A);
    if (ns.size() != 1) return;
    bool pos = false, neg = false;
    Mask zero = 0;
    for (std::size_t r = 0; r < idx.size(); ++r) {
      Rat v = dot(Y.row(r), ns[0]);
      if (v > 0) pos = true;
      if (v < 0) neg = true;
      if (v == 0) zero |= Mask(1) << idx[r];
    }
    if (!(pos && neg)) out.insert(zero);
  });
  return {out.begin(), out.end()};
}

std::vector<Mask> cone_faces(const IntMatrix& rays, Mask cone) {
  std::set<Mask> seen;
  std::function<void(Mask)> rec = [&](Mask c) {
    if (!seen.insert(c).second) return;
    for (auto f : cone_facets(rays, c)) rec(f);
  };
  rec(cone);
  return {seen.begin(), seen.end()};
}

Validation validate(const Fan& fan) {
  Validation v;
  const std::size_t n = fan.n(), d = fan.d();
  auto err = [&](const std::string& code, const std::string& msg) { v.errors.push_back({code, msg}); };
  for (std::size_t i = 0; i < n; ++i) {
    Int g = gcd_of(fan.ray(i));
    if (g == 0)
      err("zero-ray", "ray " + std::to_string(i) + " is zero");
    else if (g != 1)
      err("non-primitive-ray", "ray " + std::to_string(i) + " = " + to_string(fan.ray(i)) + " is not primitive");
    for (std::size_t j = 0; j < i; ++j)
      if (fan.ray(i) == fan.ray(j))
        err("duplicate-ray", "rays " + std::to_string(j) + " and " + std::to_string(i) + " coincide");
  }
  if (!v.errors.empty()) return v;
  if (rank(fan.rays) < d) v.warnings.push_back({"not-full-dimensional", "rays do not span N_Q"});
  Mask used = 0;
  for (auto c : fan.max_cones) used |= c;
  if (used != fan.all()) v.warnings.push_back({"unused-rays", "rays " + mask_to_string(fan.all() & ~used, false) + " lie in no cone"});

  for (std::size_t k = 0; k < fan.max_cones.size(); ++k) {
    Mask c = fan.max_cones[k];
    auto idx = indices_of(c);
    System sys;
    for (auto i : idx) {
      Ineq q;
      for (std::size_t j = 0; j < d; ++j) q.a.push_back(-fan.rays(i, j));
      q.b = 0;
      q.strict = true;
      sys.push_back(q);
    }
    if (!idx.empty() && !rational_feasible(sys, d)) {
      err("not-strictly-convex", "cone " + mask_to_string(c, false) + " is not strictly convex");
      continue;
    }
    for (auto i : idx) {
      auto others = indices_of(c & ~(Mask(1) << i));
      if (others.empty()) continue;
      RatMatrix A(d, others.size());
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t t = 0; t < others.size(); ++t) A(j, t) = Rat(fan.rays(others[t], j));
      if (lp_feasible_point(A, to_rat(fan.ray(i))))
        err("non-extremal-ray", "ray " + std::to_string(i) + " is not extremal in cone " + mask_to_string(c, false));
    }
  }
  if (!v.errors.empty()) return v;

  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      Mask s = fan.max_cones[a], t = fan.max_cones[b], common = s & t;
      System sys;
      auto row = [&](std::size_t i, int sign, bool strict) {
        Ineq q;
        for (std::size_t j = 0; j < d; ++j) q.a.push_back(sign * fan.rays(i, j));
        q.b = 0;
        q.strict = strict;
        sys.push_back(q);
      };
      for (auto i : indices_of(common)) {
        row(i, 1, false);
        row(i, -1, false);
      }
      for (auto i : indices_of(s & ~common)) row(i, -1, true);
      for (auto i : indices_of(t & ~common)) row(i, 1, true);
      if (!rational_feasible(sys, d))
        err("bad-intersection", "cones " + mask_to_string(s, false) + " and " + mask_to_string(t, false) +
                                    " do not meet in a common face");
    }
  if (!v.errors.empty()) return v;

  bool complete = !fan.max_cones.empty();
  for (auto c : fan.max_cones)
    if (cone_dim(fan.rays, c) != d) complete = false;
  if (complete)
    for (auto c : fan.max_cones)
      for (auto f : cone_facets(fan.rays, c)) {
        int count = 0;
        for (auto c2 : fan.max_cones)
          if (subset_of(f, c2)) ++count;
        if (count != 2) complete = false;
      }
  v.complete = complete;
  return v;
}

bool SimplicialComplex::contains(Mask f) const {
  return std::binary_search(faces.begin(), faces.end(), f);
}

std::vector<Mask> SimplicialComplex::ordered_faces() const {
  std::vector<Mask> out = faces;
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return indices_of(a) < indices_of(b);
  });
  return out;
}

SimplicialComplex complex_from_generators(std::size_t n, const std::vector<Mask>& gens) {
  std::set<Mask> faces;
  for (Mask g : gens) {
    // enumerate all submasks of g
    Mask s = g;
    while (true) {
      faces.insert(s);
      if (s == 0) break;
      s = (s - 1) & g;
    }
  }
  SimplicialComplex K;
  K.n = n;
  K.faces.assign(faces.begin(), faces.end());
  return K;
}

SimplicialComplex simplicial_model(const Fan& fan) { return complex_from_generators(fan.n(), fan.max_cones); }

SimplicialComplex full_subcomplex(const SimplicialComplex& K, Mask I) {
  SimplicialComplex out;
  out.n = K.n;
  for (auto f : K.faces)
    if (subset_of(f, I)) out.faces.push_back(f);
  return out;
}

SimplicialComplex subvariety_complex(const Fan& fan, const std::vector<Mask>& V) {
  auto cones = fan.cones();
  for (auto v : V)
    if (!std::binary_search(cones.begin(), cones.end(), v))
      throw std::invalid_argument("subvariety cone " + mask_to_string(v, false) + " is not a cone of the fan");
  std::vector<Mask> gens;
  for (auto c : cones) {
    bool inside = false;
    for (auto v : V)
      if (subset_of(v, c)) inside = true;
    if (!inside) gens.push_back(c);
  }
  return complex_from_generators(fan.n(), gens);
}

bool is_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& K) {
  if (sub.n != K.n) return false;
  for (auto f : sub.faces)
    if (!K.contains(f)) return false;
  return true;
}

std::vector<Wall> walls(const Fan& fan) {
  for (auto c : fan.max_cones)
    if (!is_simplicial_cone(fan.rays, c))
      throw std::invalid_argument("walls: cone " + mask_to_string(c, false) + " is not simplicial");
  std::vector<Wall> out;
  for (std::size_t a = 0; a < fan.max_cones.size(); ++a)
    for (std::size_t b = a + 1; b < fan.max_cones.size(); ++b) {
      Mask s = fan.max_cones[a], t = fan.max_cones[b];
      int k = popcount(s);
      if (popcount(t) != k || popcount(s & t) != k - 1) continue;
      auto idx = indices_of(s | t);
      RatMatrix A = to_rat(fan.rays.select_rows(idx)).transpose();
      auto ns = nullspace(A);
      if (ns.size() != 1) continue;
      IntVec rel = primitive(ns[0]);
      Wall w;
      w.tau = s & t;
      w.sigma = a;
      w.sigma2 = b;
      w.relation.assign(fan.n(), 0);
      for (std::size_t r = 0; r < idx.size(); ++r) {
        w.relation[idx[r]] = rel[r];
        if (rel[r] != 0) w.circuit |= Mask(1) << idx[r];
      }
      for (auto& x : w.relation)
        if (x != 0) {
          if (x < 0)
            for (auto& y : w.relation) y = -y;
          break;
        }
      out.push_back(w);
    }
  return out;
}

std::vector<std::size_t> circular_order(const IntMatrix& rays) {
  if (rays.cols() != 2) throw std::invalid_argument("circular_order: rays must be planar");
  auto half = [&](std::size_t i) { return rays(i, 1) < 0 || (rays(i, 1) == 0 && rays(i, 0) < 0); };
  std::vector<std::size_t> order(rays.rows());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (half(a) != half(b)) return !half(a);
    Int cross = rays(a, 0) * rays(b, 1) - rays(a, 1) * rays(b, 0);
    return cross > 0;
  });
  auto it = std::find(order.begin(), order.end(), std::size_t(0));
  std::rotate(order.begin(), it, order.end());
  return order;
}

IntVec surface_selfintersections(const Fan& fan) {
  const std::size_t n = fan.n();
  if (fan.d() != 2) throw std::invalid_argument("surface fan must be 2-dimensional");
  auto order = circular_order(fan.rays);
  for (std::size_t i = 0; i < n; ++i)
    if (order[i] != i) throw std::invalid_argument("rays are not listed in counterclockwise order");
  if (!validate(fan).complete) throw std::invalid_argument("surface fan is not complete");
  IntVec a(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t p = (i + n - 1) % n, q = (i + 1) % n;
    Int det = fan.rays(i, 0) * fan.rays(q, 1) - fan.rays(i, 1) * fan.rays(q, 0);
    if (abs(det) != 1)
      throw std::invalid_argument("non-smooth wall between rays " + std::to_string(i) + " and " + std::to_string(q));
    Int sx = fan.rays(p, 0) + fan.rays(q, 0), sy = fan.rays(p, 1) + fan.rays(q, 1);
    // smoothness of both adjacent cones forces s to be a multiple of l_i
    Int k = fan.rays(i, 0) != 0 ? sx / fan.rays(i, 0) : sy / fan.rays(i, 1);
    if (k * fan.rays(i, 0) != sx || k * fan.rays(i, 1) != sy)
      throw std::invalid_argument("rays adjacent to " + std::to_string(i) + " do not sum to a multiple of it");
    a[i] = -k;
  }
  return a;
}

}  // namespace toric
