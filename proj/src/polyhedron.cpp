#include "toric/polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

// Strict rows become non-strict over the integers; rows get divided by gcd(a)
// with the right side floored.
Ineq tighten(Ineq q) {
  if (q.strict) {
    q.b -= 1;
    q.strict = false;
  }
  Int g = gcd_of(q.a);
  if (g > 1) {
    for (auto& x : q.a) x /= g;
    q.b = floor_div(q.b, g);
  }
  return q;
}

Ineq normalize_rational(Ineq q) {
  Int g = gcd_of(q.a);
  g = gcd(g, q.b);
  if (g > 1) {
    for (auto& x : q.a) x /= g;
    q.b /= g;
  }
  return q;
}

bool is_zero(const IntVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

// Keep the tightest row per normal vector; returns false on a violated constant row.
bool simplify(System& sys, bool integer_mode) {
  std::map<std::vector<std::string>, std::size_t> seen;
  System out;
  for (auto q : sys) {
    q = integer_mode ? tighten(q) : normalize_rational(q);
    if (is_zero(q.a)) {
      if (q.b < 0 || (q.strict && q.b == 0)) return false;
      continue;
    }
    std::vector<std::string> key;
    key.reserve(q.a.size());
    for (const auto& x : q.a) key.push_back(x.get_str());
    auto it = seen.find(key);
    if (it == seen.end()) {
      seen.emplace(key, out.size());
      out.push_back(q);
    } else {
      Ineq& p = out[it->second];
      // in rational mode rows with equal normals may differ by scale of b only after
      // normalization by gcd(a, b); compare b/g(a) instead
      if (!integer_mode) {
        Int ga = gcd_of(p.a), gb = gcd_of(q.a);
        Rat bp(p.b, ga), bq(q.b, gb);
        if (bq < bp || (bq == bp && q.strict)) p = q;
      } else if (q.b < p.b) {
        p = q;
      }
    }
  }
  sys.swap(out);
  return true;
}

}  // namespace

std::optional<System> project(System sys, std::size_t dim, std::size_t k, bool integer_mode) {
  if (!simplify(sys, integer_mode)) return std::nullopt;
  for (std::size_t v = dim; v-- > k;) {
    System pos, neg, keep;
    for (auto& q : sys) {
      if (q.a[v] > 0)
        pos.push_back(q);
      else if (q.a[v] < 0)
        neg.push_back(q);
      else
        keep.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& n : neg) {
        Ineq r;
        Int cp = -n.a[v], cn = p.a[v];
        r.a.resize(p.a.size());
        for (std::size_t j = 0; j < p.a.size(); ++j) r.a[j] = cp * p.a[j] + cn * n.a[j];
        r.b = cp * p.b + cn * n.b;
        r.strict = p.strict || n.strict;
        keep.push_back(r);
      }
    sys.swap(keep);
    if (!simplify(sys, integer_mode)) return std::nullopt;
  }
  for (auto& q : sys) q.a.resize(k);
  return sys;
}

bool rational_feasible(const System& sys, std::size_t dim) {
  return project(sys, dim, 0, false).has_value();
}

bool is_bounded(const System& sys, std::size_t dim) {
  System hom;
  for (const auto& q : sys) hom.push_back({q.a, 0, false});
  for (std::size_t j = 0; j < dim; ++j) {
    // move coordinate j to the front and project onto it
    System perm;
    for (const auto& q : hom) {
      Ineq r = q;
      std::swap(r.a[0], r.a[j]);
      perm.push_back(r);
    }
    auto p = project(perm, dim, 1, false);
    bool up = false, down = false;
    for (const auto& q : *p) {
      if (q.a[0] > 0) up = true;
      if (q.a[0] < 0) down = true;
    }
    if (!up || !down) return false;
  }
  return true;
}

namespace {

System substitute_first(const System& sys, const Int& v) {
  System out;
  out.reserve(sys.size());
  for (const auto& q : sys) {
    Ineq r;
    r.a.assign(q.a.begin() + 1, q.a.end());
    r.b = q.b - q.a[0] * v;
    r.strict = q.strict;
    out.push_back(std::move(r));
  }
  return out;
}

struct Range {
  bool empty = false;
  std::optional<Int> lo, hi;
};

Range first_range(const System& sys, std::size_t dim) {
  Range r;
  auto p = project(sys, dim, 1, true);
  if (!p) {
    r.empty = true;
    return r;
  }
  for (const auto& q : *p) {
    if (q.a[0] > 0) {
      Int h = floor_div(q.b, q.a[0]);
      if (!r.hi || h < *r.hi) r.hi = h;
    } else {
      Int l = ceil_div(q.b, q.a[0]);
      if (!r.lo || l > *r.lo) r.lo = l;
    }
  }
  if (r.lo && r.hi && *r.lo > *r.hi) r.empty = true;
  return r;
}

Int count_bounded(const System& sys, std::size_t dim) {
  if (dim == 0) {
    for (const auto& q : sys)
      if (q.b < 0 || (q.strict && q.b == 0)) return 0;
    return 1;
  }
  Range r = first_range(sys, dim);
  if (r.empty) return 0;
  if (!r.lo || !r.hi) throw std::domain_error("lattice enumeration on unbounded system");
  if (dim == 1) return *r.hi - *r.lo + 1;
  Int total = 0;
  for (Int v = *r.lo; v <= *r.hi; ++v) total += count_bounded(substitute_first(sys, v), dim - 1);
  return total;
}

void enum_bounded(const System& sys, std::size_t dim, IntVec& prefix,
                  const std::function<void(const IntVec&)>& fn) {
  if (dim == 0) {
    for (const auto& q : sys)
      if (q.b < 0 || (q.strict && q.b == 0)) return;
    fn(prefix);
    return;
  }
  Range r = first_range(sys, dim);
  if (r.empty) return;
  if (!r.lo || !r.hi) throw std::domain_error("lattice enumeration on unbounded system");
  for (Int v = *r.lo; v <= *r.hi; ++v) {
    prefix.push_back(v);
    enum_bounded(substitute_first(sys, v), dim - 1, prefix, fn);
    prefix.pop_back();
  }
}

System tightened(const System& sys) {
  System out;
  for (const auto& q : sys) out.push_back(tighten(q));
  return out;
}

// Lattice point existence for an unbounded system in integer form (no strict rows).
bool exists_unbounded(const System& sys, std::size_t dim) {
  // split off the lineality space by a unimodular change of coordinates
  IntMatrix A(sys.size(), dim);
  for (std::size_t i = 0; i < sys.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) A(i, j) = sys[i].a[j];
  IntMatrix K = integer_right_kernel(A);
  System red = sys;
  std::size_t rdim = dim;
  if (K.rows() > 0) {
    SNFResult s = smith_normal_form(K);
    auto Vinv = inverse(to_rat(s.V));
    IntMatrix B(dim, dim);  // rows form a basis, first K.rows() span the lineality lattice
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) B(i, j) = (*Vinv)(i, j).get_num();
    IntMatrix AB = A * B.transpose();
    rdim = dim - K.rows();
    red.clear();
    for (std::size_t i = 0; i < sys.size(); ++i) {
      Ineq q;
      for (std::size_t j = K.rows(); j < dim; ++j) q.a.push_back(AB(i, j));
      q.b = sys[i].b;
      red.push_back(q);
    }
    if (rdim == 0) {
      for (const auto& q : red)
        if (q.b < 0) return false;
      return true;
    }
  }
  if (!rational_feasible(red, rdim)) return false;
  // lattice points exist iff one lies in conv(vertices) + [0,1]-combinations of rays
  auto vs = vertices(red, rdim);
  auto rs = extreme_rays(red, rdim);
  System boxed = red;
  for (std::size_t j = 0; j < rdim; ++j) {
    Rat lo = vs.at(0)[j], hi = vs.at(0)[j];
    for (const auto& v : vs) {
      lo = std::min(lo, v[j]);
      hi = std::max(hi, v[j]);
    }
    for (const auto& r : rs) {
      if (r[j] < 0) lo += Rat(r[j]);
      if (r[j] > 0) hi += Rat(r[j]);
    }
    Ineq up, dn;
    up.a.assign(rdim, 0);
    dn.a.assign(rdim, 0);
    up.a[j] = 1;
    up.b = floor_div(hi.get_num(), hi.get_den());
    dn.a[j] = -1;
    dn.b = -ceil_div(lo.get_num(), lo.get_den());
    boxed.push_back(up);
    boxed.push_back(dn);
  }
  return count_bounded(boxed, rdim) > 0;
}

}  // namespace

LatticeCount count_lattice_points(const System& sys, std::size_t dim) {
  System t = tightened(sys);
  LatticeCount out;
  if (is_bounded(t, dim)) {
    out.count = count_bounded(t, dim);
    return out;
  }
  if (exists_unbounded(t, dim)) out.infinite = true;
  return out;
}

bool has_lattice_point(const System& sys, std::size_t dim) {
  System t = tightened(sys);
  if (is_bounded(t, dim)) return count_bounded(t, dim) > 0;
  return exists_unbounded(t, dim);
}

void for_each_lattice_point(const System& sys, std::size_t dim,
                            const std::function<void(const IntVec&)>& fn) {
  System t = tightened(sys);
  IntVec prefix;
  enum_bounded(t, dim, prefix, fn);
}

namespace {

void subsets(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
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

std::vector<RatVec> vertices(const System& sys, std::size_t dim) {
  std::set<RatVec> found;
  if (dim == 0) return {RatVec{}};
  subsets(sys.size(), dim, [&](const std::vector<std::size_t>& S) {
    RatMatrix A(dim, dim);
    RatVec b(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t j = 0; j < dim; ++j) A(k, j) = Rat(sys[S[k]].a[j]);
      b[k] = Rat(sys[S[k]].b);
    }
    if (determinant(A) == 0) return;
    auto x = solve(A, b);
    for (const auto& q : sys)
      if (dot(to_rat(q.a), *x) > Rat(q.b)) return;
    found.insert(*x);
  });
  return {found.begin(), found.end()};
}

std::vector<IntVec> extreme_rays(const System& sys, std::size_t dim) {
  std::set<IntVec> found;
  if (dim == 0) return {};
  if (dim == 1) {
    for (int s : {1, -1}) {
      bool ok = true;
      for (const auto& q : sys)
        if (q.a[0] * s > 0) ok = false;
      if (ok) found.insert(IntVec{Int(s)});
    }
    return {found.begin(), found.end()};
  }
  subsets(sys.size(), dim - 1, [&](const std::vector<std::size_t>& S) {
    RatMatrix A(dim - 1, dim);
    for (std::size_t k = 0; k < dim - 1; ++k)
      for (std::size_t j = 0; j < dim; ++j) A(k, j) = Rat(sys[S[k]].a[j]);
    auto ns = nullspace(A);
    if (ns.size() != 1) return;
    IntVec v = primitive(ns[0]);
    for (int s : {1, -1}) {
      bool ok = true;
      for (const auto& q : sys)
        if (dot(q.a, v) * s > 0) ok = false;
      if (ok) {
        IntVec w = v;
        if (s < 0)
          for (auto& x : w) x = -x;
        found.insert(w);
      }
    }
  });
  return {found.begin(), found.end()};
}

std::optional<RatVec> lp_feasible_point(const RatMatrix& A0, const RatVec& b0) {
  // phase one with artificials, Bland's rule
  const std::size_t m = A0.rows(), n = A0.cols();
  RatMatrix T(m + 1, n + m + 1);  // last column rhs, last row objective
  for (std::size_t i = 0; i < m; ++i) {
    Rat sgn = b0[i] < 0 ? Rat(-1) : Rat(1);
    for (std::size_t j = 0; j < n; ++j) T(i, j) = sgn * A0(i, j);
    T(i, n + i) = 1;
    T(i, n + m) = sgn * b0[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  // objective: minimize sum of artificials; reduced costs row = -sum of rows
  for (std::size_t j = 0; j <= n + m; ++j) {
    if (j >= n && j < n + m) continue;
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += T(i, j);
    T(m, j) = -s;
  }
  while (true) {
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (T(m, j) < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;
    std::size_t leave = m;
    Rat best;
    for (std::size_t i = 0; i < m; ++i) {
      if (T(i, enter) <= 0) continue;
      Rat ratio = T(i, n + m) / T(i, enter);
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded direction cannot occur in phase one
    Rat piv = T(leave, enter);
    for (std::size_t j = 0; j <= n + m; ++j) T(leave, j) /= piv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || T(i, enter) == 0) continue;
      Rat f = T(i, enter);
      for (std::size_t j = 0; j <= n + m; ++j) T(i, j) -= f * T(leave, j);
    }
    basis[leave] = enter;
  }
  if (T(m, n + m) != 0) return std::nullopt;
  RatVec x(n, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = T(i, n + m);
  return x;
}

}  // namespace toric
