#include "toric/circuits.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "toric/frobenius.hpp"

namespace toric {

Int Circuit::alpha_of(std::size_t i) const {
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (idx[k] == i) return alpha[k];
  return 0;
}

Mask OrientedCircuit::plus() const {
  Mask m = 0;
  for (std::size_t k = 0; k < circuit.idx.size(); ++k)
    if (sign * circuit.alpha[k] > 0) m |= Mask(1) << circuit.idx[k];
  return m;
}

Mask OrientedCircuit::minus() const { return circuit.support & ~plus(); }

std::string OrientedCircuit::label() const {
  std::ostringstream os;
  os << "+" << mask_to_string(plus()) << " -" << mask_to_string(minus());
  return os.str();
}

std::vector<Circuit> enumerate_circuits(const IntMatrix& L) {
  const std::size_t n = L.rows();
  const std::size_t r = rank(L);
  std::vector<Circuit> out;
  for (std::size_t k = 1; k <= std::min(n, r + 1); ++k) {
    std::vector<std::size_t> S(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
      if (pos == k) {
        RatMatrix A = to_rat(L.select_rows(S)).transpose();
        auto ns = nullspace(A);
        if (ns.size() != 1) return;
        for (const auto& x : ns[0])
          if (x == 0) return;
        IntVec a = primitive(ns[0]);
        if (a[0] < 0)
          for (auto& x : a) x = -x;
        Circuit c;
        c.idx = S;
        c.alpha = a;
        c.support = mask_of(S);
        out.push_back(c);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        S[pos] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
  }
  return out;
}

std::vector<OrientedCircuit> oriented_circuits(const std::vector<Circuit>& cs) {
  std::vector<OrientedCircuit> out;
  for (const auto& c : cs) {
    out.push_back({c, 1});
    out.push_back({c, -1});
  }
  return out;
}

bool is_fibrational(const Circuit& c) {
  return std::all_of(c.alpha.begin(), c.alpha.end(), [](const Int& x) { return x > 0; }) ||
         std::all_of(c.alpha.begin(), c.alpha.end(), [](const Int& x) { return x < 0; });
}

namespace {

// Basis (rows) of the saturation of the row lattice of R inside Z^d.
IntMatrix saturated_span(const IntMatrix& R) {
  IntMatrix K = integer_right_kernel(R);  // rows m with R m = 0
  if (K.rows() == 0) return IntMatrix::identity(R.cols());
  return integer_kernel(K.transpose());
}

}  // namespace

Fan circuit_fan(const IntMatrix& L, const OrientedCircuit& oc) {
  if (oc.plus() == 0) throw std::invalid_argument("circuit fan undefined: c+ is empty");
  const auto& idx = oc.circuit.idx;
  IntMatrix R = L.select_rows(idx);
  IntMatrix B = saturated_span(R);
  RatMatrix Bt = to_rat(B).transpose();
  Fan f;
  f.name = "circuit " + oc.label();
  f.rays = IntMatrix(idx.size(), B.rows());
  for (std::size_t k = 0; k < idx.size(); ++k) {
    auto y = solve(Bt, to_rat(R.row(k)));
    for (std::size_t j = 0; j < B.rows(); ++j) f.rays(k, j) = (*y)[j].get_num();
  }
  Mask all = (Mask(1) << idx.size()) - 1;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (oc.alpha_of(idx[k]) > 0) f.max_cones.push_back(all & ~(Mask(1) << k));
  return f;
}

IntMatrix one_circuit_rays(const IntVec& alpha, const IntMatrix& xi) {
  IntMatrix G(1, alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) G(0, i) = alpha[i];
  IntMatrix K = integer_right_kernel(G);  // (n-1) x n, rows span ker(alpha)
  IntMatrix L = K.transpose();            // n x (n-1), rows are the Gale duals
  if (xi.rows() != L.cols() || xi.cols() != L.cols()) throw std::invalid_argument("xi has the wrong size");
  if (determinant(xi) == 0) throw std::invalid_argument("xi must be injective");
  return L * xi.transpose();
}

Rat s_index(const IntMatrix& L, const Circuit& c, Mask I) {
  std::vector<std::size_t> rows;
  Int g = 0;
  for (std::size_t k = 0; k < c.idx.size(); ++k) {
    if (I & (Mask(1) << c.idx[k]))
      rows.push_back(c.idx[k]);
    else
      g = gcd(g, c.alpha[k]);
  }
  if (g == 0) g = 1;
  Int r = rows.empty() ? Int(1) : saturation_index(L.select_rows(rows));
  Rat q(r, g);
  q.canonicalize();
  return q;
}

namespace {

Int global_s(const IntMatrix& L, const Circuit& c) { return s_index(L, c, c.support).get_num(); }

}  // namespace

Int one_circuit_pic_generator(const IntMatrix& L, const OrientedCircuit& oc) {
  Int l = 1;
  for (auto i : indices_of(oc.plus())) l = lcm(l, oc.alpha_of(i));
  return global_s(L, oc.circuit) * l;
}

bool one_circuit_smooth(const IntMatrix& L, const OrientedCircuit& oc) {
  if (global_s(L, oc.circuit) != 1) return false;
  auto plus = indices_of(oc.plus());
  if (plus.size() <= 1) return true;
  for (auto i : plus)
    if (oc.alpha_of(i) != 1) return false;
  return true;
}

std::vector<WallForm> wall_forms(const IntMatrix& L, const OrientedCircuit& oc) {
  auto plus = indices_of(oc.plus());
  Rat s(global_s(L, oc.circuit));
  std::vector<WallForm> out;
  for (std::size_t a = 0; a < plus.size(); ++a)
    for (std::size_t b = a + 1; b < plus.size(); ++b) {
      WallForm w;
      w.i = plus[a];
      w.j = plus[b];
      w.tau = oc.circuit.support & ~(Mask(1) << w.i) & ~(Mask(1) << w.j);
      Rat st = s_index(L, oc.circuit, w.tau);
      w.t = st / s / Rat(lcm(oc.alpha_of(w.i), oc.alpha_of(w.j)));
      out.push_back(w);
    }
  return out;
}

RatVec circuit_functional(const ClassGroup& A, const OrientedCircuit& oc) {
  RatVec f(A.rank());
  for (std::size_t k = 0; k < A.rank(); ++k) {
    Int v = 0;
    for (auto i : oc.circuit.idx) v += oc.alpha_of(i) * A.basis_lifts(k, i);
    f[k] = Rat(v);
  }
  return f;
}

Int circuit_value(const OrientedCircuit& oc, const IntVec& c) {
  Int v = 0;
  for (auto i : oc.circuit.idx) v += oc.alpha_of(i) * c[i];
  return v;
}

RatVec lifted_wall_form(const ClassGroup& A, const OrientedCircuit& oc, const WallForm& w) {
  RatVec f = circuit_functional(A, oc);
  for (auto& x : f) x *= w.t;
  return f;
}

AmplenessFlags one_circuit_ampleness(const IntMatrix& L, const OrientedCircuit& oc, const Rat& phi_value) {
  AmplenessFlags fl;
  const bool smooth = one_circuit_smooth(L, oc);
  const long cp = popcount(oc.plus());
  const long d = static_cast<long>(oc.circuit.size()) - 1;
  const long x = smooth ? 0 : 1;
  auto ws = wall_forms(L, oc);
  fl.nef = fl.ample = fl.very_ample = true;
  bool above_cp = true;
  for (const auto& w : ws) {
    Rat dv = w.t * phi_value;
    fl.intersections.push_back(dv);
    if (dv < cp - x) fl.nef = false;
    if (smooth ? dv < cp + 1 : dv < d + 1) fl.very_ample = false;
    if (smooth ? dv <= cp : dv < cp) above_cp = false;
  }
  fl.ample = fl.very_ample || above_cp;
  return fl;
}

DimVec one_circuit_cohomology(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c) {
  const std::size_t d = oc.circuit.size() - 1;
  DimVec h(d + 1);
  auto Q = circuit_quotient(L, oc.circuit);
  const std::size_t top = static_cast<std::size_t>(popcount(oc.plus())) - 1;
  if (oc.plus() != oc.circuit.support)
    h[0] = Dim::inf();
  else
    h[0].value = semigroup_representations(Q, oc.opposite(), c);
  // the top degree coincides with degree 0 only for a single point, excluded by |C| >= 2
  h[top].value += semigroup_representations(Q, oc, c);
  return h;
}

DimVec one_circuit_local_cohomology(const IntMatrix& L, const OrientedCircuit& oc, const IntVec& c) {
  if (oc.minus() == 0 || oc.plus() == oc.circuit.support)
    throw std::invalid_argument("local circuit cohomology needs both c+ and c- nonempty");
  const std::size_t d = oc.circuit.size() - 1;
  DimVec h(d + 1);
  auto Q = circuit_quotient(L, oc.circuit);
  h[d] = Dim::inf();
  const std::size_t k = static_cast<std::size_t>(popcount(oc.minus()));
  if (k != d) h[k].value = semigroup_representations(Q, oc.opposite(), c);
  return h;
}

}  // namespace toric
