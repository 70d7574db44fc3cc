#include "toric/classgroup.hpp"

#include <stdexcept>

namespace toric {

IntVec ClassGroup::torsion_part(const IntVec& c) const {
  IntVec nf = normal_form(c);
  return IntVec(nf.begin() + group.free_rank, nf.end());
}

IntVec ClassGroup::display(const IntVec& c) const {
  RatVec r = rational(c);
  IntVec out(r.size());
  for (std::size_t k = 0; k < r.size(); ++k) out[k] = r[k].get_num();
  return out;
}

RatVec ClassGroup::rational(const IntVec& c) const {
  IntVec nf = normal_form(c);
  RatVec free(group.free_rank);
  for (std::size_t k = 0; k < group.free_rank; ++k) free[k] = Rat(nf[k]);
  return to_display * free;
}

IntVec ClassGroup::lift(const IntVec& coords, const IntVec& torsion) const {
  if (coords.size() != group.free_rank) throw std::invalid_argument("class coordinates have wrong length");
  IntVec c(n, 0);
  for (std::size_t k = 0; k < coords.size(); ++k)
    for (std::size_t i = 0; i < n; ++i) c[i] += coords[k] * basis_lifts(k, i);
  for (std::size_t t = 0; t < torsion.size() && t < group.torsion.size(); ++t)
    for (std::size_t i = 0; i < n; ++i) c[i] += torsion[t] * group.lift(i, group.free_rank + t);
  return c;
}

ClassGroup class_group(const Fan& fan) {
  if (rank(fan.rays) != fan.d()) throw std::invalid_argument("class group: rays are not full-dimensional");
  ClassGroup A;
  A.n = fan.n();
  A.d = fan.d();
  A.group = cokernel_presentation(fan.rays);
  const std::size_t r = A.group.free_rank;
  A.basis_lifts = IntMatrix(r, A.n);
  if (!fan.basis.empty()) {
    if (fan.basis.size() != r) throw std::invalid_argument("declared basis has the wrong number of vectors");
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < A.n; ++i) A.basis_lifts(k, i) = fan.basis[k].at(i);
    A.declared_basis = true;
  } else {
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < A.n; ++i) A.basis_lifts(k, i) = A.group.lift(i, k);
  }
  // columns: internal free coordinates of each basis vector
  RatMatrix P(r, r);
  for (std::size_t k = 0; k < r; ++k) {
    IntVec nf = A.group.normal_form(A.basis_lifts.row(k));
    for (std::size_t j = 0; j < r; ++j) P(j, k) = Rat(nf[j]);
  }
  if (abs(determinant(P)) != 1) throw std::invalid_argument("declared basis is not a basis of the free part");
  A.to_display = *inverse(P);
  return A;
}

std::vector<RatVec> gale_transform(const ClassGroup& A) {
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < A.n; ++i) {
    IntVec e(A.n, 0);
    e[i] = 1;
    out.push_back(A.rational(e));
  }
  return out;
}

std::vector<IntVec> gale_transform_integral(const ClassGroup& A) {
  std::vector<IntVec> out;
  for (std::size_t i = 0; i < A.n; ++i) {
    IntVec e(A.n, 0);
    e[i] = 1;
    out.push_back(A.display(e));
  }
  return out;
}

CartierWitness q_cartier_witness(const Fan& fan, const IntVec& c) {
  CartierWitness w;
  for (auto sigma : fan.max_cones) {
    auto idx = indices_of(sigma);
    RatMatrix Ls = to_rat(fan.rays.select_rows(idx));
    RatVec cs;
    for (auto i : idx) cs.push_back(Rat(c[i]));
    auto m = solve(Ls, cs);
    if (!m) return CartierWitness{};
    w.m_sigma.push_back(*m);
  }
  w.ok = true;
  return w;
}

bool is_q_cartier(const Fan& fan, const IntVec& c) { return q_cartier_witness(fan, c).ok; }

std::optional<std::vector<IntVec>> cartier_witness(const Fan& fan, const IntVec& c) {
  std::vector<IntVec> out;
  for (auto sigma : fan.max_cones) {
    auto idx = indices_of(sigma);
    IntMatrix Ls = fan.rays.select_rows(idx);
    IntVec cs;
    for (auto i : idx) cs.push_back(c[i]);
    auto m = solve_integer(Ls, cs);
    if (!m) return std::nullopt;
    out.push_back(*m);
  }
  return out;
}

bool is_cartier(const Fan& fan, const IntVec& c) { return cartier_witness(fan, c).has_value(); }

std::vector<RatVec> picard_rational(const Fan& fan, const ClassGroup& A) {
  auto D = gale_transform(A);
  const std::size_t r = A.rank();
  std::vector<RatVec> cur;
  for (std::size_t k = 0; k < r; ++k) {
    RatVec e(r, 0);
    e[k] = 1;
    cur.push_back(e);
  }
  for (auto sigma : fan.max_cones) {
    std::vector<RatVec> H;
    for (std::size_t i = 0; i < A.n; ++i)
      if (!(sigma & (Mask(1) << i))) H.push_back(D[i]);
    cur = subspace_intersection(cur, H, r);
  }
  return cur;
}

PicardIntegral picard_integral(const Fan& fan, const ClassGroup& A) {
  const std::size_t n = fan.n(), d = fan.d(), k = fan.max_cones.size();
  // unknowns (c, m_1, ..., m_k); rows c_i - l_i(m_s) = 0 for i in sigma_s
  std::size_t rows = 0;
  for (auto s : fan.max_cones) rows += popcount(s);
  IntMatrix E(rows, n + d * k);
  std::size_t r = 0;
  for (std::size_t s = 0; s < k; ++s)
    for (auto i : indices_of(fan.max_cones[s])) {
      E(r, i) = 1;
      for (std::size_t j = 0; j < d; ++j) E(r, n + s * d + j) = -fan.rays(i, j);
      ++r;
    }
  IntMatrix K = integer_right_kernel(E);
  // Cartier divisors as columns
  IntMatrix G(n, K.rows());
  for (std::size_t t = 0; t < K.rows(); ++t)
    for (std::size_t i = 0; i < n; ++i) G(i, t) = K(t, i);
  PicardIntegral out;
  AbelianGroup quot = cokernel_presentation(G);
  if (quot.free_rank == 0) out.index = quot.torsion_order();
  // class coordinates of the generators, reduced to a Hermite basis
  IntMatrix C(K.rows(), A.group.ngens());
  for (std::size_t t = 0; t < K.rows(); ++t) {
    IntVec nf = A.group.proj * G.col(t);
    for (std::size_t j = 0; j < nf.size(); ++j) C(t, j) = nf[j];
  }
  // torsion coordinates are taken modulo their orders by appending the relations
  IntMatrix Crel(C.rows() + A.group.torsion.size(), C.cols());
  for (std::size_t t = 0; t < C.rows(); ++t)
    for (std::size_t j = 0; j < C.cols(); ++j) Crel(t, j) = C(t, j);
  for (std::size_t q = 0; q < A.group.torsion.size(); ++q)
    Crel(C.rows() + q, A.group.free_rank + q) = A.group.torsion[q];
  auto h = hermite_normal_form(Crel);
  for (std::size_t t = 0; t < h.rank; ++t) {
    IntVec coords = h.H.row(t);
    bool pure_relation = true;
    for (std::size_t j = 0; j < A.group.free_rank; ++j)
      if (coords[j] != 0) pure_relation = false;
    IntVec tors(coords.begin() + A.group.free_rank, coords.end());
    tors = A.group.reduce(coords);
    tors.erase(tors.begin(), tors.begin() + A.group.free_rank);
    bool zero_tors = true;
    for (const auto& x : tors)
      if (x != 0) zero_tors = false;
    if (pure_relation && zero_tors) continue;
    IntVec lift(n, 0);
    for (std::size_t j = 0; j < coords.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) lift[i] += coords[j] * A.group.lift(i, j);
    out.generators.push_back(lift);
    out.display.push_back(A.display(lift));
  }
  return out;
}

IntVec canonical_divisor(std::size_t n) { return IntVec(n, Int(-1)); }

}  // namespace toric
