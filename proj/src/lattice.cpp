#include "toric/lattice.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  IntVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

RatVec operator*(const RatMatrix& a, const RatVec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector: shape mismatch");
  RatVec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
  return m;
}

RatMatrix to_rat(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

IntVec int_vec(const std::vector<long>& v) {
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

Int gcd_of(const IntVec& v) {
  Int g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  Int g = gcd(a, b);
  return abs(a / g * b);
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec primitive(const IntVec& v) {
  Int g = gcd_of(v);
  if (g == 0 || g == 1) return v;
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVec primitive(const RatVec& v) {
  Int den = 1;
  for (const auto& x : v) den = lcm(den, Int(x.get_den()));
  IntVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * den;
    r[i] = s.get_num();
  }
  return primitive(r);
}

namespace {

void row_addmul(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += q * M(src, j);
}

void col_addmul(IntMatrix& M, std::size_t dst, std::size_t src, const Int& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += q * M(i, src);
}

void row_negate(IntMatrix& M, std::size_t i) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = -M(i, j);
}

}  // namespace

HNFResult hermite_normal_form(const IntMatrix& A) {
  HNFResult r;
  r.H = A;
  r.U = IntMatrix::identity(A.rows());
  IntMatrix& H = r.H;
  IntMatrix& U = r.U;
  std::size_t p = 0;
  for (std::size_t j = 0; j < H.cols() && p < H.rows(); ++j) {
    while (true) {
      // smallest nonzero |entry| in column j among rows >= p, lowest row on ties
      std::size_t best = H.rows();
      for (std::size_t i = p; i < H.rows(); ++i) {
        if (H(i, j) == 0) continue;
        if (best == H.rows() || abs(H(i, j)) < abs(H(best, j))) best = i;
      }
      if (best == H.rows()) break;
      H.swap_rows(p, best);
      U.swap_rows(p, best);
      bool clean = true;
      for (std::size_t i = p + 1; i < H.rows(); ++i) {
        if (H(i, j) == 0) continue;
        Int q = floor_div(H(i, j), H(p, j));
        row_addmul(H, i, p, -q);
        row_addmul(U, i, p, -q);
        if (H(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (p < H.rows() && H(p, j) != 0) {
      if (H(p, j) < 0) {
        row_negate(H, p);
        row_negate(U, p);
      }
      for (std::size_t i = 0; i < p; ++i) {
        Int q = floor_div(H(i, j), H(p, j));
        row_addmul(H, i, p, -q);
        row_addmul(U, i, p, -q);
      }
      r.pivots.push_back(j);
      ++p;
    }
  }
  r.rank = p;
  return r;
}

SNFResult smith_normal_form(const IntMatrix& A) {
  SNFResult r;
  r.S = A;
  r.U = IntMatrix::identity(A.rows());
  r.V = IntMatrix::identity(A.cols());
  IntMatrix& S = r.S;
  const std::size_t m = S.rows(), n = S.cols();
  const std::size_t k = std::min(m, n);
  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      // pivot: smallest |entry|, ties lowest row then lowest column
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          if (bi == m || abs(S(i, j)) < abs(S(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi == m) goto done;
      S.swap_rows(t, bi);
      r.U.swap_rows(t, bi);
      S.swap_cols(t, bj);
      r.V.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Int q = floor_div(S(i, t), S(t, t));
        row_addmul(S, i, t, -q);
        row_addmul(r.U, i, t, -q);
        if (S(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Int q = floor_div(S(t, j), S(t, t));
        col_addmul(S, j, t, -q);
        col_addmul(r.V, j, t, -q);
        if (S(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the remaining block
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (S(i, j) % S(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      row_addmul(S, t, bad, 1);
      row_addmul(r.U, t, bad, 1);
    }
    if (S(t, t) < 0) {
      row_negate(S, t);
      row_negate(r.U, t);
    }
  }
done:
  r.diagonal.assign(k, 0);
  for (std::size_t t = 0; t < k; ++t) {
    r.diagonal[t] = S(t, t);
    if (S(t, t) != 0) ++r.rank;
  }
  return r;
}

IntMatrix integer_kernel(const IntMatrix& A) {
  HNFResult h = hermite_normal_form(A);
  const std::size_t m = A.rows();
  if (h.rank == m) return IntMatrix(0, m);
  IntMatrix K(m - h.rank, m);
  for (std::size_t i = h.rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) K(i - h.rank, j) = h.U(i, j);
  return hermite_normal_form(K).H;
}

IntMatrix integer_right_kernel(const IntMatrix& A) { return integer_kernel(A.transpose()); }

IntVec AbelianGroup::reduce(IntVec c) const {
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    Int& x = c[free_rank + k];
    x %= torsion[k];
    if (x < 0) x += torsion[k];
  }
  return c;
}

IntVec AbelianGroup::normal_form(const IntVec& x) const { return reduce(proj * x); }

Int AbelianGroup::torsion_order() const {
  Int o = 1;
  for (const auto& d : torsion) o *= d;
  return o;
}

std::vector<IntVec> AbelianGroup::torsion_elements() const {
  std::vector<IntVec> out;
  IntVec cur(ngens(), 0);
  out.push_back(cur);
  for (std::size_t k = 0; k < torsion.size(); ++k) {
    std::vector<IntVec> next;
    for (const auto& e : out)
      for (Int v = 0; v < torsion[k]; ++v) {
        IntVec f = e;
        f[free_rank + k] = v;
        next.push_back(f);
      }
    out.swap(next);
  }
  return out;
}

AbelianGroup cokernel_presentation(const IntMatrix& A) {
  SNFResult s = smith_normal_form(A);
  const std::size_t m = A.rows();
  AbelianGroup g;
  g.ambient = m;
  std::vector<std::size_t> free_rows, tors_rows;
  for (std::size_t t = 0; t < s.rank; ++t)
    if (s.diagonal[t] > 1) {
      tors_rows.push_back(t);
      g.torsion.push_back(s.diagonal[t]);
    }
  for (std::size_t t = s.rank; t < m; ++t) free_rows.push_back(t);
  g.free_rank = free_rows.size();
  std::vector<std::size_t> order = free_rows;
  order.insert(order.end(), tors_rows.begin(), tors_rows.end());
  g.proj = s.U.select_rows(order);
  // U is unimodular, so its rational inverse is integral
  auto Uinv = inverse(to_rat(s.U));
  g.lift = IntMatrix(m, order.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < order.size(); ++k) g.lift(i, k) = (*Uinv)(i, order[k]).get_num();
  return g;
}

Int saturation_index(const IntMatrix& rows) {
  SNFResult s = smith_normal_form(rows);
  Int p = 1;
  for (std::size_t t = 0; t < s.rank; ++t) p *= s.diagonal[t];
  return p;
}

RREF rref(const RatMatrix& A) {
  RREF r{A, {}};
  RatMatrix& R = r.R;
  std::size_t p = 0;
  for (std::size_t j = 0; j < R.cols() && p < R.rows(); ++j) {
    std::size_t piv = R.rows();
    for (std::size_t i = p; i < R.rows(); ++i)
      if (R(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == R.rows()) continue;
    R.swap_rows(p, piv);
    Rat inv = 1 / R(p, j);
    for (std::size_t c = 0; c < R.cols(); ++c) R(p, c) *= inv;
    for (std::size_t i = 0; i < R.rows(); ++i) {
      if (i == p || R(i, j) == 0) continue;
      Rat f = R(i, j);
      for (std::size_t c = 0; c < R.cols(); ++c) R(i, c) -= f * R(p, c);
    }
    r.pivots.push_back(j);
    ++p;
  }
  return r;
}

std::size_t rank(const RatMatrix& A) { return rref(A).pivots.size(); }
std::size_t rank(const IntMatrix& A) { return rank(to_rat(A)); }

std::vector<RatVec> nullspace(const RatMatrix& A) {
  RREF r = rref(A);
  std::vector<bool> is_piv(A.cols(), false);
  for (auto j : r.pivots) is_piv[j] = true;
  std::vector<RatVec> out;
  for (std::size_t f = 0; f < A.cols(); ++f) {
    if (is_piv[f]) continue;
    RatVec v(A.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.R(k, f);
    out.push_back(v);
  }
  return out;
}

std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b) {
  RatMatrix aug(A.rows(), A.cols() + 1);
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
    aug(i, A.cols()) = b[i];
  }
  RREF r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == A.cols()) return std::nullopt;
  RatVec x(A.cols(), 0);
  for (std::size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.R(k, A.cols());
  return x;
}

Rat determinant(const RatMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant: not square");
  RatMatrix R = A;
  Rat det = 1;
  const std::size_t n = R.rows();
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t piv = n;
    for (std::size_t i = j; i < n; ++i)
      if (R(i, j) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != j) {
      R.swap_rows(piv, j);
      det = -det;
    }
    det *= R(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      if (R(i, j) == 0) continue;
      Rat f = R(i, j) / R(j, j);
      for (std::size_t c = j; c < n; ++c) R(i, c) -= f * R(j, c);
    }
  }
  return det;
}

Int determinant(const IntMatrix& A) { return determinant(to_rat(A)).get_num(); }

std::optional<RatMatrix> inverse(const RatMatrix& A) {
  const std::size_t n = A.rows();
  if (n != A.cols()) throw std::invalid_argument("inverse: not square");
  if (n == 0) return RatMatrix(0, 0);
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
    aug(i, n + i) = 1;
  }
  RREF r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.R(i, n + j);
  return inv;
}

std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b) {
  // U A V = S, so A x = b iff S y = U b with x = V y
  SNFResult s = smith_normal_form(A);
  IntVec ub = s.U * b;
  IntVec y(A.cols(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < s.rank) {
      if (ub[i] % s.diagonal[i] != 0) return std::nullopt;
      y[i] = ub[i] / s.diagonal[i];
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return s.V * y;
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& vs, std::size_t dim) {
  RatMatrix M(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) M(i, j) = vs[i][j];
  auto r = rref(M);
  std::vector<RatVec> out;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.R.row(i));
  return out;
}

std::vector<RatVec> annihilator(const std::vector<RatVec>& vs, std::size_t dim) {
  RatMatrix M(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) M(i, j) = vs[i][j];
  return nullspace(M);
}

std::vector<RatVec> subspace_intersection(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                          std::size_t dim) {
  auto fa = annihilator(a, dim), fb = annihilator(b, dim);
  fa.insert(fa.end(), fb.begin(), fb.end());
  return span_basis(annihilator(fa, dim), dim);
}

bool in_span(const std::vector<RatVec>& vs, const RatVec& x) {
  auto all = vs;
  all.push_back(x);
  return span_basis(all, x.size()).size() == span_basis(vs, x.size()).size();
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string to_string(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) os << to_string(m.row(i)) << "\n";
  return os;
}

}  // namespace toric
