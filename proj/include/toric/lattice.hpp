#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix. Used with Int and Rat only.
template <class T>
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
      for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(idx[k], j);
    return m;
  }
  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < idx.size(); ++k) m(i, k) = (*this)(i, idx[k]);
    return m;
  }
  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);
RatVec operator*(const RatMatrix& a, const RatVec& x);

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows, std::size_t cols);
RatMatrix to_rat(const IntMatrix& m);
RatVec to_rat(const IntVec& v);
IntVec int_vec(const std::vector<long>& v);

Int gcd_of(const IntVec& v);
Int lcm(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Rat dot(const RatVec& a, const RatVec& b);
Int dot(const IntVec& a, const IntVec& b);
// Divide by the gcd; zero vector is returned unchanged.
IntVec primitive(const IntVec& v);
// Clear denominators and make primitive, keeping direction.
IntVec primitive(const RatVec& v);

struct HNFResult {
  IntMatrix H;  // U * A
  IntMatrix U;  // unimodular
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

struct SNFResult {
  IntMatrix S;  // U * A * V, diagonal
  IntMatrix U, V;
  IntVec diagonal;  // min(rows, cols) entries, d1 | d2 | ..., zeros last
  std::size_t rank = 0;
};

// Row-style Hermite form: pivots positive, entries above a pivot in [0, pivot).
HNFResult hermite_normal_form(const IntMatrix& A);
SNFResult smith_normal_form(const IntMatrix& A);

// Saturated basis of {x : x A = 0}, rows Hermite-reduced.
IntMatrix integer_kernel(const IntMatrix& A);
// Saturated basis of {x : A x = 0}.
IntMatrix integer_right_kernel(const IntMatrix& A);

// Z^rows / column image of A.
struct AbelianGroup {
  std::size_t ambient = 0;
  std::size_t free_rank = 0;
  IntVec torsion;   // invariants > 1, each dividing the next
  IntMatrix proj;   // (free_rank + |torsion|) x ambient; free coordinates first
  IntMatrix lift;   // ambient x (free_rank + |torsion|); column k maps onto generator k

  std::size_t ngens() const { return free_rank + torsion.size(); }
  // Coordinates of x with torsion entries reduced into [0, d).
  IntVec normal_form(const IntVec& x) const;
  IntVec reduce(IntVec coords) const;
  Int torsion_order() const;
  // All torsion elements as coordinate vectors (free part zero).
  std::vector<IntVec> torsion_elements() const;
};

AbelianGroup cokernel_presentation(const IntMatrix& A);

// Index of the row lattice in its saturation (1 for the zero matrix).
Int saturation_index(const IntMatrix& rows);

// Rational linear algebra.
struct RREF {
  RatMatrix R;
  std::vector<std::size_t> pivots;
};
RREF rref(const RatMatrix& A);
std::size_t rank(const RatMatrix& A);
std::size_t rank(const IntMatrix& A);
// Basis of {x : A x = 0}.
std::vector<RatVec> nullspace(const RatMatrix& A);
std::optional<RatVec> solve(const RatMatrix& A, const RatVec& b);
Rat determinant(const RatMatrix& A);
Int determinant(const IntMatrix& A);
std::optional<RatMatrix> inverse(const RatMatrix& A);

// Integer solution of A x = b, if any.
std::optional<IntVec> solve_integer(const IntMatrix& A, const IntVec& b);

// Subspaces of Q^k given by spanning vectors.
std::vector<RatVec> span_basis(const std::vector<RatVec>& vs, std::size_t dim);
std::vector<RatVec> subspace_intersection(const std::vector<RatVec>& a, const std::vector<RatVec>& b,
                                          std::size_t dim);
// Linear forms vanishing on the span.
std::vector<RatVec> annihilator(const std::vector<RatVec>& vs, std::size_t dim);
bool in_span(const std::vector<RatVec>& vs, const RatVec& x);

std::string to_string(const IntVec& v);
std::string to_string(const RatVec& v);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace toric
