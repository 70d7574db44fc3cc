#include "toric/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

bool CohomologyDims::all_zero() const {
  return std::all_of(dims.begin(), dims.end(), [](std::size_t x) { return x == 0; });
}

long CohomologyDims::euler() const {
  long e = 0;
  for (std::size_t k = 0; k < dims.size(); ++k) e += (k % 2 == 1 ? 1 : -1) * static_cast<long>(dims[k]);
  return e;
}

bool CohomologyDims::operator==(const CohomologyDims& o) const {
  std::size_t m = std::max(dims.size(), o.dims.size());
  for (std::size_t k = 0; k < m; ++k)
    if ((*this)[static_cast<int>(k) - 1] != o[static_cast<int>(k) - 1]) return false;
  return true;
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

namespace {

using Sparse = std::vector<std::vector<std::pair<std::size_t, int>>>;  // columns

std::size_t rank_rational(const Sparse& cols, std::size_t nrows) {
  RatMatrix M(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : cols[j]) M(i, j) = v;
  return rank(M);
}

std::size_t rank_mod(const Sparse& cols, std::size_t nrows, unsigned long p) {
  std::vector<std::vector<long long>> M(nrows, std::vector<long long>(cols.size(), 0));
  const long long P = static_cast<long long>(p);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (auto [i, v] : cols[j]) M[i][j] = ((v % P) + P) % P;
  auto inv = [&](long long a) {
    long long r = 1, e = P - 2;
    a %= P;
    while (e) {
      if (e & 1) r = static_cast<long long>((__int128)r * a % P);
      a = static_cast<long long>((__int128)a * a % P);
      e >>= 1;
    }
    return r;
  };
  std::size_t r = 0;
  for (std::size_t j = 0; j < cols.size() && r < nrows; ++j) {
    std::size_t piv = r;
    while (piv < nrows && M[piv][j] == 0) ++piv;
    if (piv == nrows) continue;
    std::swap(M[piv], M[r]);
    long long iv = inv(M[r][j]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (M[i][j] == 0) continue;
      long long f = static_cast<long long>((__int128)M[i][j] * iv % P);
      for (std::size_t k = j; k < cols.size(); ++k)
        M[i][k] = ((M[i][k] - static_cast<long long>((__int128)f * M[r][k] % P)) % P + P) % P;
    }
    ++r;
  }
  return r;
}

}  // namespace

long reduced_face_euler(const std::vector<Mask>& faces) {
  long e = 0;
  for (auto f : faces) e += (popcount(f) % 2 == 0 ? -1 : 1);
  return e;
}

CohomologyDims cohomology_of_faces(std::vector<Mask> faces, Field field) {
  if (field.characteristic != 0 && !is_prime(field.characteristic))
    throw std::invalid_argument("field characteristic must be 0 or prime");
  CohomologyDims out;
  if (faces.empty()) return out;
  std::sort(faces.begin(), faces.end());
  int top = 0;
  for (auto f : faces) top = std::max(top, popcount(f));
  // by_dim[k] = faces with k vertices (degree k - 1)
  std::vector<std::vector<Mask>> by_size(top + 1);
  for (auto f : faces) by_size[popcount(f)].push_back(f);
  std::vector<std::map<Mask, std::size_t>> index(top + 1);
  for (int k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < by_size[k].size(); ++i) index[k][by_size[k][i]] = i;
  // rank of the boundary from size k to size k - 1
  std::vector<std::size_t> rk(top + 2, 0);
  for (int k = 1; k <= top; ++k) {
    if (by_size[k].empty() || by_size[k - 1].empty()) continue;
    Sparse cols(by_size[k].size());
    for (std::size_t j = 0; j < by_size[k].size(); ++j) {
      Mask f = by_size[k][j];
      int t = 0;
      for (auto v : indices_of(f)) {
        Mask g = f & ~(Mask(1) << v);
        auto it = index[k - 1].find(g);
        if (it != index[k - 1].end()) cols[j].push_back({it->second, t % 2 == 0 ? 1 : -1});
        ++t;
      }
    }
    rk[k] = field.characteristic == 0 ? rank_rational(cols, by_size[k - 1].size())
                                      : rank_mod(cols, by_size[k - 1].size(), field.characteristic);
  }
  out.dims.assign(top + 1, 0);
  for (int k = 0; k <= top; ++k) out.dims[k] = by_size[k].size() - rk[k] - rk[k + 1];
  while (!out.dims.empty() && out.dims.back() == 0) out.dims.pop_back();
  return out;
}

CohomologyDims reduced_cohomology(const SimplicialComplex& K, Field field) {
  return cohomology_of_faces(K.faces, field);
}

CohomologyDims relative_reduced_cohomology(const SimplicialComplex& K, const SimplicialComplex& Ksub, Field field) {
  if (!is_subcomplex(Ksub, K)) throw std::invalid_argument("relative cohomology: pair is not a subcomplex");
  std::vector<Mask> faces;
  for (auto f : K.faces)
    if (!Ksub.contains(f)) faces.push_back(f);
  return cohomology_of_faces(faces, field);
}

}  // namespace toric
