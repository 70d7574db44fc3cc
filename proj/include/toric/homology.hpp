#pragma once

#include <cstddef>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

// Coefficient field: characteristic 0 means Q, otherwise a prime p.
struct Field {
  unsigned long characteristic = 0;
};

struct CohomologyDims {
  std::vector<std::size_t> dims;  // dims[k + 1] is the dimension in degree k >= -1

  std::size_t operator[](int degree) const {
    std::size_t k = static_cast<std::size_t>(degree + 1);
    return degree >= -1 && k < dims.size() ? dims[k] : 0;
  }
  bool all_zero() const;
  long euler() const;  // sum over k >= -1 of (-1)^k dims
  bool operator==(const CohomologyDims& o) const;
};

// Cohomology of the relative cochain complex spanned by `faces` (faces of K not in Ksub;
// the empty face counts in degree -1).
CohomologyDims cohomology_of_faces(std::vector<Mask> faces, Field field = {});
CohomologyDims reduced_cohomology(const SimplicialComplex& K, Field field = {});
// Throws std::invalid_argument unless Ksub is a subcomplex of K.
CohomologyDims relative_reduced_cohomology(const SimplicialComplex& K, const SimplicialComplex& Ksub,
                                           Field field = {});
// Alternating face count, degrees from -1.
long reduced_face_euler(const std::vector<Mask>& faces);

bool is_prime(unsigned long p);

}  // namespace toric
