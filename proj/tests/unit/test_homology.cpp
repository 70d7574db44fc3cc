#include "doctest.h"

#include "toric/homology.hpp"

using namespace toric;

namespace {

SimplicialComplex from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& gens) {
  std::vector<Mask> ms;
  for (const auto& g : gens) ms.push_back(mask_of(g));
  return complex_from_generators(n, ms);
}

const std::vector<std::vector<std::size_t>> kRP2 = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                                    {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}};

std::vector<std::vector<std::size_t>> torus7() {
  std::vector<std::vector<std::size_t>> t;
  for (std::size_t i = 0; i < 7; ++i) {
    t.push_back({i, (i + 1) % 7, (i + 3) % 7});
    t.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return t;
}

}  // namespace

TEST_CASE("reduced cohomology of spheres and points") {
  for (std::size_t k = 1; k <= 5; ++k) {
    // boundary of the k-simplex on k+1 vertices is S^{k-1}
    std::vector<Mask> gens;
    for (std::size_t i = 0; i <= k; ++i) gens.push_back(((Mask(1) << (k + 1)) - 1) & ~(Mask(1) << i));
    auto h = reduced_cohomology(complex_from_generators(k + 1, gens));
    for (int deg = -1; deg <= static_cast<int>(k); ++deg) CHECK(h[deg] == (deg == static_cast<int>(k) - 1 ? 1u : 0u));
  }
  CHECK(reduced_cohomology(from_lists(2, {{0}, {1}}))[0] == 1);
  CHECK(reduced_cohomology(from_lists(3, {{0, 1, 2}})).all_zero());
  // {empty} has reduced cohomology in degree -1; the void complex has none
  CHECK(reduced_cohomology(SimplicialComplex{3, {0}})[-1] == 1);
  CHECK(reduced_cohomology(SimplicialComplex{3, {}}).all_zero());
}

TEST_CASE("surfaces: torus and projective plane") {
  auto T = from_lists(7, torus7());
  auto hT = reduced_cohomology(T);
  CHECK(hT[0] == 0);
  CHECK(hT[1] == 2);
  CHECK(hT[2] == 1);
  auto P = from_lists(6, kRP2);
  CHECK(reduced_cohomology(P).all_zero());
  auto h2 = reduced_cohomology(P, Field{2});
  CHECK(h2[1] == 1);
  CHECK(h2[2] == 1);
  CHECK(reduced_cohomology(P, Field{3}).all_zero());
}

TEST_CASE("euler characteristic matches face counts") {
  for (const auto& K : {from_lists(7, torus7()), from_lists(6, kRP2), from_lists(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})}) {
    for (unsigned long p : {0ul, 2ul, 5ul}) CHECK(reduced_cohomology(K, Field{p}).euler() == reduced_face_euler(K.faces));
  }
}

TEST_CASE("relative cohomology") {
  // (disk, boundary circle) has the cohomology of S^2 shifted: H^2 = 1
  auto disk = from_lists(4, {{0, 1, 3}, {1, 2, 3}, {2, 0, 3}});
  auto circle = from_lists(4, {{0, 1}, {1, 2}, {2, 0}});
  auto h = relative_reduced_cohomology(disk, circle);
  CHECK(h[2] == 1);
  CHECK(h[0] == 0);
  CHECK(h[1] == 0);
  // pair (K, void) is absolute reduced cohomology
  CHECK(relative_reduced_cohomology(circle, SimplicialComplex{4, {}}) == reduced_cohomology(circle));
  // pair (K, K) is acyclic
  CHECK(relative_reduced_cohomology(circle, circle).all_zero());
  CHECK_THROWS_AS(relative_reduced_cohomology(circle, from_lists(4, {{0, 3}})), std::invalid_argument);
}
