#include "doctest.h"

#include <functional>
#include <random>

#include "support.hpp"
#include "toric/classgroup.hpp"

using namespace toric;
using toric::test::fixture;

namespace {

// gcd of the maximal minors of the ray matrix, by direct expansion.
Int minors_gcd(const IntMatrix& L) {
  const std::size_t n = L.rows(), d = L.cols();
  Int g = 0;
  std::vector<std::size_t> pick(d);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == d) {
      g = gcd(g, determinant(L.select_rows(pick)));
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  return g;
}

}  // namespace

TEST_CASE("class groups and Gale duals of the fixtures") {
  auto p2 = class_group(fixture("p2"));
  CHECK(p2.rank() == 1);
  CHECK_FALSE(p2.has_torsion());
  CHECK(gale_transform_integral(p2) == std::vector<IntVec>{int_vec({1}), int_vec({1}), int_vec({1})});

  auto w = class_group(fixture("wps235"));
  CHECK(w.rank() == 1);
  CHECK_FALSE(w.has_torsion());
  CHECK(gale_transform_integral(w) == std::vector<IntVec>{int_vec({2}), int_vec({3}), int_vec({5})});
  CHECK(w.display(canonical_divisor(3)) == int_vec({-10}));

  auto f3 = class_group(fixture("f3"));
  CHECK(gale_transform_integral(f3) ==
        std::vector<IntVec>{int_vec({1, 0}), int_vec({0, 1}), int_vec({1, 0}), int_vec({3, 1})});

  CHECK(class_group(fixture("surf8")).rank() == 6);
  CHECK(class_group(fixture("mcm1")).rank() == 2);
  CHECK(class_group(fixture("mcm2")).rank() == 2);
}

TEST_CASE("torsion matches the gcd of maximal minors") {
  auto f = make_fan({{1, 0}, {1, 3}, {-2, -3}}, {{0, 1}, {1, 2}, {2, 0}});
  auto A = class_group(f);
  CHECK(A.rank() == 1);
  CHECK(A.group.torsion_order() == minors_gcd(f.rays));
  CHECK(A.group.torsion_order() == 3);
  for (auto nm : {"p2", "f3", "wps235", "surf8", "mcm1", "mcm2", "conifold"}) {
    auto g = fixture(nm);
    CHECK(class_group(g).group.torsion_order() == minors_gcd(g.rays));
  }
}

TEST_CASE("principal divisors are trivial") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (auto nm : {"p2", "f3", "wps235", "surf8", "mcm1", "mcm2"}) {
    auto f = fixture(nm);
    auto A = class_group(f);
    for (int t = 0; t < 20; ++t) {
      IntVec m(f.d()), c(f.n());
      for (auto& x : m) x = dist(rng);
      for (std::size_t i = 0; i < f.n(); ++i) c[i] = dot(f.ray(i), m);
      CHECK(A.same_class(c, IntVec(f.n(), 0)));
      IntVec b(f.n());
      for (auto& x : b) x = dist(rng);
      IntVec s(f.n());
      for (std::size_t i = 0; i < f.n(); ++i) s[i] = b[i] + c[i];
      CHECK(A.display(s) == A.display(b));
      // lift inverts display on the free part
      CHECK(A.display(A.lift(A.display(b))) == A.display(b));
    }
  }
}

TEST_CASE("declared basis must be unimodular") {
  auto f = fixture("wps235");
  f.basis = {int_vec({2, 0, 0})};
  CHECK_THROWS_AS(class_group(f), std::invalid_argument);
  CHECK_THROWS_AS(class_group(make_fan({{1, 0}, {-1, 0}}, {{0}, {1}})), std::invalid_argument);
}

TEST_CASE("Cartier and Q-Cartier") {
  auto w = fixture("wps235");
  auto A = class_group(w);
  // independent check: kD is Cartier exactly for multiples of 30
  for (long k = -35; k <= 65; ++k) {
    IntVec c = A.lift(int_vec({k}));
    CHECK(is_q_cartier(w, c));
    CHECK(is_cartier(w, c) == (k % 30 == 0));
  }
  auto pic = picard_integral(w, A);
  REQUIRE(pic.index.has_value());
  CHECK(*pic.index == 30);
  REQUIRE(pic.display.size() == 1);
  CHECK(abs(pic.display[0][0]) == 30);  // generator up to sign

  auto p2 = fixture("p2");
  CHECK(*picard_integral(p2, class_group(p2)).index == 1);
  auto f3 = fixture("f3");
  CHECK(*picard_integral(f3, class_group(f3)).index == 1);
  CHECK(picard_rational(f3, class_group(f3)).size() == 2);

  auto m1 = fixture("mcm1");
  auto A1 = class_group(m1);
  CHECK(picard_rational(m1, A1).empty());
  CHECK(is_cartier(m1, IntVec(5, 0)));
  CHECK_FALSE(is_q_cartier(m1, int_vec({1, 0, 0, 0, 0})));
  CHECK_FALSE(picard_integral(m1, A1).index.has_value());
  auto wit = q_cartier_witness(p2, int_vec({2, 0, 0}));
  REQUIRE(wit.ok);
  // m_sigma reproduces c on the rays of sigma
  for (std::size_t s = 0; s < p2.max_cones.size(); ++s)
    for (auto i : indices_of(p2.max_cones[s])) CHECK(dot(to_rat(p2.ray(i)), wit.m_sigma[s]) == Rat(i == 0 ? 2 : 0));
}
