#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "../oracle.hpp"
#include "support.hpp"
#include "toric/classgroup.hpp"
#include "toric/cohomology.hpp"
#include "toric/discriminantal.hpp"

using namespace toric;
using toric::test::fixture;

namespace {

const char* kComplete[] = {"p1", "p2", "f3", "wps235", "surf8"};

std::vector<Int> brute_cohomology(const Fan& f, const IntVec& c) {
  return toric::test::brute_cohomology(f, whole_variety(), c);
}

IntVec random_divisor(std::mt19937& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> u(lo, hi);
  IntVec c(n);
  for (auto& x : c) x = u(rng);
  return c;
}

IntVec minus_one_minus(const IntVec& c) {
  IntVec k(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) k[i] = -1 - c[i];
  return k;
}

IntVec negated(const IntVec& c) {
  IntVec k(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) k[i] = -c[i];
  return k;
}

}  // namespace

TEST_CASE("realized signatures on small examples") {
  auto p2 = fixture("p2");
  auto regs = realized_signatures(p2, IntVec(3, 0));
  std::set<Mask> got;
  for (const auto& r : regs) {
    got.insert(r.I);
    if (r.I == 0) {
      CHECK(r.bounded);
      CHECK(r.count.count == 1);
    }
  }
  std::set<Mask> want;
  for (Mask I = 0; I < 7; ++I) want.insert(I);
  CHECK(got == want);

  auto w = fixture("wps235");
  auto A = class_group(w);
  bool seen = false;
  for (const auto& r : realized_signatures(w, A.lift(int_vec({-10}))))
    if (r.I == 7) {
      seen = true;
      CHECK(r.bounded);
      CHECK_FALSE(r.count.infinite);
      CHECK(r.count.count == 1);
    }
  CHECK(seen);
  CHECK(to_string(global_cohomology(w, A.lift(int_vec({-10})))[2]) == "1");
}

TEST_CASE("engine agrees with a per-character oracle") {
  std::mt19937 rng(20261019);
  for (auto nm : kComplete) {
    CAPTURE(std::string(nm));
    auto f = fixture(nm);
    CohomologyEngine eng(f, whole_variety());
    for (int t = 0; t < 50; ++t) {
      auto c = random_divisor(rng, f.n(), -4, 4);
      CAPTURE(c);
      auto g = eng.compute(c, 100000);
      REQUIRE(g.finite());
      auto h = brute_cohomology(f, c);
      for (std::size_t i = 0; i <= f.d(); ++i) CHECK(g[i].value == h[i]);
      for (std::size_t i = f.d() + 1; i < g.h.size(); ++i) CHECK(g[i].zero());
      // characters add up to the dimensions and carry their own signature
      REQUIRE_FALSE(g.truncated);
      std::vector<Int> sum(g.h.size(), Int(0));
      for (const auto& ch : g.characters) {
        CHECK(signature(f, c, ch.m) == ch.signature);
        sum[ch.degree] += ch.dim;
      }
      for (std::size_t i = 0; i < g.h.size(); ++i) CHECK(sum[i] == g[i].value);
      for (std::size_t k = 0; k <= f.d() + 1; ++k) {
        bool want = true;
        for (std::size_t i = 0; i < k; ++i) want = want && g[i].zero();
        CHECK(eng.vanishes_below(c, k) == want);
      }
    }
  }
}

TEST_CASE("region counts partition the lattice points of the box") {
  std::mt19937 rng(7);
  for (auto nm : {"p2", "f3", "wps235"}) {
    auto f = fixture(nm);
    for (int t = 0; t < 10; ++t) {
      auto c = random_divisor(rng, f.n(), -3, 3);
      for (const auto& r : realized_signatures(f, c)) {
        if (r.bounded) CHECK_FALSE(r.count.infinite);
        if (!r.bounded) continue;
        // bounded regions are exactly counted by their region system
        CHECK(r.count.count == count_lattice_points(region_system(f, c, r.I), f.d()).count);
      }
    }
  }
}

TEST_CASE("Serre duality on simplicial complete fans") {
  std::mt19937 rng(11);
  for (auto nm : kComplete) {
    auto f = fixture(nm);
    for (int t = 0; t < 25; ++t) {
      auto c = random_divisor(rng, f.n(), -3, 3);
      auto s = serre_duality_check(f, c);
      CHECK(s.precondition);
      CHECK(s.holds);
      auto h = brute_cohomology(f, c), k = brute_cohomology(f, minus_one_minus(c));
      for (std::size_t i = 0; i <= f.d(); ++i) CHECK(h[i] == k[f.d() - i]);
    }
  }
}

TEST_CASE("nef divisors: vanishing, Euler characteristic and antinef vanishing") {
  for (auto nm : kComplete) {
    CAPTURE(std::string(nm));
    auto f = fixture(nm);
    auto arr = arrangement(f);
    auto nef = nef_cone(f, arr).cone;
    auto A = arr.A;
    CohomologyEngine eng(f, whole_variety());
    long R = A.rank() == 1 ? 40 : (A.rank() == 2 ? 8 : 2);
    std::vector<long> x(A.rank(), -R);
    std::size_t nefs = 0, kv = 0;
    auto visit = [&](const IntVec& coords) {
      IntVec c = A.lift(coords);
      if (nef.contains(A.rational(c))) {
        ++nefs;
        auto g = eng.compute(c);
        CHECK(g.vanishes_above(0));
        CHECK(g[0].value == polytope_points(f, c).count);
        if (is_cartier(f, c)) CHECK(*euler_characteristic(f, c) == polytope_points(f, c).count);
        CHECK(antinef_vanishing_check(f, c));
        auto neg = eng.compute(negated(c));
        auto kap = iitaka_dimension(f, c).kappa;
        for (std::size_t i = 0; i <= f.d(); ++i)
          if (static_cast<int>(i) != kap) CHECK(neg[i].zero());
      }
      if (nef.contains_interior(A.rational(c))) {
        ++kv;
        IntVec kd(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) kd[i] = c[i] - 1;
        CHECK(eng.compute(kd).vanishes_above(0));
      }
    };
    while (true) {
      visit(IntVec(x.begin(), x.end()));
      std::size_t j = 0;
      while (j < x.size() && x[j] == R) x[j] = -R, ++j;
      if (j == x.size()) break;
      ++x[j];
    }
    // the sum of the generators lies in the interior
    IntVec sum(A.rank(), Int(0));
    for (const auto& g : nef.generators)
      for (std::size_t k = 0; k < A.rank(); ++k) sum[k] += g[k].get_num();
    visit(sum);
    CHECK(nefs > 0);
    CHECK(kv > 0);
  }
}

TEST_CASE("Iitaka dimension on F3") {
  auto f = fixture("f3");
  auto A = class_group(f);
  auto one = iitaka_dimension(f, A.lift(int_vec({1, 0})));
  CHECK(one.kappa == 1);
  REQUIRE(one.fib.size() == 1);
  CHECK(one.fib[0].support == mask_of({1, 3}));
  CHECK(iitaka_dimension(f, A.lift(int_vec({4, 1}))).kappa == 2);
  auto zero = iitaka_dimension(f, IntVec(4, 0));
  CHECK(zero.kappa == 0);
  CHECK(zero.fib.size() == 2);
  CHECK_THROWS_AS(iitaka_dimension(f, A.lift(int_vec({0, 1}))), std::invalid_argument);
  // kappa = dim P_D for nef D
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; 3 * b <= a + 6 && b <= 3; ++b) {
      auto c = A.lift(int_vec({a, b}));
      if (!nef_cone(f, arrangement(f)).cone.contains(A.rational(c))) continue;
      CHECK(iitaka_dimension(f, c).kappa == polytope_dim(f, c));
    }
}

TEST_CASE("local cohomology") {
  auto p2 = fixture("p2");
  for (auto c : {IntVec{0, 0, 0}, IntVec{2, -1, 0}}) {
    auto whole = local_cohomology(p2, whole_variety(), c);
    auto glob = global_cohomology(p2, c);
    CHECK(whole.h == glob.h);
  }
  // a smooth torus fixed point of a surface: only the top degree, infinite
  auto pt = local_cohomology(p2, {p2.max_cones[0]}, IntVec(3, 0));
  CHECK(pt[0].zero());
  CHECK(pt[1].zero());
  CHECK(pt[2].infinite);
  // a torus-invariant curve: degree 1 only
  auto cur = local_cohomology(p2, {mask_of({0})}, IntVec(3, 0));
  CHECK(cur[0].zero());
  CHECK(cur[1].infinite);
  CHECK(cur[2].zero());
  CHECK(is_mcm_sheaf(p2, IntVec{1, -2, 0}));
}

TEST_CASE("coefficient field does not matter on these fans") {
  std::mt19937 rng(3);
  auto f = fixture("surf8");
  CohomologyEngine q(f, whole_variety()), two(f, whole_variety(), Field{2});
  for (int t = 0; t < 20; ++t) {
    auto c = random_divisor(rng, f.n(), -3, 3);
    CHECK(q.compute(c).h == two.compute(c).h);
  }
}
