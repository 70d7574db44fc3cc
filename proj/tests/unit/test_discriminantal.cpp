#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "support.hpp"
#include "toric/discriminantal.hpp"

using namespace toric;
using toric::test::fixture;

namespace {

const char* kAll[] = {"p1", "p2", "f3", "wps235", "surf8", "mcm1", "mcm2", "conifold"};
const char* kComplete[] = {"p1", "p2", "f3", "wps235", "surf8"};

// Subspace spanned by vs, as a cone.
RatCone subspace(const std::vector<RatVec>& vs, std::size_t r) {
  std::vector<RatVec> g;
  for (const auto& v : vs) {
    g.push_back(v);
    RatVec w(v);
    for (auto& x : w) x = -x;
    g.push_back(w);
  }
  return cone_from_generators(g, r);
}

RatCone whole_space(std::size_t r) {
  std::vector<RatVec> e;
  for (std::size_t k = 0; k < r; ++k) {
    RatVec v(r, Rat(0));
    v[k] = 1;
    e.push_back(v);
  }
  return subspace(e, r);
}

bool positive_multiple(const RatVec& a, const RatVec& b) {
  std::optional<Rat> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0 && b[i] == 0) continue;
    if (a[i] == 0 || b[i] == 0) return false;
    Rat q = a[i] / b[i];
    if (q <= 0 || (t && *t != q)) return false;
    t = q;
  }
  return t.has_value();
}

}  // namespace

TEST_CASE("hyperplanes of F3") {
  auto f = fixture("f3");
  auto arr = arrangement(f);
  auto h24 = hyperplane(arr, arr.circuits[0]);
  CHECK(h24.circuit.support == mask_of({1, 3}));
  CHECK(dot(h24.normal, RatVec{1, 0}) == 0);
  CHECK(h24.spanning == std::vector<std::size_t>{0, 2});
  auto h123 = hyperplane(arr, arr.circuits[1]);
  CHECK(dot(h123.normal, RatVec{3, 1}) == 0);
  CHECK(dot(h123.normal, RatVec{1, 0}) != 0);
  CHECK(to_string(Side::boundary) == "boundary");
}

TEST_CASE("separating lemma and half-space pairs") {
  for (auto nm : kAll) {
    CAPTURE(std::string(nm));
    auto f = fixture(nm);
    auto arr = arrangement(f);
    for (const auto& oc : arr.oriented) {
      for (std::size_t i = 0; i < f.n(); ++i) {
        Side s = side(arr, oc, arr.gale[i]);
        if (oc.plus() & (Mask(1) << i))
          CHECK(s == Side::interior);
        else if (oc.minus() & (Mask(1) << i))
          CHECK(s == Side::outside);
        else
          CHECK(s == Side::boundary);
      }
      std::vector<RatVec> off;
      for (std::size_t i = 0; i < f.n(); ++i)
        if (!(oc.circuit.support & (Mask(1) << i))) off.push_back(arr.gale[i]);
      auto both = intersect(half_space(arr, oc), half_space(arr, oc.opposite()));
      CHECK(same_cone(both, subspace(off, arr.r())));
      CHECK(both.dim() + 1 == arr.r());
    }
  }
}

TEST_CASE("circuit functionals do not depend on the representative") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> u(-5, 5);
  for (auto nm : kAll) {
    auto f = fixture(nm);
    auto arr = arrangement(f);
    for (int t = 0; t < 20; ++t) {
      IntVec c(f.n()), m(f.d());
      for (auto& x : c) x = u(rng);
      for (auto& x : m) x = u(rng);
      IntVec c2(c);
      for (std::size_t i = 0; i < f.n(); ++i)
        for (std::size_t j = 0; j < f.d(); ++j) c2[i] += f.rays(i, j) * m[j];
      for (const auto& oc : arr.oriented) {
        CHECK(dot(arr.functional(oc), arr.A.rational(c)) == Rat(circuit_value(oc, c)));
        CHECK(circuit_value(oc, c) == circuit_value(oc, c2));
      }
    }
  }
}

TEST_CASE("intersection property for random subsets") {
  std::mt19937 rng(17);
  for (auto nm : kAll) {
    CAPTURE(std::string(nm));
    auto f = fixture(nm);
    auto arr = arrangement(f);
    std::uniform_int_distribution<Mask> u(0, f.all());
    for (int t = 0; t < 30; ++t) {
      Mask I = u(rng);
      RatCone meet = whole_space(arr.r());
      for (const auto& oc : arr.oriented)
        if (subset_of(oc.circuit.support, I)) meet = intersect(meet, half_space(arr, oc));
      CHECK(same_cone(meet, subspace(span_H(arr, I), arr.r())));
    }
  }
}

TEST_CASE("nef cones") {
  for (auto nm : kAll) {
    auto f = fixture(nm);
    auto arr = arrangement(f);
    CHECK(nef_cone(f, arr).routes_agree);
  }
  auto f3 = fixture("f3");
  auto a3 = arrangement(f3);
  CHECK(same_cone(nef_cone(f3, a3).cone, cone_from_generators({{1, 0}, {3, 1}}, 2)));
  auto p2 = fixture("p2");
  CHECK(same_cone(nef_cone(p2, arrangement(p2)).cone, cone_from_generators({{1}}, 1)));
  auto w = fixture("wps235");
  auto aw = arrangement(w);
  auto nw = nef_cone(w, aw).cone;
  CHECK(nw.contains(RatVec{Rat(1, 30)}));
  CHECK_FALSE(nw.contains(RatVec{Rat(-1, 30)}));
  CHECK(nw.generators.size() == 1);
  CHECK(nef_cone(fixture("surf8"), arrangement(fixture("surf8"))).cone.generators.size() == 10);
}

TEST_CASE("oriented flats") {
  auto f3 = fixture("f3");
  auto arr = arrangement(f3);
  auto nef = nef_cone(f3, arr).cone;
  std::set<std::string> labels;
  for (const auto& oc : nef_oriented_flat(arr, nef)) labels.insert(oc.label());
  CHECK(labels == std::set<std::string>{"+{2,4} -{}", "+{1,3} -{2}", "+{1,3,4} -{}"});
  // every member contains the nef cone, every non-member does not
  auto flat = nef_oriented_flat(arr, nef);
  for (const auto& oc : arr.oriented) {
    bool member = std::find(flat.begin(), flat.end(), oc) != flat.end();
    bool contains = true;
    for (const auto& g : nef.generators) contains = contains && side(arr, oc, g) != Side::outside;
    CHECK(member == contains);
  }
  auto ray = cone_from_generators({{1, 0}}, 2);
  std::set<std::string> minus;
  for (const auto& oc : face_oriented_flat(arr, ray)) minus.insert(oc.label());
  CHECK(minus.count("+{2,4} -{}"));
  CHECK(minus.count("+{} -{2,4}"));
  auto p2 = fixture("p2");
  auto ap = arrangement(p2);
  auto fp = nef_oriented_flat(ap, nef_cone(p2, ap).cone);
  REQUIRE(fp.size() == 1);
  CHECK(fp[0].plus() == 7);
}

TEST_CASE("Mori cone is dual to the nef cone") {
  for (auto nm : kComplete) {
    CAPTURE(std::string(nm));
    auto f = fixture(nm);
    auto arr = arrangement(f);
    auto nef = nef_cone(f, arr).cone;
    auto mori = mori_cone(f, arr);
    CHECK(same_cone(mori, cone_from_inequalities(nef.generators, {}, arr.r())));
    for (const auto& g : mori_generators(f, arr)) {
      CHECK(mori.contains(g.n1));
      for (const auto& x : nef.generators) CHECK(dot(g.n1, x) >= 0);
    }
  }
  auto f3 = fixture("f3");
  auto gens = mori_generators(f3, arrangement(f3));
  REQUIRE(gens.size() == 2);
  CHECK(mori_generators(fixture("p2"), arrangement(fixture("p2"))).size() == 1);
  auto wg = mori_generators(fixture("wps235"), arrangement(fixture("wps235")));
  REQUIRE(wg.size() == 1);
  CHECK(wg[0].n1 == RatVec{Rat(1, 6)});
}

TEST_CASE("orthant boundaries come from circuits") {
  for (auto nm : {"p2", "f3"}) {
    auto f = fixture(nm);
    auto arr = arrangement(f);
    for (Mask I = 0; I <= f.all(); ++I) {
      auto C = orthant_cone(arr, I);
      if (C.dim() < arr.r()) continue;
      for (const auto& a : C.inequalities) {
        bool found = false;
        for (std::size_t k = 0; k < arr.oriented.size(); ++k) {
          const auto& oc = arr.oriented[k];
          if (!positive_multiple(a, arr.functionals[k])) continue;
          CHECK(subset_of(oc.minus(), I));
          CHECK((oc.plus() & I) == 0);
          found = true;
        }
        CHECK(found);
      }
    }
  }
}

TEST_CASE("secondary cones and chamber decompositions") {
  auto p2 = fixture("p2");
  auto ap = arrangement(p2);
  CHECK(same_cone(secondary_cone(p2, ap, 0, mask_of({0, 1})), cone_from_generators({ap.gale[2]}, 1)));
  auto f3 = fixture("f3");
  auto a3 = arrangement(f3);
  CHECK(same_cone(secondary_cone(f3, a3, 0, mask_of({0, 1})), cone_from_generators({{1, 0}, {3, 1}}, 2)));
  CHECK_THROWS_AS(secondary_cone(f3, a3, 0, mask_of({1, 3})), std::invalid_argument);
  CHECK(chamber_equality_test(p2, ap));
  CHECK(chamber_equality_test(f3, a3));
}

TEST_CASE("rational cones") {
  auto c = cone_from_generators({{1, 0}, {3, 1}}, 2);
  CHECK(c.contains({2, 0}));
  CHECK(c.contains_interior({4, 1}));
  CHECK_FALSE(c.contains_interior({2, 0}));
  CHECK_FALSE(c.contains({0, 1}));
  CHECK(faces(c).size() == 4);
  CHECK(same_cone(negate(negate(c)), c));
  CHECK(same_cone(cone_from_inequalities({{0, 1}, {1, -3}}, {}, 2), c));
  CHECK(tight_set(c, {1, 0}).size() == 1);
  CHECK(intersect(c, negate(c)).is_zero());
}
