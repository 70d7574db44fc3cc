#include "doctest.h"

#include "support.hpp"
#include "toric/fan.hpp"

using namespace toric;
using toric::test::fixture;
using toric::test::has_code;

namespace {

Int det2(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

}  // namespace

TEST_CASE("fixtures validate") {
  for (auto nm : {"p1", "p2", "f3", "wps235", "surf8", "mcm1", "mcm2", "conifold"}) {
    CAPTURE(nm);
    auto v = validate(fixture(nm));
    CHECK(v.ok());
  }
  CHECK(validate(fixture("p2")).complete);
  CHECK(validate(fixture("f3")).complete);
  CHECK(validate(fixture("wps235")).complete);
  CHECK(validate(fixture("surf8")).complete);
  CHECK_FALSE(validate(fixture("mcm1")).complete);
}

TEST_CASE("validation errors") {
  CHECK(has_code(validate(make_fan({{1, 0}, {0, 0}}, {{0}, {1}})).errors, "zero-ray"));
  CHECK(has_code(validate(make_fan({{2, 0}, {0, 1}}, {{0, 1}})).errors, "non-primitive-ray"));
  CHECK(has_code(validate(make_fan({{1, 0}, {1, 0}}, {{0}, {1}})).errors, "duplicate-ray"));
  CHECK(has_code(validate(make_fan({{1, 0}, {-1, 0}}, {{0, 1}})).errors, "not-strictly-convex"));
  CHECK(has_code(validate(make_fan({{1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}})).errors, "non-extremal-ray"));
  CHECK(has_code(validate(make_fan({{1, 0}, {1, 1}, {0, 1}, {1, 2}}, {{0, 1}, {2, 3}, {0, 3}})).errors,
                 "bad-intersection"));
  auto w = validate(make_fan({{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}}));
  CHECK(w.ok());
  CHECK(has_code(w.warnings, "unused-rays"));
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_WITH_AS(parse_fan(R"({"rays": [[1,0]]})"), doctest::Contains("max_cones"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"rays": [[1,0],[0]], "max_cones": []})"), doctest::Contains("rays[1]"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_fan(R"({"rays": [[1,0]], "max_cones": [[0, 3]]})"), doctest::Contains("out of range"),
                       std::runtime_error);
  CHECK_THROWS_AS(parse_fan("{not json"), std::runtime_error);
}

TEST_CASE("cone faces and simplicial model") {
  auto f3 = fixture("f3");
  auto K = simplicial_model(f3);
  CHECK(K.faces.size() == 1 + 4 + 4);
  CHECK(K.contains(mask_of({0, 1})));
  CHECK_FALSE(K.contains(mask_of({0, 2})));
  auto m1 = fixture("mcm1");
  // square-based cone: 5 rays, faces = origin + 5 rays + 5 edges + the cone
  CHECK(cone_faces(m1.rays, m1.all()).size() == 12);
  CHECK(cone_facets(m1.rays, m1.all()).size() == 5);
  CHECK_FALSE(is_simplicial_cone(m1.rays, m1.all()));
  CHECK(cone_dim(m1.rays, m1.all()) == 3);
  // full simplex on the rays
  CHECK(simplicial_model(m1).faces.size() == 32);
}

TEST_CASE("subvariety complexes") {
  auto p2 = fixture("p2");
  auto all = simplicial_model(p2);
  CHECK(subvariety_complex(p2, {}) == all);
  CHECK(subvariety_complex(p2, {0}).is_void());
  // fixed point of the cone {1,2}: every face except {1,2} itself
  auto fp = subvariety_complex(p2, {mask_of({0, 1})});
  CHECK(fp.faces.size() == all.faces.size() - 1);
  CHECK(is_subcomplex(fp, all));
  CHECK_THROWS_AS(subvariety_complex(p2, {p2.all()}), std::invalid_argument);
}

TEST_CASE("walls carry exact circuit relations") {
  for (auto nm : {"p2", "f3", "wps235", "surf8"}) {
    auto f = fixture(nm);
    auto ws = walls(f);
    CHECK(ws.size() == (f.d() == 2 ? f.n() : 3));
    for (const auto& w : ws) {
      for (std::size_t j = 0; j < f.d(); ++j) {
        Int s = 0;
        for (std::size_t i = 0; i < f.n(); ++i) s += w.relation[i] * f.rays(i, j);
        CHECK(s == 0);
      }
      CHECK(subset_of(w.circuit, f.max_cones[w.sigma] | f.max_cones[w.sigma2]));
    }
  }
  CHECK_THROWS_AS(walls(fixture("mcm1")), std::invalid_argument);
}

TEST_CASE("surface self-intersections") {
  for (auto nm : {"f3", "surf8"}) {
    auto f = fixture(nm);
    auto a = surface_selfintersections(f);
    const std::size_t n = f.n();
    for (std::size_t i = 0; i < n; ++i) {
      // smooth case: D_i^2 = -det(l_{i-1}, l_{i+1})
      CHECK(a[i] == -det2(f.ray((i + n - 1) % n), f.ray((i + 1) % n)));
    }
  }
  CHECK(surface_selfintersections(fixture("f3")) == int_vec({0, -3, 0, 3}));
  auto order = circular_order(int_matrix({{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, 2));
  CHECK(order == std::vector<std::size_t>{0, 2, 1, 3});
  CHECK_THROWS_AS(surface_selfintersections(make_fan({{1, 0}, {0, -1}, {-1, -1}, {0, 1}},
                                                     {{0, 1}, {1, 2}, {2, 3}, {3, 0}})),
                  std::invalid_argument);
}
