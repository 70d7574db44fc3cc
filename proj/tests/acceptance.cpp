// Acceptance criteria: one PASS/FAIL line each, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "toric/circuits.hpp"
#include "toric/classgroup.hpp"
#include "toric/cohomology.hpp"
#include "toric/discriminantal.hpp"
#include "toric/frobenius.hpp"
#include "toric/mcm.hpp"
#include "toric/surfaces.hpp"

using namespace toric;

namespace {

Fan fixture(const std::string& name) { return load_fan(std::string(TORIC_FIXTURES) + "/" + name + ".json"); }

// Collects failed checks with a short reason.
struct Check {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

std::string str(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string str(const DimVec& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << to_string(h[i]);
  return os.str();
}

IntVec lift_window(const ClassGroup& A, const IntVec& w) {
  IntVec free(w.begin(), w.begin() + A.rank()), tors(w.begin() + A.rank(), w.end());
  return A.lift(free, tors);
}

void criterion1(Check& ck) {
  auto w = fixture("wps235");
  auto A = class_group(w);
  ck.expect(A.rank() == 1 && !A.has_torsion(), "class group is not Z");
  ck.expect(A.display(IntVec{1, 0, 0}) == int_vec({2}) && A.display(IntVec{0, 1, 0}) == int_vec({3}) &&
                A.display(IntVec{0, 0, 1}) == int_vec({5}),
            "Gale duals differ from (2,3,5)");
  ck.expect(A.display(canonical_divisor(3)) == int_vec({-10}), "canonical class is not -10");
  std::set<long> sums;
  for (long r = 1; r <= 20; ++r)
    for (long s = 1; s <= 20; ++s)
      for (long t = 1; t <= 20; ++t) sums.insert(2 * r + 3 * s + 5 * t);
  CohomologyEngine eng(w, whole_variety());
  for (long k = -40; k <= 0; ++k) {
    auto h = eng.compute(A.lift(int_vec({k})));
    bool nonzero = !h[2].zero();
    if (nonzero != (sums.count(-k) > 0)) ck.expect(false, "h^2(O(" + std::to_string(k) + ")) = " + to_string(h[2]));
  }
  ck.expect(!eng.compute(A.lift(int_vec({-10})))[2].zero(), "h^2(-10) = 0");
  ck.expect(eng.compute(A.lift(int_vec({-11})))[2].zero(), "h^2(-11) != 0");
  ck.expect(eng.compute(A.lift(int_vec({1})))[0].zero(), "h^0(1) != 0");
}

void criterion2(Check& ck) {
  auto f = fixture("f3");
  ArithmeticCores cores(f);
  auto rows = surface_classify_window(cores, 15);
  std::size_t residual = 0;
  for (const auto& r : rows) {
    bool vanish = r.h[1].zero() && r.h[2].zero();
    if (!vanish) continue;
    IntVec c = cores.A().lift(r.cls);
    bool covered = cores.in_A_nef(c);
    for (const auto& pr : opposite_pairs(f, cores.A())) covered = covered || in_A_pq(cores, pr, c);
    if (!covered) {
      ++residual;
      ck.note("residual " + str(r.cls));
    }
  }
  ck.expect(residual == 1, "residual vanishing classes: " + std::to_string(residual));
  ck.expect(same_cone(cores.nef(), cone_from_generators({{1, 0}, {3, 1}}, 2)), "nef cone differs");
  auto pairs = opposite_pairs(f, cores.A());
  auto members = [&](long R) {
    std::size_t n = 0;
    for (const auto& x : window_classes(cores.A(), R))
      if (in_A_pq(cores, pairs.at(0), cores.A().lift(x))) ++n;
    return n;
  };
  std::size_t m15 = members(15), m20 = members(20), m25 = members(25);
  ck.note("A_{2,4} members at radius 15/20/25: " + std::to_string(m15) + "/" + std::to_string(m20) + "/" +
          std::to_string(m25));
  ck.expect(m15 >= 25, "A_{2,4} has " + std::to_string(m15) + " < 25 members in [-15,15]^2");
  ck.expect(m15 < m20 && m20 < m25, "A_{2,4} member count not increasing");
}

void criterion3(Check& ck) {
  for (auto [nm, want] : {std::pair<const char*, std::size_t>{"mcm1", 19}, {"mcm2", 31}}) {
    auto t0 = std::chrono::steady_clock::now();
    auto f = fixture(nm);
    AffineCone cone(f);
    auto e = enumerate_mcm(cone);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ck.expect(e.classes.size() == want, std::string(nm) + ": " + std::to_string(e.classes.size()) + " classes");
    ck.expect(e.stable, std::string(nm) + ": window not stable");
    ck.expect(secs < 300, std::string(nm) + ": over 5 minutes");
    if (std::string(nm) == "mcm1") {
      ArithmeticCores cores(f);
      for (const auto& x : e.classes)
        ck.expect(cores.in_A_zero(lift_window(cone.A(), x)), "mcm1 class " + str(x) + " not 0-essential");
    }
  }
}

void criterion4(Check& ck) {
  auto f1 = fixture("mcm1");
  AffineCone c1(f1);
  std::size_t n = 0;
  for (const auto& x : window_classes(c1.A(), default_mcm_radius(c1.A()))) {
    auto r = mcm_criterion_report(c1, lift_window(c1.A(), x));
    ++n;
    if (r.mcm != r.all_triangulations_vanish) ck.expect(false, "mcm1 class " + str(x) + " breaks the equivalence");
  }
  ck.note("mcm1 equivalence checked on " + std::to_string(n) + " classes");
  auto f2 = fixture("mcm2");
  AffineCone c2(f2);
  std::vector<Mask> reference;
  for (auto cell : std::vector<std::vector<std::size_t>>{{0, 1, 3, 4}, {0, 1, 3, 5}, {0, 1, 4, 5}, {0, 2, 3, 5},
                                                         {1, 2, 3, 5}})
    reference.push_back(mask_of(cell));
  std::sort(reference.begin(), reference.end());
  const Triangulation* tp = nullptr;
  for (const auto& t : c2.regular_triangulations())
    if (t.cells == reference) tp = &t;
  if (!tp) {
    ck.expect(false, "reference triangulation not among the regular triangulations");
    return;
  }
  for (auto c : {int_vec({-1, -1, -1, 0, 0, 0}), int_vec({0, 0, 0, -1, -1, -1})}) {
    ck.expect(c2.is_mcm(c), str(c) + " not MCM");
    auto h = c2.pushforward_vanishing(*tp, c);
    ck.note(str(c) + " on the reference triangulation: h = " + str(h));
    ck.expect(!h[1].zero(), str(c) + ": h^1 = 0 on the reference triangulation");
  }
}

void criterion5(Check& ck) {
  auto s = fixture("surf8");
  IntVec c = int_vec({-1, 1, 1, 0, 0, 1, 0, -20});
  ck.expect(smooth_necessary_conditions(s, c), "necessary conditions fail");
  ck.expect(symmetric_conditions(s, c), "symmetric conditions fail");
  auto h = global_cohomology(s, c);
  ck.note("h = " + str(h.h));
  ck.expect(!h[1].zero(), "h^1 = 0");
}

void criterion6(Check& ck) {
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> u(-4, 4);
  for (auto nm : {"p1", "p2", "f3", "wps235", "surf8", "mcm1", "mcm2", "conifold"}) {
    auto f = fixture(nm);
    // complete fans: global cohomology; affine cones: local cohomology at the fixed point
    std::vector<Mask> V = f.max_cones.size() == 1 ? std::vector<Mask>{f.max_cones[0]} : whole_variety();
    CohomologyEngine eng(f, V);
    for (int t = 0; t < 50; ++t) {
      IntVec c(f.n());
      for (auto& x : c) x = u(rng);
      auto g = eng.compute(c);
      auto b = toric::test::brute_cohomology(f, V, c, 2);
      std::vector<Int> wide;
      for (std::size_t i = 0; i <= f.d(); ++i) {
        if (!g[i].infinite) {
          if (g[i].value != b[i]) ck.expect(false, std::string(nm) + " " + str(c) + " degree " + std::to_string(i));
          continue;
        }
        // an infinite degree must keep growing with the box
        if (wide.empty()) wide = toric::test::brute_cohomology(f, V, c, 5);
        if (!(b[i] > 0 && wide[i] > b[i]))
          ck.expect(false, std::string(nm) + " " + str(c) + " degree " + std::to_string(i) + " not growing");
      }
      for (std::size_t i = f.d() + 1; i < g.h.size(); ++i)
        if (!g[i].zero()) ck.expect(false, std::string(nm) + " nonzero above d");
    }
  }
}

void criterion7(Check& ck) {
  std::size_t serre = 0, chi = 0, kv = 0, core = 0, antinef = 0;
  for (auto nm : {"p1", "p2", "f3", "wps235", "surf8"}) {
    auto f = fixture(nm);
    ArithmeticCores cores(f);
    const auto& A = cores.A();
    CohomologyEngine eng(f, whole_variety());
    long R = A.rank() == 1 ? 40 : (A.rank() == 2 ? 12 : 1);
    auto window = window_classes(A, R);
    // the sum of the nef generators lies in the interior of the nef cone
    IntVec inner(A.rank(), Int(0));
    for (const auto& g : cores.nef().generators)
      for (std::size_t k = 0; k < A.rank(); ++k) inner[k] += g[k].get_num();
    window.push_back(inner);
    for (const auto& x : window) {
      IntVec c = lift_window(A, x);
      if (!is_q_cartier(f, c)) continue;
      auto h = eng.compute(c);
      IntVec kd(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) kd[i] = -1 - c[i];
      auto hk = eng.compute(kd);
      bool ok = true;
      for (std::size_t i = 0; i <= f.d(); ++i) ok = ok && h[i] == hk[f.d() - i];
      ck.expect(ok, std::string(nm) + " Serre duality fails at " + str(x));
      ++serre;
      RatVec q = A.rational(c);
      if (cores.nef().contains(q)) {
        if (is_cartier(f, c)) {
          auto e = euler_characteristic(f, c);
          ck.expect(e && *e == polytope_points(f, c).count, std::string(nm) + " chi != |P_D| at " + str(x));
          ++chi;
        }
        IntVec neg(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) neg[i] = -c[i];
        auto hn = eng.compute(neg);
        int kap = iitaka_dimension(f, c).kappa;
        for (std::size_t i = 0; i <= f.d(); ++i)
          if (static_cast<int>(i) != kap && !hn[i].zero())
            ck.expect(false, std::string(nm) + " antinef concentration fails at " + str(x));
        ++antinef;
      }
      // D in the interior of K + nef
      RatVec shifted(q), minus_k = A.rational(IntVec(f.n(), 1));
      for (std::size_t k = 0; k < q.size(); ++k) shifted[k] = q[k] + minus_k[k];
      if (cores.nef().contains_interior(shifted)) {
        ++kv;
        ck.expect(h.vanishes_above(0), std::string(nm) + " KV fails at " + str(x));
        ck.expect(cores.in_A_nef(c), std::string(nm) + " interior class outside A_nef at " + str(x));
      }
      if (cores.in_A_nef(c)) {
        ++core;
        ck.expect(h.vanishes_above(0), std::string(nm) + " A_nef member with higher cohomology at " + str(x));
      }
    }
  }
  for (auto nm : {"p2", "f3"}) {
    auto f = fixture(nm);
    ck.expect(chamber_equality_test(f, arrangement(f)), std::string(nm) + " chamber decompositions differ");
  }
  ck.note("Serre " + std::to_string(serre) + ", chi " + std::to_string(chi) + ", KV " + std::to_string(kv) +
          ", A_nef " + std::to_string(core) + ", antinef " + std::to_string(antinef));
  ck.expect(serre > 0 && chi > 0 && kv > 0 && core > 0 && antinef > 0, "an empty property sample");
}

void criterion8(Check& ck) {
  for (auto nm : {"p1", "p2", "f3", "wps235", "surf8", "mcm1", "mcm2", "conifold"}) {
    auto f = fixture(nm);
    auto arr = arrangement(f);
    for (const auto& c : arr.circuits) {
      for (std::size_t j = 0; j < f.d(); ++j) {
        Int s = 0;
        for (std::size_t k = 0; k < c.idx.size(); ++k) s += c.alpha[k] * f.rays(c.idx[k], j);
        ck.expect(s == 0, std::string(nm) + " inexact circuit relation");
      }
      OrientedCircuit oc{c, 1};
      for (std::size_t i = 0; i < f.n(); ++i) {
        Side s = side(arr, oc, arr.gale[i]);
        Side want = (oc.plus() >> i) & 1 ? Side::interior : ((oc.minus() >> i) & 1 ? Side::outside : Side::boundary);
        ck.expect(s == want, std::string(nm) + " separating lemma fails");
      }
      auto cf = circuit_fan(f.rays, oc);
      if (saturation_index(cf.rays) != 1) continue;
      for (Mask J = 1; J + 1 < (Mask(1) << c.idx.size()); ++J) {
        Int g = 0;
        for (std::size_t k = 0; k < c.idx.size(); ++k)
          if (!((J >> k) & 1)) g = gcd(g, c.alpha[k]);
        ck.expect(saturation_index(cf.rays.select_rows(indices_of(J))) == g, std::string(nm) + " gcd formula fails");
      }
    }
  }
  auto w = fixture("wps235");
  OrientedCircuit oc{enumerate_circuits(w.rays)[0], 1};
  ck.expect(one_circuit_pic_generator(w.rays, oc) == 30, "Picard generator is not 30");
  auto pic = picard_integral(w, class_group(w));
  ck.expect(pic.index && *pic.index == 30, "integral Picard index is not 30");
}

}  // namespace

int main() {
  struct Item {
    int id;
    const char* title;
    std::function<void(Check&)> run;
    double limit;  // seconds, 0 for none
  };
  std::vector<Item> items = {
      {1, "P(2,3,5) suite", criterion1, 1.0},
      {2, "F3 classification", criterion2, 30.0},
      {3, "MCM counts", criterion3, 600.0},
      {4, "triangulation criterion", criterion4, 0},
      {5, "SURF8 counterexample", criterion5, 0},
      {6, "oracle equivalence", criterion6, 0},
      {7, "property suites", criterion7, 0},
      {8, "lemma-level checks", criterion8, 0},
  };
  int failed = 0;
  for (const auto& it : items) {
    Check ck;
    auto t0 = std::chrono::steady_clock::now();
    try {
      it.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (it.limit > 0 && secs >= it.limit) ck.expect(false, "time limit exceeded");
    bool pass = ck.failures.empty();
    failed += !pass;
    std::printf("%s %d %s (%.2fs)", pass ? "PASS" : "FAIL", it.id, it.title, secs);
    for (std::size_t k = 0; k < ck.failures.size() && k < 3; ++k) std::printf("; %s", ck.failures[k].c_str());
    if (ck.failures.size() > 3) std::printf("; +%zu more", ck.failures.size() - 3);
    for (const auto& n : ck.notes) std::printf(" [%s]", n.c_str());
    std::printf("\n");
  }
  return failed ? 1 : 0;
}
