// toricctl: command line front end for the toric library.
//
// Exit status: 0 success, 1 parse or validation error, 2 scale limit or infinite dimension.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "toric/circuits.hpp"
#include "toric/classgroup.hpp"
#include "toric/cohomology.hpp"
#include "toric/discriminantal.hpp"
#include "toric/frobenius.hpp"
#include "toric/mcm.hpp"
#include "toric/surfaces.hpp"

using namespace toric;

namespace {

// Raised for conditions that map to exit status 2.
struct ScaleLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fan;
  std::string format = "table";
  unsigned long characteristic = 0;
  long window = 0;
  std::vector<long> divisor;
  std::vector<long> cls;
  std::size_t cap = 0;
};

std::string join(const IntVec& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const RatVec& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

// Table output: aligned columns, or tab-separated rows with a header line.
class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  void print(std::ostream& os, bool rows_mode) const {
    if (rows_mode) {
      emit(os, header_, "\t", {});
      for (const auto& r : rows_) emit(os, r, "\t", {});
      return;
    }
    std::vector<std::size_t> w(header_.size());
    for (std::size_t k = 0; k < header_.size(); ++k) w[k] = header_[k].size();
    for (const auto& r : rows_)
      for (std::size_t k = 0; k < r.size(); ++k) w[k] = std::max(w[k], r[k].size());
    emit(os, header_, "  ", w);
    for (const auto& r : rows_) emit(os, r, "  ", w);
  }

private:
  static void emit(std::ostream& os, const std::vector<std::string>& r, const char* sep,
                   const std::vector<std::size_t>& w) {
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (k) os << sep;
      os << r[k];
      if (!w.empty() && k + 1 < r.size()) os << std::string(w[k] - r[k].size(), ' ');
    }
    os << "\n";
  }
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string resolve_path(const std::string& arg) {
  namespace fs = std::filesystem;
  std::vector<std::string> tries = {arg, arg + ".json"};
  if (const char* dir = std::getenv("TORIC_FIXTURES")) {
    tries.push_back(std::string(dir) + "/" + arg);
    tries.push_back(std::string(dir) + "/" + arg + ".json");
  }
  for (const auto& t : tries)
    if (fs::is_regular_file(t)) return t;
  throw std::runtime_error("fan file not found: " + arg);
}

Fan load_checked(const Options& o) {
  Fan f = load_fan(resolve_path(o.fan));
  auto v = validate(f);
  if (!v.ok()) {
    std::ostringstream os;
    for (const auto& d : v.errors) os << "\n  " << d.code << ": " << d.message;
    throw std::runtime_error("invalid fan" + os.str());
  }
  for (const auto& d : v.warnings) std::cerr << "warning: " << d.code << ": " << d.message << "\n";
  return f;
}

// Divisor from --divisor (n coefficients, or class coordinates when the count matches) or --class.
IntVec divisor_of(const Fan& f, const ClassGroup& A, const Options& o) {
  const std::size_t coords = A.rank() + A.group.torsion.size();
  auto from_class = [&](const std::vector<long>& v) {
    if (v.size() != coords)
      throw std::runtime_error("class needs " + std::to_string(coords) + " coordinates, got " +
                               std::to_string(v.size()));
    IntVec free, tors;
    for (std::size_t k = 0; k < v.size(); ++k) (k < A.rank() ? free : tors).push_back(Int(v[k]));
    return A.lift(free, tors);
  };
  if (!o.cls.empty()) return from_class(o.cls);
  if (o.divisor.empty()) throw std::runtime_error("a divisor is required (--divisor or --class)");
  if (o.divisor.size() == f.n()) {
    IntVec c;
    for (auto x : o.divisor) c.push_back(Int(x));
    return c;
  }
  return from_class(o.divisor);
}

void divisor_header(const Options& o, const ClassGroup& A, const IntVec& c) {
  if (o.format != "table") return;
  IntVec t = A.torsion_part(c);
  std::cout << "# divisor " << paren(join(c)) << "  class " << paren(join(A.display(c)));
  if (!t.empty()) std::cout << " torsion " << paren(join(t));
  std::cout << "\n";
}

bool rows_mode(const Options& o) { return o.format == "rows"; }

int print_cohomology(const Options& o, const GradedCohomology& g) {
  Table t({"degree", "dim"});
  for (std::size_t i = 0; i < g.h.size(); ++i) t.add({std::to_string(i), to_string(g.h[i])});
  t.print(std::cout, rows_mode(o));
  if (o.cap > 0) {
    Table ch({"m", "signature", "degree", "dim"});
    for (const auto& c : g.characters)
      ch.add({paren(join(c.m)), mask_to_string(c.signature), std::to_string(c.degree), std::to_string(c.dim)});
    std::cout << "\n";
    ch.print(std::cout, rows_mode(o));
    if (g.truncated) std::cout << "# character list truncated at " << o.cap << "\n";
  }
  return g.finite() ? 0 : 2;
}

int cmd_validate(const Options& o) {
  Fan f = load_fan(resolve_path(o.fan));
  auto v = validate(f);
  Table t({"level", "code", "message"});
  for (const auto& d : v.errors) t.add({"error", d.code, d.message});
  for (const auto& d : v.warnings) t.add({"warning", d.code, d.message});
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o))
    std::cout << "# " << f.n() << " rays, dimension " << f.d() << ", " << f.max_cones.size() << " maximal cones, "
              << (v.complete ? "complete" : "not complete") << ", " << (v.ok() ? "valid" : "invalid") << "\n";
  return v.ok() ? 0 : 1;
}

int cmd_cohomology(const Options& o, bool local) {
  Fan f = load_checked(o);
  auto A = class_group(f);
  IntVec c = divisor_of(f, A, o);
  divisor_header(o, A, c);
  if (f.n() > 20) throw ScaleLimit("cohomology engine supports at most 20 rays");
  std::vector<Mask> V = whole_variety();
  if (local) {
    if (f.subvariety.empty()) throw std::runtime_error("fan file has no subvariety for local cohomology");
    V = f.subvariety;
  }
  CohomologyEngine eng(f, V, Field{o.characteristic});
  return print_cohomology(o, eng.compute(c, o.cap));
}

int cmd_circuits(const Options& o) {
  Fan f = load_checked(o);
  Table t({"support", "alpha", "fibrational"});
  for (const auto& c : enumerate_circuits(f.rays))
    t.add({mask_to_string(c.support), paren(join(c.alpha)), is_fibrational(c) ? "yes" : "no"});
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_gale(const Options& o) {
  Fan f = load_checked(o);
  auto A = class_group(f);
  Table t({"ray", "l_i", "D_i", "torsion"});
  for (std::size_t i = 0; i < f.n(); ++i) {
    IntVec e(f.n(), 0);
    e[i] = 1;
    t.add({std::to_string(i + 1), paren(join(f.ray(i))), paren(join(A.display(e))), paren(join(A.torsion_part(e)))});
  }
  if (!rows_mode(o)) {
    std::cout << "# class group: Z^" << A.rank();
    for (const auto& x : A.group.torsion) std::cout << " + Z/" << x;
    std::cout << ", K = " << paren(join(A.display(canonical_divisor(f.n())))) << "\n";
  }
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_picard(const Options& o) {
  Fan f = load_checked(o);
  auto A = class_group(f);
  auto pic = picard_integral(f, A);
  Table t({"generator", "class"});
  for (std::size_t k = 0; k < pic.generators.size(); ++k)
    t.add({paren(join(pic.generators[k])), paren(join(pic.display[k]))});
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o))
    std::cout << "# index in the class group: " << (pic.index ? pic.index->get_str() : std::string("infinite"))
              << "\n";
  return 0;
}

int cmd_nef(const Options& o) {
  Fan f = load_checked(o);
  auto arr = arrangement(f);
  auto nef = nef_cone(f, arr);
  Table t({"kind", "vector"});
  for (const auto& g : nef.cone.generators) t.add({"generator", paren(join(g))});
  for (const auto& g : nef.cone.lineality) t.add({"lineality", paren(join(g))});
  for (const auto& a : nef.cone.inequalities) t.add({"inequality", paren(join(a))});
  for (const auto& e : nef.cone.equations) t.add({"equation", paren(join(e))});
  for (const auto& oc : nef_oriented_flat(arr, nef.cone)) t.add({"half-space", oc.label()});
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o)) std::cout << "# routes agree: " << (nef.routes_agree ? "yes" : "no") << "\n";
  return nef.routes_agree ? 0 : 1;
}

int cmd_mori(const Options& o) {
  Fan f = load_checked(o);
  auto arr = arrangement(f);
  Table t({"circuit", "wall", "t", "curve"});
  for (const auto& g : mori_generators(f, arr)) {
    std::ostringstream t_val;
    t_val << g.wall.t;
    t.add({g.circuit.label(), mask_to_string(g.wall.tau), t_val.str(), paren(join(g.n1))});
  }
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_frobenius(const Options& o, const std::vector<long>& weights, long target, const std::vector<int>& strict) {
  std::vector<Int> w;
  for (auto x : weights) {
    if (x < 1) throw std::runtime_error("weights must be positive");
    w.push_back(Int(x));
  }
  std::vector<bool> s(w.size(), false);
  if (!strict.empty()) {
    if (strict.size() != w.size()) throw std::runtime_error("--strict needs one flag per weight");
    for (std::size_t k = 0; k < s.size(); ++k) s[k] = strict[k] != 0;
  }
  Table t({"target", "count"});
  t.add({std::to_string(target), denumerant(w, Int(target), s).get_str()});
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_core(const Options& o) {
  Fan f = load_checked(o);
  ArithmeticCores cores(f);
  IntVec c = divisor_of(f, cores.A(), o);
  divisor_header(o, cores.A(), c);
  Table t({"core", "member"});
  t.add({"nef", cores.in_A_nef(c) ? "yes" : "no"});
  for (std::size_t k = 0; k < cores.intermediate_faces().size(); ++k)
    t.add({"minus-face " + std::to_string(k + 1), cores.in_A_minus_face(cores.intermediate_faces()[k], c) ? "yes" : "no"});
  t.add({"zero", cores.in_A_zero(c) ? "yes" : "no"});
  auto v = vanishing_by_core(cores, c);
  t.add({"verdict", to_string(v.verdict)});
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_residual(const Options& o, const std::string& stratum) {
  Fan f = load_checked(o);
  ArithmeticCores cores(f);
  std::vector<Stratum> strata;
  if (stratum == "nef")
    strata.push_back(nef_stratum(cores));
  else if (stratum == "zero")
    strata.push_back(zero_stratum(cores));
  else
    for (std::size_t k = 0; k < cores.intermediate_faces().size(); ++k)
      strata.push_back(minus_face_stratum(cores, cores.intermediate_faces()[k], "minus-face " + std::to_string(k + 1)));
  long R = o.window > 0 ? o.window : 15;
  Table t({"stratum", "class"});
  std::vector<std::string> notes;
  for (const auto& s : strata) {
    auto r = residual_window(cores, s, R);
    for (const auto& x : r.residual) t.add({s.name, paren(join(x))});
    notes.push_back(s.name + ": " + std::to_string(r.residual.size()) + " residual, " + std::to_string(r.members) +
                    " core members in radius " + std::to_string(R));
  }
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o))
    for (const auto& n : notes) std::cout << "# " << n << "\n";
  return 0;
}

int cmd_classify_surface(const Options& o) {
  Fan f = load_checked(o);
  if (f.d() != 2 || !validate(f).complete) throw std::runtime_error("classify-surface needs a complete surface fan");
  ArithmeticCores cores(f);
  long R = o.window > 0 ? o.window : 15;
  auto rows = surface_classify_window(cores, R);
  auto pairs = opposite_pairs(f, cores.A());
  std::vector<std::string> header;
  for (std::size_t k = 0; k < cores.A().rank(); ++k) header.push_back("x" + std::to_string(k + 1));
  for (std::size_t k = 0; k < cores.A().group.torsion.size(); ++k) header.push_back("t" + std::to_string(k + 1));
  for (auto h : {"label", "pair", "h0", "h1", "h2"}) header.push_back(h);
  Table t(header);
  std::map<std::string, std::size_t> count;
  for (const auto& r : rows) {
    std::vector<std::string> row;
    for (const auto& x : r.cls) row.push_back(x.get_str());
    row.push_back(to_string(r.label));
    row.push_back(r.pair ? std::to_string(pairs[*r.pair].p + 1) + "," + std::to_string(pairs[*r.pair].q + 1) : "-");
    for (std::size_t i = 0; i < 3; ++i) row.push_back(to_string(r.h[i]));
    t.add(row);
    ++count[to_string(r.label)];
  }
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o))
    for (const auto& [k, v] : count) std::cout << "# " << k << ": " << v << "\n";
  return 0;
}

int cmd_mcm(const Options& o) {
  Fan f = load_checked(o);
  AffineCone cone(f);
  IntVec c = divisor_of(f, cone.A(), o);
  divisor_header(o, cone.A(), c);
  auto r = mcm_criterion_report(cone, c);
  Table t({"property", "value"});
  t.add({"mcm", r.mcm ? "yes" : "no"});
  t.add({"all_triangulations_vanish", r.all_triangulations_vanish ? "yes" : "no"});
  t.add({"witness", r.witness ? to_string(*r.witness) : "-"});
  t.add({"facets_simplicial", r.hypothesis_ok ? "yes" : "no"});
  t.print(std::cout, rows_mode(o));
  return 0;
}

int cmd_mcm_enumerate(const Options& o) {
  Fan f = load_checked(o);
  AffineCone cone(f);
  auto e = enumerate_mcm(cone, o.window);
  std::vector<std::string> header;
  for (std::size_t k = 0; k < cone.A().rank(); ++k) header.push_back("x" + std::to_string(k + 1));
  for (std::size_t k = 0; k < cone.A().group.torsion.size(); ++k) header.push_back("t" + std::to_string(k + 1));
  Table t(header);
  for (const auto& x : e.classes) {
    std::vector<std::string> row;
    for (const auto& v : x) row.push_back(v.get_str());
    t.add(row);
  }
  t.print(std::cout, rows_mode(o));
  if (!rows_mode(o))
    std::cout << "# " << e.classes.size() << " classes, radius " << e.radius << ", checked to " << e.outer_radius
              << ", " << (e.stable ? "stable" : "NOT stable") << "\n";
  return e.stable ? 0 : 2;
}

int cmd_triangulations(const Options& o, const std::string& strategy, long K) {
  Fan f = load_checked(o);
  AffineCone cone(f);
  std::vector<Triangulation> ts;
  try {
    ts = strategy == "grid" ? cone.regular_triangulations_grid(K) : cone.regular_triangulations();
  } catch (const std::length_error& e) {
    throw ScaleLimit(e.what());
  }
  Table t({"cells", "heights", "verified"});
  for (const auto& tr : ts) t.add({to_string(tr), paren(join(tr.heights)), verify_triangulation(f, tr) ? "yes" : "no"});
  t.print(std::cout, rows_mode(o));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric divisor cohomology, arithmetic cores and MCM modules"};
  app.require_subcommand(1);
  Options o;
  std::vector<long> weights;
  long target = 0;
  std::vector<int> strict;
  std::string stratum = "zero", strategy = "chamber";
  long grid_k = 8;

  auto common = [&](CLI::App* sc, bool divisor) {
    sc->add_option("fan", o.fan, "fan file (path, path without .json, or name under TORIC_FIXTURES)")->required();
    sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "rows"}));
    if (divisor) {
      sc->add_option("--divisor", o.divisor, "n coefficients, or class coordinates")->expected(1, -1)->allow_extra_args();
      sc->add_option("--class", o.cls, "class-group coordinates (free part, then torsion)")->expected(1, -1)->allow_extra_args();
    }
  };

  auto* validate_c = app.add_subcommand("validate", "validate a fan file");
  common(validate_c, false);
  auto* coh = app.add_subcommand("cohomology", "global cohomology of O(D)");
  common(coh, true);
  auto* loc = app.add_subcommand("local-cohomology", "local cohomology of O(D) along the file's subvariety");
  common(loc, true);
  for (auto* sc : {coh, loc}) {
    sc->add_option("--char", o.characteristic, "coefficient field characteristic (0 or a prime)")
        ->check([](const std::string& s) {
          unsigned long p = std::stoul(s);
          return p == 0 || is_prime(p) ? std::string() : std::string("characteristic must be 0 or a prime");
        });
    sc->add_option("--cap", o.cap, "list up to this many characters");
  }
  auto* circ = app.add_subcommand("circuits", "circuits of the rays");
  common(circ, false);
  auto* gale = app.add_subcommand("gale", "class group and Gale duals");
  common(gale, false);
  auto* pic = app.add_subcommand("picard", "integral Picard group");
  common(pic, false);
  auto* nef = app.add_subcommand("nef", "nef cone and its oriented flat");
  common(nef, false);
  auto* mori = app.add_subcommand("mori", "generators of the Mori cone");
  common(mori, false);
  auto* frob = app.add_subcommand("frobenius", "denumerant of a weight vector");
  frob->add_option("--weights", weights, "positive weights")->required()->delimiter(',');
  frob->add_option("--target", target, "target value")->required();
  frob->add_option("--strict", strict, "per-weight positivity flags (0/1)")->delimiter(',');
  frob->add_option("--format", o.format, "output format")->check(CLI::IsMember({"table", "rows"}));
  auto* core = app.add_subcommand("core", "arithmetic core membership and vanishing verdict");
  common(core, true);
  auto* resid = app.add_subcommand("residual", "residual classes of a stratum in a window");
  common(resid, false);
  resid->add_option("--stratum", stratum, "nef, minus-face or zero")->check(CLI::IsMember({"nef", "minus-face", "zero"}));
  auto* surf = app.add_subcommand("classify-surface", "label every class in a window");
  common(surf, false);
  for (auto* sc : {resid, surf}) sc->add_option("--window", o.window, "window radius")->check(CLI::PositiveNumber);
  auto* mcm = app.add_subcommand("mcm", "MCM test and triangulation criterion for one class");
  common(mcm, true);
  auto* mcme = app.add_subcommand("mcm-enumerate", "all rank-one MCM classes in a window");
  common(mcme, false);
  mcme->add_option("--window", o.window, "window radius (default from the Gale vectors)")->check(CLI::PositiveNumber);
  auto* tri = app.add_subcommand("triangulations", "regular triangulations of an affine cone");
  common(tri, false);
  tri->add_option("--strategy", strategy, "chamber or grid")->check(CLI::IsMember({"chamber", "grid"}));
  tri->add_option("--grid", grid_k, "height bound for the grid strategy")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*validate_c) return cmd_validate(o);
    if (*coh) return cmd_cohomology(o, false);
    if (*loc) return cmd_cohomology(o, true);
    if (*circ) return cmd_circuits(o);
    if (*gale) return cmd_gale(o);
    if (*pic) return cmd_picard(o);
    if (*nef) return cmd_nef(o);
    if (*mori) return cmd_mori(o);
    if (*frob) return cmd_frobenius(o, weights, target, strict);
    if (*core) return cmd_core(o);
    if (*resid) return cmd_residual(o, stratum);
    if (*surf) return cmd_classify_surface(o);
    if (*mcm) return cmd_mcm(o);
    if (*mcme) return cmd_mcm_enumerate(o);
    if (*tri) return cmd_triangulations(o, strategy, grid_k);
  } catch (const ScaleLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
