// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver. Exit status: 0 when every requested check passes,
// 1 on a mathematical failure, 2 on usage, parse or cap errors.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hyperalg/ddhyper.h"
#include "hyperalg/functors.h"
#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"
#include "hyperalg/io.h"
#include "hyperalg/matroid.h"
#include "hyperalg/ordgrp.h"

namespace {

using namespace hyperalg;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int verdict(bool ok) { return ok ? kPass : kFail; }

std::string join(const std::vector<Elem>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i] == kNoElem ? "-" : std::to_string(v[i]);
  }
  return out;
}

std::vector<Elem> parse_map(const std::string& text) {
  std::vector<Elem> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok == "-") {
      out.push_back(kNoElem);
      continue;
    }
    try {
      out.push_back(static_cast<Elem>(std::stoul(tok)));
    } catch (const std::exception&) {
      throw UsageError("--map: '" + tok + "' is not an index");
    }
  }
  return out;
}

int report(const AxiomReport& rep, const std::string& what) {
  if (rep.passed()) {
    std::cout << what << ": pass\n";
  } else {
    std::cout << what << ": FAIL (" << rep.total() << " violations)\n" << rep.describe();
  }
  return verdict(rep.passed());
}

template <class T>
const T& expect(const Structure& s, const std::string& ref) {
  if (const auto* v = std::get_if<T>(&s)) return *v;
  throw UsageError("'" + ref + "' holds a " + std::string(kind_of(s)) + ", which this command does not accept");
}

void write_out(const Structure& s, const std::string& out) {
  if (out.empty()) {
    std::cout << emit_canonical(s);
  } else {
    save_structure(s, out);
    std::cout << "wrote " << kind_of(s) << " to " << out << "\n";
  }
}

// --- check ---------------------------------------------------------------------------

int cmd_check(const std::string& ref, std::string kind) {
  const Structure s = load_structure(ref);
  if (kind.empty()) kind = std::string(kind_of(s));
  if (kind == "hyperring" || kind == "hyperfield" || kind == "dd") {
    const auto& r = expect<FiniteHyperring>(s, ref);
    if (kind == "hyperring") return report(check_hyperring(r), "hyperring axioms");
    if (kind == "hyperfield") return report(check_hyperfield(r), "hyperfield axioms");
    return report(check_doubly_distributive(r), "double distributivity");
  }
  if (kind == "fuzzyring" || kind == "fuzzy") {
    return report(check_fuzzy_axioms(expect<FiniteFuzzyRing>(s, ref)), "fuzzy ring axioms");
  }
  if (kind == "field-like") return report(is_field_like(expect<FiniteFuzzyRing>(s, ref)), "field-like");
  if (kind == "gp") {
    const auto& g = expect<GPFile>(s, ref);
    if (const auto* h = std::get_if<FiniteHyperring>(&g.coefficient)) {
      return report(verify_gp_hyper(g.phi, *h), "Grassmann-Pluecker (hyperfield)");
    }
    return report(verify_gp_fuzzy(g.phi, std::get<FiniteFuzzyRing>(g.coefficient)),
                  "Grassmann-Pluecker (fuzzy ring)");
  }
  if (kind == "zariski") return report(check_zariski(expect<ZariskiSystem>(s, ref)), "Zariski system");
  throw UsageError("unknown --kind '" + kind + "'");
}

// --- construct -----------------------------------------------------------------------

FiniteGroup group_named(const std::string& name) {
  if (name == "v4") return klein_four();
  if (name.size() > 1 && name[0] == 'c') {
    try {
      return cyclic_group(std::stoul(name.substr(1)));
    } catch (const std::invalid_argument&) {
    }
  }
  throw UsageError("--group must be v4 or c<m>");
}

SubsetMask subgroup_named(const FiniteRing& ring, const std::string& text) {
  const SubsetMask units = ring.units();
  if (text == "full") return units;
  if (text == "trivial") return SubsetMask::singleton(1);
  if (text == "squares") {
    SubsetMask sq;
    for (Elem u : units) sq.insert(ring.mul.at(u, u));
    return sq;
  }
  SubsetMask m;
  for (Elem e : parse_map(text)) {
    if (e >= ring.size()) throw UsageError("--subgroup: index out of range");
    m.insert(e);
  }
  return m;
}

int cmd_construct(const std::string& op, const std::string& in, const std::string& out,
                  const std::string& group, std::size_t field, const std::string& subgroup) {
  auto need_in = [&]() -> Structure {
    if (in.empty()) throw UsageError("construct " + op + " needs --in");
    return load_structure(in);
  };
  if (op == "F") {
    const auto r = expect<FiniteHyperring>(need_in(), in);
    const PowersetFuzzyRing p = F_obj(r);
    const AxiomReport rep = check_fuzzy_axioms(p.fuzzy());
    if (!rep.passed()) return report(rep, "F output");
    write_out(p.fuzzy(), out);
    return kPass;
  }
  if (op == "Fbar") {
    const auto r = expect<FiniteHyperring>(need_in(), in);
    const ReducedFuzzyRing red = Fbar(r, true);
    const AxiomReport rep = check_fuzzy_axioms(red.fuzzy);
    if (!rep.passed()) return report(rep, "Fbar output");
    write_out(red.fuzzy, out);
    return kPass;
  }
  if (op == "G") {
    const auto k = expect<FiniteFuzzyRing>(need_in(), in);
    const GResult g = G_obj(k);
    const AxiomReport rep = g.hyperring.partial() ? check_hyperring(g.hyperring) : check_hyperfield(g.hyperring);
    if (!rep.passed()) return report(rep, "G output");
    if (g.hyperring.partial()) std::cerr << "note: input is not field-like; G output is partial\n";
    write_out(g.hyperring, out);
    return kPass;
  }
  if (op == "unitfield") {
    const Structure s = in == "z" ? Structure(unit_field_of_integers()) : need_in();
    const UnitFieldResult u = unit_field(expect<FiniteHyperring>(s, in));
    const AxiomReport rep = check_hyperring(u.hyperring);
    if (!rep.passed()) return report(rep, "unit field output");
    write_out(u.hyperring, out);
    return kPass;
  }
  if (op == "quotient") {
    if (field == 0) throw UsageError("construct quotient needs --field q");
    const FiniteRing ring = galois_field(field);
    const QuotientResult q = quotient(ring, subgroup_named(ring, subgroup));
    const AxiomReport rep = check_hyperfield(q.hyperring);
    if (!rep.passed()) return report(rep, "quotient output");
    write_out(q.hyperring, out);
    return kPass;
  }
  if (op == "KH" || op == "KHef") {
    const FiniteGroup g = group_named(group.empty() ? "v4" : group);
    const FiniteHyperring r = op == "KH" ? kh(g) : kh_ef(g);
    const AxiomReport rep = op == "KH" ? check_hyperfield(r) : check_hyperring(r);
    if (!rep.passed()) return report(rep, op + " output");
    write_out(r, out);
    return kPass;
  }
  if (op == "F1") {
    if (!out.empty()) throw UsageError("F1 produces a report only; partial demifields have no file kind");
    const auto r = expect<FiniteHyperring>(need_in(), in);
    const PartialDemifield p = F1(r);
    std::cout << "S(F) has " << p.size() << " elements:";
    for (SubsetMask m : p.subsets) {
      std::cout << " {";
      bool first = true;
      for (Elem x : m) {
        std::cout << (first ? "" : ",") << r.label(x);
        first = false;
      }
      std::cout << "}";
    }
    std::cout << "\n";
    const int a = report(check_partial_demifield(p), "partial demifield");
    const int b = report(check_addsame(p), "iterated sums agree");
    const bool f2 = F2(p).same_tables(Fbar(r).fuzzy);
    std::cout << "F2(F1(F)) equals Fbar(F): " << (f2 ? "yes" : "NO") << "\n";
    return std::max({a, b, verdict(f2)});
  }
  throw UsageError("unknown construction '" + op + "'");
}

// --- morphisms -----------------------------------------------------------------------

int print_certificate(const ClosureCertificate& c) {
  if (!c.precondition_failure.empty()) {
    std::cout << "rejected: " << c.precondition_failure << "\n";
    return kFail;
  }
  if (c.violating) {
    std::cout << "rejected: reachable pair (" << c.violating->first << ", " << c.violating->second
              << ") is null in the source but not in the target\n  summands:";
    for (const auto& [a, b] : c.witness) std::cout << " (" << a << "->" << b << ")";
    std::cout << "\n";
    return kFail;
  }
  std::cout << "accepted (" << c.reachable.size() << " reachable sum pairs)\n";
  return kPass;
}

int cmd_morphisms(const std::string& src_ref, const std::string& dst_ref, const std::string& kind,
                  const std::string& map_text) {
  const Structure src = load_structure(src_ref);
  const Structure dst = load_structure(dst_ref);
  if (kind == "hyperring" || kind == "strict-hyperring") {
    const auto& r = expect<FiniteHyperring>(src, src_ref);
    const auto& s = expect<FiniteHyperring>(dst, dst_ref);
    const bool strict = kind == "strict-hyperring";
    if (!map_text.empty()) return report(check_hom(parse_map(map_text), r, s, strict), kind + " homomorphism");
    const auto homs = enumerate_homs(r, s, strict);
    std::cout << homs.size() << " homomorphisms\n";
    for (const auto& h : homs) std::cout << "  " << join(h.map) << "\n";
    return kPass;
  }
  const auto& k = expect<FiniteFuzzyRing>(src, src_ref);
  const auto& l = expect<FiniteFuzzyRing>(dst, dst_ref);
  if (kind == "weak") {
    if (!map_text.empty()) return print_certificate(check_weak_morphism(parse_map(map_text), k, l));
    std::vector<std::vector<Elem>> accepted;
    for (const auto& f : unit_homomorphisms(k, l)) {
      if (check_weak_morphism(f, k, l).accepted()) accepted.push_back(f);
    }
    std::cout << accepted.size() << " weak morphisms\n";
    for (const auto& f : accepted) std::cout << "  " << join(f) << "\n";
    return kPass;
  }
  if (kind == "strong") {
    if (map_text.empty()) throw UsageError("--kind strong needs --map");
    return print_certificate(check_strong_morphism(parse_map(map_text), k, l));
  }
  throw UsageError("unknown --kind '" + kind + "'");
}

// --- matroids ------------------------------------------------------------------------

int cmd_matroids(const std::string& coeff_ref, std::size_t n, std::size_t r, bool all, bool oracle,
                 bool cross, unsigned jobs, bool list) {
  const Structure coeff = load_structure(coeff_ref);
  const GPEnumConfig cfg{!all, jobs};
  std::vector<GPFunction> found;
  bool krasner_like = false;
  const auto* h = std::get_if<FiniteHyperring>(&coeff);
  const auto* k = std::get_if<FiniteFuzzyRing>(&coeff);
  if (h) {
    found = enumerate_gp(*h, n, r, cfg);
    krasner_like = h->same_tables(krasner());
  } else if (k) {
    found = enumerate_gp(*k, n, r, cfg);
    krasner_like = k->same_tables(builtin_fuzzy("krasnerfuzzy"));
  } else {
    throw UsageError("--coeff must be a hyperring or a fuzzy ring");
  }
  std::cout << found.size() << (all ? "" : " normalized") << " Grassmann-Pluecker functions (n=" << n
            << ", r=" << r << ")\n";
  if (list) {
    for (const auto& phi : found) std::cout << "  " << join(phi.values) << "\n";
  }
  int status = kPass;
  if (oracle) {
    const auto families = basis_exchange_oracle(n, r);
    std::set<BasisFamily> supports;
    for (const auto& phi : found) supports.insert(underlying_matroid(phi));
    const std::set<BasisFamily> expected(families.begin(), families.end());
    const bool inside = std::includes(expected.begin(), expected.end(), supports.begin(), supports.end());
    const bool equal = supports == expected;
    std::cout << "oracle: " << families.size() << " matroids; " << supports.size()
              << " distinct supports; supports are matroids: " << (inside ? "yes" : "NO")
              << "; counts match: " << (equal ? "yes" : "no") << "\n";
    if (!inside || (krasner_like && (!equal || found.size() != families.size()))) status = kFail;
  }
  if (cross) {
    std::size_t disagree = 0;
    for (const auto& phi : found) {
      const bool ok = h ? cross_check_onetoone(phi, *h).agree() : cross_check_onetoone_G(phi, *k).agree();
      disagree += ok ? 0 : 1;
    }
    std::cout << "cross-check: " << found.size() - disagree << "/" << found.size() << " agree\n";
    if (disagree) status = kFail;
  }
  return status;
}

// --- iso, demos ----------------------------------------------------------------------

int cmd_iso(const std::string& a_ref, const std::string& b_ref, const std::string& kind) {
  const Structure a = load_structure(a_ref);
  const Structure b = load_structure(b_ref);
  std::optional<std::vector<Elem>> w;
  if (kind == "hyperring") {
    w = iso_hyper(expect<FiniteHyperring>(a, a_ref), expect<FiniteHyperring>(b, b_ref));
  } else if (kind == "fuzzy-weak") {
    w = weak_iso(expect<FiniteFuzzyRing>(a, a_ref), expect<FiniteFuzzyRing>(b, b_ref));
  } else {
    throw UsageError("unknown --kind '" + kind + "'");
  }
  if (!w) {
    std::cout << "not isomorphic\n";
    return kFail;
  }
  std::cout << "isomorphic: " << join(*w) << "\n";
  return kPass;
}

int cmd_triangle() {
  const TriangleReport t = triangle_counterexample();
  std::cout << "2 v 3           = " << t.two_plus_three.to_string() << "\n"
            << "(2 v 3)^2       = " << t.square.to_string() << "\n"
            << "4 v 6 v 6 v 9   = " << t.expanded.to_string() << "\n"
            << "doubly distributive here: " << (t.equal ? "yes" : "no") << "\n";
  return kPass;
}

int cmd_ordgrp(long long window) {
  if (window < 1 || window > kMaxWindow) throw UsageError("--window must lie in [1, 10]");
  int status = kPass;
  status = std::max(status, report(check_hgamma_window(window), "H_Z canonical hypergroup (window)"));
  status = std::max(status, report(check_hgamma_dd_window(window), "H_Z double distributivity (window)"));
  status = std::max(status, report(check_kgamma_fuzzy_window(window), "K_Z fuzzy ring axioms (window)"));
  const FbarIsoReport iso = check_fbar_hgamma_iso_kgamma(window);
  std::cout << "Fbar(H_Z) vs K_Z: " << iso.hgamma_pairs << " pair sums, " << iso.closure_sums
            << " iterated sums, " << iso.add_cases << " additions, " << iso.mul_cases
            << " products, epsilon " << iso.epsilon.to_string() << "\n";
  status = std::max(status, report(iso.report, "Fbar(H_Z) iso K_Z (window)"));
  status = std::max(status, report(check_kgamma_embed_window(window), "K_Z -> F(H_Z) inclusion (window)"));
  const F1NotFullReport f1 = check_f1notfull();
  std::cout << "S(K) -> K_Z (0 -> bot, 1 -> 0, K -> [bot,0]): semiring hom "
            << (f1.semiring.passed() ? "yes" : "no") << ", restricts to a hom "
            << (f1.restriction.passed() ? "yes" : "no") << ", strict hom K -> H_Z exists "
            << (f1.strict_hom_exists ? "yes" : "no") << "\n";
  return status;
}

int cmd_builtin(const std::string& name, const std::string& out) {
  if (name.empty()) {
    for (const auto& n : builtin_hyperring_names()) std::cout << n << "  (hyperring)\n";
    for (const auto& n : builtin_fuzzy_names()) std::cout << n << "  (fuzzyring)\n";
    std::cout << "unitfield-z  (partial hyperring)\n";
    return kPass;
  }
  write_out(load_structure("builtin:" + name), out);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite hyperrings, fuzzy rings and matroids with coefficients"};
  app.require_subcommand(1);

  std::string ref, kind, op, in, out, group, subgroup = "full", src, dst, map_text, coeff, name;
  std::size_t field = 0, n = 0, r = 0;
  unsigned jobs = 1;
  long long window = 4;
  bool all = false, oracle = false, cross = false, list = false;

  auto* check = app.add_subcommand("check", "Run the axiom suite for a structure file");
  check->add_option("input", ref, "Path or builtin:NAME")->required();
  check->add_option("--kind", kind,
                    "hyperring, hyperfield, dd, fuzzyring, field-like, gp or zariski (default: the file's kind)");

  auto* construct = app.add_subcommand("construct", "Build a structure and write it as JSON");
  construct->add_option("op", op, "F, Fbar, G, quotient, KH, KHef, unitfield or F1")->required();
  construct->add_option("--in", in, "Input path or builtin:NAME (unitfield also accepts z)");
  construct->add_option("--out", out, "Output path (default: stdout)");
  construct->add_option("--group", group, "v4 or c<m> for KH and KHef");
  construct->add_option("--field", field, "q for quotient of GF(q)");
  construct->add_option("--subgroup", subgroup, "full, trivial, squares or comma-separated indices");

  auto* morphisms = app.add_subcommand("morphisms", "Enumerate or verify morphisms");
  morphisms->add_option("src", src)->required();
  morphisms->add_option("dst", dst)->required();
  morphisms->add_option("--kind", kind, "hyperring, strict-hyperring, weak or strong")->required();
  morphisms->add_option("--map", map_text, "Comma-separated images; '-' for undefined entries");

  auto* matroids = app.add_subcommand("matroids", "Enumerate Grassmann-Pluecker functions");
  matroids->add_option("--coeff", coeff, "Coefficient hyperfield or fuzzy ring")->required();
  matroids->add_option("-n", n, "Ground set size")->required();
  matroids->add_option("-r", r, "Rank")->required();
  matroids->add_flag("--all", all, "Do not normalize by unit scaling");
  matroids->add_flag("--oracle", oracle, "Compare supports with the basis-exchange oracle");
  matroids->add_flag("--cross-check", cross, "Compare hyperfield and fuzzy ring axiomatizations");
  matroids->add_flag("--list", list, "Print every function");
  matroids->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));

  auto* iso = app.add_subcommand("iso", "Search for an isomorphism");
  iso->add_option("a", src)->required();
  iso->add_option("b", dst)->required();
  iso->add_option("--kind", kind, "hyperring or fuzzy-weak")->required();

  app.add_subcommand("triangle-demo", "Interval arithmetic of the triangle hyperfield");

  auto* ordgrp = app.add_subcommand("ordgrp-demo", "Window checks for H_Z and K_Z");
  ordgrp->add_option("--window", window, "Bound B");

  auto* builtin = app.add_subcommand("builtin", "List builtins or print one as JSON");
  builtin->add_option("name", name);
  builtin->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  int status = kUsage;
  try {
    if (*check) status = cmd_check(ref, kind);
    else if (*construct) status = cmd_construct(op, in, out, group, field, subgroup);
    else if (*morphisms) status = cmd_morphisms(src, dst, kind, map_text);
    else if (*matroids) status = cmd_matroids(coeff, n, r, all, oracle, cross, jobs, list);
    else if (*iso) status = cmd_iso(src, dst, kind);
    else if (app.got_subcommand("triangle-demo")) status = cmd_triangle();
    else if (*ordgrp) status = cmd_ordgrp(window);
    else if (*builtin) status = cmd_builtin(name, out);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    status = kUsage;
  } catch (const AlgebraError& e) {
    std::cerr << "failed: " << e.what() << "\n";
    status = kFail;
  }
  const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::cerr << "# " << app.get_subcommands().front()->get_name() << ": exit " << status << " ("
            << static_cast<long long>(ms) << " ms)\n";
  return status;
}
