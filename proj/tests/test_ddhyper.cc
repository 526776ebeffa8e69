#include "doctest.h"

#include <set>

#include "hyperalg/ddhyper.h"
#include "hyperalg/functors.h"
#include "hyperalg/hyper.h"
#include "oracle.h"

using namespace hyperalg;

namespace {

const char* const kDD[] = {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "gf7"};

std::set<oracle::Set> as_sets(const SumClosure& cl) {
  std::set<oracle::Set> out;
  for (SubsetMask m : cl.family) out.insert(oracle::to_set(m));
  return out;
}

}  // namespace

TEST_CASE("closure S(F) agrees with the pairwise oracle") {
  for (const char* name : {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "kh-v4", "khef-v4", "kh-c5"}) {
    CAPTURE(name);
    FiniteHyperring f = builtin_hyperring(name);
    SumClosure cl = closure_S(f);
    CHECK(as_sets(cl) == oracle::closure(oracle::from(f)));
    CHECK(cl.size() == as_sets(cl).size());
    for (Elem x = 0; x < f.size(); ++x) CHECK(cl.family[x] == SubsetMask::singleton(x));
    for (Elem i = 0; i < cl.size(); ++i) CHECK(cl.index_of(cl.family[i]) == i);
  }
}

TEST_CASE("sum decompositions reproduce their targets") {
  FiniteHyperring s = signs();
  for (SubsetMask m : closure_S(s).family) {
    auto terms = sum_decomposition(s, m);
    REQUIRE(terms.has_value());
    CHECK(iterated_hypersum(s.add_table(), *terms) == m);
  }
  CHECK_FALSE(sum_decomposition(s, SubsetMask::of({0, 1})).has_value());
}

TEST_CASE("reduced fuzzy ring of signs and krasner") {
  ReducedFuzzyRing rs = Fbar(signs());
  CHECK(rs.fuzzy.size() == 4);
  std::set<oracle::Set> carrier = as_sets(rs.closure);
  CHECK(carrier == std::set<oracle::Set>{{0}, {1}, {2}, {0, 1, 2}});
  std::set<oracle::Set> nulls;
  for (Elem i = 0; i < rs.fuzzy.size(); ++i)
    if (rs.fuzzy.is_null(i)) nulls.insert(oracle::to_set(rs.closure.family[i]));
  CHECK(nulls == std::set<oracle::Set>{{0}, {0, 1, 2}});
  CHECK(rs.fuzzy.same_tables(builtin_fuzzy("signfuzzy")));

  ReducedFuzzyRing rk = Fbar(krasner());
  CHECK(rk.fuzzy.same_tables(builtin_fuzzy("krasnerfuzzy")));
  CHECK(weak_iso(rk.fuzzy, builtin_fuzzy("krasnerfuzzy")).has_value());
}

TEST_CASE("reduced fuzzy ring of a field is the field") {
  for (std::size_t q : {2, 3, 4, 5, 7}) {
    CAPTURE(q);
    ReducedFuzzyRing r = Fbar(field_hyperring(q));
    FiniteRing f = galois_field(q);
    CHECK(r.fuzzy.size() == q);
    CHECK(r.fuzzy.add_table() == f.add);
    CHECK(r.fuzzy.mul_table() == f.mul);
    for (Elem a = 0; a < q; ++a) CHECK(r.fuzzy.is_null(a) == (a == 0));
  }
}

TEST_CASE("reduced fuzzy rings pass the axioms") {
  for (const char* name : kDD) {
    CAPTURE(name);
    const FiniteFuzzyRing k = Fbar(builtin_hyperring(name)).fuzzy;
    CHECK(check_fuzzy_axioms(k).passed());
    CHECK(oracle::fuzzy_axioms(oracle::from(k)));
  }
}

TEST_CASE("non doubly distributive inputs are refused") {
  for (const char* name : {"kh-v4", "khef-v4", "kh-c5"}) {
    CAPTURE(name);
    FiniteHyperring f = builtin_hyperring(name);
    CHECK_THROWS_WITH_AS(Fbar(f), doctest::Contains("not doubly distributive"), AlgebraError);
    AxiomReport mc = check_mul_closure(f);
    CHECK_FALSE(mc.passed());
    CHECK(mc.violations().front().witness.size() == 2);
    CHECK_FALSE(check_condicondi(f).passed());
  }
}

TEST_CASE("doubly distributive inputs satisfy both closure conditions") {
  for (const char* name : kDD) {
    CAPTURE(name);
    FiniteHyperring f = builtin_hyperring(name);
    CHECK(check_mul_closure(f).passed());
    CHECK(check_condicondi(f).passed());
  }
}

TEST_CASE("inclusion of the reduced fuzzy ring into F") {
  for (const char* name : kDD) {
    CAPTURE(name);
    FiniteHyperring f = builtin_hyperring(name);
    ReducedFuzzyRing red = Fbar(f);
    PowersetFuzzyRing full = F_obj(f);
    std::vector<Elem> inc = fbar_inclusion(red, full);
    CHECK(check_strong_morphism(inc, red.fuzzy, full.fuzzy()).accepted());
    CHECK(std::set<Elem>(inc.begin(), inc.end()).size() == inc.size());
    std::set<Elem> unit_images;
    for (Elem u : red.fuzzy.units()) unit_images.insert(inc[u]);
    CHECK(unit_images == std::set<Elem>(full.fuzzy().units().begin(), full.fuzzy().units().end()));
  }
}

TEST_CASE("strict homs induce semiring homs on closures") {
  for (const char* a : kDD) {
    for (const char* b : kDD) {
      FiniteHyperring r = builtin_hyperring(a), s = builtin_hyperring(b);
      if (r.size() > 5 || s.size() > 5) continue;
      ReducedFuzzyRing rr = Fbar(r), rs = Fbar(s);
      for (const auto& h : enumerate_homs(r, s, true)) {
        CAPTURE(a);
        CAPTURE(b);
        std::vector<Elem> m = induced_closure_map(h.map, rr.closure, rs.closure);
        for (Elem x : m) REQUIRE(x != kNoElem);
        for (Elem i = 0; i < m.size(); ++i)
          for (Elem j = 0; j < m.size(); ++j) {
            CHECK(m[rr.fuzzy.add(i, j)] == rs.fuzzy.add(m[i], m[j]));
            CHECK(m[rr.fuzzy.mul(i, j)] == rs.fuzzy.mul(m[i], m[j]));
          }
      }
    }
  }
}

TEST_CASE("triangle hyperfield counterexample") {
  using R = Rational;
  RationalInterval two = RationalInterval::point(R(2)), three = RationalInterval::point(R(3));
  CHECK(triangle_sum(two, three) == RationalInterval{R(1), R(5)});
  CHECK(triangle_sum(three, two) == RationalInterval{R(1), R(5)});
  CHECK(triangle_sum(RationalInterval::point(R(1)), RationalInterval::point(R(1))) ==
        RationalInterval{R(0), R(2)});
  CHECK(interval_product({R(1), R(5)}, {R(1), R(5)}) == RationalInterval{R(1), R(25)});
  CHECK(triangle_sum({R(1, 2), R(1)}, RationalInterval::point(R(3))) ==
        RationalInterval{R(2), R(4)});

  TriangleReport t = triangle_counterexample();
  CHECK(t.two_plus_three.to_string() == "[1,5]");
  CHECK(t.square.to_string() == "[1,25]");
  CHECK(t.expanded.to_string() == "[0,25]");
  CHECK_FALSE(t.equal);
  CHECK(RationalInterval{R(1, 2), R(3)}.to_string() == "[1/2,3]");
}

TEST_CASE("partial demifields and the factorization") {
  for (const char* name : kDD) {
    CAPTURE(name);
    FiniteHyperring f = builtin_hyperring(name);
    PartialDemifield p = F1(f);
    CHECK(check_partial_demifield(p).passed());
    CHECK(check_addsame(p).passed());
    CHECK(F2(p).same_tables(Fbar(f).fuzzy));
  }
  // F1 of signs is the four element semiring {0, 1, -1, 1-1}.
  PartialDemifield ps = F1(signs());
  CHECK(ps.size() == 4);
  CHECK(ps.add == builtin_fuzzy("signfuzzy").add_table());
  CHECK(ps.add.at(1, 1) == 1);
  CHECK(ps.add.at(1, 2) == 3);
  CHECK_THROWS_AS(F1(kh(klein_four())), AlgebraError);
}

TEST_CASE("a broken semiring fails addsame and F2 refuses it") {
  PartialDemifield p = F1(signs());
  p.add.at(1, 1) = 3;  // 1 + 1 = 1-1 no longer lies in the hypersum {1}
  CHECK_FALSE(check_partial_demifield(p).passed());
  CHECK_FALSE(check_addsame(p).passed());
  CHECK_THROWS_AS(F2(p), AlgebraError);
}

TEST_CASE("morphisms of partial demifields") {
  PartialDemifield ps = F1(signs()), pk = F1(krasner());
  std::vector<Elem> id{0, 1, 2, 3};
  CHECK(check_demifield_morphism(id, ps, ps).passed());
  // The fold only satisfies f(a + b) in f(a) + f(b): 1 + 1 = 1 in S(signs), 1 + 1 = K in S(K).
  std::vector<Elem> fold{0, 1, 1};
  std::vector<Elem> induced = induced_closure_map(fold, closure_S(signs()), closure_S(krasner()));
  AxiomReport rep = check_demifield_morphism(induced, ps, pk);
  CHECK_FALSE(rep.passed());
  CHECK(rep.has("semiring-additive"));
  std::vector<Elem> bad(ps.size(), 1);
  CHECK_FALSE(check_demifield_morphism(bad, ps, pk).passed());

  // Frobenius of GF(4) is a strict automorphism, so it induces a morphism.
  FiniteHyperring f4 = builtin_hyperring("gf4");
  PartialDemifield p4 = F1(f4);
  for (const auto& h : enumerate_homs(f4, f4, true)) {
    std::vector<Elem> m = induced_closure_map(h.map, closure_S(f4), closure_S(f4));
    CHECK(check_demifield_morphism(m, p4, p4).passed());
  }
}
