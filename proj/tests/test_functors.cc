#include "doctest.h"

#include <string>

#include "hyperalg/functors.h"
#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"
#include "oracle.h"

using namespace hyperalg;

namespace {

// Compares every table entry of F(R) with set arithmetic on the masks.
void check_against_oracle(const FiniteHyperring& r) {
  PowersetFuzzyRing p = F_obj(r);
  const FiniteFuzzyRing& k = p.fuzzy();
  auto h = oracle::from(r);
  CHECK(k.size() == (std::size_t{1} << r.size()) - (r.partial() ? 0 : 1));
  for (Elem i = 0; i < k.size(); ++i) {
    oracle::Set a = oracle::to_set(p.mask(i));
    CHECK(k.is_null(i) == (a.count(0) == 1));
    for (Elem j = 0; j < k.size(); ++j) {
      oracle::Set b = oracle::to_set(p.mask(j));
      CHECK(oracle::to_set(p.mask(k.add(i, j))) == oracle::sum(h, a, b));
      CHECK(oracle::to_set(p.mask(k.mul(i, j))) == oracle::product(h, a, b));
    }
  }
  const int minus = oracle::negative(h, 1);
  CHECK(oracle::to_set(p.mask(k.epsilon())) == oracle::Set{minus});
  for (Elem u : k.units()) CHECK(p.mask(u).is_singleton());
  CHECK(k.units().size() == static_cast<std::size_t>(r.units().size()));
}

}  // namespace

TEST_CASE("F on objects matches set arithmetic") {
  for (const char* name : {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "gf7", "kh-v4", "khef-v4"}) {
    CAPTURE(name);
    FiniteHyperring r = builtin_hyperring(name);
    check_against_oracle(r);
    CHECK(check_fuzzy_axioms(F_obj(r).fuzzy()).passed());
    CHECK(oracle::fuzzy_axioms(oracle::from(F_obj(r).fuzzy())));
  }
}

TEST_CASE("F of the small examples") {
  PowersetFuzzyRing fk = F_obj(krasner());
  CHECK(fk.size() == 3);
  CHECK(weak_iso(fk.fuzzy(), builtin_fuzzy("krasnerfuzzy")).has_value());

  PowersetFuzzyRing fs = F_obj(signs());
  CHECK(fs.size() == 7);
  std::set<oracle::Set> carrier;
  for (Elem i = 0; i < fs.size(); ++i) carrier.insert(oracle::to_set(fs.mask(i)));
  CHECK(carrier == std::set<oracle::Set>{{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});

  PowersetFuzzyRing f2 = F_obj(field_hyperring(2));
  CHECK(f2.size() == 3);
  CHECK(f2.fuzzy().add(1, 1) == 0);

  CHECK_THROWS_AS(F_obj(field_hyperring(11)).fuzzy(), CapExceeded);
}

TEST_CASE("F on morphisms") {
  PowersetFuzzyRing fs = F_obj(signs());
  PowersetFuzzyRing fk = F_obj(krasner());
  std::vector<Elem> fold{0, 1, 1};
  MorphismTable g = F_mor(fold, fs, fk);
  CHECK(check_strong_morphism(g.map, fs.fuzzy(), fk.fuzzy()).accepted());
  for (Elem i = 0; i < fs.size(); ++i) CHECK(fk.mask(g.map[i]) == image(fold, fs.mask(i)));

  std::vector<Elem> id{0, 1, 2};
  MorphismTable gid = F_mor(id, fs, fs);
  for (Elem i = 0; i < fs.size(); ++i) CHECK(gid.map[i] == i);

  // F(g o f) = F(g) o F(f) for f = id, g = fold.
  CHECK(compose(gid.map, g.map) == F_mor(compose(id, fold), fs, fk).map);

  // Every hom between small builtins gives an accepted strong morphism.
  for (const char* a : {"krasner", "signs", "gf2", "gf3", "gf4"}) {
    for (const char* b : {"krasner", "signs", "gf2", "gf3", "gf4"}) {
      FiniteHyperring r = builtin_hyperring(a), s = builtin_hyperring(b);
      auto fr = F_obj(r), fs2 = F_obj(s);
      for (const auto& h : enumerate_homs(r, s, false)) {
        CAPTURE(a);
        CAPTURE(b);
        CHECK(check_strong_morphism(F_mor(h.map, fr, fs2).map, fr.fuzzy(), fs2.fuzzy()).accepted());
      }
    }
  }
}

TEST_CASE("Frobenius and identity of GF(4) have different images under F") {
  FiniteHyperring g4 = field_hyperring(4);
  std::vector<Elem> frob(4), id{0, 1, 2, 3};
  for (Elem x = 0; x < 4; ++x) frob[x] = g4.mul(x, x);
  REQUIRE(check_hom(frob, g4, g4, true).passed());
  REQUIRE(frob != id);
  PowersetFuzzyRing f4 = F_obj(g4);
  CHECK(F_mor(frob, f4, f4).map != F_mor(id, f4, f4).map);
}

TEST_CASE("field-like fuzzy rings") {
  for (const char* name : {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "kh-v4"}) {
    CAPTURE(name);
    CHECK(is_field_like(F_obj(builtin_hyperring(name)).fuzzy()).passed());
  }
  CHECK(is_field_like(builtin_fuzzy("signfuzzy")).passed());
  CHECK(is_field_like(builtin_fuzzy("krasnerfuzzy")).passed());

  AxiomReport rep = is_field_like(F_obj(unit_field_of_integers()).fuzzy());
  CHECK_FALSE(rep.passed());
  REQUIRE_FALSE(rep.violations().empty());
  CHECK(rep.violations().front().witness == std::vector<Elem>{1, 1});
}

TEST_CASE("G on objects") {
  GResult gs = G_obj(builtin_fuzzy("signfuzzy"));
  CHECK(gs.hyperring.same_tables(signs()));
  CHECK(gs.hyperring.add(1, 1) == SubsetMask::of({1}));
  GResult gk = G_obj(builtin_fuzzy("krasnerfuzzy"));
  CHECK(iso_hyper(gk.hyperring, krasner()).has_value());

  GResult gz = G_obj(F_obj(unit_field_of_integers()).fuzzy());
  CHECK(gz.hyperring.partial());
  CHECK(gz.hyperring.add(1, 1).empty());
  CHECK(gz.hyperring.add(1, 2) == SubsetMask::of({0}));
}

TEST_CASE("G on morphisms") {
  const FiniteFuzzyRing& l = builtin_fuzzy("signfuzzy");
  const FiniteFuzzyRing& k = builtin_fuzzy("krasnerfuzzy");
  GResult gl = G_obj(l), gk = G_obj(k);
  auto maps = unit_homomorphisms(l, k);
  REQUIRE(maps.size() == 1);
  std::vector<Elem> h = G_mor(maps[0], gl, gk);
  CHECK(h == std::vector<Elem>{0, 1, 1});
  CHECK(check_hom(h, gl.hyperring, gk.hyperring, false).passed());

  std::vector<Elem> idw{0, 1, 2, kNoElem};
  CHECK(G_mor(idw, gl, gl) == std::vector<Elem>{0, 1, 2});

  // G(F(f)) = f for f: signs -> krasner.
  PowersetFuzzyRing fs = F_obj(signs()), fk = F_obj(krasner());
  std::vector<Elem> fold{0, 1, 1};
  MorphismTable w = restrict_strong_to_weak(F_mor(fold, fs, fk), fs.fuzzy(), fk.fuzzy());
  CHECK(G_mor(w.map, G_obj(fs.fuzzy()), G_obj(fk.fuzzy())) == fold);
}

TEST_CASE("unit fields") {
  UnitFieldResult us = unit_field(signs());
  CHECK(us.hyperring.same_tables(signs()));

  UnitFieldResult ue = unit_field(kh_ef(klein_four()));
  CHECK(ue.hyperring.size() == 5);
  CHECK(ue.carrier == std::vector<Elem>{0, 1, 2, 3, 4});
  FiniteHyperring khv4 = kh(klein_four());
  CHECK(ue.hyperring.add_table() == khv4.add_table());
  CHECK(ue.hyperring.mul_table() == khv4.mul_table());

  FiniteHyperring z = unit_field_of_integers();
  CHECK(z.partial());
  CHECK(z.add(1, 1).empty());
  CHECK(z.add(1, 2) == SubsetMask::of({0}));
  CHECK(check_canonical_hypergroup(z).passed());
}

TEST_CASE("roundtrips") {
  for (const char* name : {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "gf7", "kh-v4"}) {
    CAPTURE(name);
    CHECK(check_roundtrips(builtin_hyperring(name)).passed());
  }
  FiniteRing g7 = galois_field(7);
  SubsetMask squares;
  for (Elem u : g7.units()) squares.insert(g7.mul.at(u, u));
  CHECK(check_roundtrips(quotient(g7, squares).hyperring).passed());
  CHECK(check_roundtrips_fuzzy(builtin_fuzzy("krasnerfuzzy")).passed());
  CHECK(check_roundtrips_fuzzy(builtin_fuzzy("signfuzzy")).passed());
}

TEST_CASE("identity on units of K[H] with e and f against K[H]") {
  // The unit sum 1 + a + b + c is null over K[H] u {e,f} but not over K[H],
  // so the identity on units is not a weak morphism of the F images.
  auto ef = oracle::from(kh_ef(klein_four()));
  auto plain = oracle::from(kh(klein_four()));
  CHECK(oracle::sum_of(ef, {1, 2, 3, 4}).count(0) == 1);
  CHECK(oracle::sum_of(plain, {1, 2, 3, 4}).count(0) == 0);

  PowersetFuzzyRing src = F_obj(kh_ef(klein_four()));
  PowersetFuzzyRing dst = F_obj(kh(klein_four()));
  std::vector<Elem> id(src.size(), kNoElem);
  id[0] = 0;
  for (Elem u : src.fuzzy().units()) id[u] = u;
  CHECK_FALSE(check_weak_morphism(id, src.fuzzy(), dst.fuzzy()).accepted());
  auto brute = oracle::weak_violation(id, oracle::from(src.fuzzy()), oracle::from(dst.fuzzy()), 4);
  REQUIRE(brute.has_value());
  CHECK(brute->size() == 4);
}

TEST_CASE("strong extension search") {
  PowersetFuzzyRing fs = F_obj(signs()), fk = F_obj(krasner());
  std::vector<Elem> fold{0, 1, 1};
  MorphismTable g = F_mor(fold, fs, fk);
  MorphismTable w = restrict_strong_to_weak(g, fs.fuzzy(), fk.fuzzy());
  ExtensionResult r = strong_extension_search(w.map, fs.fuzzy(), fk.fuzzy(), {});
  CHECK(r.verdict == ExtensionVerdict::kExtends);
  CHECK(check_strong_morphism(r.witness, fs.fuzzy(), fk.fuzzy()).accepted());

  const FiniteFuzzyRing& kf = builtin_fuzzy("krasnerfuzzy");
  auto maps = unit_homomorphisms(fs.fuzzy(), kf);
  REQUIRE(maps.size() == 1);
  ExtensionResult r2 = strong_extension_search(maps[0], fs.fuzzy(), kf, {});
  CHECK(r2.verdict == ExtensionVerdict::kExtends);
  CHECK(check_strong_morphism(r2.witness, fs.fuzzy(), kf).accepted());
  CHECK(to_string(ExtensionVerdict::kRefuted) == "refuted");
}
