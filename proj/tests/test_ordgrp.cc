#include "doctest.h"

#include <climits>
#include <set>
#include <string>

#include "hyperalg/io.h"
#include "hyperalg/ordgrp.h"

using namespace hyperalg;

namespace {

// Elementwise model of H_Z on [lo, hi] with bottom as LLONG_MIN. Down intervals
// are cut at lo, so comparisons are made on a narrower band.
using Vals = std::set<long long>;
constexpr long long kBot = LLONG_MIN;

Vals members(const OGSubset& a, long long lo) {
  if (!a.is_interval()) return {a.upper.is_bottom() ? kBot : *a.upper.value};
  Vals out{kBot};
  for (long long v = lo; v <= *a.upper.value; ++v) out.insert(v);
  return out;
}

Vals elem_sum(long long x, long long y, long long lo) {
  if (x != y) return {std::max(x, y)};
  if (x == kBot) return {kBot};
  return members(OGSubset::down(OGElem::of(x)), lo);
}

Vals set_sum(const Vals& a, const Vals& b, long long lo) {
  Vals out;
  for (long long x : a)
    for (long long y : b) {
      Vals s = elem_sum(x, y, lo);
      out.insert(s.begin(), s.end());
    }
  return out;
}

Vals set_mul(const Vals& a, const Vals& b) {
  Vals out;
  for (long long x : a)
    for (long long y : b) out.insert(x == kBot || y == kBot ? kBot : x + y);
  return out;
}

Vals band(const Vals& v, long long lo, long long hi) {
  Vals out;
  for (long long x : v)
    if (x == kBot || (x >= lo && x <= hi)) out.insert(x);
  return out;
}

ZariskiSystem load_z(const std::string& name) {
  return std::get<ZariskiSystem>(load_structure(std::string(HYPERALG_FIXTURES) + "/" + name));
}

}  // namespace

TEST_CASE("H_Z operations") {
  CHECK(hgamma_add(OGElem::of(3), OGElem::of(5)) == OGSubset::singleton(OGElem::of(5)));
  CHECK(hgamma_add(OGElem::of(3), OGElem::of(3)) == OGSubset::down(OGElem::of(3)));
  CHECK(hgamma_add(OGElem::bottom(), OGElem::of(-2)) == OGSubset::singleton(OGElem::of(-2)));
  CHECK(hgamma_mul(OGElem::of(3), OGElem::of(5)) == OGElem::of(8));
  CHECK(hgamma_mul(OGElem::bottom(), OGElem::of(5)).is_bottom());
  CHECK(OGElem::bottom() < OGElem::of(-100));
  CHECK(OGElem::of(-1) < OGElem::of(0));
}

TEST_CASE("K_Z case table") {
  auto s = [](long long v) { return OGSubset::singleton(OGElem::of(v)); };
  auto d = [](long long v) { return OGSubset::down(OGElem::of(v)); };
  CHECK(kgamma_add(s(3), d(5)) == d(5));
  CHECK(kgamma_add(s(7), d(5)) == s(7));
  CHECK(kgamma_add(d(2), d(2)) == d(2));
  CHECK(kgamma_add(d(1), d(4)) == d(4));
  CHECK(kgamma_add(s(2), s(2)) == d(2));
  CHECK(kgamma_mul(s(2), d(3)) == d(5));
  CHECK(kgamma_mul(s(2), s(3)) == s(5));
  CHECK(kgamma_one() == s(0));
  CHECK(OGSubset::down(OGElem::bottom()) == OGSubset::singleton(OGElem::bottom()));
  CHECK(d(4).is_null());
  CHECK_FALSE(s(4).is_null());
}

TEST_CASE("K_Z operations agree with elementwise set arithmetic") {
  const long long b = 3;
  const long long lo = -3 * b;
  for (const OGSubset& x : kgamma_window(b)) {
    for (const OGSubset& y : kgamma_window(b)) {
      CAPTURE(x.to_string());
      CAPTURE(y.to_string());
      Vals mx = members(x, lo), my = members(y, lo);
      CHECK(band(set_sum(mx, my, lo), -2 * b, 2 * b) == band(members(kgamma_add(x, y), lo), -2 * b, 2 * b));
      CHECK(band(set_mul(mx, my), -2 * b, 2 * b) == band(members(kgamma_mul(x, y), lo), -2 * b, 2 * b));
    }
  }
}

TEST_CASE("subset text form") {
  for (const char* t : {"3", "-2", "bot", "[bot,3]", "[bot,-1]"}) {
    CHECK(OGSubset::parse(t).to_string() == t);
  }
  CHECK(OGSubset::parse("[bot,bot]") == OGSubset::singleton(OGElem::bottom()));
  CHECK(OGSubset::parse("[bot,2]").is_interval());
}

TEST_CASE("windows") {
  CHECK(hgamma_window(2).size() == 6);
  CHECK(kgamma_window(1).size() == 7);
  CHECK(kgamma_window(4).size() == 19);
  CHECK(window_singleton(OGElem::bottom(), 2) == SubsetMask::singleton(0));
  CHECK_THROWS_AS(window_singleton(OGElem::of(100), 2), AlgebraError);
  // [bot, 0] on window 1: bottom and -3..0.
  CHECK(window_mask(OGSubset::down(OGElem::of(0)), 1).size() == 5);
}

TEST_CASE("window checks of H_Z and K_Z") {
  CHECK(check_hgamma_window(4).passed());
  CHECK(check_hgamma_dd_window(4).passed());
  CHECK(check_kgamma_fuzzy_window(4).passed());
  CHECK(check_kgamma_assoc_window(4).passed());
  CHECK(check_kgamma_embed_window(3).passed());
}

TEST_CASE("reduced fuzzy ring of H_Z matches K_Z on windows") {
  for (long long b = 1; b <= 4; ++b) {
    CAPTURE(b);
    CHECK(check_fbar_hgamma_iso_kgamma(b).report.passed());
  }
  FbarIsoReport r = check_fbar_hgamma_iso_kgamma(3);
  CHECK(r.hgamma_pairs == 49);
  CHECK(r.closure_sums == 15);
  CHECK(r.add_cases == 225);
  CHECK(r.mul_cases == 225);
  CHECK(r.epsilon.to_string() == "0");
}

TEST_CASE("embedding is elementwise") {
  const long long b = 2;
  for (const OGSubset& a : kgamma_window(b)) {
    SubsetMask m = kgamma_embed(a, b);
    Vals expect = members(a, -3 * b);
    CHECK(m.size() == static_cast<int>(expect.size()));
  }
}

TEST_CASE("Zariski systems") {
  ZariskiSystem pq = load_z("zariski-pq.json");
  CHECK(check_zariski(pq).passed());
  CHECK(zero_set(pq, {0}) == std::vector<bool>{false, true});
  CHECK(zero_set(pq, {1}) == std::vector<bool>{false, false});
  CHECK(zero_set(pq, {}) == std::vector<bool>{true, true});
  PushedZariskiSystem pushed = pushforward_zariski(pq, 4);
  CHECK(zero_set(pushed, {0}) == std::vector<bool>{false, true});

  for (const char* name : {"zariski-pq.json", "zariski-three.json", "zariski-chain.json"}) {
    CAPTURE(name);
    ZariskiSystem z = load_z(name);
    CHECK(check_zariski(z).passed());
    CHECK(check_zero_sets_preserved(z, 4).passed());
  }

  ZariskiSystem bad = pq;
  bad.functions.pop_back();
  bad.functions[0].values[1] = OGSubset::singleton(OGElem::bottom());
  bad.functions[0].values[0] = OGSubset::down(OGElem::of(1));
  AxiomReport rep = check_zariski(bad);
  CHECK_FALSE(rep.passed());
}

TEST_CASE("restriction of a demifield map to K is not a strict hom") {
  F1NotFullReport r = check_f1notfull();
  CHECK(r.semiring.passed());
  CHECK(r.restriction.passed());
  CHECK_FALSE(r.strict_hom_exists);
}
