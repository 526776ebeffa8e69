#include "doctest.h"

#include <cstdlib>

#include "hyperalg/core.h"
#include "hyperalg/hyper.h"
#include "oracle.h"

using namespace hyperalg;

TEST_CASE("subset masks iterate members in increasing order") {
  SubsetMask m = SubsetMask::of({5, 0, 3});
  CHECK(m.size() == 3);
  CHECK(m.elements() == std::vector<Elem>{0, 3, 5});
  CHECK(m.first() == 0);
  CHECK(m.contains(3));
  CHECK_FALSE(m.contains(4));
  CHECK(SubsetMask::singleton(3).is_singleton());
  CHECK_FALSE(m.is_singleton());
  CHECK(SubsetMask::of({3}).subset_of(m));
  CHECK((m - SubsetMask::of({0})).elements() == std::vector<Elem>{3, 5});
  CHECK(SubsetMask::full(4).bits() == 0xF);
  CHECK(SubsetMask::full(64).size() == 64);
  CHECK(SubsetMask().empty());
}

TEST_CASE("carrier convention puts zero at 0 and one at 1") {
  CHECK(zero_of(5) == 0);
  CHECK(one_of(5) == 1);
  CHECK(one_of(1) == 0);
}

TEST_CASE("tables reject a wrong cell count") {
  CHECK_THROWS_AS(OpTable(2, std::vector<Elem>{0, 1, 2}), AlgebraError);
  OpTable t(2, std::vector<Elem>{0, 1, 1, 0});
  CHECK(t.at(1, 0) == 1);
  CHECK(t.row(1).size() == 2);
}

TEST_CASE("hypersum extension matches the set oracle") {
  FiniteHyperring s = signs();
  auto h = oracle::from(s);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      SubsetMask sa(a), sb(b);
      CHECK(oracle::to_set(extend_hyperop(s.add_table(), sa, sb)) ==
            oracle::sum(h, oracle::to_set(sa), oracle::to_set(sb)));
      CHECK(oracle::to_set(extend_op(s.mul_table(), sa, sb)) ==
            oracle::product(h, oracle::to_set(sa), oracle::to_set(sb)));
    }
  }
}

TEST_CASE("iterated hypersums agree with left-to-right oracle sums") {
  FiniteHyperring r = kh(klein_four());
  auto h = oracle::from(r);
  std::vector<std::vector<Elem>> lists = {{1}, {1, 1}, {1, 2, 3}, {1, 2, 3, 4}, {4, 4, 2}};
  for (const auto& l : lists) {
    std::vector<int> ints(l.begin(), l.end());
    CHECK(oracle::to_set(iterated_hypersum(r.add_table(), l)) == oracle::sum_of(h, ints));
  }
  CHECK_THROWS_AS(iterated_hypersum(r.add_table(), std::vector<Elem>{}), AlgebraError);
}

TEST_CASE("image of a mask under a map") {
  std::vector<Elem> f{0, 1, 1};
  CHECK(image(f, SubsetMask::of({1, 2})) == SubsetMask::of({1}));
  CHECK(image(f, SubsetMask()).empty());
}

TEST_CASE("reports count every violation but store a bounded number") {
  AxiomReport r;
  CHECK(r.passed());
  for (Elem i = 0; i < 40; ++i) r.add("assoc", {i, 1, 2});
  CHECK_FALSE(r.passed());
  CHECK(r.total() == 40);
  CHECK(r.violations().size() == AxiomReport::kMaxStored);
  CHECK(r.has("assoc"));
  CHECK_FALSE(r.has("comm"));
  CHECK(r.describe().find("assoc: (0, 1, 2)") == 0);
  CHECK(r.describe().find("... 8 more") != std::string::npos);
  AxiomReport other;
  other.add("comm", {1});
  other.merge(r);
  CHECK(other.total() == 41);
}

TEST_CASE("powerset cap reads the environment and respects the hard cap") {
  unsetenv("HYPERALG_MAX_POWERSET");
  CHECK(powerset_cap() == 8);
  setenv("HYPERALG_MAX_POWERSET", "12", 1);
  CHECK(powerset_cap() == 12);
  setenv("HYPERALG_MAX_POWERSET", "99", 1);
  CHECK(powerset_cap() == kPowersetHardCap);
  setenv("HYPERALG_MAX_POWERSET", "junk", 1);
  CHECK(powerset_cap() == 8);
  unsetenv("HYPERALG_MAX_POWERSET");
}
