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

// Slow reference implementations used to cross-check the library. They only
// read operation tables from library objects and never call library
// algorithms. Sets are std::set, tuples are std::vector, and every search is
// plain brute force.

#ifndef HYPERALG_TESTS_ORACLE_H_
#define HYPERALG_TESTS_ORACLE_H_

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"

namespace oracle {

using Set = std::set<int>;

struct Hyper {
  int n = 0;
  std::vector<std::vector<Set>> add;
  std::vector<std::vector<int>> mul;
};
Hyper from(const hyperalg::FiniteHyperring& r);

Set to_set(hyperalg::SubsetMask m);
Set sum(const Hyper& h, const Set& a, const Set& b);
Set product(const Hyper& h, const Set& a, const Set& b);
// Left-to-right sum of singletons; {0} for the empty list.
Set sum_of(const Hyper& h, const std::vector<int>& terms);
bool doubly_distributive(const Hyper& h);
int negative(const Hyper& h, int a);  // -1 when not unique

// S(F) by repeated pairwise sums of family members.
std::set<Set> closure(const Hyper& h);

struct Fuzzy {
  int n = 0;
  std::vector<std::vector<int>> add;
  std::vector<std::vector<int>> mul;
  std::vector<bool> null;
  int eps = -1;
  std::vector<int> units;
};
Fuzzy from(const hyperalg::FiniteFuzzyRing& k);

// All FR0..FR7 by direct quantification; true when every axiom holds.
bool fuzzy_axioms(const Fuzzy& k);

// A sequence of at most max_len units whose sum is null in K but whose image
// sum is not null in L. Sequences, not multisets, so order is exercised too.
std::optional<std::vector<int>> weak_violation(const std::vector<hyperalg::Elem>& f, const Fuzzy& k,
                                               const Fuzzy& l, int max_len);

// --- Grassmann-Pluecker ---------------------------------------------------------

// phi on every ordered r-tuple, built from values on sorted tuples in
// lexicographic order by the sign rule (bubble sort swap count).
std::map<std::vector<int>, int> expand(int n, int r, const std::vector<int>& sorted_values,
                                       const std::vector<std::vector<int>>& mul, int sign);
std::vector<std::vector<int>> sorted_tuples(int n, int r);

// Relations over every ordered tuple of distinct x's and y's.
bool gp_valid_hyper(const Hyper& h, int n, int r, const std::vector<int>& values);
bool gp_valid_fuzzy(const Fuzzy& k, int n, int r, const std::vector<int>& values);

// Unpruned enumeration; keeps the lexicographically smallest member of each
// unit-scaling class (or every valid function when all is set).
std::vector<std::vector<int>> gp_enumerate_hyper(const Hyper& h, int n, int r, bool all);

// Basis families as sets of sets.
using Family = std::set<Set>;
bool basis_exchange(const Family& f);
std::set<Family> all_matroids(int n, int r);

}  // namespace oracle

#endif  // HYPERALG_TESTS_ORACLE_H_
