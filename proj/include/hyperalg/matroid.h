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

// Grassmann-Pluecker functions with coefficients in a hyperfield or a fuzzy
// ring.

#ifndef HYPERALG_MATROID_H_
#define HYPERALG_MATROID_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hyperalg/core.h"
#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"

namespace hyperalg {

inline constexpr std::size_t kMaxGroundSet = 6;
inline constexpr std::size_t kMaxGPRank = 3;

// Strictly increasing r-tuples of {0..n-1} in lexicographic order, as masks.
std::vector<std::uint64_t> r_subsets(std::size_t n, std::size_t r);

// phi on sorted r-tuples only; values[i] belongs to r_subsets(n, r)[i]. Other
// tuples are read through the sign rule: an odd permutation multiplies by the
// sign element (-1 or epsilon) and a repeated entry gives 0.
struct GPFunction {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Elem> values;

  bool operator==(const GPFunction&) const = default;
  auto operator<=>(const GPFunction&) const = default;
};

// Value on an arbitrary tuple of ground elements.
Elem gp_value(const GPFunction& phi, std::span<const std::size_t> tuple, const OpTable& mul,
              Elem sign);

// GPH0 (values are zero or units), GPH1 and GPH3. Witnesses of GPH3 are the
// masks of {x_1..x_{r+1}} and {y_1..y_{r-1}}.
AxiomReport verify_gp_hyper(const GPFunction& phi, const FiniteHyperring& f);
// GPF0, GPF1 and GPF3 with epsilon^k weights.
AxiomReport verify_gp_fuzzy(const GPFunction& phi, const FiniteFuzzyRing& k);

struct GPEnumConfig {
  bool normalize = true;  // first nonzero slot equal to 1
  unsigned jobs = 1;
};

// All GP functions of rank r on n points, sorted by values. Relations are
// checked as soon as their last slot is assigned; every result is re-verified
// by the full checker.
std::vector<GPFunction> enumerate_gp(const FiniteHyperring& f, std::size_t n, std::size_t r,
                                     const GPEnumConfig& cfg = {});
std::vector<GPFunction> enumerate_gp(const FiniteFuzzyRing& k, std::size_t n, std::size_t r,
                                     const GPEnumConfig& cfg = {});

GPFunction pushforward_gp(const GPFunction& phi, std::span<const Elem> f);
GPFunction scale_gp(const GPFunction& phi, Elem unit, const OpTable& mul);

struct OneToOneReport {
  bool hyper = false;                 // over F
  bool fuzzy = false;                 // over F(F), via singletons
  std::optional<bool> reduced;        // over Fbar(F) when F is doubly distributive
  bool agree() const { return hyper == fuzzy && (!reduced || *reduced == hyper); }
};
OneToOneReport cross_check_onetoone(const GPFunction& phi, const FiniteHyperring& f);

struct OneToOneGReport {
  bool fuzzy = false;  // over K
  bool hyper = false;  // over G(K), via the unit identification
  bool agree() const { return fuzzy == hyper; }
};
OneToOneGReport cross_check_onetoone_G(const GPFunction& phi, const FiniteFuzzyRing& k);

// Sorted masks of r-subsets.
using BasisFamily = std::vector<std::uint64_t>;

BasisFamily underlying_matroid(const GPFunction& phi);
bool satisfies_basis_exchange(const BasisFamily& family);
// Every nonempty family of r-subsets of an n-set satisfying basis exchange,
// sorted.
std::vector<BasisFamily> basis_exchange_oracle(std::size_t n, std::size_t r);

}  // namespace hyperalg

#endif  // HYPERALG_MATROID_H_
