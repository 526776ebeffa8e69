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

// The valuative hyperfield H_Z of the ordered group (Z,+), the fuzzy ring K_Z
// of singletons and down-intervals, and Zariski systems over K_Z.
//
// The carriers are infinite. Elements are symbolic; every universally
// quantified check runs over a window of values [-B, B] plus bottom, and
// compares set-valued results through masks over the wider window
// [-3B, 3B] plus bottom (bit 0 is bottom, value v is bit v + 3B + 1).

#ifndef HYPERALG_ORDGRP_H_
#define HYPERALG_ORDGRP_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalg/core.h"

namespace hyperalg {

// An integer or bottom, which lies below every integer.
struct OGElem {
  std::optional<long long> value;

  static OGElem bottom() { return {}; }
  static OGElem of(long long v) { return {v}; }
  bool is_bottom() const { return !value.has_value(); }

  bool operator==(const OGElem&) const = default;
  std::strong_ordering operator<=>(const OGElem& o) const {
    if (is_bottom() || o.is_bottom()) return !is_bottom() <=> !o.is_bottom();
    return *value <=> *o.value;
  }
  std::string to_string() const;
};

// {x} or [bottom, x]. [bottom, bottom] is stored as Singleton(bottom).
struct OGSubset {
  enum class Tag { kSingleton, kDownInterval };
  Tag tag = Tag::kSingleton;
  OGElem upper;

  static OGSubset singleton(OGElem x) { return {Tag::kSingleton, x}; }
  static OGSubset down(OGElem x) {
    return {x.is_bottom() ? Tag::kSingleton : Tag::kDownInterval, x};
  }
  bool is_interval() const { return tag == Tag::kDownInterval; }
  // Null iff bottom is a member.
  bool is_null() const { return is_interval() || upper.is_bottom(); }

  bool operator==(const OGSubset&) const = default;
  // "3", "bot", "[bot,3]".
  std::string to_string() const;
  static OGSubset parse(std::string_view text);
};

OGSubset hgamma_add(OGElem x, OGElem y);
OGElem hgamma_mul(OGElem x, OGElem y);

OGSubset kgamma_add(const OGSubset& a, const OGSubset& b);
OGSubset kgamma_mul(const OGSubset& a, const OGSubset& b);

// Identity of the ordered group; both 1 and epsilon of K_Z.
inline OGSubset kgamma_one() { return OGSubset::singleton(OGElem::of(0)); }

// --- windows -----------------------------------------------------------------------

// Largest B whose [-3B, 3B] window fits in one mask.
inline constexpr long long kMaxWindow = 10;

// Elements of H_Z with values in [-B, B], bottom first.
std::vector<OGElem> hgamma_window(long long b);
// Elements of K_Z with uppers in [-B, B]: Singleton(bottom), then for each v
// Singleton(v) and DownInterval(v).
std::vector<OGSubset> kgamma_window(long long b);

// Mask over [-3B, 3B] plus bottom. Throws when a value falls outside.
SubsetMask window_mask(const OGSubset& a, long long b);
SubsetMask window_singleton(OGElem x, long long b);
// Hypersum of two window masks; intervals are cut at -3B.
SubsetMask window_add(SubsetMask x, SubsetMask y, long long b);
// Elementwise product; products leaving the window are dropped.
SubsetMask window_mul(SubsetMask x, SubsetMask y, long long b);
// Keeps bottom and the values in [-lim, lim].
SubsetMask window_trim(SubsetMask x, long long lim, long long b);

// Canonical hypergroup axioms on [-B, B] plus bottom.
AxiomReport check_hgamma_window(long long b);
// (a+b)(c+d) = ac+ad+bc+bd on [-B, B] plus bottom.
AxiomReport check_hgamma_dd_window(long long b);
// FR0 through FR7 with all quantifiers over kgamma_window(B).
AxiomReport check_kgamma_fuzzy_window(long long b);
// kgamma_add associativity over every tag combination in the window.
AxiomReport check_kgamma_assoc_window(long long b);

struct FbarIsoReport {
  AxiomReport report;
  std::size_t hgamma_pairs = 0;  // pairs x, y of window integers summed
  std::size_t closure_sums = 0;  // distinct iterated sums found
  std::size_t add_cases = 0;     // K_Z pairs compared under +
  std::size_t mul_cases = 0;     // K_Z pairs compared under x
  OGSubset epsilon;              // {-1} of H_Z read back as a K_Z element
};
// Iterated sums of window elements are all singletons or down-intervals;
// K_Z operations agree with mask operations; null sets correspond.
FbarIsoReport check_fbar_hgamma_iso_kgamma(long long b);

// Inclusion K_Z -> F(H_Z) on the window.
SubsetMask kgamma_embed(const OGSubset& a, long long b);
// Injective, additive, multiplicative and null-reflecting on the window;
// together these make it a strong morphism.
AxiomReport check_kgamma_embed_window(long long b);

// --- Zariski systems -----------------------------------------------------------------

struct ZariskiFunction {
  std::string name;
  std::vector<OGSubset> values;  // one per point
};

// Functions are generators: the system's function set is their
// multiplicative closure, which satisfies (Z1) by construction.
struct ZariskiSystem {
  std::vector<std::string> points;
  std::vector<ZariskiFunction> functions;
};

// Shape and (Z2). Every value of a product of generators at a point is
// non-null iff all factors are, so (Z2) is decided on the generators.
AxiomReport check_zariski(const ZariskiSystem& s);

// The system after composing every function with kgamma_embed.
struct PushedZariskiSystem {
  std::vector<std::string> points;
  std::vector<std::string> names;
  std::vector<std::vector<SubsetMask>> values;  // [function][point]
  long long window = 0;
};
PushedZariskiSystem pushforward_zariski(const ZariskiSystem& s, long long b);

// Points where every function indexed by t is null; a bitmask over points.
std::vector<bool> zero_set(const ZariskiSystem& s, const std::vector<std::size_t>& t);
std::vector<bool> zero_set(const PushedZariskiSystem& s, const std::vector<std::size_t>& t);

// Z(T) = Z(phi(T)) for every subset T of the generators (at most 16).
AxiomReport check_zero_sets_preserved(const ZariskiSystem& s, long long b);

// --- F1 is not full ------------------------------------------------------------------

// The map S(K) = {0, 1, K} -> K_Z with 0 -> bot, 1 -> 0, K -> [bot, 0].
struct F1NotFullReport {
  AxiomReport semiring;       // additive and multiplicative on all pairs
  AxiomReport restriction;    // containment hom K -> H_Z on {0, 1}
  bool strict_hom_exists = true;
};
F1NotFullReport check_f1notfull();

}  // namespace hyperalg

#endif  // HYPERALG_ORDGRP_H_
