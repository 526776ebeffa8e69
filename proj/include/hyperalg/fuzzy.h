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

// Finite fuzzy rings and their weak and strong morphisms.

#ifndef HYPERALG_FUZZY_H_
#define HYPERALG_FUZZY_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalg/core.h"

namespace hyperalg {

// Carrier with single-valued + and x, a null set K0 and the element epsilon.
// Carriers may exceed 64 elements (powerset constructions), so K0 is a
// per-element flag vector rather than a SubsetMask.
//
// epsilon is located as the unique unit a with 1+a null. A supplied value
// must agree with it; when no such unit exists the supplied value is kept so
// that the axiom checker can report the failure.
class FiniteFuzzyRing {
 public:
  FiniteFuzzyRing(OpTable add, OpTable mul, std::vector<bool> k0,
                  std::optional<Elem> epsilon = std::nullopt,
                  std::vector<std::string> labels = {});

  std::size_t size() const { return add_.size(); }
  Elem zero() const { return zero_of(size()); }
  Elem one() const { return one_of(size()); }
  Elem epsilon() const { return epsilon_; }

  Elem add(Elem a, Elem b) const { return add_.at(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_.at(a, b); }
  bool is_null(Elem a) const { return k0_[a]; }

  // Units in increasing index order; inverse(a) is kNoElem for non-units.
  const std::vector<Elem>& units() const { return units_; }
  bool is_unit(Elem a) const { return inverse_[a] != kNoElem; }
  Elem inverse(Elem a) const { return inverse_[a]; }

  const OpTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }
  const std::vector<bool>& k0() const { return k0_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

  bool same_tables(const FiniteFuzzyRing& o) const {
    return add_ == o.add_ && mul_ == o.mul_ && k0_ == o.k0_ && epsilon_ == o.epsilon_;
  }

 private:
  OpTable add_;
  OpTable mul_;
  std::vector<bool> k0_;
  Elem epsilon_ = kNoElem;
  std::vector<Elem> units_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
};

// FR0 through FR7. FR2 and FR5 quantify over units only.
AxiomReport check_fuzzy_axioms(const FiniteFuzzyRing& k);

struct UnitGroup {
  std::vector<Elem> units;
  std::vector<Elem> inverse;  // indexed by carrier element
};
UnitGroup unit_group(const FiniteFuzzyRing& k);

// `f` is indexed by elements of K; only zero and the units are read.
// Decided by reachability over pairs (sum in K, sum in L) starting at (0,0),
// one step per unit summand. Throws AlgebraError when f is not a group
// homomorphism K^x -> L^x.
ClosureCertificate check_weak_morphism(std::span<const Elem> f, const FiniteFuzzyRing& k,
                                       const FiniteFuzzyRing& l);

// Condition (1) on all unit a and all b, then reachability where each step
// adds a generator (ab, g(a)g(b)) over all pairs a, b.
ClosureCertificate check_strong_morphism(std::span<const Elem> g, const FiniteFuzzyRing& k,
                                         const FiniteFuzzyRing& l);

// Reachability over (sum in K, sum in L) from (0,0), one generator per step.
// Rejects at the first (null, non-null) pair; `witness` is a shortest list of
// generators reaching it.
ClosureCertificate pair_closure(const FiniteFuzzyRing& k, const FiniteFuzzyRing& l,
                                std::span<const std::pair<Elem, Elem>> gens);

// Brute-force form of the weak morphism condition: every multiset of at most
// `max_terms` units with a null sum has a null image sum. Returns the first
// offending list, or nullopt.
std::optional<std::vector<Elem>> find_weak_violation_bounded(std::span<const Elem> f,
                                                             const FiniteFuzzyRing& k,
                                                             const FiniteFuzzyRing& l,
                                                             std::size_t max_terms);

MorphismTable make_weak(std::span<const Elem> f, const FiniteFuzzyRing& k,
                        const FiniteFuzzyRing& l);
MorphismTable make_strong(std::span<const Elem> g, const FiniteFuzzyRing& k,
                          const FiniteFuzzyRing& l);

// Keeps zero and the units; every other entry becomes kNoElem.
MorphismTable restrict_strong_to_weak(const MorphismTable& g, const FiniteFuzzyRing& k,
                                      const FiniteFuzzyRing& l);

// g after f, entrywise; kNoElem propagates.
std::vector<Elem> compose(std::span<const Elem> f, std::span<const Elem> g);

// Every unit-group homomorphism K^x -> L^x (as maps on K with zero fixed),
// in lexicographic order. Used for exhaustive morphism sweeps.
std::vector<std::vector<Elem>> unit_homomorphisms(const FiniteFuzzyRing& k,
                                                  const FiniteFuzzyRing& l);

// A unit-group isomorphism alpha with alpha and its inverse both weak.
std::optional<std::vector<Elem>> weak_iso(const FiniteFuzzyRing& k, const FiniteFuzzyRing& l);

// "krasnerfuzzy" (0, 1, k0) and "signfuzzy" (0, 1, -1, k0).
FiniteFuzzyRing builtin_fuzzy(std::string_view name);
std::vector<std::string> builtin_fuzzy_names();

}  // namespace hyperalg

#endif  // HYPERALG_FUZZY_H_
