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

// Powerset functor F from hyperrings to fuzzy rings, its quasi-inverse G on
// field-like fuzzy rings, unit fields, and extension of weak morphisms.

#ifndef HYPERALG_FUNCTORS_H_
#define HYPERALG_FUNCTORS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperalg/core.h"
#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"

namespace hyperalg {

// Base carriers up to this size get dense fuzzy-ring tables.
inline constexpr std::size_t kMaterializeCap = 10;

// F(R) on the nonempty subsets of R (plus the empty set when R has an empty
// sum). Element order: singletons {x} at index x, then the remaining nonempty
// masks by increasing bit pattern, then the empty set if present. Hence
// embed(x) == x.
class PowersetFuzzyRing {
 public:
  explicit PowersetFuzzyRing(FiniteHyperring base);

  const FiniteHyperring& base() const { return base_; }
  std::size_t size() const { return masks_.size(); }
  SubsetMask mask(Elem i) const { return masks_[i]; }
  const std::vector<SubsetMask>& masks() const { return masks_; }
  // kNoElem when the mask is not an element.
  Elem index_of(SubsetMask m) const;
  Elem embed(Elem x) const { return x; }

  SubsetMask add_masks(SubsetMask a, SubsetMask b) const { return base_.sum(a, b); }
  SubsetMask mul_masks(SubsetMask a, SubsetMask b) const { return base_.product(a, b); }

  bool materialized() const { return fuzzy_.has_value(); }
  // Throws CapExceeded when the base is above kMaterializeCap.
  const FiniteFuzzyRing& fuzzy() const;

 private:
  FiniteHyperring base_;
  std::vector<SubsetMask> masks_;
  std::vector<Elem> index_;  // bit pattern -> element
  std::optional<FiniteFuzzyRing> fuzzy_;
};

// Throws CapExceeded above powerset_cap().
PowersetFuzzyRing F_obj(const FiniteHyperring& r);

// A -> f(A). The certificate is the strong-morphism closure verdict.
MorphismTable F_mor(std::span<const Elem> f, const PowersetFuzzyRing& src,
                    const PowersetFuzzyRing& dst);

// Violations carry the unit pair (a, b) for which no c in K^x u {0} makes
// a+b+c null.
AxiomReport is_field_like(const FiniteFuzzyRing& k);

// G(K) on {0} u K^x with a (+) b = {c : a + b + eps*c null}. The result is
// flagged partial exactly when K is not field-like.
struct GResult {
  FiniteHyperring hyperring;
  std::vector<Elem> carrier;   // element of G(K) -> element of K
  std::vector<Elem> position;  // element of K -> element of G(K), or kNoElem
};
GResult G_obj(const FiniteFuzzyRing& k);

// Weak morphism K -> L extended by 0 -> 0, expressed on G(K) -> G(L).
std::vector<Elem> G_mor(std::span<const Elem> f, const GResult& gk, const GResult& gl);

// R^x u {0} with sums intersected with it. Flagged partial when some
// intersected sum is empty, so a hyperfield maps to itself.
struct UnitFieldResult {
  FiniteHyperring hyperring;
  std::vector<Elem> carrier;  // element of the unit field -> element of R
};
UnitFieldResult unit_field(const FiniteHyperring& r);
// The unit field {0, 1, -1} of the integers: 1+1 and (-1)+(-1) are empty.
FiniteHyperring unit_field_of_integers();

// G(F(k)) equals k on the nose and the identity is strict both ways.
AxiomReport check_roundtrips(const FiniteHyperring& k);
// K^x -> F(G(K))^x is a weak isomorphism in both directions.
AxiomReport check_roundtrips_fuzzy(const FiniteFuzzyRing& k);

// --- extending weak morphisms to strong ones --------------------------------------

struct ExtensionSearchConfig {
  std::size_t max_null_generators = 8;  // longest summand list kept per witness
  std::size_t budget = 200000;          // search nodes
};

enum class ExtensionVerdict { kExtends, kRefuted, kUnknown };
std::string_view to_string(ExtensionVerdict v);

// One root branch of a refutation: the value tried for the first free orbit
// and a null sum whose image it (or every completion below it) makes non-null.
struct BranchWitness {
  Elem orbit_rep = kNoElem;
  Elem value = kNoElem;
  std::vector<std::pair<Elem, Elem>> summands;
  std::pair<Elem, Elem> violating{kNoElem, kNoElem};
  std::size_t subtree_nodes = 0;
};

struct ExtensionResult {
  ExtensionVerdict verdict = ExtensionVerdict::kUnknown;
  std::vector<Elem> witness;            // the strong morphism when kExtends
  std::vector<BranchWitness> branches;  // when kRefuted
  std::size_t nodes = 0;
  std::size_t orbits = 0;
};

// Searches total maps g : K -> L agreeing with the weak morphism `i` on zero
// and units. Condition (1) fixes g on each unit orbit from its smallest
// member; that member ranges over the elements of L fixed by i(u) for every
// u in its stabiliser. Partial assignments are pruned by the strong-morphism
// closure restricted to generators whose factors are already assigned, which
// only grows as the assignment grows. `hint`, when given, is tried first at
// every orbit.
ExtensionResult strong_extension_search(std::span<const Elem> i, const FiniteFuzzyRing& k,
                                        const FiniteFuzzyRing& l, const ExtensionSearchConfig& cfg,
                                        std::optional<std::vector<Elem>> hint = std::nullopt);

// Union extension between powerset rings: A -> union of psi(a) with
// psi(0) = {0}, psi(u) = i({u}) for units and psi(x) = the whole target
// carrier for the remaining elements.
std::vector<Elem> union_extension(std::span<const Elem> i, const PowersetFuzzyRing& src,
                                  const PowersetFuzzyRing& dst);

}  // namespace hyperalg

#endif  // HYPERALG_FUNCTORS_H_
