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

// Iterated-sum closures, the reduced powerset fuzzy ring, partial demifields
// and the triangle-hyperfield interval arithmetic.

#ifndef HYPERALG_DDHYPER_H_
#define HYPERALG_DDHYPER_H_

#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/rational.hpp>

#include "hyperalg/core.h"
#include "hyperalg/functors.h"
#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"

namespace hyperalg {

// All subsets of F that are iterated hypersums. Singletons come first in
// base order, then the other sums by increasing bit pattern, then the empty
// set if F is partial and produces it.
struct SumClosure {
  std::vector<SubsetMask> family;
  std::unordered_map<std::uint64_t, Elem> index;  // bit pattern -> position

  std::size_t size() const { return family.size(); }
  Elem index_of(SubsetMask m) const {
    auto it = index.find(m.bits());
    return it == index.end() ? kNoElem : it->second;
  }
};

SumClosure closure_S(const FiniteHyperring& f);

// Shortest list c_1..c_l of elements with c_1 + ... + c_l == target, if any.
std::optional<std::vector<Elem>> sum_decomposition(const FiniteHyperring& f, SubsetMask target);

// Reduced fuzzy ring on S(F). Throws AlgebraError carrying the witness
// quadruple when require_dd is set and F is not doubly distributive, and
// whenever some product leaves S(F).
struct ReducedFuzzyRing {
  SumClosure closure;
  FiniteFuzzyRing fuzzy;
};
ReducedFuzzyRing Fbar(const FiniteHyperring& f, bool require_dd = true);

// Position of each element of Fbar(F) inside F(F).
std::vector<Elem> fbar_inclusion(const ReducedFuzzyRing& red, const PowersetFuzzyRing& full);

// S(F) closed under elementwise products; witnesses are position pairs.
AxiomReport check_mul_closure(const FiniteHyperring& f);
// Every product of two members of S(F) is an explicit iterated sum. The
// decompositions found are re-summed and compared before being accepted.
AxiomReport check_condicondi(const FiniteHyperring& f);

// Map S(F) -> S(F') induced by an element map; kNoElem where the image is
// not a member of S(F').
std::vector<Elem> induced_closure_map(std::span<const Elem> f, const SumClosure& src,
                                      const SumClosure& dst);

// --- triangle hyperfield ---------------------------------------------------------

using Rational = boost::rational<long long>;

// [lo, hi] within the nonnegative rationals.
struct RationalInterval {
  Rational lo;
  Rational hi;

  static RationalInterval point(Rational x) { return {x, x}; }
  bool operator==(const RationalInterval&) const = default;
  std::string to_string() const;
};

// Union of [|x - y|, x + y] over x in a, y in b.
RationalInterval triangle_sum(const RationalInterval& a, const RationalInterval& b);
RationalInterval interval_product(const RationalInterval& a, const RationalInterval& b);

struct TriangleReport {
  RationalInterval two_plus_three;  // 2 v 3
  RationalInterval square;          // (2 v 3)^2
  RationalInterval expanded;        // 4 v 6 v 6 v 9
  bool equal = true;
};
TriangleReport triangle_counterexample();

// --- partial demifields ------------------------------------------------------------

// Semiring S with F embedded multiplicatively. When S comes from F1,
// `subsets` records the subset of F each element of S stands for.
struct PartialDemifield {
  FiniteHyperring hyperfield;
  OpTable add;
  OpTable mul;
  std::vector<Elem> embedding;       // element of F -> element of S
  std::vector<SubsetMask> subsets;   // optional, one per element of S
  std::size_t size() const { return add.size(); }
};

PartialDemifield F1(const FiniteHyperring& f);

// Semiring laws, F a multiplicative submonoid that generates S, and
// a +_S b in F  =>  a +_S b in a +_F b.
AxiomReport check_partial_demifield(const PartialDemifield& p);

// Iterated F-sums against iterated S-sums for every length at once: the pairs
// (F-sum, S-sum) reachable by adding one element at a time form a finite
// closure, and the condition holds iff that relation is a bijection onto its
// image (and matches `subsets` when present).
AxiomReport check_addsame(const PartialDemifield& p);

// Fbar of the underlying hyperfield; throws unless check_addsame passes.
FiniteFuzzyRing F2(const PartialDemifield& p);

// Semiring homomorphism S -> S' restricting to a (containment) hyperfield hom.
AxiomReport check_demifield_morphism(std::span<const Elem> f, const PartialDemifield& p,
                                     const PartialDemifield& q);

}  // namespace hyperalg

#endif  // HYPERALG_DDHYPER_H_
