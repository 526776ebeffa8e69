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

// Finite hyperrings, hyperfields and partial hyperrings.

#ifndef HYPERALG_HYPER_H_
#define HYPERALG_HYPER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperalg/core.h"

namespace hyperalg {

// Finite hyperring with subset-valued addition and single-valued
// multiplication. Construction checks only that the tables are well formed;
// the axioms are the business of the check_* functions, so deliberately broken
// tables can be built and diagnosed.
class FiniteHyperring {
 public:
  FiniteHyperring(HyperTable add, OpTable mul, bool partial = false,
                  std::vector<std::string> labels = {});

  std::size_t size() const { return add_.size(); }
  Elem zero() const { return zero_of(size()); }
  Elem one() const { return one_of(size()); }
  bool partial() const { return partial_; }

  SubsetMask add(Elem a, Elem b) const { return add_.at(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_.at(a, b); }
  // The unique x with 0 in a+x, or kNoElem when there is none or several.
  Elem neg(Elem a) const { return neg_[a]; }

  SubsetMask sum(SubsetMask a, SubsetMask b) const {
    return extend_hyperop(add_, a, b);
  }
  SubsetMask product(SubsetMask a, SubsetMask b) const {
    return extend_op(mul_, a, b);
  }
  SubsetMask carrier() const { return SubsetMask::full(size()); }

  const HyperTable& add_table() const { return add_; }
  const OpTable& mul_table() const { return mul_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(Elem a) const;

  // Elements with a multiplicative inverse.
  SubsetMask units() const;
  // True when some hypersum is empty.
  bool has_empty_sum() const;

  // Equality of operation tables and the partial flag; labels are cosmetic.
  bool same_tables(const FiniteHyperring& other) const {
    return add_ == other.add_ && mul_ == other.mul_ && partial_ == other.partial_;
  }

 private:
  HyperTable add_;
  OpTable mul_;
  std::vector<Elem> neg_;
  bool partial_;
  std::vector<std::string> labels_;
};

// Finite abelian group given by its multiplication table, identity at 0.
struct FiniteGroup {
  OpTable mul;
  std::vector<std::string> labels;

  std::size_t order() const { return mul.size(); }
};

FiniteGroup klein_four();
FiniteGroup cyclic_group(std::size_t order);

// Finite commutative ring with 0 at index 0 and 1 at index 1.
struct FiniteRing {
  OpTable add;
  OpTable mul;
  std::vector<std::string> labels;

  std::size_t size() const { return add.size(); }
  SubsetMask units() const;
};

FiniteRing integers_mod(std::size_t m);
// GF(q) for a prime power q <= 64; elements are base-p digit vectors of
// polynomials modulo a monic irreducible of degree k.
FiniteRing galois_field(std::size_t q);

// Axiom sweeps. In partial mode hypersums may be empty; associativity is then
// only compared on triples where a+b and b+c are both nonempty, and
// distributivity only for nonzero multipliers (0*(b+c) is empty whenever b+c
// is, while 0*b + 0*c = {0}).
AxiomReport check_canonical_hypergroup(const FiniteHyperring& h);
AxiomReport check_hyperring(const FiniteHyperring& h);
AxiomReport check_hyperfield(const FiniteHyperring& h);
AxiomReport check_doubly_distributive(const FiniteHyperring& h);

// f(0)=0, f(1)=1, f(ab)=f(a)f(b) and f(a+b) contained in f(a)+f(b); equality
// when strict.
AxiomReport check_hom(std::span<const Elem> f, const FiniteHyperring& r,
                      const FiniteHyperring& s, bool strict);

// Hyperring built from a ring on the orbits of a unit subgroup u: the
// class sum [a]+[b] collects [c] for c in aU + bU and [a][b] = [ab].
// Classes are ordered [0], [1], then by smallest representative.
struct QuotientResult {
  FiniteHyperring hyperring;
  std::vector<Elem> class_of;  // ring element -> class index
};
QuotientResult quotient(const FiniteRing& ring, SubsetMask unit_subgroup);

// A ring viewed as a hyperring with singleton sums.
FiniteHyperring as_hyperring(const FiniteRing& ring);

FiniteHyperring krasner();
FiniteHyperring signs();
FiniteHyperring field_hyperring(std::size_t q);
// K[H] on H u {0}: a+a = {0,a}, a+b = H minus {a,b} for distinct nonzero a, b.
// Group element g sits at index g+1.
FiniteHyperring kh(const FiniteGroup& h);
// K[H] with two adjoined multiplicative idempotents e, f (ef = 0, eh = e,
// fh = f) whose sums follow the K[H] rule over H u {e, f}. e and f sit at the
// last two indices.
FiniteHyperring kh_ef(const FiniteGroup& h);

// Named gallery: "krasner", "signs", "gf<q>", "kh-v4", "khef-v4", "kh-c<m>",
// "khef-c<m>". Throws AlgebraError for unknown names.
FiniteHyperring builtin_hyperring(std::string_view name);
std::vector<std::string> builtin_hyperring_names();

// Hyperring homomorphisms R -> S in lexicographic order of their maps.
// Both carriers are capped at kHomSearchCap.
inline constexpr std::size_t kHomSearchCap = 8;
std::vector<MorphismTable> enumerate_homs(const FiniteHyperring& r,
                                          const FiniteHyperring& s, bool strict);

// Strict bijective homomorphism R -> S, searched by backtracking with
// per-element invariants (unit, multiplicative order, sizes of a+a and
// a+a+a) used to prune candidate images.
std::optional<std::vector<Elem>> iso_hyper(const FiniteHyperring& r,
                                           const FiniteHyperring& s);

}  // namespace hyperalg

#endif  // HYPERALG_HYPER_H_
