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

#ifndef HYPERALG_CORE_H_
#define HYPERALG_CORE_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hyperalg {

// Index of an element inside the carrier of the structure that owns it.
// Every carrier puts the additive identity at 0 and the multiplicative
// identity at 1 (or at 0 for the one-element structure).
using Elem = std::uint32_t;

inline constexpr Elem kNoElem = std::numeric_limits<Elem>::max();

// One machine word per subset.
inline constexpr std::size_t kMaxCarrier = 64;

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A carrier (or a derived table) is larger than an enforced cap.
class CapExceeded : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

// Subset of a carrier of at most 64 elements; bit i set iff i is a member.
class SubsetMask {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Elem;
    using difference_type = std::ptrdiff_t;
    using pointer = const Elem*;
    using reference = Elem;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Elem operator*() const {
      return static_cast<Elem>(std::countr_zero(rest_));
    }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}

  static constexpr SubsetMask singleton(Elem e) {
    return SubsetMask(std::uint64_t{1} << e);
  }
  static constexpr SubsetMask full(std::size_t n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }
  static SubsetMask of(std::initializer_list<Elem> elems) {
    SubsetMask m;
    for (Elem e : elems) m.insert(e);
    return m;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Elem e) const { return (bits_ >> e) & 1U; }
  constexpr bool is_singleton() const { return std::has_single_bit(bits_); }
  // Smallest member; the mask must be nonempty.
  constexpr Elem first() const {
    return static_cast<Elem>(std::countr_zero(bits_));
  }
  constexpr bool subset_of(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr void insert(Elem e) { bits_ |= std::uint64_t{1} << e; }

  constexpr SubsetMask operator|(SubsetMask o) const {
    return SubsetMask(bits_ | o.bits_);
  }
  constexpr SubsetMask operator&(SubsetMask o) const {
    return SubsetMask(bits_ & o.bits_);
  }
  constexpr SubsetMask operator-(SubsetMask o) const {
    return SubsetMask(bits_ & ~o.bits_);
  }
  constexpr SubsetMask& operator|=(SubsetMask o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Elem> elements() const { return {begin(), end()}; }

  constexpr auto operator<=>(const SubsetMask&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Dense n x n table, row-major.
template <class T>
class Table2D {
 public:
  Table2D() = default;
  Table2D(std::size_t n, T fill) : n_(n), cells_(n * n, fill) {}
  Table2D(std::size_t n, std::vector<T> cells) : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != n_ * n_) {
      throw AlgebraError("table has " + std::to_string(cells_.size()) +
                         " cells, expected " + std::to_string(n_ * n_));
    }
  }

  std::size_t size() const { return n_; }
  const T& at(Elem a, Elem b) const { return cells_[a * n_ + b]; }
  T& at(Elem a, Elem b) { return cells_[a * n_ + b]; }
  std::span<const T> row(Elem a) const {
    return std::span<const T>(cells_).subspan(a * n_, n_);
  }
  const std::vector<T>& cells() const { return cells_; }

  bool operator==(const Table2D&) const = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> cells_;
};

// Subset-valued addition (hyperaddition) table.
using HyperTable = Table2D<SubsetMask>;
// Single-valued operation table.
using OpTable = Table2D<Elem>;

// Identity positions fixed by the carrier convention.
constexpr Elem zero_of(std::size_t /*n*/) { return 0; }
constexpr Elem one_of(std::size_t n) { return n > 1 ? 1 : 0; }

// Union over a in A, b in B of a+b. Empty when either side is empty, or when
// every pairwise sum is empty (partial structures).
SubsetMask extend_hyperop(const HyperTable& add, SubsetMask a, SubsetMask b);

// Left fold of extend_hyperop over singletons; the list must be nonempty.
SubsetMask iterated_hypersum(const HyperTable& add, std::span<const Elem> elems);

// Elementwise image {a*b : a in A, b in B} of a single-valued operation.
SubsetMask extend_op(const OpTable& op, SubsetMask a, SubsetMask b);

// Image of a subset under an element map.
SubsetMask image(std::span<const Elem> map, SubsetMask a);

// Upper bound on the source carrier for powerset constructions. Defaults to 8;
// HYPERALG_MAX_POWERSET overrides it up to the hard limit of 16.
std::size_t powerset_cap();
inline constexpr std::size_t kPowersetHardCap = 16;

struct Violation {
  std::string axiom;
  std::vector<Elem> witness;
};

// Outcome of an axiom sweep. passed() holds exactly when no violation was
// recorded. At most kMaxStored witnesses are retained; total counts them all.
class AxiomReport {
 public:
  static constexpr std::size_t kMaxStored = 32;

  bool passed() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string axiom, std::vector<Elem> witness);
  void merge(const AxiomReport& other);
  bool has(std::string_view axiom) const;

  // One line per stored violation, e.g. "associativity: (1, 2, 2)".
  std::string describe() const;

 private:
  std::vector<Violation> violations_;
  std::size_t total_ = 0;
};

enum class MorphismKind { kWeak, kStrong, kHyperringHom };

std::string_view to_string(MorphismKind kind);

// Reachable (source, target) sum pairs of a morphism check. The morphism is
// rejected iff some reachable pair is (null, non-null); `witness` then lists
// the summands (as source/target element pairs) that reach it.
struct ClosureCertificate {
  std::vector<std::pair<Elem, Elem>> reachable;
  std::optional<std::pair<Elem, Elem>> violating;
  std::vector<std::pair<Elem, Elem>> witness;
  // Set when the map fails a precondition before any closure is run
  // (identities, multiplicativity, units landing in units).
  std::string precondition_failure;

  bool accepted() const { return !violating && precondition_failure.empty(); }
};

// Element map between two carriers. Weak morphisms are defined on units and
// zero only; other entries hold kNoElem.
struct MorphismTable {
  MorphismKind kind = MorphismKind::kHyperringHom;
  std::vector<Elem> map;
  ClosureCertificate certificate;

  bool operator==(const MorphismTable& o) const {
    return kind == o.kind && map == o.map;
  }
};

}  // namespace hyperalg

#endif  // HYPERALG_CORE_H_
