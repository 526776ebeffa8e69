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

#include "hyperalg/hyper.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <tuple>

namespace hyperalg {

FiniteHyperring::FiniteHyperring(HyperTable add, OpTable mul, bool partial,
                                 std::vector<std::string> labels)
    : add_(std::move(add)),
      mul_(std::move(mul)),
      partial_(partial),
      labels_(std::move(labels)) {
  const std::size_t n = add_.size();
  if (n == 0) throw AlgebraError("hyperring carrier is empty");
  if (n > kMaxCarrier) {
    throw CapExceeded("hyperring carrier of size " + std::to_string(n) +
                      " exceeds the cap of " + std::to_string(kMaxCarrier));
  }
  if (mul_.size() != n) throw AlgebraError("addition and multiplication tables differ in size");
  if (!labels_.empty() && labels_.size() != n) {
    throw AlgebraError("label count does not match carrier size");
  }
  const SubsetMask all = SubsetMask::full(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (!add_.at(a, b).subset_of(all)) {
        throw AlgebraError("sum " + std::to_string(a) + "+" + std::to_string(b) +
                           " leaves the carrier");
      }
      if (!partial_ && add_.at(a, b).empty()) {
        throw AlgebraError("sum " + std::to_string(a) + "+" + std::to_string(b) +
                           " is empty in a non-partial hyperring");
      }
      if (mul_.at(a, b) >= n) {
        throw AlgebraError("product " + std::to_string(a) + "*" + std::to_string(b) +
                           " leaves the carrier");
      }
    }
  }
  neg_.assign(n, kNoElem);
  for (Elem a = 0; a < n; ++a) {
    int found = 0;
    for (Elem x = 0; x < n; ++x) {
      if (add_.at(a, x).contains(zero())) {
        neg_[a] = x;
        ++found;
      }
    }
    if (found != 1) neg_[a] = kNoElem;
  }
}

std::string FiniteHyperring::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

SubsetMask FiniteHyperring::units() const {
  SubsetMask out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (mul(a, b) == one()) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

bool FiniteHyperring::has_empty_sum() const {
  return std::any_of(add_.cells().begin(), add_.cells().end(),
                     [](SubsetMask m) { return m.empty(); });
}

// --- groups and rings -------------------------------------------------------

namespace {

void require_abelian_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  if (n == 0) throw AlgebraError("group is empty");
  for (Elem a = 0; a < n; ++a) {
    if (g.mul.at(0, a) != a) throw AlgebraError("group identity must sit at index 0");
    bool has_inverse = false;
    for (Elem b = 0; b < n; ++b) {
      if (g.mul.at(a, b) >= n) throw AlgebraError("group product leaves the carrier");
      if (g.mul.at(a, b) != g.mul.at(b, a)) throw AlgebraError("group is not abelian");
      if (g.mul.at(a, b) == 0) has_inverse = true;
      for (Elem c = 0; c < n; ++c) {
        if (g.mul.at(g.mul.at(a, b), c) != g.mul.at(a, g.mul.at(b, c))) {
          throw AlgebraError("group multiplication is not associative");
        }
      }
    }
    if (!has_inverse) throw AlgebraError("group element without inverse");
  }
}

std::string group_label(const FiniteGroup& g, Elem a) {
  return g.labels.empty() ? "g" + std::to_string(a) : g.labels[a];
}

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string poly_label(std::size_t value, std::size_t p, std::size_t k) {
  if (value == 0) return "0";
  std::vector<std::size_t> digits(k);
  for (std::size_t i = 0; i < k; ++i) {
    digits[i] = value % p;
    value /= p;
  }
  std::string out;
  for (std::size_t i = k; i-- > 0;) {
    if (digits[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(digits[i]);
      continue;
    }
    if (digits[i] != 1) out += std::to_string(digits[i]);
    out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace

FiniteGroup klein_four() {
  FiniteGroup g;
  g.mul = OpTable(4, 0);
  for (Elem a = 0; a < 4; ++a) {
    for (Elem b = 0; b < 4; ++b) g.mul.at(a, b) = a ^ b;
  }
  g.labels = {"1", "a", "b", "c"};
  return g;
}

FiniteGroup cyclic_group(std::size_t order) {
  if (order == 0) throw AlgebraError("cyclic group of order 0");
  FiniteGroup g;
  g.mul = OpTable(order, 0);
  for (Elem a = 0; a < order; ++a) {
    for (Elem b = 0; b < order; ++b) g.mul.at(a, b) = static_cast<Elem>((a + b) % order);
  }
  for (Elem a = 0; a < order; ++a) g.labels.push_back(a == 0 ? "1" : "t^" + std::to_string(a));
  return g;
}

SubsetMask FiniteRing::units() const {
  SubsetMask out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (mul.at(a, b) == one_of(size())) {
        out.insert(a);
        break;
      }
    }
  }
  return out;
}

FiniteRing integers_mod(std::size_t m) {
  if (m < 2 || m > kMaxCarrier) throw AlgebraError("integers_mod: modulus out of range");
  FiniteRing r;
  r.add = OpTable(m, 0);
  r.mul = OpTable(m, 0);
  for (Elem a = 0; a < m; ++a) {
    r.labels.push_back(std::to_string(a));
    for (Elem b = 0; b < m; ++b) {
      r.add.at(a, b) = static_cast<Elem>((a + b) % m);
      r.mul.at(a, b) = static_cast<Elem>((a * b) % m);
    }
  }
  return r;
}

FiniteRing galois_field(std::size_t q) {
  if (q < 2 || q > kMaxCarrier) throw AlgebraError("galois_field: order out of range");
  std::size_t p = 2;
  while (q % p != 0) ++p;
  std::size_t k = 0;
  for (std::size_t rest = q; rest > 1; rest /= p) {
    if (rest % p != 0) throw AlgebraError("galois_field: " + std::to_string(q) + " is not a prime power");
    ++k;
  }
  if (!is_prime(p)) throw AlgebraError("galois_field: bad characteristic");

  auto digits = [&](std::size_t v) {
    std::vector<std::size_t> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = v % p;
      v /= p;
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t v = 0;
    for (std::size_t i = k; i-- > 0;) v = v * p + d[i];
    return v;
  };

  FiniteRing r;
  r.add = OpTable(q, 0);
  for (Elem a = 0; a < q; ++a) {
    for (Elem b = 0; b < q; ++b) {
      auto da = digits(a), db = digits(b);
      for (std::size_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
      r.add.at(a, b) = static_cast<Elem>(encode(da));
    }
  }
  // Try monic moduli x^k + c(x) until the product table has no zero divisors.
  for (std::size_t tail = 0; tail < q; ++tail) {
    const auto modulus = digits(tail);  // coefficients of x^0..x^{k-1}
    OpTable mul(q, 0);
    bool field = true;
    for (Elem a = 0; a < q && field; ++a) {
      for (Elem b = 0; b < q; ++b) {
        auto da = digits(a), db = digits(b);
        std::vector<std::size_t> prod(2 * k, 0);
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        }
        for (std::size_t deg = 2 * k - 1; deg >= k; --deg) {
          const std::size_t c = prod[deg];
          if (c == 0) continue;
          prod[deg] = 0;
          for (std::size_t i = 0; i < k; ++i) {
            prod[deg - k + i] = (prod[deg - k + i] + (p - 1) * c % p * modulus[i]) % p;
          }
        }
        prod.resize(k);
        const Elem v = static_cast<Elem>(encode(prod));
        mul.at(a, b) = v;
        if (a != 0 && b != 0 && v == 0) {
          field = false;
          break;
        }
      }
    }
    if (!field) continue;
    r.mul = std::move(mul);
    for (Elem a = 0; a < q; ++a) r.labels.push_back(k == 1 ? std::to_string(a) : poly_label(a, p, k));
    return r;
  }
  throw AlgebraError("galois_field: no irreducible modulus found");
}

// --- axiom checks -------------------------------------------------------------

AxiomReport check_canonical_hypergroup(const FiniteHyperring& h) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(h.size());
  const Elem z = h.zero();
  for (Elem a = 0; a < n; ++a) {
    if (h.add(a, z) != SubsetMask::singleton(a)) rep.add("identity", {a});
    std::vector<Elem> inverses;
    for (Elem b = 0; b < n; ++b) {
      if (h.add(a, b) != h.add(b, a)) rep.add("commutativity", {a, b});
      if (!h.partial() && h.add(a, b).empty()) rep.add("nonempty", {a, b});
      if (h.add(a, b).contains(z)) inverses.push_back(b);
    }
    if (inverses.size() != 1) {
      inverses.insert(inverses.begin(), a);
      rep.add("inverse", inverses);
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const SubsetMask ab = h.add(a, b);
      for (Elem c = 0; c < n; ++c) {
        const SubsetMask bc = h.add(b, c);
        if (h.partial() && (ab.empty() || bc.empty())) continue;
        const SubsetMask left = h.sum(ab, SubsetMask::singleton(c));
        const SubsetMask right = h.sum(SubsetMask::singleton(a), bc);
        if (left != right) rep.add("associativity", {a, b, c});
      }
    }
  }
  // a in b+c  <=>  c in a+(-b)
  for (Elem b = 0; b < n; ++b) {
    const Elem nb = h.neg(b);
    if (nb == kNoElem) continue;
    for (Elem a = 0; a < n; ++a) {
      for (Elem c = 0; c < n; ++c) {
        if (h.add(b, c).contains(a) != h.add(a, nb).contains(c)) {
          rep.add("reversibility", {a, b, c});
        }
      }
    }
  }
  return rep;
}

AxiomReport check_hyperring(const FiniteHyperring& h) {
  AxiomReport rep = check_canonical_hypergroup(h);
  const Elem n = static_cast<Elem>(h.size());
  const Elem z = h.zero();
  const Elem u = h.one();
  for (Elem a = 0; a < n; ++a) {
    if (h.mul(a, u) != a) rep.add("mul-identity", {a});
    if (h.mul(a, z) != z) rep.add("zero-absorbing", {a});
    for (Elem b = 0; b < n; ++b) {
      if (h.mul(a, b) != h.mul(b, a)) rep.add("mul-commutativity", {a, b});
      for (Elem c = 0; c < n; ++c) {
        if (h.mul(h.mul(a, b), c) != h.mul(a, h.mul(b, c))) {
          rep.add("mul-associativity", {a, b, c});
        }
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (h.partial() && a == z) continue;
    const SubsetMask sa = SubsetMask::singleton(a);
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const SubsetMask left = h.product(sa, h.add(b, c));
        const SubsetMask right = h.add(h.mul(a, b), h.mul(a, c));
        if (left != right) rep.add("distributivity", {a, b, c});
      }
    }
  }
  return rep;
}

AxiomReport check_hyperfield(const FiniteHyperring& h) {
  AxiomReport rep = check_hyperring(h);
  if (h.size() < 2) {
    rep.add("nontrivial", {});
    return rep;
  }
  const SubsetMask units = h.units();
  for (Elem a = 1; a < h.size(); ++a) {
    if (!units.contains(a)) rep.add("mul-inverse", {a});
  }
  return rep;
}

AxiomReport check_doubly_distributive(const FiniteHyperring& h) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(h.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const SubsetMask ab = h.add(a, b);
      for (Elem c = 0; c < n; ++c) {
        for (Elem d = 0; d < n; ++d) {
          const SubsetMask left = h.product(ab, h.add(c, d));
          const std::array<Elem, 4> terms{h.mul(a, c), h.mul(a, d), h.mul(b, c), h.mul(b, d)};
          const SubsetMask right = iterated_hypersum(h.add_table(), terms);
          if (left != right) rep.add("double-distributivity", {a, b, c, d});
        }
      }
    }
  }
  return rep;
}

AxiomReport check_hom(std::span<const Elem> f, const FiniteHyperring& r,
                      const FiniteHyperring& s, bool strict) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(r.size());
  if (f.size() != n) {
    rep.add("domain", {static_cast<Elem>(f.size())});
    return rep;
  }
  for (Elem a = 0; a < n; ++a) {
    if (f[a] >= s.size()) {
      rep.add("codomain", {a});
      return rep;
    }
  }
  if (f[r.zero()] != s.zero()) rep.add("zero", {r.zero()});
  if (f[r.one()] != s.one()) rep.add("one", {r.one()});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (f[r.mul(a, b)] != s.mul(f[a], f[b])) rep.add("multiplicative", {a, b});
      const SubsetMask img = image(f, r.add(a, b));
      const SubsetMask target = s.add(f[a], f[b]);
      if (strict ? img != target : !img.subset_of(target)) {
        rep.add(strict ? "strict-additive" : "additive", {a, b});
      }
    }
  }
  return rep;
}

// --- constructions ------------------------------------------------------------

QuotientResult quotient(const FiniteRing& ring, SubsetMask unit_subgroup) {
  const Elem n = static_cast<Elem>(ring.size());
  const Elem one = one_of(n);
  const SubsetMask units = ring.units();
  if (!unit_subgroup.contains(one)) throw AlgebraError("quotient: subgroup does not contain 1");
  if (!unit_subgroup.subset_of(units)) throw AlgebraError("quotient: subgroup contains non-units");
  for (Elem u : unit_subgroup) {
    for (Elem v : unit_subgroup) {
      if (!unit_subgroup.contains(ring.mul.at(u, v))) {
        throw AlgebraError("quotient: subset is not closed under multiplication");
      }
    }
  }

  // Orbits, with [0] and [1] placed first.
  std::vector<SubsetMask> orbit_of(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem u : unit_subgroup) orbit_of[a].insert(ring.mul.at(a, u));
  }
  std::vector<Elem> reps{0};
  if (n > 1) reps.push_back(one);
  for (Elem a = 0; a < n; ++a) {
    if (orbit_of[a].first() == a && a != 0 && a != one) reps.push_back(a);
  }
  QuotientResult out{FiniteHyperring(HyperTable(1, SubsetMask::singleton(0)), OpTable(1, 0)),
                     std::vector<Elem>(n, kNoElem)};
  for (Elem i = 0; i < reps.size(); ++i) {
    for (Elem a : orbit_of[reps[i]]) out.class_of[a] = i;
  }
  const std::size_t m = reps.size();
  HyperTable add(m, SubsetMask{});
  OpTable mul(m, 0);
  std::vector<std::string> labels;
  for (Elem i = 0; i < m; ++i) {
    labels.push_back("[" + (ring.labels.empty() ? std::to_string(reps[i]) : ring.labels[reps[i]]) + "]");
    for (Elem j = 0; j < m; ++j) {
      SubsetMask classes;
      for (Elem x : orbit_of[reps[i]]) {
        for (Elem y : orbit_of[reps[j]]) classes.insert(out.class_of[ring.add.at(x, y)]);
      }
      add.at(i, j) = classes;
      mul.at(i, j) = out.class_of[ring.mul.at(reps[i], reps[j])];
    }
  }
  out.hyperring = FiniteHyperring(std::move(add), std::move(mul), false, std::move(labels));
  return out;
}

FiniteHyperring as_hyperring(const FiniteRing& ring) {
  const std::size_t n = ring.size();
  HyperTable add(n, SubsetMask{});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) add.at(a, b) = SubsetMask::singleton(ring.add.at(a, b));
  }
  return FiniteHyperring(std::move(add), ring.mul, false, ring.labels);
}

FiniteHyperring krasner() {
  HyperTable add(2, SubsetMask{});
  add.at(0, 0) = SubsetMask::of({0});
  add.at(0, 1) = add.at(1, 0) = SubsetMask::of({1});
  add.at(1, 1) = SubsetMask::of({0, 1});
  OpTable mul(2, std::vector<Elem>{0, 0, 0, 1});
  return FiniteHyperring(std::move(add), std::move(mul), false, {"0", "1"});
}

FiniteHyperring signs() {
  // 0, 1, -1 at indices 0, 1, 2.
  HyperTable add(3, SubsetMask{});
  add.at(0, 0) = SubsetMask::of({0});
  add.at(0, 1) = add.at(1, 0) = add.at(1, 1) = SubsetMask::of({1});
  add.at(0, 2) = add.at(2, 0) = add.at(2, 2) = SubsetMask::of({2});
  add.at(1, 2) = add.at(2, 1) = SubsetMask::of({0, 1, 2});
  OpTable mul(3, std::vector<Elem>{0, 0, 0, 0, 1, 2, 0, 2, 1});
  return FiniteHyperring(std::move(add), std::move(mul), false, {"0", "1", "-1"});
}

FiniteHyperring field_hyperring(std::size_t q) { return as_hyperring(galois_field(q)); }

namespace {

// Sums of the K[S] rule on the nonzero indices 1..m: x+x = {0,x}, x+y = S - {x,y}.
HyperTable krasner_group_sums(std::size_t n, std::size_t m) {
  HyperTable add(n, SubsetMask{});
  SubsetMask nonzero;
  for (Elem i = 1; i <= m; ++i) nonzero.insert(i);
  for (Elem a = 0; a < n; ++a) {
    add.at(a, 0) = add.at(0, a) = SubsetMask::singleton(a);
  }
  for (Elem a = 1; a <= m; ++a) {
    for (Elem b = 1; b <= m; ++b) {
      add.at(a, b) = a == b ? SubsetMask::of({0, a})
                            : nonzero - SubsetMask::of({a, b});
    }
  }
  return add;
}

}  // namespace

FiniteHyperring kh(const FiniteGroup& h) {
  require_abelian_group(h);
  const std::size_t m = h.order();
  if (m < 4) throw AlgebraError("K[H] needs a group of order at least 4");
  const std::size_t n = m + 1;
  OpTable mul(n, 0);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) mul.at(a + 1, b + 1) = h.mul.at(a, b) + 1;
  }
  std::vector<std::string> labels{"0"};
  for (Elem a = 0; a < m; ++a) labels.push_back(group_label(h, a));
  return FiniteHyperring(krasner_group_sums(n, m), std::move(mul), false, std::move(labels));
}

FiniteHyperring kh_ef(const FiniteGroup& h) {
  require_abelian_group(h);
  const std::size_t m = h.order();
  if (m < 4) throw AlgebraError("K[H] u {e,f} needs a group of order at least 4");
  const std::size_t n = m + 3;
  const Elem e = static_cast<Elem>(m + 1);
  const Elem f = static_cast<Elem>(m + 2);
  OpTable mul(n, 0);
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) mul.at(a + 1, b + 1) = h.mul.at(a, b) + 1;
    mul.at(a + 1, e) = mul.at(e, a + 1) = e;
    mul.at(a + 1, f) = mul.at(f, a + 1) = f;
  }
  mul.at(e, e) = e;
  mul.at(f, f) = f;
  mul.at(e, f) = mul.at(f, e) = 0;
  std::vector<std::string> labels{"0"};
  for (Elem a = 0; a < m; ++a) labels.push_back(group_label(h, a));
  labels.push_back("e");
  labels.push_back("f");
  // The presentation fixes every sum over H u {e,f}; the identity axiom fixes
  // the sums with 0. Whatever the axioms then reject is an inconsistency.
  FiniteHyperring out(krasner_group_sums(n, m + 2), std::move(mul), false, std::move(labels));
  if (const AxiomReport rep = check_hyperring(out); !rep.passed()) {
    throw AlgebraError("K[H] u {e,f} presentation is inconsistent:\n" + rep.describe());
  }
  return out;
}

FiniteHyperring builtin_hyperring(std::string_view name) {
  auto number_after = [&](std::string_view prefix) -> std::optional<std::size_t> {
    if (!name.starts_with(prefix)) return std::nullopt;
    std::size_t v = 0;
    const auto rest = name.substr(prefix.size());
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr != rest.data() + rest.size()) return std::nullopt;
    return v;
  };
  if (name == "krasner") return krasner();
  if (name == "signs") return signs();
  if (name == "kh-v4") return kh(klein_four());
  if (name == "khef-v4") return kh_ef(klein_four());
  if (auto q = number_after("gf")) return field_hyperring(*q);
  if (auto m = number_after("kh-c")) return kh(cyclic_group(*m));
  if (auto m = number_after("khef-c")) return kh_ef(cyclic_group(*m));
  throw AlgebraError("unknown builtin hyperring '" + std::string(name) + "'");
}

std::vector<std::string> builtin_hyperring_names() {
  return {"krasner", "signs", "gf2", "gf3", "gf4", "gf5", "gf7", "gf8", "gf9", "kh-v4", "khef-v4", "kh-c5"};
}

// --- morphism search ----------------------------------------------------------

std::vector<MorphismTable> enumerate_homs(const FiniteHyperring& r,
                                          const FiniteHyperring& s, bool strict) {
  if (r.size() > kHomSearchCap || s.size() > kHomSearchCap) {
    throw CapExceeded("enumerate_homs: carriers are capped at " + std::to_string(kHomSearchCap));
  }
  const Elem n = static_cast<Elem>(r.size());
  std::vector<MorphismTable> out;
  std::vector<Elem> f(n, kNoElem);
  f[r.zero()] = s.zero();
  if (f[r.one()] != kNoElem && f[r.one()] != s.one()) return out;  // 0 = 1 in r only
  f[r.one()] = s.one();

  auto assigned = [&](SubsetMask m) {
    for (Elem x : m) {
      if (f[x] == kNoElem) return false;
    }
    return true;
  };
  // Checks every relation whose elements are all assigned and which mentions k.
  auto consistent = [&](Elem k) {
    for (Elem a = 0; a < n; ++a) {
      if (f[a] == kNoElem) continue;
      for (Elem b = 0; b < n; ++b) {
        if (f[b] == kNoElem) continue;
        const Elem ab = r.mul(a, b);
        const bool mentions = a == k || b == k || ab == k || r.add(a, b).contains(k);
        if (!mentions) continue;
        if (f[ab] != kNoElem && f[ab] != s.mul(f[a], f[b])) return false;
        if (assigned(r.add(a, b))) {
          const SubsetMask img = image(f, r.add(a, b));
          const SubsetMask target = s.add(f[a], f[b]);
          if (strict ? img != target : !img.subset_of(target)) return false;
        }
      }
    }
    return true;
  };

  std::function<void(Elem)> go = [&](Elem k) {
    if (k == n) {
      if (check_hom(f, r, s, strict).passed()) {
        out.push_back({MorphismKind::kHyperringHom, f, {}});
      }
      return;
    }
    if (f[k] != kNoElem) {
      if (consistent(k)) go(k + 1);
      return;
    }
    for (Elem v = 0; v < s.size(); ++v) {
      f[k] = v;
      if (consistent(k)) go(k + 1);
    }
    f[k] = kNoElem;
  };
  if (consistent(r.zero()) && consistent(r.one())) go(0);
  std::sort(out.begin(), out.end(),
            [](const MorphismTable& a, const MorphismTable& b) { return a.map < b.map; });
  return out;
}

namespace {

struct ElementSignature {
  bool unit;
  int order;  // steps until the power sequence repeats
  int double_size;
  int triple_size;
  bool self_inverse;
  auto operator<=>(const ElementSignature&) const = default;
};

std::vector<ElementSignature> signatures(const FiniteHyperring& h) {
  const SubsetMask units = h.units();
  std::vector<ElementSignature> out;
  for (Elem a = 0; a < h.size(); ++a) {
    std::vector<Elem> seen{a};
    Elem p = a;
    while (true) {
      p = h.mul(p, a);
      if (std::find(seen.begin(), seen.end(), p) != seen.end()) break;
      seen.push_back(p);
    }
    const SubsetMask aa = h.add(a, a);
    out.push_back({units.contains(a), static_cast<int>(seen.size()), aa.size(),
                   h.sum(aa, SubsetMask::singleton(a)).size(), h.neg(a) == a});
  }
  return out;
}

}  // namespace

std::optional<std::vector<Elem>> iso_hyper(const FiniteHyperring& r,
                                           const FiniteHyperring& s) {
  if (r.size() != s.size() || r.partial() != s.partial()) return std::nullopt;
  const Elem n = static_cast<Elem>(r.size());
  const auto sig_r = signatures(r);
  const auto sig_s = signatures(s);
  std::vector<Elem> f(n, kNoElem);
  std::vector<bool> used(n, false);
  f[r.zero()] = s.zero();
  used[s.zero()] = true;
  if (n > 1) {
    f[r.one()] = s.one();
    used[s.one()] = true;
  }
  for (Elem a = 0; a < n; ++a) {
    if (f[a] != kNoElem && sig_r[a] != sig_s[f[a]]) return std::nullopt;
  }
  auto assigned = [&](SubsetMask m) {
    for (Elem x : m) {
      if (f[x] == kNoElem) return false;
    }
    return true;
  };
  auto consistent = [&](Elem k) {
    for (Elem a = 0; a < n; ++a) {
      if (f[a] == kNoElem) continue;
      for (Elem b = 0; b < n; ++b) {
        if (f[b] == kNoElem) continue;
        if (a != k && b != k && r.mul(a, b) != k && !r.add(a, b).contains(k)) continue;
        const Elem ab = r.mul(a, b);
        if (f[ab] != kNoElem && f[ab] != s.mul(f[a], f[b])) return false;
        if (assigned(r.add(a, b)) && image(f, r.add(a, b)) != s.add(f[a], f[b])) return false;
      }
    }
    return true;
  };
  std::function<bool(Elem)> go = [&](Elem k) -> bool {
    if (k == n) return check_hom(f, r, s, true).passed();
    if (f[k] != kNoElem) return consistent(k) && go(k + 1);
    for (Elem v = 0; v < n; ++v) {
      if (used[v] || sig_r[k] != sig_s[v]) continue;
      f[k] = v;
      used[v] = true;
      if (consistent(k) && go(k + 1)) return true;
      used[v] = false;
    }
    f[k] = kNoElem;
    return false;
  };
  if (go(0)) return f;
  return std::nullopt;
}

}  // namespace hyperalg
