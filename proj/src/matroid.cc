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

#include "hyperalg/matroid.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <thread>

#include "hyperalg/ddhyper.h"
#include "hyperalg/functors.h"

namespace hyperalg {

std::vector<std::uint64_t> r_subsets(std::size_t n, std::size_t r) {
  std::vector<std::uint64_t> out;
  if (r > n) return out;
  // Lexicographic order of increasing tuples: compare the smallest elements
  // first, i.e. bit-reversed numeric order.
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == r) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](std::uint64_t a, std::uint64_t b) {
    while (a && b) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return out;
}

namespace {

void check_shape(std::size_t n, std::size_t r) {
  if (n == 0 || n > kMaxGroundSet || r == 0 || r > kMaxGPRank || r > n) {
    throw CapExceeded("GP functions need 1 <= r <= min(n, " + std::to_string(kMaxGPRank) +
                      ") and n <= " + std::to_string(kMaxGroundSet));
  }
}

// Slot of a tuple after sorting it, and the parity of the sorting
// permutation; slot is kNoElem when an entry repeats.
std::pair<Elem, unsigned> locate(std::span<const std::size_t> tuple,
                                 const std::map<std::uint64_t, Elem>& slot_of) {
  std::uint64_t mask = 0;
  unsigned inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if ((mask >> tuple[i]) & 1U) return {kNoElem, 0};
    mask |= std::uint64_t{1} << tuple[i];
    for (std::size_t j = i + 1; j < tuple.size(); ++j) inversions += tuple[i] > tuple[j] ? 1 : 0;
  }
  return {slot_of.at(mask), inversions & 1U};
}

struct Term {
  Elem a;           // slot of x with x_k removed
  Elem b;           // slot of (x_k, y)
  unsigned parity;  // exponent of the sign element, mod 2
};

struct Relation {
  std::uint64_t x;
  std::uint64_t y;
  std::vector<Term> terms;
  Elem last_slot = 0;
};

// Every GP relation on n points of rank r, with the zero terms dropped.
// Term k (1-based) carries sign^k times the sign of sorting (x_k, y).
std::vector<Relation> relations(std::size_t n, std::size_t r) {
  const auto slots = r_subsets(n, r);
  std::map<std::uint64_t, Elem> slot_of;
  for (Elem i = 0; i < slots.size(); ++i) slot_of[slots[i]] = i;
  std::vector<Relation> out;
  for (std::uint64_t x : r_subsets(n, r + 1)) {
    const std::vector<Elem> xs = SubsetMask(x).elements();
    for (std::uint64_t y : r_subsets(n, r - 1)) {
      Relation rel{x, y, {}, 0};
      const std::vector<Elem> ys = SubsetMask(y).elements();
      for (std::size_t k = 0; k < xs.size(); ++k) {
        std::vector<std::size_t> tuple{xs[k]};
        tuple.insert(tuple.end(), ys.begin(), ys.end());
        const auto [b, parity] = locate(tuple, slot_of);
        if (b == kNoElem) continue;
        const Elem a = slot_of.at(x & ~(std::uint64_t{1} << xs[k]));
        rel.terms.push_back({a, b, static_cast<unsigned>((k + 1 + parity) & 1U)});
        rel.last_slot = std::max({rel.last_slot, a, b});
      }
      if (!rel.terms.empty()) out.push_back(std::move(rel));
    }
  }
  return out;
}

// Coefficient-independent view used by the checker and the enumerator.
struct Coefficient {
  std::vector<Elem> choices;  // zero then the units
  const OpTable* mul;
  Elem one;
  Elem sign;
  std::function<bool(std::span<const Elem>)> vanishes;
};

Coefficient hyper_coefficient(const FiniteHyperring& f) {
  Coefficient c;
  c.choices.push_back(f.zero());
  for (Elem u : f.units()) c.choices.push_back(u);
  c.mul = &f.mul_table();
  c.one = f.one();
  c.sign = f.neg(f.one());
  if (c.sign == kNoElem) throw AlgebraError("coefficient hyperfield has no -1");
  c.vanishes = [&f](std::span<const Elem> terms) {
    SubsetMask acc = SubsetMask::singleton(f.zero());
    for (Elem t : terms) acc = f.sum(acc, SubsetMask::singleton(t));
    return acc.contains(f.zero());
  };
  return c;
}

Coefficient fuzzy_coefficient(const FiniteFuzzyRing& k) {
  Coefficient c;
  c.choices.push_back(k.zero());
  for (Elem u : k.units()) c.choices.push_back(u);
  c.mul = &k.mul_table();
  c.one = k.one();
  c.sign = k.epsilon();
  c.vanishes = [&k](std::span<const Elem> terms) {
    Elem acc = k.zero();
    for (Elem t : terms) acc = k.add(acc, t);
    return k.is_null(acc);
  };
  return c;
}

bool relation_holds(const Relation& rel, std::span<const Elem> values, const Coefficient& c,
                    std::vector<Elem>& scratch) {
  scratch.clear();
  for (const Term& t : rel.terms) {
    Elem v = c.mul->at(values[t.a], values[t.b]);
    if (t.parity) v = c.mul->at(c.sign, v);
    scratch.push_back(v);
  }
  return c.vanishes(scratch);
}

AxiomReport verify(const GPFunction& phi, const Coefficient& c, const char* prefix) {
  AxiomReport rep;
  const std::string p(prefix);
  check_shape(phi.n, phi.r);
  if (phi.values.size() != r_subsets(phi.n, phi.r).size()) {
    rep.add(p + "0 shape", {static_cast<Elem>(phi.values.size())});
    return rep;
  }
  for (Elem i = 0; i < phi.values.size(); ++i) {
    if (std::find(c.choices.begin(), c.choices.end(), phi.values[i]) == c.choices.end()) {
      rep.add(p + "0 value", {i});
    }
  }
  if (!rep.passed()) return rep;
  if (std::all_of(phi.values.begin(), phi.values.end(), [&](Elem v) { return v == c.choices[0]; })) {
    rep.add(p + "1", {});
  }
  std::vector<Elem> scratch;
  for (const Relation& rel : relations(phi.n, phi.r)) {
    if (!relation_holds(rel, phi.values, c, scratch)) {
      rep.add(p + "3", {static_cast<Elem>(rel.x), static_cast<Elem>(rel.y)});
    }
  }
  return rep;
}

std::vector<GPFunction> enumerate(const Coefficient& c, std::size_t n, std::size_t r,
                                  const GPEnumConfig& cfg) {
  check_shape(n, r);
  const std::size_t slots = r_subsets(n, r).size();
  const auto rels = relations(n, r);
  std::vector<std::vector<const Relation*>> closing(slots);
  for (const Relation& rel : rels) closing[rel.last_slot].push_back(&rel);
  const Elem zero = c.choices[0];

  // Prefixes of a fixed depth are split across workers; each worker runs the
  // same DFS below its prefixes, so the union does not depend on `jobs`.
  const unsigned jobs = std::max(1U, cfg.jobs);
  const std::size_t depth = std::min<std::size_t>(slots, jobs > 1 ? 2 : 0);

  auto extend_ok = [&](std::vector<Elem>& vals, std::size_t s, std::vector<Elem>& scratch) {
    for (const Relation* rel : closing[s]) {
      if (!relation_holds(*rel, vals, c, scratch)) return false;
    }
    return true;
  };

  auto run = [&](const std::vector<std::vector<Elem>>& prefixes, std::vector<GPFunction>& out) {
    std::vector<Elem> vals(slots, zero);
    std::vector<Elem> scratch;
    std::function<void(std::size_t, bool)> dfs = [&](std::size_t s, bool seen_nonzero) {
      if (s == slots) {
        if (seen_nonzero) out.push_back({n, r, vals});
        return;
      }
      for (Elem v : c.choices) {
        // Normalized: the first nonzero slot is 1.
        if (cfg.normalize && !seen_nonzero && v != zero && v != c.one) continue;
        vals[s] = v;
        if (extend_ok(vals, s, scratch)) dfs(s + 1, seen_nonzero || v != zero);
      }
      vals[s] = zero;
    };
    for (const auto& prefix : prefixes) {
      bool nonzero = false;
      bool ok = true;
      for (std::size_t s = 0; s < prefix.size() && ok; ++s) {
        if (cfg.normalize && !nonzero && prefix[s] != zero && prefix[s] != c.one) ok = false;
        vals[s] = prefix[s];
        ok = ok && extend_ok(vals, s, scratch);
        nonzero = nonzero || prefix[s] != zero;
      }
      if (ok) dfs(prefix.size(), nonzero);
      std::fill(vals.begin(), vals.end(), zero);
    }
  };

  std::vector<std::vector<Elem>> prefixes{{}};
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<std::vector<Elem>> next;
    for (const auto& p : prefixes) {
      for (Elem v : c.choices) {
        next.push_back(p);
        next.back().push_back(v);
      }
    }
    prefixes = std::move(next);
  }
  std::vector<std::vector<std::vector<Elem>>> share(jobs);
  for (std::size_t i = 0; i < prefixes.size(); ++i) share[i % jobs].push_back(prefixes[i]);
  std::vector<std::vector<GPFunction>> found(jobs);
  if (jobs == 1) {
    run(share[0], found[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) workers.emplace_back([&, j] { run(share[j], found[j]); });
    for (auto& w : workers) w.join();
  }
  std::vector<GPFunction> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Elem gp_value(const GPFunction& phi, std::span<const std::size_t> tuple, const OpTable& mul,
              Elem sign) {
  const auto slots = r_subsets(phi.n, phi.r);
  std::map<std::uint64_t, Elem> slot_of;
  for (Elem i = 0; i < slots.size(); ++i) slot_of[slots[i]] = i;
  if (tuple.size() != phi.r) throw AlgebraError("tuple length differs from the rank");
  const auto [slot, parity] = locate(tuple, slot_of);
  if (slot == kNoElem) return 0;
  return parity ? mul.at(sign, phi.values[slot]) : phi.values[slot];
}

AxiomReport verify_gp_hyper(const GPFunction& phi, const FiniteHyperring& f) {
  return verify(phi, hyper_coefficient(f), "GPH");
}

AxiomReport verify_gp_fuzzy(const GPFunction& phi, const FiniteFuzzyRing& k) {
  return verify(phi, fuzzy_coefficient(k), "GPF");
}

std::vector<GPFunction> enumerate_gp(const FiniteHyperring& f, std::size_t n, std::size_t r,
                                     const GPEnumConfig& cfg) {
  auto out = enumerate(hyper_coefficient(f), n, r, cfg);
  for (const auto& phi : out) {
    if (!verify_gp_hyper(phi, f).passed()) throw AlgebraError("enumerator produced an invalid function");
  }
  return out;
}

std::vector<GPFunction> enumerate_gp(const FiniteFuzzyRing& k, std::size_t n, std::size_t r,
                                     const GPEnumConfig& cfg) {
  auto out = enumerate(fuzzy_coefficient(k), n, r, cfg);
  for (const auto& phi : out) {
    if (!verify_gp_fuzzy(phi, k).passed()) throw AlgebraError("enumerator produced an invalid function");
  }
  return out;
}

GPFunction pushforward_gp(const GPFunction& phi, std::span<const Elem> f) {
  GPFunction out = phi;
  for (Elem& v : out.values) v = f[v];
  return out;
}

GPFunction scale_gp(const GPFunction& phi, Elem unit, const OpTable& mul) {
  GPFunction out = phi;
  for (Elem& v : out.values) v = mul.at(unit, v);
  return out;
}

OneToOneReport cross_check_onetoone(const GPFunction& phi, const FiniteHyperring& f) {
  OneToOneReport rep;
  rep.hyper = verify_gp_hyper(phi, f).passed();
  // Singletons sit at the element's own index in F(F), so transport is the
  // identity on values.
  const PowersetFuzzyRing full = F_obj(f);
  rep.fuzzy = verify_gp_fuzzy(phi, full.fuzzy()).passed();
  if (check_doubly_distributive(f).passed()) {
    const ReducedFuzzyRing red = Fbar(f, true);
    GPFunction moved = phi;
    for (Elem& v : moved.values) v = red.closure.index_of(SubsetMask::singleton(v));
    rep.reduced = verify_gp_fuzzy(moved, red.fuzzy).passed();
  }
  return rep;
}

OneToOneGReport cross_check_onetoone_G(const GPFunction& phi, const FiniteFuzzyRing& k) {
  OneToOneGReport rep;
  rep.fuzzy = verify_gp_fuzzy(phi, k).passed();
  const GResult g = G_obj(k);
  GPFunction moved = phi;
  for (Elem& v : moved.values) {
    v = g.position.at(v);
    if (v == kNoElem) throw AlgebraError("GP value is neither zero nor a unit");
  }
  rep.hyper = verify_gp_hyper(moved, g.hyperring).passed();
  return rep;
}

BasisFamily underlying_matroid(const GPFunction& phi) {
  const auto slots = r_subsets(phi.n, phi.r);
  BasisFamily out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (phi.values[i] != 0) out.push_back(slots[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool satisfies_basis_exchange(const BasisFamily& family) {
  if (family.empty()) return false;
  for (std::uint64_t b1 : family) {
    for (std::uint64_t b2 : family) {
      for (std::uint64_t rest = b1 & ~b2; rest; rest &= rest - 1) {
        const std::uint64_t x = rest & -rest;
        bool found = false;
        for (std::uint64_t cand = b2 & ~b1; cand && !found; cand &= cand - 1) {
          const std::uint64_t y = cand & -cand;
          found = std::binary_search(family.begin(), family.end(), (b1 & ~x) | y);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

std::vector<BasisFamily> basis_exchange_oracle(std::size_t n, std::size_t r) {
  if (n > kMaxGroundSet || r > n) throw CapExceeded("basis oracle needs r <= n <= 6");
  auto slots = r_subsets(n, r);
  std::sort(slots.begin(), slots.end());
  if (slots.size() > 24) throw CapExceeded("basis oracle: too many r-subsets");
  std::vector<BasisFamily> out;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << slots.size()); ++pick) {
    BasisFamily fam;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((pick >> i) & 1U) fam.push_back(slots[i]);
    }
    if (satisfies_basis_exchange(fam)) out.push_back(std::move(fam));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hyperalg
