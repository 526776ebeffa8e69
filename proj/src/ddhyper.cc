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

#include "hyperalg/ddhyper.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <string>

namespace hyperalg {

namespace {

std::string mask_label(const FiniteHyperring& base, SubsetMask m) {
  if (m.empty()) return "{}";
  if (m.is_singleton()) return base.label(m.first());
  std::string out = "{";
  bool first = true;
  for (Elem x : m) {
    if (!first) out += ",";
    out += base.label(x);
    first = false;
  }
  return out + "}";
}

// Singletons first (in base order), then the rest by bit pattern, with the
// empty set, if present, last.
bool closure_order(SubsetMask a, SubsetMask b) {
  auto rank = [](SubsetMask m) { return m.empty() ? 2 : (m.is_singleton() ? 0 : 1); };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  return a.bits() < b.bits();
}

}  // namespace

SumClosure closure_S(const FiniteHyperring& f) {
  const Elem n = static_cast<Elem>(f.size());
  std::set<std::uint64_t> seen;
  std::deque<SubsetMask> frontier;
  for (Elem a = 0; a < n; ++a) {
    seen.insert(SubsetMask::singleton(a).bits());
    frontier.push_back(SubsetMask::singleton(a));
  }
  while (!frontier.empty()) {
    const SubsetMask x = frontier.front();
    frontier.pop_front();
    for (Elem a = 0; a < n; ++a) {
      const SubsetMask y = f.sum(x, SubsetMask::singleton(a));
      if (seen.insert(y.bits()).second) frontier.push_back(y);
    }
  }
  SumClosure out;
  for (std::uint64_t bits : seen) out.family.emplace_back(bits);
  std::sort(out.family.begin(), out.family.end(), closure_order);
  for (Elem i = 0; i < out.family.size(); ++i) out.index.emplace(out.family[i].bits(), i);
  return out;
}

std::optional<std::vector<Elem>> sum_decomposition(const FiniteHyperring& f, SubsetMask target) {
  const Elem n = static_cast<Elem>(f.size());
  // BFS over partial sums; parent links recover a shortest summand list.
  std::map<std::uint64_t, std::pair<std::uint64_t, Elem>> parent;
  std::deque<SubsetMask> queue;
  constexpr std::uint64_t kRoot = ~std::uint64_t{0};
  for (Elem a = 0; a < n; ++a) {
    const SubsetMask s = SubsetMask::singleton(a);
    if (parent.emplace(s.bits(), std::pair{kRoot, a}).second) queue.push_back(s);
  }
  while (!queue.empty() && !parent.contains(target.bits())) {
    const SubsetMask x = queue.front();
    queue.pop_front();
    for (Elem a = 0; a < n; ++a) {
      const SubsetMask y = f.sum(x, SubsetMask::singleton(a));
      if (parent.emplace(y.bits(), std::pair{x.bits(), a}).second) queue.push_back(y);
    }
  }
  auto it = parent.find(target.bits());
  if (it == parent.end()) return std::nullopt;
  std::vector<Elem> terms;
  for (std::uint64_t cur = target.bits(); cur != kRoot;) {
    const auto& [prev, a] = parent.at(cur);
    terms.push_back(a);
    cur = prev;
  }
  std::reverse(terms.begin(), terms.end());
  return terms;
}

ReducedFuzzyRing Fbar(const FiniteHyperring& f, bool require_dd) {
  if (require_dd) {
    const AxiomReport dd = check_doubly_distributive(f);
    if (!dd.passed()) {
      const auto& w = dd.violations().front().witness;
      std::ostringstream msg;
      msg << "Fbar: not doubly distributive at (" << f.label(w[0]) << ", " << f.label(w[1])
          << ", " << f.label(w[2]) << ", " << f.label(w[3]) << ")";
      throw AlgebraError(msg.str());
    }
  }
  SumClosure cl = closure_S(f);
  const Elem m = static_cast<Elem>(cl.size());
  OpTable add(m, 0);
  OpTable mul(m, 0);
  std::vector<bool> k0(m);
  std::vector<std::string> labels;
  for (Elem i = 0; i < m; ++i) {
    k0[i] = cl.family[i].contains(f.zero());
    labels.push_back(mask_label(f, cl.family[i]));
    for (Elem j = 0; j < m; ++j) {
      const SubsetMask s = f.sum(cl.family[i], cl.family[j]);
      const SubsetMask p = f.product(cl.family[i], cl.family[j]);
      add.at(i, j) = cl.index_of(s);
      mul.at(i, j) = cl.index_of(p);
      // Sums stay inside S(F) by associativity; products need not.
      if (add.at(i, j) == kNoElem) throw AlgebraError("Fbar: sum " + mask_label(f, s) + " not in S(F)");
      if (mul.at(i, j) == kNoElem) {
        throw AlgebraError("Fbar: product " + labels[i] + " * " + mask_label(f, cl.family[j]) +
                           " = " + mask_label(f, p) + " is not an iterated sum");
      }
    }
  }
  std::optional<Elem> eps;
  if (f.neg(f.one()) != kNoElem) eps = f.neg(f.one());
  FiniteFuzzyRing fuzzy(std::move(add), std::move(mul), std::move(k0), eps, std::move(labels));
  return {std::move(cl), std::move(fuzzy)};
}

std::vector<Elem> fbar_inclusion(const ReducedFuzzyRing& red, const PowersetFuzzyRing& full) {
  std::vector<Elem> out;
  out.reserve(red.closure.size());
  for (SubsetMask m : red.closure.family) out.push_back(full.index_of(m));
  return out;
}

AxiomReport check_mul_closure(const FiniteHyperring& f) {
  AxiomReport rep;
  const SumClosure cl = closure_S(f);
  for (Elem i = 0; i < cl.size(); ++i) {
    for (Elem j = i; j < cl.size(); ++j) {
      if (cl.index_of(f.product(cl.family[i], cl.family[j])) == kNoElem) {
        rep.add("mul-closure", {i, j});
      }
    }
  }
  return rep;
}

AxiomReport check_condicondi(const FiniteHyperring& f) {
  AxiomReport rep;
  const SumClosure cl = closure_S(f);
  for (Elem i = 0; i < cl.size(); ++i) {
    for (Elem j = i; j < cl.size(); ++j) {
      const SubsetMask p = f.product(cl.family[i], cl.family[j]);
      const auto terms = p.empty() ? std::nullopt : sum_decomposition(f, p);
      if (!terms || iterated_hypersum(f.add_table(), *terms) != p) rep.add("condicondi", {i, j});
    }
  }
  return rep;
}

std::vector<Elem> induced_closure_map(std::span<const Elem> f, const SumClosure& src,
                                      const SumClosure& dst) {
  std::vector<Elem> out;
  out.reserve(src.size());
  for (SubsetMask m : src.family) out.push_back(dst.index_of(image(f, m)));
  return out;
}

// --- triangle hyperfield ------------------------------------------------------------

std::string RationalInterval::to_string() const {
  auto fmt = [](Rational r) {
    std::string s = std::to_string(r.numerator());
    if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
    return s;
  };
  return "[" + fmt(lo) + "," + fmt(hi) + "]";
}

RationalInterval triangle_sum(const RationalInterval& a, const RationalInterval& b) {
  // |x - y| reaches 0 iff the intervals meet; otherwise the gap between them.
  Rational lo = 0;
  if (a.hi < b.lo) lo = b.lo - a.hi;
  if (b.hi < a.lo) lo = a.lo - b.hi;
  return {lo, a.hi + b.hi};
}

RationalInterval interval_product(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo * b.lo, a.hi * b.hi};
}

TriangleReport triangle_counterexample() {
  TriangleReport r;
  using RI = RationalInterval;
  r.two_plus_three = triangle_sum(RI::point(2), RI::point(3));
  r.square = interval_product(r.two_plus_three, r.two_plus_three);
  r.expanded = triangle_sum(triangle_sum(triangle_sum(RI::point(4), RI::point(6)), RI::point(6)),
                            RI::point(9));
  r.equal = r.square == r.expanded;
  return r;
}

// --- partial demifields ---------------------------------------------------------------

PartialDemifield F1(const FiniteHyperring& f) {
  ReducedFuzzyRing red = Fbar(f, true);
  std::vector<Elem> emb(f.size());
  for (Elem a = 0; a < f.size(); ++a) emb[a] = red.closure.index_of(SubsetMask::singleton(a));
  return {f, red.fuzzy.add_table(), red.fuzzy.mul_table(), std::move(emb),
          std::move(red.closure.family)};
}

AxiomReport check_partial_demifield(const PartialDemifield& p) {
  AxiomReport rep;
  const Elem m = static_cast<Elem>(p.size());
  const FiniteHyperring& f = p.hyperfield;
  const Elem n = static_cast<Elem>(f.size());
  if (p.mul.size() != m || p.embedding.size() != n) {
    rep.add("shape", {m, static_cast<Elem>(p.embedding.size())});
    return rep;
  }
  const Elem z = p.embedding[f.zero()];
  const Elem o = p.embedding[f.one()];
  for (Elem a = 0; a < m; ++a) {
    if (p.add.at(a, z) != a) rep.add("add-identity", {a});
    if (p.mul.at(a, o) != a) rep.add("mul-identity", {a});
    if (p.mul.at(a, z) != z) rep.add("zero-absorbing", {a});
    for (Elem b = 0; b < m; ++b) {
      if (p.add.at(a, b) != p.add.at(b, a)) rep.add("add-commutativity", {a, b});
      if (p.mul.at(a, b) != p.mul.at(b, a)) rep.add("mul-commutativity", {a, b});
      for (Elem c = 0; c < m; ++c) {
        if (p.add.at(p.add.at(a, b), c) != p.add.at(a, p.add.at(b, c))) {
          rep.add("add-associativity", {a, b, c});
        }
        if (p.mul.at(p.mul.at(a, b), c) != p.mul.at(a, p.mul.at(b, c))) {
          rep.add("mul-associativity", {a, b, c});
        }
        if (p.mul.at(a, p.add.at(b, c)) != p.add.at(p.mul.at(a, b), p.mul.at(a, c))) {
          rep.add("distributivity", {a, b, c});
        }
      }
    }
  }

  std::vector<Elem> back(m, kNoElem);
  for (Elem a = 0; a < n; ++a) {
    if (p.embedding[a] >= m) {
      rep.add("embedding-range", {a});
      return rep;
    }
    if (back[p.embedding[a]] != kNoElem) rep.add("embedding-injective", {back[p.embedding[a]], a});
    back[p.embedding[a]] = a;
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (p.mul.at(p.embedding[a], p.embedding[b]) != p.embedding[f.mul(a, b)]) {
        rep.add("submonoid", {a, b});
      }
      const Elem s = p.add.at(p.embedding[a], p.embedding[b]);
      if (back[s] != kNoElem && !f.add(a, b).contains(back[s])) rep.add("compatibility", {a, b});
    }
  }

  // Generation: the subsemiring spanned by F is everything.
  std::vector<bool> in(m, false);
  std::vector<Elem> members;
  for (Elem a = 0; a < n; ++a) {
    if (!in[p.embedding[a]]) {
      in[p.embedding[a]] = true;
      members.push_back(p.embedding[a]);
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (Elem s : {p.add.at(members[i], members[j]), p.mul.at(members[i], members[j])}) {
        if (!in[s]) {
          in[s] = true;
          members.push_back(s);
        }
      }
    }
  }
  for (Elem a = 0; a < m; ++a) {
    if (!in[a]) rep.add("generation", {a});
  }
  return rep;
}

AxiomReport check_addsame(const PartialDemifield& p) {
  AxiomReport rep;
  const FiniteHyperring& f = p.hyperfield;
  const Elem n = static_cast<Elem>(f.size());
  // Reachable (F-sum, S-sum) pairs. Each step appends one summand to both
  // sides, so this covers every length.
  std::set<std::pair<std::uint64_t, Elem>> seen;
  std::deque<std::pair<SubsetMask, Elem>> queue;
  for (Elem a = 0; a < n; ++a) {
    if (seen.emplace(SubsetMask::singleton(a).bits(), p.embedding[a]).second) {
      queue.emplace_back(SubsetMask::singleton(a), p.embedding[a]);
    }
  }
  while (!queue.empty()) {
    const auto [x, s] = queue.front();
    queue.pop_front();
    for (Elem a = 0; a < n; ++a) {
      const SubsetMask y = f.sum(x, SubsetMask::singleton(a));
      const Elem t = p.add.at(s, p.embedding[a]);
      if (seen.emplace(y.bits(), t).second) queue.emplace_back(y, t);
    }
  }
  std::map<std::uint64_t, Elem> forward;
  std::map<Elem, std::uint64_t> backward;
  for (const auto& [bits, s] : seen) {
    auto [fit, fnew] = forward.emplace(bits, s);
    if (!fnew && fit->second != s) rep.add("addsame-functional", {fit->second, s});
    auto [bit, bnew] = backward.emplace(s, bits);
    if (!bnew && bit->second != bits) rep.add("addsame-injective", {s});
    if (!p.subsets.empty() && p.subsets.at(s).bits() != bits) rep.add("addsame-subset", {s});
  }
  return rep;
}

FiniteFuzzyRing F2(const PartialDemifield& p) {
  const AxiomReport rep = check_addsame(p);
  if (!rep.passed()) throw AlgebraError("F2: partial demifield fails addsame: " + rep.describe());
  return Fbar(p.hyperfield, true).fuzzy;
}

AxiomReport check_demifield_morphism(std::span<const Elem> f, const PartialDemifield& p,
                                     const PartialDemifield& q) {
  AxiomReport rep;
  const Elem m = static_cast<Elem>(p.size());
  if (f.size() != m) {
    rep.add("domain", {static_cast<Elem>(f.size())});
    return rep;
  }
  for (Elem a = 0; a < m; ++a) {
    if (f[a] >= q.size()) {
      rep.add("codomain", {a});
      return rep;
    }
  }
  for (Elem a = 0; a < m; ++a) {
    for (Elem b = 0; b < m; ++b) {
      if (f[p.add.at(a, b)] != q.add.at(f[a], f[b])) rep.add("semiring-additive", {a, b});
      if (f[p.mul.at(a, b)] != q.mul.at(f[a], f[b])) rep.add("semiring-multiplicative", {a, b});
    }
  }
  // Restriction to F must land in F' and be a hyperfield homomorphism.
  std::vector<Elem> back(q.size(), kNoElem);
  for (Elem a = 0; a < q.hyperfield.size(); ++a) back[q.embedding[a]] = a;
  std::vector<Elem> restricted(p.hyperfield.size());
  for (Elem a = 0; a < p.hyperfield.size(); ++a) {
    restricted[a] = back[f[p.embedding[a]]];
    if (restricted[a] == kNoElem) {
      rep.add("restriction", {a});
      return rep;
    }
  }
  rep.merge(check_hom(restricted, p.hyperfield, q.hyperfield, false));
  return rep;
}

}  // namespace hyperalg
