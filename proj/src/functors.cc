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

#include "hyperalg/functors.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

namespace hyperalg {

namespace {

std::string mask_label(const FiniteHyperring& base, SubsetMask m) {
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

}  // namespace

PowersetFuzzyRing::PowersetFuzzyRing(FiniteHyperring base) : base_(std::move(base)) {
  const std::size_t n = base_.size();
  if (n > kPowersetHardCap) {
    throw CapExceeded("powerset of a carrier with " + std::to_string(n) +
                      " elements exceeds the hard cap of " + std::to_string(kPowersetHardCap));
  }
  const std::uint64_t patterns = std::uint64_t{1} << n;
  index_.assign(patterns, kNoElem);
  for (Elem x = 0; x < n; ++x) masks_.push_back(SubsetMask::singleton(x));
  for (std::uint64_t bits = 1; bits < patterns; ++bits) {
    if (!SubsetMask(bits).is_singleton()) masks_.emplace_back(bits);
  }
  if (base_.has_empty_sum()) masks_.emplace_back();
  for (Elem i = 0; i < masks_.size(); ++i) index_[masks_[i].bits()] = i;

  if (n > kMaterializeCap) return;
  const std::size_t m = masks_.size();
  OpTable add(m, 0);
  OpTable mul(m, 0);
  std::vector<bool> k0(m);
  std::vector<std::string> labels;
  for (Elem i = 0; i < m; ++i) {
    k0[i] = masks_[i].contains(base_.zero());
    labels.push_back(mask_label(base_, masks_[i]));
    for (Elem j = 0; j < m; ++j) {
      add.at(i, j) = index_of(add_masks(masks_[i], masks_[j]));
      mul.at(i, j) = index_of(mul_masks(masks_[i], masks_[j]));
    }
  }
  const Elem neg_one = base_.neg(base_.one());
  std::optional<Elem> eps;
  if (neg_one != kNoElem) eps = embed(neg_one);
  fuzzy_.emplace(std::move(add), std::move(mul), std::move(k0), eps, std::move(labels));
}

Elem PowersetFuzzyRing::index_of(SubsetMask m) const {
  return m.bits() < index_.size() ? index_[m.bits()] : kNoElem;
}

const FiniteFuzzyRing& PowersetFuzzyRing::fuzzy() const {
  if (!fuzzy_) {
    throw CapExceeded("dense tables are only built for carriers up to " +
                      std::to_string(kMaterializeCap) + " elements");
  }
  return *fuzzy_;
}

PowersetFuzzyRing F_obj(const FiniteHyperring& r) {
  if (r.size() > powerset_cap()) {
    throw CapExceeded("F: carrier of " + std::to_string(r.size()) +
                      " elements exceeds the powerset cap of " + std::to_string(powerset_cap()) +
                      " (raise HYPERALG_MAX_POWERSET)");
  }
  return PowersetFuzzyRing(r);
}

MorphismTable F_mor(std::span<const Elem> f, const PowersetFuzzyRing& src,
                    const PowersetFuzzyRing& dst) {
  if (f.size() != src.base().size()) throw AlgebraError("F: map has the wrong length");
  std::vector<Elem> g(src.size());
  for (Elem i = 0; i < src.size(); ++i) {
    g[i] = dst.index_of(image(f, src.mask(i)));
    if (g[i] == kNoElem) throw AlgebraError("F: image of an element is not in the target");
  }
  return make_strong(g, src.fuzzy(), dst.fuzzy());
}

AxiomReport is_field_like(const FiniteFuzzyRing& k) {
  AxiomReport rep;
  std::vector<Elem> completions = k.units();
  completions.push_back(k.zero());
  for (Elem a : k.units()) {
    for (Elem b : k.units()) {
      if (b < a) continue;
      const Elem ab = k.add(a, b);
      const bool ok = std::any_of(completions.begin(), completions.end(),
                                  [&](Elem c) { return k.is_null(k.add(ab, c)); });
      if (!ok) rep.add("field-like", {a, b});
    }
  }
  return rep;
}

GResult G_obj(const FiniteFuzzyRing& k) {
  std::vector<Elem> carrier{k.zero()};
  for (Elem u : k.units()) {
    if (u != k.zero()) carrier.push_back(u);
  }
  std::vector<Elem> position(k.size(), kNoElem);
  for (Elem i = 0; i < carrier.size(); ++i) position[carrier[i]] = i;
  const std::size_t n = carrier.size();
  HyperTable add(n, SubsetMask{});
  OpTable mul(n, 0);
  bool empty_sum = false;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      const Elem ab = k.add(carrier[i], carrier[j]);
      SubsetMask s;
      for (Elem c = 0; c < n; ++c) {
        if (k.is_null(k.add(ab, k.mul(k.epsilon(), carrier[c])))) s.insert(c);
      }
      empty_sum = empty_sum || s.empty();
      add.at(i, j) = s;
      mul.at(i, j) = position[k.mul(carrier[i], carrier[j])];
    }
  }
  std::vector<std::string> labels;
  for (Elem c : carrier) labels.push_back(k.label(c));
  const bool partial = !is_field_like(k).passed() || empty_sum;
  return {FiniteHyperring(std::move(add), std::move(mul), partial, std::move(labels)),
          std::move(carrier), std::move(position)};
}

std::vector<Elem> G_mor(std::span<const Elem> f, const GResult& gk, const GResult& gl) {
  std::vector<Elem> out(gk.carrier.size());
  for (Elem i = 0; i < out.size(); ++i) {
    const Elem image = f[gk.carrier[i]];
    out[i] = i == 0 ? 0 : (image == kNoElem ? kNoElem : gl.position[image]);
  }
  return out;
}

UnitFieldResult unit_field(const FiniteHyperring& r) {
  std::vector<Elem> carrier{r.zero()};
  for (Elem u : r.units()) {
    if (u != r.zero()) carrier.push_back(u);
  }
  std::vector<Elem> position(r.size(), kNoElem);
  for (Elem i = 0; i < carrier.size(); ++i) position[carrier[i]] = i;
  const std::size_t n = carrier.size();
  HyperTable add(n, SubsetMask{});
  OpTable mul(n, 0);
  bool empty_sum = false;
  for (Elem i = 0; i < n; ++i) {
    for (Elem j = 0; j < n; ++j) {
      SubsetMask s;
      for (Elem x : r.add(carrier[i], carrier[j])) {
        if (position[x] != kNoElem) s.insert(position[x]);
      }
      empty_sum = empty_sum || s.empty();
      add.at(i, j) = s;
      mul.at(i, j) = position[r.mul(carrier[i], carrier[j])];
    }
  }
  std::vector<std::string> labels;
  for (Elem c : carrier) labels.push_back(r.label(c));
  return {FiniteHyperring(std::move(add), std::move(mul), empty_sum || r.partial(),
                          std::move(labels)),
          std::move(carrier)};
}

FiniteHyperring unit_field_of_integers() {
  HyperTable add(3, SubsetMask{});
  add.at(0, 0) = SubsetMask::of({0});
  add.at(0, 1) = add.at(1, 0) = SubsetMask::of({1});
  add.at(0, 2) = add.at(2, 0) = SubsetMask::of({2});
  add.at(1, 2) = add.at(2, 1) = SubsetMask::of({0});
  OpTable mul(3, std::vector<Elem>{0, 0, 0, 0, 1, 2, 0, 2, 1});
  return FiniteHyperring(std::move(add), std::move(mul), true, {"0", "1", "-1"});
}

AxiomReport check_roundtrips(const FiniteHyperring& k) {
  AxiomReport rep;
  const PowersetFuzzyRing fk = F_obj(k);
  const FiniteFuzzyRing& fz = fk.fuzzy();
  if (!is_field_like(fz).passed()) rep.add("F(k) field-like", {});
  const GResult g = G_obj(fz);
  std::vector<Elem> id(k.size());
  std::iota(id.begin(), id.end(), Elem{0});
  if (g.carrier != id) {
    rep.add("G(F(k)) carrier", {});
    return rep;
  }
  if (!g.hyperring.same_tables(k)) rep.add("G(F(k)) tables", {});
  if (!check_hom(id, g.hyperring, k, true).passed()) rep.add("G(F(k)) -> k strict", {});
  if (!check_hom(id, k, g.hyperring, true).passed()) rep.add("k -> G(F(k)) strict", {});
  return rep;
}

AxiomReport check_roundtrips_fuzzy(const FiniteFuzzyRing& k) {
  AxiomReport rep;
  const GResult g = G_obj(k);
  const PowersetFuzzyRing fg = F_obj(g.hyperring);
  const FiniteFuzzyRing& l = fg.fuzzy();
  // Units of K sit at g.position[u] in G(K), hence at the same singleton index in F(G(K)).
  std::vector<Elem> alpha(k.size(), kNoElem);
  std::vector<Elem> beta(l.size(), kNoElem);
  alpha[k.zero()] = l.zero();
  beta[l.zero()] = k.zero();
  for (Elem u : k.units()) {
    alpha[u] = fg.embed(g.position[u]);
    beta[alpha[u]] = u;
  }
  if (l.units().size() != k.units().size()) {
    rep.add("unit count", {static_cast<Elem>(k.units().size()), static_cast<Elem>(l.units().size())});
    return rep;
  }
  if (!check_weak_morphism(alpha, k, l).accepted()) rep.add("K -> F(G(K)) weak", {});
  if (!check_weak_morphism(beta, l, k).accepted()) rep.add("F(G(K)) -> K weak", {});
  return rep;
}

// --- extension search --------------------------------------------------------------

std::string_view to_string(ExtensionVerdict v) {
  switch (v) {
    case ExtensionVerdict::kExtends: return "extends";
    case ExtensionVerdict::kRefuted: return "refuted";
    case ExtensionVerdict::kUnknown: return "unknown";
  }
  return "?";
}

namespace {

using Pair = std::pair<Elem, Elem>;

class ExtensionSearch {
 public:
  ExtensionSearch(std::span<const Elem> i, const FiniteFuzzyRing& k, const FiniteFuzzyRing& l,
                  const ExtensionSearchConfig& cfg, std::optional<std::vector<Elem>> hint)
      : k_(k), l_(l), cfg_(cfg), hint_(std::move(hint)), g_(k.size(), kNoElem) {
    g_[k.zero()] = l.zero();
    for (Elem u : k.units()) g_[u] = i[u];
    for (Elem b = 0; b < k.size(); ++b) {
      if (b == k.zero() || k.is_unit(b) || orbit_of_.count(b)) continue;
      Orbit o{b, {}, {}};
      for (Elem u : k.units()) {
        const Elem ub = k.mul(u, b);
        if (ub == b) o.stabiliser.push_back(u);
        if (std::find(o.members.begin(), o.members.end(), ub) == o.members.end()) {
          o.members.push_back(ub);
        }
        orbit_of_.insert(ub);
      }
      orbits_.push_back(std::move(o));
    }
  }

  ExtensionResult run() {
    ExtensionResult res;
    res.orbits = orbits_.size();
    State root{boost::dynamic_bitset<>(k_.size() * l_.size()),
               boost::dynamic_bitset<>(k_.size() * l_.size()), {}};
    root.reach.set(k_.zero() * l_.size() + l_.zero());
    std::vector<Elem> assigned{k_.zero()};
    for (Elem u : k_.units()) assigned.push_back(u);
    std::vector<Pair> gens;
    for (Elem a : assigned) {
      for (Elem b : assigned) gens.emplace_back(k_.mul(a, b), l_.mul(g_[a], g_[b]));
    }
    assigned_ = assigned;
    if (!extend(root, gens)) {
      res.verdict = ExtensionVerdict::kRefuted;
      BranchWitness w;
      fill_witness(w);
      res.branches.push_back(std::move(w));
      res.nodes = nodes_;
      return res;
    }
    const int outcome = dfs(0, root, &res);
    res.nodes = nodes_;
    if (outcome == 1) {
      res.verdict = ExtensionVerdict::kExtends;
      res.witness = g_;
      res.branches.clear();
    } else if (outcome == 0) {
      res.verdict = ExtensionVerdict::kRefuted;
    } else {
      res.verdict = ExtensionVerdict::kUnknown;
      res.branches.clear();
    }
    return res;
  }

 private:
  struct Orbit {
    Elem rep;
    std::vector<Elem> members;
    std::vector<Elem> stabiliser;
  };
  struct State {
    boost::dynamic_bitset<> reach;  // (s, t) at s * |L| + t
    boost::dynamic_bitset<> have;   // generators present
    std::vector<Pair> gens;
  };

  std::size_t id(Elem s, Elem t) const { return static_cast<std::size_t>(s) * l_.size() + t; }

  // Adds generators and closes; false as soon as a (null, non-null) pair appears.
  bool extend(State& st, const std::vector<Pair>& candidates) {
    std::vector<Pair> fresh;
    for (const Pair& p : candidates) {
      const std::size_t key = id(p.first, p.second);
      if (st.have.test(key)) continue;
      st.have.set(key);
      st.gens.push_back(p);
      fresh.push_back(p);
    }
    std::vector<std::size_t> queue;
    auto visit = [&](std::size_t next) {
      if (st.reach.test(next)) return true;
      st.reach.set(next);
      queue.push_back(next);
      return !(k_.is_null(static_cast<Elem>(next / l_.size())) &&
               !l_.is_null(static_cast<Elem>(next % l_.size())));
    };
    for (auto s = st.reach.find_first(); s != boost::dynamic_bitset<>::npos; s = st.reach.find_next(s)) {
      const Elem a = static_cast<Elem>(s / l_.size());
      const Elem b = static_cast<Elem>(s % l_.size());
      for (const Pair& p : fresh) {
        if (!visit(id(k_.add(a, p.first), l_.add(b, p.second)))) return false;
      }
    }
    while (!queue.empty()) {
      const std::size_t cur = queue.back();
      queue.pop_back();
      const Elem a = static_cast<Elem>(cur / l_.size());
      const Elem b = static_cast<Elem>(cur % l_.size());
      for (const Pair& p : st.gens) {
        if (!visit(id(k_.add(a, p.first), l_.add(b, p.second)))) return false;
      }
    }
    return true;
  }

  // Witness of the current partial assignment via a shortest-path closure.
  void fill_witness(BranchWitness& w) const {
    std::vector<Pair> gens;
    for (Elem a : assigned_) {
      for (Elem b : assigned_) gens.emplace_back(k_.mul(a, b), l_.mul(g_[a], g_[b]));
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    const ClosureCertificate cert = pair_closure(k_, l_, gens);
    if (cert.violating) w.violating = *cert.violating;
    w.summands = cert.witness;
    if (w.summands.size() > cfg_.max_null_generators) w.summands.resize(cfg_.max_null_generators);
  }

  std::vector<Elem> domain(const Orbit& o) const {
    std::vector<Elem> out;
    if (hint_) {
      const Elem h = (*hint_)[o.rep];
      if (h < l_.size() && fixed_by_stabiliser(o, h)) out.push_back(h);
    }
    for (Elem y = 0; y < l_.size(); ++y) {
      if (!out.empty() && out.front() == y) continue;
      if (fixed_by_stabiliser(o, y)) out.push_back(y);
    }
    return out;
  }

  bool fixed_by_stabiliser(const Orbit& o, Elem y) const {
    return std::all_of(o.stabiliser.begin(), o.stabiliser.end(),
                       [&](Elem u) { return l_.mul(g_[u], y) == y; });
  }

  // 1 found, 0 exhausted, -1 budget.
  int dfs(std::size_t depth, const State& st, ExtensionResult* res) {
    if (depth == orbits_.size()) return 1;
    const Orbit& o = orbits_[depth];
    for (Elem y : domain(o)) {
      if (nodes_ >= cfg_.budget) return -1;
      ++nodes_;
      const std::size_t before = nodes_;
      for (Elem u : k_.units()) g_[k_.mul(u, o.rep)] = l_.mul(g_[u], y);
      const std::size_t mark = assigned_.size();
      for (Elem m : o.members) assigned_.push_back(m);
      std::vector<Pair> gens;
      for (Elem a : o.members) {
        for (Elem b : assigned_) gens.emplace_back(k_.mul(a, b), l_.mul(g_[a], g_[b]));
      }
      State next = st;
      const bool ok = extend(next, gens);
      int outcome = 0;
      BranchWitness w{o.rep, y, {}, {kNoElem, kNoElem}, 0};
      if (!ok) {
        if (depth == 0) fill_witness(w);
      } else {
        outcome = dfs(depth + 1, next, res);
      }
      if (outcome == 1) return 1;
      if (depth == 0 && outcome == 0) {
        w.subtree_nodes = nodes_ - before + 1;
        res->branches.push_back(std::move(w));
      }
      assigned_.resize(mark);
      for (Elem m : o.members) g_[m] = kNoElem;
      if (outcome == -1) return -1;
    }
    return 0;
  }

  const FiniteFuzzyRing& k_;
  const FiniteFuzzyRing& l_;
  ExtensionSearchConfig cfg_;
  std::optional<std::vector<Elem>> hint_;
  std::vector<Elem> g_;
  std::vector<Elem> assigned_;
  std::vector<Orbit> orbits_;
  std::set<Elem> orbit_of_;
  std::size_t nodes_ = 0;
};

}  // namespace

ExtensionResult strong_extension_search(std::span<const Elem> i, const FiniteFuzzyRing& k,
                                        const FiniteFuzzyRing& l, const ExtensionSearchConfig& cfg,
                                        std::optional<std::vector<Elem>> hint) {
  if (i.size() != k.size()) throw AlgebraError("extension search: map has the wrong length");
  check_weak_morphism(i, k, l);  // throws unless i is a unit-group homomorphism
  ExtensionResult res = ExtensionSearch(i, k, l, cfg, std::move(hint)).run();
  if (res.verdict == ExtensionVerdict::kExtends &&
      !check_strong_morphism(res.witness, k, l).accepted()) {
    throw AlgebraError("extension search produced a map the strong-morphism check rejects");
  }
  return res;
}

std::vector<Elem> union_extension(std::span<const Elem> i, const PowersetFuzzyRing& src,
                                  const PowersetFuzzyRing& dst) {
  const FiniteHyperring& r = src.base();
  const FiniteFuzzyRing& k = src.fuzzy();
  std::vector<SubsetMask> psi(r.size(), dst.base().carrier());
  psi[r.zero()] = SubsetMask::singleton(dst.base().zero());
  for (Elem u : k.units()) {
    if (u < r.size()) psi[u] = dst.mask(i[u]);
  }
  std::vector<Elem> out(src.size());
  for (Elem a = 0; a < src.size(); ++a) {
    SubsetMask m;
    for (Elem x : src.mask(a)) m |= psi[x];
    out[a] = dst.index_of(m);
  }
  return out;
}

}  // namespace hyperalg
