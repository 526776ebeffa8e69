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

#include "hyperalg/fuzzy.h"

#include <algorithm>
#include <deque>
#include <functional>

#include <boost/dynamic_bitset.hpp>

namespace hyperalg {

FiniteFuzzyRing::FiniteFuzzyRing(OpTable add, OpTable mul, std::vector<bool> k0,
                                 std::optional<Elem> epsilon, std::vector<std::string> labels)
    : add_(std::move(add)), mul_(std::move(mul)), k0_(std::move(k0)), labels_(std::move(labels)) {
  const std::size_t n = add_.size();
  if (n == 0) throw AlgebraError("fuzzy ring carrier is empty");
  if (mul_.size() != n || k0_.size() != n) {
    throw AlgebraError("fuzzy ring tables and null set differ in size");
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw AlgebraError("label count does not match carrier size");
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (add_.cells()[i] >= n || mul_.cells()[i] >= n) {
      throw AlgebraError("fuzzy ring table entry leaves the carrier");
    }
  }
  inverse_.assign(n, kNoElem);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul_.at(a, b) == one()) {
        inverse_[a] = b;
        units_.push_back(a);
        break;
      }
    }
  }
  std::vector<Elem> fr5;
  for (Elem u : units_) {
    if (k0_[add_.at(one(), u)]) fr5.push_back(u);
  }
  if (epsilon && *epsilon >= n) throw AlgebraError("epsilon outside the carrier");
  if (fr5.size() == 1) {
    if (epsilon && *epsilon != fr5.front()) {
      throw AlgebraError("supplied epsilon " + std::to_string(*epsilon) +
                         " disagrees with the unit " + std::to_string(fr5.front()) +
                         " singled out by 1+a null");
    }
    epsilon_ = fr5.front();
  } else if (epsilon) {
    epsilon_ = *epsilon;
  } else {
    throw AlgebraError("epsilon is not determined: " + std::to_string(fr5.size()) +
                       " units a have 1+a null");
  }
}

std::string FiniteFuzzyRing::label(Elem a) const {
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

UnitGroup unit_group(const FiniteFuzzyRing& k) {
  UnitGroup g{k.units(), std::vector<Elem>(k.size(), kNoElem)};
  for (Elem u : g.units) g.inverse[u] = k.inverse(u);
  return g;
}

AxiomReport check_fuzzy_axioms(const FiniteFuzzyRing& k) {
  AxiomReport rep;
  const Elem n = static_cast<Elem>(k.size());
  const Elem z = k.zero();
  const Elem o = k.one();
  const Elem eps = k.epsilon();

  for (Elem a = 0; a < n; ++a) {
    if (k.add(a, z) != a) rep.add("FR0 additive identity", {a});
    if (k.mul(a, o) != a) rep.add("FR0 multiplicative identity", {a});
    if (k.mul(z, a) != z) rep.add("FR1", {a});
    for (Elem b = 0; b < n; ++b) {
      if (k.add(a, b) != k.add(b, a)) rep.add("FR0 additive commutativity", {a, b});
      if (k.mul(a, b) != k.mul(b, a)) rep.add("FR0 multiplicative commutativity", {a, b});
      const Elem ab = k.add(a, b);
      const Elem pab = k.mul(a, b);
      for (Elem c = 0; c < n; ++c) {
        if (k.add(ab, c) != k.add(a, k.add(b, c))) rep.add("FR0 additive associativity", {a, b, c});
        if (k.mul(pab, c) != k.mul(a, k.mul(b, c))) {
          rep.add("FR0 multiplicative associativity", {a, b, c});
        }
      }
    }
  }
  for (Elem u : k.units()) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (k.mul(u, k.add(b, c)) != k.add(k.mul(u, b), k.mul(u, c))) rep.add("FR2", {u, b, c});
      }
    }
  }
  if (eps >= n || k.mul(eps, eps) != o) rep.add("FR3", {eps});

  if (!k.is_null(z)) rep.add("FR4 zero null", {z});
  if (k.is_null(o)) rep.add("FR4 one not null", {o});
  for (Elem a = 0; a < n; ++a) {
    if (!k.is_null(a)) continue;
    for (Elem b = 0; b < n; ++b) {
      if (k.is_null(b) && !k.is_null(k.add(a, b))) rep.add("FR4 sum of nulls", {a, b});
      if (!k.is_null(k.mul(a, b))) rep.add("FR4 ideal", {a, b});
    }
  }
  for (Elem u : k.units()) {
    if (k.is_null(k.add(o, u)) != (u == eps)) rep.add("FR5", {u});
  }

  // partners[z] = { a : a + z null }.
  std::vector<boost::dynamic_bitset<>> partners(n, boost::dynamic_bitset<>(n));
  for (Elem x = 0; x < n; ++x) {
    for (Elem a = 0; a < n; ++a) {
      if (k.is_null(k.add(a, x))) partners[x].set(a);
    }
  }
  // FR6: a+b, c+d null  =>  ac + eps*bd null, i.e. eps*bd is a partner of ac.
  if (eps < n) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem c = 0; c < n; ++c) {
        const auto& want = partners[k.mul(a, c)];
        for (auto b = partners[a].find_first(); b != boost::dynamic_bitset<>::npos;
             b = partners[a].find_next(b)) {
          for (auto d = partners[c].find_first(); d != boost::dynamic_bitset<>::npos;
               d = partners[c].find_next(d)) {
            const Elem ebd = k.mul(eps, k.mul(static_cast<Elem>(b), static_cast<Elem>(d)));
            if (!want.test(ebd)) {
              rep.add("FR6", {a, static_cast<Elem>(b), c, static_cast<Elem>(d)});
            }
          }
        }
      }
    }
  }
  // FR7: a + b(c+d) null  =>  a + bc + bd null, for every a at once.
  for (Elem b = 0; b < n; ++b) {
    for (Elem c = 0; c < n; ++c) {
      for (Elem d = 0; d < n; ++d) {
        const auto& lhs = partners[k.mul(b, k.add(c, d))];
        const auto& rhs = partners[k.add(k.mul(b, c), k.mul(b, d))];
        if (!lhs.is_subset_of(rhs)) {
          const auto bad = (lhs - rhs).find_first();
          rep.add("FR7", {static_cast<Elem>(bad), b, c, d});
        }
      }
    }
  }
  return rep;
}

// --- pair closure ---------------------------------------------------------------

using Pair = std::pair<Elem, Elem>;

ClosureCertificate pair_closure(const FiniteFuzzyRing& k, const FiniteFuzzyRing& l,
                                std::span<const Pair> gens) {
  const std::size_t nl = l.size();
  const std::size_t states = k.size() * nl;
  auto id = [nl](Elem s, Elem t) { return static_cast<std::size_t>(s) * nl + t; };
  std::vector<bool> seen(states, false);
  std::vector<std::size_t> parent(states, states);
  std::vector<std::size_t> via(states, 0);
  std::deque<std::size_t> queue;

  ClosureCertificate cert;
  const std::size_t start = id(k.zero(), l.zero());
  seen[start] = true;
  queue.push_back(start);
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Elem s = static_cast<Elem>(cur / nl);
    const Elem t = static_cast<Elem>(cur % nl);
    cert.reachable.emplace_back(s, t);
    if (k.is_null(s) && !l.is_null(t)) {
      cert.violating = Pair{s, t};
      for (std::size_t at = cur; at != start; at = parent[at]) cert.witness.push_back(gens[via[at]]);
      std::reverse(cert.witness.begin(), cert.witness.end());
      return cert;
    }
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::size_t next = id(k.add(s, gens[g].first), l.add(t, gens[g].second));
      if (seen[next]) continue;
      seen[next] = true;
      parent[next] = cur;
      via[next] = g;
      queue.push_back(next);
    }
  }
  std::sort(cert.reachable.begin(), cert.reachable.end());
  return cert;
}

ClosureCertificate check_weak_morphism(std::span<const Elem> f, const FiniteFuzzyRing& k,
                                       const FiniteFuzzyRing& l) {
  if (f.size() != k.size()) throw AlgebraError("weak morphism map has the wrong length");
  for (Elem u : k.units()) {
    if (f[u] >= l.size() || !l.is_unit(f[u])) {
      throw AlgebraError("weak morphism sends unit " + std::to_string(u) + " outside L^x");
    }
  }
  if (f[k.one()] != l.one()) throw AlgebraError("weak morphism does not fix 1");
  for (Elem u : k.units()) {
    for (Elem v : k.units()) {
      if (f[k.mul(u, v)] != l.mul(f[u], f[v])) {
        throw AlgebraError("weak morphism is not multiplicative on units " + std::to_string(u) +
                           ", " + std::to_string(v));
      }
    }
  }
  std::vector<Pair> gens;
  for (Elem u : k.units()) gens.emplace_back(u, f[u]);
  return pair_closure(k, l, gens);
}

ClosureCertificate check_strong_morphism(std::span<const Elem> g, const FiniteFuzzyRing& k,
                                         const FiniteFuzzyRing& l) {
  ClosureCertificate cert;
  const Elem n = static_cast<Elem>(k.size());
  if (g.size() != n) {
    cert.precondition_failure = "map has the wrong length";
    return cert;
  }
  for (Elem a = 0; a < n; ++a) {
    if (g[a] >= l.size()) {
      cert.precondition_failure = "image of " + std::to_string(a) + " leaves the target";
      return cert;
    }
  }
  if (g[k.zero()] != l.zero()) {
    cert.precondition_failure = "g(0) != 0";
    return cert;
  }
  if (g[k.one()] != l.one()) {
    cert.precondition_failure = "g(1) != 1";
    return cert;
  }
  for (Elem u : k.units()) {
    for (Elem b = 0; b < n; ++b) {
      if (g[k.mul(u, b)] != l.mul(g[u], g[b])) {
        cert.precondition_failure = "condition (1) fails at unit " + std::to_string(u) +
                                    " and element " + std::to_string(b);
        return cert;
      }
    }
  }
  std::vector<bool> have(k.size() * l.size(), false);
  std::vector<Pair> gens;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      const Pair p{k.mul(a, b), l.mul(g[a], g[b])};
      const std::size_t key = static_cast<std::size_t>(p.first) * l.size() + p.second;
      if (!have[key]) {
        have[key] = true;
        gens.push_back(p);
      }
    }
  }
  std::sort(gens.begin(), gens.end());
  return pair_closure(k, l, gens);
}

std::optional<std::vector<Elem>> find_weak_violation_bounded(std::span<const Elem> f,
                                                             const FiniteFuzzyRing& k,
                                                             const FiniteFuzzyRing& l,
                                                             std::size_t max_terms) {
  const auto& units = k.units();
  std::vector<Elem> picks;
  std::optional<std::vector<Elem>> found;
  // Multisets as nondecreasing index sequences; running sums carried along.
  std::function<void(std::size_t, Elem, Elem)> go = [&](std::size_t from, Elem s, Elem t) {
    if (found) return;
    if (!picks.empty() && k.is_null(s) && !l.is_null(t)) {
      found = picks;
      return;
    }
    if (picks.size() == max_terms) return;
    for (std::size_t i = from; i < units.size() && !found; ++i) {
      picks.push_back(units[i]);
      go(i, k.add(s, units[i]), l.add(t, f[units[i]]));
      picks.pop_back();
    }
  };
  go(0, k.zero(), l.zero());
  return found;
}

MorphismTable make_weak(std::span<const Elem> f, const FiniteFuzzyRing& k,
                        const FiniteFuzzyRing& l) {
  MorphismTable m{MorphismKind::kWeak, std::vector<Elem>(k.size(), kNoElem), {}};
  m.map[k.zero()] = l.zero();
  for (Elem u : k.units()) m.map[u] = f[u];
  m.certificate = check_weak_morphism(m.map, k, l);
  return m;
}

MorphismTable make_strong(std::span<const Elem> g, const FiniteFuzzyRing& k,
                          const FiniteFuzzyRing& l) {
  MorphismTable m{MorphismKind::kStrong, std::vector<Elem>(g.begin(), g.end()), {}};
  m.certificate = check_strong_morphism(m.map, k, l);
  return m;
}

MorphismTable restrict_strong_to_weak(const MorphismTable& g, const FiniteFuzzyRing& k,
                                      const FiniteFuzzyRing& l) {
  if (g.kind != MorphismKind::kStrong) throw AlgebraError("restriction expects a strong morphism");
  return make_weak(g.map, k, l);
}

std::vector<Elem> compose(std::span<const Elem> f, std::span<const Elem> g) {
  std::vector<Elem> out(f.size(), kNoElem);
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] != kNoElem && f[i] < g.size()) out[i] = g[f[i]];
  }
  return out;
}

std::vector<std::vector<Elem>> unit_homomorphisms(const FiniteFuzzyRing& k,
                                                  const FiniteFuzzyRing& l) {
  const auto& ku = k.units();
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> f(k.size(), kNoElem);
  f[k.zero()] = l.zero();
  auto consistent = [&]() {
    for (Elem u : ku) {
      if (f[u] == kNoElem) continue;
      for (Elem v : ku) {
        if (f[v] == kNoElem) continue;
        const Elem uv = k.mul(u, v);
        if (f[uv] != kNoElem && f[uv] != l.mul(f[u], f[v])) return false;
      }
    }
    return true;
  };
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == ku.size()) {
      out.push_back(f);
      return;
    }
    const Elem u = ku[i];
    if (u == k.one()) {
      f[u] = l.one();
      if (consistent()) go(i + 1);
      f[u] = kNoElem;
      return;
    }
    for (Elem v : l.units()) {
      f[u] = v;
      if (consistent()) go(i + 1);
    }
    f[u] = kNoElem;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> weak_iso(const FiniteFuzzyRing& k, const FiniteFuzzyRing& l) {
  if (k.units().size() != l.units().size()) return std::nullopt;
  for (const auto& f : unit_homomorphisms(k, l)) {
    std::vector<Elem> inv(l.size(), kNoElem);
    inv[l.zero()] = k.zero();
    bool bijective = true;
    for (Elem u : k.units()) {
      if (inv[f[u]] != kNoElem) bijective = false;
      inv[f[u]] = u;
    }
    if (!bijective) continue;
    if (check_weak_morphism(f, k, l).accepted() && check_weak_morphism(inv, l, k).accepted()) {
      return f;
    }
  }
  return std::nullopt;
}

FiniteFuzzyRing builtin_fuzzy(std::string_view name) {
  if (name == "krasnerfuzzy") {
    OpTable add(3, std::vector<Elem>{0, 1, 2,  //
                                     1, 2, 2,  //
                                     2, 2, 2});
    OpTable mul(3, std::vector<Elem>{0, 0, 0,  //
                                     0, 1, 2,  //
                                     0, 2, 2});
    return FiniteFuzzyRing(std::move(add), std::move(mul), {true, false, true}, Elem{1},
                           {"0", "1", "k0"});
  }
  if (name == "signfuzzy") {
    OpTable add(4, std::vector<Elem>{0, 1, 2, 3,  //
                                     1, 1, 3, 3,  //
                                     2, 3, 2, 3,  //
                                     3, 3, 3, 3});
    OpTable mul(4, std::vector<Elem>{0, 0, 0, 0,  //
                                     0, 1, 2, 3,  //
                                     0, 2, 1, 3,  //
                                     0, 3, 3, 3});
    return FiniteFuzzyRing(std::move(add), std::move(mul), {true, false, false, true}, Elem{2},
                           {"0", "1", "-1", "k0"});
  }
  throw AlgebraError("unknown builtin fuzzy ring '" + std::string(name) + "'");
}

std::vector<std::string> builtin_fuzzy_names() { return {"krasnerfuzzy", "signfuzzy"}; }

}  // namespace hyperalg
