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

#include "oracle.h"

#include <algorithm>
#include <functional>

namespace oracle {

Hyper from(const hyperalg::FiniteHyperring& r) {
  Hyper h;
  h.n = static_cast<int>(r.size());
  h.add.assign(h.n, std::vector<Set>(h.n));
  h.mul.assign(h.n, std::vector<int>(h.n));
  for (int a = 0; a < h.n; ++a) {
    for (int b = 0; b < h.n; ++b) {
      h.add[a][b] = to_set(r.add(a, b));
      h.mul[a][b] = static_cast<int>(r.mul(a, b));
    }
  }
  return h;
}

Set to_set(hyperalg::SubsetMask m) {
  Set s;
  for (int i = 0; i < 64; ++i) {
    if ((m.bits() >> i) & 1U) s.insert(i);
  }
  return s;
}

Set sum(const Hyper& h, const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    for (int y : b) out.insert(h.add[x][y].begin(), h.add[x][y].end());
  }
  return out;
}

Set product(const Hyper& h, const Set& a, const Set& b) {
  Set out;
  for (int x : a) {
    for (int y : b) out.insert(h.mul[x][y]);
  }
  return out;
}

Set sum_of(const Hyper& h, const std::vector<int>& terms) {
  Set acc{0};
  for (int t : terms) acc = sum(h, acc, Set{t});
  return acc;
}

bool doubly_distributive(const Hyper& h) {
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      for (int c = 0; c < h.n; ++c)
        for (int d = 0; d < h.n; ++d) {
          Set lhs = product(h, h.add[a][b], h.add[c][d]);
          Set rhs = sum(h, sum(h, {h.mul[a][c]}, {h.mul[a][d]}),
                        sum(h, {h.mul[b][c]}, {h.mul[b][d]}));
          if (lhs != rhs) return false;
        }
  return true;
}

int negative(const Hyper& h, int a) {
  int found = -1;
  for (int x = 0; x < h.n; ++x) {
    if (h.add[a][x].count(0)) {
      if (found != -1) return -1;
      found = x;
    }
  }
  return found;
}

std::set<Set> closure(const Hyper& h) {
  std::set<Set> fam;
  for (int x = 0; x < h.n; ++x) fam.insert(Set{x});
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Set> cur(fam.begin(), fam.end());
    for (const Set& a : cur)
      for (const Set& b : cur) grew |= fam.insert(sum(h, a, b)).second;
  }
  return fam;
}

Fuzzy from(const hyperalg::FiniteFuzzyRing& k) {
  Fuzzy f;
  f.n = static_cast<int>(k.size());
  f.add.assign(f.n, std::vector<int>(f.n));
  f.mul.assign(f.n, std::vector<int>(f.n));
  for (int a = 0; a < f.n; ++a) {
    f.null.push_back(k.is_null(a));
    for (int b = 0; b < f.n; ++b) {
      f.add[a][b] = static_cast<int>(k.add(a, b));
      f.mul[a][b] = static_cast<int>(k.mul(a, b));
    }
  }
  // Units and epsilon are recomputed from the tables.
  for (int a = 0; a < f.n; ++a) {
    for (int b = 0; b < f.n; ++b) {
      if (f.n > 1 && f.mul[a][b] == 1) {
        f.units.push_back(a);
        break;
      }
    }
  }
  for (int u : f.units) {
    if (f.n > 1 && f.null[f.add[1][u]]) {
      f.eps = u;
      break;
    }
  }
  return f;
}

bool fuzzy_axioms(const Fuzzy& k) {
  const int n = k.n;
  if (n < 2 || k.eps < 0) return false;
  auto& A = k.add;
  auto& M = k.mul;
  for (int a = 0; a < n; ++a) {
    if (A[0][a] != a || M[1][a] != a || M[0][a] != 0) return false;
    for (int b = 0; b < n; ++b) {
      if (A[a][b] != A[b][a] || M[a][b] != M[b][a]) return false;
      for (int c = 0; c < n; ++c) {
        if (A[A[a][b]][c] != A[a][A[b][c]]) return false;
        if (M[M[a][b]][c] != M[a][M[b][c]]) return false;
      }
    }
  }
  for (int u : k.units)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (M[u][A[b][c]] != A[M[u][b]][M[u][c]]) return false;
  if (M[k.eps][k.eps] != 1) return false;
  if (!k.null[0] || k.null[1]) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (k.null[a] && k.null[b] && !k.null[A[a][b]]) return false;
      if (k.null[b] && !k.null[M[a][b]]) return false;
    }
  for (int u : k.units)
    if (k.null[A[1][u]] != (u == k.eps)) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (k.null[A[a][b]] && k.null[A[c][d]] &&
              !k.null[A[M[a][c]][M[k.eps][M[b][d]]]])
            return false;
          if (k.null[A[a][M[b][A[c][d]]]] && !k.null[A[A[a][M[b][c]]][M[b][d]]])
            return false;
        }
  return true;
}

std::optional<std::vector<int>> weak_violation(const std::vector<hyperalg::Elem>& f, const Fuzzy& k,
                                               const Fuzzy& l, int max_len) {
  std::vector<int> seq;
  std::optional<std::vector<int>> found;
  std::function<void(int, int)> go = [&](int sk, int sl) {
    if (found) return;
    if (!seq.empty() && k.null[sk] && !l.null[sl]) {
      found = seq;
      return;
    }
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int u : k.units) {
      seq.push_back(u);
      go(k.add[sk][u], l.add[sl][static_cast<int>(f[u])]);
      seq.pop_back();
    }
  };
  go(0, 0);
  return found;
}

// --- Grassmann-Pluecker ---------------------------------------------------------

std::vector<std::vector<int>> sorted_tuples(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> go = [&](int start) {
    if (static_cast<int>(cur.size()) == r) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      go(i + 1);
      cur.pop_back();
    }
  };
  go(0);
  return out;
}

namespace {

std::vector<std::vector<int>> ordered_distinct(int n, int len) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(n, false);
  std::function<void()> go = [&] {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      used[i] = true;
      cur.push_back(i);
      go();
      cur.pop_back();
      used[i] = false;
    }
  };
  go();
  return out;
}

int power(const std::vector<std::vector<int>>& mul, int base, int k) {
  int out = 1;
  for (int i = 0; i < k; ++i) out = mul[out][base];
  return out;
}

// Evaluates phi on a tuple that may repeat entries.
int value_at(const std::map<std::vector<int>, int>& phi, const std::vector<int>& t) {
  auto it = phi.find(t);
  return it == phi.end() ? 0 : it->second;
}

// Calls rel(terms) for every relation, terms being the products with their
// sign powers already applied.
template <class Rel>
bool all_relations(int n, int r, const std::map<std::vector<int>, int>& phi,
                   const std::vector<std::vector<int>>& mul, int sign, Rel rel) {
  for (const auto& x : ordered_distinct(n, r + 1)) {
    for (const auto& y : ordered_distinct(n, r - 1)) {
      std::vector<int> terms;
      for (int k = 0; k <= r; ++k) {
        std::vector<int> left = y;
        left.push_back(x[k]);
        std::vector<int> right;
        for (int j = 0; j <= r; ++j)
          if (j != k) right.push_back(x[j]);
        int prod = mul[value_at(phi, left)][value_at(phi, right)];
        terms.push_back(mul[power(mul, sign, k)][prod]);
      }
      if (!rel(terms)) return false;
    }
  }
  return true;
}

}  // namespace

std::map<std::vector<int>, int> expand(int n, int r, const std::vector<int>& sorted_values,
                                       const std::vector<std::vector<int>>& mul, int sign) {
  std::map<std::vector<int>, int> phi;
  auto sorted = sorted_tuples(n, r);
  for (const auto& t : ordered_distinct(n, r)) {
    std::vector<int> s = t;
    int swaps = 0;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j + 1 < r - i; ++j)
        if (s[j] > s[j + 1]) {
          std::swap(s[j], s[j + 1]);
          ++swaps;
        }
    auto pos = std::find(sorted.begin(), sorted.end(), s) - sorted.begin();
    phi[t] = mul[power(mul, sign, swaps)][sorted_values[pos]];
  }
  return phi;
}

bool gp_valid_hyper(const Hyper& h, int n, int r, const std::vector<int>& values) {
  int minus = negative(h, 1);
  if (std::all_of(values.begin(), values.end(), [](int v) { return v == 0; })) return false;
  for (int v : values) {
    if (v == 0) continue;
    bool unit = false;
    for (int w = 0; w < h.n; ++w) unit |= h.mul[v][w] == 1;
    if (!unit) return false;
  }
  auto phi = expand(n, r, values, h.mul, minus);
  return all_relations(n, r, phi, h.mul, minus,
                       [&](const std::vector<int>& terms) { return sum_of(h, terms).count(0) > 0; });
}

bool gp_valid_fuzzy(const Fuzzy& k, int n, int r, const std::vector<int>& values) {
  if (std::all_of(values.begin(), values.end(), [](int v) { return v == 0; })) return false;
  for (int v : values)
    if (v != 0 && std::find(k.units.begin(), k.units.end(), v) == k.units.end()) return false;
  auto phi = expand(n, r, values, k.mul, k.eps);
  return all_relations(n, r, phi, k.mul, k.eps, [&](const std::vector<int>& terms) {
    int acc = 0;
    for (int t : terms) acc = k.add[acc][t];
    return static_cast<bool>(k.null[acc]);
  });
}

std::vector<std::vector<int>> gp_enumerate_hyper(const Hyper& h, int n, int r, bool all) {
  std::vector<int> choices{0};
  for (int v = 1; v < h.n; ++v)
    for (int w = 0; w < h.n; ++w)
      if (h.mul[v][w] == 1) {
        choices.push_back(v);
        break;
      }
  std::size_t slots = sorted_tuples(n, r).size();
  std::vector<std::vector<int>> out;
  std::vector<int> cur(slots, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == slots) {
      if (!gp_valid_hyper(h, n, r, cur)) return;
      if (!all) {
        for (std::size_t u = 1; u < choices.size(); ++u) {
          std::vector<int> scaled;
          for (int v : cur) scaled.push_back(h.mul[choices[u]][v]);
          if (scaled < cur) return;
        }
      }
      out.push_back(cur);
      return;
    }
    for (int c : choices) {
      cur[i] = c;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

bool basis_exchange(const Family& f) {
  if (f.empty()) return false;
  for (const Set& b1 : f)
    for (const Set& b2 : f)
      for (int x : b1) {
        if (b2.count(x)) continue;
        bool ok = false;
        for (int y : b2) {
          if (b1.count(y)) continue;
          Set c = b1;
          c.erase(x);
          c.insert(y);
          if (f.count(c)) {
            ok = true;
            break;
          }
        }
        if (!ok) return false;
      }
  return true;
}

std::set<Family> all_matroids(int n, int r) {
  std::vector<Set> subsets;
  for (const auto& t : sorted_tuples(n, r)) subsets.emplace_back(t.begin(), t.end());
  std::set<Family> out;
  const std::size_t m = subsets.size();
  for (unsigned long long pick = 1; pick < (1ULL << m); ++pick) {
    Family f;
    for (std::size_t i = 0; i < m; ++i)
      if ((pick >> i) & 1U) f.insert(subsets[i]);
    if (basis_exchange(f)) out.insert(f);
  }
  return out;
}

}  // namespace oracle
