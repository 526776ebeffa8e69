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

#include "hyperalg/ordgrp.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "hyperalg/ddhyper.h"
#include "hyperalg/hyper.h"

namespace hyperalg {

std::string OGElem::to_string() const {
  return is_bottom() ? "bot" : std::to_string(*value);
}

std::string OGSubset::to_string() const {
  return is_interval() ? "[bot," + upper.to_string() + "]" : upper.to_string();
}

namespace {

OGElem parse_elem(std::string_view text) {
  if (text == "bot") return OGElem::bottom();
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw AlgebraError("not an ordered-group element: '" + std::string(text) + "'");
  }
  return OGElem::of(v);
}

// Witness encoding for window reports: bottom is 0, value v is v + 3B + 1.
Elem code(OGElem x, long long b) {
  return x.is_bottom() ? 0 : static_cast<Elem>(*x.value + 3 * b + 1);
}

// K_Z elements are encoded as 2 * upper-code + (interval ? 1 : 0).
Elem code(const OGSubset& a, long long b) {
  return 2 * code(a.upper, b) + (a.is_interval() ? 1 : 0);
}

void check_window_bound(long long b) {
  if (b < 1 || b > kMaxWindow) {
    throw AlgebraError("window bound must lie in [1, " + std::to_string(kMaxWindow) + "]");
  }
}

// Elementwise membership of a window element in an OGSubset.
bool contains(const OGSubset& a, OGElem x) {
  return a.is_interval() ? x <= a.upper : x == a.upper;
}

}  // namespace

OGSubset OGSubset::parse(std::string_view text) {
  if (text.starts_with("[bot,") && text.ends_with("]")) {
    return down(parse_elem(text.substr(5, text.size() - 6)));
  }
  return singleton(parse_elem(text));
}

OGSubset hgamma_add(OGElem x, OGElem y) {
  if (x != y) return OGSubset::singleton(std::max(x, y));
  return OGSubset::down(x);
}

OGElem hgamma_mul(OGElem x, OGElem y) {
  if (x.is_bottom() || y.is_bottom()) return OGElem::bottom();
  return OGElem::of(*x.value + *y.value);
}

OGSubset kgamma_add(const OGSubset& a, const OGSubset& b) {
  if (!a.is_interval() && !b.is_interval()) return hgamma_add(a.upper, b.upper);
  if (!a.is_interval()) return a.upper <= b.upper ? b : a;
  if (!b.is_interval()) return b.upper <= a.upper ? a : b;
  return b.upper < a.upper ? a : b;
}

OGSubset kgamma_mul(const OGSubset& a, const OGSubset& b) {
  const OGElem u = hgamma_mul(a.upper, b.upper);
  if (a.is_interval() || b.is_interval()) return OGSubset::down(u);
  return OGSubset::singleton(u);
}

// --- windows -------------------------------------------------------------------------

std::vector<OGElem> hgamma_window(long long b) {
  std::vector<OGElem> out{OGElem::bottom()};
  for (long long v = -b; v <= b; ++v) out.push_back(OGElem::of(v));
  return out;
}

std::vector<OGSubset> kgamma_window(long long b) {
  std::vector<OGSubset> out{OGSubset::singleton(OGElem::bottom())};
  for (long long v = -b; v <= b; ++v) {
    out.push_back(OGSubset::singleton(OGElem::of(v)));
    out.push_back(OGSubset::down(OGElem::of(v)));
  }
  return out;
}

SubsetMask window_singleton(OGElem x, long long b) {
  if (!x.is_bottom() && (*x.value < -3 * b || *x.value > 3 * b)) {
    throw AlgebraError("value " + x.to_string() + " outside the window of bound " +
                       std::to_string(b));
  }
  return SubsetMask::singleton(code(x, b));
}

SubsetMask window_mask(const OGSubset& a, long long b) {
  SubsetMask m = window_singleton(a.upper, b);
  if (a.is_interval()) {
    m.insert(0);
    for (long long v = -3 * b; v < *a.upper.value; ++v) m.insert(code(OGElem::of(v), b));
  }
  return m;
}

namespace {

OGElem decode(Elem i, long long b) {
  return i == 0 ? OGElem::bottom() : OGElem::of(static_cast<long long>(i) - 3 * b - 1);
}

}  // namespace

SubsetMask window_add(SubsetMask x, SubsetMask y, long long b) {
  SubsetMask out;
  for (Elem i : x) {
    for (Elem j : y) out |= window_mask(hgamma_add(decode(i, b), decode(j, b)), b);
  }
  return out;
}

SubsetMask window_mul(SubsetMask x, SubsetMask y, long long b) {
  SubsetMask out;
  for (Elem i : x) {
    for (Elem j : y) {
      const OGElem p = hgamma_mul(decode(i, b), decode(j, b));
      if (p.is_bottom() || (*p.value >= -3 * b && *p.value <= 3 * b)) out.insert(code(p, b));
    }
  }
  return out;
}

SubsetMask window_trim(SubsetMask x, long long lim, long long b) {
  SubsetMask out;
  for (Elem i : x) {
    const OGElem e = decode(i, b);
    if (e.is_bottom() || (*e.value >= -lim && *e.value <= lim)) out.insert(i);
  }
  return out;
}

AxiomReport check_hgamma_window(long long b) {
  check_window_bound(b);
  AxiomReport rep;
  const auto w = hgamma_window(b);
  const OGElem bot = OGElem::bottom();
  auto mask = [b](OGElem x) { return window_singleton(x, b); };
  for (OGElem x : w) {
    if (hgamma_add(x, bot) != OGSubset::singleton(x)) rep.add("identity", {code(x, b)});
    std::size_t inverses = 0;
    for (OGElem y : w) inverses += contains(hgamma_add(x, y), bot) ? 1 : 0;
    if (inverses != 1 || !contains(hgamma_add(x, x), bot)) rep.add("inverse", {code(x, b)});
    for (OGElem y : w) {
      if (hgamma_add(x, y) != hgamma_add(y, x)) rep.add("commutativity", {code(x, b), code(y, b)});
      for (OGElem z : w) {
        const SubsetMask left = window_add(window_add(mask(x), mask(y), b), mask(z), b);
        const SubsetMask right = window_add(mask(x), window_add(mask(y), mask(z), b), b);
        if (left != right) rep.add("associativity", {code(x, b), code(y, b), code(z, b)});
        // Every element is its own inverse.
        if (contains(hgamma_add(y, z), x) && !contains(hgamma_add(x, y), z)) {
          rep.add("reversibility", {code(x, b), code(y, b), code(z, b)});
        }
      }
    }
  }
  return rep;
}

AxiomReport check_hgamma_dd_window(long long b) {
  check_window_bound(b);
  AxiomReport rep;
  const auto w = hgamma_window(b);
  auto mask = [b](OGElem x) { return window_singleton(x, b); };
  for (OGElem x1 : w) {
    for (OGElem x2 : w) {
      const SubsetMask s = window_add(mask(x1), mask(x2), b);
      for (OGElem y1 : w) {
        for (OGElem y2 : w) {
          // Products of operands down to -3B and up to B cover [-2B, 2B].
          const SubsetMask t = window_add(mask(y1), mask(y2), b);
          const SubsetMask left = window_trim(window_mul(s, t, b), 2 * b, b);
          SubsetMask right = mask(hgamma_mul(x1, y1));
          for (OGElem p : {hgamma_mul(x1, y2), hgamma_mul(x2, y1), hgamma_mul(x2, y2)}) {
            right = window_add(right, mask(p), b);
          }
          if (left != window_trim(right, 2 * b, b)) {
            rep.add("double-distributivity", {code(x1, b), code(x2, b), code(y1, b), code(y2, b)});
          }
        }
      }
    }
  }
  return rep;
}

AxiomReport check_kgamma_fuzzy_window(long long b) {
  check_window_bound(b);
  AxiomReport rep;
  const auto k = kgamma_window(b);
  const OGSubset zero = OGSubset::singleton(OGElem::bottom());
  const OGSubset one = kgamma_one();
  const OGSubset eps = kgamma_one();
  auto c = [b](const OGSubset& a) { return code(a, b); };
  auto is_unit = [](const OGSubset& a) { return !a.is_interval() && !a.upper.is_bottom(); };

  for (const auto& x : k) {
    if (kgamma_add(x, zero) != x) rep.add("FR0 additive identity", {c(x)});
    if (kgamma_mul(x, one) != x) rep.add("FR0 multiplicative identity", {c(x)});
    if (kgamma_mul(zero, x) != zero) rep.add("FR1", {c(x)});
    for (const auto& y : k) {
      if (kgamma_add(x, y) != kgamma_add(y, x)) rep.add("FR0 additive commutativity", {c(x), c(y)});
      if (kgamma_mul(x, y) != kgamma_mul(y, x)) {
        rep.add("FR0 multiplicative commutativity", {c(x), c(y)});
      }
      for (const auto& z : k) {
        if (kgamma_add(kgamma_add(x, y), z) != kgamma_add(x, kgamma_add(y, z))) {
          rep.add("FR0 additive associativity", {c(x), c(y), c(z)});
        }
        if (kgamma_mul(kgamma_mul(x, y), z) != kgamma_mul(x, kgamma_mul(y, z))) {
          rep.add("FR0 multiplicative associativity", {c(x), c(y), c(z)});
        }
        if (is_unit(x) &&
            kgamma_mul(x, kgamma_add(y, z)) != kgamma_add(kgamma_mul(x, y), kgamma_mul(x, z))) {
          rep.add("FR2", {c(x), c(y), c(z)});
        }
      }
    }
  }
  if (kgamma_mul(eps, eps) != one) rep.add("FR3", {c(eps)});
  if (!zero.is_null()) rep.add("FR4 zero null", {c(zero)});
  if (one.is_null()) rep.add("FR4 one not null", {c(one)});
  for (const auto& x : k) {
    if (!x.is_null()) continue;
    for (const auto& y : k) {
      if (y.is_null() && !kgamma_add(x, y).is_null()) rep.add("FR4 sum of nulls", {c(x), c(y)});
      if (!kgamma_mul(x, y).is_null()) rep.add("FR4 ideal", {c(x), c(y)});
    }
  }
  for (const auto& u : k) {
    if (is_unit(u) && kgamma_add(one, u).is_null() != (u == eps)) rep.add("FR5", {c(u)});
  }
  for (const auto& x1 : k) {
    for (const auto& x2 : k) {
      const bool first_null = kgamma_add(x1, x2).is_null();
      for (const auto& y1 : k) {
        for (const auto& y2 : k) {
          if (first_null && kgamma_add(y1, y2).is_null() &&
              !kgamma_add(kgamma_mul(x1, y1), kgamma_mul(eps, kgamma_mul(x2, y2))).is_null()) {
            rep.add("FR6", {c(x1), c(x2), c(y1), c(y2)});
          }
          // FR7 with a = x1, b = x2, c = y1, d = y2.
          if (kgamma_add(x1, kgamma_mul(x2, kgamma_add(y1, y2))).is_null() &&
              !kgamma_add(x1, kgamma_add(kgamma_mul(x2, y1), kgamma_mul(x2, y2))).is_null()) {
            rep.add("FR7", {c(x1), c(x2), c(y1), c(y2)});
          }
        }
      }
    }
  }
  return rep;
}

AxiomReport check_kgamma_assoc_window(long long b) {
  check_window_bound(b);
  AxiomReport rep;
  const auto k = kgamma_window(b);
  for (const auto& x : k) {
    for (const auto& y : k) {
      for (const auto& z : k) {
        if (kgamma_add(kgamma_add(x, y), z) != kgamma_add(x, kgamma_add(y, z))) {
          rep.add("additive associativity", {code(x, b), code(y, b), code(z, b)});
        }
      }
    }
  }
  return rep;
}

FbarIsoReport check_fbar_hgamma_iso_kgamma(long long b) {
  check_window_bound(b);
  FbarIsoReport out;
  const auto h = hgamma_window(b);
  const auto k = kgamma_window(b);

  for (OGElem x : h) {
    for (OGElem y : h) {
      if (x.is_bottom() || y.is_bottom()) continue;
      ++out.hgamma_pairs;
      if (window_mask(hgamma_add(x, y), b) !=
          window_add(window_singleton(x, b), window_singleton(y, b), b)) {
        out.report.add("pair sum", {code(x, b), code(y, b)});
      }
    }
  }

  // (i) iterated sums by one-element extension.
  std::set<std::uint64_t> seen;
  std::vector<SubsetMask> frontier;
  for (OGElem x : h) {
    if (seen.insert(window_singleton(x, b).bits()).second) frontier.push_back(window_singleton(x, b));
  }
  while (!frontier.empty()) {
    const SubsetMask s = frontier.back();
    frontier.pop_back();
    for (OGElem x : h) {
      const SubsetMask t = window_add(s, window_singleton(x, b), b);
      if (seen.insert(t.bits()).second) frontier.push_back(t);
    }
  }
  std::set<std::uint64_t> expected;
  for (const auto& a : k) expected.insert(window_mask(a, b).bits());
  out.closure_sums = seen.size();
  for (std::uint64_t bits : seen) {
    if (!expected.contains(bits)) out.report.add("iterated sum shape", SubsetMask(bits).elements());
  }
  for (std::uint64_t bits : expected) {
    if (!seen.contains(bits)) out.report.add("unreached element", SubsetMask(bits).elements());
  }

  // (ii) operations, (iii) nulls.
  for (const auto& x : k) {
    if (x.is_null() != window_mask(x, b).contains(0)) out.report.add("null", {code(x, b)});
    for (const auto& y : k) {
      ++out.add_cases;
      if (window_mask(kgamma_add(x, y), b) != window_add(window_mask(x, b), window_mask(y, b), b)) {
        out.report.add("addition", {code(x, b), code(y, b)});
      }
      ++out.mul_cases;
      const SubsetMask sym = window_trim(window_mask(kgamma_mul(x, y), b), 2 * b, b);
      const SubsetMask masked =
          window_trim(window_mul(window_mask(x, b), window_mask(y, b), b), 2 * b, b);
      if (sym != masked) out.report.add("multiplication", {code(x, b), code(y, b)});
    }
  }

  // epsilon is the singleton of the unique y with bottom in 1 + y.
  std::vector<OGElem> neg_one;
  for (OGElem y : h) {
    if (contains(hgamma_add(OGElem::of(0), y), OGElem::bottom())) neg_one.push_back(y);
  }
  if (neg_one.size() != 1) {
    out.report.add("epsilon", {static_cast<Elem>(neg_one.size())});
  } else {
    out.epsilon = OGSubset::singleton(neg_one.front());
    if (out.epsilon != kgamma_one()) out.report.add("epsilon", {code(out.epsilon, b)});
  }
  return out;
}

SubsetMask kgamma_embed(const OGSubset& a, long long b) {
  check_window_bound(b);
  return window_mask(a, b);
}

AxiomReport check_kgamma_embed_window(long long b) {
  check_window_bound(b);
  AxiomReport rep;
  const auto k = kgamma_window(b);
  std::set<std::uint64_t> images;
  if (kgamma_embed(kgamma_one(), b) != window_singleton(OGElem::of(0), b)) rep.add("one", {});
  if (kgamma_embed(OGSubset::singleton(OGElem::bottom()), b) != SubsetMask::singleton(0)) {
    rep.add("zero", {});
  }
  for (const auto& x : k) {
    const SubsetMask ex = kgamma_embed(x, b);
    if (!images.insert(ex.bits()).second) rep.add("injective", {code(x, b)});
    if (x.is_null() != ex.contains(0)) rep.add("null", {code(x, b)});
    for (const auto& y : k) {
      const SubsetMask ey = kgamma_embed(y, b);
      if (kgamma_embed(kgamma_add(x, y), b) != window_add(ex, ey, b)) {
        rep.add("additive", {code(x, b), code(y, b)});
      }
      if (window_trim(kgamma_embed(kgamma_mul(x, y), b), 2 * b, b) !=
          window_trim(window_mul(ex, ey, b), 2 * b, b)) {
        rep.add("multiplicative", {code(x, b), code(y, b)});
      }
    }
  }
  return rep;
}

// --- Zariski systems -----------------------------------------------------------------

AxiomReport check_zariski(const ZariskiSystem& s) {
  AxiomReport rep;
  const std::size_t m = s.points.size();
  for (Elem f = 0; f < s.functions.size(); ++f) {
    if (s.functions[f].values.size() != m) rep.add("shape", {f});
  }
  if (!rep.passed()) return rep;
  for (Elem p = 0; p < m; ++p) {
    const bool covered = std::any_of(s.functions.begin(), s.functions.end(),
                                     [p](const ZariskiFunction& f) { return !f.values[p].is_null(); });
    if (!covered) rep.add("Z2", {p});
  }
  return rep;
}

PushedZariskiSystem pushforward_zariski(const ZariskiSystem& s, long long b) {
  PushedZariskiSystem out;
  out.points = s.points;
  out.window = b;
  for (const auto& f : s.functions) {
    out.names.push_back(f.name);
    std::vector<SubsetMask> row;
    for (const auto& v : f.values) row.push_back(kgamma_embed(v, b));
    out.values.push_back(std::move(row));
  }
  return out;
}

std::vector<bool> zero_set(const ZariskiSystem& s, const std::vector<std::size_t>& t) {
  std::vector<bool> out(s.points.size(), true);
  for (std::size_t f : t) {
    for (std::size_t p = 0; p < out.size(); ++p) {
      if (!s.functions.at(f).values.at(p).is_null()) out[p] = false;
    }
  }
  return out;
}

std::vector<bool> zero_set(const PushedZariskiSystem& s, const std::vector<std::size_t>& t) {
  std::vector<bool> out(s.points.size(), true);
  for (std::size_t f : t) {
    for (std::size_t p = 0; p < out.size(); ++p) {
      if (!s.values.at(f).at(p).contains(0)) out[p] = false;
    }
  }
  return out;
}

AxiomReport check_zero_sets_preserved(const ZariskiSystem& s, long long b) {
  AxiomReport rep = check_zariski(s);
  if (!rep.passed()) return rep;
  if (s.functions.size() > 16) throw CapExceeded("zero-set sweep is limited to 16 generators");
  const PushedZariskiSystem pushed = pushforward_zariski(s, b);
  for (Elem p = 0; p < s.points.size(); ++p) {
    bool covered = false;
    for (const auto& row : pushed.values) covered = covered || !row[p].contains(0);
    if (!covered) rep.add("pushed Z2", {p});
  }
  const std::uint32_t subsets = 1U << s.functions.size();
  for (std::uint32_t bits = 0; bits < subsets; ++bits) {
    std::vector<std::size_t> t;
    for (std::size_t f = 0; f < s.functions.size(); ++f) {
      if ((bits >> f) & 1U) t.push_back(f);
    }
    if (zero_set(s, t) != zero_set(pushed, t)) rep.add("zero set", {bits});
  }
  return rep;
}

// --- F1 is not full -------------------------------------------------------------------

F1NotFullReport check_f1notfull() {
  F1NotFullReport out;
  const PartialDemifield p = F1(krasner());
  // S(K) is ordered {0}, {1}, K.
  const std::vector<OGSubset> f{OGSubset::singleton(OGElem::bottom()), kgamma_one(),
                                OGSubset::down(OGElem::of(0))};
  for (Elem a = 0; a < p.size(); ++a) {
    for (Elem b = 0; b < p.size(); ++b) {
      if (f[p.add.at(a, b)] != kgamma_add(f[a], f[b])) out.semiring.add("additive", {a, b});
      if (f[p.mul.at(a, b)] != kgamma_mul(f[a], f[b])) out.semiring.add("multiplicative", {a, b});
    }
  }

  const FiniteHyperring& k = p.hyperfield;
  const std::vector<OGElem> h{f[p.embedding[0]].upper, f[p.embedding[1]].upper};
  if (h[0] != OGElem::bottom()) out.restriction.add("zero", {});
  if (h[1] != OGElem::of(0)) out.restriction.add("one", {});
  out.strict_hom_exists = false;
  for (Elem a = 0; a < 2; ++a) {
    for (Elem b = 0; b < 2; ++b) {
      if (hgamma_mul(h[a], h[b]) != h[k.mul(a, b)]) out.restriction.add("multiplicative", {a, b});
      for (Elem c : k.add(a, b)) {
        if (!contains(hgamma_add(h[a], h[b]), h[c])) out.restriction.add("additive", {a, b, c});
      }
    }
  }
  // A hom K -> H_Z sends 1 to an idempotent unit, hence to 0; so the map
  // above is the only candidate. It is strict iff every image of a sum
  // equals the target sum. A down-interval is infinite and never equals a
  // finite image.
  bool strict = out.restriction.passed();
  for (Elem a = 0; a < 2 && strict; ++a) {
    for (Elem b = 0; b < 2 && strict; ++b) {
      const OGSubset target = hgamma_add(h[a], h[b]);
      std::set<OGElem> img;
      for (Elem c : k.add(a, b)) img.insert(h[c]);
      strict = !target.is_interval() && img == std::set<OGElem>{target.upper};
    }
  }
  out.strict_hom_exists = strict;
  return out;
}

}  // namespace hyperalg
