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

#include "hyperalg/core.h"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace hyperalg {

SubsetMask extend_hyperop(const HyperTable& add, SubsetMask a, SubsetMask b) {
  SubsetMask out;
  for (Elem x : a) {
    for (Elem y : b) out |= add.at(x, y);
  }
  return out;
}

SubsetMask iterated_hypersum(const HyperTable& add, std::span<const Elem> elems) {
  if (elems.empty()) throw AlgebraError("iterated_hypersum: empty list");
  SubsetMask acc = SubsetMask::singleton(elems.front());
  for (Elem e : elems.subspan(1)) {
    acc = extend_hyperop(add, acc, SubsetMask::singleton(e));
  }
  return acc;
}

SubsetMask extend_op(const OpTable& op, SubsetMask a, SubsetMask b) {
  SubsetMask out;
  for (Elem x : a) {
    for (Elem y : b) out.insert(op.at(x, y));
  }
  return out;
}

SubsetMask image(std::span<const Elem> map, SubsetMask a) {
  SubsetMask out;
  for (Elem x : a) out.insert(map[x]);
  return out;
}

std::size_t powerset_cap() {
  if (const char* env = std::getenv("HYPERALG_MAX_POWERSET")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      return std::min<std::size_t>(static_cast<std::size_t>(v), kPowersetHardCap);
    }
  }
  return 8;
}

void AxiomReport::add(std::string axiom, std::vector<Elem> witness) {
  ++total_;
  if (violations_.size() < kMaxStored) {
    violations_.push_back({std::move(axiom), std::move(witness)});
  }
}

void AxiomReport::merge(const AxiomReport& other) {
  for (const auto& v : other.violations_) {
    if (violations_.size() < kMaxStored) violations_.push_back(v);
  }
  total_ += other.total_;
}

bool AxiomReport::has(std::string_view axiom) const {
  return std::any_of(violations_.begin(), violations_.end(),
                     [&](const Violation& v) { return v.axiom == axiom; });
}

std::string AxiomReport::describe() const {
  std::ostringstream os;
  for (const auto& v : violations_) {
    os << v.axiom << ": (";
    for (std::size_t i = 0; i < v.witness.size(); ++i) {
      if (i) os << ", ";
      os << v.witness[i];
    }
    os << ")\n";
  }
  if (total_ > violations_.size()) {
    os << "... " << (total_ - violations_.size()) << " more\n";
  }
  return os.str();
}

std::string_view to_string(MorphismKind kind) {
  switch (kind) {
    case MorphismKind::kWeak:
      return "weak";
    case MorphismKind::kStrong:
      return "strong";
    case MorphismKind::kHyperringHom:
      return "hyperring-hom";
  }
  return "unknown";
}

}  // namespace hyperalg
