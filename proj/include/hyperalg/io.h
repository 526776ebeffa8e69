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

// JSON structure files (schema version "1").
//
//   hyperring:  labels, partial, add (rows of index sets), mul (rows)
//   fuzzyring:  labels, add, mul (rows), k0 (sorted), epsilon, units (sorted)
//   gp:         n, r, coefficient (a nested hyperring or fuzzyring), values
//   zariski:    points, functions [{name, values: ["2", "[bot,1]", "bot"]}]
//
// The canonical text form has a fixed key order and fixed layout, so equal
// structures produce identical bytes.

#ifndef HYPERALG_IO_H_
#define HYPERALG_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "hyperalg/fuzzy.h"
#include "hyperalg/hyper.h"
#include "hyperalg/matroid.h"
#include "hyperalg/ordgrp.h"

namespace hyperalg {

inline constexpr std::string_view kSchemaVersion = "1";

// Malformed input: bad JSON, wrong schema, or tables that do not describe a
// structure. Kept apart from AlgebraError so callers can map it to a usage
// failure.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GPFile {
  std::variant<FiniteHyperring, FiniteFuzzyRing> coefficient;
  GPFunction phi;
};

using Structure = std::variant<FiniteHyperring, FiniteFuzzyRing, GPFile, ZariskiSystem>;

std::string_view kind_of(const Structure& s);

nlohmann::ordered_json to_json(const FiniteHyperring& r);
nlohmann::ordered_json to_json(const FiniteFuzzyRing& k);
nlohmann::ordered_json to_json(const GPFile& g);
nlohmann::ordered_json to_json(const ZariskiSystem& z);
nlohmann::ordered_json to_json(const Structure& s);

Structure from_json(const nlohmann::ordered_json& j);

// Tables print one row per line, flat arrays print inline, and everything
// else is indented.
std::string emit_canonical(const nlohmann::ordered_json& j);
std::string emit_canonical(const Structure& s);

Structure parse_structure(std::string_view text);

// A file path, or "builtin:NAME" for the named hyperrings, the fuzzy rings
// "krasnerfuzzy" and "signfuzzy", and "unitfield-z".
Structure load_structure(const std::string& ref);
void save_structure(const Structure& s, const std::string& path);

}  // namespace hyperalg

#endif  // HYPERALG_IO_H_
