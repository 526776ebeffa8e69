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

#include "hyperalg/io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hyperalg/functors.h"

namespace hyperalg {

using Json = nlohmann::ordered_json;

namespace {

Json header(std::string_view kind) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  return j;
}

Json op_rows(const OpTable& t) {
  Json rows = Json::array();
  for (Elem a = 0; a < t.size(); ++a) rows.push_back(Json(std::vector<Elem>(t.row(a).begin(), t.row(a).end())));
  return rows;
}

std::vector<Elem> sorted_indices(const std::vector<bool>& flags) {
  std::vector<Elem> out;
  for (Elem i = 0; i < flags.size(); ++i) {
    if (flags[i]) out.push_back(i);
  }
  return out;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

Elem index_value(const Json& v, std::size_t n, const char* what) {
  if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= n) {
    throw ParseError(std::string(what) + ": expected an index below " + std::to_string(n));
  }
  return v.get<Elem>();
}

std::vector<std::string> read_labels(const Json& j, std::size_t n) {
  if (!j.contains("labels")) return {};
  std::vector<std::string> labels;
  try {
    labels = j.at("labels").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError("labels must be strings");
  }
  if (labels.size() != n) throw ParseError("labels: expected " + std::to_string(n) + " entries");
  return labels;
}

std::size_t read_size(const Json& rows, const char* what) {
  if (!rows.is_array() || rows.empty()) throw ParseError(std::string(what) + ": expected a nonempty array of rows");
  const std::size_t n = rows.size();
  if (n > kMaxCarrier * 4) throw ParseError(std::string(what) + ": carrier too large");
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string(what) + ": every row must have " + std::to_string(n) + " entries");
    }
  }
  return n;
}

OpTable read_op(const Json& rows, std::size_t n, const char* what) {
  if (read_size(rows, what) != n) throw ParseError(std::string(what) + ": size mismatch");
  OpTable t(n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) t.at(a, b) = index_value(rows[a][b], n, what);
  }
  return t;
}

FiniteHyperring hyperring_from(const Json& j) {
  const Json& add = field(j, "add");
  const std::size_t n = read_size(add, "add");
  if (n > kMaxCarrier) throw ParseError("hyperring carriers are limited to 64 elements");
  HyperTable t(n, SubsetMask{});
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Json& cell = add[a][b];
      if (!cell.is_array()) throw ParseError("add: each cell must be an array of indices");
      for (const auto& v : cell) t.at(a, b).insert(index_value(v, n, "add"));
    }
  }
  const bool partial = j.value("partial", false);
  try {
    return FiniteHyperring(std::move(t), read_op(field(j, "mul"), n, "mul"), partial, read_labels(j, n));
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
}

FiniteFuzzyRing fuzzyring_from(const Json& j) {
  const Json& add = field(j, "add");
  const std::size_t n = read_size(add, "add");
  OpTable a = read_op(add, n, "add");
  OpTable m = read_op(field(j, "mul"), n, "mul");
  std::vector<bool> k0(n, false);
  const Json& nulls = field(j, "k0");
  if (!nulls.is_array()) throw ParseError("k0: expected an array");
  for (const auto& v : nulls) k0[index_value(v, n, "k0")] = true;
  std::optional<Elem> eps;
  if (j.contains("epsilon")) eps = index_value(j.at("epsilon"), n, "epsilon");
  try {
    FiniteFuzzyRing k(std::move(a), std::move(m), std::move(k0), eps, read_labels(j, n));
    if (j.contains("units")) {
      std::vector<Elem> listed;
      for (const auto& v : j.at("units")) listed.push_back(index_value(v, n, "units"));
      if (listed != k.units()) throw ParseError("units: listed set differs from the invertible elements");
    }
    return k;
  } catch (const AlgebraError& e) {
    throw ParseError(e.what());
  }
}

ZariskiSystem zariski_from(const Json& j) {
  ZariskiSystem z;
  try {
    z.points = field(j, "points").get<std::vector<std::string>>();
    for (const auto& f : field(j, "functions")) {
      ZariskiFunction fn;
      fn.name = field(f, "name").get<std::string>();
      for (const auto& v : field(f, "values")) fn.values.push_back(OGSubset::parse(v.get<std::string>()));
      if (fn.values.size() != z.points.size()) {
        throw ParseError("function '" + fn.name + "' needs one value per point");
      }
      z.functions.push_back(std::move(fn));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("zariski: ") + e.what());
  } catch (const AlgebraError& e) {
    throw ParseError(std::string("zariski: ") + e.what());
  }
  return z;
}

GPFile gp_from(const Json& j) {
  const Structure coeff = from_json(field(j, "coefficient"));
  GPFile g{FiniteHyperring(HyperTable(1, SubsetMask::of({0})), OpTable(1, 0)), {}};
  if (const auto* h = std::get_if<FiniteHyperring>(&coeff)) {
    g.coefficient = *h;
  } else if (const auto* k = std::get_if<FiniteFuzzyRing>(&coeff)) {
    g.coefficient = *k;
  } else {
    throw ParseError("gp: coefficient must be a hyperring or a fuzzyring");
  }
  const Json& n = field(j, "n");
  const Json& r = field(j, "r");
  if (!n.is_number_unsigned() || !r.is_number_unsigned()) throw ParseError("gp: n and r must be nonnegative integers");
  g.phi.n = n.get<std::size_t>();
  g.phi.r = r.get<std::size_t>();
  if (g.phi.n == 0 || g.phi.n > kMaxGroundSet || g.phi.r == 0 || g.phi.r > std::min(g.phi.n, kMaxGPRank)) {
    throw ParseError("gp: unsupported n or r");
  }
  const std::size_t size = std::visit([](const auto& c) { return c.size(); }, g.coefficient);
  for (const auto& v : field(j, "values")) g.phi.values.push_back(index_value(v, size, "values"));
  if (g.phi.values.size() != r_subsets(g.phi.n, g.phi.r).size()) {
    throw ParseError("gp: expected one value per r-subset");
  }
  return g;
}

// [0, 1, [2, 3]] on one line.
std::string compact(const Json& j) {
  if (!j.is_array()) return j.dump();
  std::string out = "[";
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (i) out += ", ";
    out += compact(j[i]);
  }
  return out + "]";
}

// Operation tables: one compact row per line.
void emit_rows(const Json& rows, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  out += "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out += pad + "  " + compact(rows[i]);
    if (i + 1 < rows.size()) out += ",";
    out += "\n";
  }
  out += pad + "]";
}

void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(indent, ' ');
  auto depth = [](const Json& v, auto&& self) -> int {
    if (v.is_object()) return 100;
    if (!v.is_array()) return 0;
    int d = 1;
    for (const auto& e : v) d = std::max(d, 1 + self(e, self));
    return d;
  };
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + "  " + Json(key).dump() + ": ";
      if ((key == "add" || key == "mul") && value.is_array()) {
        emit_rows(value, indent + 2, out);
      } else {
        emit(value, indent + 2, out);
      }
    }
    out += "\n" + pad + "}";
  } else if (j.is_array() && depth(j, depth) > 1) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad + "  ";
      emit(j[i], indent + 2, out);
      if (i + 1 < j.size()) out += ",";
      out += "\n";
    }
    out += pad + "]";
  } else {
    out += compact(j);
  }
}

}  // namespace

std::string_view kind_of(const Structure& s) {
  switch (s.index()) {
    case 0: return "hyperring";
    case 1: return "fuzzyring";
    case 2: return "gp";
    default: return "zariski";
  }
}

Json to_json(const FiniteHyperring& r) {
  Json j = header("hyperring");
  j["labels"] = r.labels();
  j["partial"] = r.partial();
  Json rows = Json::array();
  for (Elem a = 0; a < r.size(); ++a) {
    Json row = Json::array();
    for (Elem b = 0; b < r.size(); ++b) row.push_back(r.add(a, b).elements());
    rows.push_back(std::move(row));
  }
  j["add"] = std::move(rows);
  j["mul"] = op_rows(r.mul_table());
  return j;
}

Json to_json(const FiniteFuzzyRing& k) {
  Json j = header("fuzzyring");
  j["labels"] = k.labels();
  j["add"] = op_rows(k.add_table());
  j["mul"] = op_rows(k.mul_table());
  j["k0"] = sorted_indices(k.k0());
  if (k.epsilon() < k.size()) j["epsilon"] = k.epsilon();
  j["units"] = k.units();
  return j;
}

Json to_json(const GPFile& g) {
  Json j = header("gp");
  j["n"] = g.phi.n;
  j["r"] = g.phi.r;
  j["coefficient"] = std::visit([](const auto& c) { return to_json(c); }, g.coefficient);
  j["values"] = g.phi.values;
  return j;
}

Json to_json(const ZariskiSystem& z) {
  Json j = header("zariski");
  j["points"] = z.points;
  Json fns = Json::array();
  for (const auto& f : z.functions) {
    Json fj;
    fj["name"] = f.name;
    Json vals = Json::array();
    for (const auto& v : f.values) vals.push_back(v.to_string());
    fj["values"] = std::move(vals);
    fns.push_back(std::move(fj));
  }
  j["functions"] = std::move(fns);
  return j;
}

Json to_json(const Structure& s) {
  return std::visit([](const auto& v) { return to_json(v); }, s);
}

Structure from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("structure file must be a JSON object");
  const Json& version = field(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw ParseError("unsupported schema_version (expected \"1\")");
  }
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "hyperring") return hyperring_from(j);
  if (k == "fuzzyring") return fuzzyring_from(j);
  if (k == "gp") return gp_from(j);
  if (k == "zariski") return zariski_from(j);
  throw ParseError("unknown kind '" + k + "'");
}

std::string emit_canonical(const Json& j) {
  std::string out;
  emit(j, 0, out);
  return out + "\n";
}

std::string emit_canonical(const Structure& s) { return emit_canonical(to_json(s)); }

Structure parse_structure(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

Structure load_structure(const std::string& ref) {
  constexpr std::string_view kBuiltin = "builtin:";
  if (ref.starts_with(kBuiltin)) {
    const std::string name = ref.substr(kBuiltin.size());
    const auto fuzzy = builtin_fuzzy_names();
    if (std::find(fuzzy.begin(), fuzzy.end(), name) != fuzzy.end()) return builtin_fuzzy(name);
    if (name == "unitfield-z") return unit_field_of_integers();
    try {
      return builtin_hyperring(name);
    } catch (const AlgebraError& e) {
      throw ParseError(e.what());
    }
  }
  std::ifstream in(ref);
  if (!in) throw ParseError("cannot open '" + ref + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

void save_structure(const Structure& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << emit_canonical(s);
}

}  // namespace hyperalg
