// Copyright 2026 The qpfree Authors.
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

#include "qpfree/io.hpp"

#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qpfree/error.hpp"

namespace qpfree {
namespace {

using Json = nlohmann::json;

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("top level must be an object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

Alphabet parse_points(const Json& doc) {
  const Json& pts = field(doc, "points");
  if (!pts.is_array()) throw ParseError("'points' must be a list of symbols");
  std::vector<std::string> symbols;
  for (const auto& p : pts) {
    if (!p.is_string()) throw ParseError("'points' must be a list of symbols");
    symbols.push_back(p.get<std::string>());
  }
  return Alphabet(std::move(symbols));
}

void require_square(const Json& matrix, std::size_t n, const char* name) {
  if (!matrix.is_array() || matrix.size() != n) {
    throw ParseError(std::string("'") + name + "' must have one row per point");
  }
  for (const auto& row : matrix) {
    if (!row.is_array() || row.size() != n) {
      throw ParseError(std::string("'") + name + "' must have one column per point");
    }
  }
}

Rational parse_entry(const Json& v) {
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  throw ParseError("distance entries must be integers or strings \"p/q\"");
}

Entourage entourage_from_json(const Json& matrix, const Alphabet& points) {
  const std::size_t n = points.size();
  require_square(matrix, n, "relation");
  std::vector<std::vector<bool>> bits(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const Json& v = matrix[x][y];
      if (v.is_boolean()) {
        bits[x][y] = v.get<bool>();
      } else if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) {
        bits[x][y] = v.get<int>() == 1;
      } else {
        throw ParseError("relation entries must be 0 or 1");
      }
    }
  }
  Entourage u = Entourage::from_matrix(points, bits);
  if (!u.is_reflexive()) throw ValidationError("relation is not reflexive");
  return u;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SpaceFile parse_space(std::string_view text) {
  const Json doc = parse_json(text);
  Alphabet points = parse_points(doc);
  const std::size_t n = points.size();
  const Json& dist = field(doc, "dist");
  require_square(dist, n, "dist");
  DistanceMatrix m(n, std::vector<Rational>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      m[x][y] = parse_entry(dist[x][y]);
    }
    if (!m[x][x].is_zero()) {
      throw ParseError("diagonal entry for '" + points.symbol(static_cast<int>(x)) +
                       "' must be 0");
    }
  }
  SpaceFile out{QPSpace(std::move(points), std::move(m)), std::nullopt};
  if (auto it = doc.find("bounded_by_one"); it != doc.end()) {
    if (!it->is_boolean()) throw ParseError("'bounded_by_one' must be true or false");
    out.bounded_by_one = it->get<bool>();
  }
  return out;
}

SpaceFile read_space(const std::filesystem::path& path) {
  return parse_space(read_text_file(path));
}

std::string format_space(const QPSpace& space) {
  bool bounded = true;
  std::string out = "{\n  \"points\": " + Json(space.points().symbols()).dump() +
                    ",\n  \"dist\": [\n";
  const auto& m = space.matrix();
  for (std::size_t x = 0; x < m.size(); ++x) {
    out += "    [";
    for (std::size_t y = 0; y < m.size(); ++y) {
      bounded = bounded && m[x][y] <= Rational(1);
      out += Json(m[x][y].str()).dump();
      if (y + 1 < m.size()) out += ", ";
    }
    out += x + 1 < m.size() ? "],\n" : "]\n";
  }
  out += "  ],\n  \"bounded_by_one\": ";
  out += bounded ? "true" : "false";
  return out + "\n}\n";
}

Entourage parse_entourage(std::string_view text) {
  const Json doc = parse_json(text);
  const Alphabet points = parse_points(doc);
  return entourage_from_json(field(doc, "relation"), points);
}

Entourage read_entourage(const std::filesystem::path& path) {
  return parse_entourage(read_text_file(path));
}

std::string format_entourage(const Entourage& u) {
  std::string out = "{\n  \"points\": " + Json(u.points().symbols()).dump() +
                    ",\n  \"relation\": [\n";
  const int n = static_cast<int>(u.size());
  for (int x = 0; x < n; ++x) {
    out += "    [";
    for (int y = 0; y < n; ++y) {
      out += u.contains(x, y) ? "1" : "0";
      if (y + 1 < n) out += ", ";
    }
    out += x + 1 < n ? "],\n" : "]\n";
  }
  return out + "  ]\n}\n";
}

EntourageSequence parse_sequence(std::string_view text, const std::filesystem::path& base_dir) {
  const Json doc = parse_json(text);
  const Alphabet points = parse_points(doc);
  const Json& list = field(doc, "entourages");
  if (!list.is_array() || list.empty()) {
    throw ParseError("'entourages' must be a non-empty list");
  }
  std::vector<Entourage> items;
  for (const auto& entry : list) {
    if (entry.is_string()) {
      Entourage u = read_entourage(base_dir / entry.get<std::string>());
      if (u.points() != points) {
        throw StructuralError("entourage file " + entry.get<std::string>() +
                              " lists different points");
      }
      items.push_back(std::move(u));
    } else {
      items.push_back(entourage_from_json(entry, points));
    }
  }
  return EntourageSequence(std::move(items));
}

EntourageSequence read_sequence(const std::filesystem::path& path) {
  return parse_sequence(read_text_file(path), path.parent_path());
}

FiniteSpace parse_topology(std::string_view text) {
  const Json doc = parse_json(text);
  Alphabet points = parse_points(doc);
  const Json& sets = field(doc, "open_sets");
  if (!sets.is_array()) throw ParseError("'open_sets' must be a list of symbol lists");
  std::vector<std::vector<int>> open;
  for (const auto& s : sets) {
    if (!s.is_array()) throw ParseError("'open_sets' must be a list of symbol lists");
    std::vector<int> members;
    for (const auto& p : s) {
      if (!p.is_string()) throw ParseError("open sets list point symbols");
      members.push_back(points.index_of(p.get<std::string>()));
    }
    open.push_back(std::move(members));
  }
  return FiniteSpace(std::move(points), std::move(open));
}

FiniteSpace read_topology(const std::filesystem::path& path) {
  return parse_topology(read_text_file(path));
}

}  // namespace qpfree
