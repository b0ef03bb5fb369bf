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

// JSON file formats.
//
// Space:      {"points": ["a", "b"], "dist": [["0", "1/4"], ["1/2", "0"]],
//              "bounded_by_one": true}
// Entourage:  {"points": [...], "relation": [[1, 0], [1, 1]]}
// Sequence:   {"points": [...], "entourages": [<matrix> | "file.json", ...]}
//             String entries name entourage files relative to the sequence
//             file; their points must match.
// Topology:   {"points": [...], "open_sets": [[], ["a"], ["a", "b"]]}
//
// Distances are strings "p/q" or "k", or JSON integers. Every diagonal entry
// must be present and zero. All readers throw ParseError for malformed input.

#ifndef QPFREE_IO_HPP
#define QPFREE_IO_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "qpfree/qpspace.hpp"
#include "qpfree/quniform.hpp"

namespace qpfree {

struct SpaceFile {
  QPSpace space;
  /// The optional `bounded_by_one` field as written.
  std::optional<bool> bounded_by_one;
};

SpaceFile parse_space(std::string_view text);
SpaceFile read_space(const std::filesystem::path& path);
/// Pretty-printed space file with string-valued distances.
std::string format_space(const QPSpace& space);

/// Throws ValidationError for a non-reflexive relation.
Entourage parse_entourage(std::string_view text);
Entourage read_entourage(const std::filesystem::path& path);
/// Entourage file with a 0/1 relation matrix, one row per line.
std::string format_entourage(const Entourage& u);

/// `base_dir` resolves file references inside the sequence.
EntourageSequence parse_sequence(std::string_view text,
                                 const std::filesystem::path& base_dir);
EntourageSequence read_sequence(const std::filesystem::path& path);

FiniteSpace parse_topology(std::string_view text);
FiniteSpace read_topology(const std::filesystem::path& path);

/// Whole file as a string; throws ParseError when it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace qpfree

#endif  // QPFREE_IO_HPP
