// Copyright 2026 The dad Authors
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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/decompose.hpp"
#include "dad/digraph.hpp"
#include "dad/iso.hpp"
#include "dad/perm.hpp"
#include "dad/two_sided.hpp"
#include "json.hpp"

namespace dad::io {

// File grammars. All are line based and ASCII; `#` starts a comment; blank
// lines are ignored; the first remaining line is the header.
//
//   perms <n>          one permutation per line in 0-based cycle notation,
//                      e.g. "(0 1 2 3)(4 5)"; "id" is the identity
//   digraph <n>        one arc "u v" per line
//   graph <n>          one edge "u v" per line, stored as both arcs
//   group <m>          m rows of m labels; row a lists the products a * b
//   group-gens <n> [ltr|rtl]
//                      generator permutations on n points, closure computed;
//                      the optional order says how products are read
//                      (default ltr: a * b applies a first)
//
// Canonical output uses single spaces and '\n', with arcs and edges sorted.

struct PermSetFile {
  std::size_t n = 0;
  std::vector<Permutation> perms;
};

// One permutation in cycle notation on n points. Commas may separate points.
// Throws Error(kParseError) without line information.
Permutation parse_cycles(std::string_view text, std::size_t n,
                         bool allow_identity);

PermSetFile parse_permset(std::string_view text, bool allow_identity = false);

// Parses and validates a derangement set. With `dedupe`, repeated
// permutations are dropped instead of rejected.
DerangementSet parse_derangement_set(std::string_view text, bool dedupe = false);

std::string format_permset(std::size_t n, std::span<const Permutation> perms);
std::string format_permset(const DerangementSet& s);

SimpleDigraph parse_digraph(std::string_view text);

// `graph` form for symmetric digraphs, `digraph` form otherwise.
std::string format_digraph(const SimpleDigraph& g);

FiniteGroup parse_group(std::string_view text);
std::string format_group_table(const FiniteGroup& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// Machine-readable reports with fixed key order.
using Json = nlohmann::ordered_json;

Json to_json(const ValencyProfile& profile);
Json to_json(const AnalysisReport& report);
Json to_json(const Matching& matching);
Json to_json(const std::vector<Component>& components);
Json to_json(const AutGroup& aut);

}  // namespace dad::io
