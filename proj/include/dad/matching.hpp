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
#include <optional>
#include <utility>
#include <vector>

#include "dad/digraph.hpp"

namespace dad {

// Pairwise disjoint undirected pairs {u, v} with u < v, sorted.
struct Matching {
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

// Maximum matching of a bipartite graph with left vertices 0..left_adj.size()-1
// and right vertices 0..right_count-1. Returns, per left vertex, its matched
// right vertex. Hopcroft-Karp; free vertices and neighbours are scanned in
// ascending order, so the output is deterministic.
std::vector<std::optional<Vertex>> bipartite_maximum_matching(
    const std::vector<std::vector<Vertex>>& left_adj, std::size_t right_count);

// Maximum matching of a graph given as a symmetric digraph, by Edmonds'
// blossom algorithm. Roots and neighbours are scanned in ascending order.
Matching maximum_matching(const SimpleDigraph& g);

// True when `m` is a matching of g (disjoint pairs, each an edge).
bool is_matching_of(const Matching& m, const SimpleDigraph& g);

}  // namespace dad
