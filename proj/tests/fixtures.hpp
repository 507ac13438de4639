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

// Worked examples and standard graphs shared by the unit and acceptance
// suites. Examples originally labelled 1..n are translated to 0-based points
// here and nowhere else.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/error.hpp"
#include "dad/perm.hpp"
#include "dad/two_sided.hpp"

namespace dad::fixtures {

using Cycles = std::vector<std::vector<Point>>;

// The code of the dad::Error thrown by fn, or nothing when it returns.
template <class F>
std::optional<ErrorCode> error_code(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

// Cycles written with 1-based labels, shifted down by one.
inline Permutation one_based(std::size_t n, const Cycles& cycles) {
  Cycles shifted = cycles;
  for (auto& cycle : shifted) {
    for (auto& x : cycle) --x;
  }
  return Permutation::from_cycles(n, shifted);
}

inline Permutation zero_based(std::size_t n, const Cycles& cycles) {
  return Permutation::from_cycles(n, cycles);
}

// The 4-cycle with three connection sets.
inline DerangementSet c4_s1() {
  return DerangementSet(4, {one_based(4, {{1, 2, 3, 4}}),
                            one_based(4, {{1, 4, 3, 2}})});
}
inline DerangementSet c4_s2() {
  return DerangementSet(4, {one_based(4, {{1, 2}, {3, 4}}),
                            one_based(4, {{1, 4}, {2, 3}})});
}
inline DerangementSet c4_s3() {
  return DerangementSet(4, {one_based(4, {{1, 2, 3, 4}}),
                            one_based(4, {{1, 2}, {3, 4}}),
                            one_based(4, {{1, 4}, {2, 3}})});
}

// Eight points, three involutions; the DA is an 8-cycle plus the chord 2-7.
inline DerangementSet irregular_abc() {
  return DerangementSet(
      8, {one_based(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}}),
          one_based(8, {{1, 8}, {2, 7}, {3, 4}, {5, 6}}),
          one_based(8, {{1, 8}, {4, 5}, {2, 3}, {6, 7}})});
}

// Closed but not self-inverse, and its self-inverse companion.
inline DerangementSet six_closed() {
  return DerangementSet(6, {one_based(6, {{1, 2, 3, 4, 5, 6}}),
                            one_based(6, {{1, 3, 2}, {4, 6, 5}}),
                            one_based(6, {{1, 6, 4, 3}, {2, 5}})});
}
inline DerangementSet six_self_inverse() {
  return DerangementSet(6, {one_based(6, {{1, 2, 3, 4, 5, 6}}),
                            one_based(6, {{1, 6, 5, 4, 3, 2}}),
                            one_based(6, {{1, 3}, {2, 5}, {4, 6}})});
}

// 3-regular graph on 1..6: a hexagon with chords 1-3, 2-5, 4-6.
inline SimpleDigraph six_cubic_graph() {
  const std::vector<std::pair<Vertex, Vertex>> one_based_edges{
      {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 3}, {2, 5}, {4, 6}};
  std::vector<std::pair<Vertex, Vertex>> e;
  for (const auto& [u, v] : one_based_edges) e.emplace_back(u - 1, v - 1);
  return SimpleDigraph::from_edges(6, e);
}

// Z7 = {0..6}, already 0-based.
inline DerangementSet z7_two_components() {
  return DerangementSet(7, {zero_based(7, {{0, 1, 2}, {3, 4, 5, 6}}),
                            zero_based(7, {{0, 2, 1}, {3, 6, 5, 4}})});
}

inline SimpleDigraph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) {
    e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  }
  return SimpleDigraph::from_edges(n, e);
}

inline SimpleDigraph directed_cycle(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex i = 0; i < n; ++i) {
    arcs.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  }
  return SimpleDigraph(n, arcs);
}

inline SimpleDigraph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return SimpleDigraph::from_edges(n, e);
}

inline SimpleDigraph petersen_graph() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, 5 + (i + 2) % 5);
  }
  return SimpleDigraph::from_edges(10, e);
}

inline SimpleDigraph disjoint_triangles() {
  return SimpleDigraph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

// 16-vertex cubic graph with no perfect matching: a centre joined to three
// copies of K4 minus an edge whose two deficient vertices share a new
// neighbour. Deleting the centre leaves three odd components.
inline SimpleDigraph cubic_without_perfect_matching() {
  std::vector<std::pair<Vertex, Vertex>> e;
  const Vertex centre = 15;
  for (Vertex k = 0; k < 3; ++k) {
    const Vertex a = 5 * k, b = a + 1, p = a + 2, q = a + 3, w = a + 4;
    e.insert(e.end(), {{a, p}, {a, q}, {b, p}, {b, q}, {p, q},
                       {w, a}, {w, b}, {w, centre}});
  }
  return SimpleDigraph::from_edges(16, e);
}

// Z_m by its addition table.
inline FiniteGroup cyclic_group(std::size_t m) {
  std::vector<std::vector<Element>> table(m, std::vector<Element>(m));
  for (Element a = 0; a < m; ++a) {
    for (Element b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  }
  return FiniteGroup(std::move(table));
}

// Alt(4) on 1-based points {1,2,3,4}, generated by (123) and (234).
inline FiniteGroup alt4(ProductOrder order) {
  const std::vector<Permutation> gens{one_based(4, {{1, 2, 3}}),
                                      one_based(4, {{2, 3, 4}})};
  return group_from_generators(gens, order);
}

inline Element element_of(const FiniteGroup& g, const Cycles& one_based_cycles) {
  return *g.find(one_based(4, one_based_cycles));
}

// L = {1, (243)} and R = {(234), (12)(34), (132), (14)(23)}.
inline std::vector<Element> alt4_left(const FiniteGroup& g) {
  return {0, element_of(g, {{2, 4, 3}})};
}
inline std::vector<Element> alt4_right(const FiniteGroup& g) {
  return {element_of(g, {{2, 3, 4}}), element_of(g, {{1, 2}, {3, 4}}),
          element_of(g, {{1, 3, 2}}), element_of(g, {{1, 4}, {2, 3}})};
}

}  // namespace dad::fixtures
