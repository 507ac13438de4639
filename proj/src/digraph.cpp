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

#include "dad/digraph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "dad/error.hpp"

namespace dad {
namespace {

void check_endpoints(std::size_t n, const std::vector<Arc>& arcs) {
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "arc (" + std::to_string(u) + "," + std::to_string(v) +
                      ") has an endpoint outside 0.." +
                      std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) {
      throw Error(ErrorCode::kInvalidDigraph,
                  "loop at vertex " + std::to_string(u));
    }
  }
}

std::vector<bool> reachable_from(const SimpleDigraph& g, Vertex source) {
  std::vector<bool> seen(g.vertex_count(), false);
  seen[source] = true;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (const Vertex y : g.out_neighbours(x)) {
      if (!seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

SimpleDigraph::SimpleDigraph(std::size_t n, std::vector<Arc> arcs)
    : n_(n), arcs_(std::move(arcs)) {
  check_endpoints(n_, arcs_);
  std::sort(arcs_.begin(), arcs_.end());
  const auto dup = std::adjacent_find(arcs_.begin(), arcs_.end());
  if (dup != arcs_.end()) {
    throw Error(ErrorCode::kInvalidDigraph,
                "repeated arc (" + std::to_string(dup->first) + "," +
                    std::to_string(dup->second) + ")");
  }
  build_adjacency();
}

SimpleDigraph::SimpleDigraph(std::size_t n, std::vector<Arc> sorted_arcs,
                             Trusted)
    : n_(n), arcs_(std::move(sorted_arcs)) {
  build_adjacency();
}

SimpleDigraph SimpleDigraph::from_arc_multiset(std::size_t n,
                                               std::vector<Arc> arcs) {
  check_endpoints(n, arcs);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return SimpleDigraph(n, std::move(arcs), Trusted{});
}

SimpleDigraph SimpleDigraph::from_edges(
    std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<Arc> arcs;
  arcs.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    arcs.emplace_back(u, v);
    arcs.emplace_back(v, u);
  }
  return SimpleDigraph(n, std::move(arcs));
}

void SimpleDigraph::build_adjacency() {
  out_.assign(n_, {});
  in_.assign(n_, {});
  for (const auto& [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
  // Arcs are sorted by (u, v), so out-lists already are; in-lists are filled
  // in increasing u as well.
}

bool SimpleDigraph::has_arc(Vertex u, Vertex v) const {
  if (u >= n_) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

bool is_symmetric(const SimpleDigraph& g) {
  for (const auto& [u, v] : g.arcs()) {
    if (!g.has_arc(v, u)) return false;
  }
  return true;
}

ValencyProfile valency_profile(const SimpleDigraph& g) {
  ValencyProfile profile;
  profile.out_valencies.resize(g.vertex_count());
  profile.in_valencies.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    profile.out_valencies[v] = g.out_neighbours(v).size();
    profile.in_valencies[v] = g.in_neighbours(v).size();
  }
  return profile;
}

std::optional<std::size_t> is_regular(const SimpleDigraph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t k = g.out_neighbours(0).size();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_neighbours(v).size() != k || g.in_neighbours(v).size() != k) {
      return std::nullopt;
    }
  }
  return k;
}

SimpleDigraph induced(const SimpleDigraph& g, std::span<const Vertex> part) {
  std::vector<Vertex> sorted(part.begin(), part.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::kInvalidArgument, "vertex subset has repeats");
  }
  std::vector<std::int64_t> position(g.vertex_count(), -1);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.vertex_count()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "vertex " + std::to_string(sorted[i]) + " out of range");
    }
    position[sorted[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Arc> arcs;
  for (const auto& [u, v] : g.arcs()) {
    if (position[u] >= 0 && position[v] >= 0) {
      arcs.emplace_back(static_cast<Vertex>(position[u]),
                        static_cast<Vertex>(position[v]));
    }
  }
  return SimpleDigraph(sorted.size(), std::move(arcs));
}

Connectivity connectivity_classes(const SimpleDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<bool>> reach(n);
  for (Vertex v = 0; v < n; ++v) reach[v] = reachable_from(g, v);

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (reach[x][y] && !reach[y][x]) {
        return Connectivity{std::nullopt, Arc{x, y}};
      }
    }
  }
  std::vector<std::vector<Vertex>> classes;
  std::vector<bool> assigned(n, false);
  for (Vertex x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<Vertex> cls;
    for (Vertex y = x; y < n; ++y) {
      if (reach[x][y]) {
        assigned[y] = true;
        cls.push_back(y);
      }
    }
    classes.push_back(std::move(cls));
  }
  return Connectivity{std::move(classes), std::nullopt};
}

std::vector<std::pair<Vertex, Vertex>> edges(const SimpleDigraph& g) {
  if (!is_symmetric(g)) {
    throw Error(ErrorCode::kNotSymmetric, "digraph is not a graph");
  }
  std::vector<std::pair<Vertex, Vertex>> result;
  for (const auto& [u, v] : g.arcs()) {
    if (u < v) result.emplace_back(u, v);
  }
  return result;
}

}  // namespace dad
