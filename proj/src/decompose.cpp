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

#include "dad/decompose.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dad {
namespace {

std::size_t require_regular(const SimpleDigraph& g) {
  const auto k = is_regular(g);
  if (!k) throw Error(ErrorCode::kNotRegular, "digraph is not regular");
  if (*k == 0) {
    throw Error(ErrorCode::kNotRegular, "digraph has no arcs (valency 0)");
  }
  return *k;
}

std::size_t require_regular_graph(const SimpleDigraph& g) {
  if (!is_symmetric(g)) {
    throw Error(ErrorCode::kNotSymmetric, "input is not a graph");
  }
  return require_regular(g);
}

// Perfect matching of the bipartite graph (x on the left, y on the right for
// each arc x -> y) as a derangement.
Permutation match_out_to_in(const std::vector<std::vector<Vertex>>& out) {
  const auto match = bipartite_maximum_matching(out, out.size());
  std::vector<Point> images(out.size());
  for (std::size_t x = 0; x < out.size(); ++x) {
    if (!match[x]) {
      throw std::logic_error("regular bipartite graph without perfect matching");
    }
    images[x] = *match[x];
  }
  return Permutation(std::move(images));
}

void remove_functional_graph(std::vector<std::vector<Vertex>>& out,
                             const Permutation& g) {
  for (Point x = 0; x < out.size(); ++x) {
    auto& row = out[x];
    row.erase(std::find(row.begin(), row.end(), g[x]));
  }
}

SimpleDigraph from_out_lists(const std::vector<std::vector<Vertex>>& out) {
  std::vector<Arc> arcs;
  for (Vertex x = 0; x < out.size(); ++x) {
    for (const Vertex y : out[x]) arcs.emplace_back(x, y);
  }
  return SimpleDigraph(out.size(), std::move(arcs));
}

void check_regular_after_peel(const std::vector<std::vector<Vertex>>& out,
                              std::size_t expected) {
  if (expected == 0) return;
  if (is_regular(from_out_lists(out)) != expected) {
    throw std::logic_error("remaining digraph lost regularity after a peel");
  }
}

// Orients every edge along an Eulerian circuit of its component, so each
// vertex gets out-valency k/2. Neighbour lists ascend; stack-based Hierholzer.
std::vector<std::vector<Vertex>> eulerian_orientation(const SimpleDigraph& g) {
  const std::size_t n = g.vertex_count();
  const auto edge_list = edges(g);
  std::vector<std::vector<std::pair<Vertex, std::size_t>>> incident(n);
  for (std::size_t e = 0; e < edge_list.size(); ++e) {
    const auto [u, v] = edge_list[e];
    incident[u].emplace_back(v, e);
    incident[v].emplace_back(u, e);
  }
  for (auto& row : incident) std::sort(row.begin(), row.end());

  std::vector<bool> used(edge_list.size(), false);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<std::vector<Vertex>> out(n);
  for (Vertex start = 0; start < n; ++start) {
    if (cursor[start] == incident[start].size()) continue;
    std::vector<Vertex> stack{start};
    std::vector<Vertex> circuit;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      auto& c = cursor[v];
      while (c < incident[v].size() && used[incident[v][c].second]) ++c;
      if (c == incident[v].size()) {
        circuit.push_back(v);
        stack.pop_back();
      } else {
        used[incident[v][c].second] = true;
        stack.push_back(incident[v][c].first);
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    for (std::size_t i = 0; i + 1 < circuit.size(); ++i) {
      out[circuit[i]].push_back(circuit[i + 1]);
    }
  }
  for (auto& row : out) std::sort(row.begin(), row.end());
  return out;
}

}  // namespace

Permutation one_regular_subdigraph(const SimpleDigraph& g) {
  require_regular(g);
  std::vector<std::vector<Vertex>> out(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto row = g.out_neighbours(x);
    out[x].assign(row.begin(), row.end());
  }
  return match_out_to_in(out);
}

DerangementSet digraph_to_derangements(const SimpleDigraph& g) {
  const std::size_t k = require_regular(g);
  std::vector<std::vector<Vertex>> out(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto row = g.out_neighbours(x);
    out[x].assign(row.begin(), row.end());
  }
  std::vector<Permutation> peeled;
  for (std::size_t i = 0; i < k; ++i) {
    peeled.push_back(match_out_to_in(out));
    remove_functional_graph(out, peeled.back());
    check_regular_after_peel(out, k - i - 1);
  }
  DerangementSet result(g.vertex_count(), std::move(peeled));
  if (build_da(result) != g) {
    throw std::logic_error("peeled derangements do not rebuild the digraph");
  }
  return result;
}

MatchingOutcome perfect_matching(const SimpleDigraph& g) {
  MatchingOutcome outcome;
  outcome.maximum = maximum_matching(g);
  if (2 * outcome.maximum.size() == g.vertex_count()) {
    outcome.perfect = outcome.maximum;
  }
  return outcome;
}

std::vector<TwoFactor> two_factorization(const SimpleDigraph& g) {
  const std::size_t k = require_regular_graph(g);
  if (k % 2 != 0) {
    throw Error(ErrorCode::kOddValency,
                "2-factorisation needs even valency, got " + std::to_string(k));
  }
  auto out = eulerian_orientation(g);
  const std::size_t m = k / 2;
  check_regular_after_peel(out, m);
  std::vector<TwoFactor> factors;
  for (std::size_t i = 0; i < m; ++i) {
    const Permutation sigma = match_out_to_in(out);
    remove_functional_graph(out, sigma);
    check_regular_after_peel(out, m - i - 1);
    std::vector<std::pair<Vertex, Vertex>> factor_edges;
    for (Point x = 0; x < sigma.size(); ++x) {
      factor_edges.emplace_back(x, sigma[x]);
    }
    factors.push_back(
        TwoFactor{SimpleDigraph::from_edges(g.vertex_count(), factor_edges)});
  }
  return factors;
}

Permutation orient_two_factor(const TwoFactor& factor) {
  const SimpleDigraph& f = factor.graph;
  if (!is_symmetric(f) || is_regular(f) != 2) {
    throw Error(ErrorCode::kInvalidArgument, "not a 2-factor");
  }
  std::vector<Point> images(f.vertex_count());
  std::vector<bool> visited(f.vertex_count(), false);
  for (Vertex start = 0; start < f.vertex_count(); ++start) {
    if (visited[start]) continue;
    // Neighbour lists are sorted, so front() is the smaller neighbour.
    Vertex previous = start;
    Vertex current = f.out_neighbours(start).front();
    images[start] = current;
    visited[start] = true;
    while (current != start) {
      visited[current] = true;
      const auto nbrs = f.out_neighbours(current);
      const Vertex next = nbrs[0] == previous ? nbrs[1] : nbrs[0];
      images[current] = next;
      previous = current;
      current = next;
    }
  }
  return Permutation(std::move(images));
}

DerangementSet graph_to_closed_set(const SimpleDigraph& g) {
  const std::size_t k = require_regular_graph(g);
  const std::size_t n = g.vertex_count();

  SimpleDigraph even_part = g;
  std::optional<Permutation> involution;
  if (k % 2 == 1) {
    MatchingOutcome outcome = perfect_matching(g);
    if (!outcome.perfect) {
      throw NoPerfectMatchingError(
          "odd valency " + std::to_string(k) +
              " graph has no perfect matching (maximum matching size " +
              std::to_string(outcome.maximum.size()) + " on " +
              std::to_string(n) + " vertices)",
          std::move(outcome.maximum));
    }
    std::vector<Point> images(n);
    for (const auto& [u, v] : outcome.perfect->pairs) {
      images[u] = v;
      images[v] = u;
    }
    involution = Permutation(std::move(images));
    std::vector<Arc> remaining;
    for (const auto& [u, v] : g.arcs()) {
      if ((*involution)[u] != v) remaining.emplace_back(u, v);
    }
    even_part = SimpleDigraph(n, std::move(remaining));
  }

  std::vector<Permutation> oriented;
  if (k >= 2) {
    for (const auto& factor : two_factorization(even_part)) {
      oriented.push_back(orient_two_factor(factor));
    }
  }
  std::vector<Permutation> elements = oriented;
  if (involution) elements.push_back(*involution);
  for (const auto& p : oriented) elements.push_back(inverse(p));

  DerangementSet result(n, std::move(elements));
  if (result.size() != k || !is_closed(result) || !is_self_inverse(result) ||
      build_da(result) != g) {
    throw std::logic_error("realisation produced an invalid connection set");
  }
  return result;
}

}  // namespace dad
