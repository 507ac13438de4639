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

#include "dad/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "dad/error.hpp"

namespace dad {
namespace {

constexpr std::size_t kUnmatched = std::numeric_limits<std::size_t>::max();
constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();

class HopcroftKarp {
 public:
  HopcroftKarp(const std::vector<std::vector<Vertex>>& adj,
               std::size_t right_count)
      : adj_(adj),
        match_left_(adj.size(), kUnmatched),
        match_right_(right_count, kUnmatched),
        dist_(adj.size()),
        next_(adj.size()) {}

  void run() {
    while (bfs()) {
      std::fill(next_.begin(), next_.end(), 0);
      for (std::size_t u = 0; u < adj_.size(); ++u) {
        if (match_left_[u] == kUnmatched) dfs(u);
      }
    }
  }

  const std::vector<std::size_t>& match_left() const { return match_left_; }

 private:
  bool bfs() {
    std::deque<std::size_t> queue;
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      if (match_left_[u] == kUnmatched) {
        dist_[u] = 0;
        queue.push_back(u);
      } else {
        dist_[u] = kInfinity;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (const Vertex v : adj_[u]) {
        const std::size_t w = match_right_[v];
        if (w == kUnmatched) {
          found = true;
        } else if (dist_[w] == kInfinity) {
          dist_[w] = dist_[u] + 1;
          queue.push_back(w);
        }
      }
    }
    return found;
  }

  bool dfs(std::size_t u) {
    for (; next_[u] < adj_[u].size(); ++next_[u]) {
      const Vertex v = adj_[u][next_[u]];
      const std::size_t w = match_right_[v];
      if (w == kUnmatched || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        match_left_[u] = v;
        match_right_[v] = u;
        ++next_[u];
        return true;
      }
    }
    dist_[u] = kInfinity;
    return false;
  }

  const std::vector<std::vector<Vertex>>& adj_;
  std::vector<std::size_t> match_left_;
  std::vector<std::size_t> match_right_;
  std::vector<std::size_t> dist_;
  std::vector<std::size_t> next_;
};

// Edmonds' algorithm with explicit blossom contraction through base labels.
class Blossom {
 public:
  explicit Blossom(const SimpleDigraph& g)
      : g_(g),
        n_(g.vertex_count()),
        mate_(n_, kUnmatched),
        parent_(n_),
        base_(n_),
        used_(n_),
        in_blossom_(n_) {}

  void run() {
    for (std::size_t root = 0; root < n_; ++root) {
      if (mate_[root] != kUnmatched) continue;
      const std::size_t end = find_path(root);
      if (end == kUnmatched) continue;
      // Flip the alternating path ending at `end`.
      for (std::size_t v = end; v != kUnmatched;) {
        const std::size_t pv = parent_[v];
        const std::size_t ppv = mate_[pv];
        mate_[v] = pv;
        mate_[pv] = v;
        v = ppv;
      }
    }
  }

  Matching matching() const {
    Matching m;
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != kUnmatched && v < mate_[v]) {
        m.pairs.emplace_back(static_cast<Vertex>(v),
                             static_cast<Vertex>(mate_[v]));
      }
    }
    return m;
  }

 private:
  std::size_t lowest_common_ancestor(std::size_t a, std::size_t b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kUnmatched) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), kUnmatched);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (const Vertex to : g_.out_neighbours(static_cast<Vertex>(v))) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root ||
            (mate_[to] != kUnmatched && parent_[mate_[to]] != kUnmatched)) {
          const std::size_t cur = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kUnmatched) {
          parent_[to] = v;
          if (mate_[to] == kUnmatched) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kUnmatched;
  }

  const SimpleDigraph& g_;
  std::size_t n_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<std::optional<Vertex>> bipartite_maximum_matching(
    const std::vector<std::vector<Vertex>>& left_adj, std::size_t right_count) {
  for (const auto& row : left_adj) {
    for (const Vertex v : row) {
      if (v >= right_count) {
        throw Error(ErrorCode::kVertexOutOfRange,
                    "right vertex " + std::to_string(v) + " out of range");
      }
    }
  }
  HopcroftKarp hk(left_adj, right_count);
  hk.run();
  std::vector<std::optional<Vertex>> result(left_adj.size());
  for (std::size_t u = 0; u < left_adj.size(); ++u) {
    if (hk.match_left()[u] != kUnmatched) {
      result[u] = static_cast<Vertex>(hk.match_left()[u]);
    }
  }
  return result;
}

Matching maximum_matching(const SimpleDigraph& g) {
  if (!is_symmetric(g)) {
    throw Error(ErrorCode::kNotSymmetric,
                "matchings are defined for graphs (symmetric digraphs)");
  }
  Blossom blossom(g);
  blossom.run();
  return blossom.matching();
}

bool is_matching_of(const Matching& m, const SimpleDigraph& g) {
  std::vector<bool> covered(g.vertex_count(), false);
  for (const auto& [u, v] : m.pairs) {
    if (u >= g.vertex_count() || v >= g.vertex_count()) return false;
    if (!g.has_arc(u, v) || !g.has_arc(v, u)) return false;
    if (covered[u] || covered[v]) return false;
    covered[u] = covered[v] = true;
  }
  return true;
}

}  // namespace dad
