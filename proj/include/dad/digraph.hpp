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
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace dad {

using Vertex = std::uint32_t;
using Arc = std::pair<Vertex, Vertex>;

// A loopless digraph without repeated arcs. Arcs are kept sorted, so two
// digraphs on the same vertex count compare equal iff their arc sets do.
// A graph is the symmetric special case.
class SimpleDigraph {
 public:
  SimpleDigraph() = default;

  // Throws Error(kInvalidDigraph) on loops or repeated arcs and
  // Error(kVertexOutOfRange) on bad endpoints.
  SimpleDigraph(std::size_t n, std::vector<Arc> arcs);

  // Same as the constructor but collapses repeated arcs instead of rejecting.
  static SimpleDigraph from_arc_multiset(std::size_t n, std::vector<Arc> arcs);

  // One undirected edge {u, v} per entry, stored as both arcs.
  static SimpleDigraph from_edges(std::size_t n,
                                  const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }

  // Sorted out- and in-neighbour lists.
  std::span<const Vertex> out_neighbours(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbours(Vertex v) const { return in_[v]; }

  bool has_arc(Vertex u, Vertex v) const;

  friend bool operator==(const SimpleDigraph& a, const SimpleDigraph& b) {
    return a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 private:
  struct Trusted {};
  SimpleDigraph(std::size_t n, std::vector<Arc> sorted_arcs, Trusted);
  void build_adjacency();

  std::size_t n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

struct ValencyProfile {
  std::vector<std::size_t> out_valencies;
  std::vector<std::size_t> in_valencies;

  friend bool operator==(const ValencyProfile&,
                         const ValencyProfile&) = default;
};

bool is_symmetric(const SimpleDigraph& g);

ValencyProfile valency_profile(const SimpleDigraph& g);

// k when every out- and in-valency equals k.
std::optional<std::size_t> is_regular(const SimpleDigraph& g);

// The subdigraph induced on `part`, relabelled order-preservingly. `part`
// need not be sorted; it is sorted internally.
SimpleDigraph induced(const SimpleDigraph& g, std::span<const Vertex> part);

// Outcome of the directed reachability analysis. Exactly one of `classes`
// and `witness` is set; a witness (x, y) means x reaches y but not back.
struct Connectivity {
  std::optional<std::vector<std::vector<Vertex>>> classes;
  std::optional<Arc> witness;
};

Connectivity connectivity_classes(const SimpleDigraph& g);

// Undirected edges {u, v} with u < v of a symmetric digraph.
std::vector<std::pair<Vertex, Vertex>> edges(const SimpleDigraph& g);

}  // namespace dad
