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
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/perm.hpp"

namespace dad {

// Automorphisms of a derangement action digraph, sorted lexicographically by
// image array. The identity therefore comes first.
struct AutGroup {
  std::vector<Permutation> elements;

  std::size_t order() const noexcept { return elements.size(); }
};

// Largest domain accepted by the brute-force automorphism search.
inline constexpr std::size_t kAutomorphismMaxPoints = 10;

// The image of g's vertex set under the relabelling x -> x^g.
SimpleDigraph permute_vertices(const SimpleDigraph& g, const Permutation& p);

// S^g = {g^-1 s g : s in S}, in the order of S.
DerangementSet conjugate_set(const DerangementSet& s, const Permutation& g);

// Whether g maps DA(X, S) onto DA(X, T). Decided by comparing x^(S^g) with
// x^T pointwise and, independently, by mapping the arc set; disagreement
// throws std::logic_error.
bool is_isomorphism(const Permutation& g, const DerangementSet& s,
                    const DerangementSet& t);

// Exhaustive search over Sym(X), pruned by valency and adjacency
// consistency. Throws Error(kGuardExceeded) above kAutomorphismMaxPoints.
AutGroup automorphism_group(const DerangementSet& s);

// Same search for an arbitrary simple digraph.
AutGroup automorphism_group(const SimpleDigraph& g);

// S^g == S as sets.
bool normalizer_in_aut_check(const DerangementSet& s, const Permutation& g);

bool is_vertex_transitive(const DerangementSet& s);

}  // namespace dad
