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

#include <optional>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/error.hpp"
#include "dad/matching.hpp"
#include "dad/perm.hpp"

namespace dad {

// A spanning 2-regular subgraph, stored as a symmetric digraph.
struct TwoFactor {
  SimpleDigraph graph;
};

struct MatchingOutcome {
  // Set when the maximum matching covers every vertex.
  std::optional<Matching> perfect;
  Matching maximum;
};

// Raised by graph_to_closed_set for odd valency without a perfect matching.
// Carries the maximum matching found as a certificate.
class NoPerfectMatchingError : public Error {
 public:
  NoPerfectMatchingError(const std::string& message, Matching maximum)
      : Error(ErrorCode::kNoPerfectMatching, message),
        maximum_(std::move(maximum)) {}

  const Matching& maximum_matching() const noexcept { return maximum_; }

 private:
  Matching maximum_;
};

// A derangement g whose functional graph {(x, x^g)} lies inside the k-regular
// digraph g (k >= 1), read off a perfect matching of its bipartite double
// cover.
Permutation one_regular_subdigraph(const SimpleDigraph& g);

// k pairwise arc-disjoint derangements whose union is the k-regular digraph.
DerangementSet digraph_to_derangements(const SimpleDigraph& g);

MatchingOutcome perfect_matching(const SimpleDigraph& g);

// Splits a 2m-regular graph into m edge-disjoint 2-factors via an Eulerian
// orientation and m perfect matchings of the resulting bipartite graph.
std::vector<TwoFactor> two_factorization(const SimpleDigraph& g);

// Orients each cycle of a 2-factor from its least vertex towards the smaller
// of its two neighbours, returning the resulting derangement.
Permutation orient_two_factor(const TwoFactor& factor);

// A closed, self-inverse derangement set S with DA(X, S) equal to the
// k-regular graph g. Odd k requires a perfect matching; otherwise throws
// NoPerfectMatchingError.
DerangementSet graph_to_closed_set(const SimpleDigraph& g);

}  // namespace dad
