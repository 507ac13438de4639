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
#include <span>
#include <vector>

#include "dad/digraph.hpp"
#include "dad/perm.hpp"

namespace dad {

// A non-empty, duplicate-free, ordered list of fixed-point-free permutations
// on a common domain {0, ..., n-1}.
class DerangementSet {
 public:
  // Rejects empty input, domain mismatches, permutations with fixed points
  // and repeated elements, each with its own error code.
  DerangementSet(std::size_t n, std::vector<Permutation> elements);

  // Keeps the first occurrence of each repeated element instead of
  // rejecting the input.
  static DerangementSet deduplicated(std::size_t n,
                                     std::vector<Permutation> elements);

  std::size_t domain_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Permutation>& elements() const noexcept {
    return elements_;
  }
  const Permutation& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const noexcept { return elements_.begin(); }
  auto end() const noexcept { return elements_.end(); }

  bool contains(const Permutation& p) const;

  // S^-1, in the order of S.
  DerangementSet inverses() const;

  // Equality as sets, ignoring order.
  bool same_set_as(const DerangementSet& other) const;

  friend bool operator==(const DerangementSet&,
                         const DerangementSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Permutation> elements_;
};

struct AnalysisReport {
  std::size_t set_size = 0;
  bool multiplicity_free = false;
  bool closed = false;
  bool self_inverse = false;
  bool symmetric = false;
  std::optional<std::size_t> regular_valency;
  ValencyProfile valency_profile;
  std::size_t max_multiplicity = 0;
  std::size_t component_count = 0;
};

struct Component {
  std::vector<Point> vertices;
  DerangementSet set;
  SimpleDigraph digraph;
};

// The arc set {(x, x^s) : x in X, s in S}.
SimpleDigraph build_da(const DerangementSet& s);

// Number of elements of S mapping u to v.
std::size_t multiplicity(const DerangementSet& s, Point u, Point v);

// The out-neighbourhood x^S as a sorted, duplicate-free list.
std::vector<Point> image_set(const DerangementSet& s, Point x);

// S S^-1 contained in Der(X) together with the identity.
bool products_with_inverses_are_derangements(const DerangementSet& s);

// Both the algebraic S S^-1 test and the direct multiplicity count are run;
// disagreement throws std::logic_error.
bool is_multiplicity_free(const DerangementSet& s);

bool is_closed(const DerangementSet& s);

bool is_self_inverse(const DerangementSet& s);

AnalysisReport analyze(const DerangementSet& s);

// One entry per orbit of <S>, with S restricted to it (repeats removed) and
// the induced component digraph.
std::vector<Component> components(const DerangementSet& s);

// Bounds accepted by search_valency_gap.
inline constexpr std::size_t kGapSearchMaxPoints = 6;
inline constexpr std::size_t kGapSearchMaxSetSize = 3;

// Every duplicate-free derangement set on 2..max_points points with at most
// max_set_size elements whose derangement action digraph is a regular graph
// of valency strictly smaller than the set size.
std::vector<DerangementSet> search_valency_gap(std::size_t max_points,
                                               std::size_t max_set_size);

// All derangements of {0, ..., n-1} in lexicographic order of image arrays.
std::vector<Permutation> all_derangements(std::size_t n);

}  // namespace dad
