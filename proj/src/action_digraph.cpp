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

#include "dad/action_digraph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dad/error.hpp"

namespace dad {
namespace {

void validate_elements(std::size_t n, const std::vector<Permutation>& elements) {
  if (elements.empty()) {
    throw Error(ErrorCode::kEmptySet, "a derangement set must be non-empty");
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& p = elements[i];
    if (p.size() != n) {
      throw Error(ErrorCode::kDomainMismatch,
                  "element " + std::to_string(i) + " acts on " +
                      std::to_string(p.size()) + " points, expected " +
                      std::to_string(n));
    }
    if (!is_derangement(p)) {
      throw Error(ErrorCode::kNotDerangement,
                  "element " + std::to_string(i) + " " + to_cycle_string(p) +
                      " has a fixed point");
    }
  }
}

void check_vertex(const DerangementSet& s, Point v) {
  if (v >= s.domain_size()) {
    throw Error(ErrorCode::kVertexOutOfRange,
                "vertex " + std::to_string(v) + " out of range");
  }
}

// Largest number of elements of S sharing an arc.
std::size_t max_arc_multiplicity(const DerangementSet& s) {
  std::size_t best = 0;
  std::vector<std::size_t> count(s.domain_size(), 0);
  for (Point x = 0; x < s.domain_size(); ++x) {
    std::fill(count.begin(), count.end(), 0);
    for (const auto& g : s) best = std::max(best, ++count[g[x]]);
  }
  return best;
}

}  // namespace

DerangementSet::DerangementSet(std::size_t n, std::vector<Permutation> elements)
    : n_(n), elements_(std::move(elements)) {
  validate_elements(n_, elements_);
  std::vector<Permutation> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw Error(ErrorCode::kDuplicatePermutation,
                "element " + to_cycle_string(*dup) + " occurs more than once");
  }
}

DerangementSet DerangementSet::deduplicated(std::size_t n,
                                            std::vector<Permutation> elements) {
  std::vector<Permutation> unique;
  for (auto& p : elements) {
    if (std::find(unique.begin(), unique.end(), p) == unique.end()) {
      unique.push_back(std::move(p));
    }
  }
  return DerangementSet(n, std::move(unique));
}

bool DerangementSet::contains(const Permutation& p) const {
  return std::find(elements_.begin(), elements_.end(), p) != elements_.end();
}

DerangementSet DerangementSet::inverses() const {
  std::vector<Permutation> inv;
  inv.reserve(elements_.size());
  for (const auto& p : elements_) inv.push_back(inverse(p));
  return DerangementSet(n_, std::move(inv));
}

bool DerangementSet::same_set_as(const DerangementSet& other) const {
  if (n_ != other.n_ || size() != other.size()) return false;
  std::vector<Permutation> a = elements_;
  std::vector<Permutation> b = other.elements_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

SimpleDigraph build_da(const DerangementSet& s) {
  std::vector<Arc> arcs;
  arcs.reserve(s.domain_size() * s.size());
  for (Point x = 0; x < s.domain_size(); ++x) {
    for (const auto& g : s) arcs.emplace_back(x, g[x]);
  }
  return SimpleDigraph::from_arc_multiset(s.domain_size(), std::move(arcs));
}

std::size_t multiplicity(const DerangementSet& s, Point u, Point v) {
  check_vertex(s, u);
  check_vertex(s, v);
  if (u == v) {
    throw Error(ErrorCode::kInvalidArgument,
                "multiplicity is defined for distinct vertices");
  }
  return static_cast<std::size_t>(std::count_if(
      s.begin(), s.end(), [&](const Permutation& g) { return g[u] == v; }));
}

std::vector<Point> image_set(const DerangementSet& s, Point x) {
  check_vertex(s, x);
  std::vector<Point> images;
  for (const auto& g : s) images.push_back(g[x]);
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

bool products_with_inverses_are_derangements(const DerangementSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Permutation inv = inverse(s[i]);
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (i == j) continue;
      // s_j s_i^-1 is the identity only when i == j (S has no repeats).
      if (!is_derangement(compose(s[j], inv))) return false;
    }
  }
  return true;
}

bool is_multiplicity_free(const DerangementSet& s) {
  const bool algebraic = products_with_inverses_are_derangements(s);
  const bool counted = max_arc_multiplicity(s) <= 1;
  if (algebraic != counted) {
    throw std::logic_error(
        "multiplicity-free tests disagree for " + std::to_string(s.size()) +
        " derangements on " + std::to_string(s.domain_size()) + " points");
  }
  return algebraic;
}

bool is_closed(const DerangementSet& s) {
  const DerangementSet inv = s.inverses();
  for (Point x = 0; x < s.domain_size(); ++x) {
    if (image_set(s, x) != image_set(inv, x)) return false;
  }
  return products_with_inverses_are_derangements(s);
}

bool is_self_inverse(const DerangementSet& s) {
  return s.same_set_as(s.inverses());
}

AnalysisReport analyze(const DerangementSet& s) {
  const SimpleDigraph g = build_da(s);
  AnalysisReport report;
  report.set_size = s.size();
  report.multiplicity_free = is_multiplicity_free(s);
  report.closed = is_closed(s);
  report.self_inverse = is_self_inverse(s);
  report.symmetric = is_symmetric(g);
  report.regular_valency = is_regular(g);
  report.valency_profile = valency_profile(g);
  report.max_multiplicity = max_arc_multiplicity(s);
  report.component_count = orbits(s.elements(), s.domain_size()).size();

  const bool valency_is_size = report.regular_valency == s.size();
  if (report.closed != (report.symmetric && valency_is_size)) {
    throw std::logic_error("closed-set characterisation violated");
  }
  if (report.multiplicity_free != valency_is_size) {
    throw std::logic_error("multiplicity-free characterisation violated");
  }
  return report;
}

std::vector<Component> components(const DerangementSet& s) {
  const SimpleDigraph whole = build_da(s);
  std::vector<Component> result;
  for (auto& part : orbits(s.elements(), s.domain_size())) {
    std::vector<Permutation> restricted;
    restricted.reserve(s.size());
    for (const auto& g : s) restricted.push_back(restrict(g, part));
    DerangementSet local =
        DerangementSet::deduplicated(part.size(), std::move(restricted));
    SimpleDigraph digraph = induced(whole, part);
    if (digraph != build_da(local)) {
      throw std::logic_error("component digraph differs from its restriction");
    }
    result.push_back(
        Component{std::move(part), std::move(local), std::move(digraph)});
  }
  return result;
}

std::vector<Permutation> all_derangements(std::size_t n) {
  std::vector<Permutation> result;
  if (n == 0) return result;
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  do {
    bool fixed = false;
    for (Point i = 0; i < n; ++i) fixed = fixed || images[i] == i;
    if (!fixed) result.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return result;
}

std::vector<DerangementSet> search_valency_gap(std::size_t max_points,
                                               std::size_t max_set_size) {
  if (max_points > kGapSearchMaxPoints) {
    throw Error(ErrorCode::kGuardExceeded,
                "gap search guard: n <= " +
                    std::to_string(kGapSearchMaxPoints));
  }
  if (max_set_size > kGapSearchMaxSetSize) {
    throw Error(ErrorCode::kGuardExceeded,
                "gap search guard: |S| <= " +
                    std::to_string(kGapSearchMaxSetSize));
  }
  std::vector<DerangementSet> witnesses;
  for (std::size_t n = 2; n <= max_points; ++n) {
    const std::vector<Permutation> pool = all_derangements(n);
    // Row x of an adjacency bitmask: bit y set iff (x, y) is an arc.
    std::vector<std::vector<std::uint32_t>> rows(pool.size(),
                                                 std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (Point x = 0; x < n; ++x) rows[i][x] = 1u << pool[i][x];
    }
    for (std::size_t k = 1; k <= max_set_size && k <= pool.size(); ++k) {
      std::vector<std::size_t> pick(k);
      std::iota(pick.begin(), pick.end(), std::size_t{0});
      std::vector<std::uint32_t> adj(n);
      while (true) {
        std::fill(adj.begin(), adj.end(), 0u);
        for (const std::size_t i : pick) {
          for (Point x = 0; x < n; ++x) adj[x] |= rows[i][x];
        }
        const int valency = std::popcount(adj[0]);
        bool hit = static_cast<std::size_t>(valency) < k;
        for (Point x = 0; hit && x < n; ++x) {
          hit = std::popcount(adj[x]) == valency;
          for (Point y = 0; hit && y < n; ++y) {
            // Symmetric with equal out-valencies makes in-valencies equal.
            hit = ((adj[x] >> y) & 1u) == ((adj[y] >> x) & 1u);
          }
        }
        if (hit) {
          std::vector<Permutation> chosen;
          for (const std::size_t i : pick) chosen.push_back(pool[i]);
          witnesses.emplace_back(n, std::move(chosen));
        }
        // Next k-combination of pool indices in lexicographic order.
        std::size_t pos = k;
        while (pos > 0 && pick[pos - 1] == pool.size() - k + pos - 1) --pos;
        if (pos == 0) break;
        ++pick[pos - 1];
        for (std::size_t j = pos; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  return witnesses;
}

}  // namespace dad
