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

#include "dad/iso.hpp"

#include <stdexcept>
#include <string>

#include "dad/error.hpp"

namespace dad {
namespace {

void require_domain(const Permutation& g, std::size_t n) {
  if (g.size() != n) {
    throw Error(ErrorCode::kDomainMismatch,
                "permutation acts on " + std::to_string(g.size()) +
                    " points, expected " + std::to_string(n));
  }
}

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const SimpleDigraph& g)
      : n_(g.vertex_count()),
        profile_(valency_profile(g)),
        adjacency_(n_, std::vector<bool>(n_, false)),
        image_(n_),
        used_(n_, false) {
    for (const auto& [u, v] : g.arcs()) adjacency_[u][v] = true;
  }

  std::vector<Permutation> run() {
    if (n_ > 0) extend(0);
    return std::move(found_);
  }

 private:
  // Assign images to vertices 0..n-1 in order, candidates ascending, so the
  // results come out in lexicographic order.
  void extend(Vertex v) {
    if (v == n_) {
      found_.emplace_back(image_);
      return;
    }
    for (Vertex c = 0; c < n_; ++c) {
      if (used_[c] ||
          profile_.out_valencies[c] != profile_.out_valencies[v] ||
          profile_.in_valencies[c] != profile_.in_valencies[v]) {
        continue;
      }
      bool consistent = true;
      for (Vertex w = 0; consistent && w < v; ++w) {
        consistent = adjacency_[v][w] == adjacency_[c][image_[w]] &&
                     adjacency_[w][v] == adjacency_[image_[w]][c];
      }
      if (!consistent) continue;
      image_[v] = c;
      used_[c] = true;
      extend(v + 1);
      used_[c] = false;
    }
  }

  std::size_t n_;
  ValencyProfile profile_;
  std::vector<std::vector<bool>> adjacency_;
  std::vector<Point> image_;
  std::vector<bool> used_;
  std::vector<Permutation> found_;
};

}  // namespace

SimpleDigraph permute_vertices(const SimpleDigraph& g, const Permutation& p) {
  require_domain(p, g.vertex_count());
  std::vector<Arc> arcs;
  arcs.reserve(g.arc_count());
  for (const auto& [u, v] : g.arcs()) arcs.emplace_back(p[u], p[v]);
  return SimpleDigraph(g.vertex_count(), std::move(arcs));
}

DerangementSet conjugate_set(const DerangementSet& s, const Permutation& g) {
  require_domain(g, s.domain_size());
  std::vector<Permutation> conj;
  conj.reserve(s.size());
  for (const auto& p : s) conj.push_back(conjugate(p, g));
  return DerangementSet(s.domain_size(), std::move(conj));
}

bool is_isomorphism(const Permutation& g, const DerangementSet& s,
                    const DerangementSet& t) {
  if (s.domain_size() != t.domain_size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "derangement sets act on different domains");
  }
  require_domain(g, s.domain_size());

  const DerangementSet sg = conjugate_set(s, g);
  bool pointwise = true;
  for (Point x = 0; pointwise && x < s.domain_size(); ++x) {
    pointwise = image_set(sg, x) == image_set(t, x);
  }
  const bool arcwise = permute_vertices(build_da(s), g) == build_da(t);
  if (pointwise != arcwise) {
    throw std::logic_error("isomorphism criteria disagree");
  }
  return pointwise;
}

AutGroup automorphism_group(const SimpleDigraph& g) {
  if (g.vertex_count() > kAutomorphismMaxPoints) {
    throw Error(ErrorCode::kGuardExceeded,
                "automorphism search guard: n <= " +
                    std::to_string(kAutomorphismMaxPoints));
  }
  return AutGroup{AutomorphismSearch(g).run()};
}

AutGroup automorphism_group(const DerangementSet& s) {
  if (s.domain_size() > kAutomorphismMaxPoints) {
    throw Error(ErrorCode::kGuardExceeded,
                "automorphism search guard: n <= " +
                    std::to_string(kAutomorphismMaxPoints));
  }
  return automorphism_group(build_da(s));
}

bool normalizer_in_aut_check(const DerangementSet& s, const Permutation& g) {
  return conjugate_set(s, g).same_set_as(s);
}

bool is_vertex_transitive(const DerangementSet& s) {
  const AutGroup aut = automorphism_group(s);
  std::vector<bool> reached(s.domain_size(), false);
  for (const auto& p : aut.elements) reached[p[0]] = true;
  for (const bool r : reached) {
    if (!r) return false;
  }
  return true;
}

}  // namespace dad
