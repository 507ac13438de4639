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

#include "dad/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "dad/error.hpp"

namespace dad {
namespace {

void require_same_size(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDomainMismatch,
                "permutations act on " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()) + " points");
  }
}

}  // namespace

Permutation::Permutation(std::vector<Point> images)
    : images_(std::move(images)) {
  if (images_.empty()) {
    throw Error(ErrorCode::kInvalidPermutation,
                "a permutation needs at least one point");
  }
  std::vector<bool> seen(images_.size(), false);
  for (const Point image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorCode::kInvalidPermutation,
                  "image array is not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t n, const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> images(n);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const Point x = cycle[i];
      if (x >= n) {
        throw Error(ErrorCode::kInvalidPermutation,
                    "point " + std::to_string(x) + " out of range for " +
                        std::to_string(n) + " points");
      }
      if (used[x]) {
        throw Error(ErrorCode::kInvalidPermutation,
                    "point " + std::to_string(x) + " appears twice");
      }
      used[x] = true;
      images[x] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_size(p, q);
  std::vector<Point> images(p.size());
  for (Point i = 0; i < p.size(); ++i) images[i] = q[p[i]];
  return Permutation(std::move(images));
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> images(p.size());
  for (Point i = 0; i < p.size(); ++i) images[p[i]] = i;
  return Permutation(std::move(images));
}

bool is_derangement(const Permutation& p) {
  for (Point i = 0; i < p.size(); ++i) {
    if (p[i] == i) return false;
  }
  return true;
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  require_same_size(p, g);
  // x^(g^-1 p g): if x = y^g then the image is (y^p)^g.
  std::vector<Point> images(p.size());
  for (Point y = 0; y < p.size(); ++y) images[g[y]] = g[p[y]];
  return Permutation(std::move(images));
}

CycleStructure cycle_structure(const Permutation& p) {
  CycleStructure result;
  std::vector<bool> visited(p.size(), false);
  for (Point start = 0; start < p.size(); ++start) {
    if (visited[start]) continue;
    std::vector<Point> cycle;
    for (Point x = start; !visited[x]; x = p[x]) {
      visited[x] = true;
      cycle.push_back(x);
    }
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

std::vector<std::size_t> cycle_type(const Permutation& p) {
  std::vector<std::size_t> lengths;
  for (const auto& cycle : cycle_structure(p).cycles) {
    lengths.push_back(cycle.size());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t n) {
  if (generators.empty()) {
    throw Error(ErrorCode::kEmptySet, "orbits need at least one generator");
  }
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw Error(ErrorCode::kDomainMismatch,
                  "generator acts on " + std::to_string(g.size()) +
                      " points, expected " + std::to_string(n));
    }
  }
  // Finite permutations: the forward images alone reach the whole orbit.
  std::vector<std::vector<Point>> result;
  std::vector<bool> seen(n, false);
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> orbit{start};
    seen[start] = true;
    std::deque<Point> queue{start};
    while (!queue.empty()) {
      const Point x = queue.front();
      queue.pop_front();
      for (const auto& g : generators) {
        const Point y = g[x];
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
          queue.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

Permutation restrict(const Permutation& p, std::span<const Point> part) {
  if (part.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "cannot restrict to an empty set");
  }
  std::vector<std::int64_t> position(p.size(), -1);
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (part[i] >= p.size()) {
      throw Error(ErrorCode::kVertexOutOfRange,
                  "point " + std::to_string(part[i]) + " out of range");
    }
    if (i > 0 && part[i] <= part[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "restriction part must be sorted and duplicate-free");
    }
    position[part[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Point> images(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) {
    const std::int64_t target = position[p[part[i]]];
    if (target < 0) {
      throw Error(ErrorCode::kNotInvariant,
                  "point " + std::to_string(part[i]) + " maps outside the part");
    }
    images[i] = static_cast<Point>(target);
  }
  return Permutation(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  for (const auto& cycle : cycle_structure(p).cycles) {
    if (cycle.size() < 2) continue;
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out << ' ';
      out << cycle[i];
    }
    out << ')';
  }
  const std::string text = out.str();
  return text.empty() ? "id" : text;
}

}  // namespace dad
