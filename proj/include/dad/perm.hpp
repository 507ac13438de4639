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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace dad {

using Point = std::uint32_t;

// A bijection of {0, ..., n-1}, stored as its image array. Points act on the
// right: the image of x under p is p[x], and compose(p, q) applies p first.
class Permutation {
 public:
  // Throws Error(kInvalidPermutation) unless `images` is a bijection of
  // {0, ..., images.size()-1} with at least one point.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t n);

  // Builds a permutation on n points from disjoint cycles. Points not
  // mentioned are fixed.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t size() const noexcept { return images_.size(); }
  Point operator[](Point x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

// Canonical disjoint cycle decomposition: every cycle starts at its least
// point, cycles are sorted by that point, fixed points are length-1 cycles.
struct CycleStructure {
  std::vector<std::vector<Point>> cycles;

  friend bool operator==(const CycleStructure&,
                         const CycleStructure&) = default;
};

// "p then q": result[i] == q[p[i]]. Throws on domain-size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) {
  return compose(p, q);
}

Permutation inverse(const Permutation& p);

bool is_derangement(const Permutation& p);

// g^-1 p g.
Permutation conjugate(const Permutation& p, const Permutation& g);

CycleStructure cycle_structure(const Permutation& p);

// Sorted (ascending) list of cycle lengths, fixed points included.
std::vector<std::size_t> cycle_type(const Permutation& p);

// Orbits of the group generated by `generators` on {0, ..., n-1}, each
// sorted, listed by least element.
std::vector<std::vector<Point>> orbits(std::span<const Permutation> generators,
                                       std::size_t n);

// The action of p on an invariant subset, relabelled by the order-preserving
// bijection part[i] <-> i. `part` must be sorted and duplicate-free.
Permutation restrict(const Permutation& p, std::span<const Point> part);

// Disjoint cycle notation, fixed points omitted, "id" for the identity.
std::string to_cycle_string(const Permutation& p);

}  // namespace dad
