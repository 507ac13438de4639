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
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/perm.hpp"

namespace dad {

using Element = std::uint32_t;

// How products of permutation-defined group elements are read. With
// kLeftToRight, a * b applies a first (the convention used for points
// throughout); kRightToLeft is ordinary function composition, b first.
enum class ProductOrder { kLeftToRight, kRightToLeft };

// A finite group on labels 0..m-1 with 0 the identity. Either defined by a
// multiplication table, or by a faithful permutation action in which case
// products are computed by composing permutations in the given ProductOrder.
class FiniteGroup {
 public:
  // Validates the table: square, every row and column a permutation of the
  // labels, 0 a two-sided identity, associative (exhaustively for order <= 24,
  // on random triples above). Violations throw Error(kInvalidGroup) naming
  // the offending coordinates.
  explicit FiniteGroup(std::vector<std::vector<Element>> table);

  // Elements given by a faithful action; element 0 must be the identity and
  // the list must be closed under composition.
  static FiniteGroup from_permutations(
      std::vector<Permutation> elements,
      ProductOrder order = ProductOrder::kLeftToRight);

  std::size_t order() const noexcept { return inverse_.size(); }
  Element multiply(Element a, Element b) const;
  Element inverse(Element a) const { return inverse_.at(a); }

  bool has_point_action() const noexcept { return !action_.empty(); }
  // The permutation of element a in the defining action.
  const Permutation& point_action(Element a) const { return action_.at(a); }
  std::optional<Element> find(const Permutation& p) const;

  // Full table, row a holding the products a * b.
  std::vector<std::vector<Element>> multiplication_table() const;

 private:
  FiniteGroup() = default;

  std::vector<std::vector<Element>> table_;
  std::vector<Permutation> action_;
  std::map<Permutation, Element> index_;
  std::vector<Element> inverse_;
  ProductOrder product_order_ = ProductOrder::kLeftToRight;
};

inline constexpr std::size_t kGroupClosureLimit = 10000;

// Closure of the generators under composition, numbered breadth-first from
// the identity: element i is expanded to i * gen for each generator in the
// given order.
FiniteGroup group_from_generators(
    std::span<const Permutation> generators,
    ProductOrder order = ProductOrder::kLeftToRight);

// g -> l^-1 g r as a permutation of the group's labels.
Permutation lambda_map(const FiniteGroup& g, Element l, Element r);

// Right translation g -> g h.
Permutation right_translation(const FiniteGroup& g, Element h);

// Left translation g -> s g.
Permutation left_translation(const FiniteGroup& g, Element s);

// Class index per element; classes numbered by least member.
std::vector<std::size_t> conjugacy_classes(const FiniteGroup& g);

// First pair (l, r) with l and r conjugate, in the order of L then R.
std::optional<std::pair<Element, Element>> conjugate_pair(
    const FiniteGroup& g, std::span<const Element> left,
    std::span<const Element> right);

// Whether every lambda_{l,r} is a derangement. The conjugacy-class test and
// the direct fixed-point test are both run; disagreement throws
// std::logic_error.
bool is_loopless(const FiniteGroup& g, std::span<const Element> left,
                 std::span<const Element> right);

struct TwoSidedDigraph {
  DerangementSet set;
  SimpleDigraph digraph;
  // |L| * |R| before coincident lambda maps are merged.
  std::size_t raw_count = 0;
};

TwoSidedDigraph two_sided_digraph(const FiniteGroup& g,
                                  std::span<const Element> left,
                                  std::span<const Element> right);

struct CayleyDigraph {
  DerangementSet set;
  SimpleDigraph digraph;
};

// Arcs (g, s g) for s in the connection set, which must avoid the identity.
CayleyDigraph cayley_digraph(const FiniteGroup& g,
                             std::span<const Element> connection);

}  // namespace dad
