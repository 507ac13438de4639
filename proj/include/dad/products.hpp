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
#include <string_view>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/perm.hpp"

namespace dad {

enum class ProductKind { kCartesian, kTensor, kStrong, kLexicographic };

std::string_view to_string(ProductKind kind);
std::optional<ProductKind> parse_product_kind(std::string_view name);

// A permutation group on Y acting regularly: exactly |Y| elements, and for
// every ordered pair (y, y') exactly one element maps y to y'.
class RegularSubgroup {
 public:
  // Throws Error(kInvalidSubgroup) when the invariants fail.
  explicit RegularSubgroup(std::vector<Permutation> elements);

  std::size_t degree() const noexcept { return elements_.front().size(); }
  const std::vector<Permutation>& elements() const noexcept {
    return elements_;
  }

 private:
  std::vector<Permutation> elements_;
};

// The m rotations y -> y + i (mod m).
RegularSubgroup cyclic_regular_subgroup(std::size_t m);

// The product of two digraphs on X x Y, with (x, y) encoded as x * |Y| + y.
SimpleDigraph product_digraph(const SimpleDigraph& g, const SimpleDigraph& h,
                              ProductKind kind);

// (g, h) acting coordinatewise on X x Y under the same encoding.
Permutation product_permutation(const Permutation& g, const Permutation& h);

// The derangement set on X x Y whose action digraph is the corresponding
// product of DA(X, S) and DA(Y, T). The lexicographic product needs U;
// the other kinds reject it.
DerangementSet product_set(const DerangementSet& s, const DerangementSet& t,
                           ProductKind kind,
                           const std::optional<RegularSubgroup>& u = {});

}  // namespace dad
