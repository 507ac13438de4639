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

#include "dad/two_sided.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>
#include <string>

#include "dad/error.hpp"

namespace dad {
namespace {

constexpr std::size_t kExhaustiveAssociativityOrder = 24;
constexpr std::size_t kAssociativitySamples = 20000;

std::string coord(std::size_t row, std::size_t col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

void check_elements(const FiniteGroup& g, std::span<const Element> elements,
                    const char* what) {
  if (elements.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be non-empty");
  }
  for (const Element e : elements) {
    if (e >= g.order()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(what) + " element " + std::to_string(e) +
                      " outside group of order " + std::to_string(g.order()));
    }
  }
}

std::vector<Element> as_set(std::span<const Element> elements) {
  std::vector<Element> result;
  for (const Element e : elements) {
    if (std::find(result.begin(), result.end(), e) == result.end()) {
      result.push_back(e);
    }
  }
  return result;
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<std::vector<Element>> table)
    : table_(std::move(table)) {
  const std::size_t m = table_.size();
  if (m == 0) throw Error(ErrorCode::kInvalidGroup, "group table is empty");
  for (std::size_t a = 0; a < m; ++a) {
    if (table_[a].size() != m) {
      throw Error(ErrorCode::kInvalidGroup,
                  "row " + std::to_string(a) + " has " +
                      std::to_string(table_[a].size()) + " entries, expected " +
                      std::to_string(m));
    }
    for (std::size_t b = 0; b < m; ++b) {
      if (table_[a][b] >= m) {
        throw Error(ErrorCode::kInvalidGroup,
                    "entry " + coord(a, b) + " is out of range");
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    std::vector<bool> row_seen(m, false);
    std::vector<bool> col_seen(m, false);
    for (std::size_t b = 0; b < m; ++b) {
      if (row_seen[table_[a][b]]) {
        throw Error(ErrorCode::kInvalidGroup,
                    "row " + std::to_string(a) + " repeats a value at " +
                        coord(a, b));
      }
      if (col_seen[table_[b][a]]) {
        throw Error(ErrorCode::kInvalidGroup,
                    "column " + std::to_string(a) + " repeats a value at " +
                        coord(b, a));
      }
      row_seen[table_[a][b]] = true;
      col_seen[table_[b][a]] = true;
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) {
      throw Error(ErrorCode::kInvalidGroup,
                  "element 0 is not the identity at " +
                      coord(table_[0][a] != a ? 0 : a, table_[0][a] != a ? a : 0));
    }
  }
  const auto check_triple = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
      throw Error(ErrorCode::kInvalidGroup,
                  "associativity fails for (" + std::to_string(a) + "," +
                      std::to_string(b) + "," + std::to_string(c) + ")");
    }
  };
  if (m <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) check_triple(a, b, c);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      check_triple(pick(rng), pick(rng), pick(rng));
    }
  }
  // Latin rows guarantee a unique solution of a * x = 0.
  inverse_.resize(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (table_[a][b] == 0) inverse_[a] = static_cast<Element>(b);
    }
    if (table_[inverse_[a]][a] != 0) {
      throw Error(ErrorCode::kInvalidGroup,
                  "element " + std::to_string(a) +
                      " has no two-sided inverse at " + coord(inverse_[a], a));
    }
  }
}

FiniteGroup FiniteGroup::from_permutations(std::vector<Permutation> elements,
                                           ProductOrder order) {
  if (elements.empty() || !elements.front().is_identity()) {
    throw Error(ErrorCode::kInvalidGroup,
                "element 0 of a permutation group must be the identity");
  }
  FiniteGroup group;
  group.product_order_ = order;
  group.action_ = std::move(elements);
  for (std::size_t i = 0; i < group.action_.size(); ++i) {
    if (!group.index_.emplace(group.action_[i], static_cast<Element>(i))
             .second) {
      throw Error(ErrorCode::kInvalidGroup,
                  "element " + std::to_string(i) + " is repeated");
    }
  }
  group.inverse_.resize(group.action_.size());
  for (std::size_t i = 0; i < group.action_.size(); ++i) {
    const auto inv = group.find(dad::inverse(group.action_[i]));
    if (!inv) {
      throw Error(ErrorCode::kInvalidGroup,
                  "inverse of element " + std::to_string(i) + " is missing");
    }
    group.inverse_[i] = *inv;
  }
  return group;
}

Element FiniteGroup::multiply(Element a, Element b) const {
  if (!table_.empty()) return table_.at(a).at(b);
  const auto found =
      find(product_order_ == ProductOrder::kLeftToRight
               ? compose(action_.at(a), action_.at(b))
               : compose(action_.at(b), action_.at(a)));
  if (!found) {
    throw Error(ErrorCode::kInvalidGroup,
                "product " + coord(a, b) + " leaves the element list");
  }
  return *found;
}

std::optional<Element> FiniteGroup::find(const Permutation& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<Element>> FiniteGroup::multiplication_table() const {
  if (!table_.empty()) return table_;
  std::vector<std::vector<Element>> table(order(),
                                          std::vector<Element>(order()));
  for (Element a = 0; a < order(); ++a) {
    for (Element b = 0; b < order(); ++b) table[a][b] = multiply(a, b);
  }
  return table;
}

FiniteGroup group_from_generators(std::span<const Permutation> generators,
                                  ProductOrder order) {
  if (generators.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no generators given");
  }
  const std::size_t n = generators.front().size();
  for (const auto& gen : generators) {
    if (gen.size() != n) {
      throw Error(ErrorCode::kDomainMismatch,
                  "generators act on different point sets");
    }
  }
  std::vector<Permutation> elements{Permutation::identity(n)};
  std::map<Permutation, Element> seen{{elements.front(), 0}};
  for (std::size_t next = 0; next < elements.size(); ++next) {
    for (const auto& gen : generators) {
      Permutation product = order == ProductOrder::kLeftToRight
                                ? compose(elements[next], gen)
                                : compose(gen, elements[next]);
      if (seen.contains(product)) continue;
      if (elements.size() == kGroupClosureLimit) {
        throw Error(ErrorCode::kGuardExceeded,
                    "group closure exceeds " +
                        std::to_string(kGroupClosureLimit) + " elements");
      }
      seen.emplace(product, static_cast<Element>(elements.size()));
      elements.push_back(std::move(product));
    }
  }
  return FiniteGroup::from_permutations(std::move(elements), order);
}

Permutation lambda_map(const FiniteGroup& g, Element l, Element r) {
  const Element l_inv = g.inverse(l);
  std::vector<Point> images(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    images[x] = g.multiply(g.multiply(l_inv, x), r);
  }
  return Permutation(std::move(images));
}

Permutation right_translation(const FiniteGroup& g, Element h) {
  std::vector<Point> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = g.multiply(x, h);
  return Permutation(std::move(images));
}

Permutation left_translation(const FiniteGroup& g, Element s) {
  std::vector<Point> images(g.order());
  for (Element x = 0; x < g.order(); ++x) images[x] = g.multiply(s, x);
  return Permutation(std::move(images));
}

std::vector<std::size_t> conjugacy_classes(const FiniteGroup& g) {
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> cls(g.order(), kUnset);
  for (Element a = 0; a < g.order(); ++a) {
    if (cls[a] != kUnset) continue;
    for (Element x = 0; x < g.order(); ++x) {
      cls[g.multiply(g.multiply(g.inverse(x), a), x)] = a;
    }
  }
  return cls;
}

std::optional<std::pair<Element, Element>> conjugate_pair(
    const FiniteGroup& g, std::span<const Element> left,
    std::span<const Element> right) {
  check_elements(g, left, "L");
  check_elements(g, right, "R");
  const auto cls = conjugacy_classes(g);
  for (const Element l : left) {
    for (const Element r : right) {
      if (cls[l] == cls[r]) return std::pair{l, r};
    }
  }
  return std::nullopt;
}

bool is_loopless(const FiniteGroup& g, std::span<const Element> left,
                 std::span<const Element> right) {
  const bool by_classes = !conjugate_pair(g, left, right).has_value();
  bool by_maps = true;
  for (const Element l : left) {
    for (const Element r : right) {
      by_maps = by_maps && is_derangement(lambda_map(g, l, r));
    }
  }
  if (by_classes != by_maps) {
    throw std::logic_error("looplessness tests disagree");
  }
  return by_classes;
}

TwoSidedDigraph two_sided_digraph(const FiniteGroup& g,
                                  std::span<const Element> left,
                                  std::span<const Element> right) {
  const std::vector<Element> ls = as_set(left);
  const std::vector<Element> rs = as_set(right);
  if (!is_loopless(g, ls, rs)) {
    const auto [l, r] = *conjugate_pair(g, ls, rs);
    throw Error(ErrorCode::kNotLoopless,
                "l=" + std::to_string(l) + " and r=" + std::to_string(r) +
                    " are conjugate, so lambda_{l,r} fixes a point");
  }
  std::vector<Permutation> maps;
  std::vector<Arc> arcs;
  for (const Element l : ls) {
    for (const Element r : rs) {
      maps.push_back(lambda_map(g, l, r));
      for (Element x = 0; x < g.order(); ++x) {
        arcs.emplace_back(x, g.multiply(g.multiply(g.inverse(l), x), r));
      }
    }
  }
  TwoSidedDigraph result{DerangementSet::deduplicated(g.order(), std::move(maps)),
                         SimpleDigraph::from_arc_multiset(g.order(), std::move(arcs)),
                         ls.size() * rs.size()};
  if (build_da(result.set) != result.digraph) {
    throw std::logic_error("two-sided digraph differs from DA(G, S(L,R))");
  }
  return result;
}

CayleyDigraph cayley_digraph(const FiniteGroup& g,
                             std::span<const Element> connection) {
  check_elements(g, connection, "connection set");
  const std::vector<Element> cs = as_set(connection);
  std::vector<Permutation> maps;
  std::vector<Arc> arcs;
  std::vector<Element> inverses;
  for (const Element s : cs) {
    if (s == 0) {
      throw Error(ErrorCode::kIdentityInConnectionSet,
                  "the identity cannot be in a Cayley connection set");
    }
    maps.push_back(left_translation(g, s));
    inverses.push_back(g.inverse(s));
    for (Element x = 0; x < g.order(); ++x) {
      arcs.emplace_back(x, g.multiply(s, x));
    }
  }
  CayleyDigraph result{DerangementSet(g.order(), std::move(maps)),
                       SimpleDigraph(g.order(), std::move(arcs))};
  const std::vector<Element> identity{0};
  if (two_sided_digraph(g, inverses, identity).digraph != result.digraph) {
    throw std::logic_error("Cayley digraph differs from 2S(G; C^-1, {1})");
  }
  return result;
}

}  // namespace dad
