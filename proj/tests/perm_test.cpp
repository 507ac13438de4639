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

#include <algorithm>
#include <vector>

#include "dad/error.hpp"
#include "dad/perm.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dad {
namespace {

using fixtures::one_based;
using fixtures::zero_based;

std::vector<Point> images_of(const Permutation& p) {
  return {p.images().begin(), p.images().end()};
}

Permutation cyc(std::size_t n, const fixtures::Cycles& c) {
  return zero_based(n, c);
}

TEST_CASE("permutation construction validates images") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_AS(Permutation(std::vector<Point>{}), Error);
  try {
    Permutation({0, 0, 1});
    FAIL("accepted a non-bijection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidPermutation);
  }
  CHECK_THROWS_AS(Permutation({0, 3, 1}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), Error);
  CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 4}}), Error);
}

TEST_CASE("compose applies the left factor first") {
  const auto c3 = cyc(3, {{0, 1, 2}});
  CHECK(compose(c3, Permutation::identity(3)) == c3);
  CHECK(compose(cyc(2, {{0, 1}}), cyc(2, {{0, 1}})).is_identity());

  // Frozen against the cycle-walking oracle.
  const fixtures::Cycles p{{0, 1, 2, 3}};
  const fixtures::Cycles q{{0, 1}, {2, 3}};
  const auto expected = oracle::compose_by_cycles(4, p, q);
  CHECK(expected == std::vector<Point>{0, 3, 2, 1});
  CHECK(images_of(compose(cyc(4, p), cyc(4, q))) == expected);
  CHECK(images_of(cyc(4, p) * cyc(4, q)) == expected);

  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  Error);
}

TEST_CASE("inverse") {
  CHECK(inverse(cyc(4, {{0, 1, 2, 3}})) == cyc(4, {{0, 3, 2, 1}}));
  CHECK(inverse(cyc(4, {{0, 1}, {2, 3}})) == cyc(4, {{0, 1}, {2, 3}}));
  CHECK(inverse(one_based(4, {{1, 2, 3, 4}})) == one_based(4, {{1, 4, 3, 2}}));
}

TEST_CASE("is_derangement") {
  CHECK_FALSE(is_derangement(Permutation::identity(4)));
  CHECK(is_derangement(cyc(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(is_derangement(cyc(4, {{0, 1}})));
  for (const auto& s : fixtures::c4_s3()) CHECK(is_derangement(s));
}

TEST_CASE("conjugate") {
  const auto p = cyc(3, {{0, 1}});
  CHECK(conjugate(p, Permutation::identity(3)) == p);
  // Conjugation relabels the points of p through g: 0->1, 1->2.
  CHECK(conjugate(p, cyc(3, {{0, 1, 2}})) == cyc(3, {{1, 2}}));
}

TEST_CASE("cycle structure lists fixed points") {
  CHECK(cycle_structure(Permutation::identity(3)).cycles ==
        std::vector<std::vector<Point>>{{0}, {1}, {2}});
  CHECK(cycle_structure(cyc(4, {{0, 1, 2, 3}})).cycles ==
        std::vector<std::vector<Point>>{{0, 1, 2, 3}});
  const auto a = one_based(8, {{1, 2}, {3, 4}, {5, 6}, {7, 8}});
  CHECK(cycle_structure(a).cycles.size() == 4);
  CHECK(cycle_type(a) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(to_cycle_string(Permutation::identity(2)) == "id");
  CHECK(to_cycle_string(cyc(6, {{0, 1, 2, 3}, {4, 5}})) == "(0 1 2 3)(4 5)");
}

TEST_CASE("orbits") {
  const auto z7 = fixtures::z7_two_components();
  CHECK(orbits(z7.elements(), 7) ==
        std::vector<std::vector<Point>>{{0, 1, 2}, {3, 4, 5, 6}});
  const std::vector<Permutation> one{cyc(4, {{0, 1, 2, 3}})};
  CHECK(orbits(one, 4) == std::vector<std::vector<Point>>{{0, 1, 2, 3}});
  const std::vector<Permutation> two{cyc(4, {{0, 1}}), cyc(4, {{2, 3}})};
  CHECK(orbits(two, 4) == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});

  CHECK_THROWS_AS(orbits(std::vector<Permutation>{}, 3), Error);
  CHECK_THROWS_AS(orbits(one, 5), Error);
}

TEST_CASE("restrict") {
  const auto p = cyc(7, {{0, 1, 2}, {3, 4, 5, 6}});
  const std::vector<Point> big{3, 4, 5, 6};
  CHECK(restrict(p, big) == cyc(4, {{0, 1, 2, 3}}));
  const std::vector<Point> all{0, 1, 2, 3, 4, 5, 6};
  CHECK(restrict(p, all) == p);
  const std::vector<Point> pair{0, 1};
  CHECK(restrict(cyc(4, {{0, 1}, {2, 3}}), pair) == cyc(2, {{0, 1}}));
  try {
    restrict(cyc(4, {{0, 2}, {1, 3}}), pair);
    FAIL("restricted to a non-invariant part");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotInvariant);
  }
}

TEST_CASE("property: group laws on random permutations") {
  gen::Rng rng(0x5eed01);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 8);
    const auto p = gen::random_permutation(n, rng);
    const auto q = gen::random_permutation(n, rng);
    const auto r = gen::random_permutation(n, rng);
    REQUIRE(compose(compose(p, q), r) == compose(p, compose(q, r)));
    REQUIRE(inverse(inverse(p)) == p);
    REQUIRE(compose(p, inverse(p)).is_identity());
    REQUIRE(compose(inverse(p), p).is_identity());

    // Against the cycle-walking oracle.
    const auto cp = cycle_structure(p).cycles;
    const auto cq = cycle_structure(q).cycles;
    REQUIRE(images_of(compose(p, q)) == oracle::compose_by_cycles(n, cp, cq));

    const auto ct = cycle_structure(p).cycles;
    const bool has_fixed = std::any_of(ct.begin(), ct.end(), [](const auto& c) {
      return c.size() == 1;
    });
    REQUIRE(is_derangement(p) == !has_fixed);

    REQUIRE(cycle_type(conjugate(p, q)) == cycle_type(p));
  }
}

TEST_CASE("property: orbits match union-find") {
  gen::Rng rng(0x5eed02);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 10);
    const std::size_t k = gen::uniform(rng, 1, 3);
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < k; ++i) {
      // Sparse permutations so orbits are not always the whole domain.
      std::vector<Point> images(n);
      for (Point x = 0; x < n; ++x) images[x] = x;
      const Point a = static_cast<Point>(gen::uniform(rng, 0, n - 1));
      const Point b = static_cast<Point>(gen::uniform(rng, 0, n - 1));
      std::swap(images[a], images[b]);
      gens.emplace_back(std::move(images));
    }
    REQUIRE(orbits(gens, n) == oracle::orbits_by_union_find(gens, n));
  }
}

TEST_CASE("property: restriction commutes with composition") {
  gen::Rng rng(0x5eed03);
  for (int trial = 0; trial < 300; ++trial) {
    // Two permutations preserving the split {0..a-1} | {a..n-1}.
    const std::size_t a = gen::uniform(rng, 1, 4);
    const std::size_t b = gen::uniform(rng, 1, 4);
    const auto block = [&](std::size_t) {
      const auto x = gen::random_permutation(a, rng);
      const auto y = gen::random_permutation(b, rng);
      std::vector<Point> images;
      for (Point i = 0; i < a; ++i) images.push_back(x[i]);
      for (Point i = 0; i < b; ++i) images.push_back(y[i] + Point(a));
      return Permutation(images);
    };
    const auto p = block(0);
    const auto q = block(1);
    std::vector<Point> lower(a), upper(b);
    for (Point i = 0; i < a; ++i) lower[i] = i;
    for (Point i = 0; i < b; ++i) upper[i] = Point(a) + i;
    for (const auto* part : {&lower, &upper}) {
      REQUIRE(restrict(compose(p, q), *part) ==
              compose(restrict(p, *part), restrict(q, *part)));
    }
  }
}

}  // namespace
}  // namespace dad
