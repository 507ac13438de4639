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
#include <bit>
#include <map>
#include <set>
#include <vector>

#include "dad/action_digraph.hpp"
#include "dad/digraph.hpp"
#include "dad/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace dad {
namespace {

using fixtures::error_code;
using fixtures::one_based;
using fixtures::zero_based;

// Arc multiplicities counted straight from the image arrays.
std::map<Arc, std::size_t> multiplicity_table(const DerangementSet& s) {
  std::map<Arc, std::size_t> table;
  for (const auto& p : s) {
    for (Point x = 0; x < s.domain_size(); ++x) ++table[{x, p[x]}];
  }
  return table;
}

TEST_CASE("derangement set validation") {
  CHECK(error_code([] { DerangementSet(3, {}); }) == ErrorCode::kEmptySet);
  CHECK(error_code([] {
          DerangementSet(3, {Permutation::identity(3)});
        }) == ErrorCode::kNotDerangement);
  CHECK(error_code([] {
          DerangementSet(3, {zero_based(4, {{0, 1}, {2, 3}})});
        }) == ErrorCode::kDomainMismatch);
  const auto c = zero_based(3, {{0, 1, 2}});
  CHECK(error_code([&] { DerangementSet(3, {c, c}); }) ==
        ErrorCode::kDuplicatePermutation);
  CHECK(DerangementSet::deduplicated(3, {c, c}).size() == 1);
}

TEST_CASE("the three C4 sets share one digraph") {
  const auto g1 = build_da(fixtures::c4_s1());
  const auto g2 = build_da(fixtures::c4_s2());
  const auto g3 = build_da(fixtures::c4_s3());
  CHECK(g1 == fixtures::cycle_graph(4));
  CHECK(g1.arc_count() == 8);
  CHECK(g1 == g2);
  CHECK(g2 == g3);
  CHECK(is_multiplicity_free(fixtures::c4_s1()));
  CHECK(is_multiplicity_free(fixtures::c4_s2()));
  CHECK_FALSE(is_multiplicity_free(fixtures::c4_s3()));
}

TEST_CASE("multiplicity") {
  const auto s3 = fixtures::c4_s3();
  // 1 -> 2 in 1-based labels, via (1234) and (12)(34).
  CHECK(multiplicity(s3, 0, 1) == 2);
  CHECK(multiplicity(s3, 0, 2) == 0);
  CHECK(image_set(s3, 0) == std::vector<Point>{1, 3});

  const auto abc = fixtures::irregular_abc();
  const auto g = build_da(abc);
  CHECK(g.arc_count() == 18);
  std::size_t ones = 0, twos = 0;
  std::set<Arc> doubled;
  for (const auto& arc : g.arcs()) {
    const auto m = multiplicity(abc, arc.first, arc.second);
    if (m == 1) ++ones;
    if (m == 2) {
      ++twos;
      doubled.insert(arc);
    }
  }
  CHECK(ones == 12);
  CHECK(twos == 6);
  // 1-based edges 34, 56 and 18.
  CHECK(doubled == std::set<Arc>{{0, 7}, {2, 3}, {3, 2}, {4, 5}, {5, 4},
                                 {7, 0}});
}

TEST_CASE("the irregular example") {
  const auto g = build_da(fixtures::irregular_abc());
  std::vector<std::pair<Vertex, Vertex>> expected;
  for (Vertex i = 0; i < 8; ++i) expected.emplace_back(i, (i + 1) % 8);
  expected.emplace_back(1, 6);  // 1-based chord 2-7
  CHECK(g == SimpleDigraph::from_edges(8, expected));

  const auto report = analyze(fixtures::irregular_abc());
  CHECK(report.symmetric);
  CHECK_FALSE(report.regular_valency.has_value());
  CHECK_FALSE(report.closed);
  CHECK_FALSE(report.multiplicity_free);
  CHECK(report.max_multiplicity == 2);
}

TEST_CASE("closed and self-inverse") {
  const auto s = fixtures::six_closed();
  const auto t = fixtures::six_self_inverse();
  CHECK(is_closed(s));
  CHECK_FALSE(is_self_inverse(s));
  CHECK(is_closed(t));
  CHECK(is_self_inverse(t));
  CHECK(build_da(s) == build_da(t));
  CHECK(build_da(s) == fixtures::six_cubic_graph());

  CHECK(is_closed(fixtures::c4_s2()));
  CHECK(is_self_inverse(fixtures::c4_s2()));
  CHECK_FALSE(is_closed(fixtures::c4_s3()));
  CHECK(is_self_inverse(fixtures::c4_s1()));
}

TEST_CASE("analyze") {
  const auto r = analyze(fixtures::six_self_inverse());
  CHECK(r.closed);
  CHECK(r.self_inverse);
  CHECK(r.symmetric);
  CHECK(r.regular_valency == 3);
  CHECK(r.set_size == 3);
  CHECK(r.component_count == 1);

  const auto r1 = analyze(fixtures::c4_s1());
  CHECK(r1.multiplicity_free);
  CHECK(r1.regular_valency == 2);
  CHECK(r1.max_multiplicity == 1);

  CHECK(analyze(fixtures::z7_two_components()).component_count == 2);
}

TEST_CASE("components of the Z7 example") {
  const auto parts = components(fixtures::z7_two_components());
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == std::vector<Point>{0, 1, 2});
  CHECK(parts[1].vertices == std::vector<Point>{3, 4, 5, 6});
  CHECK(parts[0].digraph == fixtures::complete_graph(3));
  CHECK(parts[1].digraph == fixtures::cycle_graph(4));
  CHECK(parts[0].set.size() == 2);
  CHECK(parts[1].set.size() == 2);
}

TEST_CASE("components: single involution pair and restriction dedupe") {
  const DerangementSet s(4, {zero_based(4, {{0, 1}, {2, 3}})});
  const auto parts = components(s);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].vertices == std::vector<Point>{0, 1});
  CHECK(parts[1].vertices == std::vector<Point>{2, 3});
  CHECK(parts[0].digraph == SimpleDigraph(2, {{0, 1}, {1, 0}}));

  // Both elements act as (0 1) on the first orbit.
  const DerangementSet t(5, {zero_based(5, {{0, 1}, {2, 3, 4}}),
                             zero_based(5, {{0, 1}, {2, 4, 3}})});
  const auto tparts = components(t);
  REQUIRE(tparts.size() == 2);
  CHECK(tparts[0].set.size() == 1);
  CHECK(tparts[1].set.size() == 2);
}

TEST_CASE("components: transitive set gives the whole digraph") {
  const auto parts = components(fixtures::six_closed());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].digraph == build_da(fixtures::six_closed()));
}

TEST_CASE("all derangements") {
  CHECK(all_derangements(2).size() == 1);
  CHECK(all_derangements(3).size() == 2);
  CHECK(all_derangements(4).size() == 9);
  CHECK(all_derangements(5).size() == 44);
  const auto d4 = all_derangements(4);
  CHECK(std::is_sorted(d4.begin(), d4.end()));
  std::size_t brute = 0;
  for (const auto& p : oracle::all_permutations(6)) brute += is_derangement(p);
  CHECK(all_derangements(6).size() == brute);
}

TEST_CASE("valency gap search") {
  CHECK(search_valency_gap(3, 2).empty());
  CHECK(search_valency_gap(6, 1).empty());
  CHECK(error_code([] { search_valency_gap(7, 2); }) ==
        ErrorCode::kGuardExceeded);
  CHECK(error_code([] { search_valency_gap(4, 4); }) ==
        ErrorCode::kGuardExceeded);

  const auto witnesses = search_valency_gap(4, 3);
  // Frozen from the first run of the exhaustive enumerator.
  CHECK(witnesses.size() == 12);

  // Naive recount over every subset of every derangement list.
  std::size_t naive = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Permutation> der;
    for (const auto& p : oracle::all_permutations(n)) {
      if (is_derangement(p)) der.push_back(p);
    }
    for (unsigned mask = 1; mask < (1u << der.size()); ++mask) {
      if (std::popcount(mask) > 3) continue;
      std::vector<Permutation> pick;
      for (std::size_t i = 0; i < der.size(); ++i) {
        if (mask & (1u << i)) pick.push_back(der[i]);
      }
      const DerangementSet s(n, pick);
      const auto k = is_regular(build_da(s));
      naive += k.has_value() && *k < s.size();
    }
  }
  CHECK(naive == witnesses.size());
  bool found_c4 = false;
  for (const auto& w : witnesses) {
    CHECK_FALSE(is_multiplicity_free(w));
    const auto k = is_regular(build_da(w));
    REQUIRE(k.has_value());
    CHECK(*k < w.size());
    found_c4 = found_c4 || w.same_set_as(fixtures::c4_s3());
  }
  CHECK(found_c4);
}

TEST_CASE("property: lemma conditions agree, closed-set biconditional holds") {
  gen::Rng rng(0x5eed20);
  std::size_t mult_free = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 10);
    const std::size_t max_k = n == 2 ? 1 : (n == 3 ? 2 : 4);
    const std::size_t k = gen::uniform(rng, 1, max_k);
    const auto s = gen::random_derangement_set(n, k, rng);
    const auto g = build_da(s);
    const auto profile = valency_profile(g);

    // (i) every arc carried by exactly one element.
    const auto table = multiplicity_table(s);
    const bool c1 = std::all_of(table.begin(), table.end(),
                                [](const auto& e) { return e.second == 1; });
    // (ii) s1 s2^-1 a derangement for s1 != s2.
    bool c2 = true;
    for (const auto& a : s) {
      for (const auto& b : s) {
        if (a == b) continue;
        for (Point x = 0; x < n; ++x) c2 = c2 && a[x] != b[x];
      }
    }
    // (iii), (iv), (v)
    const auto all_k = [&](const std::vector<std::size_t>& v) {
      return std::all_of(v.begin(), v.end(),
                         [&](std::size_t d) { return d == k; });
    };
    const bool c3 = all_k(profile.out_valencies);
    const bool c4 = all_k(profile.in_valencies);
    const bool c5 = is_regular(g) == k;

    REQUIRE(c1 == c2);
    REQUIRE(c2 == c3);
    REQUIRE(c3 == c4);
    REQUIRE(c4 == c5);
    REQUIRE(is_multiplicity_free(s) == c1);
    REQUIRE(products_with_inverses_are_derangements(s) == c2);

    REQUIRE(g.arc_count() <= n * k);
    REQUIRE((g.arc_count() == n * k) == c1);

    // x^S == x^{S^-1} pointwise, against symmetry of the arc set.
    bool images_match = true;
    for (Point x = 0; x < n; ++x) {
      std::set<Point> fwd, back;
      for (const auto& p : s) {
        fwd.insert(p[x]);
        back.insert(inverse(p)[x]);
      }
      images_match = images_match && fwd == back;
    }
    REQUIRE(is_symmetric(g) == images_match);

    REQUIRE(is_closed(s) == (is_symmetric(g) && is_regular(g) == k));

    const auto report = analyze(s);
    REQUIRE(report.closed == (report.symmetric && report.regular_valency == k));
    REQUIRE(report.multiplicity_free == (report.regular_valency == k));
    mult_free += c1;
  }
  // The corpus must exercise both sides of each biconditional.
  CHECK(mult_free > 50);
  CHECK(mult_free < 550);
}

TEST_CASE("property: closed sets from Cayley sets of Z_n") {
  gen::Rng rng(0x5eed21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = gen::random_cyclic_cayley_set(gen::uniform(rng, 2, 12), rng);
    REQUIRE(is_closed(s));
    REQUIRE(is_self_inverse(s));
    REQUIRE(analyze(s).closed);
  }
}

TEST_CASE("property: components partition the digraph") {
  gen::Rng rng(0x5eed22);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 * gen::uniform(rng, 1, 5);
    const std::size_t k = gen::uniform(rng, 1, n == 2 ? 1 : 2);
    // Fixed-point-free involutions give many small orbits.
    std::vector<Permutation> elements;
    while (elements.size() < k) {
      std::vector<Point> images(n);
      for (Point x = 0; x < n; ++x) images[x] = x;
      std::vector<Point> order(n);
      for (Point x = 0; x < n; ++x) order[x] = x;
      std::shuffle(order.begin(), order.end(), rng);
      for (std::size_t i = 0; i + 1 < n; i += 2) {
        images[order[i]] = order[i + 1];
        images[order[i + 1]] = order[i];
      }
      Permutation p(images);
      if (std::find(elements.begin(), elements.end(), p) == elements.end()) {
        elements.push_back(p);
      }
    }
    const DerangementSet s(n, elements);
    const auto g = build_da(s);
    const auto parts = components(s);
    std::vector<std::vector<Point>> vertex_sets;
    std::set<Arc> rebuilt;
    for (const auto& part : parts) {
      vertex_sets.push_back(part.vertices);
      REQUIRE(part.digraph == build_da(part.set));
      for (const auto& [u, v] : part.digraph.arcs()) {
        rebuilt.insert({part.vertices[u], part.vertices[v]});
      }
    }
    REQUIRE(vertex_sets == orbits(s.elements(), n));
    REQUIRE(rebuilt == std::set<Arc>(g.arcs().begin(), g.arcs().end()));
  }
}

}  // namespace
}  // namespace dad
