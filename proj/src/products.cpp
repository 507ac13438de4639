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

#include "dad/products.hpp"

#include <algorithm>
#include <string>

#include "dad/error.hpp"

namespace dad {

std::string_view to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::kCartesian:
      return "cartesian";
    case ProductKind::kTensor:
      return "tensor";
    case ProductKind::kStrong:
      return "strong";
    case ProductKind::kLexicographic:
      return "lex";
  }
  return "unknown";
}

std::optional<ProductKind> parse_product_kind(std::string_view name) {
  if (name == "cartesian") return ProductKind::kCartesian;
  if (name == "tensor") return ProductKind::kTensor;
  if (name == "strong") return ProductKind::kStrong;
  if (name == "lex" || name == "lexicographic") {
    return ProductKind::kLexicographic;
  }
  return std::nullopt;
}

RegularSubgroup::RegularSubgroup(std::vector<Permutation> elements)
    : elements_(std::move(elements)) {
  if (elements_.empty()) {
    throw Error(ErrorCode::kInvalidSubgroup, "regular subgroup is empty");
  }
  const std::size_t m = elements_.front().size();
  if (elements_.size() != m) {
    throw Error(ErrorCode::kInvalidSubgroup,
                "regular subgroup on " + std::to_string(m) + " points needs " +
                    std::to_string(m) + " elements, got " +
                    std::to_string(elements_.size()));
  }
  for (const auto& p : elements_) {
    if (p.size() != m) {
      throw Error(ErrorCode::kInvalidSubgroup, "elements act on different sets");
    }
  }
  // |U| = |Y| with one element per (0, y) pair is regularity; closure under
  // products then makes it a group.
  std::vector<bool> hit(m, false);
  for (const auto& p : elements_) {
    if (hit[p[0]]) {
      throw Error(ErrorCode::kInvalidSubgroup,
                  "two elements agree on the image of 0");
    }
    hit[p[0]] = true;
  }
  std::vector<Permutation> sorted = elements_;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& a : elements_) {
    for (const auto& b : elements_) {
      if (!std::binary_search(sorted.begin(), sorted.end(), compose(a, b))) {
        throw Error(ErrorCode::kInvalidSubgroup,
                    "not closed under composition");
      }
    }
  }
}

RegularSubgroup cyclic_regular_subgroup(std::size_t m) {
  if (m == 0) {
    throw Error(ErrorCode::kInvalidArgument, "cyclic group needs m >= 1");
  }
  std::vector<Permutation> rotations;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Point> images(m);
    for (std::size_t y = 0; y < m; ++y) {
      images[y] = static_cast<Point>((y + i) % m);
    }
    rotations.emplace_back(std::move(images));
  }
  return RegularSubgroup(std::move(rotations));
}

SimpleDigraph product_digraph(const SimpleDigraph& g, const SimpleDigraph& h,
                              ProductKind kind) {
  const std::size_t nx = g.vertex_count();
  const std::size_t ny = h.vertex_count();
  const auto code = [ny](Vertex x, Vertex y) {
    return static_cast<Vertex>(x * ny + y);
  };
  std::vector<Arc> arcs;
  for (Vertex x1 = 0; x1 < nx; ++x1) {
    for (Vertex y1 = 0; y1 < ny; ++y1) {
      for (Vertex x2 = 0; x2 < nx; ++x2) {
        for (Vertex y2 = 0; y2 < ny; ++y2) {
          const bool ax = g.has_arc(x1, x2);
          const bool by = h.has_arc(y1, y2);
          const bool cartesian = (ax && y1 == y2) || (by && x1 == x2);
          const bool tensor = ax && by;
          bool arc = false;
          switch (kind) {
            case ProductKind::kCartesian:
              arc = cartesian;
              break;
            case ProductKind::kTensor:
              arc = tensor;
              break;
            case ProductKind::kStrong:
              arc = cartesian || tensor;
              break;
            case ProductKind::kLexicographic:
              arc = ax || (x1 == x2 && by);
              break;
          }
          if (arc) arcs.emplace_back(code(x1, y1), code(x2, y2));
        }
      }
    }
  }
  return SimpleDigraph(nx * ny, std::move(arcs));
}

Permutation product_permutation(const Permutation& g, const Permutation& h) {
  const std::size_t ny = h.size();
  std::vector<Point> images(g.size() * ny);
  for (Point x = 0; x < g.size(); ++x) {
    for (Point y = 0; y < ny; ++y) {
      images[x * ny + y] = static_cast<Point>(g[x] * ny + h[y]);
    }
  }
  return Permutation(std::move(images));
}

DerangementSet product_set(const DerangementSet& s, const DerangementSet& t,
                           ProductKind kind,
                           const std::optional<RegularSubgroup>& u) {
  const bool lex = kind == ProductKind::kLexicographic;
  if (lex && !u) {
    throw Error(ErrorCode::kInvalidSubgroup,
                "lexicographic product needs a regular subgroup");
  }
  if (!lex && u) {
    throw Error(ErrorCode::kInvalidSubgroup,
                "only the lexicographic product takes a regular subgroup");
  }
  if (lex && u->degree() != t.domain_size()) {
    throw Error(ErrorCode::kInvalidSubgroup,
                "regular subgroup acts on " + std::to_string(u->degree()) +
                    " points, second factor has " +
                    std::to_string(t.domain_size()));
  }
  const auto id_x = Permutation::identity(s.domain_size());
  const auto id_y = Permutation::identity(t.domain_size());

  std::vector<Permutation> elements;
  const auto add_s_times_identity = [&] {
    for (const auto& g : s) elements.push_back(product_permutation(g, id_y));
  };
  const auto add_identity_times_t = [&] {
    for (const auto& h : t) elements.push_back(product_permutation(id_x, h));
  };
  const auto add_s_times_t = [&] {
    for (const auto& g : s) {
      for (const auto& h : t) elements.push_back(product_permutation(g, h));
    }
  };
  switch (kind) {
    case ProductKind::kCartesian:
      add_s_times_identity();
      add_identity_times_t();
      break;
    case ProductKind::kTensor:
      add_s_times_t();
      break;
    case ProductKind::kStrong:
      add_s_times_identity();
      add_identity_times_t();
      add_s_times_t();
      break;
    case ProductKind::kLexicographic:
      for (const auto& g : s) {
        for (const auto& h : u->elements()) {
          elements.push_back(product_permutation(g, h));
        }
      }
      add_identity_times_t();
      break;
  }
  // The constructor re-checks that every element is fixed-point-free.
  return DerangementSet::deduplicated(s.domain_size() * t.domain_size(),
                                      std::move(elements));
}

}  // namespace dad
