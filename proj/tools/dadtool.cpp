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

// dadtool: command-line front end for derangement action digraphs.

#include <charconv>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dad/action_digraph.hpp"
#include "dad/decompose.hpp"
#include "dad/error.hpp"
#include "dad/io.hpp"
#include "dad/iso.hpp"
#include "dad/products.hpp"
#include "dad/two_sided.hpp"

namespace {

using dad::io::Json;

void emit(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
  } else {
    dad::io::write_file(path, content);
  }
}

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// Group elements by label ("5") or, for permutation groups, by cycle
// notation ("(1 3 2)", "id"). Commas also separate several elements.
std::vector<dad::Element> parse_elements(const dad::FiniteGroup& group,
                                         const std::vector<std::string>& args) {
  std::vector<std::string> tokens;
  for (const auto& arg : args) {
    std::size_t start = 0;
    while (start <= arg.size()) {
      const std::size_t comma = arg.find(',', start);
      const std::string token =
          arg.substr(start, comma == std::string::npos ? std::string::npos
                                                        : comma - start);
      if (!token.empty()) tokens.push_back(token);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  std::vector<dad::Element> elements;
  for (const auto& token : tokens) {
    dad::Element label = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec == std::errc{} && ptr == token.data() + token.size()) {
      if (label >= group.order()) {
        throw dad::Error(dad::ErrorCode::kInvalidArgument,
                         "element " + token + " outside group of order " +
                             std::to_string(group.order()));
      }
      elements.push_back(label);
      continue;
    }
    if (!group.has_point_action()) {
      throw dad::Error(dad::ErrorCode::kInvalidArgument,
                       "'" + token + "' is not an element label");
    }
    const auto p = dad::io::parse_cycles(
        token, group.point_action(0).size(), /*allow_identity=*/true);
    const auto found = group.find(p);
    if (!found) {
      throw dad::Error(dad::ErrorCode::kInvalidArgument,
                       token + " is not in the group");
    }
    elements.push_back(*found);
  }
  return elements;
}

dad::DerangementSet load_set(const std::string& path, bool dedupe) {
  return dad::io::parse_derangement_set(dad::io::read_file(path), dedupe);
}

dad::SimpleDigraph load_digraph(const std::string& path) {
  return dad::io::parse_digraph(dad::io::read_file(path));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derangement action digraphs: build, analyse, decompose, realise"};
  app.require_subcommand(1);

  std::string input;
  std::string second_input;
  std::string output = "-";
  bool dedupe = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Report the properties of DA(X, S)");
  analyze_cmd->add_option("permset", input, "Permutation set file")->required();
  analyze_cmd->add_flag("--dedupe", dedupe, "Drop repeated permutations");

  auto* build_cmd = app.add_subcommand("build", "Write the digraph DA(X, S)");
  build_cmd->add_option("permset", input, "Permutation set file")->required();
  build_cmd->add_option("-o,--output", output, "Digraph file (default stdout)");
  build_cmd->add_flag("--dedupe", dedupe, "Drop repeated permutations");

  auto* components_cmd = app.add_subcommand("components", "Split DA(X, S) into connected components");
  components_cmd->add_option("permset", input, "Permutation set file")->required();
  components_cmd->add_flag("--dedupe", dedupe, "Drop repeated permutations");

  auto* decompose_cmd = app.add_subcommand("decompose", "Derangement set of a regular digraph");
  decompose_cmd->add_option("digraph", input, "Digraph file")->required();
  decompose_cmd->add_option("-o,--output", output, "Permutation set file (default stdout)");

  auto* realize_cmd = app.add_subcommand("realize", "Closed self-inverse set of a regular graph");
  realize_cmd->add_option("digraph", input, "Graph file")->required();
  realize_cmd->add_option("-o,--output", output, "Permutation set file (default stdout)");

  auto* matching_cmd = app.add_subcommand("matching", "Perfect matching or deficiency report");
  matching_cmd->add_option("digraph", input, "Graph file")->required();

  std::string kind_name;
  std::string lex_group = "cyclic";
  std::string digraph_output;
  auto* product_cmd = app.add_subcommand("product", "Product of two derangement sets");
  product_cmd->add_option("--kind", kind_name, "cartesian|tensor|strong|lex")->required();
  product_cmd->add_option("first", input, "First permutation set file")->required();
  product_cmd->add_option("second", second_input, "Second permutation set file")->required();
  product_cmd->add_option("--lex-group", lex_group, "Regular subgroup for lex (cyclic)");
  product_cmd->add_option("-o,--output", output, "Product permutation set (default stdout)");
  product_cmd->add_option("--digraph-out", digraph_output, "Also write the product digraph");

  bool vertex_transitive = false;
  auto* aut_cmd = app.add_subcommand("aut", "Automorphism group of DA(X, S) (n <= 10)");
  aut_cmd->add_option("permset", input, "Permutation set file")->required();
  aut_cmd->add_flag("--vertex-transitive", vertex_transitive, "Report vertex-transitivity");

  std::string group_path;
  std::vector<std::string> left_args;
  std::vector<std::string> right_args;
  auto* two_sided_cmd = app.add_subcommand("two-sided", "Two-sided group digraph 2S(G; L, R)");
  two_sided_cmd->add_option("--group", group_path, "Group file")->required();
  two_sided_cmd->add_option("--left", left_args, "Elements of L")->required();
  two_sided_cmd->add_option("--right", right_args, "Elements of R")->required();

  std::vector<std::string> conn_args;
  auto* cayley_cmd = app.add_subcommand("cayley", "Cayley digraph Cay(G, C)");
  cayley_cmd->add_option("--group", group_path, "Group file")->required();
  cayley_cmd->add_option("--conn", conn_args, "Connection set elements")->required();

  std::size_t gap_points = 0;
  std::size_t gap_set_size = 0;
  auto* gap_cmd = app.add_subcommand("search-gap", "Regular graphs DA(X, S) of valency below |S|");
  gap_cmd->add_option("--n", gap_points, "Largest domain size (<= 6)")->required();
  gap_cmd->add_option("--s", gap_set_size, "Largest set size (<= 3)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*analyze_cmd) {
      emit_json(dad::io::to_json(dad::analyze(load_set(input, dedupe))));
    } else if (*build_cmd) {
      emit(output, dad::io::format_digraph(dad::build_da(load_set(input, dedupe))));
    } else if (*components_cmd) {
      emit_json(dad::io::to_json(dad::components(load_set(input, dedupe))));
    } else if (*decompose_cmd) {
      emit(output, dad::io::format_permset(
                       dad::digraph_to_derangements(load_digraph(input))));
    } else if (*realize_cmd) {
      emit(output,
           dad::io::format_permset(dad::graph_to_closed_set(load_digraph(input))));
    } else if (*matching_cmd) {
      const auto g = load_digraph(input);
      const auto outcome = dad::perfect_matching(g);
      Json j;
      j["perfect"] = outcome.perfect.has_value();
      j["vertex_count"] = g.vertex_count();
      j["maximum_matching_size"] = outcome.maximum.size();
      j["deficiency"] = g.vertex_count() - 2 * outcome.maximum.size();
      j["matching"] = dad::io::to_json(outcome.maximum);
      emit_json(j);
    } else if (*product_cmd) {
      const auto kind = dad::parse_product_kind(kind_name);
      if (!kind) {
        throw dad::Error(dad::ErrorCode::kInvalidArgument,
                         "unknown product kind '" + kind_name + "'");
      }
      const auto s = load_set(input, false);
      const auto t = load_set(second_input, false);
      std::optional<dad::RegularSubgroup> u;
      if (*kind == dad::ProductKind::kLexicographic) {
        if (lex_group != "cyclic") {
          throw dad::Error(dad::ErrorCode::kInvalidArgument,
                           "unsupported --lex-group '" + lex_group + "'");
        }
        u = dad::cyclic_regular_subgroup(t.domain_size());
      }
      const auto product = dad::product_set(s, t, *kind, u);
      emit(output, dad::io::format_permset(product));
      if (!digraph_output.empty()) {
        emit(digraph_output, dad::io::format_digraph(dad::build_da(product)));
      }
    } else if (*aut_cmd) {
      const auto s = load_set(input, false);
      const auto aut = dad::automorphism_group(s);
      Json j = dad::io::to_json(aut);
      if (vertex_transitive) j["vertex_transitive"] = dad::is_vertex_transitive(s);
      emit_json(j);
    } else if (*two_sided_cmd) {
      const auto group = dad::io::parse_group(dad::io::read_file(group_path));
      const auto left = parse_elements(group, left_args);
      const auto right = parse_elements(group, right_args);
      Json j;
      j["group_order"] = group.order();
      if (const auto pair = dad::conjugate_pair(group, left, right)) {
        j["loopless"] = false;
        j["conjugate_pair"] = {pair->first, pair->second};
      } else {
        const auto result = dad::two_sided_digraph(group, left, right);
        j["loopless"] = true;
        j["raw_count"] = result.raw_count;
        j["set_size"] = result.set.size();
        j["set"] = dad::io::format_permset(result.set);
        j["digraph"] = dad::io::format_digraph(result.digraph);
        j["valency_profile"] =
            dad::io::to_json(dad::valency_profile(result.digraph));
      }
      emit_json(j);
    } else if (*cayley_cmd) {
      const auto group = dad::io::parse_group(dad::io::read_file(group_path));
      const auto result =
          dad::cayley_digraph(group, parse_elements(group, conn_args));
      Json j;
      j["group_order"] = group.order();
      j["set"] = dad::io::format_permset(result.set);
      j["digraph"] = dad::io::format_digraph(result.digraph);
      emit_json(j);
    } else if (*gap_cmd) {
      const auto witnesses = dad::search_valency_gap(gap_points, gap_set_size);
      Json j;
      j["max_points"] = gap_points;
      j["max_set_size"] = gap_set_size;
      j["witness_count"] = witnesses.size();
      Json list = Json::array();
      for (const auto& w : witnesses) list.push_back(dad::io::format_permset(w));
      j["witnesses"] = std::move(list);
      emit_json(j);
    }
  } catch (const dad::NoPerfectMatchingError& e) {
    std::cerr << "error: " << dad::to_string(e.code()) << ": " << e.what()
              << "; certificate "
              << dad::io::to_json(e.maximum_matching()).dump() << "\n";
    return 1;
  } catch (const dad::Error& e) {
    std::cerr << "error: " << dad::to_string(e.code()) << ": " << e.what()
              << "\n";
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "error: internal_defect: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
