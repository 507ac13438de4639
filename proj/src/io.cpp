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

#include "dad/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "dad/error.hpp"

namespace dad::io {
namespace {

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// Non-blank lines with comments stripped, numbered from 1.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    if (const std::size_t hash = line.find('#');
        hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) lines.push_back({number, line});
  }
  return lines;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + message);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) words.push_back(s.substr(start, i - start));
  }
  return words;
}

bool parse_number(std::string_view word, std::size_t& value) {
  if (word.empty()) return false;
  const auto [ptr, ec] =
      std::from_chars(word.data(), word.data() + word.size(), value);
  return ec == std::errc{} && ptr == word.data() + word.size();
}

// Splits the header into keyword and size.
std::pair<std::string_view, std::size_t> parse_header(
    const std::vector<Line>& lines, const char* expected) {
  if (lines.empty()) {
    throw Error(ErrorCode::kParseError,
                std::string("empty input, expected '") + expected + " <n>'");
  }
  const auto words = split_words(lines.front().text);
  std::size_t n = 0;
  if (words.size() != 2 || !parse_number(words[1], n)) {
    fail(lines.front().number,
         std::string("malformed header, expected '") + expected + " <n>'");
  }
  return {words[0], n};
}

Vertex parse_vertex(std::string_view word, std::size_t n, std::size_t line) {
  std::size_t value = 0;
  if (!parse_number(word, value)) {
    fail(line, "'" + std::string(word) + "' is not a vertex number");
  }
  if (value >= n) {
    fail(line, "vertex " + std::to_string(value) + " out of range 0.." +
                   std::to_string(n == 0 ? 0 : n - 1));
  }
  return static_cast<Vertex>(value);
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t n,
                         bool allow_identity) {
  text = trim(text);
  if (n == 0) {
    throw Error(ErrorCode::kParseError, "permutations need at least one point");
  }
  if (text == "id") {
    if (!allow_identity) {
      throw Error(ErrorCode::kParseError, "identity is not allowed here");
    }
    return Permutation::identity(n);
  }
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  const auto skip_space = [&] {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) ||
            text[i] == ',')) {
      ++i;
    }
  };
  while (true) {
    while (i < text.size() &&
           std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i == text.size()) break;
    if (text[i] != '(') {
      throw Error(ErrorCode::kParseError,
                  "expected '(' at column " + std::to_string(i + 1));
    }
    ++i;
    std::vector<Point> cycle;
    while (true) {
      skip_space();
      if (i == text.size()) {
        throw Error(ErrorCode::kParseError, "unterminated cycle");
      }
      if (text[i] == ')') {
        ++i;
        break;
      }
      const std::size_t start = i;
      while (i < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      std::size_t value = 0;
      if (!parse_number(text.substr(start, i - start), value)) {
        throw Error(ErrorCode::kParseError,
                    "expected a point at column " + std::to_string(start + 1));
      }
      if (value >= n) {
        throw Error(ErrorCode::kParseError,
                    "point " + std::to_string(value) + " out of range for " +
                        std::to_string(n) + " points");
      }
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.empty()) throw Error(ErrorCode::kParseError, "empty cycle");
    cycles.push_back(std::move(cycle));
  }
  if (cycles.empty()) {
    throw Error(ErrorCode::kParseError, "empty permutation, write 'id'");
  }
  try {
    Permutation p = Permutation::from_cycles(n, cycles);
    if (!allow_identity && p.is_identity()) {
      throw Error(ErrorCode::kParseError, "identity is not allowed here");
    }
    return p;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError, e.what());
  }
}

PermSetFile parse_permset(std::string_view text, bool allow_identity) {
  const auto lines = content_lines(text);
  const auto [keyword, n] = parse_header(lines, "perms");
  if (keyword != "perms") fail(lines.front().number, "expected 'perms <n>'");
  if (n == 0) fail(lines.front().number, "domain size must be positive");
  PermSetFile file{n, {}};
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      file.perms.push_back(parse_cycles(lines[i].text, n, allow_identity));
    } catch (const Error& e) {
      fail(lines[i].number, e.what());
    }
  }
  return file;
}

DerangementSet parse_derangement_set(std::string_view text, bool dedupe) {
  PermSetFile file = parse_permset(text, false);
  if (dedupe) return DerangementSet::deduplicated(file.n, std::move(file.perms));
  return DerangementSet(file.n, std::move(file.perms));
}

std::string format_permset(std::size_t n, std::span<const Permutation> perms) {
  std::string out = "perms " + std::to_string(n) + "\n";
  for (const auto& p : perms) out += to_cycle_string(p) + "\n";
  return out;
}

std::string format_permset(const DerangementSet& s) {
  return format_permset(s.domain_size(), s.elements());
}

SimpleDigraph parse_digraph(std::string_view text) {
  const auto lines = content_lines(text);
  const auto [keyword, n] = parse_header(lines, "digraph");
  const bool undirected = keyword == "graph";
  if (!undirected && keyword != "digraph") {
    fail(lines.front().number, "expected 'digraph <n>' or 'graph <n>'");
  }
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = split_words(lines[i].text);
    if (words.size() != 2) fail(lines[i].number, "expected 'u v'");
    const Vertex u = parse_vertex(words[0], n, lines[i].number);
    const Vertex v = parse_vertex(words[1], n, lines[i].number);
    if (u == v) fail(lines[i].number, "loop at vertex " + std::to_string(u));
    arcs.emplace_back(u, v);
    if (undirected) arcs.emplace_back(v, u);
  }
  try {
    return SimpleDigraph(n, std::move(arcs));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

std::string format_digraph(const SimpleDigraph& g) {
  std::string out;
  if (is_symmetric(g)) {
    out = "graph " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : edges(g)) {
      out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  } else {
    out = "digraph " + std::to_string(g.vertex_count()) + "\n";
    for (const auto& [u, v] : g.arcs()) {
      out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
  }
  return out;
}

FiniteGroup parse_group(std::string_view text) {
  const auto lines = content_lines(text);
  if (!lines.empty()) {
    const auto words = split_words(lines.front().text);
    if (!words.empty() && words[0] == "group-gens") {
      std::size_t n = 0;
      if ((words.size() != 2 && words.size() != 3) ||
          !parse_number(words[1], n) || n == 0) {
        fail(lines.front().number,
             "malformed header, expected 'group-gens <n> [ltr|rtl]'");
      }
      ProductOrder order = ProductOrder::kLeftToRight;
      if (words.size() == 3) {
        if (words[2] == "rtl") {
          order = ProductOrder::kRightToLeft;
        } else if (words[2] != "ltr") {
          fail(lines.front().number, "product order must be 'ltr' or 'rtl'");
        }
      }
      std::vector<Permutation> gens;
      for (std::size_t i = 1; i < lines.size(); ++i) {
        try {
          gens.push_back(parse_cycles(lines[i].text, n, true));
        } catch (const Error& e) {
          fail(lines[i].number, e.what());
        }
      }
      if (gens.empty()) fail(lines.front().number, "no generators listed");
      return group_from_generators(gens, order);
    }
  }
  const auto [keyword, m] = parse_header(lines, "group");
  if (keyword != "group") {
    fail(lines.front().number, "expected 'group <m>' or 'group-gens <n>'");
  }
  if (lines.size() != m + 1) {
    fail(lines.back().number, "expected " + std::to_string(m) +
                                  " table rows, found " +
                                  std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<Element>> table;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto words = split_words(lines[i].text);
    if (words.size() != m) {
      fail(lines[i].number, "row has " + std::to_string(words.size()) +
                                " entries, expected " + std::to_string(m));
    }
    std::vector<Element> row;
    for (const auto word : words) {
      row.push_back(parse_vertex(word, m, lines[i].number));
    }
    table.push_back(std::move(row));
  }
  return FiniteGroup(std::move(table));
}

std::string format_group_table(const FiniteGroup& g) {
  std::string out = "group " + std::to_string(g.order()) + "\n";
  for (const auto& row : g.multiplication_table()) {
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (b > 0) out += ' ';
      out += std::to_string(row[b]);
    }
    out += '\n';
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path);
}

Json to_json(const ValencyProfile& profile) {
  Json j;
  j["out"] = profile.out_valencies;
  j["in"] = profile.in_valencies;
  return j;
}

Json to_json(const AnalysisReport& report) {
  Json j;
  j["set_size"] = report.set_size;
  j["multiplicity_free"] = report.multiplicity_free;
  j["closed"] = report.closed;
  j["self_inverse"] = report.self_inverse;
  j["symmetric"] = report.symmetric;
  j["regular_valency"] = report.regular_valency
                             ? Json(*report.regular_valency)
                             : Json(nullptr);
  j["valency_profile"] = to_json(report.valency_profile);
  j["max_multiplicity"] = report.max_multiplicity;
  j["component_count"] = report.component_count;
  return j;
}

Json to_json(const Matching& matching) {
  Json pairs = Json::array();
  for (const auto& [u, v] : matching.pairs) pairs.push_back({u, v});
  return pairs;
}

Json to_json(const std::vector<Component>& components) {
  Json list = Json::array();
  for (const auto& c : components) {
    Json j;
    j["vertices"] = c.vertices;
    j["set"] = format_permset(c.set);
    j["digraph"] = format_digraph(c.digraph);
    list.push_back(std::move(j));
  }
  return list;
}

Json to_json(const AutGroup& aut) {
  Json j;
  j["order"] = aut.order();
  Json elements = Json::array();
  for (const auto& p : aut.elements) elements.push_back(to_cycle_string(p));
  j["elements"] = std::move(elements);
  return j;
}

}  // namespace dad::io
