// Copyright 2026 The artinstab Authors
//
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

#ifndef ARTINSTAB_CATALOG_HPP_
#define ARTINSTAB_CATALOG_HPP_

#include <optional>
#include <string>
#include <vector>

#include "artinstab/classify.hpp"
#include "artinstab/graph.hpp"

namespace artinstab::catalog {

// Generators s1..sn. With n >= 10 the lexicographic order of the names
// no longer follows the numbering; recognition still finds the same type.
inline std::vector<std::string> numbered(int n, const std::string& prefix = "s") {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline CoxeterGraph path(int n, const std::vector<int>& labels) {
  const auto names = numbered(n);
  std::vector<CoxeterGraph::Relation> rels;
  for (int i = 0; i + 1 < n; ++i)
    rels.push_back({names[i], names[i + 1], Label::finite(labels[i])});
  return CoxeterGraph(names, rels);
}

// The catalog diagram of `t` on s1..sn, numbered as in classify.hpp.
inline CoxeterGraph graph_of(const IrreducibleType& t) {
  const int n = t.rank;
  switch (t.series) {
    case Series::A:
      return path(n, std::vector<int>(n > 0 ? n - 1 : 0, 3));
    case Series::B:
    case Series::H: {
      std::vector<int> labels(n - 1, 3);
      labels[0] = t.is(Series::B) ? 4 : 5;
      return path(n, labels);
    }
    case Series::F:
      return path(4, {3, 4, 3});
    case Series::I2:
      return path(2, {t.label});
    case Series::D: {
      const auto s = numbered(n);
      std::vector<CoxeterGraph::Relation> rels{{s[0], s[2], Label::finite(3)},
                                               {s[1], s[2], Label::finite(3)}};
      for (int i = 2; i + 1 < n; ++i) rels.push_back({s[i], s[i + 1], Label::finite(3)});
      return CoxeterGraph(s, rels);
    }
    case Series::E: {
      const auto s = numbered(n);
      std::vector<CoxeterGraph::Relation> rels{{s[0], s[3], Label::finite(3)}};
      for (int i = 1; i + 1 < n; ++i) rels.push_back({s[i], s[i + 1], Label::finite(3)});
      return CoxeterGraph(s, rels);
    }
  }
  return {};
}

// Euclidean A~_n: a cycle of n+1 generators, all labels 3.
inline CoxeterGraph affine_a(int n) {
  const auto s = numbered(n + 1);
  std::vector<CoxeterGraph::Relation> rels;
  for (int i = 0; i <= n; ++i) rels.push_back({s[i], s[(i + 1) % (n + 1)], Label::finite(3)});
  return CoxeterGraph(s, rels);
}

// Euclidean C~_n: a path of n+1 generators with 4 on both end edges.
inline CoxeterGraph affine_c(int n) {
  std::vector<int> labels(n, 3);
  labels.front() = labels.back() = 4;
  return path(n + 1, labels);
}

// "A3", "D5", "E6", "F4", "H3", "I2(5)"; nullopt on anything else.
inline std::optional<IrreducibleType> parse_type(const std::string& s) {
  if (s.size() < 2) return std::nullopt;
  try {
    if (s.rfind("I2(", 0) == 0 && s.back() == ')') {
      const int m = std::stoi(s.substr(3, s.size() - 4));
      return m >= 5 ? std::optional(IrreducibleType::I2(m)) : std::nullopt;
    }
    std::size_t used = 0;
    const int n = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) return std::nullopt;
    switch (s[0]) {
      case 'A': if (n >= 1) return IrreducibleType::A(n); break;
      case 'B': if (n >= 2) return IrreducibleType::B(n); break;
      case 'D': if (n >= 4) return IrreducibleType::D(n); break;
      case 'E': if (n >= 6 && n <= 8) return IrreducibleType::E(n); break;
      case 'F': if (n == 4) return IrreducibleType::F4(); break;
      case 'H': if (n == 3 || n == 4) return IrreducibleType::H(n); break;
      default: break;
    }
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

}  // namespace artinstab::catalog

#endif  // ARTINSTAB_CATALOG_HPP_
