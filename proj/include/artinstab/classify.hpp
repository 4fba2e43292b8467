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
//
// Recognition of irreducible spherical Coxeter types and family-level
// classification of whole Artin groups.
//
// Canonical position numbering of a recognized component (1-based):
//   A_n, F_4     path; position 1 at the end with the smaller generator.
//   B_n, H_n     path; the 4- (resp. 5-) labeled edge joins positions 1-2.
//   D_n          prongs 1,2 (in generator order) on branch vertex 3, tail
//                4..n moving away from the branch. For D_4 the three leaves
//                take positions 1,2,4 in generator order.
//   E_6,7,8      branch at 4, short arm is 1; of the two arms that are not
//                the short one, the length-2 arm is (3,2) reading outward.
//                For E_6 (two length-2 arms) the arm whose outer end has the
//                smaller generator is (3,2). The remaining arm is 5,6,...
//   I_2(m)       position 1 at the smaller generator.

#ifndef ARTINSTAB_CLASSIFY_HPP_
#define ARTINSTAB_CLASSIFY_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artinstab/error.hpp"
#include "artinstab/graph.hpp"

namespace artinstab {

enum class Series { A, B, D, E, F, H, I2 };

struct IrreducibleType {
  Series series = Series::A;
  int rank = 1;   // number of generators
  int label = 0;  // m for I2(m), 0 otherwise

  static IrreducibleType A(int n) { return {Series::A, n, 0}; }
  static IrreducibleType B(int n) { return {Series::B, n, 0}; }
  static IrreducibleType D(int n) { return {Series::D, n, 0}; }
  static IrreducibleType E(int n) { return {Series::E, n, 0}; }
  static IrreducibleType F4() { return {Series::F, 4, 0}; }
  static IrreducibleType H(int n) { return {Series::H, n, 0}; }
  static IrreducibleType I2(int m) { return {Series::I2, 2, m}; }

  bool is(Series s) const { return series == s; }
  bool is_d_odd() const { return series == Series::D && rank % 2 == 1; }

  std::string to_string() const {
    switch (series) {
      case Series::A: return "A" + std::to_string(rank);
      case Series::B: return "B" + std::to_string(rank);
      case Series::D: return "D" + std::to_string(rank);
      case Series::E: return "E" + std::to_string(rank);
      case Series::F: return "F4";
      case Series::H: return "H" + std::to_string(rank);
      case Series::I2: return "I2(" + std::to_string(label) + ")";
    }
    return "?";
  }

  friend bool operator==(const IrreducibleType&, const IrreducibleType&) = default;
};

// A recognized irreducible spherical component. positions[p] is the
// generator index at (0-based) position p.
struct TypedComponent {
  IrreducibleType type;
  std::vector<int> positions;

  int rank() const { return static_cast<int>(positions.size()); }
  // 1-based position lookup, matching the catalog numbering.
  int at(int position) const { return positions.at(position - 1); }
  VertexSet vertices() const {
    VertexSet s;
    for (int v : positions) s.insert(v);
    return s;
  }
  // 1-based position of generator v, 0 if absent.
  int position_of(int v) const {
    auto it = std::find(positions.begin(), positions.end(), v);
    return it == positions.end() ? 0 : static_cast<int>(it - positions.begin()) + 1;
  }

  friend bool operator==(const TypedComponent&, const TypedComponent&) = default;
};

namespace detail {

// Walks from `start` away from `from` along a path inside `within`,
// returning the visited vertices (start first). Stops at a vertex whose
// remaining degree is not 1.
inline std::vector<int> walk_arm(const CoxeterGraph& g, VertexSet within, int from,
                                 int start) {
  std::vector<int> arm{start};
  int prev = from, cur = start;
  while (true) {
    VertexSet next = (g.neighbours(cur) & within) - VertexSet::single(prev);
    if (next.size() != 1) break;
    prev = cur;
    cur = next.front();
    arm.push_back(cur);
  }
  return arm;
}

}  // namespace detail

// Returns the catalog type of the connected set y with canonical positions,
// or nullopt when Gamma_y is not of spherical type.
inline std::optional<TypedComponent> recognize_component(const CoxeterGraph& g,
                                                         VertexSet y) {
  detail::require_subset(g, y, "recognize_component");
  if (!is_connected(g, y))
    throw PreconditionError("recognize_component: subset " + format_set(g, y) +
                            " is not connected");
  const int n = y.size();
  if (n == 1) return TypedComponent{IrreducibleType::A(1), {y.front()}};

  int edges = 0;
  std::array<int, VertexSet::kCapacity> degree{};
  for (int s : y) {
    degree[s] = (g.neighbours(s) & y).size();
    for (int t : g.neighbours(s) & y) {
      if (s < t) {
        if (g.label(s, t).is_infinite()) return std::nullopt;
        ++edges;
      }
    }
  }
  if (edges != n - 1) return std::nullopt;  // contains a cycle

  std::vector<int> branches;
  for (int v : y) {
    if (degree[v] > 3) return std::nullopt;
    if (degree[v] == 3) branches.push_back(v);
  }
  if (branches.size() > 1) return std::nullopt;

  if (branches.empty()) {
    // A path. Walk from the end with the smaller generator index.
    int start = -1;
    for (int v : y) {
      if (degree[v] == 1) { start = v; break; }
    }
    std::vector<int> path{start};
    for (int prev = -1, cur = start; static_cast<int>(path.size()) < n;) {
      VertexSet next = g.neighbours(cur) & y;
      if (prev >= 0) next.erase(prev);
      prev = cur;
      cur = next.front();
      path.push_back(cur);
    }
    std::vector<int> big;  // edge indices with label > 3
    for (int k = 0; k + 1 < n; ++k)
      if (g.label(path[k], path[k + 1]).code() > 3) big.push_back(k);
    if (big.empty()) return TypedComponent{IrreducibleType::A(n), path};
    if (n == 2) {
      const int m = g.label(path[0], path[1]).code();
      if (m == 4) return TypedComponent{IrreducibleType::B(2), path};
      return TypedComponent{IrreducibleType::I2(m), path};
    }
    if (big.size() != 1) return std::nullopt;
    const int k = big.front();
    const int m = g.label(path[k], path[k + 1]).code();
    std::vector<int> reversed(path.rbegin(), path.rend());
    if (m == 4) {
      if (k == 0) return TypedComponent{IrreducibleType::B(n), path};
      if (k == n - 2) return TypedComponent{IrreducibleType::B(n), reversed};
      if (n == 4 && k == 1) return TypedComponent{IrreducibleType::F4(), path};
      return std::nullopt;
    }
    if (m == 5 && (n == 3 || n == 4)) {
      if (k == 0) return TypedComponent{IrreducibleType::H(n), path};
      if (k == n - 2) return TypedComponent{IrreducibleType::H(n), reversed};
    }
    return std::nullopt;
  }

  // One branch vertex; all labels must be 3.
  const int b = branches.front();
  for (int s : y)
    for (int t : g.neighbours(s) & y)
      if (g.label(s, t).code() != 3) return std::nullopt;
  std::vector<std::vector<int>> arms;
  for (int v : g.neighbours(b) & y) arms.push_back(detail::walk_arm(g, y, b, v));
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& a, const auto& c) { return a.size() < c.size(); });
  const std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
  if (a1 != 1) return std::nullopt;

  if (a2 == 1) {
    if (a3 == 1) {
      // D_4: leaves 1,2,4 in generator order, branch 3.
      std::vector<int> leaves{arms[0][0], arms[1][0], arms[2][0]};
      std::sort(leaves.begin(), leaves.end());
      return TypedComponent{IrreducibleType::D(4), {leaves[0], leaves[1], b, leaves[2]}};
    }
    std::vector<int> pos{std::min(arms[0][0], arms[1][0]),
                         std::max(arms[0][0], arms[1][0]), b};
    pos.insert(pos.end(), arms[2].begin(), arms[2].end());
    return TypedComponent{IrreducibleType::D(n), pos};
  }

  if (a2 != 2 || a3 < 2 || a3 > 4) return std::nullopt;
  const std::vector<int>* short_chain = &arms[1];
  const std::vector<int>* long_chain = &arms[2];
  if (a3 == 2 && arms[2].back() < arms[1].back()) std::swap(short_chain, long_chain);
  std::vector<int> pos{arms[0][0], (*short_chain)[1], (*short_chain)[0], b};
  pos.insert(pos.end(), long_chain->begin(), long_chain->end());
  return TypedComponent{IrreducibleType::E(n), pos};
}

// Spherical decomposition of Gamma_X (components in canonical order), or
// nullopt if some component is not of spherical type.
inline std::optional<std::vector<TypedComponent>> spherical_decomposition(
    const CoxeterGraph& g, VertexSet x) {
  std::vector<TypedComponent> out;
  for (VertexSet c : components(g, x)) {
    auto t = recognize_component(g, c);
    if (!t) return std::nullopt;
    out.push_back(std::move(*t));
  }
  return out;
}

inline bool is_spherical(const CoxeterGraph& g, VertexSet x) {
  return spherical_decomposition(g, x).has_value();
}

// Types where conjugation by Delta is a nontrivial diagram reflection:
// A_n (n>=2), D_n (n>=5 odd), E_6, I_2(m) (m>=5 odd).
inline bool is_twistable(const IrreducibleType& t) {
  switch (t.series) {
    case Series::A: return t.rank >= 2;
    case Series::D: return t.rank >= 5 && t.rank % 2 == 1;
    case Series::E: return t.rank == 6;
    case Series::I2: return t.label >= 5 && t.label % 2 == 1;
    default: return false;
  }
}

inline bool is_twistable(const TypedComponent& c) { return is_twistable(c.type); }

// GROUP FAMILIES

enum class Applicability { FullStability, QuasiStability, Unknown };

inline const char* to_string(Applicability a) {
  switch (a) {
    case Applicability::FullStability: return "full_stability";
    case Applicability::QuasiStability: return "quasi_stability";
    case Applicability::Unknown: return "unknown";
  }
  return "unknown";
}

struct FreeFactor {
  VertexSet generators;
  std::vector<TypedComponent> decomposition;
};

struct GroupFamilyReport {
  bool spherical = false;
  bool fc_type = false;
  bool free_product_of_spherical = false;
  std::vector<FreeFactor> free_factors;  // filled iff free_product_of_spherical
  bool large = false;
  bool two_dimensional = false;
  bool martin_2dim_condition = false;
  std::optional<std::string> affine_family;  // "A~n" or "C~n"
  Applicability applicability = Applicability::Unknown;
  std::string justification;
};

namespace detail {

// Maximal cliques of the graph with edges {s,t : m_{s,t} != infinity}
// (Bron-Kerbosch with pivoting).
inline void finite_cliques(const std::vector<VertexSet>& finite_adj, VertexSet r,
                           VertexSet p, VertexSet x, std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    out.push_back(r);
    return;
  }
  const int pivot = (p | x).front();
  for (int v : p - finite_adj[pivot]) {
    finite_cliques(finite_adj, r | VertexSet::single(v), p & finite_adj[v],
                   x & finite_adj[v], out);
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace detail

inline std::vector<VertexSet> maximal_finite_cliques(const CoxeterGraph& g) {
  std::vector<VertexSet> adj(g.size());
  for (int s = 0; s < g.size(); ++s)
    for (int t = 0; t < g.size(); ++t)
      if (s != t && !g.label(s, t).is_infinite()) adj[s].insert(t);
  std::vector<VertexSet> out;
  detail::finite_cliques(adj, {}, g.all(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

inline std::optional<std::string> affine_family(const CoxeterGraph& g) {
  const int n = g.size();
  if (n < 3 || !is_connected(g, g.all())) return std::nullopt;
  int edges = 0;
  std::vector<int> degree(n);
  for (int s = 0; s < n; ++s) {
    degree[s] = g.neighbours(s).size();
    for (int t = s + 1; t < n; ++t) {
      if (g.label(s, t).is_infinite()) return std::nullopt;
      if (g.label(s, t).is_edge()) ++edges;
    }
  }
  auto all_three = [&] {
    for (int s = 0; s < n; ++s)
      for (int t : g.neighbours(s))
        if (g.label(s, t).code() != 3) return false;
    return true;
  };
  if (edges == n && std::all_of(degree.begin(), degree.end(), [](int d) { return d == 2; }) &&
      all_three())
    return "A~" + std::to_string(n - 1);
  if (edges == n - 1 &&
      std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 2; })) {
    int start = 0;
    while (degree[start] != 1) ++start;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (static_cast<int>(path.size()) < n) {
      VertexSet next = g.neighbours(cur);
      if (prev >= 0) next.erase(prev);
      prev = cur;
      cur = next.front();
      path.push_back(cur);
    }
    for (int k = 0; k + 1 < n; ++k) {
      const int want = (k == 0 || k == n - 2) ? 4 : 3;
      if (g.label(path[k], path[k + 1]).code() != want) return std::nullopt;
    }
    return "C~" + std::to_string(n - 1);
  }
  return std::nullopt;
}

}  // namespace detail

inline GroupFamilyReport classify_group(const CoxeterGraph& g) {
  GroupFamilyReport r;
  const VertexSet all = g.all();
  r.spherical = is_spherical(g, all);

  r.fc_type = true;
  for (VertexSet clique : maximal_finite_cliques(g)) {
    if (!is_spherical(g, clique)) {
      r.fc_type = false;
      break;
    }
  }

  // Free factors: components of the graph whose edges are the pairs with
  // finite label (m = 2 included).
  {
    VertexSet rest = all;
    std::vector<FreeFactor> factors;
    bool ok = true;
    while (!rest.empty()) {
      VertexSet factor = VertexSet::single(rest.front()), frontier = factor;
      while (!frontier.empty()) {
        VertexSet next;
        for (int s : frontier)
          for (int t : rest)
            if (t != s && !g.label(s, t).is_infinite()) next.insert(t);
        next -= factor;
        factor |= next;
        frontier = next;
      }
      rest -= factor;
      auto dec = spherical_decomposition(g, factor);
      if (!dec) {
        ok = false;
        break;
      }
      factors.push_back({factor, std::move(*dec)});
    }
    r.free_product_of_spherical = ok;
    if (ok) r.free_factors = std::move(factors);
  }

  r.large = true;
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t)
      if (!g.label(s, t).is_edge()) r.large = false;

  r.two_dimensional = true;
  for (int a = 0; a < g.size() && r.two_dimensional; ++a)
    for (int b = a + 1; b < g.size() && r.two_dimensional; ++b)
      for (int c = b + 1; c < g.size(); ++c)
        if (is_spherical(g, VertexSet::of({a, b, c}))) {
          r.two_dimensional = false;
          break;
        }

  r.martin_2dim_condition = r.two_dimensional;
  if (r.martin_2dim_condition) {
    for (int s = 0; s < g.size(); ++s) {
      int commuting = 0;
      for (int t = 0; t < g.size(); ++t)
        if (t != s && g.label(s, t) == Label::finite(2)) ++commuting;
      if (commuting > 1) {
        r.martin_2dim_condition = false;
        break;
      }
    }
  }

  r.affine_family = detail::affine_family(g);

  std::vector<std::string> why;
  if (r.spherical) why.push_back("spherical type");
  if (r.free_product_of_spherical) why.push_back("free product of spherical-type factors");
  if (r.martin_2dim_condition)
    why.push_back(
        "two-dimensional with every vertex commuting (m=2) with at most one other "
        "vertex");
  if (r.affine_family) why.push_back("Euclidean type " + *r.affine_family);

  if (!why.empty()) {
    r.applicability = Applicability::FullStability;
    r.justification = why.front();
    for (std::size_t i = 1; i < why.size(); ++i) r.justification += "; " + why[i];
  } else if (r.fc_type) {
    r.applicability = Applicability::QuasiStability;
    r.justification = "FC-type: decision covers spherical-type parabolic subgroups";
  } else {
    r.applicability = Applicability::Unknown;
    r.justification = "hypotheses unknown for this family";
  }
  return r;
}

// JSON

inline nlohmann::json to_json(const CoxeterGraph& g, const TypedComponent& c) {
  nlohmann::json pos = nlohmann::json::array();
  for (int v : c.positions) pos.push_back(g.name(v));
  return {{"type", c.type.to_string()}, {"positions", std::move(pos)}};
}

inline nlohmann::json to_json(const CoxeterGraph& g, const GroupFamilyReport& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.free_factors) {
    nlohmann::json types = nlohmann::json::array();
    for (const auto& c : f.decomposition) types.push_back(c.type.to_string());
    factors.push_back({{"generators", names_of(g, f.generators)}, {"types", types}});
  }
  return {{"spherical", r.spherical},
          {"fc_type", r.fc_type},
          {"free_product_of_spherical", r.free_product_of_spherical},
          {"free_factors", std::move(factors)},
          {"large", r.large},
          {"two_dimensional", r.two_dimensional},
          {"martin_2dim_condition", r.martin_2dim_condition},
          {"affine_family", r.affine_family ? nlohmann::json(*r.affine_family)
                                            : nlohmann::json(nullptr)},
          {"applicability", to_string(r.applicability)},
          {"justification", r.justification}};
}

}  // namespace artinstab

#endif  // ARTINSTAB_CLASSIFY_HPP_
