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
// Test-only reference implementations. Nothing here calls the recognition
// or twist code it is used to check.

#ifndef ARTINSTAB_TESTS_SUPPORT_ORACLES_HPP_
#define ARTINSTAB_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "artinstab/catalog.hpp"
#include "artinstab/graph.hpp"

namespace artinstab::testing {

// Every catalog type with at most `max_rank` generators whose labels lie in
// {3,4,5,6}.
inline std::vector<IrreducibleType> catalog_types(int max_rank) {
  std::vector<IrreducibleType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back(IrreducibleType::A(n));
  for (int n = 2; n <= max_rank; ++n) out.push_back(IrreducibleType::B(n));
  for (int n = 4; n <= max_rank; ++n) out.push_back(IrreducibleType::D(n));
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(IrreducibleType::E(n));
  if (max_rank >= 4) out.push_back(IrreducibleType::F4());
  for (int n = 3; n <= std::min(4, max_rank); ++n) out.push_back(IrreducibleType::H(n));
  if (max_rank >= 2) {
    out.push_back(IrreducibleType::I2(5));
    out.push_back(IrreducibleType::I2(6));
  }
  return out;
}

// Label-preserving bijection from the vertices of `a` (restricted to
// `va`) onto all vertices of `b`, by backtracking. result[i] is the
// image of the i-th element of va.
inline std::optional<std::vector<int>> find_isomorphism(const CoxeterGraph& a, VertexSet va,
                                                        const CoxeterGraph& b) {
  std::vector<int> src(va.begin(), va.end());
  const int n = static_cast<int>(src.size());
  if (n != b.size()) return std::nullopt;
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int k) -> bool {
    if (k == n) return true;
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int j = 0; j < k && ok; ++j)
        ok = a.label(src[k], src[j]) == b.label(c, image[j]);
      if (!ok) continue;
      used[c] = true;
      image[k] = c;
      if (self(self, k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return image;
}

// The catalog type whose diagram is isomorphic to Gamma_y, by exhaustive
// comparison against every template of the right size.
inline std::optional<IrreducibleType> brute_force_type(const CoxeterGraph& g, VertexSet y) {
  for (const auto& t : catalog_types(y.size())) {
    if (t.rank != y.size()) continue;
    if (find_isomorphism(g, y, catalog::graph_of(t))) return t;
  }
  // Dihedral types with labels outside the template list.
  if (y.size() == 2) {
    const int a = y.front(), b = *std::next(y.begin());
    const Label m = g.label(a, b);
    if (!m.is_infinite() && m.code() >= 5) return IrreducibleType::I2(m.code());
  }
  return std::nullopt;
}

// Sphericity through the Coxeter bilinear form B(s,t) = -cos(pi/m_st),
// which is positive definite exactly for finite Coxeter groups. Cholesky
// pivots below `eps` count as failure.
inline bool bilinear_form_positive_definite(const CoxeterGraph& g, VertexSet x,
                                            double eps = 1e-9) {
  std::vector<int> v(x.begin(), x.end());
  const std::size_t n = v.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Label m = g.label(v[i], v[j]);
      a[i * n + j] = i == j ? 1.0 : m.is_infinite() ? -1.0 : -std::cos(std::numbers::pi / m.code());
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k * n + k] <= eps) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a[i * n + k] / a[k * n + k];
      for (std::size_t j = k; j < n; ++j) a[i * n + j] -= f * a[k * n + j];
    }
  }
  return true;
}

// SYMMETRIC GROUP MODEL
//
// A_n on s1..sn acts on points 0..n with s_i the transposition (i-1, i).
// Permutations compose as functions: (p * q)(k) = p(q(k)).

using Permutation = std::vector<int>;

inline Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation out(q.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[q[k]];
  return out;
}

inline Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[p[k]] = static_cast<int>(k);
  return out;
}

inline Permutation transposition(int points, int a, int b) {
  Permutation p(points);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[a], p[b]);
  return p;
}

// Longest element of the parabolic subgroup on a set of generator indices
// of the path: reverses each block of consecutive points.
inline Permutation longest_of(int points, VertexSet v) {
  Permutation p(points);
  std::iota(p.begin(), p.end(), 0);
  int i = 0;
  while (i < points - 1) {
    if (!v.contains(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 < points - 1 && v.contains(j + 1)) ++j;
    std::reverse(p.begin() + i, p.begin() + j + 2);
    i = j + 1;
  }
  return p;
}

// c^-1 s c for every generator s of X, read back as generator indices;
// nullopt if some image is not a simple transposition.
inline std::optional<VertexSet> conjugate_in_symmetric_group(int rank, VertexSet x,
                                                             const std::vector<VertexSet>& factors) {
  const int points = rank + 1;
  Permutation c(points);
  std::iota(c.begin(), c.end(), 0);
  for (VertexSet f : factors) c = compose(c, longest_of(points, f));
  VertexSet out;
  for (int s : x) {
    const Permutation img = compose(inverse(c), compose(transposition(points, s, s + 1), c));
    int moved = -1;
    for (int k = 0; k < points; ++k)
      if (img[k] != k) {
        moved = k;
        break;
      }
    if (moved < 0 || moved + 1 >= points || img[moved] != moved + 1) return std::nullopt;
    for (int k = 0; k < points; ++k)
      if (k != moved && k != moved + 1 && img[k] != k) return std::nullopt;
    out.insert(moved);
  }
  return out;
}

// RANDOM GRAPHS

struct LabelWeights {
  // Weights for 2, 3, 4, 5, infinity.
  std::vector<double> w{0.40, 0.32, 0.10, 0.06, 0.12};
};

inline Label random_label(std::mt19937_64& rng, const LabelWeights& weights = {}) {
  std::discrete_distribution<int> pick(weights.w.begin(), weights.w.end());
  switch (pick(rng)) {
    case 0: return Label::finite(2);
    case 1: return Label::finite(3);
    case 2: return Label::finite(4);
    case 3: return Label::finite(5);
    default: return Label::infinity();
  }
}

inline std::vector<std::string> random_names(std::mt19937_64& rng, int n) {
  static const char* pool[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                               "p", "q", "r", "s", "t", "u", "x", "y"};
  std::vector<std::string> names(std::begin(pool), std::end(pool));
  std::shuffle(names.begin(), names.end(), rng);
  names.resize(n);
  return names;
}

// A graph on 1..max_n generators with independently drawn labels.
inline CoxeterGraph random_graph(std::mt19937_64& rng, int max_n,
                                 const LabelWeights& weights = {}) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  const auto names = random_names(rng, n);
  std::vector<CoxeterGraph::Relation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rels.push_back({names[i], names[j], random_label(rng, weights)});
  return CoxeterGraph(names, rels);
}

inline VertexSet random_subset(std::mt19937_64& rng, const CoxeterGraph& g) {
  return VertexSet(std::uniform_int_distribution<std::uint64_t>(0, g.all().bits())(rng) &
                   g.all().bits());
}

// The same labeled graph with fresh, randomly chosen names (so the
// canonical order is shuffled). `rename[v]` is the new name of generator v.
struct Renamed {
  CoxeterGraph graph;
  std::vector<std::string> rename;

  VertexSet map(const CoxeterGraph& from, VertexSet x) const {
    VertexSet out;
    for (int v : x) out.insert(*graph.index_of(rename[v]));
    (void)from;
    return out;
  }
};

inline Renamed random_renaming(std::mt19937_64& rng, const CoxeterGraph& g) {
  Renamed r;
  r.rename = random_names(rng, g.size());
  for (auto& n : r.rename) n = "z" + n;
  std::vector<CoxeterGraph::Relation> rels;
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t) rels.push_back({r.rename[s], r.rename[t], g.label(s, t)});
  r.graph = CoxeterGraph(r.rename, rels);
  return r;
}

// A random tree (Pruefer sequence) or cycle on n vertices with labels drawn
// from {3,4,5,6,infinity}, biased towards 3.
inline CoxeterGraph random_tree_or_cycle(std::mt19937_64& rng, int n, bool cycle) {
  const auto names = catalog::numbered(n, "v");
  std::vector<std::pair<int, int>> edges;
  if (cycle && n >= 3) {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int i = 0; i < n; ++i) edges.emplace_back(order[i], order[(i + 1) % n]);
  } else if (n >= 2) {
    std::vector<int> prufer(n - 2);
    for (auto& p : prufer) p = std::uniform_int_distribution<int>(0, n - 1)(rng);
    std::vector<int> degree(n, 1);
    for (int p : prufer) ++degree[p];
    for (int p : prufer) {
      for (int v = 0; v < n; ++v) {
        if (degree[v] == 1) {
          edges.emplace_back(v, p);
          --degree[v];
          --degree[p];
          break;
        }
      }
    }
    int u = -1;
    for (int v = 0; v < n; ++v) {
      if (degree[v] == 1) {
        if (u < 0) {
          u = v;
        } else {
          edges.emplace_back(u, v);
          break;
        }
      }
    }
  }
  std::discrete_distribution<int> pick({0.70, 0.12, 0.08, 0.05, 0.05});
  const Label labels[] = {Label::finite(3), Label::finite(4), Label::finite(5),
                          Label::finite(6), Label::infinity()};
  std::vector<CoxeterGraph::Relation> rels;
  for (auto [a, b] : edges) rels.push_back({names[a], names[b], labels[pick(rng)]});
  return CoxeterGraph(names, rels);
}

// A catalog diagram with its generators shuffled and renamed.
inline CoxeterGraph scrambled(std::mt19937_64& rng, const IrreducibleType& t) {
  return random_renaming(rng, catalog::graph_of(t)).graph;
}

}  // namespace artinstab::testing

#endif  // ARTINSTAB_TESTS_SUPPORT_ORACLES_HPP_
