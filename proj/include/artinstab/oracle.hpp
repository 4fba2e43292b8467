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
// Brute-force finite Coxeter groups, independent of the twist tables in
// twist.hpp. Crystallographic types (A, B, D, E, F) act on the integer root
// lattice in the simple-root basis; dihedral types I_2(m) use the group of
// order 2m directly. H_3 and H_4 are not modelled.
//
// Cartan orientation: for an edge between positions i < j with label 4 the
// entry A(i,j) = <alpha_j, alpha_i^vee> is -2 and A(j,i) is -1; label 3 gives
// -1 both ways. Position 1 of B_n is therefore the short root.

#ifndef ARTINSTAB_ORACLE_HPP_
#define ARTINSTAB_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "artinstab/classify.hpp"
#include "artinstab/error.hpp"
#include "artinstab/graph.hpp"

namespace artinstab::oracle {

using RootVector = std::vector<std::int64_t>;

// Integer Cartan matrix of the component in position order.
class CartanMatrix {
 public:
  CartanMatrix(const CoxeterGraph& g, const TypedComponent& c) : n_(c.rank()) {
    if (c.type.is(Series::H) || c.type.is(Series::I2))
      throw UnsupportedType("no integer root system for type " + c.type.to_string());
    a_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int i = 0; i < n_; ++i) {
      at(i, i) = 2;
      for (int j = i + 1; j < n_; ++j) {
        const Label m = g.label(c.positions[i], c.positions[j]);
        if (m == Label::finite(3)) {
          at(i, j) = at(j, i) = -1;
        } else if (m == Label::finite(4)) {
          at(i, j) = -2;
          at(j, i) = -1;
        } else if (m == Label::finite(6)) {
          at(i, j) = -3;
          at(j, i) = -1;
        } else if (m != Label::finite(2)) {
          throw UnsupportedType("label " + m.to_string() + " is not crystallographic");
        }
      }
    }
  }

  int rank() const { return n_; }
  std::int64_t operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

 private:
  std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int n_;
  std::vector<std::int64_t> a_;
};

inline bool is_positive(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](auto x) { return x > 0; });
}

inline bool is_negative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x <= 0; }) &&
         std::any_of(v.begin(), v.end(), [](auto x) { return x < 0; });
}

inline RootVector simple_root(int n, int i) {
  RootVector v(n, 0);
  v[i] = 1;
  return v;
}

// s_i(v) = v - <v, alpha_i^vee> alpha_i   (i is 0-based)
inline RootVector reflect(const CartanMatrix& a, int i, RootVector v) {
  std::int64_t pairing = 0;
  for (int j = 0; j < a.rank(); ++j) pairing += a(i, j) * v[j];
  v[i] -= pairing;
  return v;
}

// An element of the Weyl group as the images of the simple roots, together
// with the word (1-based positions) it was built from.
struct WeylElement {
  int rank = 0;
  std::vector<RootVector> columns;  // columns[j] = w(alpha_j)
  std::vector<int> word;

  static WeylElement identity(int n) {
    WeylElement w;
    w.rank = n;
    for (int j = 0; j < n; ++j) w.columns.push_back(simple_root(n, j));
    return w;
  }

  RootVector apply(const RootVector& v) const {
    RootVector out(rank, 0);
    for (int j = 0; j < rank; ++j)
      for (int k = 0; k < rank; ++k) out[k] += v[j] * columns[j][k];
    return out;
  }

  // w * s_i (i is 1-based): column j becomes w(alpha_j - A(i,j) alpha_i).
  WeylElement times_simple(const CartanMatrix& a, int i) const {
    WeylElement out = *this;
    for (int j = 0; j < rank; ++j) {
      const std::int64_t c = a(i - 1, j);
      if (c == 0) continue;
      for (int k = 0; k < rank; ++k) out.columns[j][k] -= c * columns[i - 1][k];
    }
    out.word.push_back(i);
    return out;
  }

  bool is_identity() const {
    for (int j = 0; j < rank; ++j)
      if (columns[j] != simple_root(rank, j)) return false;
    return true;
  }
};

// The simple reflection at 1-based position i.
inline WeylElement simple_reflection(const CoxeterGraph& g, const TypedComponent& c, int i) {
  CartanMatrix a(g, c);
  if (i < 1 || i > a.rank()) throw PreconditionError("simple_reflection: bad position");
  return WeylElement::identity(a.rank()).times_simple(a, i);
}

// Positive roots, found as the closure of the simple roots under all
// simple reflections.
inline std::vector<RootVector> positive_roots(const CoxeterGraph& g, const TypedComponent& c) {
  CartanMatrix a(g, c);
  std::set<RootVector> seen;
  std::deque<RootVector> queue;
  for (int i = 0; i < a.rank(); ++i) {
    seen.insert(simple_root(a.rank(), i));
    queue.push_back(simple_root(a.rank(), i));
  }
  while (!queue.empty()) {
    RootVector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < a.rank(); ++i) {
      RootVector r = reflect(a, i, v);
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }
  std::vector<RootVector> out;
  for (const auto& r : seen)
    if (is_positive(r)) out.push_back(r);
  return out;
}

// DIHEDRAL GROUPS

// rho^rotation sigma^flip in the dihedral group of order 2m, with
// s_1 = sigma and s_2 = rho sigma.
struct DihedralElement {
  int m = 0;
  int rotation = 0;
  bool flip = false;

  static DihedralElement identity(int m) { return {m, 0, false}; }
  static DihedralElement generator(int m, int i) { return {m, i == 1 ? 0 : 1, true}; }

  DihedralElement operator*(const DihedralElement& o) const {
    const int r = flip ? rotation - o.rotation : rotation + o.rotation;
    return {m, ((r % m) + m) % m, flip != o.flip};
  }

  friend bool operator==(const DihedralElement&, const DihedralElement&) = default;
};

// Word length in s_1, s_2.
inline int dihedral_length(const DihedralElement& w) {
  const int m = w.m;
  std::vector<int> dist(2 * m, -1);
  auto key = [m](const DihedralElement& e) { return e.rotation + (e.flip ? m : 0); };
  std::deque<DihedralElement> queue{DihedralElement::identity(m)};
  dist[0] = 0;
  while (!queue.empty()) {
    auto e = queue.front();
    queue.pop_front();
    for (int i = 1; i <= 2; ++i) {
      auto f = e * DihedralElement::generator(m, i);
      if (dist[key(f)] < 0) {
        dist[key(f)] = dist[key(e)] + 1;
        queue.push_back(f);
      }
    }
  }
  return dist[key(w)];
}

// LONGEST ELEMENT

// A reduced word (1-based positions) of the longest element w_0, found by
// greedy descent: right-multiply by the smallest s_i that lengthens the
// element until none does.
inline std::vector<int> longest_word(const CoxeterGraph& g, const TypedComponent& c) {
  if (c.type.is(Series::I2)) {
    const int m = c.type.label;
    DihedralElement w = DihedralElement::identity(m);
    std::vector<int> word;
    for (bool grew = true; grew;) {
      grew = false;
      for (int i = 1; i <= 2; ++i) {
        auto next = w * DihedralElement::generator(m, i);
        if (dihedral_length(next) > dihedral_length(w)) {
          w = next;
          word.push_back(i);
          grew = true;
          break;
        }
      }
    }
    return word;
  }
  CartanMatrix a(g, c);
  WeylElement w = WeylElement::identity(a.rank());
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= a.rank(); ++i) {
      if (is_positive(w.columns[i - 1])) {
        w = w.times_simple(a, i);
        grew = true;
        break;
      }
    }
  }
  return w.word;
}

// w_0 as a matrix (crystallographic types only).
inline WeylElement longest_element(const CoxeterGraph& g, const TypedComponent& c) {
  CartanMatrix a(g, c);
  WeylElement w = WeylElement::identity(a.rank());
  for (int i : longest_word(g, c)) w = w.times_simple(a, i);
  return w;
}

// i -> j (1-based, as perm[i-1] = j) with w_0 s_i w_0 = s_j.
inline std::vector<int> w0_conjugation_permutation(const CoxeterGraph& g,
                                                   const TypedComponent& c) {
  if (c.type.is(Series::I2)) {
    const int m = c.type.label;
    DihedralElement w0 = DihedralElement::identity(m);
    for (int i : longest_word(g, c)) w0 = w0 * DihedralElement::generator(m, i);
    std::vector<int> perm(2);
    for (int i = 1; i <= 2; ++i) {
      const auto conj = w0 * DihedralElement::generator(m, i) * w0;
      perm[i - 1] = conj == DihedralElement::generator(m, 1) ? 1 : 2;
    }
    return perm;
  }
  const WeylElement w0 = longest_element(g, c);
  std::vector<int> perm(w0.rank, 0);
  for (int i = 0; i < w0.rank; ++i) {
    RootVector neg = w0.columns[i];
    for (auto& x : neg) x = -x;
    for (int j = 0; j < w0.rank; ++j)
      if (neg == simple_root(w0.rank, j)) perm[i] = j + 1;
    if (perm[i] == 0)
      throw Error("w0 does not send a simple root to a negative simple root");
  }
  return perm;
}

// Delta of the component as a word in its generators.
inline std::vector<std::string> expand_delta(const CoxeterGraph& g, const TypedComponent& c) {
  std::vector<std::string> out;
  for (int i : longest_word(g, c)) out.push_back(g.name(c.at(i)));
  return out;
}

// Delta of a spherical set: concatenation over its components.
inline std::vector<std::string> expand_delta(const CoxeterGraph& g, VertexSet v) {
  auto dec = spherical_decomposition(g, v);
  if (!dec) throw UnsupportedType(format_set(g, v) + " is not of spherical type");
  std::vector<std::string> out;
  for (const auto& c : *dec) {
    auto part = expand_delta(g, c);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace artinstab::oracle

#endif  // ARTINSTAB_ORACLE_HPP_
