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
// Coxeter graphs of Artin groups: labels, generator subsets, connected
// components, adjacency, and the JSON / DOT file formats.

#ifndef ARTINSTAB_GRAPH_HPP_
#define ARTINSTAB_GRAPH_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinstab/error.hpp"

namespace artinstab {

// LABEL

// The Coxeter label m_{s,t}: an integer >= 2 or infinity (no relation).
class Label {
 public:
  constexpr Label() = default;

  static constexpr Label finite(int m) { return Label(m); }
  static constexpr Label infinity() { return Label(kInfinityCode); }

  constexpr bool is_infinite() const { return m_ == kInfinityCode; }
  // m for finite labels, 0 for infinity (the file encoding).
  constexpr int code() const { return m_; }
  // Edges of the Coxeter graph are the pairs with m >= 3 or m = infinity.
  constexpr bool is_edge() const { return is_infinite() || m_ >= 3; }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(m_);
  }

  friend constexpr bool operator==(Label, Label) = default;

 private:
  static constexpr int kInfinityCode = 0;
  explicit constexpr Label(int m) : m_(m) {}
  int m_ = 2;
};

// VERTEX SET

// A subset of generators, stored as a bitmask over the canonical generator
// indices of a CoxeterGraph. Iteration yields indices in ascending
// (= canonical) order.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
  static constexpr VertexSet first_n(int n) {
    return VertexSet(n >= kCapacity ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.insert(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  // Smallest index; undefined on the empty set.
  constexpr int front() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= bit(v); }
  constexpr void erase(int v) { bits_ &= ~bit(v); }

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { auto old = *this; ++*this; return old; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
  std::uint64_t bits_ = 0;
};

struct VertexSetHash {
  std::size_t operator()(VertexSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

// Calls f(sub) for every subset of `set`, in increasing numeric order of
// the mask (the empty set first).
template <typename F>
void for_each_subset(VertexSet set, F&& f) {
  const std::uint64_t full = set.bits();
  std::uint64_t sub = 0;
  while (true) {
    f(VertexSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Nonempty subsets of `set`, ordered by cardinality and then by mask.
inline std::vector<VertexSet> nonempty_subsets(VertexSet set) {
  std::vector<VertexSet> out;
  for_each_subset(set, [&](VertexSet s) {
    if (!s.empty()) out.push_back(s);
  });
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    return a.size() < b.size();
  });
  return out;
}

// COXETER GRAPH

class CoxeterGraph {
 public:
  struct Relation {
    std::string s;
    std::string t;
    Label label;
  };

  CoxeterGraph() = default;

  // Generators are sorted into canonical (lexicographic) order. Pairs not
  // mentioned in `relations` get `default_label`.
  CoxeterGraph(std::vector<std::string> generators,
               const std::vector<Relation>& relations,
               Label default_label = Label::finite(2)) {
    std::sort(generators.begin(), generators.end());
    if (std::adjacent_find(generators.begin(), generators.end()) != generators.end())
      throw InvalidInput("duplicate generator name");
    if (generators.size() > static_cast<std::size_t>(VertexSet::kCapacity))
      throw InvalidInput("at most 64 generators are supported");
    names_ = std::move(generators);
    const int n = size();
    labels_.assign(static_cast<std::size_t>(n) * n, default_label);
    adjacency_.assign(n, VertexSet());
    for (int i = 0; i < n; ++i) labels_[i * n + i] = Label::finite(1);
    std::vector<bool> seen(labels_.size(), false);
    for (const Relation& r : relations) {
      auto i = index_of(r.s), j = index_of(r.t);
      if (!i || !j)
        throw InvalidInput("relation names unknown generator '" +
                           (i ? r.t : r.s) + "'");
      if (*i == *j) throw InvalidInput("self-pair '" + r.s + "'");
      if (!r.label.is_infinite() && r.label.code() < 2)
        throw InvalidInput("label must be >= 2 or infinity");
      const std::size_t k = static_cast<std::size_t>(*i) * n + *j;
      if (seen[k] && labels_[k] != r.label)
        throw InvalidInput("conflicting labels for pair {" + r.s + "," + r.t + "}");
      seen[k] = seen[static_cast<std::size_t>(*j) * n + *i] = true;
      labels_[k] = labels_[static_cast<std::size_t>(*j) * n + *i] = r.label;
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && label(i, j).is_edge()) adjacency_[i].insert(j);
  }

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& generators() const { return names_; }
  const std::string& name(int v) const { return names_[v]; }
  VertexSet all() const { return VertexSet::first_n(size()); }

  std::optional<int> index_of(std::string_view name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<int>(it - names_.begin());
  }

  Label label(int s, int t) const {
    return labels_[static_cast<std::size_t>(s) * size() + t];
  }
  bool is_edge(int s, int t) const { return adjacency_[s].contains(t); }
  // Graph neighbours (m >= 3 or infinity).
  VertexSet neighbours(int v) const { return adjacency_[v]; }

  bool contains(VertexSet x) const { return x.subset_of(all()); }

  // Label map equality; names compared as well.
  friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.names_ == b.names_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Label> labels_;  // row-major, diagonal holds 1
  std::vector<VertexSet> adjacency_;
};

namespace detail {

inline void require_subset(const CoxeterGraph& g, VertexSet x, const char* op) {
  if (!g.contains(x))
    throw PreconditionError(std::string(op) +
                            ": subset is not contained in the generators");
}

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [&](char c) { return alpha(c) || digit(c); });
}

}  // namespace detail

// SUBSET OPERATIONS

// Generators outside X joined by an edge to some element of X.
inline VertexSet adjacent(const CoxeterGraph& g, VertexSet x) {
  detail::require_subset(g, x, "adjacent");
  VertexSet out;
  for (int v : x) out |= g.neighbours(v);
  return out - x;
}

// The connected component of Gamma_within containing `seed` (seed must lie
// in `within`).
inline VertexSet component_of(const CoxeterGraph& g, VertexSet within, VertexSet seed) {
  VertexSet reached = seed & within;
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    for (int v : frontier) next |= g.neighbours(v);
    next = (next & within) - reached;
    reached |= next;
    frontier = next;
  }
  return reached;
}

// Connected components of Gamma_X, sorted by smallest generator.
inline std::vector<VertexSet> components(const CoxeterGraph& g, VertexSet x) {
  detail::require_subset(g, x, "components");
  std::vector<VertexSet> out;
  VertexSet rest = x;
  while (!rest.empty()) {
    VertexSet c = component_of(g, x, VertexSet::single(rest.front()));
    out.push_back(c);
    rest -= c;
  }
  return out;
}

inline bool is_connected(const CoxeterGraph& g, VertexSet x) {
  return !x.empty() && component_of(g, x, VertexSet::single(x.front())) == x;
}

// The Coxeter graph Gamma_X with labels restricted from g.
inline CoxeterGraph induced(const CoxeterGraph& g, VertexSet x) {
  detail::require_subset(g, x, "induced");
  std::vector<std::string> names;
  std::vector<CoxeterGraph::Relation> rels;
  for (int s : x) {
    names.push_back(g.name(s));
    for (int t : x)
      if (s < t && g.label(s, t) != Label::finite(2))
        rels.push_back({g.name(s), g.name(t), g.label(s, t)});
  }
  return CoxeterGraph(std::move(names), rels);
}

// NAMES

inline std::vector<std::string> names_of(const CoxeterGraph& g, VertexSet x) {
  std::vector<std::string> out;
  for (int v : x) out.push_back(g.name(v));
  return out;
}

inline std::string format_set(const CoxeterGraph& g, VertexSet x) {
  std::string out = "{";
  bool first = true;
  for (int v : x) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  }
  return out + "}";
}

inline VertexSet subset_from_names(const CoxeterGraph& g,
                                   const std::vector<std::string>& names) {
  VertexSet out;
  for (const auto& n : names) {
    auto i = g.index_of(n);
    if (!i) throw InvalidInput("unknown generator '" + n + "'");
    out.insert(*i);
  }
  return out;
}

// Parses "a,b,c" (whitespace around names ignored; empty string = empty set).
inline VertexSet parse_subset(const CoxeterGraph& g, std::string_view list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  if (trim(list).empty()) return {};
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    auto item = trim(list.substr(start, comma - start));
    if (item.empty()) throw InvalidInput("empty generator name in subset list");
    names.emplace_back(item);
    start = comma + 1;
  }
  return subset_from_names(g, names);
}

// FILE FORMAT
//
//   {"generators": ["a","b",...],
//    "relations": [["a","b",3], ["b","c",0], ["c","d","inf"]],
//    "infinite_by_default": false}
//
// 0 and "inf" both denote m = infinity.

inline CoxeterGraph graph_from_json(const nlohmann::json& j) {
  using nlohmann::json;
  if (!j.is_object()) throw InvalidInput("graph: top level must be an object");
  for (const auto& [key, _] : j.items())
    if (key != "generators" && key != "relations" && key != "infinite_by_default")
      throw InvalidInput("graph: unknown key '" + key + "'");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw InvalidInput("graph: 'generators' must be an array");
  const json& gens = j["generators"];
  if (gens.empty()) throw InvalidInput("graph: 'generators' must be nonempty");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string where = "generators[" + std::to_string(i) + "]";
    if (!gens[i].is_string()) throw InvalidInput(where + ": expected a string");
    std::string name = gens[i].get<std::string>();
    if (!detail::is_identifier(name))
      throw InvalidInput(where + ": '" + name + "' is not an ASCII identifier");
    if (std::find(names.begin(), names.end(), name) != names.end())
      throw InvalidInput(where + ": duplicate generator '" + name + "'");
    names.push_back(std::move(name));
  }
  if (names.size() > static_cast<std::size_t>(VertexSet::kCapacity))
    throw InvalidInput("generators: at most 64 generators are supported");

  Label fallback = Label::finite(2);
  if (j.contains("infinite_by_default")) {
    if (!j["infinite_by_default"].is_boolean())
      throw InvalidInput("infinite_by_default: expected a boolean");
    if (j["infinite_by_default"].get<bool>()) fallback = Label::infinity();
  }

  std::vector<CoxeterGraph::Relation> rels;
  if (j.contains("relations")) {
    const json& rs = j["relations"];
    if (!rs.is_array()) throw InvalidInput("relations: expected an array");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string where = "relations[" + std::to_string(i) + "]";
      const json& r = rs[i];
      if (!r.is_array() || r.size() != 3 || !r[0].is_string() || !r[1].is_string())
        throw InvalidInput(where + ": expected [generator, generator, label]");
      std::string s = r[0].get<std::string>(), t = r[1].get<std::string>();
      if (s == t) throw InvalidInput(where + ": self-pair '" + s + "'");
      for (const auto& n : {s, t})
        if (std::find(names.begin(), names.end(), n) == names.end())
          throw InvalidInput(where + ": unknown generator '" + n + "'");
      Label label;
      if (r[2].is_string()) {
        if (r[2].get<std::string>() != "inf")
          throw InvalidInput(where + ": label string must be \"inf\"");
        label = Label::infinity();
      } else if (r[2].is_number_integer()) {
        const auto m = r[2].get<long long>();
        if (m == 0) {
          label = Label::infinity();
        } else if (m < 2) {
          throw InvalidInput(where + ": label " + std::to_string(m) + " is < 2");
        } else if (m > 1'000'000) {
          throw InvalidInput(where + ": label " + std::to_string(m) + " is too large");
        } else {
          label = Label::finite(static_cast<int>(m));
        }
      } else {
        throw InvalidInput(where + ": label must be an integer or \"inf\"");
      }
      for (const auto& prev : rels) {
        if ((prev.s == s && prev.t == t) || (prev.s == t && prev.t == s)) {
          if (prev.label != label)
            throw InvalidInput(where + ": conflicting duplicate of pair {" + s + "," + t + "}");
        }
      }
      rels.push_back({std::move(s), std::move(t), label});
    }
  }
  return CoxeterGraph(std::move(names), rels, fallback);
}

inline CoxeterGraph parse_graph(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("graph: malformed JSON at byte " + std::to_string(e.byte) +
                       ": " + e.what());
  }
  return graph_from_json(j);
}

// Normalized form: canonical generator order, every non-2 pair listed once
// (s < t), infinity written as 0, infinite_by_default false.
inline nlohmann::json to_json(const CoxeterGraph& g) {
  nlohmann::json rels = nlohmann::json::array();
  for (int s = 0; s < g.size(); ++s)
    for (int t = s + 1; t < g.size(); ++t)
      if (g.label(s, t) != Label::finite(2))
        rels.push_back({g.name(s), g.name(t), g.label(s, t).code()});
  return {{"generators", g.generators()},
          {"relations", std::move(rels)},
          {"infinite_by_default", false}};
}

inline std::string to_dot(const CoxeterGraph& g) {
  std::ostringstream os;
  os << "graph coxeter {\n";
  for (int v = 0; v < g.size(); ++v) os << "  \"" << g.name(v) << "\";\n";
  for (int s = 0; s < g.size(); ++s) {
    for (int t = s + 1; t < g.size(); ++t) {
      const Label m = g.label(s, t);
      if (!m.is_edge()) continue;
      os << "  \"" << g.name(s) << "\" -- \"" << g.name(t) << "\"";
      if (m.is_infinite())
        os << " [label=\"\xE2\x88\x9E\"]";
      else if (m.code() > 3)
        os << " [label=\"" << m.code() << "\"]";
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace artinstab

#endif  // ARTINSTAB_GRAPH_HPP_
