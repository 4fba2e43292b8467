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
// Conjugacy of standard parabolic subgroups: A_X and A_X' are conjugate iff
// X' is reachable from X by elementary twists. The search is a BFS over
// generator subsets that records a conjugating word for every subset found.

#ifndef ARTINSTAB_ORBIT_HPP_
#define ARTINSTAB_ORBIT_HPP_

#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinstab/graph.hpp"
#include "artinstab/twist.hpp"

namespace artinstab {

// The list of couples (Y, c) with c^-1 A_X c = A_Y, in discovery order.
class OrbitTable {
 public:
  struct Entry {
    VertexSet subset;
    ConjugatorWord word;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(VertexSet y) const { return index_.count(y) != 0; }

  const ConjugatorWord* find(VertexSet y) const {
    auto it = index_.find(y);
    return it == index_.end() ? nullptr : &entries_[it->second].word;
  }

  // Returns false if y was already present.
  bool insert(VertexSet y, ConjugatorWord w) {
    if (!index_.emplace(y, entries_.size()).second) return false;
    entries_.push_back({y, std::move(w)});
    return true;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> index_;
};

namespace detail {

// BFS from x; stops as soon as `stop` is inserted, if given.
inline OrbitTable orbit_search(const CoxeterGraph& g, VertexSet x,
                               std::optional<VertexSet> stop) {
  TwistCache cache(g);
  OrbitTable table;
  table.insert(x, {});
  if (stop && *stop == x) return table;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const VertexSet y = table.entries()[i].subset;
    for (int t : adjacent(g, y)) {
      auto twist = twist_with(cache, y, t);
      if (!twist) continue;
      if (table.insert(twist->image, table.entries()[i].word.then(twist->factor)) && stop &&
          twist->image == *stop)
        return table;
    }
  }
  return table;
}

}  // namespace detail

// Every standard parabolic subgroup conjugate to A_X, each with a witness.
inline OrbitTable orbit(const CoxeterGraph& g, VertexSet x) {
  detail::require_subset(g, x, "orbit");
  return detail::orbit_search(g, x, std::nullopt);
}

// A word c with apply_word(g, x, c) == target, or nullopt when A_X and
// A_target are not conjugate.
inline std::optional<ConjugatorWord> conjugator(const CoxeterGraph& g, VertexSet x,
                                                VertexSet target) {
  detail::require_subset(g, x | target, "conjugator");
  if (x.size() != target.size()) return std::nullopt;
  OrbitTable table = detail::orbit_search(g, x, target);
  if (const ConjugatorWord* w = table.find(target)) return *w;
  return std::nullopt;
}

inline nlohmann::json to_json(const CoxeterGraph& g, const OrbitTable& table) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : table.entries())
    out.push_back({{"subset", names_of(g, e.subset)}, {"word", to_json(g, e.word)}});
  return out;
}

}  // namespace artinstab

#endif  // ARTINSTAB_ORBIT_HPP_
