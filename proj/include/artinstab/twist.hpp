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
// Set-level action of Garside elements: the diagram automorphism induced by
// conjugation by Delta, elementary twists, elementary ribbons, and symbolic
// conjugator words made of signed Delta factors.

#ifndef ARTINSTAB_TWIST_HPP_
#define ARTINSTAB_TWIST_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinstab/classify.hpp"
#include "artinstab/error.hpp"
#include "artinstab/graph.hpp"

namespace artinstab {

// Delta_{subset}^{sign}
struct TwistFactor {
  VertexSet subset;
  int sign = +1;

  friend bool operator==(const TwistFactor&, const TwistFactor&) = default;
};

// A formal product of signed Garside factors, applied left to right. The
// empty word is the identity.
struct ConjugatorWord {
  std::vector<TwistFactor> factors;

  bool empty() const { return factors.empty(); }
  std::size_t size() const { return factors.size(); }

  ConjugatorWord then(TwistFactor f) const {
    ConjugatorWord w = *this;
    w.factors.push_back(f);
    return w;
  }

  friend bool operator==(const ConjugatorWord&, const ConjugatorWord&) = default;
};

// Position permutation (0-based) of conjugation by Delta on a component:
// the result p -> perm[p] satisfies Delta^-1 s_p Delta = s_perm[p].
inline std::vector<int> delta_positions(const TypedComponent& c) {
  const int n = c.rank();
  std::vector<int> perm(n);
  for (int p = 0; p < n; ++p) perm[p] = p;
  if (!is_twistable(c)) return perm;  // Delta is central
  switch (c.type.series) {
    case Series::A:
      for (int p = 0; p < n; ++p) perm[p] = n - 1 - p;
      break;
    case Series::D:
    case Series::I2:
      std::swap(perm[0], perm[1]);
      break;
    case Series::E:  // E_6: s_1, s_4 fixed, s_i <-> s_{8-i}
      perm = {0, 5, 4, 3, 2, 1};
      break;
    default:
      break;
  }
  return perm;
}

// The involution induced on the generators of c, as (generator, image)
// pairs in position order.
inline std::vector<std::pair<int, int>> delta_automorphism(const TypedComponent& c) {
  const auto perm = delta_positions(c);
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < c.rank(); ++p) out.emplace_back(c.positions[p], c.positions[perm[p]]);
  return out;
}

namespace detail {

// Generator-level image table of Delta-conjugation on a spherical set.
using VertexImage = std::array<std::int8_t, VertexSet::kCapacity>;

inline VertexImage identity_image() {
  VertexImage img{};
  for (int v = 0; v < VertexSet::kCapacity; ++v) img[v] = static_cast<std::int8_t>(v);
  return img;
}

inline std::optional<VertexImage> delta_image(const CoxeterGraph& g, VertexSet v) {
  auto dec = spherical_decomposition(g, v);
  if (!dec) return std::nullopt;
  VertexImage img = identity_image();
  for (const auto& c : *dec)
    for (auto [from, to] : delta_automorphism(c)) img[from] = static_cast<std::int8_t>(to);
  return img;
}

inline VertexSet map_set(const VertexImage& img, VertexSet x) {
  VertexSet out;
  for (int v : x) out.insert(img[v]);
  return out;
}

// Memoized per-component twist data for BFS loops. Owned by a single
// computation; not shared between threads.
class TwistCache {
 public:
  explicit TwistCache(const CoxeterGraph& g) : g_(g) {}

  const CoxeterGraph& graph() const { return g_; }

  // Image table of Delta on a connected set if it is twistable, else null.
  const VertexImage* twistable_image(VertexSet component) {
    auto it = twist_.find(component.bits());
    if (it == twist_.end()) {
      std::optional<VertexImage> img;
      auto t = recognize_component(g_, component);
      if (t && is_twistable(*t)) {
        img = identity_image();
        for (auto [from, to] : delta_automorphism(*t)) (*img)[from] = static_cast<std::int8_t>(to);
      }
      it = twist_.emplace(component.bits(), img).first;
    }
    return it->second ? &*it->second : nullptr;
  }

  const std::optional<TypedComponent>& type_of(VertexSet component) {
    auto it = types_.find(component.bits());
    if (it == types_.end())
      it = types_.emplace(component.bits(), recognize_component(g_, component)).first;
    return it->second;
  }

 private:
  const CoxeterGraph& g_;
  std::unordered_map<std::uint64_t, std::optional<VertexImage>> twist_;
  std::unordered_map<std::uint64_t, std::optional<TypedComponent>> types_;
};

}  // namespace detail

// Image of X under conjugation by Delta_V^{sign}. V must be spherical and
// every element of X outside V must commute with all of V.
inline VertexSet delta_conjugate_set(const CoxeterGraph& g, VertexSet v, VertexSet x,
                                     int sign = +1) {
  (void)sign;  // Delta-conjugation is an involution on sets
  detail::require_subset(g, v | x, "delta_conjugate_set");
  auto img = detail::delta_image(g, v);
  if (!img)
    throw PreconditionError("delta_conjugate_set: " + format_set(g, v) +
                            " is not of spherical type");
  const VertexSet outside = x - v;
  if (adjacent(g, v).intersects(outside))
    throw DeltaActionUndefined("conjugating " + format_set(g, x) + " by Delta of " +
                                   format_set(g, v) +
                                   " does not give standard generators",
                               0);
  return detail::map_set(*img, x & v) | outside;
}

// ELEMENTARY TWISTS

struct TwistResult {
  VertexSet image;     // Delta_{Y'}^{-1} Y Delta_{Y'}
  TwistFactor factor;  // Delta_{Y'}^{+1}
};

namespace detail {

inline void require_adjacent(const CoxeterGraph& g, VertexSet y, int t, const char* op) {
  if (t < 0 || t >= g.size() || !adjacent(g, y).contains(t))
    throw PreconditionError(std::string(op) + ": generator is not adjacent to the subset");
}

inline std::optional<TwistResult> twist_with(TwistCache& cache, VertexSet y, int t) {
  const VertexSet with_t = y | VertexSet::single(t);
  const VertexSet comp = component_of(cache.graph(), with_t, VertexSet::single(t));
  const VertexImage* img = cache.twistable_image(comp);
  if (!img) return std::nullopt;
  return TwistResult{(y - comp) | map_set(*img, y & comp), TwistFactor{comp, +1}};
}

}  // namespace detail

// One step of the standard-parabolic orbit search: with Y' the component of
// Gamma_{Y u {t}} containing t, returns Delta_{Y'}^{-1} Y Delta_{Y'} if Y' is
// twistable, nullopt otherwise.
inline std::optional<TwistResult> elementary_twist(const CoxeterGraph& g, VertexSet y,
                                                   int t) {
  detail::require_subset(g, y, "elementary_twist");
  detail::require_adjacent(g, y, t, "elementary_twist");
  detail::TwistCache cache(g);
  return detail::twist_with(cache, y, t);
}

// ELEMENTARY RIBBONS

struct RibbonResult {
  VertexSet target;
  ConjugatorWord word;  // [Delta_{U\{s}}^{-1}, Delta_U^{+1}]
};

// r_{T,s} = Delta_{U\{s}}^{-1} Delta_U where U is the component of
// Gamma_{T u {s}} containing s; U need not be twistable, only spherical.
inline std::optional<RibbonResult> elementary_ribbon_target(const CoxeterGraph& g,
                                                            VertexSet t_set, int s) {
  detail::require_subset(g, t_set, "elementary_ribbon_target");
  detail::require_adjacent(g, t_set, s, "elementary_ribbon_target");
  const VertexSet u =
      component_of(g, t_set | VertexSet::single(s), VertexSet::single(s));
  auto type = recognize_component(g, u);
  if (!type) return std::nullopt;
  int tau_s = s;
  for (auto [from, to] : delta_automorphism(*type))
    if (from == s) tau_s = to;
  const VertexSet target = (t_set - u) | (u - VertexSet::single(tau_s));
  ConjugatorWord w{{TwistFactor{u - VertexSet::single(s), -1}, TwistFactor{u, +1}}};
  return RibbonResult{target, std::move(w)};
}

// Applies the factors of w to X from left to right.
inline VertexSet apply_word(const CoxeterGraph& g, VertexSet x, const ConjugatorWord& w) {
  VertexSet cur = x;
  for (std::size_t i = 0; i < w.factors.size(); ++i) {
    try {
      cur = delta_conjugate_set(g, w.factors[i].subset, cur, w.factors[i].sign);
    } catch (const DeltaActionUndefined& e) {
      throw DeltaActionUndefined("apply_word: factor " + std::to_string(i) + ": " + e.what(),
                                 i);
    }
  }
  return cur;
}

// JSON: [{"delta_of": [...], "sign": 1}, ...]

inline nlohmann::json to_json(const CoxeterGraph& g, const ConjugatorWord& w) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& f : w.factors)
    out.push_back({{"delta_of", names_of(g, f.subset)}, {"sign", f.sign}});
  return out;
}

inline ConjugatorWord word_from_json(const CoxeterGraph& g, const nlohmann::json& j) {
  if (!j.is_array()) throw InvalidInput("word: expected an array");
  ConjugatorWord w;
  for (const auto& f : j) {
    if (!f.is_object() || !f.contains("delta_of") || !f.contains("sign"))
      throw InvalidInput("word: factor must have 'delta_of' and 'sign'");
    const int sign = f["sign"].get<int>();
    if (sign != 1 && sign != -1) throw InvalidInput("word: sign must be 1 or -1");
    w.factors.push_back(
        {subset_from_names(g, f["delta_of"].get<std::vector<std::string>>()), sign});
  }
  return w;
}

inline std::string format_word(const CoxeterGraph& g, const ConjugatorWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& f : w.factors) {
    if (!out.empty()) out += " ";
    out += "Delta" + format_set(g, f.subset);
    if (f.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace artinstab

#endif  // ARTINSTAB_TWIST_HPP_
