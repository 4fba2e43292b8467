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
// Conjugacy stability of standard parabolic subgroups.
//
// A_X is conjugacy stable in A_S iff none of three obstructions occurs:
//
//   permutation   some X_1 in X has a tuple of component images, reachable
//                 by twists through all of S, that lands inside X but is not
//                 reachable by twists through X alone;
//   D_2k (k>2)    a D_2k component of some T in X extends outside X (at the
//                 tail vertex) to a D-odd diagram, with no such extension
//                 available inside X;
//   D_4           a D_4 component of some T in X extends outside X at a
//                 leaf to a D-odd diagram and neither the same leaf nor both
//                 other leaves can be extended that way inside X.
//
// All three are decided at the level of generator sets and tuples.

#ifndef ARTINSTAB_STABILITY_HPP_
#define ARTINSTAB_STABILITY_HPP_

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "artinstab/classify.hpp"
#include "artinstab/error.hpp"
#include "artinstab/graph.hpp"
#include "artinstab/twist.hpp"

namespace artinstab {

// COMPONENT TUPLES

// Position i holds the current image of the i-th connected component of
// the starting subset.
struct ComponentTuple {
  std::vector<VertexSet> parts;

  VertexSet union_set() const {
    VertexSet u;
    for (VertexSet p : parts) u |= p;
    return u;
  }

  friend bool operator==(const ComponentTuple&, const ComponentTuple&) = default;
};

struct ComponentTupleHash {
  std::size_t operator()(const ComponentTuple& t) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (VertexSet p : t.parts) {
      h ^= p.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

inline ComponentTuple initial_tuple(const CoxeterGraph& g, VertexSet x1) {
  return ComponentTuple{components(g, x1)};
}

namespace detail {

inline std::optional<std::pair<ComponentTuple, TwistFactor>> tuple_twist_with(
    TwistCache& cache, const ComponentTuple& tuple, VertexSet y, int t) {
  const VertexSet comp =
      component_of(cache.graph(), y | VertexSet::single(t), VertexSet::single(t));
  const VertexImage* img = cache.twistable_image(comp);
  if (!img) return std::nullopt;
  ComponentTuple out;
  out.parts.reserve(tuple.parts.size());
  for (VertexSet p : tuple.parts) out.parts.push_back((p - comp) | map_set(*img, p & comp));
  return std::make_pair(std::move(out), TwistFactor{comp, +1});
}

}  // namespace detail

// Twists every position of the tuple by Delta of the component of
// Gamma_{Y u {t}} containing t (Y = union of the tuple).
inline std::optional<std::pair<ComponentTuple, TwistFactor>> tuple_twist(
    const CoxeterGraph& g, const ComponentTuple& tuple, int t) {
  const VertexSet y = tuple.union_set();
  detail::require_subset(g, y, "tuple_twist");
  detail::require_adjacent(g, y, t, "tuple_twist");
  detail::TwistCache cache(g);
  return detail::tuple_twist_with(cache, tuple, y, t);
}

// Tuples reachable from the components of X_1, each with the word reaching
// it, in BFS order.
class TupleOrbit {
 public:
  struct Entry {
    ComponentTuple tuple;
    ConjugatorWord word;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool contains(const ComponentTuple& t) const { return index_.count(t) != 0; }

  bool insert(ComponentTuple t, ConjugatorWord w) {
    if (!index_.emplace(t, entries_.size()).second) return false;
    entries_.push_back({std::move(t), std::move(w)});
    return true;
  }

 private:
  std::vector<Entry> entries_;
  std::unordered_map<ComponentTuple, std::size_t, ComponentTupleHash> index_;
};

namespace detail {

// BFS closure under tuple twists at generators accepted by `allowed`.
// `on_insert(entry)` is called for each newly found tuple; returning true
// stops the search.
template <typename Allowed, typename OnInsert>
TupleOrbit tuple_search(TwistCache& cache, VertexSet x1, Allowed&& allowed,
                        OnInsert&& on_insert) {
  const CoxeterGraph& g = cache.graph();
  TupleOrbit orbit;
  orbit.insert(initial_tuple(g, x1), {});
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    const VertexSet y = orbit.entries()[i].tuple.union_set();
    for (int t : adjacent(g, y)) {
      if (!allowed(t)) continue;
      auto next = tuple_twist_with(cache, orbit.entries()[i].tuple, y, t);
      if (!next) continue;
      ConjugatorWord w = orbit.entries()[i].word.then(next->second);
      if (orbit.insert(std::move(next->first), std::move(w)) &&
          on_insert(orbit.entries().back()))
        return orbit;
    }
  }
  return orbit;
}

}  // namespace detail

template <typename Allowed>
  requires std::predicate<Allowed&, int>
TupleOrbit tuple_orbit(const CoxeterGraph& g, VertexSet x1, Allowed&& allowed) {
  detail::require_subset(g, x1, "tuple_orbit");
  detail::TwistCache cache(g);
  return detail::tuple_search(cache, x1, allowed, [](const auto&) { return false; });
}

// Twists restricted to generators in `allowed`.
inline TupleOrbit tuple_orbit(const CoxeterGraph& g, VertexSet x1, VertexSet allowed) {
  return tuple_orbit(g, x1, [allowed](int t) { return allowed.contains(t); });
}

// D-TYPE EXCEPTIONS

struct DExceptionSite {
  VertexSet subset;          // T
  TypedComponent component;  // the D_2k or D_4 component of Gamma_T
  int site = -1;             // vertex of the component where t attaches
  int external = -1;         // t, outside X
};

namespace detail {

// Whether the component of Gamma_{Y u {t}} containing Y' (and t) is D-odd.
inline bool extends_to_d_odd(TwistCache& cache, VertexSet y, VertexSet yp, int t) {
  if (y.contains(t)) return false;
  const VertexSet comp = component_of(cache.graph(), y | VertexSet::single(t), yp);
  if (!comp.contains(t)) return false;
  const auto& type = cache.type_of(comp);
  return type && type->type.is_d_odd();
}

inline void require_d_component(const CoxeterGraph& g, VertexSet x, VertexSet y,
                                const TypedComponent& yp, const char* op) {
  detail::require_subset(g, x, op);
  if (!y.subset_of(x)) throw PreconditionError(std::string(op) + ": Y is not inside X");
  const VertexSet v = yp.vertices();
  if (v.empty() || !v.subset_of(y) || component_of(g, y, v) != v)
    throw PreconditionError(std::string(op) + ": not a connected component of Gamma_Y");
  auto actual = recognize_component(g, v);
  if (!actual || *actual != yp)
    throw PreconditionError(std::string(op) + ": component labeling is not canonical");
}

inline std::optional<DExceptionSite> d2k_exception(TwistCache& cache, VertexSet x,
                                                   VertexSet y, const TypedComponent& yp) {
  const CoxeterGraph& g = cache.graph();
  const VertexSet v = yp.vertices();
  const int tail = yp.at(yp.rank());
  const VertexSet around = adjacent(g, VertexSet::single(tail));
  for (int t : around - x) {
    if (!extends_to_d_odd(cache, y, v, t)) continue;
    for (int inner : around & x)
      if (extends_to_d_odd(cache, y, v, inner)) return std::nullopt;
    return DExceptionSite{y, yp, tail, t};
  }
  return std::nullopt;
}

inline std::optional<DExceptionSite> d4_exception(TwistCache& cache, VertexSet x,
                                                  VertexSet y, const TypedComponent& yp) {
  const CoxeterGraph& g = cache.graph();
  const VertexSet v = yp.vertices();
  const std::array<int, 3> leaves{yp.at(1), yp.at(2), yp.at(4)};
  auto inside_at = [&](int leaf) {
    for (int t : adjacent(g, VertexSet::single(leaf)) & x)
      if (extends_to_d_odd(cache, y, v, t)) return true;
    return false;
  };
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const int leaf = leaves[i];
    for (int t : adjacent(g, VertexSet::single(leaf)) - x) {
      if (!extends_to_d_odd(cache, y, v, t)) continue;
      if (inside_at(leaf)) continue;
      if (inside_at(leaves[(i + 1) % 3]) && inside_at(leaves[(i + 2) % 3])) continue;
      return DExceptionSite{y, yp, leaf, t};
    }
  }
  return std::nullopt;
}

}  // namespace detail

// Obstruction site for a D_2k (k > 2) component Y' of Gamma_Y, Y in X.
inline std::optional<DExceptionSite> find_d2k_exception(const CoxeterGraph& g, VertexSet x,
                                                        VertexSet y,
                                                        const TypedComponent& yp) {
  detail::require_d_component(g, x, y, yp, "check_d2k_exception");
  if (!yp.type.is(Series::D) || yp.rank() % 2 != 0 || yp.rank() < 6)
    throw PreconditionError("check_d2k_exception: component is not of type D_2k, k > 2");
  detail::TwistCache cache(g);
  return detail::d2k_exception(cache, x, y, yp);
}

inline bool check_d2k_exception(const CoxeterGraph& g, VertexSet x, VertexSet y,
                                const TypedComponent& yp) {
  return find_d2k_exception(g, x, y, yp).has_value();
}

// Obstruction site for a D_4 component Y' of Gamma_Y, Y in X.
inline std::optional<DExceptionSite> find_d4_exception(const CoxeterGraph& g, VertexSet x,
                                                       VertexSet y,
                                                       const TypedComponent& yp) {
  detail::require_d_component(g, x, y, yp, "check_d4_exception");
  if (yp.type != IrreducibleType::D(4))
    throw PreconditionError("check_d4_exception: component is not of type D_4");
  detail::TwistCache cache(g);
  return detail::d4_exception(cache, x, y, yp);
}

inline bool check_d4_exception(const CoxeterGraph& g, VertexSet x, VertexSet y,
                               const TypedComponent& yp) {
  return find_d4_exception(g, x, y, yp).has_value();
}

// VERDICTS

enum class WitnessKind { Permutation, D2kException, D4Exception };

inline const char* to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::Permutation: return "permutation";
    case WitnessKind::D2kException: return "d2k_exception";
    case WitnessKind::D4Exception: return "d4_exception";
  }
  return "?";
}

struct StabilityWitness {
  WitnessKind kind = WitnessKind::Permutation;
  VertexSet subset;  // X_1 (permutation) or T (D exceptions)
  // Permutation: the externally reached tuple and the word reaching it
  // from the components of X_1.
  ComponentTuple tuple;
  ConjugatorWord word;
  std::optional<DExceptionSite> site;
};

struct StabilityVerdict {
  enum class Kind { Stable, NotStable, Inapplicable };

  Kind kind = Kind::Stable;
  std::optional<StabilityWitness> witness;
  std::string reason;  // Inapplicable only

  bool stable() const { return kind == Kind::Stable; }
  bool not_stable() const { return kind == Kind::NotStable; }
};

struct StabilityOptions {
  // Subsets of X are enumerated exhaustively; larger X is refused.
  int max_subset_size = 16;
};

inline StabilityVerdict decide_stability(const CoxeterGraph& g, VertexSet x,
                                         const StabilityOptions& options = {}) {
  detail::require_subset(g, x, "decide_stability");
  if (x.size() > options.max_subset_size)
    throw ResourceLimitExceeded("decide_stability: |X| = " + std::to_string(x.size()) +
                                " exceeds the subset-size cap of " +
                                std::to_string(options.max_subset_size));
  detail::TwistCache cache(g);
  // Largest subsets first, so X itself is examined before its parts.
  std::vector<VertexSet> subsets = nonempty_subsets(x);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](VertexSet a, VertexSet b) { return a.size() > b.size(); });
  auto not_stable = [](StabilityWitness w) {
    return StabilityVerdict{StabilityVerdict::Kind::NotStable, std::move(w), {}};
  };

  // D_2k, k > 2.
  for (VertexSet t : subsets) {
    for (VertexSet c : components(g, t)) {
      const auto& type = cache.type_of(c);
      if (!type || !type->type.is(Series::D) || type->rank() % 2 != 0 || type->rank() < 6)
        continue;
      if (auto site = detail::d2k_exception(cache, x, t, *type))
        return not_stable({WitnessKind::D2kException, t, {}, {}, std::move(site)});
    }
  }
  // D_4.
  for (VertexSet t : subsets) {
    for (VertexSet c : components(g, t)) {
      const auto& type = cache.type_of(c);
      if (!type || type->type != IrreducibleType::D(4)) continue;
      if (auto site = detail::d4_exception(cache, x, t, *type))
        return not_stable({WitnessKind::D4Exception, t, {}, {}, std::move(site)});
    }
  }
  // Component permutations.
  for (VertexSet x1 : subsets) {
    const TupleOrbit internal = detail::tuple_search(
        cache, x1, [x](int t) { return x.contains(t); }, [](const auto&) { return false; });
    std::optional<StabilityWitness> found;
    detail::tuple_search(
        cache, x1, [](int) { return true; },
        [&](const TupleOrbit::Entry& e) {
          if (e.tuple.union_set().subset_of(x) && !internal.contains(e.tuple)) {
            found = StabilityWitness{WitnessKind::Permutation, x1, e.tuple, e.word, {}};
            return true;
          }
          return false;
        });
    if (found) return not_stable(std::move(*found));
  }
  return {};
}

// APPLICABILITY

enum class Mode { Auto, Force };

struct StabilityReport {
  StabilityVerdict verdict;
  // "stability", or "quasi_stability" for FC-type groups outside the
  // fully covered families.
  std::string semantics = "stability";
  // The verdict also answers full conjugacy stability.
  bool full_stability = true;
  bool hypotheses_verified = true;
  GroupFamilyReport family;
};

inline StabilityReport decide_with_applicability(const CoxeterGraph& g, VertexSet x,
                                                 Mode mode = Mode::Auto,
                                                 const StabilityOptions& options = {}) {
  StabilityReport report;
  report.family = classify_group(g);
  switch (report.family.applicability) {
    case Applicability::FullStability:
      report.verdict = decide_stability(g, x, options);
      break;
    case Applicability::QuasiStability:
      report.semantics = "quasi_stability";
      report.full_stability = is_spherical(g, x);
      report.verdict = decide_stability(g, x, options);
      break;
    case Applicability::Unknown:
      report.hypotheses_verified = false;
      if (mode == Mode::Auto) {
        report.full_stability = false;
        report.verdict = {StabilityVerdict::Kind::Inapplicable, std::nullopt,
                          "hypotheses unknown for this family"};
      } else {
        report.verdict = decide_stability(g, x, options);
      }
      break;
  }
  return report;
}

// JSON

inline nlohmann::json to_json(const CoxeterGraph& g, const ComponentTuple& t) {
  nlohmann::json out = nlohmann::json::array();
  for (VertexSet p : t.parts) out.push_back(names_of(g, p));
  return out;
}

inline nlohmann::json to_json(const CoxeterGraph& g, const StabilityWitness& w) {
  nlohmann::json out = {{"kind", to_string(w.kind)}, {"subset", names_of(g, w.subset)}};
  if (w.kind == WitnessKind::Permutation) {
    out["initial"] = to_json(g, initial_tuple(g, w.subset));
    out["tuple"] = to_json(g, w.tuple);
    out["word"] = to_json(g, w.word);
  } else if (w.site) {
    out["component"] = to_json(g, w.site->component);
    out["site"] = g.name(w.site->site);
    out["external"] = g.name(w.site->external);
  }
  return out;
}

inline const char* to_string(StabilityVerdict::Kind k) {
  switch (k) {
    case StabilityVerdict::Kind::Stable: return "stable";
    case StabilityVerdict::Kind::NotStable: return "not_stable";
    case StabilityVerdict::Kind::Inapplicable: return "inapplicable";
  }
  return "?";
}

inline nlohmann::json to_json(const CoxeterGraph& g, const StabilityReport& r) {
  nlohmann::json out = {
      {"verdict", to_string(r.verdict.kind)},
      {"semantics", r.semantics},
      {"full_stability", r.full_stability},
      {"hypotheses_verified", r.hypotheses_verified},
      {"witness", r.verdict.witness ? to_json(g, *r.verdict.witness) : nlohmann::json(nullptr)},
      {"family", to_json(g, r.family)}};
  if (r.verdict.kind == StabilityVerdict::Kind::Inapplicable) out["reason"] = r.verdict.reason;
  return out;
}

}  // namespace artinstab

#endif  // ARTINSTAB_STABILITY_HPP_
