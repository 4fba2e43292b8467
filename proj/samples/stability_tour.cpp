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
// Builds E7 and A3 in code, finds a conjugator between two standard
// parabolic subgroups of E7 and decides stability of every subset of A3.

#include <iostream>

#include "artinstab/artinstab.hpp"

int main() {
  using namespace artinstab;

  const CoxeterGraph e7 = catalog::graph_of(IrreducibleType::E(7));
  const VertexSet x = parse_subset(e7, "s1,s2,s3,s4,s6");
  const VertexSet target = parse_subset(e7, "s2,s4,s5,s6,s7");
  if (auto w = conjugator(e7, x, target)) {
    std::cout << format_set(e7, x) << " -> " << format_set(e7, target) << " via "
              << format_word(e7, *w) << "\n";
  }

  const CoxeterGraph a3({"a", "b", "c"},
                        {{"a", "b", Label::finite(3)}, {"b", "c", Label::finite(3)}});
  for (VertexSet s : nonempty_subsets(a3.all())) {
    const StabilityVerdict v = decide_stability(a3, s);
    std::cout << format_set(a3, s) << ": " << to_string(v.kind);
    if (v.witness && v.witness->kind == WitnessKind::Permutation)
      std::cout << " (" << format_word(a3, v.witness->word) << ")";
    std::cout << "\n";
  }
}
