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

#ifndef ARTINSTAB_TESTS_SUPPORT_FIXTURES_HPP_
#define ARTINSTAB_TESTS_SUPPORT_FIXTURES_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "artinstab/artinstab.hpp"

#ifndef ARTINSTAB_SAMPLES_DIR
#error "ARTINSTAB_SAMPLES_DIR must point at samples/graphs"
#endif

namespace artinstab::testing {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline CoxeterGraph sample(const std::string& name) {
  return parse_graph(read_file(std::string(ARTINSTAB_SAMPLES_DIR) + "/" + name + ".json"));
}

inline std::vector<std::string> sample_names() {
  return {"a3",           "c_tilde_2",   "d4_rescued",      "d5",
          "d6",           "d7",          "e7",              "fc_path_inf",
          "fc_square_inf", "free_a2_a1", "i2_5",            "triangle333",
          "triangle333_times_z"};
}

// a-b-c with labels 3, 3.
inline CoxeterGraph a3() {
  return CoxeterGraph({"a", "b", "c"}, {{"a", "b", Label::finite(3)}, {"b", "c", Label::finite(3)}});
}

inline CoxeterGraph pair_graph(Label m) { return CoxeterGraph({"a", "b"}, {{"a", "b", m}}); }

inline VertexSet set(const CoxeterGraph& g, const std::string& names) {
  return parse_subset(g, names);
}

inline ComponentTuple tuple(const CoxeterGraph& g, const std::vector<std::string>& parts) {
  ComponentTuple t;
  for (const auto& p : parts) t.parts.push_back(parse_subset(g, p));
  return t;
}

inline ConjugatorWord word(const CoxeterGraph& g,
                           const std::vector<std::pair<std::string, int>>& factors) {
  ConjugatorWord w;
  for (const auto& [s, sign] : factors) w.factors.push_back({parse_subset(g, s), sign});
  return w;
}

}  // namespace artinstab::testing

#endif  // ARTINSTAB_TESTS_SUPPORT_FIXTURES_HPP_
