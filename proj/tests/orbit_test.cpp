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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "artinstab/catalog.hpp"
#include "artinstab/orbit.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/reference_orbit.hpp"

namespace artinstab {
namespace {

using testing::a3;
using testing::sample;
using testing::set;

std::set<VertexSet> keys(const OrbitTable& t) {
  std::set<VertexSet> out;
  for (const auto& e : t.entries()) out.insert(e.subset);
  return out;
}

TEST(Orbit, A3Singleton) {
  auto g = a3();
  auto t = orbit(g, set(g, "a"));
  EXPECT_EQ(keys(t), (std::set{set(g, "a"), set(g, "b"), set(g, "c")}));
  EXPECT_EQ(t.entries().front().subset, set(g, "a"));
  EXPECT_TRUE(t.entries().front().word.empty());
  EXPECT_EQ(*t.find(set(g, "b")), testing::word(g, {{"a,b", 1}}));
}

TEST(Orbit, WholeGeneratingSetIsAlone) {
  auto g = a3();
  EXPECT_EQ(keys(orbit(g, g.all())), (std::set{g.all()}));
}

TEST(Orbit, E7ContainsTarget) {
  auto g = sample("e7");
  EXPECT_TRUE(orbit(g, set(g, "s1,s2,s3,s4,s6")).contains(set(g, "s2,s4,s5,s6,s7")));
}

TEST(Conjugator, E7Word) {
  auto g = sample("e7");
  auto w = conjugator(g, set(g, "s1,s2,s3,s4,s6"), set(g, "s2,s4,s5,s6,s7"));
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, testing::word(g, {{"s1,s2,s3,s4,s5,s6", 1}, {"s1,s4,s5,s6,s7", 1}}));
}

TEST(Conjugator, SelfIsEmptyWord) {
  auto g = sample("e7");
  auto w = conjugator(g, set(g, "s1,s3"), set(g, "s1,s3"));
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->empty());
}

TEST(Conjugator, DEvenAndDOdd) {
  auto d6 = sample("d6");
  EXPECT_FALSE(conjugator(d6, d6.all() - set(d6, "s2"), d6.all() - set(d6, "s1")));
  auto d5 = sample("d5");
  auto w = conjugator(d5, d5.all() - set(d5, "s2"), d5.all() - set(d5, "s1"));
  ASSERT_TRUE(w);
  EXPECT_EQ(apply_word(d5, d5.all() - set(d5, "s2"), *w), d5.all() - set(d5, "s1"));
}

TEST(Conjugator, DifferentSizesAreNotConjugate) {
  auto g = a3();
  EXPECT_FALSE(conjugator(g, set(g, "a"), set(g, "a,b")));
}

TEST(Orbit, WordsValidateAndAreBreadthFirst) {
  auto g = sample("e7");
  auto t = orbit(g, set(g, "s1,s2"));
  std::size_t last = 0;
  for (const auto& e : t.entries()) {
    EXPECT_EQ(apply_word(g, set(g, "s1,s2"), e.word), e.subset);
    EXPECT_GE(e.word.size(), last);
    last = e.word.size();
  }
}

TEST(Orbit, MatchesReferenceOnCatalogTypes) {
  for (const auto& t : testing::catalog_types(8)) {
    if (t.is(Series::H)) continue;
    auto g = catalog::graph_of(t);
    for (VertexSet x : nonempty_subsets(g.all())) {
      if (x.size() > 4) continue;
      ASSERT_EQ(keys(orbit(g, x)), testing::reference_orbit(g, x))
          << t.to_string() << " " << format_set(g, x);
    }
  }
}

TEST(Orbit, MatchesSymmetricGroupOnPaths) {
  for (int n = 2; n <= 6; ++n) {
    auto g = catalog::graph_of(IrreducibleType::A(n));
    for (VertexSet x : nonempty_subsets(g.all())) {
      const OrbitTable table = orbit(g, x);
      for (const auto& e : table.entries()) {
        std::vector<VertexSet> fs;
        for (const auto& f : e.word.factors) fs.push_back(f.subset);
        EXPECT_EQ(testing::conjugate_in_symmetric_group(n, x, fs), e.subset);
      }
    }
  }
}

TEST(OrbitJson, Shape) {
  auto g = a3();
  EXPECT_EQ(to_json(g, orbit(g, set(g, "a"))).dump(),
            R"([{"subset":["a"],"word":[]},{"subset":["b"],"word":[{"delta_of":["a","b"],"sign":1}]},)"
            R"({"subset":["c"],"word":[{"delta_of":["a","b"],"sign":1},{"delta_of":["b","c"],"sign":1}]}])");
}

}  // namespace
}  // namespace artinstab
