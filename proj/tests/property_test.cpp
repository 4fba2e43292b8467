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

#include "support/properties.hpp"

namespace artinstab::testing {
namespace {

// Smaller runs with seeds distinct from the acceptance sweep.
constexpr int kCases = 1500;

void expect_ok(const PropertyResult& r) {
  EXPECT_EQ(r.violations, 0) << r.name << ": " << r.first_failure;
}

TEST(Property, OrbitWitnessValidity) { expect_ok(orbit_witness_validity(1, kCases)); }
TEST(Property, OrbitMatchesReference) { expect_ok(orbit_matches_reference(2, kCases)); }
TEST(Property, OrbitSymmetry) { expect_ok(orbit_symmetry(3, kCases)); }
TEST(Property, TwistInvolution) { expect_ok(twist_involution(4, kCases)); }
TEST(Property, TupleInvariants) { expect_ok(tuple_invariants(5, kCases)); }
TEST(Property, RenamingInvariance) { expect_ok(renaming_invariance(6, kCases)); }
TEST(Property, JsonDeterminism) { expect_ok(json_determinism(7, kCases)); }

}  // namespace
}  // namespace artinstab::testing
