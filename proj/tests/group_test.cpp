// Copyright 2026 The smallcat Authors
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

#include "smallcat/group.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace smallcat {
namespace {

using testing::Rng;

TEST(ValidateGroup, TrivialGroup) {
  auto g = validate_group(Table::Constant(1, 1, 0));
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g.value().order(), 1);
  EXPECT_EQ(g.value().inverse(0), 0);
}

TEST(ValidateGroup, Z3InverseOfOneIsTwo) {
  Table t(3, 3);
  t << 0, 1, 2, 1, 2, 0, 2, 0, 1;
  // Exhaustive associativity check, independent of the validator.
  for (Index a = 0; a < 3; ++a)
    for (Index b = 0; b < 3; ++b)
      for (Index c = 0; c < 3; ++c) ASSERT_EQ(t(t(a, b), c), t(a, t(b, c)));
  auto g = validate_group(t);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g.value().inverse(1), 2);
}

TEST(ValidateGroup, AbsorbingElementHasNoInverse) {
  // e = 0, z = 1: zz = z, ze = z, ez = z, ee = e.
  Table t(2, 2);
  t << 0, 1, 1, 1;
  auto g = validate_group(t);
  ASSERT_FALSE(g.ok());
  const auto& vs = g.violations();
  auto it = std::find_if(vs.begin(), vs.end(), [](const Violation& v) { return v.law == "every element has an inverse"; });
  ASSERT_NE(it, vs.end());
  EXPECT_EQ(it->witness, (std::vector<Index>{1}));
}

TEST(ValidateGroup, NonAssociativeTripleIsWitnessed) {
  // Latin square with unit 0 that is not associative (order 5 loop).
  Table t(5, 5);
  t << 0, 1, 2, 3, 4,  //
      1, 0, 3, 4, 2,   //
      2, 4, 0, 1, 3,   //
      3, 2, 4, 0, 1,   //
      4, 3, 1, 2, 0;
  auto g = validate_group(t);
  ASSERT_FALSE(g.ok());
  const auto& vs = g.violations();
  auto it = std::find_if(vs.begin(), vs.end(), [](const Violation& v) { return v.law == "associativity (ab)c = a(bc)"; });
  ASSERT_NE(it, vs.end());
  const Index a = it->witness[0], b = it->witness[1], c = it->witness[2];
  EXPECT_NE(t(t(a, b), c), t(a, t(b, c)));
}

TEST(ValidateGroup, RejectsOutOfRangeAndNonSquare) {
  Table t(2, 2);
  t << 0, 1, 1, 2;
  EXPECT_FALSE(validate_group(t).ok());
  EXPECT_FALSE(validate_group(Table::Constant(2, 3, 0)).ok());
}

TEST(Catalog, SymmetricGroupMatchesPermutationOracle) {
  const FiniteGroup s3 = symmetric_group(3);
  EXPECT_EQ(s3.order(), 6);
  EXPECT_FALSE(s3.is_abelian());
  const auto oracle = validate_group(oracle::s3_by_permutations());
  ASSERT_TRUE(oracle.ok());
  EXPECT_TRUE(oracle::groups_isomorphic_by_enumeration(s3.table(), oracle.value().table()));
}

TEST(Catalog, ElementOrders) {
  const FiniteGroup z6 = cyclic_group(6);
  EXPECT_EQ(z6.element_order(0), 1);
  EXPECT_EQ(z6.element_order(1), 6);
  EXPECT_EQ(z6.element_order(2), 3);
  EXPECT_EQ(z6.element_order(3), 2);
}

TEST(Catalog, DirectProductIndexing) {
  const FiniteGroup p = direct_product(cyclic_group(2), cyclic_group(3));
  EXPECT_EQ(p.order(), 6);
  // (1,2)(1,2) = (0,1)
  EXPECT_EQ(p.multiply(1 * 3 + 2, 1 * 3 + 2), 0 * 3 + 1);
  EXPECT_TRUE(group_isomorphic(p, cyclic_group(6)).has_value());
}

TEST(GroupIsomorphic, Z2WithItselfGivesIdentity) {
  auto w = group_isomorphic(cyclic_group(2), cyclic_group(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (IndexMap{0, 1}));
}

TEST(GroupIsomorphic, Z4AgainstKleinIsRefused) {
  const FiniteGroup z4 = cyclic_group(4), v = direct_product(cyclic_group(2), cyclic_group(2));
  EXPECT_FALSE(oracle::groups_isomorphic_by_enumeration(z4.table(), v.table()));
  EXPECT_FALSE(group_isomorphic(z4, v).has_value());
}

TEST(GroupIsomorphic, S3AgainstZ6IsRefused) {
  EXPECT_NE(symmetric_group(3).is_abelian(), cyclic_group(6).is_abelian());
  EXPECT_FALSE(group_isomorphic(symmetric_group(3), cyclic_group(6)).has_value());
}

TEST(GroupIsomorphic, AgreesWithEnumerationOnCatalogPairs) {
  Rng rng(21);
  const auto& cat = testing::group_catalog();
  for (const auto& a : cat)
    for (const auto& b : cat) {
      const FiniteGroup bb = relabel_group(b.group, testing::random_permutation(rng, b.group.order()));
      const bool expected = oracle::groups_isomorphic_by_enumeration(a.group.table(), bb.table());
      auto w = group_isomorphic(a.group, bb);
      EXPECT_EQ(w.has_value(), expected) << a.name << " vs " << b.name;
      if (w) EXPECT_TRUE(is_group_isomorphism(a.group, bb, *w));
    }
}

TEST(Subgroups, IsotropyOfStandardPairIsTheFiber) {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Groupoid g = testing::random_groupoid(rng, 40);
    for (ObjectId x = 0; x < g.category().n_objects(); ++x) {
      const Subgroup iso = isotropy_group(g, x);
      EXPECT_EQ(iso.group.order(), static_cast<Index>(hom_set(g.category(), x, x).size()));
      EXPECT_TRUE(std::is_sorted(iso.elements.begin(), iso.elements.end()));
      for (Index a = 0; a < iso.group.order(); ++a)
        for (Index b = 0; b < iso.group.order(); ++b)
          EXPECT_EQ(iso.elements[iso.group.multiply(a, b)], g.category().compose(iso.elements[a], iso.elements[b]));
    }
  }
}

TEST(Subgroups, RejectsNonSubgroup) {
  EXPECT_THROW(subgroup(cyclic_group(4), {0, 1}), LawViolation);
  EXPECT_EQ(subgroup(cyclic_group(4), {0, 2}).group.order(), 2);
}

TEST(GroupAction, ValidatesAxioms) {
  const FiniteGroup z2 = cyclic_group(2);
  Table swap(2, 2);
  swap << 0, 1, 1, 0;
  EXPECT_TRUE(validate_group_action(z2, 2, swap).ok());
  Table bad(2, 2);
  bad << 1, 0, 0, 1;
  auto checked = validate_group_action(z2, 2, bad);
  ASSERT_FALSE(checked.ok());
  EXPECT_EQ(checked.violations()[0].law, "group action: e.x = x");
}

TEST(GroupAction, CosetActionsAreTransitive) {
  for (const auto& ng : testing::group_catalog())
    for (const IndexMap& k : testing::all_subgroups(ng.group)) {
      const Table t = testing::coset_action(ng.group, k);
      ASSERT_TRUE(validate_group_action(ng.group, static_cast<Index>(t.cols()), t).ok());
      EXPECT_EQ(t.cols() * static_cast<Index>(k.size()), ng.group.order());
      const IndexMap labels = oracle::orbit_labels(t);
      EXPECT_TRUE(std::all_of(labels.begin(), labels.end(), [](Index l) { return l == 0; }));
    }
}

}  // namespace
}  // namespace smallcat
