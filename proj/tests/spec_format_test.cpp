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

#include "smallcat/spec_format.hpp"

#include <gtest/gtest.h>

#include "smallcat/constructions.hpp"
#include "support/generators.hpp"

namespace smallcat {
namespace {

using testing::Rng;

// Parses and expects a ParseError whose message contains `needle`.
ParseError parse_failure(const std::string& text, const std::string& needle) {
  try {
    parse_spec(text);
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    return e;
  }
  ADD_FAILURE() << "no parse error for:\n" << text;
  return ParseError(0, 0, "");
}

TEST(ParseSpec, MinimalTrivialGroup) {
  const SpecFile f = parse_spec("kind: group\nname: Z1\norder: 1\ntable:\n  0\n");
  ASSERT_EQ(f.documents.size(), 1u);
  EXPECT_EQ(f.documents[0].kind, DocKind::group);
  EXPECT_EQ(std::get<GroupDoc>(f.documents[0].payload).table.rows(), 1);
}

TEST(ParseSpec, CommentsAndBlankLinesAreIgnored) {
  const SpecFile f = parse_spec("# a group\n\nkind: group   # trailing\nname: Z1\norder: 1\ntable:\n  0\n\n");
  EXPECT_EQ(f.documents.size(), 1u);
}

TEST(ParseSpec, BundleClassWithUnknownPoint) {
  const std::string text =
      "kind: group\nname: Z1\norder: 1\ntable:\n  0\n---\n"
      "kind: bundle\nname: b\npoints: 2\nclass: 0 7\nfiber: Z1\n";
  const ParseError e = parse_failure(text, "class refers to unknown point 7");
  EXPECT_EQ(e.line(), 10);
}

TEST(ParseSpec, ActionMissingDomainPair) {
  const std::string text =
      "kind: group\nname: Z2\norder: 2\ntable:\n  0 1\n  1 0\n---\n"
      "kind: group\nname: Z3\norder: 3\ntable:\n  0 1 2\n  1 2 0\n  2 0 1\n---\n"
      "kind: action\nname: a\nacting: Z2\non: Z3\nphi: 0\ntable:\n  0 1 2\n  - 2 1\n";
  parse_failure(text, "action table misses domain pair (1, 0)");
}

TEST(ParseSpec, ActionEntryOffTheDomain) {
  // G = two points, H = one point over the second: row 0 is off the domain.
  const std::string text =
      "kind: category\nname: G\nobjects: 2\nmorphisms: 2\nsource: 0 1\ntarget: 0 1\nidentity: 0 1\ncompose:\n"
      "  0 -\n  - 1\n---\n"
      "kind: category\nname: H\nobjects: 1\nmorphisms: 1\nsource: 0\ntarget: 0\nidentity: 0\ncompose:\n  0\n---\n"
      "kind: action\nname: a\nacting: G\non: H\nphi: 1\ntable:\n  0\n  0\n";
  parse_failure(text, "outside the domain");
}

TEST(ParseSpec, SyntaxErrorsCarryPositions) {
  const ParseError e = parse_failure("kind: group\nname: Z1\norder: x\ntable:\n  0\n", "");
  EXPECT_EQ(e.line(), 3);
  EXPECT_EQ(e.column(), 8);
  parse_failure("kind: monoid\nname: m\n", "kind");
  parse_failure("kind: group\nname: Z1\norder: 1\ntable:\n  0\nextra: 3\n", "extra");
  parse_failure("kind: group\nname: Z1\norder: 2\ntable:\n  0 1\n", "");
}

TEST(ParseSpec, OutOfRangeAndDuplicates) {
  parse_failure("kind: category\nname: c\nobjects: 1\nmorphisms: 1\nsource: 3\ntarget: 0\nidentity: 0\ncompose:\n  0\n",
                "");
  parse_failure("kind: group\nname: Z1\norder: 1\ntable:\n  0\n---\nkind: group\nname: Z1\norder: 1\ntable:\n  0\n",
                "duplicate");
  parse_failure("kind: action\nname: a\nacting: nowhere\non: nowhere\nphi: 0\ntable:\n  0\n", "nowhere");
}

TEST(ParseSpec, ReferencesResolveAgainstContext) {
  const SpecFile first = parse_spec("kind: group\nname: Z2\norder: 2\ntable:\n  0 1\n  1 0\n");
  const SpecFile second =
      parse_spec("kind: group-action\nname: swap\ngroup: Z2\npoints: 2\ntable:\n  0 1\n  1 0\n", first);
  EXPECT_EQ(second.documents.size(), 1u);
  EXPECT_THROW(parse_spec("kind: group\nname: Z2\norder: 1\ntable:\n  0\n", first), ParseError);
}

TEST(ParseSpec, GroupDocumentStandsInForACategory) {
  const SpecFile f = parse_spec(
      "kind: group\nname: Z2\norder: 2\ntable:\n  0 1\n  1 0\n---\n"
      "kind: action\nname: a\nacting: Z2\non: Z2\nphi: 0\ntable:\n  0 1\n  1 0\n");
  EXPECT_EQ(std::get<ActionDoc>(f.documents[1].payload).acting, "Z2");
}

// Documents of every kind built from random structures.
SpecFile random_file(Rng& rng) {
  SpecFile f;
  const FiniteGroup g1 = testing::random_group(rng, 4), g2 = testing::random_group(rng, 4);
  f.documents.push_back(group_document("g1", g1.table()));
  f.documents.push_back(group_document("g2", g2.table()));

  const Groupoid gd = testing::random_groupoid(rng, 20);
  f.documents.push_back(category_document("gd", gd.category(), true));
  const FiniteCategory poset = testing::random_poset_category(rng, 3);
  f.documents.push_back(category_document("poset", poset, false));

  const Index n = testing::uniform(rng, 1, 5);
  const Partition p = testing::random_partition(rng, n);
  BundleDoc b{n, p.classes(), {}};
  for (Index c = 0; c < p.n_classes(); ++c) b.fibers.push_back(testing::coin(rng) ? "g1" : "g2");
  f.documents.push_back({DocKind::bundle, "b.1", b});

  const testing::ActionCase ac = testing::random_groupoid_action(rng);
  f.documents.push_back(category_document("G-act", ac.action.acting(), true));
  f.documents.push_back(category_document("H_act", ac.action.acted_on(), false));
  f.documents.push_back(
      {DocKind::action, "alpha", ActionDoc{"G-act", "H_act", ac.action.phi(), ac.action.table()}});

  const Table set_action = testing::random_set_action(rng, g1, 5, true);
  f.documents.push_back({DocKind::group_action, "beta",
                         GroupActionDoc{"g1", static_cast<Index>(set_action.cols()), set_action}});

  const IsoWitness w = testing::random_relabel(rng, gd.category().n_objects(), gd.category().n_morphisms());
  f.documents.push_back(category_document("gd2", transport(gd.category(), w), true));
  f.documents.push_back(witness_document("gd.to.gd2", "gd", "gd2", w));
  return f;
}

TEST(RoundTrip, ParseOfEmitIsIdentity) {
  Rng rng(101);
  for (int trial = 0; trial < 100; ++trial) {
    const SpecFile f = random_file(rng);
    const std::string text = emit(f);
    const SpecFile back = parse_spec(text);
    ASSERT_EQ(back, f) << text;
    EXPECT_EQ(emit(back), text);
  }
}

TEST(RoundTrip, EmptyGroupActionAndEmptyCategory) {
  SpecFile f;
  f.documents.push_back(group_document("Z1", trivial_group().table()));
  f.documents.push_back({DocKind::group_action, "none", GroupActionDoc{"Z1", 0, Table(1, 0)}});
  f.documents.push_back(category_document("empty", discrete_category(0), true));
  EXPECT_EQ(parse_spec(emit(f)), f);
}

TEST(Emit, UsesDashForUndefined) {
  const std::string text = emit(category_document("d", discrete_category(2), true));
  EXPECT_NE(text.find("  0 -\n  - 1\n"), std::string::npos) << text;
  EXPECT_NE(text.find("kind: groupoid\n"), std::string::npos);
}

}  // namespace
}  // namespace smallcat
