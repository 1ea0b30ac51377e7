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

// Random structures for property tests. Every generator is deterministic in
// the Rng state.
#pragma once

#include <array>
#include <map>
#include <random>
#include <string>

#include "smallcat/bundle.hpp"
#include "smallcat/constructions.hpp"

namespace smallcat::testing {

using Rng = std::mt19937_64;

Index uniform(Rng& rng, Index lo, Index hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);
IndexMap random_permutation(Rng& rng, Index n);

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Z1..Z6, Z2xZ2 and S3.
const std::vector<NamedGroup>& group_catalog();

/// A catalog group of order <= max_order with its elements shuffled.
FiniteGroup random_group(Rng& rng, Index max_order = 6);

/// Monoid tables with identity 0, including non-group ones.
struct NamedMonoid {
  std::string name;
  Table table;
  bool is_group;
};
const std::vector<NamedMonoid>& monoid_catalog();

/// One-object category of a monoid table.
FiniteCategory monoid_category(const Table& m);

Partition random_partition(Rng& rng, Index n);
GroupBundle random_bundle(Rng& rng, Index max_points = 6, Index max_order = 6);
IsoWitness random_relabel(Rng& rng, Index n_objects, Index n_morphisms);

/// A standard groupoid with shuffled objects and morphisms.
Groupoid random_groupoid(Rng& rng, Index max_morphisms = 60);

/// Poset on n objects as a category (at most one morphism per hom-set).
FiniteCategory random_poset_category(Rng& rng, Index n);

/// Pairs (a, m, b) with a ~ b in `relation` and m in the monoid `m`;
/// s = b, t = a, (a, m, b)(b, m', c) = (a, mm', c).
struct RelationMonoid {
  FiniteCategory category;
  std::vector<std::array<Index, 3>> triples;
  std::map<std::array<Index, 3>, MorphismId> index;
};
RelationMonoid relation_monoid(const Partition& relation, const Table& m);

/// Left cosets of `subgroup` with g.(hK) = (gh)K.
Table coset_action(const FiniteGroup& g, const IndexMap& subgroup);
/// Every subgroup of g, as sorted element lists.
std::vector<IndexMap> all_subgroups(const FiniteGroup& g);
/// Disjoint union of random coset actions, at most max_points points,
/// points shuffled. May be empty when allow_empty is set.
Table random_set_action(Rng& rng, const FiniteGroup& g, Index max_points, bool allow_empty = false);
GroupAction random_group_action(Rng& rng, Index max_points = 6, Index max_order = 6);
/// Every action of g on {0..n-1} (every homomorphism into S_n).
std::vector<GroupAction> all_group_actions(const FiniteGroup& g, Index n);
/// Homomorphisms from g to Z2, as 0/1 element labels.
std::vector<IndexMap> homs_to_z2(const FiniteGroup& g);

/// A groupoid G (standard, shuffled) acting on a relation-monoid category
/// H over a G-set X: a_g(a, m, b) = (g.a, theta(g)(m), g.b). theta inverts
/// m along a Z2-valued homomorphism when the monoid is an abelian group.
struct ActionCase {
  LeftAction action;
  std::string description;
};
ActionCase random_groupoid_action(Rng& rng, bool h_groupoid_only = false);

/// A monoid (possibly not a group) acting on the discrete category of its
/// own elements by left multiplication.
LeftAction regular_monoid_action(const Table& m);

/// Changes one table entry of a valid action.
RawAction corrupt_one_entry(Rng& rng, const LeftAction& a);

}  // namespace smallcat::testing
