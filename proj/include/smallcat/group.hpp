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

/// Finite groups given by multiplication tables, and group actions on
/// finite sets.
#pragma once

#include "smallcat/core.hpp"

namespace smallcat {

class FiniteGroup;
Checked<FiniteGroup> validate_group(Table table);

class FiniteGroup {
 public:
  Index order() const { return static_cast<Index>(table_.rows()); }
  Index multiply(Index a, Index b) const { return table_(a, b); }
  Index identity() const { return identity_; }
  Index inverse(Index a) const { return inverse_[a]; }
  const Table& table() const { return table_; }
  /// Smallest k >= 1 with a^k = e.
  Index element_order(Index a) const;
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return same_table(a.table_, b.table_); }

 private:
  FiniteGroup(Table t, Index e, IndexMap inv) : table_(std::move(t)), identity_(e), inverse_(std::move(inv)) {}
  friend Checked<FiniteGroup> validate_group(Table table);

  Table table_;
  Index identity_ = 0;
  IndexMap inverse_;
};

/// Checks closure, associativity, a two-sided unit and two-sided inverses.
Checked<FiniteGroup> validate_group(Table table);

FiniteGroup trivial_group();
/// Z_n with a*b = (a+b) mod n.
FiniteGroup cyclic_group(Index n);
/// Permutations of {0..n-1} in lexicographic order, (ab)(i) = a(b(i)).
FiniteGroup symmetric_group(Index n);
/// Element (a, b) has index a * |B| + b.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// Relabels elements: element a becomes relabel[a].
FiniteGroup relabel_group(const FiniteGroup& g, const IndexMap& relabel);

/// The group as a one-object groupoid; morphism indices equal element
/// indices.
Groupoid group_as_groupoid(const FiniteGroup& g);

/// A group carved out of a larger structure; elements[i] is the element
/// (or morphism) behind group element i, in ascending order.
struct Subgroup {
  FiniteGroup group;
  IndexMap elements;
};

/// The isotropy group hom_set(x, x) of a groupoid.
Subgroup isotropy_group(const Groupoid& g, ObjectId x);

/// Subgroup on the given element set, re-indexed in ascending order.
/// Throws LawViolation if the set is not a subgroup.
Subgroup subgroup(const FiniteGroup& g, IndexMap elements);

bool is_group_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const IndexMap& map);
bool is_group_isomorphism(const FiniteGroup& from, const FiniteGroup& to, const IndexMap& map);

/// Backtracking search for an isomorphism. Generators of `a` are mapped to
/// elements of equal order in `b`; each full assignment is extended and
/// checked. Groups with different element-order profiles are refused
/// without search.
std::optional<IndexMap> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

class GroupAction;
Checked<GroupAction> validate_group_action(const FiniteGroup& g, Index n_points, Table table);

/// A left action of a group on {0..n-1}; table(g, x) = g.x.
class GroupAction {
 public:
  const FiniteGroup& group() const { return group_; }
  Index n_points() const { return static_cast<Index>(table_.cols()); }
  Index apply(Index g, Index x) const { return table_(g, x); }
  const Table& table() const { return table_; }

 private:
  GroupAction(FiniteGroup g, Table t) : group_(std::move(g)), table_(std::move(t)) {}
  friend Checked<GroupAction> validate_group_action(const FiniteGroup& g, Index n_points, Table table);

  FiniteGroup group_;
  Table table_;
};

/// Checks e.x = x and g.(h.x) = (gh).x.
Checked<GroupAction> validate_group_action(const FiniteGroup& g, Index n_points, Table table);

}  // namespace smallcat
