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

/// Finite small categories and groupoids.
///
/// A category is a set of morphisms 0..m-1 over objects 0..n-1. Objects are
/// identified with their identity morphisms. Composition follows the
/// convention `compose(h, h') = hh'`, defined exactly when
/// `source(h) == target(h')`, so `h'` is applied first.
#pragma once

#include <span>

#include "smallcat/types.hpp"

namespace smallcat {

/// Unvalidated category tables, as read from a file or built by a
/// construction.
struct RawCategory {
  Index n_objects = 0;
  IndexMap source;
  IndexMap target;
  IndexMap identity;
  Table compose;

  Index n_morphisms() const { return static_cast<Index>(source.size()); }
};

bool operator==(const RawCategory& a, const RawCategory& b);

class FiniteCategory;
Checked<FiniteCategory> validate_category(RawCategory raw);

/// A category whose tables satisfy every category law. Only
/// validate_category produces one.
class FiniteCategory {
 public:
  Index n_objects() const { return raw_.n_objects; }
  Index n_morphisms() const { return raw_.n_morphisms(); }

  ObjectId source(MorphismId h) const { return raw_.source[h]; }
  ObjectId target(MorphismId h) const { return raw_.target[h]; }
  MorphismId identity(ObjectId u) const { return raw_.identity[u]; }
  bool composable(MorphismId h, MorphismId hp) const { return source(h) == target(hp); }
  /// hh', or kUndefined when source(h) != target(h').
  MorphismId compose(MorphismId h, MorphismId hp) const { return raw_.compose(h, hp); }
  bool is_identity(MorphismId h) const { return identity(source(h)) == h; }
  bool is_endomorphism(MorphismId h) const { return source(h) == target(h); }

  const RawCategory& raw() const { return raw_; }
  const Table& table() const { return raw_.compose; }

  friend bool operator==(const FiniteCategory& a, const FiniteCategory& b) { return a.raw_ == b.raw_; }

 private:
  explicit FiniteCategory(RawCategory raw) : raw_(std::move(raw)) {}
  friend Checked<FiniteCategory> validate_category(RawCategory raw);

  RawCategory raw_;
};

/// Checks every category law and reports each violated one with a concrete
/// counterexample. Size mismatches are reported under the "shape" laws.
Checked<FiniteCategory> validate_category(RawCategory raw);

/// A category together with its (unique) inverse map.
class Groupoid {
 public:
  const FiniteCategory& category() const { return category_; }
  MorphismId inverse(MorphismId h) const { return inverse_[h]; }
  const IndexMap& inverses() const { return inverse_; }

  friend bool operator==(const Groupoid& a, const Groupoid& b) {
    return a.category_ == b.category_ && a.inverse_ == b.inverse_;
  }

 private:
  Groupoid(FiniteCategory c, IndexMap inv) : category_(std::move(c)), inverse_(std::move(inv)) {}
  friend Checked<Groupoid> is_groupoid(const FiniteCategory& c);

  FiniteCategory category_;
  IndexMap inverse_;
};

/// Succeeds iff every morphism has a two-sided inverse; otherwise the
/// violation names a morphism without one.
Checked<Groupoid> is_groupoid(const FiniteCategory& c);

inline MorphismId invert(const Groupoid& g, MorphismId h) { return g.inverse(h); }

/// Morphisms with target x and source y (the hom-set written _xC_y).
std::vector<MorphismId> hom_set(const FiniteCategory& c, ObjectId x, ObjectId y);

/// Same carrier with source and target swapped and composition reversed.
FiniteCategory opposite(const FiniteCategory& c);

/// Category with n objects and only identity morphisms.
FiniteCategory discrete_category(Index n);

/// Objects and morphisms of `b` are shifted past those of `a`.
FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b);

/// A partition of 0..n-1 in canonical form: classes are sorted internally
/// and ordered by least element.
class Partition {
 public:
  Partition() = default;
  /// Points with equal labels share a class.
  static Partition from_labels(const IndexMap& labels);
  static Checked<Partition> from_classes(Index n_points, std::vector<IndexMap> classes);
  static Partition discrete(Index n);

  Index n_points() const { return static_cast<Index>(class_of_.size()); }
  Index n_classes() const { return static_cast<Index>(classes_.size()); }
  Index class_of(Index p) const { return class_of_[p]; }
  const IndexMap& class_map() const { return class_of_; }
  const std::vector<IndexMap>& classes() const { return classes_; }
  bool same_class(Index a, Index b) const { return class_of_[a] == class_of_[b]; }

  friend bool operator==(const Partition& a, const Partition& b) { return a.classes_ == b.classes_; }

 private:
  IndexMap class_of_;
  std::vector<IndexMap> classes_;
};

/// The hom-nonemptiness relation and its equivalence closure. For a
/// groupoid the raw relation is already an equivalence relation.
struct Reachability {
  BoolTable relation;  // relation(x, y) iff hom_set(x, y) is nonempty
  bool symmetric = true;
  Partition classes;
};

Reachability reachability_classes(const FiniteCategory& c);

/// A subcategory re-indexed densely, with translations back to the parent.
struct Subcategory {
  FiniteCategory category;
  IndexMap object_to_parent;
  IndexMap morphism_to_parent;
  IndexMap morphism_from_parent;  // kUndefined for morphisms left out
};

/// Subcategory on the given objects and morphisms. Throws LawViolation when
/// the selection is not closed (composition, identities, endpoints).
Subcategory subcategory(const FiniteCategory& c, std::span<const ObjectId> objects,
                        std::span<const MorphismId> morphisms);

/// All morphisms with both endpoints in `objects`.
Subcategory full_subcategory(const FiniteCategory& c, std::span<const ObjectId> objects);

/// A pair of maps (objects, morphisms). As an isomorphism certificate both
/// maps are bijections commuting with source, target, identity, composition.
struct IsoWitness {
  IndexMap object_map;
  IndexMap morphism_map;

  friend bool operator==(const IsoWitness&, const IsoWitness&) = default;
};

/// Violations of functoriality for the given maps from `from` to `to`.
std::vector<Violation> check_functor(const FiniteCategory& from, const FiniteCategory& to,
                                     const IndexMap& object_map, const IndexMap& morphism_map);

/// Functoriality plus bijectivity of both maps.
std::vector<Violation> check_iso_witness(const FiniteCategory& from, const FiniteCategory& to,
                                         const IsoWitness& w);

IsoWitness inverse(const IsoWitness& w);
/// `second` after `first`.
IsoWitness compose(const IsoWitness& second, const IsoWitness& first);
IsoWitness identity_witness(const FiniteCategory& c);

/// Moves `c` along the bijections in `relabel`: object u becomes
/// relabel.object_map[u], morphism h becomes relabel.morphism_map[h].
FiniteCategory transport(const FiniteCategory& c, const IsoWitness& relabel);

}  // namespace smallcat
