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

/// Group bundles over equivalence classes and the correspondence between
/// bundles and groupoids.
///
/// A bundle assigns a group G_c to every class c of a partition of X. Its
/// standard groupoid has morphisms (x, g, y) with x, y in a common class c
/// and g in G_c; target x, source y, and (x,g,y)(y,h,z) = (x,gh,z).
/// Every groupoid is isomorphic to one of these: bundle_from_groupoid picks
/// a representative per class and a connector per object, and
/// standardization_iso builds the isomorphism
///   h  |->  (t(h), l_{t(h)} h l_{s(h)}^-1, s(h)).
#pragma once

#include "smallcat/group.hpp"

namespace smallcat {

class GroupBundle;
Checked<GroupBundle> validate_bundle(Partition partition, std::vector<FiniteGroup> fibers);

class GroupBundle {
 public:
  const Partition& partition() const { return partition_; }
  const std::vector<FiniteGroup>& fibers() const { return fibers_; }
  const FiniteGroup& fiber(Index cls) const { return fibers_[cls]; }
  /// Morphism count of the standard groupoid: sum over classes of |c|^2 |G_c|.
  Index standard_size() const;

 private:
  GroupBundle(Partition p, std::vector<FiniteGroup> f) : partition_(std::move(p)), fibers_(std::move(f)) {}
  friend Checked<GroupBundle> validate_bundle(Partition partition, std::vector<FiniteGroup> fibers);

  Partition partition_;
  std::vector<FiniteGroup> fibers_;
};

/// One fiber per class.
Checked<GroupBundle> validate_bundle(Partition partition, std::vector<FiniteGroup> fibers);

struct StandardMorphism {
  ObjectId x;
  Index g;
  ObjectId y;
  friend bool operator==(const StandardMorphism&, const StandardMorphism&) = default;
};

/// Standard groupoid of a bundle. Morphisms are ordered by (x, g, y).
struct StandardGroupoid {
  Groupoid groupoid;
  std::vector<StandardMorphism> triples;
  IndexMap offsets;   // first morphism with target x
  IndexMap position;  // position of each point within its class
  IndexMap class_size;  // size of the class of each point

  MorphismId index_of(const StandardMorphism& t) const {
    return offsets[t.x] + t.g * class_size[t.x] + position[t.y];
  }
};

StandardGroupoid standard_groupoid(const GroupBundle& bundle);

enum class ChoicePolicy {
  least_index,     // least object as representative, least morphism as connector
  greatest_index,  // greatest object and morphism
};

/// A groupoid decomposed into a bundle.
struct Decomposition {
  GroupBundle bundle;
  IndexMap representatives;            // per class
  IndexMap connectors;                 // per object x: l_x in hom_set(rep, x)
  std::vector<IndexMap> fiber_elements;  // per class: fiber element -> morphism
};

Decomposition bundle_from_groupoid(const Groupoid& g, ChoicePolicy policy = ChoicePolicy::least_index);

struct Standardization {
  StandardGroupoid standard;
  IsoWitness phi;  // from the input groupoid to standard.groupoid
};

/// Builds and verifies the isomorphism onto the standard groupoid of the
/// decomposition. Throws InternalError if verification fails.
Standardization standardization_iso(const Groupoid& g, const Decomposition& d);

}  // namespace smallcat
