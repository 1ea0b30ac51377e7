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

/// Standard actions: conjugation of a groupoid on itself, group actions on
/// sets, and group actions on equivalence-relation groupoids.
#pragma once

#include "smallcat/bundle.hpp"
#include "smallcat/semidirect.hpp"

namespace smallcat {

/// Conjugation a_g(h) = g h g^-1 of a groupoid on itself (phi = id), the
/// homomorphism G x_a G -> G, (h, g) |-> hg, and its kernel.
struct InnerAction {
  LeftAction action;
  SemidirectCategory product;
  IndexMap to_groupoid;   // product morphism -> G morphism
  Subcategory kernel;     // morphisms sent to units, inside product.category
  Subcategory isotropy;   // {g : s(g) = t(g)} inside G
  IsoWitness kernel_iso;  // kernel.category -> isotropy.category, (g^-1, g) |-> g
};

/// Everything is verified; an InternalError means a bug.
InnerAction inner_action(const Groupoid& g);

/// The literal map (h, g) |-> h g^-1 into G where defined, kUndefined where
/// h and g^-1 are not composable.
IndexMap inner_quotient_literal(const InnerAction& inner, const Groupoid& g);

/// A group acting on a set, realised as an action of the one-object groupoid
/// on the discrete category of points, and its semi-direct product.
struct TransformationGroupoid {
  FiniteCategory points;
  Groupoid group;
  LeftAction action;
  SemidirectCategory product;
  Groupoid groupoid;  // the product, |points| * |group| morphisms
};

TransformationGroupoid transformation_groupoid(const GroupAction& action);

/// A group action on the groupoid of an equivalence relation; the relation
/// groupoid is the standard groupoid with trivial fibers.
struct RelationAction {
  StandardGroupoid relation;
  LeftAction action;
};

/// Refuses with a witness (g, u, v), u ~ v but g.u !~ g.v, when the action
/// does not respect the relation.
Checked<RelationAction> relation_action(const GroupAction& action, const Partition& relation);

}  // namespace smallcat
