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

/// Left actions of a category G on a category H along an object map
/// phi: H-objects -> G-objects.
///
/// The action is an explicit table alpha(g, h) defined exactly on the domain
///   { (g, h) : s(g) = phi(t(h)) = phi(s(h)) }
/// and must satisfy, for composable g'g and h'h and units u in the domain:
///   (0)   s(a_g(u)) = t(a_g(u))
///   (I)   s(a_g(s(h))) = s(a_g(h))
///   (II)  t(a_g(t(h))) = t(a_g(h))
///   (III) phi(s(a_g(u))) = t(g)
///   (IV)  a_{phi(t(h))}(h) = h
///   (V)   a_{g'}(a_g(h)) = a_{g'g}(h)
///   (VI)  a_g(h'h) = a_g(h') a_g(h)
/// When G is a groupoid, (0)-(III) may be replaced by
///   (I')  a_g(s(h)) = s(a_g(h))
///   (II') a_g(t(h)) = t(a_g(h))
///   (III') phi(a_g(u)) = t(g).
#pragma once

#include <utility>

#include "smallcat/core.hpp"

namespace smallcat {

struct RawAction {
  FiniteCategory acting;    // G
  FiniteCategory acted_on;  // H
  IndexMap phi;             // H-object -> G-object
  Table table;              // |G| x |H|, kUndefined off the domain
};

class LeftAction;
Checked<LeftAction> validate_action(RawAction raw);

class LeftAction {
 public:
  const FiniteCategory& acting() const { return raw_.acting; }
  const FiniteCategory& acted_on() const { return raw_.acted_on; }
  const IndexMap& phi() const { return raw_.phi; }
  ObjectId phi(ObjectId u) const { return raw_.phi[u]; }
  const Table& table() const { return raw_.table; }
  const RawAction& raw() const { return raw_; }

  bool in_domain(MorphismId g, MorphismId h) const { return raw_.table(g, h) != kUndefined; }
  /// alpha_g(h), or kUndefined off the domain.
  MorphismId apply(MorphismId g, MorphismId h) const { return raw_.table(g, h); }
  /// alpha_g on a unit u of H, as an object.
  ObjectId apply_to_object(MorphismId g, ObjectId u) const {
    return raw_.acted_on.source(raw_.table(g, raw_.acted_on.identity(u)));
  }

 private:
  explicit LeftAction(RawAction raw) : raw_(std::move(raw)) {}
  friend Checked<LeftAction> validate_action(RawAction raw);

  RawAction raw_;
};

/// domain(g, h) iff s(g) = phi(t(h)) = phi(s(h)). Works on raw tables so
/// parsers can use it before validation.
BoolTable domain_mask(const IndexMap& acting_source, const IndexMap& acted_source, const IndexMap& acted_target,
                      const IndexMap& phi);
BoolTable domain_mask(const FiniteCategory& acting, const FiniteCategory& acted_on, const IndexMap& phi);

std::vector<std::pair<MorphismId, MorphismId>> action_domain(const FiniteCategory& acting,
                                                             const FiniteCategory& acted_on, const IndexMap& phi);

/// Checks the table against the domain and axioms (0)-(VI), plus the
/// consequence phi(s(a_g(h))) = t(g) = phi(t(a_g(h))) that makes both sides
/// of (V) and (VI) composable. Each violated law carries a witness tuple.
Checked<LeftAction> validate_action(RawAction raw);

/// Outcome of the groupoid-form axiom check.
struct GroupoidFormReport {
  std::vector<Violation> violations;
  /// unit_action(g, u) = object of a_g(u), kUndefined off the domain. Only
  /// filled when the check passes.
  Table unit_action;
  bool ok() const { return violations.empty(); }
};

/// Checks (I')-(III') with (IV)-(VI). G must be a groupoid
/// (PreconditionError otherwise). Agrees with validate_action on every
/// table.
GroupoidFormReport validate_action_groupoid_form(const RawAction& raw);

/// The identity-on-tables action of G on opposite(H) with the same phi.
LeftAction opposite_action(const LeftAction& a);

/// The trivial action of a unit-only G on H: every table entry is h itself.
/// Useful for degenerate-product checks; phi is arbitrary.
LeftAction unit_action(const FiniteCategory& units_only, const FiniteCategory& acted_on, const IndexMap& phi);

}  // namespace smallcat
