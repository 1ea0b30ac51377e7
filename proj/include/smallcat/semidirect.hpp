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

/// Semi-direct products built from a left action, and the maps between
/// them.
///
/// All products are categories on the objects of H. Pair morphisms are
/// indexed lexicographically by the pair, e.g. (h, g) for H x_a G.
#pragma once

#include "smallcat/action.hpp"

namespace smallcat {

/// A product category whose morphisms are pairs of morphisms.
struct SemidirectCategory {
  FiniteCategory category;
  std::vector<std::pair<MorphismId, MorphismId>> pairs;
  Table index;  // index(first, second), kUndefined outside the carrier

  MorphismId index_of(MorphismId first, MorphismId second) const { return index(first, second); }
};

/// H x_a G for a groupoid G: pairs (h, g) with t(g) = phi(s(h)) = phi(t(h)),
///   s(h, g) = a_{g^-1}(s(h)),  t(h, g) = t(h),
///   (h, g)(h', g') = (h a_g(h'), gg'),
/// and units u -> (u, phi(u)). Both forms of the composability condition,
/// a_{g^-1}(s(h)) = t(h') and s(a_{g^-1}(h)) = t(h'), are evaluated and
/// must agree. Throws PreconditionError if G is not a groupoid.
SemidirectCategory semidirect_groupoid(const LeftAction& a);

/// (a_{g^-1}(h^-1), g^-1) for every morphism of semidirect_groupoid(a).
/// Needs G and H to be groupoids.
IndexMap semidirect_inverse_formula(const LeftAction& a, const SemidirectCategory& product);

/// H x_a G when H and G share objects and phi is the identity: pairs (h, g)
/// with t(g) = s(h) = t(h), s(h, g) = s(g), t(h, g) = t(h), composable when
/// s(g) = t(h'). Throws LawViolation if the resulting table is not a
/// category (unit laws can fail when G is not a groupoid).
SemidirectCategory semidirect_shared_units(const LeftAction& a);

/// G x^phi H as a category: pairs (g, h) in the action domain,
///   s(g, h) = s(h),  t(g, h) = t(a_g(h)),
///   (g', h')(g, h) = (g'g, a_{g^-1}(h') h).
/// Needs G to be a groupoid.
SemidirectCategory gphi_category(const LeftAction& a);

enum class PsiVariant {
  category,  // opposite(H) x G -> G x^phi H, (h, g) |-> (g^-1, h)
  groupoid,  // H x G -> G x^phi H, (h, g) |-> (g^-1, h^-1)
};

/// The map Psi between the pair products. Psi reverses composition order:
/// Psi(xy) = Psi(y)Psi(x) and it swaps sources with targets. It is therefore
/// certified as an isomorphism onto opposite(G x^phi H). For the groupoid
/// variant `covariant` composes Psi with inversion, giving an isomorphism
/// onto G x^phi H itself.
struct PsiIsomorphism {
  SemidirectCategory source;
  SemidirectCategory gphi;
  FiniteCategory codomain;  // opposite(gphi.category)
  IsoWitness witness;       // source -> codomain
  std::vector<Violation> violations;
  std::optional<IsoWitness> covariant;  // source -> gphi.category
  std::vector<Violation> covariant_violations;

  bool verified() const { return violations.empty() && covariant_violations.empty(); }
};

PsiIsomorphism psi_isomorphism(const LeftAction& a, PsiVariant variant);

/// The category of action-compatible morphisms over H-objects: a morphism
/// v -> u is a pair (g, v) with s(g) = phi(v) and u = a_g(v). The functor j
/// sends u to phi(u) and (g, v) to g.
struct TildeCategory {
  FiniteCategory category;
  std::vector<std::pair<MorphismId, ObjectId>> pairs;
  IndexMap j_objects;
  IndexMap j_morphisms;
};

/// Throws LawViolation (with the offending (g, v)) if some a_g(v) is not a
/// unit; this is checked rather than assumed when G is not a groupoid.
TildeCategory tilde_category(const LeftAction& a);

struct RestrictedProduct {
  TildeCategory tilde;
  LeftAction induced;  // (id, a~) with a~_{(g,v)}(h) = a_g(h)
  SemidirectCategory product;
};

RestrictedProduct restricted_semidirect(const LeftAction& a);

/// (h, (g, v)) |-> (h, g) into the full product (G a groupoid).
IndexMap restricted_embedding(const RestrictedProduct& r, const SemidirectCategory& full);

/// The wide subcategory of endomorphisms of H.
Subcategory semigroup_bundle_of(const FiniteCategory& h);

/// The action restricted to a subcategory of H that it preserves. Throws
/// LawViolation if some a_g(h) leaves the subcategory.
LeftAction restrict_action(const LeftAction& a, const Subcategory& sub);

/// (h, g) |-> (h_to_full[h], g) from a product over a subcategory into the
/// full product.
IndexMap include_product(const SemidirectCategory& small, const IndexMap& h_to_full, const SemidirectCategory& full);

}  // namespace smallcat
