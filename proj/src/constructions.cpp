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

#include "smallcat/constructions.hpp"

#include <numeric>

namespace smallcat {

namespace {

LeftAction checked_action(RawAction raw, const char* what) {
  auto checked = validate_action(std::move(raw));
  if (!checked) throw InternalError(std::string(what) + " failed validation: " + to_string(checked.violations()));
  return std::move(checked).value();
}

IndexMap identity_map(Index n) {
  IndexMap out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

InnerAction inner_action(const Groupoid& g) {
  const FiniteCategory& c = g.category();
  const Index m = c.n_morphisms();
  const IndexMap phi = identity_map(c.n_objects());

  const BoolTable mask = domain_mask(c, c, phi);
  Table table = Table::Constant(m, m, kUndefined);
  for (MorphismId a = 0; a < m; ++a)
    for (MorphismId h = 0; h < m; ++h)
      if (mask(a, h)) table(a, h) = c.compose(c.compose(a, h), g.inverse(a));
  LeftAction action = checked_action(RawAction{c, c, phi, std::move(table)}, "inner action");
  SemidirectCategory product = semidirect_groupoid(action);

  IndexMap to_groupoid;
  for (const auto& [h, a] : product.pairs) to_groupoid.push_back(c.compose(h, a));
  auto functor = check_functor(product.category, c, phi, to_groupoid);
  if (!functor.empty()) throw InternalError("(h, g) -> hg is not a homomorphism: " + to_string(functor));

  IndexMap kernel_morphisms;
  for (Index k = 0; k < product.category.n_morphisms(); ++k)
    if (c.is_identity(to_groupoid[k])) kernel_morphisms.push_back(k);
  Subcategory kernel = subcategory(product.category, phi, kernel_morphisms);
  Subcategory isotropy = semigroup_bundle_of(c);

  IsoWitness kernel_iso;
  kernel_iso.object_map = identity_map(c.n_objects());
  for (MorphismId k : kernel.morphism_to_parent)
    kernel_iso.morphism_map.push_back(isotropy.morphism_from_parent[product.pairs[k].second]);
  auto problems = check_iso_witness(kernel.category, isotropy.category, kernel_iso);
  if (!problems.empty()) throw InternalError("kernel is not isomorphic to the isotropy bundle: " + to_string(problems));

  return InnerAction{std::move(action),  std::move(product), std::move(to_groupoid),
                     std::move(kernel),  std::move(isotropy), std::move(kernel_iso)};
}

IndexMap inner_quotient_literal(const InnerAction& inner, const Groupoid& g) {
  IndexMap out;
  for (const auto& [h, a] : inner.product.pairs) out.push_back(g.category().compose(h, g.inverse(a)));
  return out;
}

TransformationGroupoid transformation_groupoid(const GroupAction& action) {
  const Index n = action.n_points();
  FiniteCategory points = discrete_category(n);
  Groupoid group = group_as_groupoid(action.group());
  // Morphism indices of the discrete category coincide with points.
  LeftAction la = checked_action(RawAction{group.category(), points, IndexMap(n, 0), action.table()}, "set action");
  SemidirectCategory product = semidirect_groupoid(la);
  auto groupoid = is_groupoid(product.category);
  if (!groupoid) throw InternalError("transformation groupoid lacks inverses");
  return TransformationGroupoid{std::move(points), std::move(group), std::move(la), std::move(product),
                                std::move(groupoid).value()};
}

Checked<RelationAction> relation_action(const GroupAction& action, const Partition& relation) {
  const Index n = action.n_points();
  if (relation.n_points() != n) throw PreconditionError("relation and action live on different point sets");
  const FiniteGroup& group = action.group();

  ViolationLog log;
  for (Index g = 0; g < group.order(); ++g)
    for (Index u = 0; u < n; ++u)
      for (Index v = 0; v < n; ++v)
        if (relation.same_class(u, v) && !relation.same_class(action.apply(g, u), action.apply(g, v)))
          log.add("u ~ v implies g.u ~ g.v", {g, u, v});
  if (!log.empty()) return log.take();

  std::vector<FiniteGroup> fibers(relation.n_classes(), trivial_group());
  StandardGroupoid rel = standard_groupoid(validate_bundle(relation, std::move(fibers)).value());
  const FiniteCategory& H = rel.groupoid.category();

  Table table(group.order(), H.n_morphisms());
  for (Index g = 0; g < group.order(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
      const auto& t = rel.triples[h];
      table(g, h) = rel.index_of({action.apply(g, t.x), 0, action.apply(g, t.y)});
    }
  Groupoid acting = group_as_groupoid(group);
  LeftAction la = checked_action(RawAction{acting.category(), H, IndexMap(n, 0), std::move(table)}, "relation action");
  return RelationAction{std::move(rel), std::move(la)};
}

}  // namespace smallcat
