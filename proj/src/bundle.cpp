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

#include "smallcat/bundle.hpp"

#include <algorithm>

namespace smallcat {

Checked<GroupBundle> validate_bundle(Partition partition, std::vector<FiniteGroup> fibers) {
  if (static_cast<Index>(fibers.size()) != partition.n_classes())
    return std::vector<Violation>{
        Violation{"bundle has exactly one fiber per class", {partition.n_classes(), static_cast<Index>(fibers.size())}}};
  return GroupBundle(std::move(partition), std::move(fibers));
}

Index GroupBundle::standard_size() const {
  Index total = 0;
  for (Index c = 0; c < partition_.n_classes(); ++c) {
    const Index k = static_cast<Index>(partition_.classes()[c].size());
    total += k * k * fibers_[c].order();
  }
  return total;
}

StandardGroupoid standard_groupoid(const GroupBundle& bundle) {
  const Partition& part = bundle.partition();
  const Index n = part.n_points();

  IndexMap position(n), class_size(n);
  for (const auto& cls : part.classes())
    for (std::size_t i = 0; i < cls.size(); ++i) {
      position[cls[i]] = static_cast<Index>(i);
      class_size[cls[i]] = static_cast<Index>(cls.size());
    }

  IndexMap offsets(n + 1, 0);
  std::vector<StandardMorphism> triples;
  for (ObjectId x = 0; x < n; ++x) {
    offsets[x] = static_cast<Index>(triples.size());
    const Index c = part.class_of(x);
    for (Index g = 0; g < bundle.fiber(c).order(); ++g)
      for (ObjectId y : part.classes()[c]) triples.push_back({x, g, y});
  }
  offsets[n] = static_cast<Index>(triples.size());

  auto index = [&](ObjectId x, Index g, ObjectId y) { return offsets[x] + g * class_size[x] + position[y]; };

  const Index m = static_cast<Index>(triples.size());
  RawCategory raw;
  raw.n_objects = n;
  raw.compose = Table::Constant(m, m, kUndefined);
  for (const auto& t : triples) {
    raw.source.push_back(t.y);
    raw.target.push_back(t.x);
  }
  for (ObjectId x = 0; x < n; ++x) raw.identity.push_back(index(x, bundle.fiber(part.class_of(x)).identity(), x));
  for (MorphismId a = 0; a < m; ++a) {
    const auto& [x, g, y] = triples[a];
    const auto& fiber = bundle.fiber(part.class_of(x));
    for (ObjectId z : part.classes()[part.class_of(y)])
      for (Index h = 0; h < fiber.order(); ++h) raw.compose(a, index(y, h, z)) = index(x, fiber.multiply(g, h), z);
  }

  auto category = validate_category(std::move(raw));
  if (!category) throw InternalError("standard groupoid is not a category: " + to_string(category.violations()));
  auto groupoid = is_groupoid(category.value());
  if (!groupoid) throw InternalError("standard groupoid lacks inverses: " + to_string(groupoid.violations()));
  return StandardGroupoid{std::move(groupoid).value(), std::move(triples), std::move(offsets), std::move(position),
                          std::move(class_size)};
}

Decomposition bundle_from_groupoid(const Groupoid& g, ChoicePolicy policy) {
  const FiniteCategory& c = g.category();
  Reachability reach = reachability_classes(c);
  if (!reach.symmetric) throw InternalError("hom-nonemptiness of a groupoid is not symmetric");
  const Partition& part = reach.classes;

  auto pick = [&](const IndexMap& options) {
    return policy == ChoicePolicy::least_index ? *std::min_element(options.begin(), options.end())
                                               : *std::max_element(options.begin(), options.end());
  };

  IndexMap reps;
  IndexMap connectors(c.n_objects(), kUndefined);
  std::vector<FiniteGroup> fibers;
  std::vector<IndexMap> elements;
  for (const auto& cls : part.classes()) {
    const ObjectId rep = pick(cls);
    reps.push_back(rep);
    Subgroup iso = isotropy_group(g, rep);
    fibers.push_back(iso.group);
    elements.push_back(iso.elements);
    for (ObjectId x : cls) connectors[x] = x == rep ? c.identity(rep) : pick(hom_set(c, rep, x));
  }
  auto bundle = validate_bundle(part, std::move(fibers));
  return Decomposition{std::move(bundle).value(), std::move(reps), std::move(connectors), std::move(elements)};
}

Standardization standardization_iso(const Groupoid& g, const Decomposition& d) {
  const FiniteCategory& c = g.category();
  const Partition& part = d.bundle.partition();
  StandardGroupoid standard = standard_groupoid(d.bundle);

  // Fiber element of each isotropy morphism at a representative.
  IndexMap element_of(c.n_morphisms(), kUndefined);
  for (std::size_t cls = 0; cls < d.fiber_elements.size(); ++cls)
    for (std::size_t i = 0; i < d.fiber_elements[cls].size(); ++i)
      element_of[d.fiber_elements[cls][i]] = static_cast<Index>(i);

  IsoWitness phi = identity_witness(c);
  for (MorphismId h = 0; h < c.n_morphisms(); ++h) {
    const ObjectId x = c.target(h), y = c.source(h);
    // l_x h l_y^-1 : rep -> y -> x -> rep
    const MorphismId loop = c.compose(c.compose(d.connectors[x], h), g.inverse(d.connectors[y]));
    if (loop == kUndefined || element_of[loop] == kUndefined || part.class_of(x) != part.class_of(y))
      throw InternalError("connector conjugate is not an isotropy element");
    phi.morphism_map[h] = standard.index_of({x, element_of[loop], y});
  }

  auto problems = check_iso_witness(c, standard.groupoid.category(), phi);
  if (!problems.empty()) throw InternalError("standardization map is not an isomorphism: " + to_string(problems));
  return Standardization{std::move(standard), std::move(phi)};
}

}  // namespace smallcat
