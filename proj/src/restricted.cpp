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

#include <numeric>

#include "smallcat/semidirect.hpp"

namespace smallcat {

TildeCategory tilde_category(const LeftAction& a) {
  const FiniteCategory& G = a.acting();
  const FiniteCategory& H = a.acted_on();

  ViolationLog log;
  TildeCategory out{discrete_category(0), {}, a.phi(), {}};
  Table index = Table::Constant(G.n_morphisms(), H.n_objects(), kUndefined);
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (ObjectId v = 0; v < H.n_objects(); ++v) {
      if (G.source(g) != a.phi(v)) continue;
      if (!H.is_identity(a.apply(g, H.identity(v)))) {
        log.add("a_g(v) is a unit", {g, v});
        continue;
      }
      index(g, v) = static_cast<Index>(out.pairs.size());
      out.pairs.emplace_back(g, v);
      out.j_morphisms.push_back(g);
    }
  if (!log.empty()) throw LawViolation("action sends a unit to a non-unit", log.take());

  const Index m = static_cast<Index>(out.pairs.size());
  RawCategory raw;
  raw.n_objects = H.n_objects();
  raw.compose = Table::Constant(m, m, kUndefined);
  for (const auto& [g, v] : out.pairs) {
    raw.source.push_back(v);
    raw.target.push_back(a.apply_to_object(g, v));
  }
  for (ObjectId u = 0; u < H.n_objects(); ++u) raw.identity.push_back(index(G.identity(a.phi(u)), u));

  for (Index x = 0; x < m; ++x) {
    const auto [g, v] = out.pairs[x];
    for (Index y = 0; y < m; ++y) {
      const auto [gp, w] = out.pairs[y];
      if (raw.target[y] != v) continue;
      const MorphismId ggp = G.compose(g, gp);
      if (ggp == kUndefined || a.apply_to_object(ggp, w) != raw.target[x])
        throw InternalError("composite escapes the compatible hom-set");
      raw.compose(x, y) = index(ggp, w);
    }
  }
  auto checked = validate_category(std::move(raw));
  if (!checked) throw InternalError("tilde category is not a category: " + to_string(checked.violations()));
  out.category = std::move(checked).value();

  auto functor = check_functor(out.category, G, out.j_objects, out.j_morphisms);
  if (!functor.empty()) throw InternalError("j is not a functor: " + to_string(functor));
  if (is_groupoid(G) && !is_groupoid(out.category)) throw InternalError("tilde category of a groupoid lacks inverses");
  return out;
}

RestrictedProduct restricted_semidirect(const LeftAction& a) {
  TildeCategory tilde = tilde_category(a);
  const FiniteCategory& H = a.acted_on();

  Table table = Table::Constant(tilde.category.n_morphisms(), H.n_morphisms(), kUndefined);
  for (Index k = 0; k < tilde.category.n_morphisms(); ++k) {
    const auto [g, v] = tilde.pairs[k];
    for (MorphismId h = 0; h < H.n_morphisms(); ++h)
      if (H.source(h) == v && H.target(h) == v) table(k, h) = a.apply(g, h);
  }
  IndexMap id(H.n_objects());
  std::iota(id.begin(), id.end(), 0);
  auto induced = validate_action(RawAction{tilde.category, H, std::move(id), std::move(table)});
  if (!induced) throw InternalError("induced action is not an action: " + to_string(induced.violations()));
  SemidirectCategory product = semidirect_shared_units(induced.value());
  return RestrictedProduct{std::move(tilde), std::move(induced).value(), std::move(product)};
}

IndexMap restricted_embedding(const RestrictedProduct& r, const SemidirectCategory& full) {
  IndexMap out;
  for (const auto& [h, k] : r.product.pairs) {
    const MorphismId image = full.index_of(h, r.tilde.j_morphisms[k]);
    if (image == kUndefined) throw InternalError("restricted pair is missing from the full product");
    out.push_back(image);
  }
  return out;
}

Subcategory semigroup_bundle_of(const FiniteCategory& h) {
  IndexMap objects(h.n_objects()), loops;
  std::iota(objects.begin(), objects.end(), 0);
  for (MorphismId k = 0; k < h.n_morphisms(); ++k)
    if (h.is_endomorphism(k)) loops.push_back(k);
  return subcategory(h, objects, loops);
}

LeftAction restrict_action(const LeftAction& a, const Subcategory& sub) {
  const FiniteCategory& G = a.acting();
  const Index m = sub.category.n_morphisms();
  Table table = Table::Constant(G.n_morphisms(), m, kUndefined);
  ViolationLog log;
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId k = 0; k < m; ++k) {
      const MorphismId image = a.apply(g, sub.morphism_to_parent[k]);
      if (image == kUndefined) continue;
      if (sub.morphism_from_parent[image] == kUndefined) log.add("action preserves the subcategory", {g, k});
      table(g, k) = sub.morphism_from_parent[image];
    }
  if (!log.empty()) throw LawViolation("action leaves the subcategory", log.take());
  IndexMap phi;
  for (ObjectId u : sub.object_to_parent) phi.push_back(a.phi(u));
  auto checked = validate_action(RawAction{G, sub.category, std::move(phi), std::move(table)});
  if (!checked) throw InternalError("restricted action is not an action: " + to_string(checked.violations()));
  return std::move(checked).value();
}

}  // namespace smallcat
