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

#include "smallcat/semidirect.hpp"

namespace smallcat {

namespace {

Groupoid require_groupoid(const FiniteCategory& c, const char* what) {
  auto g = is_groupoid(c);
  if (!g) throw PreconditionError(std::string(what) + " needs a groupoid: " + to_string(g.violations()));
  return std::move(g).value();
}

// Builds the carrier index for pairs accepted by `keep`, lexicographically.
SemidirectCategory carrier(Index n_first, Index n_second, auto&& keep) {
  SemidirectCategory out{discrete_category(0), {}, Table::Constant(n_first, n_second, kUndefined)};
  for (Index a = 0; a < n_first; ++a)
    for (Index b = 0; b < n_second; ++b)
      if (keep(a, b)) {
        out.index(a, b) = static_cast<Index>(out.pairs.size());
        out.pairs.emplace_back(a, b);
      }
  return out;
}

FiniteCategory finish(RawCategory raw, const char* what) {
  auto checked = validate_category(std::move(raw));
  if (!checked) throw InternalError(std::string(what) + " is not a category: " + to_string(checked.violations()));
  return std::move(checked).value();
}

}  // namespace

SemidirectCategory semidirect_groupoid(const LeftAction& a) {
  const FiniteCategory& H = a.acted_on();
  const Groupoid G = require_groupoid(a.acting(), "semidirect_groupoid");
  const FiniteCategory& Gc = G.category();

  SemidirectCategory out = carrier(H.n_morphisms(), Gc.n_morphisms(), [&](MorphismId h, MorphismId g) {
    return Gc.target(g) == a.phi(H.source(h)) && a.phi(H.source(h)) == a.phi(H.target(h));
  });
  const Index m = static_cast<Index>(out.pairs.size());

  RawCategory raw;
  raw.n_objects = H.n_objects();
  raw.compose = Table::Constant(m, m, kUndefined);
  for (const auto& [h, g] : out.pairs) {
    raw.source.push_back(a.apply_to_object(G.inverse(g), H.source(h)));
    raw.target.push_back(H.target(h));
  }
  for (ObjectId u = 0; u < H.n_objects(); ++u) raw.identity.push_back(out.index_of(H.identity(u), Gc.identity(a.phi(u))));

  for (Index x = 0; x < m; ++x) {
    const auto [h, g] = out.pairs[x];
    const MorphismId g_inv = G.inverse(g);
    for (Index y = 0; y < m; ++y) {
      const auto [hp, gp] = out.pairs[y];
      const bool by_unit = raw.source[x] == H.target(hp);
      const bool by_morphism = H.source(a.apply(g_inv, h)) == H.target(hp);
      if (by_unit != by_morphism) throw InternalError("the two composability conditions disagree");
      if (!by_unit) continue;
      if (a.phi(H.target(hp)) != Gc.source(g)) throw InternalError("composable pair with t(g') != s(g)");
      const MorphismId moved = a.apply(g, hp);
      if (H.target(moved) != H.source(h)) throw InternalError("t(a_g(h')) != s(h)");
      const MorphismId result = out.index_of(H.compose(h, moved), Gc.compose(g, gp));
      if (result == kUndefined) throw InternalError("product left the carrier");
      raw.compose(x, y) = result;
    }
  }
  out.category = finish(std::move(raw), "H x_a G");
  return out;
}

IndexMap semidirect_inverse_formula(const LeftAction& a, const SemidirectCategory& product) {
  const Groupoid G = require_groupoid(a.acting(), "semidirect_inverse_formula");
  const Groupoid H = require_groupoid(a.acted_on(), "semidirect_inverse_formula");
  IndexMap out;
  for (const auto& [h, g] : product.pairs) {
    const MorphismId g_inv = G.inverse(g);
    out.push_back(product.index_of(a.apply(g_inv, H.inverse(h)), g_inv));
  }
  return out;
}

SemidirectCategory semidirect_shared_units(const LeftAction& a) {
  const FiniteCategory& H = a.acted_on();
  const FiniteCategory& G = a.acting();
  if (H.n_objects() != G.n_objects()) throw PreconditionError("shared-unit product needs equal object sets");
  for (ObjectId u = 0; u < H.n_objects(); ++u)
    if (a.phi(u) != u) throw PreconditionError("shared-unit product needs phi = identity");

  SemidirectCategory out = carrier(H.n_morphisms(), G.n_morphisms(), [&](MorphismId h, MorphismId g) {
    return G.target(g) == H.source(h) && H.source(h) == H.target(h);
  });
  const Index m = static_cast<Index>(out.pairs.size());

  RawCategory raw;
  raw.n_objects = H.n_objects();
  raw.compose = Table::Constant(m, m, kUndefined);
  for (const auto& [h, g] : out.pairs) {
    raw.source.push_back(G.source(g));
    raw.target.push_back(H.target(h));
  }
  for (ObjectId u = 0; u < H.n_objects(); ++u) raw.identity.push_back(out.index_of(H.identity(u), G.identity(u)));

  for (Index x = 0; x < m; ++x) {
    const auto [h, g] = out.pairs[x];
    for (Index y = 0; y < m; ++y) {
      const auto [hp, gp] = out.pairs[y];
      if (G.source(g) != H.target(hp)) continue;
      const MorphismId moved = a.apply(g, hp);
      if (H.target(moved) != H.source(h)) throw InternalError("t(a_g(h')) != s(h) in the shared-unit product");
      const MorphismId result = out.index_of(H.compose(h, moved), G.compose(g, gp));
      if (result == kUndefined) throw InternalError("shared-unit product left the carrier");
      raw.compose(x, y) = result;
    }
  }
  auto checked = validate_category(std::move(raw));
  if (!checked) throw LawViolation("shared-unit product is not a category", checked.violations());
  out.category = std::move(checked).value();
  return out;
}

SemidirectCategory gphi_category(const LeftAction& a) {
  const FiniteCategory& H = a.acted_on();
  const Groupoid G = require_groupoid(a.acting(), "gphi_category");
  const FiniteCategory& Gc = G.category();

  SemidirectCategory out =
      carrier(Gc.n_morphisms(), H.n_morphisms(), [&](MorphismId g, MorphismId h) { return a.in_domain(g, h); });
  const Index m = static_cast<Index>(out.pairs.size());

  RawCategory raw;
  raw.n_objects = H.n_objects();
  raw.compose = Table::Constant(m, m, kUndefined);
  for (const auto& [g, h] : out.pairs) {
    raw.source.push_back(H.source(h));
    raw.target.push_back(H.target(a.apply(g, h)));
  }
  for (ObjectId u = 0; u < H.n_objects(); ++u) raw.identity.push_back(out.index_of(Gc.identity(a.phi(u)), H.identity(u)));

  for (Index x = 0; x < m; ++x) {
    const auto [gp, hp] = out.pairs[x];
    for (Index y = 0; y < m; ++y) {
      const auto [g, h] = out.pairs[y];
      if (raw.source[x] != raw.target[y]) continue;
      if (Gc.source(gp) != Gc.target(g)) throw InternalError("G x^phi H: composable pair with s(g') != t(g)");
      const MorphismId pulled = a.apply(G.inverse(g), hp);
      const MorphismId result = out.index_of(Gc.compose(gp, g), H.compose(pulled, h));
      if (result == kUndefined) throw InternalError("G x^phi H product left the carrier");
      raw.compose(x, y) = result;
    }
  }
  out.category = finish(std::move(raw), "G x^phi H");
  return out;
}

PsiIsomorphism psi_isomorphism(const LeftAction& a, PsiVariant variant) {
  const Groupoid G = require_groupoid(a.acting(), "psi_isomorphism");
  const FiniteCategory& H = a.acted_on();

  SemidirectCategory gphi = gphi_category(a);
  SemidirectCategory source =
      variant == PsiVariant::category ? semidirect_groupoid(opposite_action(a)) : semidirect_groupoid(a);
  std::optional<Groupoid> Hg;
  if (variant == PsiVariant::groupoid) Hg = require_groupoid(H, "groupoid variant of psi");

  IsoWitness w;
  w.object_map.resize(H.n_objects());
  for (ObjectId u = 0; u < H.n_objects(); ++u) w.object_map[u] = u;
  for (const auto& [h, g] : source.pairs) {
    const MorphismId second = variant == PsiVariant::category ? h : Hg->inverse(h);
    const MorphismId image = gphi.index_of(G.inverse(g), second);
    if (image == kUndefined) throw InternalError("psi leaves G x^phi H");
    w.morphism_map.push_back(image);
  }

  FiniteCategory codomain = opposite(gphi.category);
  auto violations = check_iso_witness(source.category, codomain, w);

  std::optional<IsoWitness> covariant;
  std::vector<Violation> covariant_violations;
  if (variant == PsiVariant::groupoid) {
    auto gphi_groupoid = is_groupoid(gphi.category);
    if (!gphi_groupoid) {
      covariant_violations = gphi_groupoid.violations();
    } else {
      IsoWitness cw = w;
      for (auto& k : cw.morphism_map) k = gphi_groupoid.value().inverse(k);
      covariant_violations = check_iso_witness(source.category, gphi.category, cw);
      covariant = std::move(cw);
    }
  }
  return PsiIsomorphism{std::move(source), std::move(gphi),    std::move(codomain),
                        std::move(w),      std::move(violations), std::move(covariant),
                        std::move(covariant_violations)};
}

IndexMap include_product(const SemidirectCategory& small, const IndexMap& h_to_full, const SemidirectCategory& full) {
  IndexMap out;
  for (const auto& [h, g] : small.pairs) {
    const MorphismId k = full.index_of(h_to_full[h], g);
    if (k == kUndefined) throw InternalError("sub-product pair is missing from the full product");
    out.push_back(k);
  }
  return out;
}

}  // namespace smallcat
