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

#include "smallcat/action.hpp"

namespace smallcat {

namespace {

constexpr const char* kAxiom0 = "(0) s(a_g(u)) = t(a_g(u))";
constexpr const char* kAxiom1 = "(I) s(a_g(s(h))) = s(a_g(h))";
constexpr const char* kAxiom2 = "(II) t(a_g(t(h))) = t(a_g(h))";
constexpr const char* kAxiom3 = "(III) phi(s(a_g(u))) = t(g)";
constexpr const char* kAxiom4 = "(IV) a_{phi(t(h))}(h) = h";
constexpr const char* kAxiom5 = "(V) a_{g'}(a_g(h)) = a_{g'g}(h)";
constexpr const char* kAxiom5Defined = "(V) left side defined";
constexpr const char* kAxiom6 = "(VI) a_g(h'h) = a_g(h')a_g(h)";
constexpr const char* kAxiom6Defined = "(VI) right side composable";
constexpr const char* kEquation1 = "phi(s(a_g(h))) = t(g) = phi(t(a_g(h)))";
constexpr const char* kAxiom1Prime = "(I') a_g(s(h)) = s(a_g(h))";
constexpr const char* kAxiom2Prime = "(II') a_g(t(h)) = t(a_g(h))";
constexpr const char* kAxiom3Prime = "(III') phi(a_g(u)) = t(g)";

// Shape, range and domain-exactness checks shared by both validators.
// Returns the domain mask when the table is well-formed.
std::optional<BoolTable> check_table(const RawAction& a, ViolationLog& log) {
  const auto& G = a.acting;
  const auto& H = a.acted_on;
  if (static_cast<Index>(a.phi.size()) != H.n_objects()) log.add("shape: phi is total on H-objects", {});
  if (a.table.rows() != G.n_morphisms() || a.table.cols() != H.n_morphisms())
    log.add("shape: action table is |G| x |H|", {static_cast<Index>(a.table.rows()), static_cast<Index>(a.table.cols())});
  if (!log.empty()) return std::nullopt;
  for (Index u = 0; u < H.n_objects(); ++u)
    if (a.phi[u] < 0 || a.phi[u] >= G.n_objects()) log.add("range: phi(u) is a G-object", {u});
  if (!log.empty()) return std::nullopt;

  BoolTable mask = domain_mask(G, H, a.phi);
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
      const Index v = a.table(g, h);
      if (mask(g, h) && v == kUndefined) log.add("domain: table defined on every domain pair", {g, h});
      if (!mask(g, h) && v != kUndefined) log.add("domain: table undefined off the domain", {g, h});
      if (v != kUndefined && (v < 0 || v >= H.n_morphisms())) log.add("range: a_g(h) is an H-morphism", {g, h});
    }
  if (!log.empty()) return std::nullopt;
  return mask;
}

// Axioms (IV)-(VI), shared by both forms.
void check_iv_to_vi(const RawAction& a, const BoolTable& mask, ViolationLog& log) {
  const auto& G = a.acting;
  const auto& H = a.acted_on;
  const auto& t = a.table;

  for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
    if (a.phi[H.target(h)] != a.phi[H.source(h)]) continue;
    const MorphismId unit = G.identity(a.phi[H.target(h)]);
    if (t(unit, h) != h) log.add(kAxiom4, {h});
  }

  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
      if (!mask(g, h)) continue;
      const MorphismId k = t(g, h);
      for (MorphismId gp = 0; gp < G.n_morphisms(); ++gp) {
        if (G.source(gp) != G.target(g)) continue;
        if (!mask(gp, k)) {
          log.add(kAxiom5Defined, {gp, g, h});
          continue;
        }
        if (t(gp, k) != t(G.compose(gp, g), h)) log.add(kAxiom5, {gp, g, h});
      }
    }

  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId hp = 0; hp < H.n_morphisms(); ++hp) {
      if (!mask(g, hp)) continue;
      for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
        if (!mask(g, h) || H.source(hp) != H.target(h)) continue;
        const MorphismId rhs = H.compose(t(g, hp), t(g, h));
        if (rhs == kUndefined) {
          log.add(kAxiom6Defined, {g, hp, h});
          continue;
        }
        if (t(g, H.compose(hp, h)) != rhs) log.add(kAxiom6, {g, hp, h});
      }
    }
}

}  // namespace

BoolTable domain_mask(const IndexMap& acting_source, const IndexMap& acted_source, const IndexMap& acted_target,
                      const IndexMap& phi) {
  const Index ng = static_cast<Index>(acting_source.size());
  const Index nh = static_cast<Index>(acted_source.size());
  BoolTable mask = BoolTable::Constant(ng, nh, false);
  for (Index h = 0; h < nh; ++h) {
    const ObjectId base = phi[acted_target[h]];
    if (phi[acted_source[h]] != base) continue;
    for (Index g = 0; g < ng; ++g) mask(g, h) = acting_source[g] == base;
  }
  return mask;
}

BoolTable domain_mask(const FiniteCategory& acting, const FiniteCategory& acted_on, const IndexMap& phi) {
  return domain_mask(acting.raw().source, acted_on.raw().source, acted_on.raw().target, phi);
}

std::vector<std::pair<MorphismId, MorphismId>> action_domain(const FiniteCategory& acting,
                                                             const FiniteCategory& acted_on, const IndexMap& phi) {
  const BoolTable mask = domain_mask(acting, acted_on, phi);
  std::vector<std::pair<MorphismId, MorphismId>> out;
  for (Index g = 0; g < mask.rows(); ++g)
    for (Index h = 0; h < mask.cols(); ++h)
      if (mask(g, h)) out.emplace_back(g, h);
  return out;
}

Checked<LeftAction> validate_action(RawAction raw) {
  ViolationLog log;
  auto mask = check_table(raw, log);
  if (!mask) return log.take();

  const auto& G = raw.acting;
  const auto& H = raw.acted_on;
  const auto& t = raw.table;

  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (ObjectId u = 0; u < H.n_objects(); ++u) {
      const MorphismId id = H.identity(u);
      if (!(*mask)(g, id)) continue;
      const MorphismId k = t(g, id);
      if (H.source(k) != H.target(k)) log.add(kAxiom0, {g, u});
      if (raw.phi[H.source(k)] != G.target(g)) log.add(kAxiom3, {g, u});
    }

  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
      if (!(*mask)(g, h)) continue;
      const MorphismId k = t(g, h);
      if (H.source(t(g, H.identity(H.source(h)))) != H.source(k)) log.add(kAxiom1, {g, h});
      if (H.target(t(g, H.identity(H.target(h)))) != H.target(k)) log.add(kAxiom2, {g, h});
      if (raw.phi[H.source(k)] != G.target(g) || raw.phi[H.target(k)] != G.target(g)) log.add(kEquation1, {g, h});
    }

  const bool structural_ok = !log.has(kAxiom0) && !log.has(kAxiom1) && !log.has(kAxiom2) && !log.has(kAxiom3);
  check_iv_to_vi(raw, *mask, log);
  // (0)-(III) imply the composability facts; a failure here is a bug.
  if (structural_ok && (log.has(kEquation1) || log.has(kAxiom5Defined) || log.has(kAxiom6Defined)))
    throw InternalError("axioms (0)-(III) hold but a derived composability fact fails");

  if (!log.empty()) return log.take();
  return LeftAction(std::move(raw));
}

GroupoidFormReport validate_action_groupoid_form(const RawAction& raw) {
  if (!is_groupoid(raw.acting)) throw PreconditionError("groupoid-form axioms need a groupoid acting category");
  GroupoidFormReport report;
  ViolationLog log;
  auto mask = check_table(raw, log);
  if (!mask) {
    report.violations = log.take();
    return report;
  }

  const auto& G = raw.acting;
  const auto& H = raw.acted_on;
  const auto& t = raw.table;

  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h) {
      if (!(*mask)(g, h)) continue;
      const MorphismId k = t(g, h);
      if (t(g, H.identity(H.source(h))) != H.identity(H.source(k))) log.add(kAxiom1Prime, {g, h});
      if (t(g, H.identity(H.target(h))) != H.identity(H.target(k))) log.add(kAxiom2Prime, {g, h});
    }
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (ObjectId u = 0; u < H.n_objects(); ++u) {
      const MorphismId id = H.identity(u);
      if (!(*mask)(g, id)) continue;
      const MorphismId k = t(g, id);
      if (!H.is_identity(k) || raw.phi[H.source(k)] != G.target(g)) log.add(kAxiom3Prime, {g, u});
    }
  check_iv_to_vi(raw, *mask, log);

  report.violations = log.take();
  if (!report.ok()) return report;

  // Units go to units, giving the induced action on H-objects.
  report.unit_action = Table::Constant(G.n_morphisms(), H.n_objects(), kUndefined);
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (ObjectId u = 0; u < H.n_objects(); ++u) {
      if (!(*mask)(g, H.identity(u))) continue;
      const MorphismId k = t(g, H.identity(u));
      if (!H.is_identity(k)) throw InternalError("groupoid action sends a unit to a non-unit");
      report.unit_action(g, u) = H.source(k);
    }
  return report;
}

LeftAction opposite_action(const LeftAction& a) {
  auto checked = validate_action(RawAction{a.acting(), opposite(a.acted_on()), a.phi(), a.table()});
  if (!checked) throw InternalError("opposite action failed validation: " + to_string(checked.violations()));
  return std::move(checked).value();
}

LeftAction unit_action(const FiniteCategory& units_only, const FiniteCategory& acted_on, const IndexMap& phi) {
  for (MorphismId g = 0; g < units_only.n_morphisms(); ++g)
    if (!units_only.is_identity(g)) throw PreconditionError("unit_action needs a category with only identities");
  const BoolTable mask = domain_mask(units_only, acted_on, phi);
  Table t = Table::Constant(units_only.n_morphisms(), acted_on.n_morphisms(), kUndefined);
  for (Index g = 0; g < mask.rows(); ++g)
    for (Index h = 0; h < mask.cols(); ++h)
      if (mask(g, h)) t(g, h) = h;
  return validate_action(RawAction{units_only, acted_on, phi, std::move(t)}).value();
}

}  // namespace smallcat
