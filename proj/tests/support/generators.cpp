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

#include "support/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace smallcat::testing {

Index uniform(Rng& rng, Index lo, Index hi) { return std::uniform_int_distribution<Index>(lo, hi)(rng); }

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

IndexMap random_permutation(Rng& rng, Index n) {
  IndexMap p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

const std::vector<NamedGroup>& group_catalog() {
  static const std::vector<NamedGroup> groups = [] {
    std::vector<NamedGroup> out;
    for (Index n = 1; n <= 6; ++n) out.push_back({"Z" + std::to_string(n), cyclic_group(n)});
    out.push_back({"Z2xZ2", direct_product(cyclic_group(2), cyclic_group(2))});
    out.push_back({"S3", symmetric_group(3)});
    return out;
  }();
  return groups;
}

FiniteGroup random_group(Rng& rng, Index max_order) {
  std::vector<const FiniteGroup*> fit;
  for (const auto& g : group_catalog())
    if (g.group.order() <= max_order) fit.push_back(&g.group);
  const FiniteGroup& g = *fit[uniform(rng, 0, static_cast<Index>(fit.size()) - 1)];
  return relabel_group(g, random_permutation(rng, g.order()));
}

namespace {

Table table_of(std::initializer_list<std::initializer_list<Index>> rows) {
  Table t(static_cast<Index>(rows.size()), static_cast<Index>(rows.size()));
  Index r = 0;
  for (const auto& row : rows) {
    Index c = 0;
    for (Index v : row) t(r, c++) = v;
    ++r;
  }
  return t;
}

}  // namespace

const std::vector<NamedMonoid>& monoid_catalog() {
  static const std::vector<NamedMonoid> monoids{
      {"trivial", table_of({{0}}), true},
      {"Z2", cyclic_group(2).table(), true},
      {"Z3", cyclic_group(3).table(), true},
      {"semilattice", table_of({{0, 1}, {1, 1}}), false},
      {"left-zero", table_of({{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}), false},
      {"nilpotent", table_of({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}), false},
      // Maps {0,1} -> {0,1}: identity, swap, constant 0, constant 1.
      {"T2", table_of({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 2, 2, 2}, {3, 3, 3, 3}}), false},
  };
  return monoids;
}

FiniteCategory monoid_category(const Table& m) {
  RawCategory raw;
  raw.n_objects = 1;
  raw.source.assign(m.rows(), 0);
  raw.target.assign(m.rows(), 0);
  raw.identity = {0};
  raw.compose = m;
  return validate_category(std::move(raw)).value();
}

Partition random_partition(Rng& rng, Index n) {
  IndexMap labels(n);
  const Index k = uniform(rng, 1, std::max<Index>(n, 1));
  for (auto& l : labels) l = uniform(rng, 0, k - 1);
  return Partition::from_labels(labels);
}

GroupBundle random_bundle(Rng& rng, Index max_points, Index max_order) {
  Partition p = random_partition(rng, uniform(rng, 1, max_points));
  std::vector<FiniteGroup> fibers;
  for (Index c = 0; c < p.n_classes(); ++c) fibers.push_back(random_group(rng, max_order));
  return validate_bundle(std::move(p), std::move(fibers)).value();
}

IsoWitness random_relabel(Rng& rng, Index n_objects, Index n_morphisms) {
  return {random_permutation(rng, n_objects), random_permutation(rng, n_morphisms)};
}

Groupoid random_groupoid(Rng& rng, Index max_morphisms) {
  for (;;) {
    GroupBundle b = random_bundle(rng);
    if (b.standard_size() > max_morphisms) continue;
    const FiniteCategory c = standard_groupoid(b).groupoid.category();
    return is_groupoid(transport(c, random_relabel(rng, c.n_objects(), c.n_morphisms()))).value();
  }
}

FiniteCategory random_poset_category(Rng& rng, Index n) {
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (Index a = 0; a < n; ++a) {
    le[a][a] = true;
    for (Index b = a + 1; b < n; ++b) le[a][b] = coin(rng, 0.4);
  }
  for (Index k = 0; k < n; ++k)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (le[a][k] && le[k][b]) le[a][b] = true;

  RawCategory raw;
  raw.n_objects = n;
  raw.identity.resize(n);
  std::map<std::pair<Index, Index>, Index> index;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (le[a][b]) {
        if (a == b) raw.identity[a] = raw.n_morphisms();
        index[{a, b}] = raw.n_morphisms();
        raw.source.push_back(a);
        raw.target.push_back(b);
      }
  const Index m = raw.n_morphisms();
  raw.compose = Table::Constant(m, m, kUndefined);
  for (Index h = 0; h < m; ++h)
    for (Index k = 0; k < m; ++k)
      if (raw.source[h] == raw.target[k]) raw.compose(h, k) = index.at({raw.source[k], raw.target[h]});
  const FiniteCategory c = validate_category(std::move(raw)).value();
  return transport(c, random_relabel(rng, n, m));
}

RelationMonoid relation_monoid(const Partition& relation, const Table& m) {
  std::vector<std::array<Index, 3>> triples;
  std::map<std::array<Index, 3>, MorphismId> index;
  RawCategory raw;
  raw.n_objects = relation.n_points();
  raw.identity.resize(raw.n_objects);
  const Index k = static_cast<Index>(m.rows());
  for (Index a = 0; a < raw.n_objects; ++a)
    for (Index x = 0; x < k; ++x)
      for (Index b : relation.classes()[relation.class_of(a)]) {
        if (a == b && x == 0) raw.identity[a] = raw.n_morphisms();
        index[{a, x, b}] = raw.n_morphisms();
        triples.push_back({a, x, b});
        raw.source.push_back(b);
        raw.target.push_back(a);
      }
  const Index n = raw.n_morphisms();
  raw.compose = Table::Constant(n, n, kUndefined);
  for (Index h = 0; h < n; ++h)
    for (Index j = 0; j < n; ++j) {
      const auto& [a, x, b] = triples[h];
      const auto& [b2, y, c] = triples[j];
      if (b == b2) raw.compose(h, j) = index.at({a, m(x, y), c});
    }
  return {validate_category(std::move(raw)).value(), std::move(triples), std::move(index)};
}

Table coset_action(const FiniteGroup& g, const IndexMap& subgroup) {
  std::vector<IndexMap> cosets;
  std::map<IndexMap, Index> index;
  auto coset_of = [&](Index a) {
    IndexMap c;
    for (Index k : subgroup) c.push_back(g.multiply(a, k));
    std::sort(c.begin(), c.end());
    return c;
  };
  IndexMap reps;
  for (Index a = 0; a < g.order(); ++a) {
    IndexMap c = coset_of(a);
    if (index.count(c)) continue;
    index[c] = static_cast<Index>(cosets.size());
    cosets.push_back(c);
    reps.push_back(a);
  }
  Table t(g.order(), static_cast<Index>(cosets.size()));
  for (Index a = 0; a < g.order(); ++a)
    for (std::size_t i = 0; i < reps.size(); ++i) t(a, static_cast<Index>(i)) = index.at(coset_of(g.multiply(a, reps[i])));
  return t;
}

std::vector<IndexMap> all_subgroups(const FiniteGroup& g) {
  std::vector<IndexMap> out;
  const Index n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!(mask >> g.identity() & 1u)) continue;
    bool closed = true;
    for (Index a = 0; a < n && closed; ++a)
      for (Index b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u)) closed = mask >> g.multiply(a, b) & 1u;
    if (!closed) continue;
    IndexMap s;
    for (Index a = 0; a < n; ++a)
      if (mask >> a & 1u) s.push_back(a);
    out.push_back(s);
  }
  return out;
}

Table random_set_action(Rng& rng, const FiniteGroup& g, Index max_points, bool allow_empty) {
  if (allow_empty && coin(rng, 0.2)) return Table(g.order(), 0);
  const auto subgroups = all_subgroups(g);
  std::vector<Table> parts;
  Index total = 0;
  do {
    std::vector<const IndexMap*> fit;
    for (const auto& s : subgroups)
      if (g.order() / static_cast<Index>(s.size()) <= max_points - total) fit.push_back(&s);
    if (fit.empty()) break;
    parts.push_back(coset_action(g, *fit[uniform(rng, 0, static_cast<Index>(fit.size()) - 1)]));
    total += static_cast<Index>(parts.back().cols());
  } while (total < max_points && coin(rng, 0.5));

  const IndexMap shuffle = random_permutation(rng, total);
  Table t(g.order(), total);
  Index offset = 0;
  for (const auto& p : parts) {
    for (Index a = 0; a < g.order(); ++a)
      for (Index x = 0; x < p.cols(); ++x) t(a, shuffle[offset + x]) = shuffle[offset + p(a, x)];
    offset += static_cast<Index>(p.cols());
  }
  return t;
}

GroupAction random_group_action(Rng& rng, Index max_points, Index max_order) {
  FiniteGroup g = random_group(rng, max_order);
  Table t = random_set_action(rng, g, max_points);
  const Index n = static_cast<Index>(t.cols());
  return validate_group_action(g, n, std::move(t)).value();
}

std::vector<GroupAction> all_group_actions(const FiniteGroup& g, Index n) {
  if (n == 0) return {validate_group_action(g, 0, Table(g.order(), 0)).value()};
  std::vector<IndexMap> perms;
  IndexMap p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  // Greedy generating set.
  IndexMap gens;
  std::vector<bool> span(g.order(), false);
  span[g.identity()] = true;
  for (Index x = 0; x < g.order(); ++x) {
    if (span[x]) continue;
    gens.push_back(x);
    IndexMap queue{g.identity()};
    std::fill(span.begin(), span.end(), false);
    span[g.identity()] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Index s : gens)
        if (Index y = g.multiply(queue[i], s); !span[y]) {
          span[y] = true;
          queue.push_back(y);
        }
  }

  std::vector<GroupAction> out;
  const auto k = static_cast<Index>(perms.size());
  IndexMap choice(gens.size(), 0);
  for (;;) {
    // Extend generator images along right multiplication.
    std::vector<IndexMap> image(g.order());
    IndexMap id(n);
    std::iota(id.begin(), id.end(), 0);
    image[g.identity()] = id;
    IndexMap queue{g.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i)
      for (std::size_t j = 0; j < gens.size() && ok; ++j) {
        const Index y = g.multiply(queue[i], gens[j]);
        IndexMap composed(n);
        for (Index x = 0; x < n; ++x) composed[x] = image[queue[i]][perms[choice[j]][x]];
        if (image[y].empty()) {
          image[y] = composed;
          queue.push_back(y);
        } else {
          ok = image[y] == composed;
        }
      }
    if (ok) {
      Table t(g.order(), n);
      for (Index a = 0; a < g.order(); ++a)
        for (Index x = 0; x < n; ++x) t(a, x) = image[a][x];
      if (auto checked = validate_group_action(g, n, std::move(t))) out.push_back(std::move(checked).value());
    }
    std::size_t j = 0;
    while (j < choice.size() && ++choice[j] == k) choice[j++] = 0;
    if (j == choice.size()) break;
  }
  return out;
}

std::vector<IndexMap> homs_to_z2(const FiniteGroup& g) {
  std::vector<IndexMap> out;
  for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
    IndexMap f(g.order());
    for (Index a = 0; a < g.order(); ++a) f[a] = mask >> a & 1u;
    bool hom = true;
    for (Index a = 0; a < g.order() && hom; ++a)
      for (Index b = 0; b < g.order() && hom; ++b) hom = f[g.multiply(a, b)] == (f[a] ^ f[b]);
    if (hom) out.push_back(f);
  }
  return out;
}

namespace {

LeftAction transport_action(const LeftAction& a, const IsoWitness& wg, const IsoWitness& wh) {
  const FiniteCategory& G = a.acting();
  const FiniteCategory& H = a.acted_on();
  IndexMap phi(H.n_objects());
  for (ObjectId u = 0; u < H.n_objects(); ++u) phi[wh.object_map[u]] = wg.object_map[a.phi(u)];
  Table t = Table::Constant(G.n_morphisms(), H.n_morphisms(), kUndefined);
  for (MorphismId g = 0; g < G.n_morphisms(); ++g)
    for (MorphismId h = 0; h < H.n_morphisms(); ++h)
      if (a.in_domain(g, h)) t(wg.morphism_map[g], wh.morphism_map[h]) = wh.morphism_map[a.apply(g, h)];
  return validate_action(RawAction{transport(G, wg), transport(H, wh), std::move(phi), std::move(t)}).value();
}

}  // namespace

ActionCase random_groupoid_action(Rng& rng, bool h_groupoid_only) {
  for (;;) {
    const GroupBundle bundle = random_bundle(rng, 3, 4);
    const StandardGroupoid sg = standard_groupoid(bundle);
    const Partition& classes = bundle.partition();

    // X = disjoint union over y of {y} x S_c, c the class of y.
    std::vector<Table> fiber_sets;
    for (Index c = 0; c < classes.n_classes(); ++c)
      fiber_sets.push_back(random_set_action(rng, bundle.fiber(c), 3, true));
    std::vector<std::pair<Index, Index>> points;
    std::map<std::pair<Index, Index>, Index> point_index;
    for (Index y = 0; y < classes.n_points(); ++y)
      for (Index s = 0; s < fiber_sets[classes.class_of(y)].cols(); ++s) {
        point_index[{y, s}] = static_cast<Index>(points.size());
        points.emplace_back(y, s);
      }
    const Index nx = static_cast<Index>(points.size());
    if (nx == 0 || nx > 6) continue;
    auto act = [&](MorphismId k, Index point) {
      const auto& t = sg.triples[k];
      const auto& [y, s] = points[point];
      return point_index.at({t.x, fiber_sets[classes.class_of(y)](t.g, s)});
    };

    // A G-invariant relation on X.
    IndexMap labels(nx);
    const Index kind = uniform(rng, 0, 4);
    static const char* kKinds[] = {"discrete", "fiber", "class", "orbit", "full"};
    for (Index x = 0; x < nx; ++x) {
      const auto& [y, s] = points[x];
      const Index c = classes.class_of(y);
      switch (kind) {
        case 0: labels[x] = x; break;
        case 1: labels[x] = y; break;
        case 2: labels[x] = c; break;
        case 3: {
          // Orbit of s under G_c, labelled by its least member.
          Index least = s;
          for (Index g = 0; g < bundle.fiber(c).order(); ++g) least = std::min(least, fiber_sets[c](g, s));
          labels[x] = c * 8 + least;
          break;
        }
        default: labels[x] = 0;
      }
    }
    const Partition relation = Partition::from_labels(labels);

    std::vector<const NamedMonoid*> monoids;
    for (const auto& m : monoid_catalog())
      if (m.is_group || !h_groupoid_only) monoids.push_back(&m);
    const NamedMonoid& monoid = *monoids[uniform(rng, 0, static_cast<Index>(monoids.size()) - 1)];
    const RelationMonoid h = relation_monoid(relation, monoid.table);
    if (h.category.n_morphisms() > 120) continue;

    // theta: per class a homomorphism to Z2, used to invert abelian groups.
    const Index mk = static_cast<Index>(monoid.table.rows());
    const bool twist = monoid.is_group && mk >= 3 && coin(rng);
    IndexMap inverse_in_monoid(mk, 0);
    if (twist)
      for (Index a = 0; a < mk; ++a)
        for (Index b = 0; b < mk; ++b)
          if (monoid.table(a, b) == 0) inverse_in_monoid[a] = b;
    std::vector<IndexMap> chi;
    for (Index c = 0; c < classes.n_classes(); ++c) {
      auto homs = homs_to_z2(bundle.fiber(c));
      chi.push_back(twist ? homs[uniform(rng, 0, static_cast<Index>(homs.size()) - 1)]
                          : IndexMap(bundle.fiber(c).order(), 0));
    }

    const FiniteCategory& G = sg.groupoid.category();
    const FiniteCategory& H = h.category;
    IndexMap phi(nx);
    for (Index x = 0; x < nx; ++x) phi[x] = points[x].first;
    Table t = Table::Constant(G.n_morphisms(), H.n_morphisms(), kUndefined);
    for (MorphismId k = 0; k < G.n_morphisms(); ++k) {
      const auto& tr = sg.triples[k];
      const bool invert = chi[classes.class_of(tr.x)][tr.g] == 1;
      for (MorphismId j = 0; j < H.n_morphisms(); ++j) {
        const auto& [a, m, b] = h.triples[j];
        if (phi[a] != tr.y || phi[b] != tr.y) continue;
        t(k, j) = h.index.at({act(k, a), invert ? inverse_in_monoid[m] : m, act(k, b)});
      }
    }
    auto raw = validate_action(RawAction{G, H, phi, std::move(t)});
    if (!raw) throw InternalError("generated action is invalid: " + to_string(raw.violations()));

    const LeftAction shuffled = transport_action(raw.value(), random_relabel(rng, G.n_objects(), G.n_morphisms()),
                                                 random_relabel(rng, H.n_objects(), H.n_morphisms()));
    std::string description = "|G|=" + std::to_string(G.n_morphisms()) + " |X|=" + std::to_string(nx) +
                              " relation=" + kKinds[kind] + " monoid=" + monoid.name + (twist ? " twisted" : "");
    return {shuffled, std::move(description)};
  }
}

LeftAction regular_monoid_action(const Table& m) {
  const Index n = static_cast<Index>(m.rows());
  return validate_action(RawAction{monoid_category(m), discrete_category(n), IndexMap(n, 0), m}).value();
}

RawAction corrupt_one_entry(Rng& rng, const LeftAction& a) {
  RawAction raw = a.raw();
  const auto domain = action_domain(a.acting(), a.acted_on(), a.phi());
  const auto [g, h] = domain[uniform(rng, 0, static_cast<Index>(domain.size()) - 1)];
  const Index m = a.acted_on().n_morphisms();
  if (m < 2 || coin(rng, 0.2)) {
    raw.table(g, h) = kUndefined;
  } else {
    Index v = uniform(rng, 0, m - 2);
    if (v >= raw.table(g, h)) ++v;
    raw.table(g, h) = v;
  }
  return raw;
}

}  // namespace smallcat::testing
