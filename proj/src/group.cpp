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

#include "smallcat/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace smallcat {

Index FiniteGroup::element_order(Index a) const {
  Index k = 1;
  for (Index x = a; x != identity_; x = multiply(x, a)) ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  return order() == 0 || (table_.array() == table_.transpose().array()).all();
}

Checked<FiniteGroup> validate_group(Table table) {
  ViolationLog log;
  const Index n = static_cast<Index>(table.rows());
  if (table.cols() != n) log.add("shape: group table is square", {n, static_cast<Index>(table.cols())});
  if (n == 0) log.add("group has a unit", {});
  if (!log.empty()) return log.take();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (table(a, b) < 0 || table(a, b) >= n) log.add("closure: product in range", {a, b});
  if (!log.empty()) return log.take();

  Index unit = kUndefined;
  for (Index e = 0; e < n && unit == kUndefined; ++e) {
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a) ok = table(e, a) == a && table(a, e) == a;
    if (ok) unit = e;
  }
  if (unit == kUndefined) log.add("group has a unit", {});

  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (table(table(a, b), c) != table(a, table(b, c))) log.add("associativity (ab)c = a(bc)", {a, b, c});
  if (!log.empty()) return log.take();

  IndexMap inv(n, kUndefined);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b)
      if (table(a, b) == unit && table(b, a) == unit) {
        inv[a] = b;
        break;
      }
    if (inv[a] == kUndefined) log.add("every element has an inverse", {a});
  }
  if (!log.empty()) return log.take();
  return FiniteGroup(std::move(table), unit, std::move(inv));
}

FiniteGroup trivial_group() { return cyclic_group(1); }

FiniteGroup cyclic_group(Index n) {
  Table t(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t(a, b) = (a + b) % n;
  return validate_group(std::move(t)).value();
}

FiniteGroup symmetric_group(Index n) {
  std::vector<IndexMap> perms;
  IndexMap p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<IndexMap, Index> index_of;
  for (std::size_t i = 0; i < perms.size(); ++i) index_of[perms[i]] = static_cast<Index>(i);

  const Index order = static_cast<Index>(perms.size());
  Table t(order, order);
  IndexMap prod(n);
  for (Index a = 0; a < order; ++a)
    for (Index b = 0; b < order; ++b) {
      for (Index i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      t(a, b) = index_of.at(prod);
    }
  return validate_group(std::move(t)).value();
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const Index na = a.order(), nb = b.order();
  Table t(na * nb, na * nb);
  for (Index x = 0; x < na * nb; ++x)
    for (Index y = 0; y < na * nb; ++y)
      t(x, y) = a.multiply(x / nb, y / nb) * nb + b.multiply(x % nb, y % nb);
  return validate_group(std::move(t)).value();
}

FiniteGroup relabel_group(const FiniteGroup& g, const IndexMap& relabel) {
  const Index n = g.order();
  Table t(n, n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t(relabel[a], relabel[b]) = relabel[g.multiply(a, b)];
  return validate_group(std::move(t)).value();
}

Groupoid group_as_groupoid(const FiniteGroup& g) {
  RawCategory raw;
  raw.n_objects = 1;
  raw.source.assign(g.order(), 0);
  raw.target.assign(g.order(), 0);
  raw.identity = {g.identity()};
  raw.compose = g.table();
  return is_groupoid(validate_category(std::move(raw)).value()).value();
}

namespace {

Subgroup table_on(const IndexMap& elements, auto&& multiply) {
  IndexMap position(elements.empty() ? 0 : *std::max_element(elements.begin(), elements.end()) + 1, kUndefined);
  for (std::size_t i = 0; i < elements.size(); ++i) position[elements[i]] = static_cast<Index>(i);
  const Index n = static_cast<Index>(elements.size());
  Table t(n, n);
  ViolationLog log;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      const Index p = multiply(elements[a], elements[b]);
      const Index idx = p >= 0 && p < static_cast<Index>(position.size()) ? position[p] : kUndefined;
      if (idx == kUndefined) log.add("subgroup closed under multiplication", {elements[a], elements[b]});
      t(a, b) = idx == kUndefined ? 0 : idx;
    }
  if (!log.empty()) throw LawViolation("element set is not closed", log.take());
  auto g = validate_group(std::move(t));
  if (!g) throw LawViolation("element set is not a group", g.violations());
  return Subgroup{std::move(g).value(), elements};
}

}  // namespace

Subgroup isotropy_group(const Groupoid& g, ObjectId x) {
  const auto& c = g.category();
  try {
    return table_on(hom_set(c, x, x), [&](Index a, Index b) { return c.compose(a, b); });
  } catch (const LawViolation& e) {
    throw InternalError(std::string("isotropy of a groupoid is not a group: ") + e.what());
  }
}

Subgroup subgroup(const FiniteGroup& g, IndexMap elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return table_on(elements, [&](Index a, Index b) { return g.multiply(a, b); });
}

bool is_group_homomorphism(const FiniteGroup& from, const FiniteGroup& to, const IndexMap& map) {
  if (static_cast<Index>(map.size()) != from.order()) return false;
  for (Index v : map)
    if (v < 0 || v >= to.order()) return false;
  for (Index a = 0; a < from.order(); ++a)
    for (Index b = 0; b < from.order(); ++b)
      if (map[from.multiply(a, b)] != to.multiply(map[a], map[b])) return false;
  return true;
}

bool is_group_isomorphism(const FiniteGroup& from, const FiniteGroup& to, const IndexMap& map) {
  if (from.order() != to.order() || !is_group_homomorphism(from, to, map)) return false;
  std::vector<bool> hit(to.order(), false);
  for (Index v : map) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

namespace {

IndexMap order_profile(const FiniteGroup& g) {
  IndexMap out;
  for (Index a = 0; a < g.order(); ++a) out.push_back(g.element_order(a));
  std::sort(out.begin(), out.end());
  return out;
}

// Elements reachable from the identity by right multiplication with gens.
std::vector<bool> generated(const FiniteGroup& g, const IndexMap& gens) {
  std::vector<bool> seen(g.order(), false);
  IndexMap queue{g.identity()};
  seen[g.identity()] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Index s : gens)
      if (Index y = g.multiply(queue[i], s); !seen[y]) {
        seen[y] = true;
        queue.push_back(y);
      }
  return seen;
}

// Extends gens[i] -> images[i] to the generated subgroup; empty on conflict.
std::optional<IndexMap> extend(const FiniteGroup& a, const FiniteGroup& b, const IndexMap& gens,
                               const IndexMap& images) {
  IndexMap f(a.order(), kUndefined);
  f[a.identity()] = b.identity();
  IndexMap queue{a.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Index x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Index y = a.multiply(x, gens[j]);
      const Index fy = b.multiply(f[x], images[j]);
      if (f[y] == kUndefined) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return std::nullopt;
      }
    }
  }
  // Injective on the generated part.
  std::vector<bool> hit(b.order(), false);
  for (Index v : f) {
    if (v == kUndefined) continue;
    if (hit[v]) return std::nullopt;
    hit[v] = true;
  }
  return f;
}

bool search(const FiniteGroup& a, const FiniteGroup& b, const IndexMap& gens, IndexMap& images,
            IndexMap& result) {
  if (images.size() == gens.size()) {
    auto f = extend(a, b, gens, images);
    if (f && is_group_isomorphism(a, b, *f)) {
      result = *f;
      return true;
    }
    return false;
  }
  const Index target_order = a.element_order(gens[images.size()]);
  for (Index y = 0; y < b.order(); ++y) {
    if (b.element_order(y) != target_order) continue;
    images.push_back(y);
    if (extend(a, b, IndexMap(gens.begin(), gens.begin() + images.size()), images) &&
        search(a, b, gens, images, result))
      return true;
    images.pop_back();
  }
  return false;
}

}  // namespace

std::optional<IndexMap> group_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || order_profile(a) != order_profile(b)) return std::nullopt;
  if (a.is_abelian() != b.is_abelian()) return std::nullopt;

  IndexMap gens;
  auto span = generated(a, gens);
  for (Index x = 0; x < a.order(); ++x)
    if (!span[x]) {
      gens.push_back(x);
      span = generated(a, gens);
    }

  IndexMap images, result;
  if (search(a, b, gens, images, result)) return result;
  return std::nullopt;
}

Checked<GroupAction> validate_group_action(const FiniteGroup& g, Index n_points, Table table) {
  ViolationLog log;
  if (table.rows() != g.order() || table.cols() != n_points) {
    log.add("shape: action table is |group| x |points|", {static_cast<Index>(table.rows()),
                                                            static_cast<Index>(table.cols())});
    return log.take();
  }
  for (Index a = 0; a < g.order(); ++a)
    for (Index x = 0; x < n_points; ++x)
      if (table(a, x) < 0 || table(a, x) >= n_points) log.add("range: action image is a point", {a, x});
  if (!log.empty()) return log.take();
  for (Index x = 0; x < n_points; ++x)
    if (table(g.identity(), x) != x) log.add("group action: e.x = x", {x});
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      for (Index x = 0; x < n_points; ++x)
        if (table(a, table(b, x)) != table(g.multiply(a, b), x)) log.add("group action: a.(b.x) = (ab).x", {a, b, x});
  if (!log.empty()) return log.take();
  return GroupAction(g, std::move(table));
}

}  // namespace smallcat
