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

#include "smallcat/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smallcat {

std::string to_string(const Violation& v) {
  std::ostringstream os;
  os << v.law << " [witness:";
  for (Index i : v.witness) os << ' ' << i;
  os << ']';
  if (v.occurrences > 1) os << " (" << v.occurrences << " occurrences)";
  return os.str();
}

std::string to_string(const std::vector<Violation>& vs) {
  std::string out;
  for (const auto& v : vs) {
    if (!out.empty()) out += "; ";
    out += to_string(v);
  }
  return out;
}

void ViolationLog::add(std::string_view law, std::initializer_list<Index> witness) {
  add(Violation{std::string(law), std::vector<Index>(witness), 1});
}

void ViolationLog::add(const Violation& v) {
  for (auto& e : entries_) {
    if (e.law == v.law) {
      e.occurrences += v.occurrences;
      return;
    }
  }
  entries_.push_back(v);
}

bool ViolationLog::has(std::string_view law) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const Violation& v) { return v.law == law; });
}

bool operator==(const RawCategory& a, const RawCategory& b) {
  return a.n_objects == b.n_objects && a.source == b.source && a.target == b.target &&
         a.identity == b.identity && same_table(a.compose, b.compose);
}

namespace {

bool in_range(Index v, Index hi) { return v >= 0 && v < hi; }

// Morphisms grouped by target object.
std::vector<IndexMap> by_target(const RawCategory& c) {
  std::vector<IndexMap> out(c.n_objects);
  for (Index h = 0; h < c.n_morphisms(); ++h) out[c.target[h]].push_back(h);
  return out;
}

}  // namespace

Checked<FiniteCategory> validate_category(RawCategory raw) {
  ViolationLog log;
  const Index n = raw.n_objects;
  const Index m = raw.n_morphisms();

  if (n < 0) log.add("shape: object count is negative", {n});
  if (static_cast<Index>(raw.target.size()) != m) log.add("shape: source/target sizes differ", {m});
  if (n >= 0 && static_cast<Index>(raw.identity.size()) != n) log.add("shape: identity size != object count", {n});
  if (raw.compose.rows() != m || raw.compose.cols() != m) log.add("shape: compose table is not m x m", {m});
  if (!log.empty()) return log.take();

  for (Index h = 0; h < m; ++h) {
    if (!in_range(raw.source[h], n)) log.add("range: source out of range", {h});
    if (!in_range(raw.target[h], n)) log.add("range: target out of range", {h});
  }
  for (Index u = 0; u < n; ++u)
    if (!in_range(raw.identity[u], m)) log.add("range: identity out of range", {u});
  for (Index h = 0; h < m; ++h)
    for (Index k = 0; k < m; ++k) {
      Index c = raw.compose(h, k);
      if (c != kUndefined && !in_range(c, m)) log.add("range: compose entry out of range", {h, k});
    }
  if (!log.empty()) return log.take();

  for (Index u = 0; u < n; ++u) {
    if (raw.source[raw.identity[u]] != u) log.add("source(identity(u)) = u", {u});
    if (raw.target[raw.identity[u]] != u) log.add("target(identity(u)) = u", {u});
  }

  for (Index h = 0; h < m; ++h) {
    for (Index hp = 0; hp < m; ++hp) {
      const bool should = raw.source[h] == raw.target[hp];
      const Index c = raw.compose(h, hp);
      if (should != (c != kUndefined)) {
        log.add("compose(h,h') defined iff source(h) = target(h')", {h, hp});
        continue;
      }
      if (c == kUndefined) continue;
      if (raw.source[c] != raw.source[hp]) log.add("source(hh') = source(h')", {h, hp, c});
      if (raw.target[c] != raw.target[h]) log.add("target(hh') = target(h)", {h, hp, c});
    }
  }
  if (!log.empty()) return log.take();

  for (Index h = 0; h < m; ++h) {
    if (raw.compose(raw.identity[raw.target[h]], h) != h) log.add("identity(target(h)) h = h", {h});
    if (raw.compose(h, raw.identity[raw.source[h]]) != h) log.add("h identity(source(h)) = h", {h});
  }

  const auto into = by_target(raw);
  for (Index h = 0; h < m; ++h) {
    for (Index hp : into[raw.source[h]]) {
      const Index left = raw.compose(h, hp);
      for (Index hpp : into[raw.source[hp]]) {
        const Index a = raw.compose(left, hpp);
        const Index b = raw.compose(h, raw.compose(hp, hpp));
        if (a != b) log.add("(hh')h'' = h(h'h'')", {h, hp, hpp});
      }
    }
  }
  if (!log.empty()) return log.take();
  return FiniteCategory(std::move(raw));
}

Checked<Groupoid> is_groupoid(const FiniteCategory& c) {
  const Index m = c.n_morphisms();
  IndexMap inv(m, kUndefined);
  ViolationLog log;
  for (Index h = 0; h < m; ++h) {
    const MorphismId at_target = c.identity(c.target(h));
    const MorphismId at_source = c.identity(c.source(h));
    for (MorphismId k : hom_set(c, c.source(h), c.target(h))) {
      if (c.compose(h, k) == at_target && c.compose(k, h) == at_source) {
        inv[h] = k;
        break;
      }
    }
    if (inv[h] == kUndefined) log.add("every morphism has an inverse", {h});
  }
  if (!log.empty()) return log.take();
  return Groupoid(c, std::move(inv));
}

std::vector<MorphismId> hom_set(const FiniteCategory& c, ObjectId x, ObjectId y) {
  std::vector<MorphismId> out;
  for (Index h = 0; h < c.n_morphisms(); ++h)
    if (c.target(h) == x && c.source(h) == y) out.push_back(h);
  return out;
}

FiniteCategory opposite(const FiniteCategory& c) {
  RawCategory raw;
  raw.n_objects = c.n_objects();
  raw.source = c.raw().target;
  raw.target = c.raw().source;
  raw.identity = c.raw().identity;
  raw.compose = c.table().transpose();
  return validate_category(std::move(raw)).value();
}

FiniteCategory discrete_category(Index n) {
  RawCategory raw;
  raw.n_objects = n;
  raw.source.resize(n);
  std::iota(raw.source.begin(), raw.source.end(), 0);
  raw.target = raw.source;
  raw.identity = raw.source;
  raw.compose = Table::Constant(n, n, kUndefined);
  for (Index u = 0; u < n; ++u) raw.compose(u, u) = u;
  return validate_category(std::move(raw)).value();
}

FiniteCategory disjoint_union(const FiniteCategory& a, const FiniteCategory& b) {
  const Index na = a.n_objects(), ma = a.n_morphisms();
  const Index m = ma + b.n_morphisms();
  RawCategory raw;
  raw.n_objects = na + b.n_objects();
  raw.source = a.raw().source;
  raw.target = a.raw().target;
  raw.identity = a.raw().identity;
  for (Index h = 0; h < b.n_morphisms(); ++h) {
    raw.source.push_back(b.source(h) + na);
    raw.target.push_back(b.target(h) + na);
  }
  for (Index u = 0; u < b.n_objects(); ++u) raw.identity.push_back(b.identity(u) + ma);
  raw.compose = Table::Constant(m, m, kUndefined);
  raw.compose.topLeftCorner(ma, ma) = a.table();
  for (Index h = 0; h < b.n_morphisms(); ++h)
    for (Index k = 0; k < b.n_morphisms(); ++k)
      if (Index c = b.compose(h, k); c != kUndefined) raw.compose(h + ma, k + ma) = c + ma;
  return validate_category(std::move(raw)).value();
}

Partition Partition::from_labels(const IndexMap& labels) {
  Partition p;
  p.class_of_.resize(labels.size());
  std::vector<std::pair<Index, Index>> seen;  // label -> class
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& e) { return e.first == labels[i]; });
    Index cls;
    if (it == seen.end()) {
      cls = static_cast<Index>(p.classes_.size());
      seen.emplace_back(labels[i], cls);
      p.classes_.emplace_back();
    } else {
      cls = it->second;
    }
    p.class_of_[i] = cls;
    p.classes_[cls].push_back(static_cast<Index>(i));
  }
  return p;
}

Checked<Partition> Partition::from_classes(Index n_points, std::vector<IndexMap> classes) {
  ViolationLog log;
  IndexMap labels(std::max<Index>(n_points, 0), kUndefined);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].empty()) log.add("partition classes are nonempty", {static_cast<Index>(c)});
    for (Index p : classes[c]) {
      if (p < 0 || p >= n_points) {
        log.add("partition point in range", {static_cast<Index>(c), p});
      } else if (labels[p] != kUndefined) {
        log.add("partition classes are disjoint", {p});
      } else {
        labels[p] = static_cast<Index>(c);
      }
    }
  }
  for (Index p = 0; p < n_points; ++p)
    if (labels[p] == kUndefined) log.add("partition covers every point", {p});
  if (!log.empty()) return log.take();
  return from_labels(labels);
}

Partition Partition::discrete(Index n) {
  IndexMap labels(n);
  std::iota(labels.begin(), labels.end(), 0);
  return from_labels(labels);
}

namespace {

struct DisjointSets {
  explicit DisjointSets(Index n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  Index find(Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(Index a, Index b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  IndexMap parent;
};

}  // namespace

Reachability reachability_classes(const FiniteCategory& c) {
  const Index n = c.n_objects();
  Reachability r;
  r.relation = BoolTable::Constant(n, n, false);
  DisjointSets sets(n);
  for (Index h = 0; h < c.n_morphisms(); ++h) {
    r.relation(c.target(h), c.source(h)) = true;
    sets.unite(c.target(h), c.source(h));
  }
  r.symmetric = n == 0 || (r.relation == r.relation.transpose()).all();
  IndexMap labels(n);
  for (Index u = 0; u < n; ++u) labels[u] = sets.find(u);
  r.classes = Partition::from_labels(labels);
  return r;
}

Subcategory subcategory(const FiniteCategory& c, std::span<const ObjectId> objects,
                        std::span<const MorphismId> morphisms) {
  IndexMap objs(objects.begin(), objects.end());
  IndexMap mors(morphisms.begin(), morphisms.end());
  std::sort(objs.begin(), objs.end());
  objs.erase(std::unique(objs.begin(), objs.end()), objs.end());
  std::sort(mors.begin(), mors.end());
  mors.erase(std::unique(mors.begin(), mors.end()), mors.end());

  IndexMap obj_from(c.n_objects(), kUndefined);
  IndexMap mor_from(c.n_morphisms(), kUndefined);
  for (std::size_t i = 0; i < objs.size(); ++i) obj_from[objs[i]] = static_cast<Index>(i);
  for (std::size_t i = 0; i < mors.size(); ++i) mor_from[mors[i]] = static_cast<Index>(i);

  ViolationLog log;
  for (Index u : objs)
    if (mor_from[c.identity(u)] == kUndefined) log.add("subcategory contains identities", {u});
  for (Index h : mors)
    if (obj_from[c.source(h)] == kUndefined || obj_from[c.target(h)] == kUndefined)
      log.add("subcategory contains endpoints", {h});
  for (Index h : mors)
    for (Index k : mors)
      if (Index hk = c.compose(h, k); hk != kUndefined && mor_from[hk] == kUndefined)
        log.add("subcategory closed under composition", {h, k});
  if (!log.empty()) throw LawViolation("selection is not a subcategory", log.take());

  const Index m = static_cast<Index>(mors.size());
  RawCategory raw;
  raw.n_objects = static_cast<Index>(objs.size());
  raw.compose = Table::Constant(m, m, kUndefined);
  for (Index h : mors) {
    raw.source.push_back(obj_from[c.source(h)]);
    raw.target.push_back(obj_from[c.target(h)]);
  }
  for (Index u : objs) raw.identity.push_back(mor_from[c.identity(u)]);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j)
      if (Index hk = c.compose(mors[i], mors[j]); hk != kUndefined) raw.compose(i, j) = mor_from[hk];

  auto checked = validate_category(std::move(raw));
  if (!checked) throw InternalError("subcategory failed validation: " + to_string(checked.violations()));
  return Subcategory{std::move(checked).value(), std::move(objs), std::move(mors), std::move(mor_from)};
}

Subcategory full_subcategory(const FiniteCategory& c, std::span<const ObjectId> objects) {
  std::vector<bool> keep(c.n_objects(), false);
  for (Index u : objects) keep[u] = true;
  IndexMap mors;
  for (Index h = 0; h < c.n_morphisms(); ++h)
    if (keep[c.source(h)] && keep[c.target(h)]) mors.push_back(h);
  return subcategory(c, objects, mors);
}

std::vector<Violation> check_functor(const FiniteCategory& from, const FiniteCategory& to,
                                     const IndexMap& object_map, const IndexMap& morphism_map) {
  ViolationLog log;
  if (static_cast<Index>(object_map.size()) != from.n_objects()) log.add("functor: object map is total", {});
  if (static_cast<Index>(morphism_map.size()) != from.n_morphisms()) log.add("functor: morphism map is total", {});
  if (!log.empty()) return log.take();
  for (Index u = 0; u < from.n_objects(); ++u)
    if (!in_range(object_map[u], to.n_objects())) log.add("functor: object image in range", {u});
  for (Index h = 0; h < from.n_morphisms(); ++h)
    if (!in_range(morphism_map[h], to.n_morphisms())) log.add("functor: morphism image in range", {h});
  if (!log.empty()) return log.take();

  for (Index h = 0; h < from.n_morphisms(); ++h) {
    const Index fh = morphism_map[h];
    if (to.source(fh) != object_map[from.source(h)]) log.add("functor: F(source(h)) = source(F(h))", {h});
    if (to.target(fh) != object_map[from.target(h)]) log.add("functor: F(target(h)) = target(F(h))", {h});
  }
  for (Index u = 0; u < from.n_objects(); ++u)
    if (morphism_map[from.identity(u)] != to.identity(object_map[u]))
      log.add("functor: F(identity(u)) = identity(F(u))", {u});
  if (!log.empty()) return log.take();

  for (Index h = 0; h < from.n_morphisms(); ++h)
    for (Index k = 0; k < from.n_morphisms(); ++k) {
      const Index hk = from.compose(h, k);
      if (hk == kUndefined) continue;
      if (morphism_map[hk] != to.compose(morphism_map[h], morphism_map[k]))
        log.add("functor: F(hh') = F(h)F(h')", {h, k});
    }
  return log.take();
}

namespace {

bool is_bijection(const IndexMap& map, Index codomain_size) {
  if (static_cast<Index>(map.size()) != codomain_size) return false;
  std::vector<bool> hit(codomain_size, false);
  for (Index v : map) {
    if (!in_range(v, codomain_size) || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

}  // namespace

std::vector<Violation> check_iso_witness(const FiniteCategory& from, const FiniteCategory& to,
                                         const IsoWitness& w) {
  ViolationLog log;
  if (!is_bijection(w.object_map, to.n_objects()) || from.n_objects() != to.n_objects())
    log.add("iso: object map is a bijection", {from.n_objects(), to.n_objects()});
  if (!is_bijection(w.morphism_map, to.n_morphisms()) || from.n_morphisms() != to.n_morphisms())
    log.add("iso: morphism map is a bijection", {from.n_morphisms(), to.n_morphisms()});
  if (!log.empty()) return log.take();
  return check_functor(from, to, w.object_map, w.morphism_map);
}

IsoWitness inverse(const IsoWitness& w) {
  IsoWitness out;
  out.object_map.assign(w.object_map.size(), kUndefined);
  out.morphism_map.assign(w.morphism_map.size(), kUndefined);
  for (std::size_t i = 0; i < w.object_map.size(); ++i) out.object_map[w.object_map[i]] = static_cast<Index>(i);
  for (std::size_t i = 0; i < w.morphism_map.size(); ++i)
    out.morphism_map[w.morphism_map[i]] = static_cast<Index>(i);
  return out;
}

IsoWitness compose(const IsoWitness& second, const IsoWitness& first) {
  IsoWitness out;
  for (Index u : first.object_map) out.object_map.push_back(second.object_map[u]);
  for (Index h : first.morphism_map) out.morphism_map.push_back(second.morphism_map[h]);
  return out;
}

IsoWitness identity_witness(const FiniteCategory& c) {
  IsoWitness w;
  w.object_map.resize(c.n_objects());
  w.morphism_map.resize(c.n_morphisms());
  std::iota(w.object_map.begin(), w.object_map.end(), 0);
  std::iota(w.morphism_map.begin(), w.morphism_map.end(), 0);
  return w;
}

FiniteCategory transport(const FiniteCategory& c, const IsoWitness& relabel) {
  const Index n = c.n_objects(), m = c.n_morphisms();
  if (!is_bijection(relabel.object_map, n) || !is_bijection(relabel.morphism_map, m))
    throw PreconditionError("transport needs bijections on objects and morphisms");
  const auto& om = relabel.object_map;
  const auto& mm = relabel.morphism_map;
  RawCategory raw;
  raw.n_objects = n;
  raw.source.resize(m);
  raw.target.resize(m);
  raw.identity.resize(n);
  raw.compose = Table::Constant(m, m, kUndefined);
  for (Index h = 0; h < m; ++h) {
    raw.source[mm[h]] = om[c.source(h)];
    raw.target[mm[h]] = om[c.target(h)];
  }
  for (Index u = 0; u < n; ++u) raw.identity[om[u]] = mm[c.identity(u)];
  for (Index h = 0; h < m; ++h)
    for (Index k = 0; k < m; ++k)
      if (Index hk = c.compose(h, k); hk != kUndefined) raw.compose(mm[h], mm[k]) = mm[hk];
  return validate_category(std::move(raw)).value();
}

}  // namespace smallcat
