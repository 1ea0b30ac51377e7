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

#include "smallcat/iso.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "smallcat/constructions.hpp"

namespace smallcat {

namespace {

// Power behaviour of an endomorphism: tail length and period of h, h^2, ...
// Non-endomorphisms get -1.
IndexMap morphism_invariants(const FiniteCategory& c) {
  IndexMap out(c.n_morphisms(), -1);
  for (MorphismId h = 0; h < c.n_morphisms(); ++h) {
    if (!c.is_endomorphism(h)) continue;
    std::map<MorphismId, Index> seen;
    MorphismId p = h;
    Index step = 0;
    while (!seen.count(p)) {
      seen[p] = step++;
      p = c.compose(p, h);
    }
    const Index tail = seen[p];
    out[h] = tail * 4096 + (step - tail);
  }
  return out;
}

Table hom_sizes(const FiniteCategory& c) {
  Table t = Table::Zero(c.n_objects(), c.n_objects());
  for (MorphismId h = 0; h < c.n_morphisms(); ++h) ++t(c.target(h), c.source(h));
  return t;
}

// Isomorphism-invariant fingerprint of an object.
std::vector<IndexMap> object_profiles(const FiniteCategory& c, const Table& homs, const IndexMap& inv) {
  const Index n = c.n_objects();
  std::vector<IndexMap> out(n);
  for (ObjectId x = 0; x < n; ++x) {
    IndexMap loops, out_row, in_col;
    for (MorphismId h = 0; h < c.n_morphisms(); ++h)
      if (c.target(h) == x && c.source(h) == x) loops.push_back(inv[h]);
    for (ObjectId y = 0; y < n; ++y) {
      out_row.push_back(homs(x, y));
      in_col.push_back(homs(y, x));
    }
    std::sort(loops.begin(), loops.end());
    std::sort(out_row.begin(), out_row.end());
    std::sort(in_col.begin(), in_col.end());
    IndexMap& p = out[x];
    p.push_back(homs(x, x));
    p.insert(p.end(), loops.begin(), loops.end());
    p.push_back(-2);
    p.insert(p.end(), out_row.begin(), out_row.end());
    p.push_back(-2);
    p.insert(p.end(), in_col.begin(), in_col.end());
  }
  return out;
}

class IsoSearcher {
 public:
  IsoSearcher(const FiniteCategory& a, const FiniteCategory& b, std::uint64_t budget)
      : a_(a), b_(b), budget_(budget) {}

  IsoSearch run() {
    IsoSearch result;
    if (a_.n_objects() != b_.n_objects() || a_.n_morphisms() != b_.n_morphisms()) return result;
    prepare();
    auto pa = profiles_a_, pb = profiles_b_;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    auto ia = inv_a_, ib = inv_b_;
    std::sort(ia.begin(), ia.end());
    std::sort(ib.begin(), ib.end());
    if (pa != pb || ia != ib) return result;

    const bool found = assign_objects(0);
    result.nodes = nodes_;
    if (found) {
      result.outcome = SearchOutcome::found;
      result.witness = IsoWitness{object_map_, morphism_map_};
      auto problems = check_iso_witness(a_, b_, *result.witness);
      if (!problems.empty()) throw InternalError("isomorphism search produced a bad witness: " + to_string(problems));
    } else if (exhausted_budget_) {
      result.outcome = SearchOutcome::budget_exceeded;
    }
    return result;
  }

 private:
  void prepare() {
    const Index n = a_.n_objects(), m = a_.n_morphisms();
    inv_a_ = morphism_invariants(a_);
    inv_b_ = morphism_invariants(b_);
    homs_a_ = hom_sizes(a_);
    homs_b_ = hom_sizes(b_);
    profiles_a_ = object_profiles(a_, homs_a_, inv_a_);
    profiles_b_ = object_profiles(b_, homs_b_, inv_b_);
    hom_lists_b_.assign(static_cast<std::size_t>(n) * n, {});
    for (MorphismId h = 0; h < m; ++h) hom_lists_b_[b_.target(h) * n + b_.source(h)].push_back(h);

    object_map_.assign(n, kUndefined);
    object_used_.assign(n, false);
    morphism_map_.assign(m, kUndefined);
    morphism_used_.assign(m, false);

    order_.resize(m);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](MorphismId x, MorphismId y) {
      return homs_a_(a_.target(x), a_.source(x)) < homs_a_(a_.target(y), a_.source(y));
    });
  }

  bool tick() {
    if (++nodes_ > budget_) exhausted_budget_ = true;
    return !exhausted_budget_;
  }

  bool assign_objects(ObjectId x) {
    if (x == a_.n_objects()) return assign_all_morphisms();
    for (ObjectId y = 0; y < b_.n_objects(); ++y) {
      if (object_used_[y] || profiles_a_[x] != profiles_b_[y]) continue;
      bool consistent = homs_a_(x, x) == homs_b_(y, y);
      for (ObjectId z = 0; z < x && consistent; ++z)
        consistent = homs_a_(x, z) == homs_b_(y, object_map_[z]) && homs_a_(z, x) == homs_b_(object_map_[z], y);
      if (!consistent) continue;
      if (!tick()) return false;
      object_map_[x] = y;
      object_used_[y] = true;
      if (assign_objects(x + 1)) return true;
      object_map_[x] = kUndefined;
      object_used_[y] = false;
      if (exhausted_budget_) return false;
    }
    return false;
  }

  bool assign_all_morphisms() {
    const std::size_t mark = trail_.size();
    bool ok = true;
    for (ObjectId x = 0; x < a_.n_objects() && ok; ++x) ok = assign(a_.identity(x), b_.identity(object_map_[x]));
    if (ok && extend_morphisms()) return true;
    undo(mark);
    return false;
  }

  bool extend_morphisms() {
    auto next = std::find_if(order_.begin(), order_.end(), [&](MorphismId h) { return morphism_map_[h] == kUndefined; });
    if (next == order_.end()) return true;
    const MorphismId h = *next;
    const auto& candidates = hom_lists_b_[object_map_[a_.target(h)] * b_.n_objects() + object_map_[a_.source(h)]];
    for (MorphismId k : candidates) {
      if (morphism_used_[k] || inv_a_[h] != inv_b_[k]) continue;
      if (!tick()) return false;
      const std::size_t mark = trail_.size();
      if (assign(h, k) && extend_morphisms()) return true;
      undo(mark);
      if (exhausted_budget_) return false;
    }
    return false;
  }

  // Assigns h -> k and everything forced by composition with assigned
  // morphisms. Leaves partial work on the trail when it fails.
  bool assign(MorphismId h, MorphismId k) {
    std::vector<std::pair<MorphismId, MorphismId>> queue{{h, k}};
    while (!queue.empty()) {
      const auto [x, y] = queue.back();
      queue.pop_back();
      if (morphism_map_[x] != kUndefined) {
        if (morphism_map_[x] != y) return false;
        continue;
      }
      if (morphism_used_[y] || inv_a_[x] != inv_b_[y] || object_map_[a_.target(x)] != b_.target(y) ||
          object_map_[a_.source(x)] != b_.source(y))
        return false;
      morphism_map_[x] = y;
      morphism_used_[y] = true;
      trail_.push_back(x);
      for (MorphismId z : trail_) {
        const MorphismId fz = morphism_map_[z];
        if (a_.source(x) == a_.target(z)) queue.emplace_back(a_.compose(x, z), b_.compose(y, fz));
        if (a_.source(z) == a_.target(x)) queue.emplace_back(a_.compose(z, x), b_.compose(fz, y));
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const MorphismId x = trail_.back();
      trail_.pop_back();
      morphism_used_[morphism_map_[x]] = false;
      morphism_map_[x] = kUndefined;
    }
  }

  const FiniteCategory& a_;
  const FiniteCategory& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_budget_ = false;

  IndexMap inv_a_, inv_b_;
  Table homs_a_, homs_b_;
  std::vector<IndexMap> profiles_a_, profiles_b_;
  std::vector<IndexMap> hom_lists_b_;
  IndexMap order_;

  IndexMap object_map_;
  std::vector<bool> object_used_;
  IndexMap morphism_map_;
  std::vector<bool> morphism_used_;
  IndexMap trail_;
};

}  // namespace

IsoSearch find_isomorphism(const FiniteCategory& a, const FiniteCategory& b, std::uint64_t budget) {
  return IsoSearcher(a, b, budget).run();
}

OrbitDecomposition orbits_and_stabilizers(const GroupAction& action) {
  const Index n = action.n_points();
  const FiniteGroup& g = action.group();
  IndexMap label(n, kUndefined);
  for (Index x = 0; x < n; ++x) {
    if (label[x] != kUndefined) continue;
    for (Index a = 0; a < g.order(); ++a) label[action.apply(a, x)] = x;
  }
  OrbitDecomposition out;
  out.orbits = Partition::from_labels(label);
  for (const auto& orbit : out.orbits.classes()) {
    const Index base = orbit.front();
    out.base_points.push_back(base);
    IndexMap fixing;
    for (Index a = 0; a < g.order(); ++a)
      if (action.apply(a, base) == base) fixing.push_back(a);
    out.stabilizers.push_back(subgroup(g, std::move(fixing)));
  }
  return out;
}

CorollaryVerdict corollary_check(const GroupAction& first, const GroupAction& second, std::uint64_t budget) {
  CorollaryVerdict v;
  const TransformationGroupoid ga = transformation_groupoid(first);
  const TransformationGroupoid gb = transformation_groupoid(second);
  v.groupoid_side = find_isomorphism(ga.groupoid.category(), gb.groupoid.category(), budget);

  if (first.n_points() != second.n_points()) return v;
  const OrbitDecomposition oa = orbits_and_stabilizers(first);
  const OrbitDecomposition ob = orbits_and_stabilizers(second);
  if (oa.orbits.n_classes() != ob.orbits.n_classes()) return v;

  std::vector<bool> taken(ob.orbits.n_classes(), false);
  for (Index i = 0; i < oa.orbits.n_classes(); ++i) {
    bool matched = false;
    for (Index j = 0; j < ob.orbits.n_classes() && !matched; ++j) {
      if (taken[j] || oa.orbits.classes()[i].size() != ob.orbits.classes()[j].size()) continue;
      auto iso = group_isomorphic(oa.stabilizers[i].group, ob.stabilizers[j].group);
      if (!iso) continue;
      taken[j] = matched = true;
      v.orbit_matching.emplace_back(i, j);
      v.stabilizer_isos.push_back(*iso);
    }
    if (!matched) {
      v.orbit_matching.clear();
      v.stabilizer_isos.clear();
      return v;
    }
  }

  v.psi.assign(first.n_points(), kUndefined);
  for (const auto& [i, j] : v.orbit_matching) {
    const auto& from = oa.orbits.classes()[i];
    const auto& to = ob.orbits.classes()[j];
    for (std::size_t k = 0; k < from.size(); ++k) v.psi[from[k]] = to[k];
  }
  ViolationLog log;
  std::vector<bool> hit(second.n_points(), false);
  for (Index x = 0; x < first.n_points(); ++x) {
    if (hit[v.psi[x]]) log.add("psi is injective", {x});
    hit[v.psi[x]] = true;
  }
  for (Index x = 0; x < first.n_points(); ++x)
    for (Index y = 0; y < first.n_points(); ++y)
      if (oa.orbits.same_class(x, y) != ob.orbits.same_class(v.psi[x], v.psi[y]))
        log.add("psi maps orbits onto orbits", {x, y});
  v.psi_violations = log.take();
  v.orbit_side = v.psi_violations.empty();
  return v;
}

}  // namespace smallcat
