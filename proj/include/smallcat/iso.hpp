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

/// Isomorphism search for finite categories, and the orbit/stabilizer
/// criterion for transformation groupoids.
#pragma once

#include <cstdint>

#include "smallcat/group.hpp"

namespace smallcat {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

enum class SearchOutcome { found, none, budget_exceeded };

struct IsoSearch {
  SearchOutcome outcome = SearchOutcome::none;
  std::optional<IsoWitness> witness;
  std::uint64_t nodes = 0;
};

/// Backtracking over object bijections that respect hom-set sizes, then over
/// morphism bijections with composition propagated eagerly. `none` means the
/// search space was exhausted; `budget_exceeded` means it was not. The first
/// witness in lexicographic branch order is returned, re-verified.
IsoSearch find_isomorphism(const FiniteCategory& a, const FiniteCategory& b, std::uint64_t budget = kDefaultBudget);

struct OrbitDecomposition {
  Partition orbits;
  IndexMap base_points;               // least point of each orbit
  std::vector<Subgroup> stabilizers;  // stabilizer of each base point
};

OrbitDecomposition orbits_and_stabilizers(const GroupAction& action);

/// Both sides of the transformation-groupoid isomorphism criterion.
struct CorollaryVerdict {
  IsoSearch groupoid_side;  // between the two transformation groupoids
  bool orbit_side = false;  // orbits match with isomorphic stabilizers
  IndexMap psi;             // X -> Y, orbitwise bijection (orbit side only)
  std::vector<std::pair<Index, Index>> orbit_matching;
  std::vector<IndexMap> stabilizer_isos;
  std::vector<Violation> psi_violations;

  bool decided() const { return groupoid_side.outcome != SearchOutcome::budget_exceeded; }
  bool agree() const { return decided() && (groupoid_side.outcome == SearchOutcome::found) == orbit_side; }
};

CorollaryVerdict corollary_check(const GroupAction& first, const GroupAction& second,
                                 std::uint64_t budget = kDefaultBudget);

}  // namespace smallcat
