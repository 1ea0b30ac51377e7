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

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace smallcat {

using Index = std::int32_t;
using ObjectId = Index;
using MorphismId = Index;

/// Marks an undefined entry of a partial table (composition, action).
inline constexpr Index kUndefined = -1;

/// Dense row-major table. Partial maps store kUndefined off their domain.
using Table = Eigen::Matrix<Index, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using BoolTable = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using IndexMap = std::vector<Index>;

/// Shape-safe table equality (Eigen's operator== asserts on mismatched sizes).
inline bool same_table(const Table& a, const Table& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         (a.size() == 0 || (a.array() == b.array()).all());
}

/// A law that failed, with the first counterexample found and how often it
/// failed overall.
struct Violation {
  std::string law;
  std::vector<Index> witness;
  std::size_t occurrences = 1;
};

std::string to_string(const Violation& v);
std::string to_string(const std::vector<Violation>& vs);

/// Collects violations keyed by law, keeping the first witness of each.
class ViolationLog {
 public:
  void add(std::string_view law, std::initializer_list<Index> witness);
  void add(const Violation& v);
  bool empty() const { return entries_.empty(); }
  bool has(std::string_view law) const;
  const std::vector<Violation>& entries() const { return entries_; }
  std::vector<Violation> take() { return std::move(entries_); }

 private:
  std::vector<Violation> entries_;
};

/// Raised when a structure is required to satisfy laws it does not.
class LawViolation : public std::runtime_error {
 public:
  LawViolation(std::string what, std::vector<Violation> violations)
      : std::runtime_error(std::move(what)), violations_(std::move(violations)) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

/// Raised when an operation is applied outside its preconditions.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A consistency check that can only fail through a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Either a validated value or the list of violated laws.
template <class T>
class Checked {
 public:
  Checked(T value) : value_(std::move(value)) {}
  Checked(std::vector<Violation> violations) : violations_(std::move(violations)) {}

  bool ok() const { return value_.has_value(); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!value_) throw LawViolation("value of a failed check: " + to_string(violations_), violations_);
    return *value_;
  }
  T&& value() && {
    if (!value_) throw LawViolation("value of a failed check: " + to_string(violations_), violations_);
    return std::move(*value_);
  }
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::optional<T> value_;
  std::vector<Violation> violations_;
};

}  // namespace smallcat
