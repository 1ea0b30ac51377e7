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

/// Text format for structure files.
///
/// A file holds documents separated by lines containing only "---". Each
/// document is a list of "key: values" lines; tables follow their key on
/// indented lines, one row per line. Undefined entries are written "-", and
/// "#" starts a comment. Example:
///
///   kind: group
///   name: Z2
///   order: 2
///   table:
///     0 1
///     1 0
///
/// Keys per kind (all required, in this order when emitted):
///   category, groupoid  objects, morphisms, source, target, identity, compose
///   group               order, table
///   bundle              points, then "class: <points>" and "fiber: <group>"
///                       once per class
///   action              acting, on, phi, table
///   group-action        group, points, table
///   iso-witness         from, to, objects, morphisms
///
/// "acting", "on", "group", "fiber", "from" and "to" name other documents.
/// A group document may stand wherever a category is expected; it is read
/// as a one-object groupoid.
#pragma once

#include <stdexcept>
#include <string>
#include <variant>

#include "smallcat/core.hpp"

namespace smallcat {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class DocKind { category, groupoid, group, bundle, action, group_action, iso_witness };

std::string to_string(DocKind kind);

struct GroupDoc {
  Table table;
  friend bool operator==(const GroupDoc& a, const GroupDoc& b) { return same_table(a.table, b.table); }
};

struct BundleDoc {
  Index n_points = 0;
  std::vector<IndexMap> classes;
  std::vector<std::string> fibers;  // group document per class
  friend bool operator==(const BundleDoc&, const BundleDoc&) = default;
};

struct ActionDoc {
  std::string acting;
  std::string acted_on;
  IndexMap phi;
  Table table;
  friend bool operator==(const ActionDoc& a, const ActionDoc& b) {
    return a.acting == b.acting && a.acted_on == b.acted_on && a.phi == b.phi && same_table(a.table, b.table);
  }
};

struct GroupActionDoc {
  std::string group;
  Index n_points = 0;
  Table table;
  friend bool operator==(const GroupActionDoc& a, const GroupActionDoc& b) {
    return a.group == b.group && a.n_points == b.n_points && same_table(a.table, b.table);
  }
};

struct IsoWitnessDoc {
  std::string from;
  std::string to;
  IsoWitness witness;
  friend bool operator==(const IsoWitnessDoc&, const IsoWitnessDoc&) = default;
};

using DocPayload = std::variant<RawCategory, GroupDoc, BundleDoc, ActionDoc, GroupActionDoc, IsoWitnessDoc>;

struct SpecDocument {
  DocKind kind = DocKind::category;
  std::string name;
  DocPayload payload;
  friend bool operator==(const SpecDocument&, const SpecDocument&) = default;
};

struct SpecFile {
  std::vector<SpecDocument> documents;

  const SpecDocument* find(const std::string& name) const;
  bool operator==(const SpecFile&) const = default;
};

/// Parses and resolves every cross-reference. Index ranges, table shapes,
/// duplicate names and the action domain are checked here; the algebraic
/// laws are not. References may also point into `context` (documents read
/// from earlier files), whose names must not be reused.
SpecFile parse_spec(std::string_view text, const SpecFile& context = {});

std::string emit(const SpecFile& file);
std::string emit(const SpecDocument& doc);

SpecDocument category_document(std::string name, const FiniteCategory& c, bool groupoid);
SpecDocument group_document(std::string name, const Table& table);
SpecDocument witness_document(std::string name, std::string from, std::string to, IsoWitness w);

}  // namespace smallcat
