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

#include "smallcat/commands.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "smallcat/constructions.hpp"

namespace smallcat {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Turns a Checked failure into an exception naming the document.
template <class T>
T require(Checked<T> c, const std::string& what) {
  if (!c) throw LawViolation(what + " fails validation", c.violations());
  return std::move(c).value();
}

FiniteGroup group_of(const SpecDocument& d) {
  return require(validate_group(std::get<GroupDoc>(d.payload).table), "group " + d.name);
}

FiniteCategory category_of(const SpecDocument& d) {
  if (d.kind == DocKind::group) return group_as_groupoid(group_of(d)).category();
  FiniteCategory c = require(validate_category(std::get<RawCategory>(d.payload)), to_string(d.kind) + " " + d.name);
  if (d.kind == DocKind::groupoid) require(is_groupoid(c), "groupoid " + d.name);
  return c;
}

Groupoid groupoid_of(const SpecDocument& d) {
  return require(is_groupoid(category_of(d)), to_string(d.kind) + " " + d.name);
}

const SpecDocument& lookup(const SpecFile& f, const std::string& name) {
  const SpecDocument* d = f.find(name);
  if (!d) throw UsageError("unknown document '" + name + "'");
  return *d;
}

GroupBundle bundle_of(const SpecFile& f, const SpecDocument& d) {
  const auto& b = std::get<BundleDoc>(d.payload);
  Partition p = require(Partition::from_classes(b.n_points, b.classes), "bundle " + d.name + " partition");
  std::vector<FiniteGroup> fibers;
  for (const auto& name : b.fibers) fibers.push_back(group_of(lookup(f, name)));
  return require(validate_bundle(std::move(p), std::move(fibers)), "bundle " + d.name);
}

RawAction raw_action_of(const SpecFile& f, const SpecDocument& d) {
  const auto& a = std::get<ActionDoc>(d.payload);
  return RawAction{category_of(lookup(f, a.acting)), category_of(lookup(f, a.acted_on)), a.phi, a.table};
}

LeftAction action_of(const SpecFile& f, const SpecDocument& d) {
  return require(validate_action(raw_action_of(f, d)), "action " + d.name);
}

GroupAction group_action_of(const SpecFile& f, const SpecDocument& d) {
  const auto& a = std::get<GroupActionDoc>(d.payload);
  return require(validate_group_action(group_of(lookup(f, a.group)), a.n_points, a.table), "group-action " + d.name);
}

std::vector<std::string> references(const SpecDocument& d) {
  return std::visit(
      [](const auto& p) -> std::vector<std::string> {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, BundleDoc>) return p.fibers;
        if constexpr (std::is_same_v<P, ActionDoc>) return {p.acting, p.acted_on};
        if constexpr (std::is_same_v<P, GroupActionDoc>) return {p.group};
        if constexpr (std::is_same_v<P, IsoWitnessDoc>) return {p.from, p.to};
        return {};
      },
      d.payload);
}

bool category_like(DocKind k) { return k == DocKind::category || k == DocKind::groupoid || k == DocKind::group; }

// Top-level documents accepted by `accept`, in file order.
std::vector<const SpecDocument*> inputs(const SpecFile& f, bool (*accept)(DocKind)) {
  std::set<std::string> referenced;
  for (const auto& d : f.documents)
    for (auto& r : references(d)) referenced.insert(r);
  std::vector<const SpecDocument*> out;
  for (const auto& d : f.documents)
    if (accept(d.kind) && !referenced.count(d.name)) out.push_back(&d);
  return out;
}

std::vector<const SpecDocument*> need(const SpecFile& f, bool (*accept)(DocKind), std::size_t n, const char* what) {
  auto found = inputs(f, accept);
  if (found.size() < n)
    throw UsageError("needs " + std::to_string(n) + " top-level " + what + " document(s), found " +
                     std::to_string(found.size()));
  found.resize(n);
  return found;
}

bool is_action(DocKind k) { return k == DocKind::action; }
bool is_bundle(DocKind k) { return k == DocKind::bundle; }
bool is_group_action(DocKind k) { return k == DocKind::group_action; }

// `d` with everything it refers to, dependencies first, without repeats.
void append_closure(const SpecFile& f, const SpecDocument& d, SpecFile& out) {
  if (out.find(d.name)) return;
  for (const auto& r : references(d)) append_closure(f, lookup(f, r), out);
  out.documents.push_back(d);
}

SpecDocument category_doc(std::string name, const FiniteCategory& c) {
  return category_document(std::move(name), c, is_groupoid(c).ok());
}

std::string list(const std::string& label, const IndexMap& v) {
  std::string out = label + ":";
  for (Index x : v) out += " " + std::to_string(x);
  return out;
}

std::string pair_list(const std::vector<std::pair<MorphismId, MorphismId>>& pairs) {
  std::string out = "pairs:";
  for (const auto& [a, b] : pairs) out += " " + std::to_string(a) + "," + std::to_string(b);
  return out;
}

struct Context {
  const SpecFile& in;
  const CommandOptions& options;
  CommandResult& result;

  RunReport& report() { return result.report; }
  void witness(std::string w) { result.report.witnesses.push_back(std::move(w)); }
  void emit(SpecDocument d) { result.output.documents.push_back(std::move(d)); }
  void carry(const SpecDocument& d) { append_closure(in, d, result.output); }
  void fail(std::string law, std::vector<Index> witness) {
    result.report.violations.push_back({std::move(law), std::move(witness), 1});
  }
};

void cmd_validate(Context& c) {
  if (c.in.documents.empty()) throw UsageError("no documents to validate");
  for (const auto& d : c.in.documents) {
    try {
      switch (d.kind) {
        case DocKind::category:
        case DocKind::groupoid:
        case DocKind::group: category_of(d); break;
        case DocKind::bundle: bundle_of(c.in, d); break;
        case DocKind::action: action_of(c.in, d); break;
        case DocKind::group_action: group_action_of(c.in, d); break;
        case DocKind::iso_witness: {
          const auto& w = std::get<IsoWitnessDoc>(d.payload);
          auto problems = check_iso_witness(category_of(lookup(c.in, w.from)), category_of(lookup(c.in, w.to)), w.witness);
          if (!problems.empty()) throw LawViolation("iso-witness " + d.name + " fails", problems);
          break;
        }
      }
      c.witness(d.name + ": valid " + to_string(d.kind));
    } catch (const LawViolation& e) {
      for (Violation v : e.violations()) {
        v.law = d.name + ": " + v.law;
        c.report().violations.push_back(std::move(v));
      }
    }
  }
}

void cmd_standardize(Context& c) {
  const SpecDocument& d = *need(c.in, category_like, 1, "category")[0];
  const Groupoid g = groupoid_of(d);
  const Decomposition dec = bundle_from_groupoid(g, c.options.policy);
  const Standardization s = standardization_iso(g, dec);

  c.carry(d);
  BundleDoc b;
  b.n_points = dec.bundle.partition().n_points();
  b.classes = dec.bundle.partition().classes();
  for (Index i = 0; i < dec.bundle.partition().n_classes(); ++i) {
    b.fibers.push_back(d.name + ".fiber" + std::to_string(i));
    c.emit(group_document(b.fibers.back(), dec.bundle.fiber(i).table()));
  }
  c.emit({DocKind::bundle, d.name + ".bundle", std::move(b)});
  c.emit(category_document(d.name + ".standard", s.standard.groupoid.category(), true));
  c.emit(witness_document(d.name + ".phi", d.name, d.name + ".standard", s.phi));
  c.witness(list("representatives", dec.representatives));
  c.witness(list("connectors", dec.connectors));
}

void cmd_build_standard(Context& c) {
  const SpecDocument& d = *need(c.in, is_bundle, 1, "bundle")[0];
  const StandardGroupoid s = standard_groupoid(bundle_of(c.in, d));
  c.emit(category_document(d.name + ".standard", s.groupoid.category(), true));
  c.witness("morphisms: " + std::to_string(s.groupoid.category().n_morphisms()));
}

void emit_product(Context& c, const SpecDocument& d, const char* suffix, const SemidirectCategory& p) {
  c.emit(category_doc(d.name + suffix, p.category));
  c.witness(pair_list(p.pairs));
}

void cmd_semidirect(Context& c) {
  const SpecDocument& d = *need(c.in, is_action, 1, "action")[0];
  emit_product(c, d, ".semidirect", semidirect_groupoid(action_of(c.in, d)));
}

void cmd_semidirect_shared(Context& c) {
  const SpecDocument& d = *need(c.in, is_action, 1, "action")[0];
  emit_product(c, d, ".shared", semidirect_shared_units(action_of(c.in, d)));
}

void cmd_restricted(Context& c) {
  const SpecDocument& d = *need(c.in, is_action, 1, "action")[0];
  const RestrictedProduct r = restricted_semidirect(action_of(c.in, d));
  c.emit(category_doc(d.name + ".tilde", r.tilde.category));
  emit_product(c, d, ".restricted", r.product);
}

void cmd_opposite(Context& c) {
  const SpecDocument& d = *need(c.in, category_like, 1, "category")[0];
  c.emit(category_doc(d.name + ".op", opposite(category_of(d))));
}

void cmd_gphi(Context& c) {
  const SpecDocument& d = *need(c.in, is_action, 1, "action")[0];
  emit_product(c, d, ".gphi", gphi_category(action_of(c.in, d)));
}

void cmd_inner(Context& c) {
  const SpecDocument& d = *need(c.in, category_like, 1, "category")[0];
  const InnerAction inner = inner_action(groupoid_of(d));
  emit_product(c, d, ".inner", inner.product);
  c.emit(category_doc(d.name + ".kernel", inner.kernel.category));
  c.emit(category_doc(d.name + ".isotropy", inner.isotropy.category));
  c.emit(witness_document(d.name + ".kernel-iso", d.name + ".kernel", d.name + ".isotropy", inner.kernel_iso));
  c.witness(list("hg", inner.to_groupoid));
  c.witness(list("kernel", inner.kernel.morphism_to_parent));
}

void cmd_transformation(Context& c) {
  const SpecDocument& d = *need(c.in, is_group_action, 1, "group-action")[0];
  const TransformationGroupoid t = transformation_groupoid(group_action_of(c.in, d));
  emit_product(c, d, ".groupoid", t.product);
}

// Maps a search outcome onto the report; true when a witness was found.
bool record_search(Context& c, const IsoSearch& s, const std::string& law, std::vector<Index> witness) {
  c.witness("search nodes: " + std::to_string(s.nodes));
  switch (s.outcome) {
    case SearchOutcome::found: return true;
    case SearchOutcome::none: c.fail(law, std::move(witness)); return false;
    case SearchOutcome::budget_exceeded:
      c.report().verdict = Verdict::unknown;
      c.result.exit_code = kExitBudget;
      c.witness("budget of " + std::to_string(c.options.budget) + " nodes exhausted");
      return false;
  }
  return false;
}

void cmd_iso_check(Context& c) {
  auto docs = need(c.in, category_like, 2, "category");
  const FiniteCategory a = category_of(*docs[0]), b = category_of(*docs[1]);
  const IsoSearch s = find_isomorphism(a, b, c.options.budget);
  if (!record_search(c, s, "isomorphism exists",
                     {a.n_objects(), a.n_morphisms(), b.n_objects(), b.n_morphisms()}))
    return;
  c.carry(*docs[0]);
  c.carry(*docs[1]);
  c.emit(witness_document(docs[0]->name + ".to." + docs[1]->name, docs[0]->name, docs[1]->name, *s.witness));
}

void cmd_corollary(Context& c) {
  auto docs = need(c.in, is_group_action, 2, "group-action");
  const GroupAction a = group_action_of(c.in, *docs[0]), b = group_action_of(c.in, *docs[1]);
  const CorollaryVerdict v = corollary_check(a, b, c.options.budget);
  c.witness("search nodes: " + std::to_string(v.groupoid_side.nodes));
  c.witness(std::string("orbit side: ") + (v.orbit_side ? "bijection found" : "no bijection"));
  if (v.orbit_side) c.witness(list("psi", v.psi));
  if (!v.decided()) {
    c.report().verdict = Verdict::unknown;
    c.result.exit_code = kExitBudget;
    c.witness("budget of " + std::to_string(c.options.budget) + " nodes exhausted");
    return;
  }
  const bool found = v.groupoid_side.outcome == SearchOutcome::found;
  c.witness(std::string("groupoid side: ") + (found ? "isomorphic" : "not isomorphic"));
  if (!v.agree()) c.fail("groupoid and orbit verdicts agree", {found ? 1 : 0, v.orbit_side ? 1 : 0});
  if (found) {
    const std::string na = docs[0]->name + ".groupoid", nb = docs[1]->name + ".groupoid";
    c.emit(category_document(na, transformation_groupoid(a).groupoid.category(), true));
    c.emit(category_document(nb, transformation_groupoid(b).groupoid.category(), true));
    c.emit(witness_document(na + ".to." + nb, na, nb, *v.groupoid_side.witness));
  }
}

void cmd_axioms(Context& c) {
  const SpecDocument& d = *need(c.in, is_action, 1, "action")[0];
  const RawAction raw = raw_action_of(c.in, d);
  auto checked = validate_action(raw);
  c.witness(std::string("axioms (0)-(VI): ") + (checked ? "hold" : "fail"));
  for (const auto& v : checked.violations()) c.report().violations.push_back(v);
  if (!is_groupoid(raw.acting)) {
    c.witness("groupoid form: not applicable");
    return;
  }
  const GroupoidFormReport g = validate_action_groupoid_form(raw);
  c.witness(std::string("groupoid form (I')-(III'), (IV)-(VI): ") + (g.ok() ? "hold" : "fail"));
  if (g.ok() != checked.ok()) c.fail("both axiom forms agree", {checked.ok() ? 1 : 0, g.ok() ? 1 : 0});
}

const std::map<std::string, std::function<void(Context&)>>& registry() {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"validate", cmd_validate},
      {"standardize", cmd_standardize},
      {"build-standard", cmd_build_standard},
      {"semidirect", cmd_semidirect},
      {"semidirect-shared", cmd_semidirect_shared},
      {"restricted-semidirect", cmd_restricted},
      {"opposite", cmd_opposite},
      {"gphi", cmd_gphi},
      {"inner-action", cmd_inner},
      {"transformation-groupoid", cmd_transformation},
      {"iso-check", cmd_iso_check},
      {"corollary-check", cmd_corollary},
      {"axioms-report", cmd_axioms},
  };
  return table;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

std::string emit_report(const RunReport& r) {
  std::ostringstream os;
  os << "command: " << r.command << "\nverdict: " << to_string(r.verdict) << "\nwitnesses:\n";
  for (const auto& w : r.witnesses) os << "  - " << w << '\n';
  os << "violations:\n";
  for (const auto& v : r.violations) {
    os << "  - law: " << v.law << "\n    witness:";
    for (Index x : v.witness) os << ' ' << x;
    os << "\n    occurrences: " << v.occurrences << '\n';
  }
  os << "timing_ms: " << r.timing_ms << '\n';
  return os.str();
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult usage_failure(const std::string& command, const std::string& message, std::vector<Index> witness) {
  CommandResult r;
  r.report.command = command;
  r.report.verdict = Verdict::fail;
  r.report.violations.push_back({"usage: " + message, std::move(witness), 1});
  r.exit_code = kExitUsage;
  return r;
}

CommandResult run_command(const std::string& command, const SpecFile& input, const CommandOptions& options) {
  const auto it = registry().find(command);
  if (it == registry().end()) return usage_failure(command, "unknown command '" + command + "'");

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  result.report.command = command;
  result.report.verdict = Verdict::pass;
  Context ctx{input, options, result};
  try {
    it->second(ctx);
  } catch (const UsageError& e) {
    result = usage_failure(command, e.what());
  } catch (const LawViolation& e) {
    result.output.documents.clear();
    auto vs = e.violations();
    if (vs.empty()) vs.push_back({e.what(), {}, 1});
    for (auto& v : vs) result.report.violations.push_back(std::move(v));
  } catch (const PreconditionError& e) {
    result.output.documents.clear();
    result.report.violations.push_back({std::string("precondition: ") + e.what(), {}, 1});
  }
  if (!result.report.violations.empty() && result.exit_code != kExitUsage) {
    result.report.verdict = Verdict::fail;
    result.exit_code = kExitLawViolation;
  }
  result.report.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace smallcat
