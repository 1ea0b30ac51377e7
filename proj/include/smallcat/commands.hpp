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

/// Commands behind the command-line tool. Each command reads the documents
/// it needs from a SpecFile, runs one construction or check, and returns a
/// report plus any constructed documents.
///
/// Inputs are picked from the "top-level" documents, those no other
/// document refers to, in file order. Outputs are self-contained: every
/// document they reference is included.
#pragma once

#include <cstdint>

#include "smallcat/bundle.hpp"
#include "smallcat/iso.hpp"
#include "smallcat/spec_format.hpp"

namespace smallcat {

enum class Verdict { pass, fail, unknown };

std::string to_string(Verdict v);

struct RunReport {
  std::string command;
  Verdict verdict = Verdict::unknown;
  std::vector<std::string> witnesses;
  std::vector<Violation> violations;
  double timing_ms = 0;
};

/// Field order: command, verdict, witnesses, violations, timing_ms.
std::string emit_report(const RunReport& r);

enum ExitCode : int { kExitPass = 0, kExitLawViolation = 1, kExitUsage = 2, kExitBudget = 3 };

struct CommandOptions {
  std::uint64_t budget = kDefaultBudget;
  ChoicePolicy policy = ChoicePolicy::least_index;
};

struct CommandResult {
  RunReport report;
  SpecFile output;
  int exit_code = kExitPass;
};

const std::vector<std::string>& command_names();

/// Never throws for bad input: law violations, failed preconditions and
/// missing documents all end up in the report. InternalError still
/// propagates.
CommandResult run_command(const std::string& command, const SpecFile& input, const CommandOptions& options = {});

/// A usage-error result, for failures before a command runs (parse errors,
/// bad flags).
CommandResult usage_failure(const std::string& command, const std::string& message, std::vector<Index> witness = {});

}  // namespace smallcat
