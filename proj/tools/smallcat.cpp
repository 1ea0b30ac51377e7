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

// smallcat <command> [--in FILE]... [--out FILE] [--budget N]
//          [--policy least-index|greatest-index] [--report FILE]
//
// Documents are written to --out (default stdout), the report to --report
// (default stderr). The exit code is 0 pass, 1 law violation, 2 parse or
// usage error, 3 search budget exceeded.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "smallcat/commands.hpp"

namespace {

using namespace smallcat;

bool write_to(const std::string& path, const std::string& text, std::ostream& fallback) {
  if (path.empty()) {
    fallback << text;
    return true;
  }
  std::ofstream out(path);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite categories, groupoids and their semi-direct products"};
  std::string command;
  std::vector<std::string> in_files;
  std::string out_file, report_file, policy = "least-index";
  std::uint64_t budget = kDefaultBudget;

  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(command_names()));
  app.add_option("--in", in_files, "Input structure file (repeatable)");
  app.add_option("--out", out_file, "Output structure file");
  app.add_option("--budget", budget, "Node budget for isomorphism search");
  app.add_option("--policy", policy, "Representative and connector choice")
      ->check(CLI::IsMember({"least-index", "greatest-index"}));
  app.add_option("--report", report_file, "Report file");

  CommandResult result;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    result = usage_failure(command, e.what());
    write_to(report_file, emit_report(result.report), std::cerr);
    return kExitUsage;
  }

  SpecFile input;
  try {
    for (const auto& path : in_files) {
      std::ifstream f(path);
      if (!f) throw std::runtime_error("cannot read " + path);
      std::stringstream text;
      text << f.rdbuf();
      try {
        SpecFile parsed = parse_spec(text.str(), input);
        for (auto& d : parsed.documents) input.documents.push_back(std::move(d));
      } catch (const ParseError& e) {
        result = usage_failure(command, path + ": " + e.what(), {e.line(), e.column()});
        write_to(report_file, emit_report(result.report), std::cerr);
        return kExitUsage;
      }
    }
  } catch (const std::runtime_error& e) {
    result = usage_failure(command, e.what());
    write_to(report_file, emit_report(result.report), std::cerr);
    return kExitUsage;
  }

  CommandOptions options;
  options.budget = budget;
  options.policy = policy == "greatest-index" ? ChoicePolicy::greatest_index : ChoicePolicy::least_index;
  try {
    result = run_command(command, input, options);
  } catch (const InternalError& e) {
    result.report.command = command;
    result.report.verdict = Verdict::fail;
    result.report.violations.push_back({std::string("internal error: ") + e.what(), {}, 1});
    result.exit_code = kExitLawViolation;
  }

  if (!result.output.documents.empty() && !write_to(out_file, emit(result.output), std::cout)) {
    std::cerr << "cannot write " << out_file << '\n';
    return kExitUsage;
  }
  write_to(report_file, emit_report(result.report), std::cerr);
  return result.exit_code;
}
