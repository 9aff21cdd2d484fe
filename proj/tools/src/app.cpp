// Copyright 2026 The qsv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qsv_cli/app.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "qsv/error.hpp"
#include "qsv_cli/commands.hpp"

namespace qsv::cli {
namespace {

struct RawOptions {
  std::string tau_min = "0";
  std::string tau_max = "2pi";
  std::string tau;
  std::string theta3 = "auto";
  std::string noise = "none";
  std::string basis = "sud";
  std::string format = "csv";
  std::string state_a;
  std::string state_b;
  bool check = false;
};

SweepConfig resolve(const SweepConfig& base, const RawOptions& raw) {
  SweepConfig c = base;
  c.tau_min = parse_angle(raw.tau_min);
  c.tau_max = parse_angle(raw.tau_max);
  if (!raw.tau.empty()) c.tau = parse_angle(raw.tau);
  c.theta3 = parse_theta3(raw.theta3);
  c.noise = parse_noise(raw.noise);
  c.basis = basis_from_string(raw.basis);
  c.format = raw.format == "json" ? OutputFormat::kJson : OutputFormat::kCsv;
  return c;
}

bool write_output(const std::string& path, const std::string& text,
                  std::ostream& out, std::ostream& err) {
  if (path.empty() || path == "-") {
    out << text;
    return static_cast<bool>(out);
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  file.close();
  if (!file) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

bool run_suite(std::ostream& os) {
  bool ok = true;
  for (const auto& r : invariant_suite()) {
    os << (r.passed ? "ok   " : "FAIL ") << r.name;
    if (!r.detail.empty()) os << "  (" << r.detail << ")";
    os << '\n';
    ok = ok && r.passed;
  }
  return ok;
}

std::string render(const CommandOutput& result, OutputFormat format) {
  std::ostringstream os;
  if (format == OutputFormat::kCsv) {
    write_csv(result.table, os);
  } else {
    os << (result.json ? *result.json : to_json(result.table)).dump(2) << '\n';
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Local-measurement verification and direct fidelity estimation "
               "for bipartite qudit states"};
  app.name("qsv");
  app.set_config("--config", "", "Flat key = value file; flags given on the command line win");
  app.require_subcommand(1);
  app.fallthrough();

  SweepConfig base;
  RawOptions raw;
  app.add_option("--d", base.d, "Local dimension of the closed-form family (2 or 3)");
  app.add_option("--tau-min", raw.tau_min, "Sweep start; accepts multiples of pi");
  app.add_option("--tau-max", raw.tau_max, "Sweep end (inclusive)");
  app.add_option("--points", base.points, "Number of grid points");
  app.add_option("--tau", raw.tau, "Single tau instead of a grid");
  app.add_option("--epsilon", base.epsilon, "Error rate / accuracy");
  app.add_option("--delta", base.delta, "Failure probability");
  app.add_option("--theta3", raw.theta3, "auto or a fixed angle");
  app.add_option("--noise", raw.noise, "none, depol:<p> or orth:<eps>");
  app.add_option("--basis", raw.basis, "sud or weyl")
      ->check(CLI::IsMember({"sud", "weyl"}));
  app.add_option("--seed", base.seed, "Base seed");
  app.add_option("--repeats", base.repeats, "Estimates per tau (dfe-run)");
  app.add_option("--schmidt", base.schmidt_path,
                 "File of rows tau,c0,c1,... replacing the closed-form family");
  app.add_option("--out", base.out_path, "Output file; stdout when omitted");
  app.add_option("--format", raw.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--check", raw.check, "Run the invariant self-test first");

  using Command = std::function<CommandOutput(const SweepConfig&)>;
  std::vector<std::pair<CLI::App*, Command>> sweeps = {
      {app.add_subcommand("sweep-verify", "alpha, beta and n of the verification strategy per tau"),
       sweep_verify},
      {app.add_subcommand("sweep-charfunc", "Characteristic function of the target per tau"),
       sweep_charfunc},
      {app.add_subcommand("sweep-negativity", "Negativity of the target per tau"),
       sweep_negativity},
      {app.add_subcommand("dfe-plan", "Importance-sampling plan per tau"), dfe_plan},
      {app.add_subcommand("dfe-run", "Simulated fidelity estimates per tau"), dfe_run},
  };
  CLI::App* fid = app.add_subcommand("fidelity", "Fidelity of two pure states via characteristic functions");
  fid->add_option("--a", raw.state_a, "two_qubit:<tau>, two_qutrit:<tau>, bell:<d> or schmidt:<c0,c1,...>")
      ->required();
  fid->add_option("--b", raw.state_b, "Second state spec")->required();
  CLI::App* check = app.add_subcommand("check", "Run the invariant self-test");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const SweepConfig config = resolve(base, raw);
    if (check->parsed()) {
      std::ostringstream report;
      const bool ok = run_suite(report);
      if (!write_output(config.out_path, report.str(), out, err)) return kExitIo;
      return ok ? kExitOk : kExitInvariant;
    }
    if (raw.check && !run_suite(err)) {
      err << "error: invariant self-test failed\n";
      return kExitInvariant;
    }
    if (fid->parsed()) {
      const auto result = fidelity(raw.state_a, raw.state_b, config.basis);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12f\n", result.value);
      if (!write_output(config.out_path, buf, out, err)) return kExitIo;
      for (const auto& v : result.violations) err << "invariant: " << v << '\n';
      return result.violations.empty() ? kExitOk : kExitInvariant;
    }
    for (const auto& [sub, command] : sweeps) {
      if (!sub->parsed()) continue;
      const CommandOutput result = command(config);
      if (!write_output(config.out_path, render(result, config.format), out, err)) {
        return kExitIo;
      }
      for (const auto& v : result.violations) err << "invariant: " << v << '\n';
      return result.violations.empty() ? kExitOk : kExitInvariant;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qsv::cli
