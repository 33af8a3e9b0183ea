// Copyright 2026 The paramtomo Authors
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

// ptomo: command line runner for parametrized-state tomography experiments.
//
// Exit codes: 0 ok, 1 validation error, 2 numerical-guarantee failure,
// 3 I/O error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "paramtomo/audit.h"
#include "paramtomo/errors.h"
#include "paramtomo/experiment.h"
#include "paramtomo/serialization.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitGuarantee = 2;
constexpr int kExitIo = 3;

struct CommonFlags {
  std::string config;
  std::optional<uint64_t> seed;
  std::string out;
  std::string mode;
};

paramtomo::ExperimentConfig LoadWithOverrides(const CommonFlags& flags) {
  paramtomo::ExperimentConfig config = paramtomo::LoadConfig(flags.config);
  if (flags.seed) config.seed = *flags.seed;
  if (!flags.out.empty()) config.out_dir = flags.out;
  if (flags.mode == "theorem") config.recovery.mode = paramtomo::RunMode::kTheorem;
  if (flags.mode == "empirical") config.recovery.mode = paramtomo::RunMode::kEmpirical;
  return config;
}

int Finish(const paramtomo::ExperimentResult& result, const std::string& out_dir) {
  paramtomo::WriteExperimentOutputs(result, out_dir);
  std::cout << result.name << ": max_grid_error="
            << paramtomo::FormatDouble(result.max_grid_error)
            << " coefficient_error=" << paramtomo::FormatDouble(result.coefficient_error)
            << " bound=" << paramtomo::FormatDouble(result.error_bound)
            << " guarantee_met=" << (result.guarantee_met ? "true" : "false")
            << " out=" << out_dir << "\n";
  return result.guarantee_met ? kExitOk : kExitGuarantee;
}

int RunExperiment(const std::string& command, const CommonFlags& flags) {
  using paramtomo::ExperimentKind;
  paramtomo::ExperimentConfig config = LoadWithOverrides(flags);
  if (command == "run-nmr") return Finish(paramtomo::RunNmr(config), config.out_dir);
  if (command == "run-fermion") return Finish(paramtomo::RunFermion(config), config.out_dir);
  if (command == "support-id") return Finish(paramtomo::RunSupportId(config), config.out_dir);
  if (command == "predict") return Finish(paramtomo::RunPredict(config), config.out_dir);
  // recover: the state pipeline named by the config, without trajectories.
  paramtomo::ExperimentResult result;
  if (config.kind == ExperimentKind::kNmr) {
    result = paramtomo::RunNmr(config);
  } else if (config.kind == ExperimentKind::kFermion) {
    result = paramtomo::RunFermion(config);
  } else {
    throw paramtomo::ConfigError(
        "config field experiment: recover needs \"nmr\" or \"fermion\"");
  }
  result.trajectory.clear();
  return Finish(result, config.out_dir);
}

int RunAuditCommand(uint64_t seed, const std::string& out, bool corrupt) {
  paramtomo::AuditOptions options;
  options.seed = seed;
  options.inject_corruption = corrupt;
  std::vector<paramtomo::AuditCheck> checks = paramtomo::RunAudit(options);
  for (const paramtomo::AuditCheck& c : checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.id << "  " << c.detail << "\n";
  }
  if (!out.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(out, ec);
    if (ec) throw paramtomo::IoError("cannot create " + out + ": " + ec.message());
    paramtomo::WriteTextFile((std::filesystem::path(out) / "audit_ledger.json").string(),
                             paramtomo::AuditLedgerJson(checks) + "\n");
  }
  return paramtomo::AllPassed(checks) ? kExitOk : kExitGuarantee;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametrized quantum state tomography via compressed sensing"};
  app.require_subcommand(1);

  CommonFlags flags;
  uint64_t audit_seed = 0;
  std::string audit_out;
  bool corrupt = false;

  for (const char* name : {"run-nmr", "run-fermion", "support-id", "recover", "predict"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("Run the ") + name + " pipeline");
    sub->add_option("--config", flags.config, "Experiment configuration (JSON)")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", flags.seed, "Override the configured seed");
    sub->add_option("--out", flags.out, "Output directory");
    sub->add_option("--mode", flags.mode, "Sample-count mode")
        ->check(CLI::IsMember({"theorem", "empirical"}));
  }
  CLI::App* audit = app.add_subcommand("audit", "Run the property audit ledger");
  audit->add_option("--seed", audit_seed, "Audit seed");
  audit->add_option("--out", audit_out, "Directory for audit_ledger.json");
  audit->add_flag("--inject-corruption", corrupt,
                  "Corrupt the budget fixture (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (audit->parsed()) return RunAuditCommand(audit_seed, audit_out, corrupt);
    for (CLI::App* sub : app.get_subcommands()) {
      return RunExperiment(sub->get_name(), flags);
    }
  } catch (const paramtomo::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const paramtomo::CertificationError& e) {
    std::cerr << "guarantee failure: " << e.what() << "\n";
    return kExitGuarantee;
  } catch (const paramtomo::SingularMatrixError& e) {
    std::cerr << "guarantee failure: " << e.what() << "\n";
    return kExitGuarantee;
  } catch (const paramtomo::Error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitValidation;
}
