// Copyright 2026 The robustcnot Authors
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

#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "robustcnot/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitInternal = 4;

}  // namespace

int main(int argc, char **argv) {
  using robustcnot::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"Robust CNOT pulse simulator and resource analyzer"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.require_subcommand(1);

  app.add_option("--levels", cfg.levels, "Implementation levels (comma separated, subset of 0,1,2)")->delimiter(',');
  app.add_option("--nr", cfg.slices, "Re-isolation slices per BB1 constituent");
  app.add_option("--out", cfg.out, "Output file ('-' for stdout) or directory for make-figures");
  app.add_option("--exchange-table", cfg.exchange_table, "Exchange table CSV (default: built-in [100] sample)");
  app.add_option("--target-separation", cfg.target_separation_nm, "Target separation (nm) overriding the table");
  app.add_option("--nt", cfg.n_t, "Characterization time points N_t");
  app.add_option("--n-list", cfg.n_list, "Explicit measurement counts (comma separated)")->delimiter(',');
  app.add_option("--n-min", cfg.n_min, "Smallest N of the log grid (default 6*N_t+1)");
  app.add_option("--n-max", cfg.n_max, "Largest N of the log grid");
  app.add_option("--n-points", cfg.n_points, "Points in the log N grid");
  app.add_option("--t2-ms", cfg.t2_ms, "Dephasing time T2 in ms");
  app.add_option("--delta-min", cfg.delta_min, "Smallest fractional error");
  app.add_option("--delta-max", cfg.delta_max, "Largest fractional error");
  app.add_option("--points", cfg.delta_points, "Points in the fractional error grid");
  app.add_flag("--allow-beyond", cfg.allow_beyond, "Allow fractional errors above 1");
  app.add_option("--t-pi-1q-ns", cfg.timing.t_pi_1q_ns, "Single-qubit π rotation time (ns)");
  app.add_option("--t-quarter-2q-ns", cfg.timing.t_quarter_2q_ns, "Isolated π/4 ZZ rotation time (ns)");
  app.add_option("--j-ref-ueV", cfg.timing.j_ref_ueV, "Coupling (µeV) at which --t-quarter-2q-ns applies");
  app.add_option("--dump-seq", cfg.dump_seq, "Write the CNOT pulse sequence of the highest level to this file");
  app.add_option("--threads", cfg.threads, "Worker threads for sweeps (0 = all cores)");

  for (const char *name :
       {"sweep-delta", "sweep-separation", "measurements", "time-error", "table1", "counts", "make-figures"}) {
    app.add_subcommand(name)->fallthrough();
  }
  app.get_subcommand("sweep-delta")->description("CNOT error against fractional coupling error");
  app.get_subcommand("sweep-separation")->description("CNOT error against donor separation");
  app.get_subcommand("measurements")->description("CNOT error against characterization measurements");
  app.get_subcommand("time-error")->description("CNOT error against total gate time with dephasing");
  app.get_subcommand("table1")->description("Gate times per implementation level");
  app.get_subcommand("counts")->description("Gate counts: closed form against sequence census");
  app.get_subcommand("make-figures")->description("Run every sweep into the --out directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    robustcnot::cli::run(cfg);
  } catch (const robustcnot::cli::UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const robustcnot::FormatError &e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const robustcnot::ConsistencyError &e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const robustcnot::InferenceError &e) {
    std::cerr << "consistency error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::invalid_argument &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
