// Copyright 2026 The planesched Authors
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


// Command-line front end. Talks to the library through the C API only.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "planesched/planesched.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Failure {
  int status;
  std::string message;
};

void check(int status) {
  if (status != PLANESCHED_OK) throw Failure{status, planesched_last_error()};
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { planesched_free_string(p); }
  std::string str() const { return p ? p : ""; }
};

using ScheduleHandle = std::unique_ptr<planesched_schedule, decltype(&planesched_schedule_free)>;
using HamHandle = std::unique_ptr<planesched_hamiltonian, decltype(&planesched_hamiltonian_free)>;
using StateHandle = std::unique_ptr<planesched_state, decltype(&planesched_state_free)>;

struct Config {
  int orbitals = 0;
  std::string mapping = "jw";
  std::string out;
  std::string schedule_path;
  std::uint64_t seed = 0;
  std::uint64_t shots = 0;
  std::string hamiltonian;
  std::string state = "random:0";
  bool dump_plane = false;
  std::string anchor;
};

bool starts_with(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

std::uint64_t parse_seed(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto v = std::stoull(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw Failure{PLANESCHED_INVALID_ARGUMENT, "bad seed '" + text + "'"};
}

ScheduleHandle obtain_schedule(const Config& cfg) {
  planesched_schedule* s = nullptr;
  if (!cfg.schedule_path.empty()) {
    check(planesched_schedule_load(cfg.schedule_path.c_str(), &s));
  } else {
    if (cfg.orbitals == 0) throw Failure{PLANESCHED_INVALID_ARGUMENT, "--orbitals or --schedule is required"};
    check(planesched_schedule_build(cfg.orbitals, cfg.mapping.c_str(), &s));
  }
  return {s, planesched_schedule_free};
}

void print_plane(const Config& cfg, int orbitals) {
  if (!cfg.dump_plane && cfg.anchor.empty()) return;
  StringOut text;
  check(planesched_render_plane(orbitals, cfg.anchor.c_str(), &text.p));
  std::cout << text.str();
}

int cmd_schedule(const Config& cfg) {
  auto s = obtain_schedule(cfg);
  if (!cfg.out.empty()) check(planesched_schedule_save(s.get(), cfg.out.c_str()));
  StringOut stats;
  check(planesched_schedule_stats(s.get(), &stats.p));
  std::cout << stats.str();
  if (!cfg.out.empty()) std::cout << "written: " << cfg.out << '\n';
  int n = 0;
  check(planesched_schedule_info(s.get(), &n, nullptr, nullptr));
  print_plane(cfg, n);
  return kExitOk;
}

int cmd_stats(const Config& cfg) {
  auto s = obtain_schedule(cfg);
  StringOut stats;
  check(planesched_schedule_stats(s.get(), &stats.p));
  std::cout << stats.str();
  int n = 0;
  check(planesched_schedule_info(s.get(), &n, nullptr, nullptr));
  print_plane(cfg, n);
  return kExitOk;
}

int cmd_verify(const Config& cfg) {
  int passed = 0;
  StringOut report;
  if (!cfg.schedule_path.empty()) {
    auto s = obtain_schedule(cfg);
    check(planesched_schedule_verify(s.get(), &passed, &report.p));
  } else {
    if (cfg.orbitals == 0) throw Failure{PLANESCHED_INVALID_ARGUMENT, "--orbitals or --schedule is required"};
    check(planesched_verify_construction(cfg.orbitals, cfg.mapping.c_str(), &passed, &report.p));
  }
  std::cout << report.str();
  return passed ? kExitOk : kExitFail;
}

int cmd_estimate(const Config& cfg) {
  auto s = obtain_schedule(cfg);
  int n = 0, qubits = 0;
  check(planesched_schedule_info(s.get(), &n, &qubits, nullptr));

  planesched_hamiltonian* h = nullptr;
  if (cfg.hamiltonian.empty()) throw Failure{PLANESCHED_INVALID_ARGUMENT, "--hamiltonian is required"};
  if (starts_with(cfg.hamiltonian, "random:")) {
    check(planesched_hamiltonian_random(n, parse_seed(cfg.hamiltonian.substr(7)), &h));
  } else {
    check(planesched_hamiltonian_load(cfg.hamiltonian.c_str(), &h));
  }
  HamHandle ham(h, planesched_hamiltonian_free);

  // The mapping of a loaded schedule wins over --mapping for basis states.
  std::string mapping = cfg.mapping;
  if (!cfg.schedule_path.empty()) {
    StringOut stats;
    check(planesched_schedule_stats(s.get(), &stats.p));
    const std::string text = stats.str();
    const auto at = text.find("mapping: ");
    if (at != std::string::npos) mapping = text.substr(at + 9, text.find('\n', at) - at - 9);
  }

  planesched_state* st = nullptr;
  if (starts_with(cfg.state, "random:")) {
    check(planesched_state_random(qubits, parse_seed(cfg.state.substr(7)), &st));
  } else if (starts_with(cfg.state, "basis:")) {
    check(planesched_state_basis(cfg.state.substr(6).c_str(), mapping.c_str(), &st));
  } else {
    check(planesched_state_load(cfg.state.c_str(), &st));
  }
  StateHandle state(st, planesched_state_free);
  int state_qubits = 0;
  check(planesched_state_qubits(state.get(), &state_qubits));
  if (state_qubits != qubits) {
    throw Failure{PLANESCHED_INVALID_ARGUMENT, "state has " + std::to_string(state_qubits) +
                                                   " qubits, schedule needs " + std::to_string(qubits)};
  }

  StringOut report;
  check(planesched_estimate(s.get(), ham.get(), state.get(), cfg.shots, cfg.seed, nullptr,
                            &report.p));
  std::cout << report.str();
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement scheduler for fermionic Hamiltonians on a projective-plane cover"};
  app.require_subcommand(1);
  Config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--orbitals,-n", cfg.orbitals, "spatial orbitals N")->check(CLI::Range(2, 100000));
    sub->add_option("--mapping", cfg.mapping, "fermion-to-qubit mapping")
        ->check(CLI::IsMember({"jw", "parity"}));
    sub->add_option("--schedule", cfg.schedule_path, "read a schedule file instead of building");
  };

  auto* schedule = app.add_subcommand("schedule", "build a schedule, write it, print stats");
  add_common(schedule);
  schedule->add_option("--out,-o", cfg.out, "schedule output path");
  schedule->add_flag("--dump-plane", cfg.dump_plane, "print the plane picture");
  schedule->add_option("--anchor", cfg.anchor, "mark the lines through this point, e.g. gamma(4,3)");

  auto* verify = app.add_subcommand("verify", "check the construction or a schedule file");
  add_common(verify);

  auto* estimate = app.add_subcommand("estimate", "estimate the energy of a state");
  add_common(estimate);
  estimate->add_option("--hamiltonian", cfg.hamiltonian, "JSON file or random:<seed>");
  estimate->add_option("--state", cfg.state, "random:<seed>, basis:<bits> or amplitude file");
  estimate->add_option("--shots", cfg.shots, "shots per clique, 0 for exact");
  estimate->add_option("--seed", cfg.seed, "sampling seed");

  auto* stats = app.add_subcommand("stats", "print schedule statistics");
  add_common(stats);
  stats->add_flag("--dump-plane", cfg.dump_plane, "print the plane picture");
  stats->add_option("--anchor", cfg.anchor, "mark the lines through this point");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*schedule) return cmd_schedule(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*estimate) return cmd_estimate(cfg);
    if (*stats) return cmd_stats(cfg);
  } catch (const Failure& f) {
    std::cerr << "error (" << planesched_status_name(f.status) << "): " << f.message << '\n';
    const bool usage = f.status == PLANESCHED_INVALID_ARGUMENT || f.status == PLANESCHED_INVALID_SIZE;
    return usage ? kExitUsage : kExitFail;
  }
  return kExitUsage;
}
