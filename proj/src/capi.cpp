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


#include "planesched/planesched.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <new>
#include <regex>
#include <sstream>
#include <string>

#include "planesched/cover.hpp"
#include "planesched/error.hpp"
#include "planesched/hamiltonian.hpp"
#include "planesched/schedule.hpp"
#include "planesched/sim.hpp"
#include "planesched/verify.hpp"

using namespace planesched;

struct planesched_schedule {
  Schedule value;
};
struct planesched_hamiltonian {
  Hamiltonian value;
};
struct planesched_state {
  sim::StateVector value;
};

namespace {

thread_local std::string g_last_error;

int set_error(int status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename F>
int guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return PLANESCHED_OK;
  } catch (const Error& e) {
    return set_error(static_cast<int>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(PLANESCHED_SIZE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return set_error(PLANESCHED_UNKNOWN, e.what());
  }
}

void require(const void* p, const char* name) {
  if (!p) fail(ErrorCode::kInvalidArgument, std::string(name) + " is null");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

plane::Point parse_point(const std::string& text, std::int64_t order) {
  static const std::regex re(R"(^(?:P_)?(alpha|beta|gamma)(?:\((\d+)(?:,(\d+))?\))?$)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) fail(ErrorCode::kInvalidArgument, "bad point '" + text + "'");
  auto num = [&](int k) { return m[k].matched ? std::stoi(m[k].str()) : -1; };
  plane::Point p;
  if (m[1] == "alpha" && !m[2].matched) {
    p = plane::Point::alpha();
  } else if (m[1] == "beta" && m[2].matched && !m[3].matched) {
    p = plane::Point::beta(num(2));
  } else if (m[1] == "gamma" && m[3].matched) {
    p = plane::Point::gamma(num(2), num(3));
  } else {
    fail(ErrorCode::kInvalidArgument, "bad point '" + text + "'");
  }
  if (p.x >= order || p.y >= order) {
    fail(ErrorCode::kInvalidArgument, "point '" + text + "' is outside the plane of order " +
                                          std::to_string(order));
  }
  return p;
}

}  // namespace

extern "C" {

const char* planesched_version(void) { return "0.1.0"; }

const char* planesched_status_name(int status) {
  if (status == PLANESCHED_OK) return "ok";
  if (status >= 1 && status <= 12) return error_code_name(static_cast<ErrorCode>(status));
  return "unknown";
}

const char* planesched_last_error(void) { return g_last_error.c_str(); }

void planesched_free_string(char* s) { std::free(s); }

int planesched_schedule_build(int n_orbitals, const char* mapping, planesched_schedule** out) {
  return guarded([&] {
    require(mapping, "mapping");
    require(out, "out");
    *out = nullptr;
    *out = new planesched_schedule{build_schedule(n_orbitals, circuits::parse_mapping(mapping))};
  });
}

int planesched_schedule_load(const char* path, planesched_schedule** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new planesched_schedule{load_schedule(path)};
  });
}

int planesched_schedule_save(const planesched_schedule* s, const char* path) {
  return guarded([&] {
    require(s, "schedule");
    require(path, "path");
    write_schedule(s->value, path);
  });
}

int planesched_schedule_json(const planesched_schedule* s, char** out) {
  return guarded([&] {
    require(s, "schedule");
    require(out, "out");
    *out = dup_string(schedule_to_json(s->value));
  });
}

int planesched_schedule_stats(const planesched_schedule* s, char** out) {
  return guarded([&] {
    require(s, "schedule");
    require(out, "out");
    *out = dup_string(stats_text(compute_stats(s->value)));
  });
}

int planesched_schedule_info(const planesched_schedule* s, int* n_orbitals, int* qubits,
                             int* cliques) {
  return guarded([&] {
    require(s, "schedule");
    if (n_orbitals) *n_orbitals = s->value.n_orbitals;
    if (qubits) *qubits = s->value.qubits();
    if (cliques) *cliques = static_cast<int>(s->value.cliques.size());
  });
}

int planesched_schedule_verify(const planesched_schedule* s, int* passed, char** report) {
  return guarded([&] {
    require(s, "schedule");
    require(passed, "passed");
    const VerifyReport r = verify_schedule(s->value);
    *passed = r.ok() ? 1 : 0;
    if (report) *report = dup_string(r.to_text());
  });
}

void planesched_schedule_free(planesched_schedule* s) { delete s; }

int planesched_verify_construction(int n_orbitals, const char* mapping, int* passed,
                                   char** report) {
  return guarded([&] {
    require(mapping, "mapping");
    require(passed, "passed");
    const VerifyReport r = verify_construction(n_orbitals, circuits::parse_mapping(mapping));
    *passed = r.ok() ? 1 : 0;
    if (report) *report = dup_string(r.to_text());
  });
}

int planesched_render_plane(int n_orbitals, const char* anchor, char** out) {
  return guarded([&] {
    require(out, "out");
    if (n_orbitals < 2) fail(ErrorCode::kInvalidSize, "need at least 2 orbitals");
    const gf::Prime pi = plane_order_for(n_orbitals);
    std::optional<plane::Point> a;
    if (anchor && *anchor) a = parse_point(anchor, pi.value());
    *out = dup_string(cover::render_plane(pi, a));
  });
}

int planesched_hamiltonian_load(const char* path, planesched_hamiltonian** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    *out = new planesched_hamiltonian{load_hamiltonian(path)};
  });
}

int planesched_hamiltonian_random(int n_orbitals, uint64_t seed, planesched_hamiltonian** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new planesched_hamiltonian{random_hamiltonian(n_orbitals, seed)};
  });
}

int planesched_hamiltonian_orbitals(const planesched_hamiltonian* h, int* n) {
  return guarded([&] {
    require(h, "hamiltonian");
    require(n, "n");
    *n = h->value.n_orbitals();
  });
}

int planesched_hamiltonian_json(const planesched_hamiltonian* h, char** out) {
  return guarded([&] {
    require(h, "hamiltonian");
    require(out, "out");
    *out = dup_string(hamiltonian_to_json(h->value));
  });
}

void planesched_hamiltonian_free(planesched_hamiltonian* h) { delete h; }

int planesched_state_random(int qubits, uint64_t seed, planesched_state** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new planesched_state{sim::random_state(qubits, seed)};
  });
}

int planesched_state_basis(const char* bits, const char* mapping, planesched_state** out) {
  return guarded([&] {
    require(bits, "bits");
    require(mapping, "mapping");
    require(out, "out");
    *out = nullptr;
    const std::string b(bits);
    if (b.empty() || b.find_first_not_of("01") != std::string::npos) {
      fail(ErrorCode::kInvalidArgument, "basis state must be a string of 0 and 1");
    }
    const int qubits = static_cast<int>(b.size());
    if (qubits > sim::kMaxQubits) fail(ErrorCode::kSizeLimit, "basis state is too long");
    std::uint64_t occ = 0;
    for (int j = 0; j < qubits; ++j) occ |= std::uint64_t{b[j] == '1'} << j;
    const auto m = circuits::parse_mapping(mapping);
    *out = new planesched_state{sim::basis_state(qubits, sim::encode_occupation(occ, qubits, m))};
  });
}

int planesched_state_load(const char* path, planesched_state** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = nullptr;
    std::ifstream in(path);
    if (!in) fail(ErrorCode::kIo, std::string("cannot open '") + path + "'");
    std::vector<pauli::cplx> amps;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
      std::istringstream ls(line);
      double re = 0, im = 0;
      if (!(ls >> re)) {
        fail(ErrorCode::kParse, std::string(path) + ":" + std::to_string(lineno) + ": bad amplitude");
      }
      ls >> im;
      amps.emplace_back(re, im);
    }
    *out = new planesched_state{sim::from_amplitudes(std::move(amps))};
  });
}

int planesched_state_qubits(const planesched_state* st, int* qubits) {
  return guarded([&] {
    require(st, "state");
    require(qubits, "qubits");
    *qubits = st->value.qubits;
  });
}

void planesched_state_free(planesched_state* st) { delete st; }

int planesched_estimate(const planesched_schedule* s, const planesched_hamiltonian* h,
                        const planesched_state* st, uint64_t shots, uint64_t seed,
                        double* energy, char** report) {
  return guarded([&] {
    require(s, "schedule");
    require(h, "hamiltonian");
    require(st, "state");
    const Schedule& sched = s->value;
    if (h->value.n_orbitals() != sched.n_orbitals) {
      fail(ErrorCode::kInvalidArgument, "Hamiltonian has " + std::to_string(h->value.n_orbitals()) +
                                            " orbitals, schedule has " +
                                            std::to_string(sched.n_orbitals));
    }
    const EnergyModel model = energy_model(h->value);
    const sim::ExpectationReport r =
        shots == 0 ? sim::estimate_all(st->value, sched, &model)
                   : sim::estimate_sampled(st->value, sched, &model, shots, seed);
    if (energy) *energy = r.energy;
    if (!report) return;
    std::ostringstream os;
    os << std::setprecision(15);
    os << "mode: " << (shots == 0 ? "exact" : "sampled") << '\n'
       << "mapping: " << circuits::to_string(sched.mapping) << '\n'
       << "orbitals: " << sched.n_orbitals << '\n'
       << "shots_per_clique: " << shots << '\n'
       << "terms: " << r.values.size() << '\n'
       << "energy: " << r.energy << '\n';
    if (shots != 0) os << "std_error: " << r.std_error << '\n';
    os << "energy.constant: " << r.constant << '\n';
    for (Family f : {Family::kPart, Family::kOneBody, Family::kDiffSpin, Family::kSameSpin}) {
      os << "energy.family." << to_string(f) << ": " << r.family_energy[static_cast<int>(f)] << '\n';
    }
    const double direct = sim::direct_energy(st->value, h->value, sched.mapping);
    os << "energy.direct: " << direct << '\n'
       << "energy.abs_diff: " << std::abs(direct - r.energy) << '\n';
    *report = dup_string(os.str());
  });
}

int planesched_direct_energy(const planesched_hamiltonian* h, const planesched_state* st,
                             const char* mapping, double* energy) {
  return guarded([&] {
    require(h, "hamiltonian");
    require(st, "state");
    require(mapping, "mapping");
    require(energy, "energy");
    *energy = sim::direct_energy(st->value, h->value, circuits::parse_mapping(mapping));
  });
}

}  // extern "C"
