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

#include "planesched/hamiltonian.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "json.hpp"
#include "planesched/error.hpp"

namespace planesched {

namespace {

constexpr Spin kSpins[] = {Spin::kUp, Spin::kDown};

using json = nlohmann::json;

void flatten(const json& node, std::vector<double>& out) {
  if (node.is_array()) {
    for (const auto& child : node) flatten(child, out);
  } else if (node.is_number()) {
    out.push_back(node.get<double>());
  } else {
    fail(ErrorCode::kParse, "expected numbers in coefficient array");
  }
}

std::string entry_name(const char* tensor, std::initializer_list<int> idx) {
  std::ostringstream os;
  os << tensor;
  for (int i : idx) os << '[' << i << ']';
  return os.str();
}

}  // namespace

Hamiltonian::Hamiltonian(int n_orbitals) : n_(n_orbitals) {
  if (n_ < 1) fail(ErrorCode::kInvalidSize, "Hamiltonian needs at least one orbital");
  const std::size_t n = static_cast<std::size_t>(n_);
  h_.assign(2 * n * n, 0.0);
  g_.assign(4 * n * n * n * n, 0.0);
}

std::size_t Hamiltonian::h_index(Spin s, int p, int q) const {
  if (p < 0 || q < 0 || p >= n_ || q >= n_) fail(ErrorCode::kInvalidArgument, "h index");
  return (static_cast<std::size_t>(s) * n_ + p) * n_ + q;
}

std::size_t Hamiltonian::g_index(Spin s, Spin t, int p, int q, int r, int u) const {
  for (int i : {p, q, r, u}) {
    if (i < 0 || i >= n_) fail(ErrorCode::kInvalidArgument, "g index");
  }
  std::size_t idx = static_cast<std::size_t>(s) * 2 + static_cast<std::size_t>(t);
  for (int i : {p, q, r, u}) idx = idx * n_ + i;
  return idx;
}

void Hamiltonian::validate() const {
  auto bad = [](double a, double b) {
    return !std::isfinite(a) || !(std::abs(a - b) <= kSymmetryTolerance);
  };
  for (Spin s : kSpins) {
    for (int p = 0; p < n_; ++p)
      for (int q = 0; q < n_; ++q) {
        if (bad(h(s, p, q), h(s, q, p))) {
          fail(ErrorCode::kSymmetryViolation,
               entry_name("h", {static_cast<int>(s), p, q}) + " != its transpose");
        }
      }
  }
  for (Spin s : kSpins)
    for (Spin t : kSpins)
      for (int p = 0; p < n_; ++p)
        for (int q = 0; q < n_; ++q)
          for (int r = 0; r < n_; ++r)
            for (int u = 0; u < n_; ++u) {
              const double v = g(s, t, p, q, r, u);
              if (bad(v, g(s, t, q, p, r, u)) || bad(v, g(s, t, p, q, u, r))) {
                fail(ErrorCode::kSymmetryViolation,
                     entry_name("g", {static_cast<int>(s), static_cast<int>(t), p, q, r, u}) +
                         " breaks g_pqrs = g_qprs = g_pqsr");
              }
            }
}

Hamiltonian parse_hamiltonian(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("hamiltonian: ") + e.what());
  }
  for (const char* key : {"n_orbitals", "e_nuc", "h", "g"}) {
    if (!doc.contains(key)) fail(ErrorCode::kParse, std::string("hamiltonian: missing '") + key + "'");
  }
  if (!doc["n_orbitals"].is_number_integer()) fail(ErrorCode::kParse, "n_orbitals must be an integer");
  const int n = doc["n_orbitals"].get<int>();
  if (n < 1) fail(ErrorCode::kParse, "n_orbitals must be positive");
  Hamiltonian ham(n);
  if (!doc["e_nuc"].is_number()) fail(ErrorCode::kParse, "e_nuc must be a number");
  ham.set_e_nuc(doc["e_nuc"].get<double>());

  std::vector<double> h, g;
  flatten(doc["h"], h);
  flatten(doc["g"], g);
  if (h.size() != ham.h_data().size()) {
    fail(ErrorCode::kParse, "h has " + std::to_string(h.size()) + " entries, expected " +
                                std::to_string(ham.h_data().size()));
  }
  if (g.size() != ham.g_data().size()) {
    fail(ErrorCode::kParse, "g has " + std::to_string(g.size()) + " entries, expected " +
                                std::to_string(ham.g_data().size()));
  }
  std::size_t k = 0;
  for (Spin s : kSpins)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) ham.h(s, p, q) = h[k++];
  k = 0;
  for (Spin s : kSpins)
    for (Spin t : kSpins)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u) ham.g(s, t, p, q, r, u) = g[k++];
  ham.validate();
  return ham;
}

Hamiltonian load_hamiltonian(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open hamiltonian file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_hamiltonian(buffer.str());
  } catch (const Error& e) {
    fail(e.code(), path + ": " + e.what());
  }
}

std::string hamiltonian_to_json(const Hamiltonian& ham) {
  nlohmann::ordered_json doc;
  doc["n_orbitals"] = ham.n_orbitals();
  doc["e_nuc"] = ham.e_nuc();
  doc["h"] = ham.h_data();
  doc["g"] = ham.g_data();
  return doc.dump() + "\n";
}

Hamiltonian random_hamiltonian(int n, std::uint64_t seed) {
  Hamiltonian ham(n);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  ham.set_e_nuc(std::uniform_real_distribution<double>(0.0, 2.0)(rng));

  for (Spin s : kSpins)
    for (int p = 0; p < n; ++p)
      for (int q = p; q < n; ++q) {
        const double v = normal(rng);
        ham.h(s, p, q) = v;
        ham.h(s, q, p) = v;
      }

  // One draw per symmetry orbit, taken at its lexicographically smallest image.
  using Tuple = std::array<int, 6>;
  auto orbit = [](const Tuple& x) {
    const auto [s, t, p, q, r, u] = x;
    return std::array<Tuple, 8>{Tuple{s, t, p, q, r, u}, Tuple{s, t, q, p, r, u},
                                Tuple{s, t, p, q, u, r}, Tuple{s, t, q, p, u, r},
                                Tuple{t, s, r, u, p, q}, Tuple{t, s, u, r, p, q},
                                Tuple{t, s, r, u, q, p}, Tuple{t, s, u, r, q, p}};
  };
  std::map<Tuple, double> drawn;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u) {
              const auto images = orbit({s, t, p, q, r, u});
              const Tuple rep = *std::min_element(images.begin(), images.end());
              auto it = drawn.find(rep);
              if (it == drawn.end()) it = drawn.emplace(rep, 0.5 * normal(rng)).first;
              ham.g(static_cast<Spin>(s), static_cast<Spin>(t), p, q, r, u) = it->second;
            }
  return ham;
}

std::vector<std::pair<TermKey, double>> expand_single(Spin s, int p, int q) {
  if (p == q) return {{TermKey::one_body({p, p, s}), 2.0}};
  return {{TermKey::one_body({p, q, s}), 1.0}};
}

std::vector<std::pair<TermKey, double>> expand_product(Spin s, int p, int q, Spin t, int r,
                                                       int u) {
  if (p > q) std::swap(p, q);
  if (r > u) std::swap(r, u);
  const double fa = p == q ? 2.0 : 1.0;
  const double fb = r == u ? 2.0 : 1.0;

  if (s != t) return {{TermKey::two_body({p, q, s}, {r, u, t}), fa * fb}};

  const bool da = p == q;
  const bool db = r == u;
  if (da && db) {
    if (p == r) return {{TermKey::one_body({p, p, s}), 4.0}};  // n_p^2 = n_p
    return {{TermKey::two_body({p, p, s}, {r, r, s}), 4.0}};
  }
  if (da || db) {
    const int c = da ? p : r;
    const int x = da ? r : p;
    const int y = da ? u : q;
    if (c != x && c != y) return {{TermKey::two_body({x, y, s}, {c, c, s}), 2.0}};
    // {A_xy, n_x} = A_xy, so Re<A_xy n_x> = <A_xy>/2; times 2 from A_cc.
    return {{TermKey::one_body({x, y, s}), 1.0}};
  }
  if (p == r && q == u) {
    // A_pq^2 = n_p + n_q - 2 n_p n_q
    return {{TermKey::one_body({p, p, s}), 1.0},
            {TermKey::one_body({q, q, s}), 1.0},
            {TermKey::two_body({p, p, s}, {q, q, s}), -2.0}};
  }
  const bool disjoint = p != r && p != u && q != r && q != u;
  if (disjoint) return {{TermKey::two_body({p, q, s}, {r, u, s}), 1.0}};

  // Exactly one shared index c; {A_ac, A_cb} = A_ab (1 - 2 n_c).
  const int c = (p == r || p == u) ? p : q;
  const int a = p == c ? q : p;
  const int b = r == c ? u : r;
  return {{TermKey::one_body({a, b, s}), 0.5}, {TermKey::two_body({a, b, s}, {c, c, s}), -1.0}};
}

EnergyModel energy_model(const Hamiltonian& ham) {
  const int n = ham.n_orbitals();
  std::map<TermKey, double> acc;
  for (Spin s : kSpins)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const double w = 0.5 * ham.h(s, p, q);
        for (const auto& [key, c] : expand_single(s, p, q)) acc[key] += w * c;
      }
  for (Spin s : kSpins)
    for (Spin t : kSpins)
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          for (int r = 0; r < n; ++r)
            for (int u = 0; u < n; ++u) {
              const double w = 0.125 * ham.g(s, t, p, q, r, u);
              for (const auto& [key, c] : expand_product(s, p, q, t, r, u)) acc[key] += w * c;
            }
  EnergyModel model;
  model.constant = ham.e_nuc();
  model.terms.assign(acc.begin(), acc.end());
  return model;
}

}  // namespace planesched
