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

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "planesched/gf.hpp"
#include "planesched/plane.hpp"

namespace planesched {

enum class Spin : std::uint8_t { kUp = 0, kDown = 1 };

constexpr Spin opposite(Spin s) { return s == Spin::kUp ? Spin::kDown : Spin::kUp; }
const char* to_string(Spin s);
Spin parse_spin(const std::string& text);

/// A measured operator: the hopping operator a+_p a_q + a+_q a_p for p < q,
/// or the number operator n_p when p == q. Energy assembly accounts for the
/// factor in A_pp = 2 n_p.
struct HoppingOp {
  Spin spin = Spin::kUp;
  int p = 0;
  int q = 0;

  HoppingOp() = default;
  HoppingOp(int a, int b, Spin s);  // normalises so that p <= q

  bool diagonal() const noexcept { return p == q; }
  friend auto operator<=>(const HoppingOp&, const HoppingOp&) = default;
};

std::string to_string(const HoppingOp& op);
std::ostream& operator<<(std::ostream& os, const HoppingOp& op);

/// Independent term classes of the second-quantised Hamiltonian.
enum class TermType : std::uint8_t {
  kNumber,             // (1-1)  n_p
  kHopping,            // (1-2)  A_pq
  kNumberNumberDiff,   // (2-1)  n_p,s n_r,s'
  kHoppingNumberDiff,  // (2-2)  A_pq,s n_r,s'
  kHoppingHoppingDiff, // (2-3)  A_pq,s A_rs,s'
  kNumberNumberSame,   // (2-4)  n_p n_r, p != r
  kHoppingNumberSame,  // (2-6)  A_pq n_r, r not in {p, q}
  kHoppingHoppingSame, // (2-7)  A_pq A_rs, four distinct indices
};

const char* type_label(TermType t);  // "1-1", "2-7", ...

/// Canonical key of one independent term: one operator, or an ordered pair
/// (a < b) of operators whose product is the term.
struct TermKey {
  HoppingOp a;
  std::optional<HoppingOp> b;

  static TermKey one_body(HoppingOp op);
  /// Orders the pair; rejects same-spin pairs that share an index.
  static TermKey two_body(HoppingOp x, HoppingOp y);

  TermType type() const;
  std::vector<HoppingOp> ops() const;

  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

std::string to_string(const TermKey& t);

/// Every independent term for n orbitals, once, grouped by type.
std::vector<TermKey> classify_terms(int n);

enum class Family : std::uint8_t { kPart, kOneBody, kDiffSpin, kSameSpin };
const char* to_string(Family f);
Family parse_family(const std::string& text);

struct CliqueSource {
  std::vector<int> rounds;              // round-robin indices
  std::optional<plane::Point> anchor;   // plane point for same-spin cliques
};

std::string to_string(const CliqueSource& s);

struct MeasurementClique {
  int id = 0;
  Family family = Family::kPart;
  std::vector<HoppingOp> ops;  // sorted by (spin, p, q)
  CliqueSource source;
  /// Same-spin clique whose index-pair set has fewer than two vertices.
  bool degenerate = false;
};

/// Ops commute iff, within each spin, their index sets are disjoint.
bool ops_commute(const HoppingOp& x, const HoppingOp& y);
bool is_commuting_set(const std::vector<HoppingOp>& ops);

/// The full measurement universe for n orbitals: one particle-number clique,
/// per-spin round cliques dressed with the opposite spin's number operators,
/// the product of up and down rounds, and the same-spin plane cliques.
class Universe {
 public:
  int n_orbitals() const noexcept { return n_; }
  gf::Prime prime() const noexcept { return prime_; }
  int round_count() const noexcept { return rounds_; }
  const std::vector<MeasurementClique>& cliques() const noexcept { return cliques_; }
  std::array<int, 4> family_counts() const;

  /// Lowest clique id whose ops contain every op of the term.
  int route(const TermKey& term) const;
  /// Same lookup without throwing; -1 when nothing covers the term.
  int find_covering(const std::vector<HoppingOp>& ops) const;

  friend Universe build_universe(int n);

 private:
  Universe(int n, gf::Prime prime) : n_(n), prime_(prime) {}
  void index_ops();
  int op_slot(const HoppingOp& op) const;

  int n_;
  gf::Prime prime_;
  int rounds_ = 0;
  std::vector<MeasurementClique> cliques_;
  std::vector<std::vector<int>> containing_;  // op slot -> ascending clique ids
};

/// Plane order used for n orbitals: smallest prime >= max(2, n - 1).
gf::Prime plane_order_for(int n);

Universe build_universe(int n);

/// 2n^2 - 2n + 1, the universe size when n - 1 is an odd prime.
std::int64_t formula_clique_count(int n);

}  // namespace planesched
