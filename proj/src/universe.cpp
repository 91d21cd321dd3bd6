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

#include "planesched/universe.hpp"

#include <algorithm>
#include <sstream>

#include "planesched/cover.hpp"
#include "planesched/error.hpp"
#include "planesched/roundrobin.hpp"

namespace planesched {

const char* to_string(Spin s) { return s == Spin::kUp ? "up" : "down"; }

Spin parse_spin(const std::string& text) {
  if (text == "up") return Spin::kUp;
  if (text == "down") return Spin::kDown;
  fail(ErrorCode::kParse, "unknown spin '" + text + "'");
}

HoppingOp::HoppingOp(int a, int b, Spin s) : spin(s), p(std::min(a, b)), q(std::max(a, b)) {}

std::string to_string(const HoppingOp& op) {
  std::ostringstream os;
  if (op.diagonal()) {
    os << "n(" << op.p;
  } else {
    os << "A(" << op.p << "," << op.q;
  }
  os << "," << to_string(op.spin) << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const HoppingOp& op) { return os << to_string(op); }

const char* type_label(TermType t) {
  switch (t) {
    case TermType::kNumber: return "1-1";
    case TermType::kHopping: return "1-2";
    case TermType::kNumberNumberDiff: return "2-1";
    case TermType::kHoppingNumberDiff: return "2-2";
    case TermType::kHoppingHoppingDiff: return "2-3";
    case TermType::kNumberNumberSame: return "2-4";
    case TermType::kHoppingNumberSame: return "2-6";
    case TermType::kHoppingHoppingSame: return "2-7";
  }
  return "?";
}

bool ops_commute(const HoppingOp& x, const HoppingOp& y) {
  if (x.spin != y.spin) return true;
  if (x.diagonal() && y.diagonal()) return true;  // number operators always commute
  if (x == y) return true;
  return x.p != y.p && x.p != y.q && x.q != y.p && x.q != y.q;
}

bool is_commuting_set(const std::vector<HoppingOp>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    for (std::size_t j = i + 1; j < ops.size(); ++j) {
      if (!ops_commute(ops[i], ops[j])) return false;
    }
  }
  return true;
}

TermKey TermKey::one_body(HoppingOp op) { return TermKey{op, std::nullopt}; }

TermKey TermKey::two_body(HoppingOp x, HoppingOp y) {
  if (x == y) fail(ErrorCode::kInvalidArgument, "two-body term repeats " + to_string(x));
  if (x.spin == y.spin) {
    const bool share = x.p == y.p || x.p == y.q || x.q == y.p || x.q == y.q;
    if (share) {
      fail(ErrorCode::kInvalidArgument,
           "same-spin product " + to_string(x) + "*" + to_string(y) + " shares an index");
    }
  }
  if (y < x) std::swap(x, y);
  return TermKey{x, y};
}

TermType TermKey::type() const {
  if (!b) return a.diagonal() ? TermType::kNumber : TermType::kHopping;
  const int diag = (a.diagonal() ? 1 : 0) + (b->diagonal() ? 1 : 0);
  if (a.spin != b->spin) {
    if (diag == 2) return TermType::kNumberNumberDiff;
    if (diag == 1) return TermType::kHoppingNumberDiff;
    return TermType::kHoppingHoppingDiff;
  }
  if (diag == 2) return TermType::kNumberNumberSame;
  if (diag == 1) return TermType::kHoppingNumberSame;
  return TermType::kHoppingHoppingSame;
}

std::vector<HoppingOp> TermKey::ops() const {
  if (b) return {a, *b};
  return {a};
}

std::string to_string(const TermKey& t) {
  if (!t.b) return to_string(t.a);
  return to_string(t.a) + "*" + to_string(*t.b);
}

std::vector<TermKey> classify_terms(int n) {
  if (n < 2) fail(ErrorCode::kInvalidSize, "classify_terms needs n >= 2");
  const Spin spins[] = {Spin::kUp, Spin::kDown};
  std::vector<TermKey> out;

  for (Spin s : spins)
    for (int p = 0; p < n; ++p) out.push_back(TermKey::one_body({p, p, s}));
  for (Spin s : spins)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) out.push_back(TermKey::one_body({p, q, s}));

  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r)
      out.push_back(TermKey::two_body({p, p, Spin::kUp}, {r, r, Spin::kDown}));
  for (Spin s : spins)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int r = 0; r < n; ++r)
          out.push_back(TermKey::two_body({p, q, s}, {r, r, opposite(s)}));
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = r + 1; s < n; ++s)
          out.push_back(TermKey::two_body({p, q, Spin::kUp}, {r, s, Spin::kDown}));

  for (Spin s : spins)
    for (int p = 0; p < n; ++p)
      for (int r = p + 1; r < n; ++r) out.push_back(TermKey::two_body({p, p, s}, {r, r, s}));
  for (Spin s : spins)
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q)
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          out.push_back(TermKey::two_body({p, q, s}, {r, r, s}));
        }
  for (Spin s : spins)
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          for (int d = c + 1; d < n; ++d) {
            // The three perfect matchings of {a, b, c, d}.
            out.push_back(TermKey::two_body({a, b, s}, {c, d, s}));
            out.push_back(TermKey::two_body({a, c, s}, {b, d, s}));
            out.push_back(TermKey::two_body({a, d, s}, {b, c, s}));
          }
  return out;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::kPart: return "part";
    case Family::kOneBody: return "one_body";
    case Family::kDiffSpin: return "diff_spin";
    case Family::kSameSpin: return "same_spin";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::kPart, Family::kOneBody, Family::kDiffSpin, Family::kSameSpin}) {
    if (text == to_string(f)) return f;
  }
  fail(ErrorCode::kParse, "unknown clique family '" + text + "'");
}

std::string to_string(const CliqueSource& s) {
  std::ostringstream os;
  if (!s.rounds.empty()) {
    os << "rounds";
    for (int r : s.rounds) os << ' ' << r;
  }
  if (s.anchor) os << (s.rounds.empty() ? "" : "; ") << "anchor " << plane::to_string(*s.anchor);
  return os.str();
}

std::array<int, 4> Universe::family_counts() const {
  std::array<int, 4> counts{};
  for (const auto& c : cliques_) ++counts[static_cast<int>(c.family)];
  return counts;
}

int Universe::op_slot(const HoppingOp& op) const {
  if (op.p < 0 || op.q >= n_) fail(ErrorCode::kInvalidArgument, "operator index out of range");
  return (static_cast<int>(op.spin) * n_ + op.p) * n_ + op.q;
}

void Universe::index_ops() {
  containing_.assign(static_cast<std::size_t>(2) * n_ * n_, {});
  for (const auto& c : cliques_) {
    for (const auto& op : c.ops) containing_[op_slot(op)].push_back(c.id);
  }
}

int Universe::find_covering(const std::vector<HoppingOp>& ops) const {
  if (ops.empty()) return -1;
  for (const auto& op : ops)
    if (op.p < 0 || op.q < 0 || op.p >= n_ || op.q >= n_) return -1;  // no clique holds it
  std::vector<int> candidates = containing_[op_slot(ops.front())];
  for (std::size_t i = 1; i < ops.size() && !candidates.empty(); ++i) {
    const auto& other = containing_[op_slot(ops[i])];
    std::vector<int> kept;
    std::set_intersection(candidates.begin(), candidates.end(), other.begin(), other.end(),
                          std::back_inserter(kept));
    candidates = std::move(kept);
  }
  return candidates.empty() ? -1 : candidates.front();
}

int Universe::route(const TermKey& term) const {
  const int id = find_covering(term.ops());
  if (id < 0) fail(ErrorCode::kCoverageViolation, "no clique covers " + to_string(term));
  return id;
}

gf::Prime plane_order_for(int n) { return gf::smallest_prime_at_least(std::max(2, n - 1)); }

Universe build_universe(int n) {
  if (n < 2) fail(ErrorCode::kInvalidSize, "build_universe needs n >= 2");
  const gf::Prime prime = plane_order_for(n);
  Universe u(n, prime);
  const auto rounds = roundrobin::build_rounds(n);
  u.rounds_ = static_cast<int>(rounds.size());
  const Spin spins[] = {Spin::kUp, Spin::kDown};

  auto add = [&u](Family family, std::vector<HoppingOp> ops, CliqueSource source) {
    std::sort(ops.begin(), ops.end());
    MeasurementClique c;
    c.id = static_cast<int>(u.cliques_.size());
    c.family = family;
    c.ops = std::move(ops);
    c.source = std::move(source);
    u.cliques_.push_back(std::move(c));
    return &u.cliques_.back();
  };
  auto round_ops = [&rounds](int i, Spin s) {
    std::vector<HoppingOp> ops;
    for (const auto& [p, q] : rounds[i].pairs) ops.emplace_back(p, q, s);
    return ops;
  };

  {
    std::vector<HoppingOp> ops;
    for (Spin s : spins)
      for (int p = 0; p < n; ++p) ops.emplace_back(p, p, s);
    add(Family::kPart, std::move(ops), {});
  }

  for (Spin s : spins) {
    for (int i = 0; i < u.rounds_; ++i) {
      auto ops = round_ops(i, s);
      for (int r = 0; r < n; ++r) ops.emplace_back(r, r, opposite(s));
      add(Family::kOneBody, std::move(ops), {{i}, std::nullopt});
    }
  }

  for (int i = 0; i < u.rounds_; ++i) {
    for (int j = 0; j < u.rounds_; ++j) {
      auto ops = round_ops(i, Spin::kUp);
      auto down = round_ops(j, Spin::kDown);
      ops.insert(ops.end(), down.begin(), down.end());
      add(Family::kDiffSpin, std::move(ops), {{i, j}, std::nullopt});
    }
  }

  const auto pair_cliques = cover::restrict_to(cover::build_cover(prime), n);
  for (const auto& pc : pair_cliques) {
    std::vector<HoppingOp> ops;
    for (Spin s : spins)
      for (const auto& v : pc.members) ops.emplace_back(v.p, v.q, s);
    auto* c = add(Family::kSameSpin, std::move(ops), {{}, pc.anchor});
    c->degenerate = pc.degenerate();
  }

  u.index_ops();
  return u;
}

std::int64_t formula_clique_count(int n) {
  const std::int64_t m = n;
  return 2 * m * m - 2 * m + 1;
}

}  // namespace planesched
