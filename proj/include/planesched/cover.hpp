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

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "planesched/gf.hpp"
#include "planesched/plane.hpp"

namespace planesched::cover {

/// Index pair (p, q) with p <= q. Diagonal vertices (p == p) stand for the
/// number operator on orbital p; off-diagonal ones for the hopping pair.
struct Vertex {
  int p = 0;
  int q = 0;

  Vertex() = default;
  Vertex(int a, int b);  // normalises so that p <= q

  bool diagonal() const noexcept { return p == q; }
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Vertex& v);

struct PairClique {
  plane::Point anchor;
  std::vector<Vertex> members;  // sorted ascending

  /// Fewer than two members: still a measurement setting, but covers no edge.
  bool degenerate() const noexcept { return members.size() < 2; }
};

/// The oval S(k) = Gamma(k, k^2), k < p, and S(p) = Alpha.
std::vector<plane::Point> place_s_points(gf::Prime pi);

/// Line associated with a vertex: the secant through S(p) and S(q), or for a
/// diagonal vertex the unique tangent at S(p), taken in closed form as
/// L_alpha at S(pi) and Gamma(2k, -k^2) otherwise.
plane::Line vertex_line(const Vertex& v, const plane::Plane& plane,
                        const std::vector<plane::Point>& s_points);

struct CoverStats {
  std::int64_t line_evaluations = 0;  // line_through calls made while grouping
};

/// One clique per point outside S, in canonical point order. Vertices range
/// over indices [0, pi]; use `restrict_to` for smaller orbital counts.
std::vector<PairClique> build_cover(gf::Prime pi, CoverStats* stats = nullptr);

/// Drops members that mention an index >= n. Clique count is unchanged.
std::vector<PairClique> restrict_to(std::vector<PairClique> cliques, int n);

/// No line of the plane carries three or more points of S.
bool check_no_three_collinear(gf::Prime pi);
/// Every S(k) has exactly one line meeting S only at S(k).
bool check_unique_tangent(gf::Prime pi);

/// Text grid of the affine part (y rows top-down, x columns) plus the points
/// at infinity, with the oval labelled and the lines through `anchor` marked.
std::string render_plane(gf::Prime pi, std::optional<plane::Point> anchor = std::nullopt);

}  // namespace planesched::cover
