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

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "planesched/gf.hpp"

namespace planesched::plane {

// Desarguesian projective plane of prime order p over Z/pZ.
//
// Points: one point at infinity `Alpha`, p points `Beta(y)` on the line at
// infinity, and the p*p affine points `Gamma(x, y)`.
// Lines:
//   LAlpha      = {Alpha, Beta(0..p-1)}
//   LBeta(i)    = {Alpha, Gamma(i, 0..p-1)}             (vertical x = i)
//   LGamma(i,j) = {Beta(i), Gamma(k, i*k + j) : k}      (y = i*x + j)

enum class PointKind : std::uint8_t { kAlpha, kBeta, kGamma };
enum class LineKind : std::uint8_t { kAlpha, kBeta, kGamma };

/// Coordinates are residues in [0, p). Unused coordinates are zero.
struct Point {
  PointKind kind = PointKind::kAlpha;
  int x = 0;
  int y = 0;

  static Point alpha() { return {PointKind::kAlpha, 0, 0}; }
  static Point beta(int y) { return {PointKind::kBeta, 0, y}; }
  static Point gamma(int x, int y) { return {PointKind::kGamma, x, y}; }

  friend bool operator==(const Point&, const Point&) = default;
};

struct Line {
  LineKind kind = LineKind::kAlpha;
  int i = 0;
  int j = 0;

  static Line alpha() { return {LineKind::kAlpha, 0, 0}; }
  static Line beta(int i) { return {LineKind::kBeta, i, 0}; }
  static Line gamma(int i, int j) { return {LineKind::kGamma, i, j}; }

  friend bool operator==(const Line&, const Line&) = default;
};

std::string to_string(const Point& p);
std::string to_string(const Line& l);
std::ostream& operator<<(std::ostream& os, const Point& p);
std::ostream& operator<<(std::ostream& os, const Line& l);

/// Immutable incidence structure. Points and lines are addressed by canonical
/// indices: Alpha = 0, Beta(y) = 1 + y, Gamma(x, y) = 1 + p + x*p + y (the
/// same scheme for lines).
class Plane {
 public:
  explicit Plane(gf::Prime order);

  gf::Prime prime() const noexcept { return prime_; }
  int order() const noexcept { return static_cast<int>(prime_.value()); }
  int size() const noexcept { return size_; }  // points == lines == p^2+p+1

  int index(const Point& p) const;
  int index(const Line& l) const;
  Point point_at(int index) const;
  Line line_at(int index) const;

  /// The p+1 points of `l`, in construction order.
  std::span<const Point> points_on(const Line& l) const;
  bool contains(const Line& l, const Point& p) const;

  /// Unique line through two distinct points, computed from coordinates.
  Line line_through(const Point& a, const Point& b) const;
  /// Unique common point of two distinct lines.
  Point intersection(const Line& a, const Line& b) const;
  /// All p+1 lines through `p`, by scanning the incidence table.
  std::vector<Line> lines_through(const Point& p) const;

 private:
  void check(const Point& p) const;
  void check(const Line& l) const;
  gf::FieldElem elem(int v) const { return gf::FieldElem(v, prime_); }

  gf::Prime prime_;
  int size_;
  std::vector<Point> line_points_;     // size_ * (p + 1), row per line
  std::vector<std::uint8_t> incident_;  // size_ * size_, [line][point]
};

Plane build_plane(gf::Prime order);

}  // namespace planesched::plane
