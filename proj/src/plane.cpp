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

#include "planesched/plane.hpp"

#include <sstream>

#include "planesched/error.hpp"

namespace planesched::plane {

std::string to_string(const Point& p) {
  switch (p.kind) {
    case PointKind::kAlpha: return "P_alpha";
    case PointKind::kBeta: return "P_beta(" + std::to_string(p.y) + ")";
    case PointKind::kGamma:
      return "P_gamma(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  }
  return "?";
}

std::string to_string(const Line& l) {
  switch (l.kind) {
    case LineKind::kAlpha: return "L_alpha";
    case LineKind::kBeta: return "L_beta(" + std::to_string(l.i) + ")";
    case LineKind::kGamma:
      return "L_gamma(" + std::to_string(l.i) + "," + std::to_string(l.j) + ")";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const Point& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const Line& l) { return os << to_string(l); }

Plane::Plane(gf::Prime order) : prime_(order) {
  const int p = this->order();
  size_ = p * p + p + 1;
  line_points_.reserve(static_cast<std::size_t>(size_) * (p + 1));
  incident_.assign(static_cast<std::size_t>(size_) * size_, 0);

  for (int li = 0; li < size_; ++li) {
    const Line l = line_at(li);
    switch (l.kind) {
      case LineKind::kAlpha:
        line_points_.push_back(Point::alpha());
        for (int y = 0; y < p; ++y) line_points_.push_back(Point::beta(y));
        break;
      case LineKind::kBeta:
        line_points_.push_back(Point::alpha());
        for (int y = 0; y < p; ++y) line_points_.push_back(Point::gamma(l.i, y));
        break;
      case LineKind::kGamma:
        line_points_.push_back(Point::beta(l.i));
        for (int k = 0; k < p; ++k) line_points_.push_back(Point::gamma(k, (l.i * k + l.j) % p));
        break;
    }
    for (const Point& pt : points_on(l)) {
      incident_[static_cast<std::size_t>(li) * size_ + index(pt)] = 1;
    }
  }
}

void Plane::check(const Point& pt) const {
  const int p = order();
  const bool ok = pt.x >= 0 && pt.x < p && pt.y >= 0 && pt.y < p;
  if (!ok) fail(ErrorCode::kInvalidArgument, "point " + to_string(pt) + " outside plane");
}

void Plane::check(const Line& l) const {
  const int p = order();
  const bool ok = l.i >= 0 && l.i < p && l.j >= 0 && l.j < p;
  if (!ok) fail(ErrorCode::kInvalidArgument, "line " + to_string(l) + " outside plane");
}

int Plane::index(const Point& pt) const {
  check(pt);
  const int p = order();
  switch (pt.kind) {
    case PointKind::kAlpha: return 0;
    case PointKind::kBeta: return 1 + pt.y;
    case PointKind::kGamma: return 1 + p + pt.x * p + pt.y;
  }
  return -1;
}

int Plane::index(const Line& l) const {
  check(l);
  const int p = order();
  switch (l.kind) {
    case LineKind::kAlpha: return 0;
    case LineKind::kBeta: return 1 + l.i;
    case LineKind::kGamma: return 1 + p + l.i * p + l.j;
  }
  return -1;
}

Point Plane::point_at(int idx) const {
  const int p = order();
  if (idx < 0 || idx >= size_) fail(ErrorCode::kInvalidArgument, "point index out of range");
  if (idx == 0) return Point::alpha();
  if (idx <= p) return Point::beta(idx - 1);
  const int r = idx - 1 - p;
  return Point::gamma(r / p, r % p);
}

Line Plane::line_at(int idx) const {
  const int p = order();
  if (idx < 0 || idx >= size_) fail(ErrorCode::kInvalidArgument, "line index out of range");
  if (idx == 0) return Line::alpha();
  if (idx <= p) return Line::beta(idx - 1);
  const int r = idx - 1 - p;
  return Line::gamma(r / p, r % p);
}

std::span<const Point> Plane::points_on(const Line& l) const {
  const std::size_t row = static_cast<std::size_t>(index(l)) * (order() + 1);
  return {line_points_.data() + row, static_cast<std::size_t>(order() + 1)};
}

bool Plane::contains(const Line& l, const Point& pt) const {
  return incident_[static_cast<std::size_t>(index(l)) * size_ + index(pt)] != 0;
}

Line Plane::line_through(const Point& a, const Point& b) const {
  check(a);
  check(b);
  if (a == b) fail(ErrorCode::kDegenerateInput, "line_through: identical points " + to_string(a));

  // Order the pair so that a.kind <= b.kind; every case below is symmetric.
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) return line_through(b, a);

  switch (a.kind) {
    case PointKind::kAlpha:
      if (b.kind == PointKind::kBeta) return Line::alpha();
      return Line::beta(b.x);
    case PointKind::kBeta:
      if (b.kind == PointKind::kBeta) return Line::alpha();
      // Beta(i) fixes the slope; the intercept follows from b.
      return Line::gamma(a.y, (elem(b.y) - elem(a.y) * elem(b.x)).residue());
    case PointKind::kGamma: {
      if (a.x == b.x) return Line::beta(a.x);
      const gf::FieldElem slope = (elem(b.y) - elem(a.y)) / (elem(b.x) - elem(a.x));
      const gf::FieldElem intercept = elem(a.y) - slope * elem(a.x);
      return Line::gamma(static_cast<int>(slope.residue()),
                         static_cast<int>(intercept.residue()));
    }
  }
  fail(ErrorCode::kInternalConsistency, "line_through: unreachable");
}

Point Plane::intersection(const Line& a, const Line& b) const {
  check(a);
  check(b);
  if (a == b) fail(ErrorCode::kDegenerateInput, "intersection: identical lines " + to_string(a));
  if (static_cast<int>(a.kind) > static_cast<int>(b.kind)) return intersection(b, a);

  switch (a.kind) {
    case LineKind::kAlpha:
      if (b.kind == LineKind::kBeta) return Point::alpha();
      return Point::beta(b.i);
    case LineKind::kBeta:
      if (b.kind == LineKind::kBeta) return Point::alpha();
      return Point::gamma(a.i, (elem(b.i) * elem(a.i) + elem(b.j)).residue());
    case LineKind::kGamma: {
      if (a.i == b.i) return Point::beta(a.i);  // parallel lines meet at infinity
      const gf::FieldElem x = (elem(b.j) - elem(a.j)) / (elem(a.i) - elem(b.i));
      const gf::FieldElem y = elem(a.i) * x + elem(a.j);
      return Point::gamma(static_cast<int>(x.residue()), static_cast<int>(y.residue()));
    }
  }
  fail(ErrorCode::kInternalConsistency, "intersection: unreachable");
}

std::vector<Line> Plane::lines_through(const Point& pt) const {
  const int col = index(pt);
  std::vector<Line> out;
  out.reserve(order() + 1);
  for (int li = 0; li < size_; ++li) {
    if (incident_[static_cast<std::size_t>(li) * size_ + col]) out.push_back(line_at(li));
  }
  return out;
}

Plane build_plane(gf::Prime order) { return Plane(order); }

}  // namespace planesched::plane
