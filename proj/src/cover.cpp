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

#include "planesched/cover.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <utility>

#include "planesched/error.hpp"
#include "planesched/parallel.hpp"

namespace planesched::cover {

using plane::Line;
using plane::Plane;
using plane::Point;

Vertex::Vertex(int a, int b) : p(std::min(a, b)), q(std::max(a, b)) {}

std::ostream& operator<<(std::ostream& os, const Vertex& v) {
  return os << "(" << v.p << "," << v.q << ")";
}

std::vector<Point> place_s_points(gf::Prime pi) {
  const auto p = pi.value();
  std::vector<Point> s;
  s.reserve(p + 1);
  for (std::int64_t k = 0; k < p; ++k) {
    s.push_back(Point::gamma(static_cast<int>(k), static_cast<int>((k * k) % p)));
  }
  s.push_back(Point::alpha());
  return s;
}

Line vertex_line(const Vertex& v, const Plane& plane, const std::vector<Point>& s_points) {
  const int p = plane.order();
  if (v.p < 0 || v.q > p || static_cast<int>(s_points.size()) != p + 1) {
    fail(ErrorCode::kInvalidArgument, "vertex outside the oval of the plane");
  }
  if (!v.diagonal()) return plane.line_through(s_points[v.p], s_points[v.q]);
  if (v.p == p) return Line::alpha();
  const std::int64_t k = v.p;
  return Line::gamma(static_cast<int>((2 * k) % p), static_cast<int>((p - (k * k) % p) % p));
}

std::vector<PairClique> build_cover(gf::Prime pi, CoverStats* stats) {
  const Plane plane(pi);
  const int p = plane.order();
  const std::vector<Point> s = place_s_points(pi);

  // Which oval points, if any, a given line carries: slot 0/1 hold S indices.
  std::vector<std::pair<int, int>> oval_on_line(plane.size(), {-1, -1});
  std::vector<std::uint8_t> in_oval(plane.size(), 0);
  for (int k = 0; k <= p; ++k) {
    in_oval[plane.index(s[k])] = 1;
    for (int l = k + 1; l <= p; ++l) {
      oval_on_line[plane.index(plane.line_through(s[k], s[l]))] = {k, l};
    }
  }
  for (int k = 0; k <= p; ++k) {
    oval_on_line[plane.index(vertex_line(Vertex(k, k), plane, s))] = {k, k};
  }

  std::vector<int> anchors;
  anchors.reserve(static_cast<std::size_t>(p) * p);
  for (int idx = 0; idx < plane.size(); ++idx) {
    if (!in_oval[idx]) anchors.push_back(idx);
  }

  std::vector<PairClique> out(anchors.size());
  std::atomic<std::int64_t> evaluations{0};
  parallel_for(anchors.size(), [&](std::size_t a) {
    const Point anchor = plane.point_at(anchors[a]);
    PairClique& clique = out[a];
    clique.anchor = anchor;
    for (int l = 0; l <= p; ++l) {
      const Line line = plane.line_through(anchor, s[l]);
      const auto [first, second] = oval_on_line[plane.index(line)];
      if (first < 0) fail(ErrorCode::kInternalConsistency, "line through oval point unmapped");
      // A secant is reached from both of its oval points; keep it once.
      if (first == l || second == first) clique.members.emplace_back(first, second);
    }
    evaluations += p + 1;
    std::sort(clique.members.begin(), clique.members.end());
  });
  if (stats) stats->line_evaluations = evaluations.load();
  return out;
}

std::vector<PairClique> restrict_to(std::vector<PairClique> cliques, int n) {
  for (auto& c : cliques) {
    std::erase_if(c.members, [n](const Vertex& v) { return v.q >= n; });
  }
  return cliques;
}

namespace {

int oval_points_on(const Plane& plane, const Line& line, const std::vector<Point>& s) {
  int count = 0;
  for (const Point& pt : s) count += plane.contains(line, pt) ? 1 : 0;
  return count;
}

}  // namespace

bool check_no_three_collinear(gf::Prime pi) {
  const Plane plane(pi);
  const auto s = place_s_points(pi);
  for (int li = 0; li < plane.size(); ++li) {
    if (oval_points_on(plane, plane.line_at(li), s) >= 3) return false;
  }
  return true;
}

bool check_unique_tangent(gf::Prime pi) {
  const Plane plane(pi);
  const auto s = place_s_points(pi);
  for (const Point& pt : s) {
    int tangents = 0;
    for (const Line& line : plane.lines_through(pt)) {
      if (oval_points_on(plane, line, s) == 1) ++tangents;
    }
    if (tangents != 1) return false;
  }
  return true;
}

std::string render_plane(gf::Prime pi, std::optional<Point> anchor) {
  const Plane plane(pi);
  const int p = plane.order();
  const auto s = place_s_points(pi);

  std::vector<Line> marked;
  if (anchor) marked = plane.lines_through(*anchor);

  auto label = [&](const Point& pt) -> std::string {
    for (int k = 0; k <= p; ++k) {
      if (s[k] == pt) return "S" + std::to_string(k);
    }
    if (anchor && *anchor == pt) return "@";
    for (std::size_t m = 0; m < marked.size(); ++m) {
      if (plane.contains(marked[m], pt) && oval_points_on(plane, marked[m], s) > 0) {
        return "*";
      }
    }
    return ".";
  };

  std::ostringstream os;
  const int width = 4;
  os << "P_gamma(x,y)";
  os << std::string(static_cast<std::size_t>(std::max(0, width * p - 12)), ' ') << " | P_beta"
     << '\n';
  for (int y = p - 1; y >= 0; --y) {
    for (int x = 0; x < p; ++x) {
      std::string cell = label(Point::gamma(x, y));
      cell.resize(width, ' ');
      os << cell;
    }
    os << " | " << label(Point::beta(y)) << "   y=" << y << '\n';
  }
  os << "P_alpha: " << label(Point::alpha()) << '\n';
  if (anchor) {
    os << "lines through " << plane::to_string(*anchor) << ":";
    for (const Line& l : marked) os << ' ' << plane::to_string(l);
    os << '\n';
  }
  return os.str();
}

}  // namespace planesched::cover
