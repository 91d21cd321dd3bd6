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

#include "planesched/graphcheck.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

#include "planesched/error.hpp"

namespace planesched::graphcheck {

bool edge_rule(const Vertex& a, const Vertex& b) {
  if (a == b) return false;
  if (a.diagonal() && b.diagonal()) return a.p != b.p;
  if (a.diagonal()) return a.p != b.p && a.p != b.q;
  if (b.diagonal()) return b.p != a.p && b.p != a.q;
  return a.p != b.p && a.p != b.q && a.q != b.p && a.q != b.q;
}

int Graph::id(const Vertex& v) const {
  if (v.p < 0 || v.q >= n_) return -1;
  return id_of_[static_cast<std::size_t>(v.p) * n_ + v.q];
}

bool Graph::adjacent(int a, int b) const {
  return (adj_[a][static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1U;
}

bool Graph::adjacent(const Vertex& a, const Vertex& b) const {
  const int ia = id(a), ib = id(b);
  return ia >= 0 && ib >= 0 && adjacent(ia, ib);
}

int Graph::degree(int v) const {
  int d = 0;
  for (std::uint64_t w : adj_[v]) d += std::popcount(w);
  return d;
}

Graph build_graph(int n, bool with_diagonal) {
  if (n < 2) fail(ErrorCode::kInvalidSize, "build_graph needs n >= 2");
  Graph g;
  g.n_ = n;
  if (with_diagonal) {
    for (int p = 0; p < n; ++p) g.vertices_.emplace_back(p, p);
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) g.vertices_.emplace_back(p, q);

  const std::size_t count = g.vertices_.size();
  g.id_of_.assign(static_cast<std::size_t>(n) * n, -1);
  for (std::size_t i = 0; i < count; ++i) {
    g.id_of_[static_cast<std::size_t>(g.vertices_[i].p) * n + g.vertices_[i].q] =
        static_cast<int>(i);
  }
  const std::size_t words = (count + 63) / 64;
  g.adj_.assign(count, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (!edge_rule(g.vertices_[i], g.vertices_[j])) continue;
      g.adj_[i][j / 64] |= std::uint64_t{1} << (j % 64);
      g.adj_[j][i / 64] |= std::uint64_t{1} << (i % 64);
      g.edges_.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

CoverReport verify_cover(const Graph& g, const std::vector<cover::PairClique>& cliques) {
  CoverReport report;
  report.cliques = static_cast<int>(cliques.size());
  report.edges = static_cast<int>(g.edges().size());

  std::unordered_map<std::int64_t, int> covered;
  const std::int64_t stride = static_cast<std::int64_t>(g.vertices().size());
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const auto& members = cliques[c].members;
    for (std::size_t i = 0; i < members.size(); ++i) {
      const int a = g.id(members[i]);
      if (a < 0) {
        report.not_cliques.push_back({static_cast<int>(c), members[i], members[i],
                                      "member outside the graph"});
        continue;
      }
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int b = g.id(members[j]);
        if (b < 0) continue;  // reported on its own row
        if (!g.adjacent(a, b)) {
          report.not_cliques.push_back(
              {static_cast<int>(c), members[i], members[j], "members are not adjacent"});
          continue;
        }
        ++covered[std::min(a, b) * stride + std::max(a, b)];
      }
    }
  }
  for (const auto& [a, b] : g.edges()) {
    const auto it = covered.find(static_cast<std::int64_t>(a) * stride + b);
    const int times = it == covered.end() ? 0 : it->second;
    ++report.multiplicity[times];
    if (times == 0) {
      report.uncovered.push_back({-1, g.vertices()[a], g.vertices()[b], "edge not covered"});
    }
  }
  return report;
}

std::string CoverReport::to_text() const {
  std::ostringstream os;
  os << "cliques: " << cliques << "\n";
  os << "edges: " << edges << "\n";
  os << "cliques_complete: " << (not_cliques.empty() ? "yes" : "no") << "\n";
  os << "edges_covered: " << (uncovered.empty() ? "yes" : "no") << "\n";
  os << "multiplicity:";
  for (const auto& [times, count] : multiplicity) os << ' ' << times << 'x' << count;
  os << "\n";
  for (const auto& v : not_cliques) {
    os << "violation: clique " << v.clique << " " << v.a << " " << v.b << ": " << v.what << "\n";
  }
  for (const auto& v : uncovered) {
    os << "violation: edge " << v.a << " " << v.b << ": " << v.what << "\n";
  }
  return os.str();
}

std::int64_t lower_bound(int n) {
  if (n < 4) return 0;
  return static_cast<std::int64_t>(n - 1) * (n - 3);
}

std::int64_t pair_edge_count(int n) {
  const std::int64_t m = n;
  if (m < 4) return 0;
  return m * (m - 1) * (m - 2) * (m - 3) / 8;
}

std::vector<std::vector<Vertex>> brute_force_cover(const Graph& g) {
  if (g.n() > 6) fail(ErrorCode::kSizeLimit, "brute_force_cover is limited to n <= 6");
  const int count = static_cast<int>(g.vertices().size());

  std::vector<std::vector<char>> done(count, std::vector<char>(count, 0));
  std::vector<int> open_degree(count, 0);
  std::size_t remaining = g.edges().size();
  for (const auto& [a, b] : g.edges()) {
    ++open_degree[a];
    ++open_degree[b];
  }

  std::vector<std::vector<Vertex>> cover;
  while (remaining > 0) {
    int best_a = -1, best_b = -1, best_score = -1;
    for (const auto& [a, b] : g.edges()) {
      if (done[a][b]) continue;
      const int score = open_degree[a] + open_degree[b];
      if (score > best_score) {
        best_score = score;
        best_a = a;
        best_b = b;
      }
    }

    std::vector<int> clique{best_a, best_b};
    for (;;) {
      int pick = -1, pick_gain = -1;
      for (int v = 0; v < count; ++v) {
        const bool fits = std::all_of(clique.begin(), clique.end(), [&](int m) {
          return m != v && g.adjacent(m, v);
        });
        if (!fits) continue;
        int gain = 0;
        for (int m : clique) gain += done[std::min(m, v)][std::max(m, v)] ? 0 : 1;
        if (gain > pick_gain) {
          pick_gain = gain;
          pick = v;
        }
      }
      if (pick < 0) break;
      clique.push_back(pick);
    }

    std::vector<Vertex> members;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      members.push_back(g.vertices()[clique[i]]);
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const int a = std::min(clique[i], clique[j]);
        const int b = std::max(clique[i], clique[j]);
        if (!done[a][b]) {
          done[a][b] = 1;
          --open_degree[a];
          --open_degree[b];
          --remaining;
        }
      }
    }
    std::sort(members.begin(), members.end());
    cover.push_back(std::move(members));
  }
  return cover;
}

int max_clique_size(const Graph& g) {
  const int count = static_cast<int>(g.vertices().size());
  int best = count > 0 ? 1 : 0;
  std::vector<int> current;
  std::function<void(int)> extend = [&](int start) {
    best = std::max(best, static_cast<int>(current.size()));
    for (int v = start; v < count; ++v) {
      const bool fits = std::all_of(current.begin(), current.end(),
                                    [&](int m) { return g.adjacent(m, v); });
      if (!fits) continue;
      current.push_back(v);
      extend(v + 1);
      current.pop_back();
    }
  };
  extend(0);
  return best;
}

}  // namespace planesched::graphcheck
