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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "planesched/cover.hpp"

namespace planesched::graphcheck {

using cover::Vertex;

/// Commutation graph on index pairs. Two vertices are adjacent iff their
/// same-spin operators commute and are distinct: diagonal-diagonal with
/// different index, diagonal-pair with three distinct indices, pair-pair
/// with four distinct indices.
class Graph {
 public:
  int n() const noexcept { return n_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  /// Vertex id, or -1 when v is not part of this graph.
  int id(const Vertex& v) const;
  bool adjacent(int a, int b) const;
  bool adjacent(const Vertex& a, const Vertex& b) const;
  int degree(int v) const;

  friend Graph build_graph(int n, bool with_diagonal);

 private:
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<int> id_of_;                  // n*n lookup, -1 if absent
  std::vector<std::vector<std::uint64_t>> adj_;  // bitset rows
  std::vector<std::pair<int, int>> edges_;  // a < b
};

bool edge_rule(const Vertex& a, const Vertex& b);

/// Full graph (V1 and V2), or the pair-only subgraph when `with_diagonal` is false.
Graph build_graph(int n, bool with_diagonal = true);

struct CoverViolation {
  int clique = -1;  // index into the clique list
  Vertex a, b;      // offending pair (non-adjacent members, or the uncovered edge)
  std::string what;
};

struct CoverReport {
  int cliques = 0;
  int edges = 0;
  std::vector<CoverViolation> not_cliques;
  std::vector<CoverViolation> uncovered;
  std::map<int, int> multiplicity;  // times covered -> number of edges

  bool ok() const noexcept { return not_cliques.empty() && uncovered.empty(); }
  std::string to_text() const;
};

CoverReport verify_cover(const Graph& g, const std::vector<cover::PairClique>& cliques);

/// (n-1)(n-3) for n >= 4, else 0.
std::int64_t lower_bound(int n);

/// Edges of the pair-only subgraph, n(n-1)(n-2)(n-3)/8.
std::int64_t pair_edge_count(int n);

/// Greedy edge clique cover (max-degree-first edge seeding, grown to a maximal
/// clique). Desk-scale oracle; n <= 6 only.
std::vector<std::vector<Vertex>> brute_force_cover(const Graph& g);

/// Exhaustive maximum clique size; intended for small graphs.
int max_clique_size(const Graph& g);

}  // namespace planesched::graphcheck
