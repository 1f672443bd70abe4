// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPPCOUNT_GRAPH_H_
#define DPPCOUNT_GRAPH_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dppcount/linalg.h"
#include "dppcount/rational.h"

namespace dppcount {

// Limits on every exhaustive enumeration in the library. The defaults keep
// desk-scale runs under a few seconds; callers working on larger gadgets
// raise them explicitly.
struct EnumerationCaps {
  std::size_t max_tree_vertices = 12;
  std::size_t max_forest_edges = 24;
  std::size_t max_transversals = std::size_t{1} << 20;
  std::size_t max_matching_side = 10;
  std::size_t max_md_dimension = 7;

  // Defaults, with max_tree_vertices and max_forest_edges both replaced by
  // $DPP_MAX_ENUM when that variable holds a positive integer.
  static EnumerationCaps FromEnvironment();
};

struct Edge {
  std::string id;
  std::size_t u;
  std::size_t v;
};

// Simple undirected graph with labelled vertices and stable edge ids. Edges
// keep their insertion order; "lowest edge" always means lowest position.
class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on self-loops, parallel edges, repeated vertex
  // labels or edge ids, or unknown endpoints.
  Graph(std::vector<std::string> vertices,
        std::vector<std::tuple<std::string, std::string, std::string>> edges);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<std::string> EdgeIds() const;

  std::optional<std::size_t> EdgeIndex(const std::string& id) const;
  std::optional<std::size_t> VertexIndex(const std::string& label) const;

  bool IsConnected() const;
  // True if the edges at `subset` contain no cycle.
  bool IsForest(std::span<const std::size_t> subset) const;
  // True if the edges at `subset` form a spanning tree.
  bool IsSpanningTree(std::span<const std::size_t> subset) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, std::size_t> vertex_index_;
  std::unordered_map<std::string, std::size_t> edge_index_;
};

// Bipartite graph B = (U, W; F) with |U| = |W|.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  // Throws InvalidArgument when |U| != |W|, labels repeat, an endpoint is
  // unknown or an edge repeats.
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 std::vector<std::pair<std::string, std::string>> edges);

  std::size_t side() const { return left_.size(); }
  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  // (left index, right index) pairs in insertion order.
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }
  bool HasEdge(std::size_t u, std::size_t w) const;

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<bool>> adjacency_;
};

// Visitor over edge sets given as sorted edge positions. The span is only
// valid during the call.
using EdgeSetVisitor = std::function<void(std::span<const std::size_t>)>;

// Every spanning tree exactly once, by deletion/contraction that branches on
// the lowest undecided edge (contract first, then delete). A disconnected
// graph yields nothing. Throws CapExceeded when |V| > caps.max_tree_vertices.
void ForEachSpanningTree(const Graph& g, const EnumerationCaps& caps,
                         const EdgeSetVisitor& visit);
std::vector<IndexSet> EnumerateSpanningTrees(const Graph& g,
                                             const EnumerationCaps& caps = {});

// Every acyclic edge subset (including the empty set) exactly once, include
// branch first. Throws CapExceeded when |E| > caps.max_forest_edges.
void ForEachForest(const Graph& g, const EnumerationCaps& caps,
                   const EdgeSetVisitor& visit);
std::vector<IndexSet> EnumerateForests(const Graph& g,
                                       const EnumerationCaps& caps = {});

// Weighted matrix-tree theorem: determinant of the reduced weighted
// Laplacian, i.e. sum over spanning trees of the product of edge weights.
// Unit weights when `edge_weights` is empty. 0 for disconnected graphs.
Rational CountSpanningTrees(const Graph& g,
                            std::span<const Rational> edge_weights = {});

// Number of perfect matchings by trying every bijection U -> W. Throws
// CapExceeded when |U| > caps.max_matching_side.
Integer CountPerfectMatchings(const BipartiteGraph& b,
                              const EnumerationCaps& caps = {});

// Union-find with undo, used by the enumerators and the DPP sums.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(std::size_t n);
  std::size_t Find(std::size_t x) const;
  // Returns false (and records nothing) if already joined.
  bool Union(std::size_t a, std::size_t b);
  // Undo the most recent successful Union.
  void Undo();
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::size_t> history_;
  std::size_t components_;
};

}  // namespace dppcount

#endif  // DPPCOUNT_GRAPH_H_
