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

#include "dppcount/graph.h"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

#include "dppcount/error.h"

namespace dppcount {

EnumerationCaps EnumerationCaps::FromEnvironment() {
  EnumerationCaps caps;
  if (const char* env = std::getenv("DPP_MAX_ENUM")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) {
      caps.max_tree_vertices = static_cast<std::size_t>(value);
      caps.max_forest_edges = static_cast<std::size_t>(value);
    }
  }
  return caps;
}

// -------------------------------------------------------- union-find

RollbackUnionFind::RollbackUnionFind(std::size_t n)
    : parent_(n), size_(n, 1), components_(n) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t RollbackUnionFind::Find(std::size_t x) const {
  while (parent_[x] != x) x = parent_[x];
  return x;
}

bool RollbackUnionFind::Union(std::size_t a, std::size_t b) {
  a = Find(a);
  b = Find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  history_.push_back(b);
  --components_;
  return true;
}

void RollbackUnionFind::Undo() {
  const std::size_t b = history_.back();
  history_.pop_back();
  const std::size_t a = parent_[b];
  size_[a] -= size_[b];
  parent_[b] = b;
  ++components_;
}

// ------------------------------------------------------------ Graph

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::tuple<std::string, std::string, std::string>> edges)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidArgument("graph needs at least one vertex");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!vertex_index_.emplace(vertices_[i], i).second) {
      throw InvalidArgument("duplicate vertex \"" + vertices_[i] + "\"");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  edges_.reserve(edges.size());
  for (auto& [id, a, b] : edges) {
    auto ia = vertex_index_.find(a);
    auto ib = vertex_index_.find(b);
    if (ia == vertex_index_.end() || ib == vertex_index_.end()) {
      throw InvalidArgument("edge \"" + id + "\" has an unknown endpoint");
    }
    if (ia->second == ib->second) {
      throw InvalidArgument("edge \"" + id + "\" is a self-loop");
    }
    auto key = std::minmax(ia->second, ib->second);
    if (!seen.insert(key).second) {
      throw InvalidArgument("edge \"" + id + "\" is parallel to an earlier edge");
    }
    if (!edge_index_.emplace(id, edges_.size()).second) {
      throw InvalidArgument("duplicate edge id \"" + id + "\"");
    }
    edges_.push_back(Edge{std::move(id), ia->second, ib->second});
  }
}

std::vector<std::string> Graph::EdgeIds() const {
  std::vector<std::string> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.push_back(e.id);
  return out;
}

std::optional<std::size_t> Graph::EdgeIndex(const std::string& id) const {
  auto it = edge_index_.find(id);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Graph::VertexIndex(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::IsConnected() const {
  RollbackUnionFind uf(vertices_.size());
  for (const Edge& e : edges_) uf.Union(e.u, e.v);
  return uf.components() == 1;
}

bool Graph::IsForest(std::span<const std::size_t> subset) const {
  RollbackUnionFind uf(vertices_.size());
  for (std::size_t i : subset) {
    if (i >= edges_.size()) throw InvalidArgument("edge position out of range");
    if (!uf.Union(edges_[i].u, edges_[i].v)) return false;
  }
  return true;
}

bool Graph::IsSpanningTree(std::span<const std::size_t> subset) const {
  return subset.size() + 1 == vertices_.size() && IsForest(subset);
}

// ---------------------------------------------------- BipartiteGraph

BipartiteGraph::BipartiteGraph(std::vector<std::string> left,
                               std::vector<std::string> right,
                               std::vector<std::pair<std::string, std::string>> edges)
    : left_(std::move(left)), right_(std::move(right)) {
  if (left_.size() != right_.size()) {
    throw InvalidArgument("bipartite graph must have |U| = |W|, got " +
                          std::to_string(left_.size()) + " and " +
                          std::to_string(right_.size()));
  }
  std::unordered_map<std::string, std::size_t> li, ri;
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (!li.emplace(left_[i], i).second) {
      throw InvalidArgument("duplicate left vertex \"" + left_[i] + "\"");
    }
  }
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (!ri.emplace(right_[i], i).second) {
      throw InvalidArgument("duplicate right vertex \"" + right_[i] + "\"");
    }
  }
  adjacency_.assign(left_.size(), std::vector<bool>(right_.size(), false));
  for (const auto& [u, w] : edges) {
    auto iu = li.find(u);
    auto iw = ri.find(w);
    if (iu == li.end() || iw == ri.end()) {
      throw InvalidArgument("bipartite edge (" + u + ", " + w +
                            ") has an unknown endpoint");
    }
    if (adjacency_[iu->second][iw->second]) {
      throw InvalidArgument("repeated bipartite edge (" + u + ", " + w + ")");
    }
    adjacency_[iu->second][iw->second] = true;
    edges_.emplace_back(iu->second, iw->second);
  }
}

bool BipartiteGraph::HasEdge(std::size_t u, std::size_t w) const {
  return adjacency_[u][w];
}

// ------------------------------------------------------ enumeration

namespace {

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const EdgeSetVisitor& visit)
      : g_(g), visit_(visit), uf_(g.num_vertices()) {}

  void Run() {
    if (!g_.IsConnected()) return;
    Recurse(0);
  }

 private:
  // Whether the current contraction plus every edge from `from` on still
  // connects the graph.
  bool StillConnected(std::size_t from) const {
    RollbackUnionFind probe = uf_;
    for (std::size_t e = from; e < g_.num_edges(); ++e) {
      probe.Union(g_.edges()[e].u, g_.edges()[e].v);
      if (probe.components() == 1) return true;
    }
    return probe.components() == 1;
  }

  void Recurse(std::size_t e) {
    if (chosen_.size() + 1 == g_.num_vertices()) {
      visit_(chosen_);
      return;
    }
    // Edges whose endpoints are already contracted together are loops.
    while (e < g_.num_edges() &&
           uf_.Find(g_.edges()[e].u) == uf_.Find(g_.edges()[e].v)) {
      ++e;
    }
    if (e == g_.num_edges()) return;
    const Edge& edge = g_.edges()[e];
    uf_.Union(edge.u, edge.v);
    chosen_.push_back(e);
    Recurse(e + 1);
    chosen_.pop_back();
    uf_.Undo();
    if (StillConnected(e + 1)) Recurse(e + 1);
  }

  const Graph& g_;
  const EdgeSetVisitor& visit_;
  RollbackUnionFind uf_;
  IndexSet chosen_;
};

class ForestEnumerator {
 public:
  ForestEnumerator(const Graph& g, const EdgeSetVisitor& visit)
      : g_(g), visit_(visit), uf_(g.num_vertices()) {}

  void Run() { Recurse(0); }

 private:
  void Recurse(std::size_t e) {
    if (e == g_.num_edges()) {
      visit_(chosen_);
      return;
    }
    const Edge& edge = g_.edges()[e];
    if (uf_.Union(edge.u, edge.v)) {
      chosen_.push_back(e);
      Recurse(e + 1);
      chosen_.pop_back();
      uf_.Undo();
    }
    Recurse(e + 1);
  }

  const Graph& g_;
  const EdgeSetVisitor& visit_;
  RollbackUnionFind uf_;
  IndexSet chosen_;
};

}  // namespace

void ForEachSpanningTree(const Graph& g, const EnumerationCaps& caps,
                         const EdgeSetVisitor& visit) {
  if (g.num_vertices() > caps.max_tree_vertices) {
    throw CapExceeded("max_tree_vertices", caps.max_tree_vertices,
                      g.num_vertices());
  }
  TreeEnumerator(g, visit).Run();
}

std::vector<IndexSet> EnumerateSpanningTrees(const Graph& g,
                                             const EnumerationCaps& caps) {
  std::vector<IndexSet> out;
  ForEachSpanningTree(g, caps, [&](std::span<const std::size_t> s) {
    out.emplace_back(s.begin(), s.end());
  });
  return out;
}

void ForEachForest(const Graph& g, const EnumerationCaps& caps,
                   const EdgeSetVisitor& visit) {
  if (g.num_edges() > caps.max_forest_edges) {
    throw CapExceeded("max_forest_edges", caps.max_forest_edges, g.num_edges());
  }
  ForestEnumerator(g, visit).Run();
}

std::vector<IndexSet> EnumerateForests(const Graph& g,
                                       const EnumerationCaps& caps) {
  std::vector<IndexSet> out;
  ForEachForest(g, caps, [&](std::span<const std::size_t> s) {
    out.emplace_back(s.begin(), s.end());
  });
  return out;
}

Rational CountSpanningTrees(const Graph& g,
                            std::span<const Rational> edge_weights) {
  if (!edge_weights.empty() && edge_weights.size() != g.num_edges()) {
    throw InvalidArgument("CountSpanningTrees: expected one weight per edge");
  }
  const std::size_t n = g.num_vertices();
  Matrix laplacian(n, n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const Rational w = edge_weights.empty() ? Rational(1) : edge_weights[e];
    if (w <= 0) throw InvalidArgument("CountSpanningTrees: weights must be positive");
    const Edge& edge = g.edges()[e];
    laplacian(edge.u, edge.u) += w;
    laplacian(edge.v, edge.v) += w;
    laplacian(edge.u, edge.v) -= w;
    laplacian(edge.v, edge.u) -= w;
  }
  // Drop the last vertex's row and column.
  IndexSet keep(n - 1);
  std::iota(keep.begin(), keep.end(), std::size_t{0});
  return DetBareiss(laplacian.Submatrix(keep, keep));
}

Integer CountPerfectMatchings(const BipartiteGraph& b,
                              const EnumerationCaps& caps) {
  const std::size_t n = b.side();
  if (n > caps.max_matching_side) {
    throw CapExceeded("max_matching_side", caps.max_matching_side, n);
  }
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  Integer count = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = b.HasEdge(i, perm[i]);
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace dppcount
