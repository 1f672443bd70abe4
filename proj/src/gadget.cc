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

#include "dppcount/gadget.h"

#include <algorithm>
#include <string>
#include <tuple>

#include "dppcount/error.h"

namespace dppcount {
namespace {

using EdgeList = std::vector<std::tuple<std::string, std::string, std::string>>;

std::string LayerVertex(std::size_t i) { return "v" + std::to_string(i + 1); }

// Assembles graph and block matrix from the per-layer middle-vertex names
// and the Gram block over the left edges (in the same layer-major order).
GadgetInstance Assemble(const std::vector<std::vector<std::string>>& middles,
                        const Matrix& left_block,
                        const std::vector<Rational>& left_weights) {
  const std::size_t n = middles.size();
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i <= n; ++i) vertices.push_back(LayerVertex(i));
  EdgeList left, right;
  GadgetInstance inst;
  inst.parts.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& mid : middles[i]) {
      vertices.push_back(mid);
      inst.parts[i].push_back(left.size());
      left.emplace_back("l:" + mid, LayerVertex(i), mid);
      right.emplace_back("r:" + mid, mid, LayerVertex(i + 1));
    }
  }
  const std::size_t m = left.size();
  if (left_block.rows() != m || left_weights.size() != m) {
    throw InvalidArgument("gadget: left block does not match the left edges");
  }
  EdgeList edges = left;
  edges.insert(edges.end(), right.begin(), right.end());
  std::vector<std::string> labels;
  for (const auto& e : edges) labels.push_back(std::get<0>(e));

  Matrix block(2 * m, 2 * m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) block(a, b) = left_block(a, b);
    block(m + a, m + a) = 1;
  }
  std::vector<Rational> weights = left_weights;
  weights.resize(2 * m, Rational(1));

  inst.graph = Graph(std::move(vertices), std::move(edges));
  inst.b = WeightedPSD(SymMatrix(std::move(labels), std::move(block)),
                       std::move(weights));
  for (std::size_t a = 0; a < m; ++a) {
    inst.left_edges.push_back(a);
    inst.right_edges.push_back(m + a);
  }
  return inst;
}

}  // namespace

void GadgetInstance::Validate() const {
  const std::size_t m = left_edges.size();
  if (right_edges.size() != m || graph.num_edges() != 2 * m || b.dim() != 2 * m) {
    throw InvalidArgument("malformed gadget: expected |E| = 2m with m left and m right edges");
  }
  if (graph.num_vertices() != parts.size() + m + 1) {
    throw InvalidArgument("malformed gadget: expected |V| = n + m + 1");
  }
  std::vector<int> side(2 * m, 0);
  for (std::size_t e : left_edges) {
    if (e >= 2 * m || side[e] != 0) throw InvalidArgument("malformed gadget: bad left edge set");
    side[e] = 1;
  }
  for (std::size_t e : right_edges) {
    if (e >= 2 * m || side[e] != 0) throw InvalidArgument("malformed gadget: bad right edge set");
    side[e] = 2;
  }
  for (std::size_t e = 0; e < 2 * m; ++e) {
    if (b.labels()[e] != graph.edges()[e].id) {
      throw InvalidArgument("malformed gadget: matrix labels differ from edge ids");
    }
  }
  for (std::size_t e : right_edges) {
    for (std::size_t f = 0; f < 2 * m; ++f) {
      const Rational expected = (e == f) ? 1 : 0;
      if (b.base()(e, f) != expected) {
        throw InvalidArgument("malformed gadget: B is not [[A', 0], [0, I]]");
      }
    }
  }
  std::vector<bool> in_part(2 * m, false);
  std::size_t covered = 0;
  for (const IndexSet& part : parts) {
    for (std::size_t e : part) {
      if (e >= 2 * m || side[e] != 1 || in_part[e]) {
        throw InvalidArgument("malformed gadget: parts must partition the left edges");
      }
      in_part[e] = true;
      ++covered;
    }
  }
  if (covered != m) throw InvalidArgument("malformed gadget: parts miss a left edge");
}

GadgetInstance BuildPmGadget(const BipartiteGraph& b) {
  const std::size_t n = b.side();
  if (b.left().size() != b.right().size()) {
    throw InvalidArgument("bipartite graph must be balanced");
  }
  // Left edges in layer order (u_i), then in insertion order within a layer.
  std::vector<std::pair<std::size_t, std::size_t>> f = b.edges();
  std::stable_sort(f.begin(), f.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<std::vector<std::string>> middles(n);
  for (const auto& [u, w] : f) {
    middles[u].push_back(b.left()[u] + "|" + b.right()[w]);
  }
  const std::size_t m = f.size();
  Matrix block(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      block(a, c) = f[a].second == f[c].second ? 1 : 0;
    }
  }
  GadgetInstance inst = Assemble(middles, block, std::vector<Rational>(m, Rational(1)));
  inst.source = b;
  inst.scale = 1;
  return inst;
}

GadgetInstance BuildMdGadget(const PartitionInstance& p) {
  const WeightedPSD& a = p.a;
  std::vector<bool> seen(a.dim(), false);
  std::size_t covered = 0;
  std::vector<std::size_t> order;
  std::vector<std::vector<std::string>> middles(p.parts.size());
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    if (p.parts[i].empty()) throw InvalidArgument("malformed partition: empty part");
    for (std::size_t j : p.parts[i]) {
      if (j >= a.dim() || seen[j]) {
        throw InvalidArgument("malformed partition: parts overlap or index out of range");
      }
      seen[j] = true;
      ++covered;
      order.push_back(j);
      middles[i].push_back("w" + a.labels()[j]);
    }
  }
  if (covered != a.dim()) throw InvalidArgument("malformed partition: labels not covered");
  const std::size_t m = order.size();
  Matrix block(m, m);
  std::vector<Rational> weights(m);
  for (std::size_t x = 0; x < m; ++x) {
    weights[x] = a.weights()[order[x]];
    for (std::size_t y = 0; y < m; ++y) block(x, y) = a.base()(order[x], order[y]);
  }
  GadgetInstance inst = Assemble(middles, block, weights);
  inst.source = p;
  inst.scale = p.scale;
  return inst;
}

GadgetInstance ReweightRankOne(const GadgetInstance& inst,
                               const Rational& left_factor,
                               const Rational& right_factor) {
  if (left_factor <= 0 || right_factor <= 0) {
    throw InvalidArgument("ReweightRankOne: factors must be positive");
  }
  std::vector<Rational> weights = inst.b.weights();
  const Rational left_sq = left_factor * left_factor;
  const Rational right_sq = right_factor * right_factor;
  for (std::size_t e : inst.left_edges) weights[e] *= left_sq;
  for (std::size_t e : inst.right_edges) weights[e] *= right_sq;
  GadgetInstance out = inst;
  out.b = inst.b.WithWeights(std::move(weights));
  return out;
}

}  // namespace dppcount
