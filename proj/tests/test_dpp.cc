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

#include <cmath>
#include <map>

#include "doctest.h"
#include "dppcount/dpp.h"
#include "dppcount/error.h"
#include "dppcount/random_instances.h"
#include "oracles.h"

namespace dppcount {
namespace {

Graph Triangle() {
  return Graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "a", "c"}});
}

WeightedPSD Diag(std::vector<std::string> labels, std::vector<Rational> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return WeightedPSD(SymMatrix(std::move(labels), std::move(m)));
}

EnumerationCaps Wide() {
  EnumerationCaps caps;
  caps.max_tree_vertices = 32;
  caps.max_forest_edges = 40;
  return caps;
}

TEST_SUITE("dpp") {

TEST_CASE("Z_T examples") {
  const Graph g = Triangle();
  CHECK(ZTree(WeightedPSD(SymMatrix::Identity(g.EdgeIds())), g) == 3);
  const WeightedPSD diag = Diag(g.EdgeIds(), {2, 3, 5});
  const std::vector<Rational> w = {2, 3, 5};
  CHECK(ZTree(diag, g) == CountSpanningTrees(g, w));
  const Graph path({"a", "b", "c"}, {{"p", "a", "b"}, {"q", "b", "c"}});
  const WeightedPSD ones(SymMatrix({"p", "q"}, Matrix::FromRows({{1, 1}, {1, 1}})));
  CHECK(ZTree(ones, path) == 0);
  const Graph split({"a", "b", "c"}, {{"p", "a", "b"}});
  CHECK(ZTree(WeightedPSD(SymMatrix::Identity({"p"})), split) == 0);
}

TEST_CASE("Z_F examples") {
  const Graph g = Triangle();
  CHECK(ZForest(WeightedPSD(SymMatrix::Identity(g.EdgeIds())), g) == 7);
  CHECK(ZForest(WeightedPSD(SymMatrix::Identity(g.EdgeIds())).Scaled(2), g) == 19);
  const Graph empty({"a", "b"}, {});
  CHECK(ZForest(WeightedPSD(SymMatrix::Identity({})), empty) == 1);
}

TEST_CASE("diagonal kernels give weighted Kirchhoff") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = RandomConnectedGraph(rng, 2 + trial % 6, trial % 5);
    std::vector<Rational> w;
    for (std::size_t e = 0; e < g.num_edges(); ++e) w.emplace_back(1 + (e * 7 + trial) % 4, 1 + e % 3);
    for (Rational& x : w) x.canonicalize();
    CHECK(ZTree(Diag(g.EdgeIds(), w), g) == CountSpanningTrees(g, w));
  }
}

TEST_CASE("pruned search matches brute force sums") {
  Rng rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    CAPTURE(trial);
    const Graph g = RandomConnectedGraph(rng, 1 + trial % 8, trial % 6);
    const std::size_t rank = 1 + rng() % std::max<std::size_t>(1, g.num_edges());
    const WeightedPSD a = RandomWeightedPSD(rng, g.EdgeIds(), rank, trial % 2 == 0);
    const auto trees = oracle::SpanningTrees(g);
    const Rational zt = ZTree(a, g);
    CHECK(zt == oracle::SumMinors(a, trees));
    if (g.num_edges() <= 13) {
      const auto forests = oracle::Forests(g);
      const Rational zf = ZForest(a, g);
      CHECK(zf == oracle::SumMinors(a, forests));
      // Trees plus the remaining forests make up Z_F.
      Rational rest = 0;
      for (const auto& s : forests) {
        if (s.size() + 1 != g.num_vertices()) rest += a.PrincipalMinor(s);
      }
      CHECK(zt + rest == zf);
      CHECK(zt >= 0);
      CHECK(zf >= zt);
    }
  }
}

TEST_CASE("identity kernel counts trees and forests") {
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = RandomConnectedGraph(rng, 2 + trial % 6, trial % 4);
    const WeightedPSD id(SymMatrix::Identity(g.EdgeIds()));
    CHECK(ZTree(id, g) == CountSpanningTrees(g));
    CHECK(ZForest(id, g) == Rational(static_cast<unsigned long>(EnumerateForests(g).size())));
  }
}

TEST_CASE("label alignment") {
  const Graph g = Triangle();
  CHECK_THROWS_AS(ZTree(WeightedPSD(SymMatrix::Identity({"x", "y"})), g), InvalidArgument);
  CHECK_THROWS_AS(ZForest(WeightedPSD(SymMatrix::Identity({"x", "y", "w"})), g), InvalidArgument);
  // Labels in a different order are matched by name.
  const WeightedPSD shuffled = Diag({"z", "x", "y"}, {5, 2, 3});
  CHECK(ZTree(shuffled, g) == 31);
}

TEST_CASE("caps") {
  EnumerationCaps caps;
  caps.max_tree_vertices = 2;
  caps.max_forest_edges = 2;
  const Graph g = Triangle();
  const WeightedPSD id(SymMatrix::Identity(g.EdgeIds()));
  CHECK_THROWS_AS(ZTree(id, g, caps), CapExceeded);
  CHECK_THROWS_AS(ZForest(id, g, caps), CapExceeded);
}

TEST_CASE("partition-constrained sums") {
  const WeightedPSD id(SymMatrix::Identity({"1", "2", "3", "4"}));
  CHECK(PartitionConstrainedSum(id, std::vector<std::vector<std::string>>{{"1", "2"}, {"3", "4"}}) == 4);
  const WeightedPSD rank1(SymMatrix({"1", "2", "3", "4"},
                                    Matrix::FromRows({{1, 2, 1, 2}, {2, 4, 2, 4}, {1, 2, 1, 2}, {2, 4, 2, 4}})));
  CHECK(PartitionConstrainedSum(rank1, std::vector<IndexSet>{{0, 1}, {2, 3}}) == 0);
  Rng rng(14);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedPSD a = RandomWeightedPSD(rng, SymMatrix::DefaultLabels(4), 1 + trial % 4, true);
    const std::vector<IndexSet> parts = {{0, 1}, {2, 3}};
    Rational brute = 0;
    for (std::size_t i : parts[0]) {
      for (std::size_t j : parts[1]) brute += oracle::WeightedMinor(a, {i, j});
    }
    CHECK(PartitionConstrainedSum(a, parts) == brute);
  }
  CHECK_THROWS_AS(PartitionConstrainedSum(id, std::vector<IndexSet>{{0, 1}, {1, 2, 3}}), InvalidArgument);
  CHECK_THROWS_AS(PartitionConstrainedSum(id, std::vector<IndexSet>{{0, 1}, {2}}), InvalidArgument);
  CHECK_THROWS_AS(PartitionConstrainedSum(id, std::vector<IndexSet>{{0, 1}, {}, {2, 3}}), InvalidArgument);
  EnumerationCaps caps;
  caps.max_transversals = 3;
  CHECK_THROWS_AS(PartitionConstrainedSum(id, std::vector<IndexSet>{{0, 1}, {2, 3}}, caps), CapExceeded);
}

TEST_CASE("normalizer dispatch and support") {
  ConstrainedDPP dpp;
  dpp.graph = Triangle();
  dpp.matrix = Diag(dpp.graph->EdgeIds(), {1, 1, 2});
  dpp.constraint = Constraint::kSpanningTree;
  CHECK(Normalizer(dpp) == 5);
  const auto support = EnumerateSupport(dpp);
  Rational total = 0;
  for (const auto& s : support) total += s.minor;
  CHECK(total == 5);
  dpp.constraint = Constraint::kForest;
  CHECK(Normalizer(dpp) == 1 + 4 + 5);
  dpp.constraint = Constraint::kUnconstrained;
  CHECK(Normalizer(dpp) == 2 * 2 * 3);
  dpp.constraint = Constraint::kPartition;
  dpp.parts = {{"x", "y"}, {"z"}};
  CHECK(Normalizer(dpp) == 4);
  dpp.constraint = Constraint::kSpanningTree;
  dpp.graph.reset();
  CHECK_THROWS_AS(Normalizer(dpp), InvalidArgument);
}

TEST_CASE("exact sampling") {
  ConstrainedDPP dpp;
  dpp.graph = Triangle();
  dpp.matrix = Diag(dpp.graph->EdgeIds(), {1, 1, 2});
  dpp.constraint = Constraint::kSpanningTree;
  CHECK(SampleExact(dpp, 7, 50) == SampleExact(dpp, 7, 50));
  CHECK(SampleExact(dpp, 7, 50) != SampleExact(dpp, 8, 50));
  const std::size_t draws = 3000;
  std::map<std::vector<std::string>, std::size_t> counts;
  for (auto s : SampleExact(dpp, 99, draws)) {
    std::sort(s.begin(), s.end());
    ++counts[s];
  }
  const std::map<std::vector<std::string>, double> expected = {
      {{"x", "y"}, 1.0 / 5}, {{"x", "z"}, 2.0 / 5}, {{"y", "z"}, 2.0 / 5}};
  CHECK(counts.size() == 3);
  for (const auto& [set, p] : expected) {
    const double sigma = std::sqrt(draws * p * (1 - p));
    CHECK(std::abs(counts[set] - draws * p) <= 5 * sigma);
  }
  // Zero-minor subsets stay in the support list but never get drawn.
  ConstrainedDPP singular;
  singular.graph = Graph({"a", "b", "c"}, {{"p", "a", "b"}, {"q", "b", "c"}, {"r", "a", "c"}});
  singular.matrix = WeightedPSD(SymMatrix({"p", "q", "r"},
                                          Matrix::FromRows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}})));
  singular.constraint = Constraint::kSpanningTree;
  CHECK(EnumerateSupport(singular).size() == 3);
  for (auto s : SampleExact(singular, 1, 200)) {
    std::sort(s.begin(), s.end());
    CHECK(s != std::vector<std::string>{"p", "q"});
  }
  ConstrainedDPP dead = singular;
  dead.graph = Graph({"a", "b", "c"}, {{"p", "a", "b"}, {"q", "b", "c"}});
  dead.matrix = WeightedPSD(SymMatrix({"p", "q"}, Matrix::FromRows({{1, 1}, {1, 1}})));
  CHECK_THROWS_AS(SampleExact(dead, 1, 1), Error);
}

TEST_CASE("large gadget-sized search stays exact") {
  // Dense graph on 7 vertices with a low-rank kernel exercises the pruning.
  Rng rng(15);
  const Graph g = RandomConnectedGraph(rng, 7, 9);
  const WeightedPSD a = RandomWeightedPSD(rng, g.EdgeIds(), 4, true);
  CHECK(ZTree(a, g, Wide()) == oracle::SumMinors(a, oracle::SpanningTrees(g)));
}

}  // TEST_SUITE

}  // namespace
}  // namespace dppcount
