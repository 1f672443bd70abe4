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

#include "dppcount/random_instances.h"

#include <algorithm>
#include <set>
#include <utility>

namespace dppcount {
namespace {

std::size_t Below(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace

Matrix RandomIntegerMatrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  std::uniform_int_distribution<long> entry(-bound, bound);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(entry(rng));
  }
  return m;
}

Matrix RandomGram(Rng& rng, std::size_t n, std::size_t rank, long bound) {
  const Matrix v = RandomIntegerMatrix(rng, n, rank, bound);
  return v * v.Transpose();
}

WeightedPSD RandomWeightedPSD(Rng& rng, std::vector<std::string> labels,
                              std::size_t rank, bool weighted) {
  const std::size_t n = labels.size();
  SymMatrix base(std::move(labels), RandomGram(rng, n, rank));
  if (!weighted) return WeightedPSD(std::move(base));
  static const Rational kChoices[] = {Rational(1), Rational(2), Rational(3),
                                      Rational(1, 2), Rational(2, 3)};
  std::vector<Rational> weights(n);
  for (Rational& w : weights) w = kChoices[Below(rng, std::size(kChoices))];
  return WeightedPSD(std::move(base), std::move(weights));
}

Graph RandomConnectedGraph(Rng& rng, std::size_t vertices, std::size_t extra) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= vertices; ++i) names.push_back("a" + std::to_string(i));
  std::set<std::pair<std::size_t, std::size_t>> present;
  std::vector<std::pair<std::size_t, std::size_t>> chosen;
  auto add = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    if (a == b || !present.insert({a, b}).second) return false;
    chosen.emplace_back(a, b);
    return true;
  };
  // Random attachment gives a uniform-ish spanning tree on a shuffled order.
  std::vector<std::size_t> order(vertices);
  for (std::size_t i = 0; i < vertices; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < vertices; ++i) add(order[i], order[Below(rng, i)]);
  const std::size_t max_edges = vertices * (vertices - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t a = 0; a < vertices; ++a) {
    for (std::size_t b = a + 1; b < vertices; ++b) {
      if (!present.count({a, b})) missing.emplace_back(a, b);
    }
  }
  std::shuffle(missing.begin(), missing.end(), rng);
  for (std::size_t i = 0; i < extra && chosen.size() < max_edges && i < missing.size(); ++i) {
    add(missing[i].first, missing[i].second);
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    edges.emplace_back("e" + std::to_string(i + 1), names[chosen[i].first],
                       names[chosen[i].second]);
  }
  return Graph(std::move(names), std::move(edges));
}

BipartiteGraph RandomBipartite(Rng& rng, std::size_t side, unsigned num, unsigned den) {
  std::vector<std::string> left, right;
  for (std::size_t i = 1; i <= side; ++i) {
    left.push_back("u" + std::to_string(i));
    right.push_back("w" + std::to_string(i));
  }
  std::uniform_int_distribution<unsigned> coin(0, den - 1);
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < side; ++i) {
    for (std::size_t j = 0; j < side; ++j) {
      if (coin(rng) < num) edges.emplace_back(left[i], right[j]);
    }
  }
  return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

MDInstance RandomMDInstance(Rng& rng, std::size_t n, std::size_t rank) {
  std::vector<Matrix> matrices;
  for (std::size_t i = 0; i < n; ++i) matrices.push_back(RandomGram(rng, n, rank));
  return MDInstance(std::move(matrices));
}

}  // namespace dppcount
