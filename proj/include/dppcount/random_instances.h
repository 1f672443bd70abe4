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

// Seeded generators for small random instances. Deterministic for a given
// std::mt19937_64 state.

#ifndef DPPCOUNT_RANDOM_INSTANCES_H_
#define DPPCOUNT_RANDOM_INSTANCES_H_

#include <random>
#include <string>
#include <vector>

#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/mixed_discriminant.h"

namespace dppcount {

using Rng = std::mt19937_64;

// n x rank matrix with integer entries in [-bound, bound].
Matrix RandomIntegerMatrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);

// V V^T for a random n x rank integer V; PSD of rank <= `rank`.
Matrix RandomGram(Rng& rng, std::size_t n, std::size_t rank, long bound = 2);

// Random Gram base with the given labels and weights drawn from
// {1, 2, 3, 1/2, 2/3} (all ones when `weighted` is false).
WeightedPSD RandomWeightedPSD(Rng& rng, std::vector<std::string> labels,
                              std::size_t rank, bool weighted);

// Connected graph on vertices "a1".."a{n}": a random spanning tree plus
// `extra` further edges (fewer if the graph becomes complete). Edge ids
// "e1", "e2", ...
Graph RandomConnectedGraph(Rng& rng, std::size_t vertices, std::size_t extra);

// Bipartite graph with sides "u1".."u{n}", "w1".."w{n}"; each pair is an
// edge with probability num/den.
BipartiteGraph RandomBipartite(Rng& rng, std::size_t side, unsigned num, unsigned den);

// n Gram matrices of dimension n and the given rank.
MDInstance RandomMDInstance(Rng& rng, std::size_t n, std::size_t rank);

}  // namespace dppcount

#endif  // DPPCOUNT_RANDOM_INSTANCES_H_
