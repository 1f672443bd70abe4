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

#ifndef DPPCOUNT_DPP_H_
#define DPPCOUNT_DPP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/rational.h"

namespace dppcount {

enum class Constraint { kSpanningTree, kForest, kPartition, kUnconstrained };

const char* ConstraintName(Constraint c);

// A DPP restricted to a family of subsets. For the graph constraints the
// matrix labels must be exactly the graph's edge ids; for partition and
// unconstrained the labels form an abstract ground set.
struct ConstrainedDPP {
  WeightedPSD matrix;
  std::optional<Graph> graph;
  Constraint constraint = Constraint::kUnconstrained;
  // Used only by Constraint::kPartition (capacity 1 per part).
  std::vector<std::vector<std::string>> parts;

  // Throws InvalidArgument when the pieces do not fit together.
  void Validate() const;
};

// Z_T(A, G): sum of det(A_S) over spanning trees S of G. 0 if G is
// disconnected. Throws InvalidArgument on a label mismatch and CapExceeded
// when |V| > caps.max_tree_vertices.
Rational ZTree(const WeightedPSD& a, const Graph& g,
               const EnumerationCaps& caps = {});

// Z_F(A, G): sum of det(A_S) over forests S of G, with det(A_empty) = 1.
// Throws as ZTree, with the cap on |E| > caps.max_forest_edges.
Rational ZForest(const WeightedPSD& a, const Graph& g,
                 const EnumerationCaps& caps = {});

// Sum of det(A_S) over transversals S (one label from every part). Parts
// must be nonempty, disjoint and cover the labels. Throws CapExceeded when
// the product of part sizes exceeds caps.max_transversals.
Rational PartitionConstrainedSum(const WeightedPSD& a,
                                 const std::vector<std::vector<std::string>>& parts,
                                 const EnumerationCaps& caps = {});
Rational PartitionConstrainedSum(const WeightedPSD& a,
                                 const std::vector<IndexSet>& parts,
                                 const EnumerationCaps& caps = {});

// The normalizer matching dpp.constraint.
Rational Normalizer(const ConstrainedDPP& dpp, const EnumerationCaps& caps = {});

// One admissible subset together with det(A_S).
struct WeightedSubset {
  std::vector<std::string> labels;
  Rational minor;
};

// Every subset admitted by the constraint, singular ones included, in the
// enumerators' deterministic order.
std::vector<WeightedSubset> EnumerateSupport(const ConstrainedDPP& dpp,
                                             const EnumerationCaps& caps = {});

// `count` i.i.d. draws with P(S) = det(A_S) / Z by inverse CDF over the
// enumerated support. A 128-bit uniform from std::mt19937_64(seed) is compared
// exactly against rational cumulative sums; singular subsets are never drawn.
// Throws InvalidArgument("empty support") when Z = 0.
std::vector<std::vector<std::string>> SampleExact(const ConstrainedDPP& dpp,
                                                  std::uint64_t seed,
                                                  std::size_t count,
                                                  const EnumerationCaps& caps = {});

}  // namespace dppcount

#endif  // DPPCOUNT_DPP_H_
