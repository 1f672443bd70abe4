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

#ifndef DPPCOUNT_MATROID_H_
#define DPPCOUNT_MATROID_H_

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dppcount/gadget.h"
#include "dppcount/linalg.h"

namespace dppcount {

// A matroid given by its independence predicate over positions 0..size-1 of
// a labelled ground set. Matroid axioms are the caller's promise.
class IndependenceOracle {
 public:
  using Predicate = std::function<bool(std::span<const std::size_t>)>;

  IndependenceOracle(std::vector<std::string> ground, Predicate predicate)
      : ground_(std::move(ground)), predicate_(std::move(predicate)) {}

  std::size_t size() const { return ground_.size(); }
  const std::vector<std::string>& ground() const { return ground_; }
  bool IsIndependent(std::span<const std::size_t> subset) const {
    return predicate_(subset);
  }

 private:
  std::vector<std::string> ground_;
  Predicate predicate_;
};

// S independent iff det(M_S) > 0, i.e. the Gram vectors of S are linearly
// independent.
IndependenceOracle LinearMatroid(const WeightedPSD& m);

// S independent iff |S cap parts[i]| <= capacities[i] for every i. Elements
// outside every part are unconstrained. Throws InvalidArgument if parts
// overlap or sizes disagree.
IndependenceOracle PartitionMatroid(std::vector<std::string> ground,
                                    const std::vector<IndexSet>& parts,
                                    const std::vector<std::size_t>& capacities);

// A common independent set of exactly `target` elements, or nullopt when the
// largest common independent set is smaller. Augments along shortest paths
// of the exchange graph found by breadth-first search; sources, sinks and
// neighbours are scanned in ground order. Throws InvalidArgument if the
// ground sets differ or either oracle rejects the empty set.
std::optional<IndexSet> MatroidIntersection(const IndependenceOracle& first,
                                            const IndependenceOracle& second,
                                            std::size_t target);

// A set S with E_right in S, S a spanning tree of the gadget graph (so one
// left edge per layer) and det(B_S) > 0, or nullopt when none exists.
// E_right is contracted: B is the identity there, so det(B_S) is the minor
// of A' on S cap E_left, and the tree condition turns into a capacity-1
// partition matroid over the layers. Throws InvalidArgument on a malformed
// gadget.
std::optional<IndexSet> FindWitness(const GadgetInstance& inst);

}  // namespace dppcount

#endif  // DPPCOUNT_MATROID_H_
