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

#ifndef DPPCOUNT_GADGET_H_
#define DPPCOUNT_GADGET_H_

#include <variant>
#include <vector>

#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/mixed_discriminant.h"
#include "dppcount/rational.h"

namespace dppcount {

// The layered graph used by both hardness constructions:
//
//   layer vertices  v_1 .. v_{n+1}
//   middle vertices one per ground element j of layer i
//   E_left  = {(v_i, w_ij)},  E_right = {(w_ij, v_{i+1})}
//
// together with the block matrix B = [[A', 0], [0, I]] indexed by the edges.
// B's labels are the edge ids in graph order, so an edge position is also a
// matrix position. All E_left edges precede all E_right edges, grouped by
// layer.
struct GadgetInstance {
  Graph graph;
  WeightedPSD b;
  IndexSet left_edges;
  IndexSet right_edges;
  // E_left positions grouped by layer i (the edges leaving v_i).
  std::vector<IndexSet> parts;
  std::variant<BipartiteGraph, PartitionInstance> source;
  Rational scale = 1;

  std::size_t layers() const { return parts.size(); }
  std::size_t ground_size() const { return left_edges.size(); }

  // Throws InvalidArgument unless the edge split, block structure and part
  // grouping described above hold.
  void Validate() const;
};

// Perfect-matching gadget: one middle vertex per edge (u_i, w_j) of B; A' has
// a 1 exactly where two left edges reach the same w_j. Unit weights.
// Throws InvalidArgument when |U| != |W| (already enforced by
// BipartiteGraph).
GadgetInstance BuildPmGadget(const BipartiteGraph& b);

// Mixed-discriminant gadget: middle vertices w_{i,j} for j in P_i,
// A'[(i1,j1),(i2,j2)] = A[j1,j2], weights of A carried onto E_left and unit
// weights on E_right. Throws InvalidArgument on a malformed partition.
GadgetInstance BuildMdGadget(const PartitionInstance& p);

// B o (u u^T) with u = left_factor on E_left and right_factor on E_right,
// realized as a diagonal congruence: weights on E_left times left_factor^2,
// on E_right times right_factor^2. Throws InvalidArgument on a nonpositive
// factor.
GadgetInstance ReweightRankOne(const GadgetInstance& inst,
                               const Rational& left_factor,
                               const Rational& right_factor);

}  // namespace dppcount

#endif  // DPPCOUNT_GADGET_H_
