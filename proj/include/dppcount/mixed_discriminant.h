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

#ifndef DPPCOUNT_MIXED_DISCRIMINANT_H_
#define DPPCOUNT_MIXED_DISCRIMINANT_H_

#include <vector>

#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/rational.h"

namespace dppcount {

// n PSD matrices K^1..K^n, each n x n.
class MDInstance {
 public:
  MDInstance() = default;
  // Throws InvalidArgument on a dimension mismatch and NotPsd if some K^i is
  // not PSD.
  explicit MDInstance(std::vector<Matrix> matrices);

  std::size_t n() const { return matrices_.size(); }
  const std::vector<Matrix>& matrices() const { return matrices_; }

 private:
  std::vector<Matrix> matrices_;
};

// D(K^1..K^n): the coefficient of x_1 ... x_n in det(sum_i x_i K^i), by
// column multilinearity the sum over permutations s of det of the matrix
// whose j-th column is column j of K^{s(j)}. Throws CapExceeded when
// n > caps.max_md_dimension.
Rational MixedDiscriminant(const MDInstance& k, const EnumerationCaps& caps = {});

// A PSD matrix on m = n^2 labels "i:j" (i the source matrix, j a column of
// its LDL^T factor) with parts P_i = {"i:1".."i:n"} such that
//   sum over transversals S of det(A_S) = scale * D(K^1..K^n).
struct PartitionInstance {
  WeightedPSD a;
  std::vector<IndexSet> parts;
  Rational scale = 1;

  std::size_t n() const { return parts.size(); }
};

// Factors K^i = L^i diag(d^i) (L^i)^T (in the original index order), and
// takes the weighted Gram matrix of the columns: base entry
// <L^{i1}_{:,j1}, L^{i2}_{:,j2}>, weight d^i_j. Cauchy-Binet on
// det(sum_i x_i K^i) = det(V X V^T) then gives scale = 1. Columns with a
// zero pivot become zero vectors with unit weight.
PartitionInstance BuildPartitionInstance(const MDInstance& k);

}  // namespace dppcount

#endif  // DPPCOUNT_MIXED_DISCRIMINANT_H_
