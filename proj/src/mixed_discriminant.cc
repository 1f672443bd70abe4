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

#include "dppcount/mixed_discriminant.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "dppcount/error.h"

namespace dppcount {

MDInstance::MDInstance(std::vector<Matrix> matrices)
    : matrices_(std::move(matrices)) {
  const std::size_t n = matrices_.size();
  if (n == 0) throw InvalidArgument("mixed discriminant needs at least one matrix");
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& k = matrices_[i];
    if (k.rows() != n || k.cols() != n) {
      throw InvalidArgument("dimension mismatch: K^" + std::to_string(i + 1) +
                            " must be " + std::to_string(n) + "x" +
                            std::to_string(n));
    }
    if (!k.IsSymmetric()) {
      throw InvalidArgument("K^" + std::to_string(i + 1) + " is not symmetric");
    }
    if (!IsPsd(k)) throw NotPsd("K^" + std::to_string(i + 1) + " is not PSD");
  }
}

Rational MixedDiscriminant(const MDInstance& k, const EnumerationCaps& caps) {
  const std::size_t n = k.n();
  if (n > caps.max_md_dimension) {
    throw CapExceeded("max_md_dimension", caps.max_md_dimension, n);
  }
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::size_t{0});
  Rational total = 0;
  Matrix mixed(n, n);
  do {
    for (std::size_t j = 0; j < n; ++j) {
      const Matrix& source = k.matrices()[sigma[j]];
      for (std::size_t r = 0; r < n; ++r) mixed(r, j) = source(r, j);
    }
    total += DetBareiss(mixed);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

PartitionInstance BuildPartitionInstance(const MDInstance& k) {
  const std::size_t n = k.n();
  const std::size_t m = n * n;
  // vectors[i*n + j] is the j-th column of the un-permuted factor of K^i.
  std::vector<std::vector<Rational>> vectors(m, std::vector<Rational>(n));
  std::vector<Rational> weights(m, Rational(1));
  for (std::size_t i = 0; i < n; ++i) {
    const LdltFactors f = Ldlt(k.matrices()[i]);
    // P K P^T = L D L^T, so K = (P^T L) D (P^T L)^T and row r of L belongs
    // to original index perm[r].
    for (std::size_t j = 0; j < n; ++j) {
      if (f.pivots[j] == 0) continue;  // zero vector, unit weight
      weights[i * n + j] = f.pivots[j];
      for (std::size_t r = 0; r < n; ++r) {
        vectors[i * n + j][f.perm[r]] = f.lower(r, j);
      }
    }
  }
  Matrix gram(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      Rational dot = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (vectors[a][r] != 0 && vectors[b][r] != 0) {
          dot += vectors[a][r] * vectors[b][r];
        }
      }
      gram(a, b) = dot;
      gram(b, a) = dot;
    }
  }
  std::vector<std::string> labels;
  labels.reserve(m);
  std::vector<IndexSet> parts(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(std::to_string(i + 1) + ":" + std::to_string(j + 1));
      parts[i].push_back(i * n + j);
    }
  }
  PartitionInstance out{
      WeightedPSD(SymMatrix(std::move(labels), std::move(gram)), std::move(weights)),
      std::move(parts), Rational(1)};
  return out;
}

}  // namespace dppcount
