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

#ifndef DPPCOUNT_LINALG_H_
#define DPPCOUNT_LINALG_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "dppcount/rational.h"

namespace dppcount {

// Positions into a labelled matrix or an edge list. Sorted and duplicate-free
// wherever the library produces one.
using IndexSet = std::vector<std::size_t>;

// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix Identity(std::size_t n);
  static Matrix FromRows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool IsSquare() const { return rows_ == cols_; }
  bool IsSymmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix Transpose() const;
  // Rows and columns picked by `rows` and `cols`, in the given order.
  Matrix Submatrix(std::span<const std::size_t> rows,
                   std::span<const std::size_t> cols) const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Symmetric rational matrix indexed by a set of unique string labels
// (edge ids, ground-set elements).
class SymMatrix {
 public:
  SymMatrix() = default;
  // Throws InvalidArgument if `entries` is not square and symmetric, if the
  // label count does not match, or if labels repeat.
  SymMatrix(std::vector<std::string> labels, Matrix entries);

  // Labels "1".."n".
  static std::vector<std::string> DefaultLabels(std::size_t n);
  static SymMatrix Identity(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Matrix& entries() const { return entries_; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_(i, j);
  }

  std::optional<std::size_t> IndexOf(const std::string& label) const;
  // Throws InvalidArgument naming the label when it is unknown.
  std::size_t RequireIndex(const std::string& label) const;
  IndexSet RequireIndices(const std::vector<std::string>& labels) const;

 private:
  std::vector<std::string> labels_;
  Matrix entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// A PSD matrix of the form W^{1/2} A0 W^{1/2}, held as the rational base A0
// and the positive diagonal W. Principal minors are
//   det((W^{1/2} A0 W^{1/2})_S) = prod_{a in S} w_a * det((A0)_S),
// so the represented matrix never has to be formed and everything stays in Q.
class WeightedPSD {
 public:
  WeightedPSD() = default;
  // Unit weights. Throws NotPsd if `base` fails IsPsd.
  explicit WeightedPSD(SymMatrix base);
  // Throws NotPsd if `base` fails IsPsd and InvalidArgument if a weight is
  // not strictly positive or the weight count is wrong.
  WeightedPSD(SymMatrix base, std::vector<Rational> weights);

  std::size_t dim() const { return base_.dim(); }
  const SymMatrix& base() const { return base_; }
  const std::vector<std::string>& labels() const { return base_.labels(); }
  const std::vector<Rational>& weights() const { return weights_; }

  // Same base with new weights; the base is not re-validated.
  WeightedPSD WithWeights(std::vector<Rational> weights) const;
  // Every weight multiplied by `factor` (> 0): the matrix factor * M.
  WeightedPSD Scaled(const Rational& factor) const;

  // det(M_S) for positions S (any order, no duplicates).
  Rational PrincipalMinor(std::span<const std::size_t> subset) const;
  // det(base_S) only, without the weight product.
  Rational BaseMinor(std::span<const std::size_t> subset) const;

 private:
  void BuildIntegerBase();
  void CheckWeights() const;

  SymMatrix base_;
  std::vector<Rational> weights_;
  // base_ * common_den_ as integers, for fraction-free minors.
  std::vector<Integer> scaled_base_;
  Integer common_den_ = 1;
};

// Exact determinant by fraction-free (Bareiss) elimination. Pivot is the
// first nonzero entry of the current column; row swaps flip the sign. The
// 0x0 determinant is 1. Throws InvalidArgument if `m` is not square.
Rational DetBareiss(const Matrix& m);
Rational DetBareiss(const SymMatrix& m);

// Determinant of an n x n integer matrix stored row-major; `a` is consumed.
Integer IntegerDetBareiss(std::vector<Integer> a, std::size_t n);

// Principal minor by label. Throws InvalidArgument on an unknown label
// (malformed subset) or a repeated label.
Rational PrincipalMinor(const WeightedPSD& m,
                        const std::vector<std::string>& subset);

// e_1..e_n with det(lambda I + M) = lambda^n + e_1 lambda^{n-1} + ... + e_n,
// i.e. e_k is the sum of all k x k principal minors. Division-free
// (Berkowitz) on an integer rescaling of M. Throws InvalidArgument if M is
// not symmetric.
std::vector<Rational> CharPolyCoeffs(const Matrix& m);
std::vector<Rational> CharPolyCoeffs(const SymMatrix& m);

// A symmetric rational matrix is PSD iff every e_k above is >= 0.
bool IsPsd(const Matrix& m);
bool IsPsd(const SymMatrix& m);

// P M P^T = L diag(d) L^T with L unit lower triangular, all d >= 0.
// perm[k] is the original index placed at position k. Pivot: largest
// remaining diagonal entry, ties to the lowest original index. Once the
// largest remaining diagonal is zero the rest of L is left at identity.
struct LdltFactors {
  Matrix lower;
  std::vector<Rational> pivots;
  std::vector<std::size_t> perm;
};
// Throws NotPsd when a negative pivot (or a nonzero entry in a zero-diagonal
// block) shows up.
LdltFactors Ldlt(const Matrix& m);
LdltFactors Ldlt(const SymMatrix& m);

// sum_{S} det(M_S) = det(M + I), computed as det(A0 W + I).
Rational UnconstrainedNormalizer(const WeightedPSD& m);

}  // namespace dppcount

#endif  // DPPCOUNT_LINALG_H_
