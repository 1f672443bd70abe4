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

#include "dppcount/linalg.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "dppcount/error.h"

namespace dppcount {
namespace {

Integer LcmOfDenominators(std::span<const Rational> values) {
  Integer out = 1;
  for (const Rational& v : values) {
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den_mpz_t());
  }
  return out;
}

// Integer matrix c*M for the smallest c clearing every denominator.
std::vector<Integer> ClearDenominators(const Matrix& m, Integer* common) {
  std::vector<Rational> all;
  all.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) all.push_back(m(i, j));
  }
  *common = LcmOfDenominators(all);
  std::vector<Integer> out;
  out.reserve(all.size());
  for (const Rational& v : all) {
    out.push_back(v.get_num() * (*common / v.get_den()));
  }
  return out;
}

void RequireSymmetric(const Matrix& m, const char* who) {
  if (!m.IsSquare() || !m.IsSymmetric()) {
    throw InvalidArgument(std::string(who) + ": matrix is not symmetric");
  }
}

}  // namespace

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::Identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Matrix Matrix::FromRows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix out(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

bool Matrix::IsSymmetric() const {
  if (!IsSquare()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

Matrix Matrix::Transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

Matrix Matrix::Submatrix(std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw InvalidArgument("matrix sum: shape mismatch");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) {
    throw InvalidArgument("matrix difference: shape mismatch");
  }
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: shape mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix out = a;
  for (Rational& v : out.data_) v *= s;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ------------------------------------------------------------- SymMatrix

SymMatrix::SymMatrix(std::vector<std::string> labels, Matrix entries)
    : labels_(std::move(labels)), entries_(std::move(entries)) {
  if (!entries_.IsSquare() || entries_.rows() != labels_.size()) {
    throw InvalidArgument("SymMatrix: expected a " +
                          std::to_string(labels_.size()) + "x" +
                          std::to_string(labels_.size()) + " matrix");
  }
  if (!entries_.IsSymmetric()) {
    throw InvalidArgument("SymMatrix: matrix is not symmetric");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw InvalidArgument("SymMatrix: duplicate label \"" + labels_[i] + "\"");
    }
  }
}

std::vector<std::string> SymMatrix::DefaultLabels(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

SymMatrix SymMatrix::Identity(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return SymMatrix(std::move(labels), Matrix::Identity(n));
}

std::optional<std::size_t> SymMatrix::IndexOf(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t SymMatrix::RequireIndex(const std::string& label) const {
  auto idx = IndexOf(label);
  if (!idx) throw InvalidArgument("malformed subset: unknown label \"" + label + "\"");
  return *idx;
}

IndexSet SymMatrix::RequireIndices(const std::vector<std::string>& labels) const {
  IndexSet out;
  out.reserve(labels.size());
  for (const auto& l : labels) out.push_back(RequireIndex(l));
  return out;
}

// ----------------------------------------------------------- WeightedPSD

WeightedPSD::WeightedPSD(SymMatrix base)
    : base_(std::move(base)), weights_(base_.dim(), Rational(1)) {
  if (!IsPsd(base_)) throw NotPsd();
  BuildIntegerBase();
}

WeightedPSD::WeightedPSD(SymMatrix base, std::vector<Rational> weights)
    : base_(std::move(base)), weights_(std::move(weights)) {
  CheckWeights();
  if (!IsPsd(base_)) throw NotPsd();
  BuildIntegerBase();
}

void WeightedPSD::CheckWeights() const {
  if (weights_.size() != base_.dim()) {
    throw InvalidArgument("WeightedPSD: expected " + std::to_string(base_.dim()) +
                          " weights, got " + std::to_string(weights_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] <= 0) {
      throw InvalidArgument("WeightedPSD: weight of \"" + base_.labels()[i] +
                            "\" is not positive");
    }
  }
}

void WeightedPSD::BuildIntegerBase() {
  scaled_base_ = ClearDenominators(base_.entries(), &common_den_);
}

WeightedPSD WeightedPSD::WithWeights(std::vector<Rational> weights) const {
  WeightedPSD out = *this;
  out.weights_ = std::move(weights);
  out.CheckWeights();
  return out;
}

WeightedPSD WeightedPSD::Scaled(const Rational& factor) const {
  if (factor <= 0) throw InvalidArgument("WeightedPSD::Scaled: factor <= 0");
  std::vector<Rational> w = weights_;
  for (Rational& v : w) v *= factor;
  return WithWeights(std::move(w));
}

Rational WeightedPSD::BaseMinor(std::span<const std::size_t> subset) const {
  const std::size_t k = subset.size();
  const std::size_t n = dim();
  std::vector<Integer> sub;
  sub.reserve(k * k);
  for (std::size_t a : subset) {
    if (a >= n) throw InvalidArgument("malformed subset: index out of range");
    for (std::size_t b : subset) sub.push_back(scaled_base_[a * n + b]);
  }
  Integer det = IntegerDetBareiss(std::move(sub), k);
  if (det == 0) return 0;
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), common_den_.get_mpz_t(), k);
  Rational out(det, den);
  out.canonicalize();
  return out;
}

Rational WeightedPSD::PrincipalMinor(std::span<const std::size_t> subset) const {
  Rational out = BaseMinor(subset);
  if (out == 0) return out;
  for (std::size_t a : subset) out *= weights_[a];
  return out;
}

// ------------------------------------------------------------ operations

Integer IntegerDetBareiss(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw InvalidArgument("IntegerDetBareiss: bad size");
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  auto at = [&](std::size_t i, std::size_t j) -> Integer& { return a[i * n + j]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && at(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      sign = -sign;
    }
    const Integer& pkk = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Integer& aik = at(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer& aij = at(i, j);
        aij = pkk * aij - aik * at(k, j);
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = pkk;
  }
  Integer det = at(n - 1, n - 1);
  if (sign < 0) det = -det;
  return det;
}

Rational DetBareiss(const Matrix& m) {
  if (!m.IsSquare()) throw InvalidArgument("DetBareiss: matrix is not square");
  const std::size_t n = m.rows();
  // Clear denominators row by row; det(m) = det(scaled) / prod(row scales).
  std::vector<Integer> a;
  a.reserve(n * n);
  Integer scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer row_den = 1;
    for (std::size_t j = 0; j < n; ++j) {
      mpz_lcm(row_den.get_mpz_t(), row_den.get_mpz_t(), m(i, j).get_den_mpz_t());
    }
    for (std::size_t j = 0; j < n; ++j) {
      a.push_back(m(i, j).get_num() * (row_den / m(i, j).get_den()));
    }
    scale_product *= row_den;
  }
  Rational out(IntegerDetBareiss(std::move(a), n), scale_product);
  out.canonicalize();
  return out;
}

Rational DetBareiss(const SymMatrix& m) { return DetBareiss(m.entries()); }

Rational PrincipalMinor(const WeightedPSD& m,
                        const std::vector<std::string>& subset) {
  IndexSet idx = m.base().RequireIndices(subset);
  IndexSet sorted = idx;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidArgument("malformed subset: repeated label");
  }
  return m.PrincipalMinor(idx);
}

std::vector<Rational> CharPolyCoeffs(const Matrix& m) {
  RequireSymmetric(m, "CharPolyCoeffs");
  const std::size_t n = m.rows();
  Integer common;
  const std::vector<Integer> a = ClearDenominators(m, &common);
  auto at = [&](std::size_t i, std::size_t j) -> const Integer& {
    return a[i * n + j];
  };
  // Berkowitz: p_k(t) = det(t I - A_k) for the leading k x k block, built
  // from p_{k-1} via det(tI - A_k) = (t - a) p_{k-1}(t) - r adj(tI - A_{k-1}) c
  // and adj(tI - B) = sum_j t^{k-2-j} sum_{i<=j} p_i B^{j-i}.
  std::vector<Integer> p{1};  // coefficients of p_0, highest degree first
  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t last = k - 1;
    // s_t = row * B^t * col, B the leading (k-1) block.
    std::vector<Integer> s;
    std::vector<Integer> v(last);
    for (std::size_t i = 0; i < last; ++i) v[i] = at(i, last);
    for (std::size_t t = 0; t + 1 < k; ++t) {
      Integer dot = 0;
      for (std::size_t i = 0; i < last; ++i) dot += at(last, i) * v[i];
      s.push_back(dot);
      if (t + 2 < k) {
        std::vector<Integer> next(last);
        for (std::size_t i = 0; i < last; ++i) {
          Integer acc = 0;
          for (std::size_t j = 0; j < last; ++j) {
            if (v[j] != 0) acc += at(i, j) * v[j];
          }
          next[i] = acc;
        }
        v = std::move(next);
      }
    }
    const Integer& diag = at(last, last);
    std::vector<Integer> q(k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      q[i] += p[i];
      q[i + 1] -= diag * p[i];
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
      Integer acc = 0;
      for (std::size_t i = 0; i <= j; ++i) acc += p[i] * s[j - i];
      q[j + 2] -= acc;
    }
    p = std::move(q);
  }
  // det(t I - A) has coefficient (-1)^k e_k at t^{n-k}; undo the scaling.
  std::vector<Rational> e;
  e.reserve(n);
  Integer scale = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    scale *= common;
    Rational ek(k % 2 == 0 ? p[k] : Integer(-p[k]), scale);
    ek.canonicalize();
    e.push_back(ek);
  }
  return e;
}

std::vector<Rational> CharPolyCoeffs(const SymMatrix& m) {
  return CharPolyCoeffs(m.entries());
}

bool IsPsd(const Matrix& m) {
  RequireSymmetric(m, "IsPsd");
  for (const Rational& ek : CharPolyCoeffs(m)) {
    if (ek < 0) return false;
  }
  return true;
}

bool IsPsd(const SymMatrix& m) { return IsPsd(m.entries()); }

LdltFactors Ldlt(const Matrix& m) {
  RequireSymmetric(m, "Ldlt");
  const std::size_t n = m.rows();
  LdltFactors f;
  f.perm.resize(n);
  std::iota(f.perm.begin(), f.perm.end(), std::size_t{0});
  f.lower = Matrix::Identity(n);
  f.pivots.assign(n, Rational(0));
  Matrix work = m;  // permuted Schur complement lives in work[k.., k..]

  auto swap_symmetric = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(work(a, j), work(b, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(work(i, a), work(i, b));
    for (std::size_t j = 0; j < a; ++j) std::swap(f.lower(a, j), f.lower(b, j));
    std::swap(f.perm[a], f.perm[b]);
  };

  for (std::size_t k = 0; k < n; ++k) {
    // Largest remaining diagonal; ties to the lowest original index.
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      const int c = cmp(work(i, i), work(best, best));
      if (c > 0 || (c == 0 && f.perm[i] < f.perm[best])) best = i;
    }
    swap_symmetric(k, best);
    const Rational pivot = work(k, k);
    if (pivot < 0) throw NotPsd("matrix not PSD: negative pivot in LDL^T");
    if (pivot == 0) {
      // PSD forces the whole remaining block to vanish.
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (work(i, j) != 0) {
            throw NotPsd("matrix not PSD: nonzero entry in zero-diagonal block");
          }
        }
      }
      break;
    }
    f.pivots[k] = pivot;
    for (std::size_t i = k + 1; i < n; ++i) f.lower(i, k) = work(i, k) / pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (work(i, k) == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) {
        work(i, j) -= f.lower(i, k) * work(k, j);
      }
    }
  }
  return f;
}

LdltFactors Ldlt(const SymMatrix& m) { return Ldlt(m.entries()); }

Rational UnconstrainedNormalizer(const WeightedPSD& m) {
  const std::size_t n = m.dim();
  Matrix shifted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      shifted(i, j) = m.base()(i, j) * m.weights()[j];
    }
    shifted(i, i) += 1;
  }
  return DetBareiss(shifted);
}

}  // namespace dppcount
