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

#ifndef DPPCOUNT_REDUCTIONS_H_
#define DPPCOUNT_REDUCTIONS_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dppcount/gadget.h"
#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/mixed_discriminant.h"
#include "dppcount/rational.h"

namespace dppcount {

// ------------------------------------------------------------------ oracles

enum class OracleMode { kExact, kNoisy, kAdversarial };
enum class OracleTarget { kSpanningTree, kForest };

// How a simulated approximate counter perturbs the exact value.
//   exact        the value itself
//   noisy        value * e^u, u uniform on [-delta, delta] (seeded)
//   adversarial  value * e^{+delta} or e^{-delta}
// delta is the tolerance requested by the caller unless `noise` overrides
// it. e^u is replaced by a 128-bit rational enclosure end chosen so the
// multiplier never leaves [e^-delta, e^delta].
struct OracleSpec {
  OracleMode mode = OracleMode::kExact;
  std::optional<Rational> noise;
  std::uint64_t seed = 0;
  int direction = 1;

  static OracleSpec Exact() { return {}; }
  static OracleSpec Noisy(std::uint64_t seed,
                          std::optional<Rational> noise = std::nullopt) {
    return {OracleMode::kNoisy, std::move(noise), seed, 1};
  }
  static OracleSpec Adversarial(int direction,
                                std::optional<Rational> noise = std::nullopt) {
    return {OracleMode::kAdversarial, std::move(noise), 0, direction};
  }
};

const char* OracleModeName(OracleMode mode);

// An approximate counter for Z_T or Z_F, called as (instance, delta).
class CountingOracle {
 public:
  virtual ~CountingOracle() = default;
  // Throws InvalidArgument unless 0 < delta < 1.
  virtual Rational Query(const WeightedPSD& a, const Graph& g,
                         const Rational& delta) = 0;
  // True when Query returns the exact normalizer.
  virtual bool exact() const = 0;
};

// Exact enumeration followed by the OracleSpec perturbation. Records every
// call so tests can check the calling contract.
class SimulatedOracle : public CountingOracle {
 public:
  SimulatedOracle(OracleTarget target, OracleSpec spec,
                  EnumerationCaps caps = {});

  Rational Query(const WeightedPSD& a, const Graph& g,
                 const Rational& delta) override;
  bool exact() const override { return spec_.mode == OracleMode::kExact; }

  const std::vector<Rational>& requested_deltas() const { return deltas_; }
  std::size_t calls() const { return deltas_.size(); }
  // Exact value behind the most recent answer.
  const Rational& last_exact() const { return last_exact_; }

 private:
  OracleTarget target_;
  OracleSpec spec_;
  EnumerationCaps caps_;
  std::mt19937_64 rng_;
  std::vector<Rational> deltas_;
  Rational last_exact_;
};

// Median of `repeats` inner answers; boosts a 3/4-success oracle.
class MedianOracle : public CountingOracle {
 public:
  MedianOracle(CountingOracle& inner, std::size_t repeats);
  Rational Query(const WeightedPSD& a, const Graph& g,
                 const Rational& delta) override;
  bool exact() const override { return inner_.exact(); }

 private:
  CountingOracle& inner_;
  std::size_t repeats_;
};

// ---------------------------------------------- perfect matchings via Z_T

// Z_T on the perfect-matching gadget; always an integer. Throws CapExceeded
// from the tree search.
Integer CountPmViaZt(const BipartiteGraph& b, const EnumerationCaps& caps = {});

// ---------------------------------------------------- Z_T by interpolation

// Coefficient of x^degree_bound in the unique polynomial of degree <=
// degree_bound through the first degree_bound + 1 points. Remaining points
// must lie on that polynomial. Throws InvalidArgument on duplicate x, too
// few points, or inconsistent extra points.
Rational LagrangeLeadingCoeff(const std::vector<std::pair<Rational, Rational>>& points,
                              std::size_t degree_bound);

// Z_T(A, G) as the x^{n-1} coefficient of Z(x) = Z_F(xA, G), n = |V|, from
// the values at x = 1..n. The oracle must be exact; throws InvalidArgument
// ("interpolation requires exact oracle") otherwise.
Rational ZtViaZf(const WeightedPSD& a, const Graph& g, CountingOracle& zf_oracle);
Rational ZtViaZf(const WeightedPSD& a, const Graph& g,
                 const EnumerationCaps& caps = {});

// ---------------------------------- approximation-preserving reductions

// Outcome of one reduction run. When `declared_zero` is set the witness
// search failed and the numeric fields other than epsilon/delta are unset.
struct ReductionReport {
  bool declared_zero = false;
  IndexSet witness;
  std::vector<std::string> witness_labels;
  Rational epsilon;
  Rational delta;
  // det(B + I) and det(B_witness).
  Rational normalizer;
  Rational witness_minor;
  Rational x;
  std::optional<Rational> y;
  Rational oracle_value;
  Rational estimate;
  std::size_t n = 0;
  std::size_t m = 0;
  Rational scale = 1;
};

// Mixed discriminant through one call of a Z_T oracle:
//   1. gadget from the partition-matroid encoding of K
//   2. witness by matroid intersection, else "D = 0"
//   3. x = det(B + I) / det(B_witness) * 2 / epsilon
//   4. Z^ = oracle(B o X, G) with delta = epsilon / 2
//   5. estimate = Z^ / (x^{2m} * scale)
// Throws InvalidArgument unless 0 < epsilon < 1.
ReductionReport ApReduceMdToZt(const MDInstance& k, const Rational& epsilon,
                               CountingOracle& oracle);

// The forest analogue with the bivariate reweighting:
//   y = det(B + I) / det(B_witness) * 4 / epsilon
//   x = det(B + I) / det(B_witness) * y^{2m-2n} * 4 / epsilon
//   estimate = Z^ / (x^{2m} y^{2n} * scale)
ReductionReport ApReduceMdToZf(const MDInstance& k, const Rational& epsilon,
                               CountingOracle& oracle);

// Result of checking an estimate against the true mixed discriminant.
// lower/upper are rational enclosures of the interval ends (rounded
// outward); `pass` is decided exactly.
struct BoundsCheck {
  Rational lower;
  Rational upper;
  bool pass = false;
};

// exact_oracle: estimate in [D, e^{epsilon/2} D]. Otherwise
// estimate in [e^{-epsilon} D, e^{epsilon} D]. A "D = 0" declaration passes
// iff D == 0.
BoundsCheck CheckSandwich(const ReductionReport& report, const Rational& d,
                          bool exact_oracle);

// ----------------------------------------------------- polynomial analyses

// Split of Z(x) = sum_{S in T} x^{2|S cap E_right|} det(B_S) by whether S
// contains E_right, plus the largest exponent seen outside.
struct TreePolynomialSplit {
  Rational containing_right;  // sum over trees with E_right in S
  Rational other;             // sum over the remaining trees
  std::size_t max_other_right = 0;
};
TreePolynomialSplit AnalyzeTreePolynomial(const GadgetInstance& inst,
                                          const EnumerationCaps& caps);

// The three-case split of Z(x, y) = sum_{S in F} x^{2|S cap E_r|}
// y^{2|S cap E_l|} det(B_S):
//   case 1: E_r in S, |S cap E_l| = n     (sigma = sum of det(B_S))
//   case 2: E_r in S, |S cap E_l| < n
//   case 3: E_r not in S
// `dominated` reports whether every monomial, evaluated at (x, y), is at
// most its case bound x^{2m}y^{2n}, x^{2m}y^{2n-2}, x^{2m-2}y^{2m}
// respectively, and whether x^{2m}y^{2n} dominates the other two bounds.
struct ForestPolynomialSplit {
  Rational sigma;
  Rational case2;
  Rational case3;
  std::size_t case1_count = 0;
  std::size_t case2_count = 0;
  std::size_t case3_count = 0;
  bool dominated = true;
};
ForestPolynomialSplit AnalyzeForestPolynomial(const GadgetInstance& inst,
                                              const Rational& x,
                                              const Rational& y,
                                              const EnumerationCaps& caps);

}  // namespace dppcount

#endif  // DPPCOUNT_REDUCTIONS_H_
