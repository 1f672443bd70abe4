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

#include "dppcount/reductions.h"

#include <algorithm>

#include "dppcount/dpp.h"
#include "dppcount/error.h"
#include "dppcount/matroid.h"

namespace dppcount {
namespace {

constexpr unsigned kOracleBits = 128;

void RequireUnitInterval(const Rational& value, const char* what) {
  if (value <= 0 || value >= 1) {
    throw InvalidArgument(std::string(what) + " must lie in (0, 1), got " +
                          FormatRational(value));
  }
}

// Steps 1-3 shared by both reductions.
struct PreparedGadget {
  GadgetInstance gadget;
  std::optional<IndexSet> witness;
  Rational normalizer;
  Rational witness_minor;
};

PreparedGadget Prepare(const MDInstance& k) {
  PreparedGadget p;
  p.gadget = BuildMdGadget(BuildPartitionInstance(k));
  p.witness = FindWitness(p.gadget);
  if (p.witness) {
    p.normalizer = UnconstrainedNormalizer(p.gadget.b);
    p.witness_minor = p.gadget.b.PrincipalMinor(*p.witness);
  }
  return p;
}

ReductionReport StartReport(const PreparedGadget& p, const Rational& epsilon) {
  ReductionReport r;
  r.epsilon = epsilon;
  r.delta = epsilon / 2;
  r.n = p.gadget.layers();
  r.m = p.gadget.ground_size();
  r.scale = p.gadget.scale;
  if (!p.witness) {
    r.declared_zero = true;
    return r;
  }
  r.witness = *p.witness;
  for (std::size_t e : r.witness) r.witness_labels.push_back(p.gadget.b.labels()[e]);
  r.normalizer = p.normalizer;
  r.witness_minor = p.witness_minor;
  return r;
}

}  // namespace

const char* OracleModeName(OracleMode mode) {
  switch (mode) {
    case OracleMode::kExact: return "exact";
    case OracleMode::kNoisy: return "noisy";
    case OracleMode::kAdversarial: return "adversarial";
  }
  return "?";
}

// ------------------------------------------------------------------ oracles

SimulatedOracle::SimulatedOracle(OracleTarget target, OracleSpec spec,
                                 EnumerationCaps caps)
    : target_(target), spec_(std::move(spec)), caps_(caps), rng_(spec_.seed) {
  if (spec_.noise) RequireUnitInterval(*spec_.noise, "oracle noise");
  if (spec_.direction != 1 && spec_.direction != -1) {
    throw InvalidArgument("adversarial direction must be +1 or -1");
  }
}

Rational SimulatedOracle::Query(const WeightedPSD& a, const Graph& g,
                                const Rational& delta) {
  RequireUnitInterval(delta, "oracle tolerance delta");
  deltas_.push_back(delta);
  last_exact_ = target_ == OracleTarget::kSpanningTree ? ZTree(a, g, caps_)
                                                       : ZForest(a, g, caps_);
  const Rational spread = spec_.noise.value_or(delta);
  switch (spec_.mode) {
    case OracleMode::kExact:
      return last_exact_;
    case OracleMode::kAdversarial: {
      const Rational factor = spec_.direction > 0
                                  ? ExpEnclosure(spread, kOracleBits).lower
                                  : ExpEnclosure(-spread, kOracleBits).upper;
      return last_exact_ * factor;
    }
    case OracleMode::kNoisy: {
      // u = spread * (2r / 2^64 - 1), r uniform 64-bit.
      Rational u(Integer(static_cast<unsigned long>(rng_())), 1);
      mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), 63);
      u = spread * (u - 1);
      // Lower end for u >= 0 and upper end for u < 0 keeps the factor
      // inside [e^-spread, e^spread].
      const ExpBounds e = ExpEnclosure(u, kOracleBits);
      return last_exact_ * (u >= 0 ? e.lower : e.upper);
    }
  }
  return last_exact_;
}

MedianOracle::MedianOracle(CountingOracle& inner, std::size_t repeats)
    : inner_(inner), repeats_(repeats) {
  if (repeats_ == 0 || repeats_ % 2 == 0) {
    throw InvalidArgument("MedianOracle: repeats must be odd");
  }
}

Rational MedianOracle::Query(const WeightedPSD& a, const Graph& g,
                             const Rational& delta) {
  std::vector<Rational> answers;
  answers.reserve(repeats_);
  for (std::size_t i = 0; i < repeats_; ++i) answers.push_back(inner_.Query(a, g, delta));
  std::nth_element(answers.begin(), answers.begin() + repeats_ / 2, answers.end());
  return answers[repeats_ / 2];
}

// ---------------------------------------------------------- reductions

Integer CountPmViaZt(const BipartiteGraph& b, const EnumerationCaps& caps) {
  const GadgetInstance gadget = BuildPmGadget(b);
  const Rational z = ZTree(gadget.b, gadget.graph, caps);
  if (z.get_den() != 1) throw Error("CountPmViaZt: non-integral Z_T " + FormatRational(z));
  return z.get_num();
}

Rational LagrangeLeadingCoeff(const std::vector<std::pair<Rational, Rational>>& points,
                              std::size_t degree_bound) {
  const std::size_t k = degree_bound + 1;
  if (points.size() < k) {
    throw InvalidArgument("LagrangeLeadingCoeff: need " + std::to_string(k) +
                          " points, got " + std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].first == points[j].first) {
        throw InvalidArgument("LagrangeLeadingCoeff: duplicate x = " +
                              FormatRational(points[i].first));
      }
    }
  }
  // Newton divided differences over the first k points; the last one is the
  // leading coefficient.
  std::vector<Rational> coeffs(k);
  for (std::size_t i = 0; i < k; ++i) coeffs[i] = points[i].second;
  for (std::size_t level = 1; level < k; ++level) {
    for (std::size_t i = k - 1; i >= level; --i) {
      coeffs[i] = (coeffs[i] - coeffs[i - 1]) /
                  (points[i].first - points[i - level].first);
      if (i == level) break;
    }
  }
  for (std::size_t extra = k; extra < points.size(); ++extra) {
    const Rational& x = points[extra].first;
    Rational value = coeffs[k - 1];
    for (std::size_t i = k - 1; i-- > 0;) value = value * (x - points[i].first) + coeffs[i];
    if (value != points[extra].second) {
      throw InvalidArgument("LagrangeLeadingCoeff: point " + std::to_string(extra) +
                            " is inconsistent with degree " +
                            std::to_string(degree_bound));
    }
  }
  return coeffs[k - 1];
}

Rational ZtViaZf(const WeightedPSD& a, const Graph& g, CountingOracle& zf_oracle) {
  if (!zf_oracle.exact()) throw InvalidArgument("interpolation requires exact oracle");
  const std::size_t n = g.num_vertices();
  std::vector<std::pair<Rational, Rational>> points;
  points.reserve(n);
  const Rational nominal_delta(1, 2);
  for (std::size_t x = 1; x <= n; ++x) {
    const Rational xr(static_cast<unsigned long>(x));
    points.emplace_back(xr, zf_oracle.Query(a.Scaled(xr), g, nominal_delta));
  }
  return LagrangeLeadingCoeff(points, n - 1);
}

Rational ZtViaZf(const WeightedPSD& a, const Graph& g, const EnumerationCaps& caps) {
  SimulatedOracle oracle(OracleTarget::kForest, OracleSpec::Exact(), caps);
  return ZtViaZf(a, g, oracle);
}

ReductionReport ApReduceMdToZt(const MDInstance& k, const Rational& epsilon,
                               CountingOracle& oracle) {
  RequireUnitInterval(epsilon, "epsilon");
  const PreparedGadget p = Prepare(k);
  ReductionReport r = StartReport(p, epsilon);
  if (r.declared_zero) return r;
  r.x = p.normalizer / p.witness_minor * 2 / epsilon;
  const GadgetInstance weighted = ReweightRankOne(p.gadget, 1, r.x);
  r.oracle_value = oracle.Query(weighted.b, weighted.graph, r.delta);
  r.estimate = r.oracle_value / (Pow(r.x, 2 * r.m) * r.scale);
  return r;
}

ReductionReport ApReduceMdToZf(const MDInstance& k, const Rational& epsilon,
                               CountingOracle& oracle) {
  RequireUnitInterval(epsilon, "epsilon");
  const PreparedGadget p = Prepare(k);
  ReductionReport r = StartReport(p, epsilon);
  if (r.declared_zero) return r;
  const Rational ratio = p.normalizer / p.witness_minor;
  const Rational y = ratio * 4 / epsilon;
  r.y = y;
  r.x = ratio * Pow(y, 2 * r.m - 2 * r.n) * 4 / epsilon;
  const GadgetInstance weighted = ReweightRankOne(p.gadget, y, r.x);
  r.oracle_value = oracle.Query(weighted.b, weighted.graph, r.delta);
  r.estimate = r.oracle_value / (Pow(r.x, 2 * r.m) * Pow(y, 2 * r.n) * r.scale);
  return r;
}

BoundsCheck CheckSandwich(const ReductionReport& report, const Rational& d,
                          bool exact_oracle) {
  BoundsCheck check;
  if (report.declared_zero) {
    check.lower = 0;
    check.upper = 0;
    check.pass = d == 0;
    return check;
  }
  if (d <= 0) {
    check.lower = d;
    check.upper = d;
    check.pass = false;
    return check;
  }
  const Rational& est = report.estimate;
  const Rational lo_exp = exact_oracle ? Rational(0) : Rational(-report.epsilon);
  const Rational hi_exp = exact_oracle ? Rational(report.epsilon / 2) : report.epsilon;
  check.lower = ExpEnclosure(lo_exp, 64).lower * d;
  check.upper = ExpEnclosure(hi_exp, 64).upper * d;
  check.pass = CompareWithScaledExp(est, lo_exp, d) >= 0 &&
               CompareWithScaledExp(est, hi_exp, d) <= 0;
  return check;
}

// ---------------------------------------------------- polynomial analyses

TreePolynomialSplit AnalyzeTreePolynomial(const GadgetInstance& inst,
                                          const EnumerationCaps& caps) {
  std::vector<bool> is_right(inst.b.dim(), false);
  for (std::size_t e : inst.right_edges) is_right[e] = true;
  TreePolynomialSplit split;
  ForEachSpanningTree(inst.graph, caps, [&](std::span<const std::size_t> s) {
    const Rational minor = inst.b.PrincipalMinor(s);
    const std::size_t right = static_cast<std::size_t>(
        std::count_if(s.begin(), s.end(), [&](std::size_t e) { return is_right[e]; }));
    if (right == inst.right_edges.size()) {
      split.containing_right += minor;
    } else {
      split.other += minor;
      split.max_other_right = std::max(split.max_other_right, right);
    }
  });
  return split;
}

ForestPolynomialSplit AnalyzeForestPolynomial(const GadgetInstance& inst,
                                              const Rational& x,
                                              const Rational& y,
                                              const EnumerationCaps& caps) {
  const std::size_t m = inst.ground_size();
  const std::size_t n = inst.layers();
  std::vector<bool> is_right(inst.b.dim(), false);
  for (std::size_t e : inst.right_edges) is_right[e] = true;
  ForestPolynomialSplit split;
  // With x, y > 1 monomials are monotone in both exponents, so the case
  // bounds reduce to exponent comparisons.
  split.dominated = x > 1 && y > 1 && Pow(y, 2 * m - 2 * n) <= x * x;
  ForEachForest(inst.graph, caps, [&](std::span<const std::size_t> s) {
    std::size_t right = 0;
    for (std::size_t e : s) right += is_right[e] ? 1 : 0;
    const std::size_t left = s.size() - right;
    const Rational minor = inst.b.PrincipalMinor(s);
    if (right == m && left == n) {
      split.sigma += minor;
      ++split.case1_count;
    } else if (right == m && left < n) {
      split.case2 += minor;
      ++split.case2_count;
    } else if (right < m) {
      split.case3 += minor;
      ++split.case3_count;
      if (right > m - 1 || left > m) split.dominated = false;
    } else {
      // E_r in S with more than n left edges cannot be a forest.
      split.dominated = false;
    }
  });
  return split;
}

}  // namespace dppcount
