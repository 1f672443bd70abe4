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

#include "doctest.h"
#include "dppcount/dpp.h"
#include "dppcount/error.h"
#include "dppcount/gadget.h"
#include "dppcount/random_instances.h"
#include "dppcount/reductions.h"
#include "oracles.h"

namespace dppcount {
namespace {

EnumerationCaps Wide() {
  EnumerationCaps caps;
  caps.max_tree_vertices = 32;
  caps.max_forest_edges = 40;
  return caps;
}

Graph Triangle() {
  return Graph({"a", "b", "c"}, {{"x", "a", "b"}, {"y", "b", "c"}, {"z", "a", "c"}});
}

MDInstance IdentityPair() { return MDInstance({Matrix::Identity(2), Matrix::Identity(2)}); }

bool Within(const Rational& value, const Rational& lo_exp, const Rational& hi_exp,
            const Rational& d) {
  return CompareWithScaledExp(value, lo_exp, d) >= 0 && CompareWithScaledExp(value, hi_exp, d) <= 0;
}

TEST_SUITE("reductions") {

TEST_CASE("Lagrange leading coefficient") {
  CHECK(LagrangeLeadingCoeff({{1, 1}, {2, 4}, {3, 9}}, 2) == 1);
  CHECK(LagrangeLeadingCoeff({{1, 5}, {2, 5}}, 1) == 0);
  CHECK(LagrangeLeadingCoeff({{1, 7}, {2, 19}, {3, 37}}, 2) == 3);
  CHECK(LagrangeLeadingCoeff({{Rational(1, 2), 3}}, 0) == 3);
  CHECK_THROWS_AS(LagrangeLeadingCoeff({{1, 1}, {1, 2}}, 1), InvalidArgument);
  CHECK_THROWS_AS(LagrangeLeadingCoeff({{1, 1}}, 1), InvalidArgument);
  CHECK_THROWS_AS(LagrangeLeadingCoeff({{1, 1}, {2, 4}, {3, 10}}, 1), InvalidArgument);
  // Random polynomials with rational coefficients and nodes.
  Rng rng(71);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t degree = trial % 6;
    std::vector<Rational> coeffs(degree + 1);
    for (Rational& a : coeffs) a = Rational(c(rng), 1 + trial % 4);
    for (Rational& a : coeffs) a.canonicalize();
    std::vector<std::pair<Rational, Rational>> points;
    for (std::size_t i = 0; i <= degree + 1; ++i) {
      const Rational x(static_cast<long>(i) * 2 - 3, 3);
      Rational y = 0;
      for (std::size_t k = coeffs.size(); k-- > 0;) y = y * x + coeffs[k];
      points.emplace_back(x, y);
    }
    CHECK(LagrangeLeadingCoeff(points, degree) == coeffs.back());
  }
}

TEST_CASE("Z_T by interpolation") {
  const Graph g = Triangle();
  CHECK(ZtViaZf(WeightedPSD(SymMatrix::Identity(g.EdgeIds())), g) == 3);
  const Graph path({"a", "b", "c", "d"}, {{"p", "a", "b"}, {"q", "b", "c"}, {"r", "c", "d"}});
  const WeightedPSD a(SymMatrix({"p", "q", "r"}, Matrix::FromRows({{2, 1, 0}, {1, 2, 1}, {0, 1, 2}})));
  CHECK(ZtViaZf(a, path) == a.PrincipalMinor(IndexSet{0, 1, 2}));
  const Graph split({"a", "b", "c"}, {{"p", "a", "b"}});
  CHECK(ZtViaZf(WeightedPSD(SymMatrix::Identity({"p"})), split) == 0);
  Rng rng(72);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph h = RandomConnectedGraph(rng, 1 + trial % 7, trial % 4);
    const std::size_t rank = 1 + rng() % std::max<std::size_t>(1, h.num_edges());
    const WeightedPSD b = RandomWeightedPSD(rng, h.EdgeIds(), rank, true);
    CHECK(ZtViaZf(b, h) == oracle::SumMinors(b, oracle::SpanningTrees(h)));
  }
}

TEST_CASE("interpolation needs an exact oracle") {
  const Graph g = Triangle();
  SimulatedOracle noisy(OracleTarget::kForest, OracleSpec::Noisy(1));
  CHECK_THROWS_WITH_AS(ZtViaZf(WeightedPSD(SymMatrix::Identity(g.EdgeIds())), g, noisy),
                       "interpolation requires exact oracle", InvalidArgument);
  SimulatedOracle exact(OracleTarget::kForest, OracleSpec::Exact());
  CHECK(ZtViaZf(WeightedPSD(SymMatrix::Identity(g.EdgeIds())), g, exact) == 3);
  CHECK(exact.calls() == 3);
}

TEST_CASE("simulated oracles stay inside their tolerance") {
  const Graph g = Triangle();
  const WeightedPSD a(SymMatrix::Identity(g.EdgeIds()));
  const Rational delta(1, 8);
  SimulatedOracle exact(OracleTarget::kSpanningTree, OracleSpec::Exact());
  CHECK(exact.Query(a, g, delta) == 3);
  CHECK(exact.exact());
  SimulatedOracle up(OracleTarget::kSpanningTree, OracleSpec::Adversarial(1));
  SimulatedOracle down(OracleTarget::kForest, OracleSpec::Adversarial(-1));
  const Rational hi = up.Query(a, g, delta);
  const Rational lo = down.Query(a, g, delta);
  CHECK(Within(hi, -delta, delta, 3));
  CHECK(CompareWithScaledExp(hi, delta - Rational(1, 1000000), 3) > 0);
  CHECK(Within(lo, -delta, delta, 7));
  CHECK(CompareWithScaledExp(lo, -delta + Rational(1, 1000000), 7) < 0);
  SimulatedOracle noisy(OracleTarget::kForest, OracleSpec::Noisy(5));
  Rational first;
  bool varied = false;
  for (int i = 0; i < 100; ++i) {
    const Rational v = noisy.Query(a, g, delta);
    CHECK(Within(v, -delta, delta, 7));
    if (i == 0) first = v;
    varied = varied || v != first;
  }
  CHECK(varied);
  CHECK(noisy.calls() == 100);
  CHECK(noisy.last_exact() == 7);
  SimulatedOracle wide(OracleTarget::kForest, OracleSpec::Noisy(5, Rational(1, 2)));
  for (int i = 0; i < 50; ++i) CHECK(Within(wide.Query(a, g, delta), Rational(-1, 2), Rational(1, 2), 7));
  CHECK_THROWS_AS(exact.Query(a, g, 0), InvalidArgument);
  CHECK_THROWS_AS(exact.Query(a, g, 1), InvalidArgument);
  CHECK_THROWS_AS(SimulatedOracle(OracleTarget::kForest, OracleSpec::Noisy(1, Rational(3, 2))),
                  InvalidArgument);
}

TEST_CASE("median oracle") {
  const Graph g = Triangle();
  const WeightedPSD a(SymMatrix::Identity(g.EdgeIds()));
  SimulatedOracle inner(OracleTarget::kForest, OracleSpec::Noisy(9));
  MedianOracle median(inner, 5);
  CHECK(Within(median.Query(a, g, Rational(1, 4)), Rational(-1, 4), Rational(1, 4), 7));
  CHECK(inner.calls() == 5);
  CHECK_THROWS_AS(MedianOracle(inner, 4), InvalidArgument);
}

TEST_CASE("Z_T reduction on the identity pair") {
  SimulatedOracle oracle(OracleTarget::kSpanningTree, OracleSpec::Exact(), Wide());
  const ReductionReport r = ApReduceMdToZt(IdentityPair(), Rational(1, 2), oracle);
  REQUIRE_FALSE(r.declared_zero);
  CHECK(oracle.calls() == 1);
  CHECK(oracle.requested_deltas().front() == Rational(1, 4));
  CHECK(r.n == 2);
  CHECK(r.m == 4);
  CHECK(r.x == r.normalizer / r.witness_minor * 4);
  CHECK(r.estimate >= 2);
  CHECK(CompareWithScaledExp(r.estimate, Rational(1, 4), 2) <= 0);
  const BoundsCheck check = CheckSandwich(r, 2, true);
  CHECK(check.pass);
  CHECK(check.lower <= 2);
  CHECK(check.upper >= 2);
  CHECK_FALSE(CheckSandwich(r, 3, true).pass);
}

TEST_CASE("reductions declare D = 0 without calling the oracle") {
  const MDInstance zero({Matrix(2, 2), Matrix::Identity(2)});
  SimulatedOracle zt(OracleTarget::kSpanningTree, OracleSpec::Exact(), Wide());
  SimulatedOracle zf(OracleTarget::kForest, OracleSpec::Exact(), Wide());
  const ReductionReport a = ApReduceMdToZt(zero, Rational(1, 4), zt);
  const ReductionReport b = ApReduceMdToZf(zero, Rational(1, 4), zf);
  CHECK(a.declared_zero);
  CHECK(b.declared_zero);
  CHECK(zt.calls() + zf.calls() == 0);
  CHECK(CheckSandwich(a, 0, true).pass);
  CHECK_FALSE(CheckSandwich(a, 1, true).pass);
}

TEST_CASE("epsilon must lie in (0, 1)") {
  SimulatedOracle oracle(OracleTarget::kSpanningTree, OracleSpec::Exact(), Wide());
  CHECK_THROWS_AS(ApReduceMdToZt(IdentityPair(), 0, oracle), InvalidArgument);
  CHECK_THROWS_AS(ApReduceMdToZf(IdentityPair(), 1, oracle), InvalidArgument);
}

TEST_CASE("Z_F reduction on the identity pair") {
  SimulatedOracle oracle(OracleTarget::kForest, OracleSpec::Exact(), Wide());
  const ReductionReport r = ApReduceMdToZf(IdentityPair(), Rational(1, 2), oracle);
  REQUIRE_FALSE(r.declared_zero);
  REQUIRE(r.y);
  CHECK(*r.y == r.normalizer / r.witness_minor * 8);
  CHECK(r.x == r.normalizer / r.witness_minor * Pow(*r.y, 4) * 8);
  CHECK(CheckSandwich(r, 2, true).pass);
}

TEST_CASE("noisy oracle trials stay within e^{+-eps} D") {
  Rng rng(73);
  const MDInstance k = RandomMDInstance(rng, 2, 2);
  const Rational d = MixedDiscriminant(k);
  REQUIRE(d > 0);
  const Rational eps(1, 4);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    SimulatedOracle zt(OracleTarget::kSpanningTree, OracleSpec::Noisy(seed), Wide());
    SimulatedOracle zf(OracleTarget::kForest, OracleSpec::Noisy(seed), Wide());
    CHECK(CheckSandwich(ApReduceMdToZt(k, eps, zt), d, false).pass);
    CHECK(CheckSandwich(ApReduceMdToZf(k, eps, zf), d, false).pass);
  }
}

TEST_CASE("adversarial oracle stays within e^{+-eps} D") {
  Rng rng(74);
  for (int trial = 0; trial < 6; ++trial) {
    const MDInstance k = RandomMDInstance(rng, 2, 1 + trial % 2);
    const Rational d = MixedDiscriminant(k);
    for (int direction : {1, -1}) {
      SimulatedOracle zt(OracleTarget::kSpanningTree, OracleSpec::Adversarial(direction), Wide());
      SimulatedOracle zf(OracleTarget::kForest, OracleSpec::Adversarial(direction), Wide());
      CHECK(CheckSandwich(ApReduceMdToZt(k, Rational(1, 8), zt), d, false).pass);
      CHECK(CheckSandwich(ApReduceMdToZf(k, Rational(1, 8), zf), d, false).pass);
    }
  }
}

TEST_CASE("tree polynomial: leading part dominates") {
  // Z(x) = x^{2m} S + R with R of lower degree; at the chosen x the ratio
  // Z(x) / x^{2m} exceeds S by at most a factor e^{eps/2}.
  Rng rng(75);
  for (int trial = 0; trial < 5; ++trial) {
    const MDInstance k = RandomMDInstance(rng, 2, 2);
    const GadgetInstance g = BuildMdGadget(BuildPartitionInstance(k));
    const TreePolynomialSplit split = AnalyzeTreePolynomial(g, Wide());
    CHECK(split.containing_right == MixedDiscriminant(k));
    SimulatedOracle oracle(OracleTarget::kSpanningTree, OracleSpec::Exact(), Wide());
    const ReductionReport r = ApReduceMdToZt(k, Rational(1, 4), oracle);
    REQUIRE_FALSE(r.declared_zero);
    const GadgetInstance weighted = ReweightRankOne(g, 1, r.x);
    const TreePolynomialSplit heavy = AnalyzeTreePolynomial(weighted, Wide());
    CHECK(heavy.containing_right == Pow(r.x, 2 * r.m) * split.containing_right);
    CHECK(heavy.containing_right + heavy.other == oracle.last_exact());
  }
}

TEST_CASE("forest polynomial: three-case split") {
  Rng rng(76);
  for (int trial = 0; trial < 4; ++trial) {
    const MDInstance k = RandomMDInstance(rng, 2, 1 + trial % 2);
    const PartitionInstance p = BuildPartitionInstance(k);
    const GadgetInstance g = BuildMdGadget(p);
    SimulatedOracle oracle(OracleTarget::kForest, OracleSpec::Exact(), Wide());
    const ReductionReport r = ApReduceMdToZf(k, Rational(1, 4), oracle);
    const Rational x = r.declared_zero ? Rational(2) : r.x;
    const Rational y = r.declared_zero ? Rational(2) : *r.y;
    const ForestPolynomialSplit split = AnalyzeForestPolynomial(g, x, y, Wide());
    CHECK(split.sigma == PartitionConstrainedSum(p.a, p.parts));
    CHECK(split.dominated);
    CHECK(split.sigma + split.case2 + split.case3 == ZForest(g.b, g.graph, Wide()));
    CHECK(split.case1_count + split.case2_count + split.case3_count ==
          EnumerateForests(g.graph, Wide()).size());
  }
}

}  // TEST_SUITE

}  // namespace
}  // namespace dppcount
