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

#include "dppcount/verify.h"

#include <algorithm>
#include <functional>

#include "dppcount/dpp.h"
#include "dppcount/error.h"
#include "dppcount/gadget.h"
#include "dppcount/io.h"
#include "dppcount/linalg.h"
#include "dppcount/matroid.h"
#include "dppcount/mixed_discriminant.h"
#include "dppcount/random_instances.h"
#include "dppcount/reductions.h"

namespace dppcount {
namespace {

// A property returns an empty string on success, else a description.
using Property = std::function<std::string(Rng&)>;

std::string Mismatch(const char* what, const Rational& a, const Rational& b) {
  return std::string(what) + ": " + FormatRational(a) + " != " + FormatRational(b);
}

std::size_t Pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::vector<std::string> Labels(std::size_t n) { return SymMatrix::DefaultLabels(n); }

std::string NormalizerExpansion(Rng& rng) {
  const std::size_t n = Pick(rng, 1, 6);
  const WeightedPSD a = RandomWeightedPSD(rng, Labels(n), Pick(rng, 1, n), true);
  Rational sum = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    sum += a.PrincipalMinor(s);
  }
  const Rational z = UnconstrainedNormalizer(a);
  if (z != sum) return Mismatch("det(A+I) vs subset sum", z, sum);
  return "";
}

std::string CharPolyMatchesMinors(Rng& rng) {
  const std::size_t n = Pick(rng, 1, 5);
  const Matrix m = RandomGram(rng, n, Pick(rng, 1, n));
  const SymMatrix s(Labels(n), m);
  const std::vector<Rational> e = CharPolyCoeffs(s);
  const Rational det = DetBareiss(s);
  if (e.back() != det) return Mismatch("e_n vs det", e.back(), det);
  Rational trace = 0;
  for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
  if (e.front() != trace) return Mismatch("e_1 vs trace", e.front(), trace);
  return "";
}

std::string LdltReconstructs(Rng& rng) {
  const std::size_t n = Pick(rng, 1, 6);
  const Matrix m = RandomGram(rng, n, Pick(rng, 1, n));
  const LdltFactors f = Ldlt(m);
  Matrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = f.pivots[i];
  const Matrix product = f.lower * d * f.lower.Transpose();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (product(i, j) != m(f.perm[i], f.perm[j])) return "L D L^T != P A P^T";
    }
  }
  return "";
}

std::string KirchhoffMatchesEnumeration(Rng& rng, const EnumerationCaps& caps) {
  const std::size_t v = Pick(rng, 1, 7);
  const Graph g = RandomConnectedGraph(rng, v, Pick(rng, 0, 6));
  const Rational kirchhoff = CountSpanningTrees(g);
  const Rational listed(static_cast<unsigned long>(EnumerateSpanningTrees(g, caps).size()));
  if (kirchhoff != listed) return Mismatch("Kirchhoff vs enumeration", kirchhoff, listed);
  return "";
}

std::string SearchMatchesNaiveSums(Rng& rng, const EnumerationCaps& caps) {
  const Graph g = RandomConnectedGraph(rng, Pick(rng, 2, 6), Pick(rng, 0, 4));
  const WeightedPSD a = RandomWeightedPSD(rng, g.EdgeIds(), Pick(rng, 1, g.num_edges()), true);
  Rational trees = 0, forests = 0;
  ForEachSpanningTree(g, caps, [&](std::span<const std::size_t> s) { trees += a.PrincipalMinor(s); });
  ForEachForest(g, caps, [&](std::span<const std::size_t> s) { forests += a.PrincipalMinor(s); });
  const Rational zt = ZTree(a, g, caps);
  const Rational zf = ZForest(a, g, caps);
  if (zt != trees) return Mismatch("ZTree vs tree sum", zt, trees);
  if (zf != forests) return Mismatch("ZForest vs forest sum", zf, forests);
  if (zt < 0 || zf < zt) return "expected 0 <= Z_T <= Z_F";
  return "";
}

std::string InterpolationRecoversZt(Rng& rng, const EnumerationCaps& caps) {
  const Graph g = RandomConnectedGraph(rng, Pick(rng, 1, 6), Pick(rng, 0, 3));
  const WeightedPSD a = RandomWeightedPSD(rng, g.EdgeIds(), Pick(rng, 1, std::max<std::size_t>(1, g.num_edges())), true);
  const Rational via = ZtViaZf(a, g, caps);
  const Rational direct = ZTree(a, g, caps);
  if (via != direct) return Mismatch("interpolated vs direct Z_T", via, direct);
  return "";
}

std::string PmGadgetCountsMatchings(Rng& rng, const EnumerationCaps& caps) {
  const BipartiteGraph b = RandomBipartite(rng, Pick(rng, 1, 3), 2, 3);
  const Integer via = CountPmViaZt(b, caps);
  const Integer direct = CountPerfectMatchings(b, caps);
  if (via != direct) return Mismatch("gadget Z_T vs matchings", via, direct);
  return "";
}

std::string PartitionEncodingMatchesMD(Rng& rng, const EnumerationCaps& caps) {
  const std::size_t n = Pick(rng, 1, 3);
  const MDInstance k = RandomMDInstance(rng, n, Pick(rng, 1, n));
  const PartitionInstance p = BuildPartitionInstance(k);
  const Rational lhs = PartitionConstrainedSum(p.a, p.parts, caps);
  const Rational rhs = p.scale * MixedDiscriminant(k, caps);
  if (lhs != rhs) return Mismatch("transversal sum vs scale*D", lhs, rhs);
  return "";
}

std::string GadgetTreesMatchTransversals(Rng& rng, const EnumerationCaps& caps) {
  const std::size_t n = Pick(rng, 1, 2);
  const PartitionInstance p = BuildPartitionInstance(RandomMDInstance(rng, n, Pick(rng, 1, n)));
  const GadgetInstance g = BuildMdGadget(p);
  const Rational trees = AnalyzeTreePolynomial(g, caps).containing_right;
  const Rational transversals = PartitionConstrainedSum(p.a, p.parts, caps);
  if (trees != transversals) return Mismatch("trees containing E_right vs transversals", trees, transversals);
  return "";
}

std::string WitnessSound(Rng& rng, const EnumerationCaps& caps) {
  const std::size_t n = Pick(rng, 1, 3);
  const MDInstance k = RandomMDInstance(rng, n, Pick(rng, 1, n));
  const GadgetInstance g = BuildMdGadget(BuildPartitionInstance(k));
  const std::optional<IndexSet> w = FindWitness(g);
  const Rational d = MixedDiscriminant(k, caps);
  if (w.has_value() != (d != 0)) return "witness existence disagrees with D != 0";
  if (!w) return "";
  if (!g.graph.IsSpanningTree(*w)) return "witness is not a spanning tree";
  if (g.b.PrincipalMinor(*w) <= 0) return "witness minor is not positive";
  for (std::size_t e : g.right_edges) {
    if (std::find(w->begin(), w->end(), e) == w->end()) return "witness misses E_right";
  }
  return "";
}

std::string ApReductionSandwich(Rng& rng, const EnumerationCaps& caps) {
  const MDInstance k = RandomMDInstance(rng, 2, Pick(rng, 1, 2));
  const Rational d = MixedDiscriminant(k, caps);
  const Rational eps(1, 1u << Pick(rng, 1, 3));
  SimulatedOracle zt(OracleTarget::kSpanningTree, OracleSpec::Exact(), caps);
  if (!CheckSandwich(ApReduceMdToZt(k, eps, zt), d, true).pass) return "Z_T reduction outside [D, e^{eps/2} D]";
  SimulatedOracle zf(OracleTarget::kForest, OracleSpec::Noisy(rng()), caps);
  if (!CheckSandwich(ApReduceMdToZf(k, eps, zf), d, false).pass) return "Z_F reduction outside [e^-eps D, e^eps D]";
  return "";
}

std::string JsonRoundTrip(Rng& rng) {
  const Graph g = RandomConnectedGraph(rng, Pick(rng, 1, 5), Pick(rng, 0, 3));
  ConstrainedDPP dpp;
  dpp.graph = g;
  dpp.constraint = Constraint::kForest;
  dpp.matrix = RandomWeightedPSD(rng, g.EdgeIds(), Pick(rng, 1, std::max<std::size_t>(1, g.num_edges())), true);
  const Json once = BundleToJson(dpp);
  const Json twice = BundleToJson(BundleFromJson(Json::parse(once.dump())));
  if (once != twice) return "bundle round trip changed the document";
  const MDInstance k = RandomMDInstance(rng, 2, 2);
  const Json md = MDInstanceToJson(k);
  if (MDInstanceToJson(MDInstanceFromJson(Json::parse(md.dump()))) != md) return "MD round trip changed the document";
  return "";
}

std::string SamplerDeterministic(Rng& rng, const EnumerationCaps& caps) {
  ConstrainedDPP dpp;
  dpp.graph = RandomConnectedGraph(rng, Pick(rng, 2, 4), Pick(rng, 0, 2));
  dpp.constraint = Constraint::kSpanningTree;
  dpp.matrix = WeightedPSD(SymMatrix::Identity(dpp.graph->EdgeIds()));
  const std::uint64_t seed = rng();
  const auto a = SampleExact(dpp, seed, 20, caps);
  const auto b = SampleExact(dpp, seed, 20, caps);
  if (a != b) return "same seed gave different samples";
  for (const auto& s : a) {
    IndexSet idx = dpp.matrix.base().RequireIndices(s);
    if (!dpp.graph->IsSpanningTree(idx)) return "sample is not a spanning tree";
  }
  return "";
}

}  // namespace

std::vector<PropertyResult> RunVerifySuite(std::uint64_t seed, std::size_t trials,
                                           const EnumerationCaps& caps) {
  EnumerationCaps wide = caps;
  wide.max_tree_vertices = std::max<std::size_t>(wide.max_tree_vertices, 16);
  wide.max_forest_edges = std::max<std::size_t>(wide.max_forest_edges, 24);
  const std::vector<std::pair<std::string, Property>> properties = {
      {"normalizer_subset_expansion", NormalizerExpansion},
      {"charpoly_trace_and_det", CharPolyMatchesMinors},
      {"ldlt_reconstruction", LdltReconstructs},
      {"kirchhoff_vs_enumeration", [&](Rng& r) { return KirchhoffMatchesEnumeration(r, wide); }},
      {"tree_forest_search_vs_naive", [&](Rng& r) { return SearchMatchesNaiveSums(r, wide); }},
      {"zt_interpolation", [&](Rng& r) { return InterpolationRecoversZt(r, wide); }},
      {"pm_gadget_count", [&](Rng& r) { return PmGadgetCountsMatchings(r, wide); }},
      {"partition_encoding", [&](Rng& r) { return PartitionEncodingMatchesMD(r, wide); }},
      {"gadget_trees_vs_transversals", [&](Rng& r) { return GadgetTreesMatchTransversals(r, wide); }},
      {"witness_soundness", [&](Rng& r) { return WitnessSound(r, wide); }},
      {"ap_reduction_sandwich", [&](Rng& r) { return ApReductionSandwich(r, wide); }},
      {"json_round_trip", JsonRoundTrip},
      {"sampler_determinism", [&](Rng& r) { return SamplerDeterministic(r, wide); }},
  };
  std::vector<PropertyResult> results;
  for (std::size_t p = 0; p < properties.size(); ++p) {
    PropertyResult result;
    result.name = properties[p].first;
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(p)};
    Rng rng(seq);
    for (std::size_t t = 0; t < trials && result.pass; ++t) {
      ++result.trials;
      std::string failure;
      try {
        failure = properties[p].second(rng);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty()) {
        result.pass = false;
        result.detail = "trial " + std::to_string(t) + ": " + failure;
      }
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace dppcount
