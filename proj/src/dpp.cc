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

#include "dppcount/dpp.h"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "dppcount/error.h"

namespace dppcount {
namespace {

// matrix index for every edge position; the label sets must coincide.
std::vector<std::size_t> AlignLabels(const WeightedPSD& a, const Graph& g) {
  if (a.dim() != g.num_edges()) {
    throw InvalidArgument("label mismatch: matrix has " + std::to_string(a.dim()) +
                          " labels, graph has " + std::to_string(g.num_edges()) +
                          " edges");
  }
  std::vector<std::size_t> out;
  out.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    auto idx = a.base().IndexOf(e.id);
    if (!idx) throw InvalidArgument("label mismatch: edge \"" + e.id +
                                    "\" has no matrix label");
    out.push_back(*idx);
  }
  return out;
}

// Depth-first search over acyclic edge sets in increasing edge order,
// carrying an LDL^T factorization of the base minor so that det(base_S)
// grows by one pivot per added edge. A zero pivot prunes the branch: for a
// PSD matrix every superset of a singular principal submatrix is singular.
//
// Weighted terms are accumulated as integers bucketed by |S|:
//   det(A_S) = prod_{e in S} h_e * D(S) / (L c)^{|S|}
// with c the common denominator of the base, D(S) = c^{|S|} det(base_S), and
// h_e = w_e L for L the common denominator of the weights.
class MinorSearch {
 public:
  enum class Mode { kSpanningTrees, kForests };

  MinorSearch(const WeightedPSD& a, const Graph& g, Mode mode)
      : g_(g), mode_(mode), uf_(g.num_vertices()) {
    const std::vector<std::size_t> map = AlignLabels(a, g);
    const std::size_t m = g.num_edges();
    base_.resize(m * m);
    Integer weight_den = 1;
    for (std::size_t p = 0; p < m; ++p) {
      for (std::size_t q = 0; q < m; ++q) {
        base_[p * m + q] = a.base()(map[p], map[q]);
        mpz_lcm(base_den_.get_mpz_t(), base_den_.get_mpz_t(),
                base_[p * m + q].get_den_mpz_t());
      }
      mpz_lcm(weight_den.get_mpz_t(), weight_den.get_mpz_t(),
              a.weights()[map[p]].get_den_mpz_t());
    }
    scale_ = weight_den * base_den_;
    for (std::size_t p = 0; p < m; ++p) {
      const Rational& w = a.weights()[map[p]];
      scaled_weight_.push_back(w.get_num() * (weight_den / w.get_den()));
    }
    buckets_.assign(m + 1, Integer(0));
  }

  Rational Run() {
    const std::size_t n = g_.num_vertices();
    if (mode_ == Mode::kSpanningTrees) {
      if (!g_.IsConnected()) return 0;
      if (n == 1) return 1;
    } else {
      buckets_[0] += 1;
    }
    Integer weight_product = 1;
    Integer det_scaled = 1;
    Recurse(0, weight_product, det_scaled);

    Rational total = 0;
    Integer denom = 1;
    for (std::size_t k = 0; k < buckets_.size(); ++k) {
      if (buckets_[k] != 0) {
        Rational term(buckets_[k], denom);
        term.canonicalize();
        total += term;
      }
      denom *= scale_;
    }
    return total;
  }

 private:
  struct Level {
    std::size_t edge;
    Rational pivot;
    // Multipliers l_t of this edge against the earlier levels t.
    std::vector<Rational> multipliers;
  };

  const Rational& B(std::size_t p, std::size_t q) const {
    return base_[p * g_.num_edges() + q];
  }

  // Schur pivot of edge e against the current set; fills `multipliers`.
  Rational Pivot(std::size_t e, std::vector<Rational>* multipliers) const {
    const std::size_t k = levels_.size();
    multipliers->assign(k, Rational(0));
    std::vector<Rational> z(k);
    Rational pivot = B(e, e);
    for (std::size_t j = 0; j < k; ++j) {
      Rational zj = B(e, levels_[j].edge);
      const auto& lj = levels_[j].multipliers;
      for (std::size_t t = 0; t < j; ++t) {
        if (lj[t] != 0 && z[t] != 0) zj -= lj[t] * z[t];
      }
      if (zj != 0) {
        (*multipliers)[j] = zj / levels_[j].pivot;
        pivot -= zj * (*multipliers)[j];
      }
      z[j] = std::move(zj);
    }
    return pivot;
  }

  // Whether the current set plus every edge at position >= from connects G.
  bool CanSpan(std::size_t from) const {
    RollbackUnionFind probe = uf_;
    for (std::size_t e = from; e < g_.num_edges(); ++e) {
      probe.Union(g_.edges()[e].u, g_.edges()[e].v);
      if (probe.components() == 1) return true;
    }
    return probe.components() == 1;
  }

  void Recurse(std::size_t start, const Integer& weight_product,
               const Integer& det_scaled) {
    const bool trees = mode_ == Mode::kSpanningTrees;
    const std::size_t target = g_.num_vertices() - 1;
    for (std::size_t e = start; e < g_.num_edges(); ++e) {
      // Choosing e skips [start, e); the rest must still be able to span.
      if (trees && !CanSpan(e)) return;
      const Edge& edge = g_.edges()[e];
      if (uf_.Find(edge.u) == uf_.Find(edge.v)) continue;
      std::vector<Rational> multipliers;
      Rational pivot = Pivot(e, &multipliers);
      if (pivot == 0) continue;
      if (pivot < 0) throw NotPsd("matrix not PSD: negative Schur pivot");

      Integer next_det = det_scaled * base_den_ * pivot.get_num();
      mpz_divexact(next_det.get_mpz_t(), next_det.get_mpz_t(),
                   pivot.get_den_mpz_t());
      const Integer next_weight = weight_product * scaled_weight_[e];
      const std::size_t size = levels_.size() + 1;
      if (!trees || size == target) buckets_[size] += next_weight * next_det;
      if (trees && size == target) continue;

      uf_.Union(edge.u, edge.v);
      levels_.push_back(Level{e, std::move(pivot), std::move(multipliers)});
      Recurse(e + 1, next_weight, next_det);
      levels_.pop_back();
      uf_.Undo();
    }
  }

  const Graph& g_;
  Mode mode_;
  RollbackUnionFind uf_;
  std::vector<Rational> base_;
  Integer base_den_ = 1;
  Integer scale_ = 1;
  std::vector<Integer> scaled_weight_;
  std::vector<Level> levels_;
  std::vector<Integer> buckets_;
};

std::vector<IndexSet> ResolveParts(const WeightedPSD& a,
                                   const std::vector<std::vector<std::string>>& parts) {
  std::vector<IndexSet> out;
  out.reserve(parts.size());
  for (const auto& part : parts) out.push_back(a.base().RequireIndices(part));
  return out;
}

void CheckPartition(std::size_t dim, const std::vector<IndexSet>& parts) {
  std::vector<bool> seen(dim, false);
  std::size_t covered = 0;
  for (const IndexSet& part : parts) {
    if (part.empty()) throw InvalidArgument("partition has an empty part");
    for (std::size_t i : part) {
      if (i >= dim) throw InvalidArgument("partition index out of range");
      if (seen[i]) throw InvalidArgument("partition parts are not disjoint");
      seen[i] = true;
      ++covered;
    }
  }
  if (covered != dim) throw InvalidArgument("partition does not cover every label");
}

// Calls visit(transversal) for every choice of one index per part, odometer
// order with the last part varying fastest.
template <typename Visit>
void ForEachTransversal(const std::vector<IndexSet>& parts,
                        const EnumerationCaps& caps, Visit&& visit) {
  std::size_t total = 1;
  for (const IndexSet& part : parts) {
    if (part.empty()) return;
    if (total > caps.max_transversals / part.size()) {
      throw CapExceeded("max_transversals", caps.max_transversals,
                        caps.max_transversals + 1);
    }
    total *= part.size();
  }
  std::vector<std::size_t> digit(parts.size(), 0);
  IndexSet pick(parts.size());
  while (true) {
    for (std::size_t i = 0; i < parts.size(); ++i) pick[i] = parts[i][digit[i]];
    visit(static_cast<const IndexSet&>(pick));
    std::size_t i = parts.size();
    while (i > 0) {
      --i;
      if (++digit[i] < parts[i].size()) break;
      digit[i] = 0;
      if (i == 0) return;
    }
    if (parts.empty()) return;
  }
}

std::vector<std::string> LabelsOf(const std::vector<std::string>& names,
                                  std::span<const std::size_t> subset) {
  std::vector<std::string> out;
  out.reserve(subset.size());
  for (std::size_t i : subset) out.push_back(names[i]);
  return out;
}

}  // namespace

const char* ConstraintName(Constraint c) {
  switch (c) {
    case Constraint::kSpanningTree: return "tree";
    case Constraint::kForest: return "forest";
    case Constraint::kPartition: return "partition";
    case Constraint::kUnconstrained: return "none";
  }
  return "?";
}

void ConstrainedDPP::Validate() const {
  switch (constraint) {
    case Constraint::kSpanningTree:
    case Constraint::kForest:
      if (!graph) throw InvalidArgument("graph constraint without a graph");
      AlignLabels(matrix, *graph);
      break;
    case Constraint::kPartition:
      CheckPartition(matrix.dim(), ResolveParts(matrix, parts));
      break;
    case Constraint::kUnconstrained:
      break;
  }
}

Rational ZTree(const WeightedPSD& a, const Graph& g, const EnumerationCaps& caps) {
  if (g.num_vertices() > caps.max_tree_vertices) {
    throw CapExceeded("max_tree_vertices", caps.max_tree_vertices, g.num_vertices());
  }
  return MinorSearch(a, g, MinorSearch::Mode::kSpanningTrees).Run();
}

Rational ZForest(const WeightedPSD& a, const Graph& g,
                 const EnumerationCaps& caps) {
  if (g.num_edges() > caps.max_forest_edges) {
    throw CapExceeded("max_forest_edges", caps.max_forest_edges, g.num_edges());
  }
  return MinorSearch(a, g, MinorSearch::Mode::kForests).Run();
}

Rational PartitionConstrainedSum(const WeightedPSD& a,
                                 const std::vector<IndexSet>& parts,
                                 const EnumerationCaps& caps) {
  CheckPartition(a.dim(), parts);
  Rational total = 0;
  ForEachTransversal(parts, caps, [&](const IndexSet& pick) {
    total += a.PrincipalMinor(pick);
  });
  return total;
}

Rational PartitionConstrainedSum(const WeightedPSD& a,
                                 const std::vector<std::vector<std::string>>& parts,
                                 const EnumerationCaps& caps) {
  return PartitionConstrainedSum(a, ResolveParts(a, parts), caps);
}

Rational Normalizer(const ConstrainedDPP& dpp, const EnumerationCaps& caps) {
  dpp.Validate();
  switch (dpp.constraint) {
    case Constraint::kSpanningTree: return ZTree(dpp.matrix, *dpp.graph, caps);
    case Constraint::kForest: return ZForest(dpp.matrix, *dpp.graph, caps);
    case Constraint::kPartition:
      return PartitionConstrainedSum(dpp.matrix, dpp.parts, caps);
    case Constraint::kUnconstrained: return UnconstrainedNormalizer(dpp.matrix);
  }
  return 0;
}

std::vector<WeightedSubset> EnumerateSupport(const ConstrainedDPP& dpp,
                                             const EnumerationCaps& caps) {
  dpp.Validate();
  std::vector<WeightedSubset> out;
  const auto& labels = dpp.matrix.labels();
  switch (dpp.constraint) {
    case Constraint::kSpanningTree:
    case Constraint::kForest: {
      const Graph& g = *dpp.graph;
      const std::vector<std::size_t> map = AlignLabels(dpp.matrix, g);
      const std::vector<std::string> ids = g.EdgeIds();
      auto visit = [&](std::span<const std::size_t> s) {
        IndexSet idx;
        for (std::size_t e : s) idx.push_back(map[e]);
        out.push_back({LabelsOf(ids, s), dpp.matrix.PrincipalMinor(idx)});
      };
      if (dpp.constraint == Constraint::kSpanningTree) {
        ForEachSpanningTree(g, caps, visit);
      } else {
        ForEachForest(g, caps, visit);
      }
      break;
    }
    case Constraint::kPartition: {
      const std::vector<IndexSet> parts = ResolveParts(dpp.matrix, dpp.parts);
      ForEachTransversal(parts, caps, [&](const IndexSet& pick) {
        out.push_back({LabelsOf(labels, pick), dpp.matrix.PrincipalMinor(pick)});
      });
      break;
    }
    case Constraint::kUnconstrained: {
      const std::size_t m = dpp.matrix.dim();
      if (m > caps.max_forest_edges) {
        throw CapExceeded("max_forest_edges", caps.max_forest_edges, m);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        IndexSet idx;
        for (std::size_t i = 0; i < m; ++i) {
          if (mask >> i & 1) idx.push_back(i);
        }
        out.push_back({LabelsOf(labels, idx), dpp.matrix.PrincipalMinor(idx)});
      }
      break;
    }
  }
  return out;
}

std::vector<std::vector<std::string>> SampleExact(const ConstrainedDPP& dpp,
                                                  std::uint64_t seed,
                                                  std::size_t count,
                                                  const EnumerationCaps& caps) {
  const std::vector<WeightedSubset> support = EnumerateSupport(dpp, caps);
  std::vector<Rational> cumulative;
  cumulative.reserve(support.size());
  Rational running = 0;
  for (const auto& s : support) {
    running += s.minor;
    cumulative.push_back(running);
  }
  if (running <= 0) throw InvalidArgument("empty support");

  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::string>> out;
  out.reserve(count);
  for (std::size_t draw = 0; draw < count; ++draw) {
    static_assert(sizeof(unsigned long) == 8);
    Integer bits(static_cast<unsigned long>(rng()));
    bits <<= 64;
    bits += static_cast<unsigned long>(rng());
    Rational u(bits, 1);
    mpq_div_2exp(u.get_mpq_t(), u.get_mpq_t(), 128);
    const Rational threshold = u * running;
    // First outcome whose cumulative mass exceeds u * Z.
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), threshold);
    out.push_back(support[static_cast<std::size_t>(it - cumulative.begin())].labels);
  }
  return out;
}

}  // namespace dppcount
