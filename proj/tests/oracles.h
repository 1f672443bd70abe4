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

// Reference computations used only by the tests. Everything here is the
// slowest obvious method and shares no code path with the library beyond
// Matrix storage and Rational arithmetic.

#ifndef DPPCOUNT_TESTS_ORACLES_H_
#define DPPCOUNT_TESTS_ORACLES_H_

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/rational.h"

namespace dppcount::oracle {

// Leibniz expansion over all permutations.
inline Rational Leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Rational total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

inline Matrix Principal(const Matrix& m, const std::vector<std::size_t>& s) {
  Matrix out(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) out(i, j) = m(s[i], s[j]);
  }
  return out;
}

// det of (diag(w)^{1/2} base diag(w)^{1/2})_S written out entrywise: the
// (i, j) entry times sqrt(w_i w_j) has product of w over S in the det, so
// multiply the Leibniz value by prod w.
inline Rational WeightedMinor(const WeightedPSD& a, const std::vector<std::size_t>& s) {
  Rational prod = 1;
  for (std::size_t i : s) prod *= a.weights()[i];
  return prod * Leibniz(Principal(a.base().entries(), s));
}

inline std::vector<std::vector<std::size_t>> AllSubsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(i);
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> SubsetsOfSize(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : AllSubsets(n)) {
    if (s.size() == k) out.push_back(std::move(s));
  }
  return out;
}

// Acyclicity by repeated leaf stripping on the edge subset.
inline bool Acyclic(const Graph& g, const std::vector<std::size_t>& s) {
  std::vector<std::size_t> edges = s;
  bool changed = true;
  while (changed && !edges.empty()) {
    changed = false;
    std::vector<std::size_t> degree(g.num_vertices(), 0);
    for (std::size_t e : edges) {
      ++degree[g.edges()[e].u];
      ++degree[g.edges()[e].v];
    }
    std::vector<std::size_t> kept;
    for (std::size_t e : edges) {
      const Edge& ed = g.edges()[e];
      if (degree[ed.u] == 1 || degree[ed.v] == 1) {
        changed = true;
      } else {
        kept.push_back(e);
      }
    }
    edges = std::move(kept);
  }
  return edges.empty();
}

// Connectivity of (V, s) by depth-first search.
inline bool Spans(const Graph& g, const std::vector<std::size_t>& s) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t e : s) {
    adj[g.edges()[e].u].push_back(g.edges()[e].v);
    adj[g.edges()[e].v].push_back(g.edges()[e].u);
  }
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

inline std::vector<std::vector<std::size_t>> Forests(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  for (auto& s : AllSubsets(g.num_edges())) {
    if (Acyclic(g, s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> SpanningTrees(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  if (g.num_vertices() == 0) return out;
  for (auto& s : SubsetsOfSize(g.num_edges(), g.num_vertices() - 1)) {
    if (Acyclic(g, s) && Spans(g, s)) out.push_back(std::move(s));
  }
  return out;
}

inline Rational SumMinors(const WeightedPSD& a,
                          const std::vector<std::vector<std::size_t>>& family) {
  Rational total = 0;
  for (const auto& s : family) total += WeightedMinor(a, s);
  return total;
}

// Permanent of the biadjacency matrix by permutations.
inline Integer Permanent(const BipartiteGraph& b) {
  const std::size_t n = b.side();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  Integer total = 0;
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = b.HasEdge(i, p[i]);
    if (ok) total += 1;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// D(K^1..K^n) = sum over S of (-1)^{n-|S|} det(sum_{i in S} K^i), the
// inclusion-exclusion form of the mixed partial derivative.
inline Rational MixedDiscriminantIE(const std::vector<Matrix>& k) {
  const std::size_t n = k.size();
  Rational total = 0;
  for (const auto& s : AllSubsets(n)) {
    Matrix sum(n, n);
    for (std::size_t i : s) sum = sum + k[i];
    const Rational det = s.empty() ? Rational(n == 0 ? 1 : 0) : Leibniz(sum);
    total += (n - s.size()) % 2 ? -det : det;
  }
  return total;
}

inline std::vector<std::size_t> Sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace dppcount::oracle

#endif  // DPPCOUNT_TESTS_ORACLES_H_
