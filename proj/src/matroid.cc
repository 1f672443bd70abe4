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

#include "dppcount/matroid.h"

#include <algorithm>
#include <deque>
#include <limits>

#include "dppcount/error.h"

namespace dppcount {

IndependenceOracle LinearMatroid(const WeightedPSD& m) {
  // Captures by value: oracles outlive the matrix they were built from.
  return IndependenceOracle(m.labels(), [m](std::span<const std::size_t> s) {
    return m.BaseMinor(s) > 0;
  });
}

IndependenceOracle PartitionMatroid(std::vector<std::string> ground,
                                    const std::vector<IndexSet>& parts,
                                    const std::vector<std::size_t>& capacities) {
  if (parts.size() != capacities.size()) {
    throw InvalidArgument("PartitionMatroid: one capacity per part required");
  }
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> part_of(ground.size(), kFree);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t e : parts[p]) {
      if (e >= ground.size()) throw InvalidArgument("PartitionMatroid: index out of range");
      if (part_of[e] != kFree) throw InvalidArgument("PartitionMatroid: parts overlap");
      part_of[e] = p;
    }
  }
  return IndependenceOracle(
      std::move(ground),
      [part_of, capacities, kFree](std::span<const std::size_t> s) {
        std::vector<std::size_t> used(capacities.size(), 0);
        for (std::size_t e : s) {
          const std::size_t p = part_of[e];
          if (p == kFree) continue;
          if (++used[p] > capacities[p]) return false;
        }
        return true;
      });
}

std::optional<IndexSet> MatroidIntersection(const IndependenceOracle& first,
                                            const IndependenceOracle& second,
                                            std::size_t target) {
  if (first.ground() != second.ground()) {
    throw InvalidArgument("MatroidIntersection: oracles have different ground sets");
  }
  if (!first.IsIndependent({}) || !second.IsIndependent({})) {
    throw InvalidArgument("MatroidIntersection: malformed oracle rejects the empty set");
  }
  const std::size_t size = first.size();
  if (target > size) return std::nullopt;
  std::vector<bool> in_set(size, false);
  IndexSet current;

  auto with = [&](std::size_t add) {
    IndexSet s = current;
    s.insert(std::lower_bound(s.begin(), s.end(), add), add);
    return s;
  };
  auto swapped = [&](std::size_t drop, std::size_t add) {
    IndexSet s;
    s.reserve(current.size());
    for (std::size_t e : current) {
      if (e != drop) s.push_back(e);
    }
    s.insert(std::lower_bound(s.begin(), s.end(), add), add);
    return s;
  };

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  while (current.size() < target) {
    // Exchange graph: y -> x when I - y + x is independent in the first
    // matroid, x -> y when it is independent in the second (y in I, x not).
    std::vector<bool> is_source(size, false), is_sink(size, false);
    std::vector<std::vector<std::size_t>> out(size);
    for (std::size_t x = 0; x < size; ++x) {
      if (in_set[x]) continue;
      const IndexSet plus = with(x);
      is_source[x] = first.IsIndependent(plus);
      is_sink[x] = second.IsIndependent(plus);
    }
    for (std::size_t y : current) {
      for (std::size_t x = 0; x < size; ++x) {
        if (in_set[x]) continue;
        const IndexSet exchanged = swapped(y, x);
        if (!is_source[x] && first.IsIndependent(exchanged)) out[y].push_back(x);
        if (!is_sink[x] && second.IsIndependent(exchanged)) out[x].push_back(y);
      }
    }
    for (auto& adj : out) std::sort(adj.begin(), adj.end());

    std::vector<std::size_t> parent(size, kNone);
    std::vector<bool> visited(size, false);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < size; ++x) {
      if (is_source[x]) {
        visited[x] = true;
        queue.push_back(x);
      }
    }
    std::size_t end = kNone;
    while (!queue.empty()) {
      const std::size_t node = queue.front();
      queue.pop_front();
      if (!in_set[node] && is_sink[node]) {
        end = node;
        break;
      }
      for (std::size_t next : out[node]) {
        if (visited[next]) continue;
        visited[next] = true;
        parent[next] = node;
        queue.push_back(next);
      }
    }
    if (end == kNone) return std::nullopt;
    for (std::size_t node = end; node != kNone; node = parent[node]) {
      in_set[node] = !in_set[node];
    }
    current.clear();
    for (std::size_t e = 0; e < size; ++e) {
      if (in_set[e]) current.push_back(e);
    }
  }
  return current;
}

std::optional<IndexSet> FindWitness(const GadgetInstance& inst) {
  inst.Validate();
  const std::size_t m = inst.ground_size();
  std::vector<std::string> ground;
  ground.reserve(m);
  for (std::size_t e : inst.left_edges) ground.push_back(inst.b.labels()[e]);
  // Contract E_right: the left edges with their own minors.
  IndependenceOracle linear(ground, [&inst](std::span<const std::size_t> s) {
    IndexSet edges;
    edges.reserve(s.size());
    for (std::size_t i : s) edges.push_back(inst.left_edges[i]);
    return inst.b.BaseMinor(edges) > 0;
  });
  std::vector<std::size_t> position(inst.b.dim(), 0);
  for (std::size_t i = 0; i < m; ++i) position[inst.left_edges[i]] = i;
  std::vector<IndexSet> parts;
  for (const IndexSet& part : inst.parts) {
    IndexSet local;
    for (std::size_t e : part) local.push_back(position[e]);
    parts.push_back(std::move(local));
  }
  IndependenceOracle layers =
      PartitionMatroid(ground, parts, std::vector<std::size_t>(parts.size(), 1));

  const auto found = MatroidIntersection(linear, layers, inst.layers());
  if (!found) return std::nullopt;
  IndexSet witness;
  for (std::size_t i : *found) witness.push_back(inst.left_edges[i]);
  witness.insert(witness.end(), inst.right_edges.begin(), inst.right_edges.end());
  std::sort(witness.begin(), witness.end());

  if (!inst.graph.IsSpanningTree(witness) || inst.b.PrincipalMinor(witness) <= 0) {
    throw Error("FindWitness: witness failed its postcondition");
  }
  return witness;
}

}  // namespace dppcount
