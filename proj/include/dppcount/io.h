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

// JSON readers and writers for matrices, graphs, instance bundles and
// reduction reports. Rationals travel as "p/q" or integer strings; readers
// also accept JSON integers. All readers throw InvalidArgument on malformed
// input.

#ifndef DPPCOUNT_IO_H_
#define DPPCOUNT_IO_H_

#include <optional>
#include <string>

#include "dppcount/dpp.h"
#include "dppcount/graph.h"
#include "dppcount/linalg.h"
#include "dppcount/mixed_discriminant.h"
#include "dppcount/reductions.h"
#include "json.hpp"

namespace dppcount {

using Json = nlohmann::ordered_json;

Rational RationalFromJson(const Json& j);
Json RationalToJson(const Rational& q);

// { "labels": [...], "rows": [[...]], "weights": [...] }. Labels default to
// "1".."n"; weights default to all ones and are omitted when all ones.
WeightedPSD MatrixFromJson(const Json& j);
Json MatrixToJson(const WeightedPSD& m);

// Unlabelled square matrix: { "rows": [[...]] }.
Matrix PlainMatrixFromJson(const Json& j);
Json PlainMatrixToJson(const Matrix& m);

// { "vertices": [...], "edges": [[id, u, v], ...] }
Graph GraphFromJson(const Json& j);
Json GraphToJson(const Graph& g);

// { "left": [...], "right": [...], "edges": [[u, w], ...] }
BipartiteGraph BipartiteFromJson(const Json& j);
Json BipartiteToJson(const BipartiteGraph& b);

// { "matrices": [matrix, ...] }
MDInstance MDInstanceFromJson(const Json& j);
Json MDInstanceToJson(const MDInstance& k);

// { "graph": ..., "matrix": ..., "weights": ..., "constraint": ...,
//   "parts": [[label, ...], ...] }. Top-level weights replace any weights
// inside "matrix". Validates the result.
ConstrainedDPP BundleFromJson(const Json& j);
Json BundleToJson(const ConstrainedDPP& dpp);

// { "witness": [...], "x": ..., "y": ..., "oracle_value": ...,
//   "estimate": ..., "bounds_check": {...} } plus bookkeeping fields.
Json ReportToJson(const ReductionReport& report,
                  const std::optional<BoundsCheck>& check);

Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& j);

}  // namespace dppcount

#endif  // DPPCOUNT_IO_H_
