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

#include "dppcount/io.h"

#include <fstream>
#include <sstream>

#include "dppcount/error.h"

namespace dppcount {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw InvalidArgument("malformed input: " + what);
}

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) Malformed(std::string("expected an object holding \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) Malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& Array(const Json& j, const char* what) {
  if (!j.is_array()) Malformed(std::string(what) + " must be an array");
  return j;
}

std::string StringFromJson(const Json& j, const char* what) {
  if (!j.is_string()) Malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> StringList(const Json& j, const char* what) {
  std::vector<std::string> out;
  for (const Json& item : Array(j, what)) out.push_back(StringFromJson(item, what));
  return out;
}

Matrix RowsFromJson(const Json& rows) {
  Array(rows, "rows");
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const Json& row = Array(rows[i], "matrix row");
    if (row.size() != n) Malformed("matrix is not square");
    for (std::size_t j = 0; j < n; ++j) m(i, j) = RationalFromJson(row[j]);
  }
  return m;
}

Json RowsToJson(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(RationalToJson(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Rational> WeightsFromJson(const Json& j) {
  std::vector<Rational> out;
  for (const Json& w : Array(j, "weights")) out.push_back(RationalFromJson(w));
  return out;
}

Json WeightsToJson(const std::vector<Rational>& weights) {
  Json out = Json::array();
  for (const Rational& w : weights) out.push_back(RationalToJson(w));
  return out;
}

bool AllOnes(const std::vector<Rational>& weights) {
  for (const Rational& w : weights) {
    if (w != 1) return false;
  }
  return true;
}

// Matrix reader with a fallback label list (the graph's edge ids in bundles).
WeightedPSD MatrixWithDefaultLabels(const Json& j,
                                    const std::vector<std::string>* fallback) {
  Matrix entries = RowsFromJson(Field(j, "rows"));
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = StringList(j["labels"], "labels");
  } else if (fallback != nullptr && fallback->size() == entries.rows()) {
    labels = *fallback;
  } else {
    labels = SymMatrix::DefaultLabels(entries.rows());
  }
  if (labels.size() != entries.rows()) Malformed("labels and rows differ in length");
  SymMatrix base(std::move(labels), std::move(entries));
  if (j.contains("weights")) return WeightedPSD(std::move(base), WeightsFromJson(j["weights"]));
  return WeightedPSD(std::move(base));
}

Constraint ConstraintFromName(const std::string& name) {
  if (name == "tree") return Constraint::kSpanningTree;
  if (name == "forest") return Constraint::kForest;
  if (name == "partition") return Constraint::kPartition;
  if (name == "none") return Constraint::kUnconstrained;
  Malformed("unknown constraint \"" + name + "\"");
}

}  // namespace

Rational RationalFromJson(const Json& j) {
  if (j.is_string()) return ParseRational(j.get<std::string>());
  if (j.is_number_integer()) return ParseRational(j.dump());
  Malformed("rational must be a \"p/q\" string or an integer, got " + j.dump());
}

Json RationalToJson(const Rational& q) { return FormatRational(q); }

WeightedPSD MatrixFromJson(const Json& j) { return MatrixWithDefaultLabels(j, nullptr); }

Json MatrixToJson(const WeightedPSD& m) {
  Json j = Json::object();
  j["labels"] = m.labels();
  j["rows"] = RowsToJson(m.base().entries());
  if (!AllOnes(m.weights())) j["weights"] = WeightsToJson(m.weights());
  return j;
}

Matrix PlainMatrixFromJson(const Json& j) { return RowsFromJson(Field(j, "rows")); }

Json PlainMatrixToJson(const Matrix& m) {
  Json j = Json::object();
  j["rows"] = RowsToJson(m);
  return j;
}

Graph GraphFromJson(const Json& j) {
  std::vector<std::string> vertices = StringList(Field(j, "vertices"), "vertices");
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const Json& e : Array(Field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 3) Malformed("edge must be [id, u, v]");
    edges.emplace_back(StringFromJson(e[0], "edge id"), StringFromJson(e[1], "vertex"),
                       StringFromJson(e[2], "vertex"));
  }
  return Graph(std::move(vertices), std::move(edges));
}

Json GraphToJson(const Graph& g) {
  Json j = Json::object();
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back(Json::array({e.id, g.vertices()[e.u], g.vertices()[e.v]}));
  }
  j["edges"] = std::move(edges);
  return j;
}

BipartiteGraph BipartiteFromJson(const Json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Json& e : Array(Field(j, "edges"), "edges")) {
    if (!e.is_array() || e.size() != 2) Malformed("bipartite edge must be [u, w]");
    edges.emplace_back(StringFromJson(e[0], "vertex"), StringFromJson(e[1], "vertex"));
  }
  return BipartiteGraph(StringList(Field(j, "left"), "left"),
                        StringList(Field(j, "right"), "right"), std::move(edges));
}

Json BipartiteToJson(const BipartiteGraph& b) {
  Json j = Json::object();
  j["left"] = b.left();
  j["right"] = b.right();
  Json edges = Json::array();
  for (const auto& [u, w] : b.edges()) {
    edges.push_back(Json::array({b.left()[u], b.right()[w]}));
  }
  j["edges"] = std::move(edges);
  return j;
}

MDInstance MDInstanceFromJson(const Json& j) {
  std::vector<Matrix> matrices;
  for (const Json& m : Array(Field(j, "matrices"), "matrices")) {
    matrices.push_back(PlainMatrixFromJson(m));
  }
  return MDInstance(std::move(matrices));
}

Json MDInstanceToJson(const MDInstance& k) {
  Json matrices = Json::array();
  for (const Matrix& m : k.matrices()) matrices.push_back(PlainMatrixToJson(m));
  Json j = Json::object();
  j["matrices"] = std::move(matrices);
  return j;
}

ConstrainedDPP BundleFromJson(const Json& j) {
  ConstrainedDPP dpp;
  std::vector<std::string> edge_ids;
  if (j.contains("graph")) {
    dpp.graph = GraphFromJson(j["graph"]);
    edge_ids = dpp.graph->EdgeIds();
  }
  if (j.contains("matrix")) {
    dpp.matrix = MatrixWithDefaultLabels(j["matrix"], dpp.graph ? &edge_ids : nullptr);
  } else if (dpp.graph) {
    dpp.matrix = WeightedPSD(SymMatrix::Identity(edge_ids));
  } else {
    Malformed("bundle needs a \"matrix\" or a \"graph\"");
  }
  if (j.contains("weights")) dpp.matrix = dpp.matrix.WithWeights(WeightsFromJson(j["weights"]));
  if (j.contains("constraint")) {
    dpp.constraint = ConstraintFromName(StringFromJson(j["constraint"], "constraint"));
  } else {
    dpp.constraint = dpp.graph ? Constraint::kSpanningTree : Constraint::kUnconstrained;
  }
  if (j.contains("parts")) {
    for (const Json& part : Array(j["parts"], "parts")) {
      dpp.parts.push_back(StringList(part, "part"));
    }
  }
  dpp.Validate();
  return dpp;
}

Json BundleToJson(const ConstrainedDPP& dpp) {
  Json j = Json::object();
  if (dpp.graph) j["graph"] = GraphToJson(*dpp.graph);
  Json matrix = Json::object();
  matrix["labels"] = dpp.matrix.labels();
  matrix["rows"] = RowsToJson(dpp.matrix.base().entries());
  j["matrix"] = std::move(matrix);
  j["weights"] = WeightsToJson(dpp.matrix.weights());
  j["constraint"] = ConstraintName(dpp.constraint);
  if (!dpp.parts.empty()) j["parts"] = dpp.parts;
  return j;
}

Json ReportToJson(const ReductionReport& report,
                  const std::optional<BoundsCheck>& check) {
  Json j = Json::object();
  j["declared_zero"] = report.declared_zero;
  j["witness"] = report.witness_labels;
  j["epsilon"] = RationalToJson(report.epsilon);
  j["delta"] = RationalToJson(report.delta);
  if (!report.declared_zero) {
    j["x"] = RationalToJson(report.x);
    if (report.y) j["y"] = RationalToJson(*report.y);
    j["oracle_value"] = RationalToJson(report.oracle_value);
    j["estimate"] = RationalToJson(report.estimate);
    j["normalizer"] = RationalToJson(report.normalizer);
    j["witness_minor"] = RationalToJson(report.witness_minor);
    Json bits = Json::object();
    bits["x"] = BitLength(report.x);
    if (report.y) bits["y"] = BitLength(*report.y);
    bits["oracle_value"] = BitLength(report.oracle_value);
    j["bit_lengths"] = std::move(bits);
  }
  j["n"] = report.n;
  j["m"] = report.m;
  j["scale"] = RationalToJson(report.scale);
  if (check) {
    Json b = Json::object();
    b["lower"] = RationalToJson(check->lower);
    b["upper"] = RationalToJson(check->upper);
    b["pass"] = check->pass;
    j["bounds_check"] = std::move(b);
  }
  return j;
}

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void WriteJsonFile(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error("write failed: " + path);
}

}  // namespace dppcount
