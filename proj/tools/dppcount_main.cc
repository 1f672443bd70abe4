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

// dppcount: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 input or parse error,
// 3 enumeration cap exceeded.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dppcount/dpp.h"
#include "dppcount/error.h"
#include "dppcount/gadget.h"
#include "dppcount/graph.h"
#include "dppcount/io.h"
#include "dppcount/mixed_discriminant.h"
#include "dppcount/reductions.h"
#include "dppcount/verify.h"

namespace dppcount {
namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kInputError = 2;
constexpr int kCapExceeded = 3;

struct Options {
  std::string input;
  std::string json_out;
  std::optional<unsigned> decimal;
  std::uint64_t seed = 0;
  std::optional<std::size_t> max_edges;
  std::optional<std::size_t> max_vertices;
  std::string epsilon = "1/4";
  std::string oracle = "exact";
  std::optional<std::string> noise;
  int direction = 1;
  std::size_t count = 1;
  std::size_t trials = 3;

  EnumerationCaps Caps() const {
    EnumerationCaps caps = EnumerationCaps::FromEnvironment();
    if (max_edges) caps.max_forest_edges = *max_edges;
    if (max_vertices) caps.max_tree_vertices = *max_vertices;
    return caps;
  }
};

void PrintValue(const Options& opt, const std::string& name, const Rational& value) {
  std::cout << FormatRational(value) << '\n';
  if (opt.decimal) std::cout << FormatDecimal(value, *opt.decimal) << '\n';
  if (!opt.json_out.empty()) {
    Json j = Json::object();
    j[name] = FormatRational(value);
    WriteJsonFile(opt.json_out, j);
  }
}

// Bundles carry their own constraint; `zt` and `zf` override it.
ConstrainedDPP LoadBundle(const Options& opt, std::optional<Constraint> forced) {
  Json j = ReadJsonFile(opt.input);
  if (forced) j["constraint"] = ConstraintName(*forced);
  return BundleFromJson(j);
}

int RunZ(const Options& opt, Constraint c) {
  const ConstrainedDPP dpp = LoadBundle(opt, c);
  PrintValue(opt, "value", Normalizer(dpp, opt.Caps()));
  return kOk;
}

int RunZNorm(const Options& opt) {
  const Json j = ReadJsonFile(opt.input);
  const WeightedPSD a = j.contains("rows") ? MatrixFromJson(j) : BundleFromJson(j).matrix;
  PrintValue(opt, "value", UnconstrainedNormalizer(a));
  return kOk;
}

int RunCountTrees(const Options& opt) {
  const Json j = ReadJsonFile(opt.input);
  const Graph g = GraphFromJson(j.contains("graph") ? j["graph"] : j);
  PrintValue(opt, "value", CountSpanningTrees(g));
  return kOk;
}

int RunCountPm(const Options& opt) {
  const BipartiteGraph b = BipartiteFromJson(ReadJsonFile(opt.input));
  PrintValue(opt, "value", CountPerfectMatchings(b, opt.Caps()));
  return kOk;
}

int RunMixedDisc(const Options& opt) {
  const MDInstance k = MDInstanceFromJson(ReadJsonFile(opt.input));
  PrintValue(opt, "value", MixedDiscriminant(k, opt.Caps()));
  return kOk;
}

int RunSample(const Options& opt) {
  const ConstrainedDPP dpp = LoadBundle(opt, std::nullopt);
  const auto samples = SampleExact(dpp, opt.seed, opt.count, opt.Caps());
  Json out = Json::array();
  for (const auto& s : samples) {
    std::cout << Json(s).dump() << '\n';
    out.push_back(s);
  }
  if (!opt.json_out.empty()) WriteJsonFile(opt.json_out, out);
  return kOk;
}

int RunReducePmZt(const Options& opt) {
  const BipartiteGraph b = BipartiteFromJson(ReadJsonFile(opt.input));
  const EnumerationCaps caps = opt.Caps();
  const Integer via = CountPmViaZt(b, caps);
  const Integer direct = CountPerfectMatchings(b, caps);
  std::cout << "gadget_zt " << via.get_str() << '\n'
            << "matchings " << direct.get_str() << '\n';
  if (!opt.json_out.empty()) {
    Json j = Json::object();
    j["gadget_zt"] = via.get_str();
    j["matchings"] = direct.get_str();
    j["pass"] = via == direct;
    WriteJsonFile(opt.json_out, j);
  }
  return via == direct ? kOk : kVerificationFailed;
}

int RunReduceZtZf(const Options& opt) {
  const ConstrainedDPP dpp = LoadBundle(opt, Constraint::kSpanningTree);
  const EnumerationCaps caps = opt.Caps();
  const Rational via = ZtViaZf(dpp.matrix, *dpp.graph, caps);
  const Rational direct = ZTree(dpp.matrix, *dpp.graph, caps);
  std::cout << "interpolated " << FormatRational(via) << '\n'
            << "direct " << FormatRational(direct) << '\n';
  if (!opt.json_out.empty()) {
    Json j = Json::object();
    j["interpolated"] = FormatRational(via);
    j["direct"] = FormatRational(direct);
    j["pass"] = via == direct;
    WriteJsonFile(opt.json_out, j);
  }
  return via == direct ? kOk : kVerificationFailed;
}

OracleSpec ParseOracle(const Options& opt) {
  std::optional<Rational> noise;
  if (opt.noise) noise = ParseRational(*opt.noise);
  if (opt.oracle == "exact") {
    if (noise) throw InvalidArgument("--noise has no effect with the exact oracle");
    return OracleSpec::Exact();
  }
  if (opt.oracle == "noisy") return OracleSpec::Noisy(opt.seed, noise);
  if (opt.oracle == "adversarial") return OracleSpec::Adversarial(opt.direction, noise);
  throw InvalidArgument("unknown oracle \"" + opt.oracle + "\"");
}

int RunApReduce(const Options& opt, OracleTarget target) {
  const MDInstance k = MDInstanceFromJson(ReadJsonFile(opt.input));
  const Rational epsilon = ParseRational(opt.epsilon);
  const OracleSpec spec = ParseOracle(opt);
  const EnumerationCaps caps = opt.Caps();
  SimulatedOracle oracle(target, spec, caps);
  const ReductionReport report = target == OracleTarget::kSpanningTree
                                     ? ApReduceMdToZt(k, epsilon, oracle)
                                     : ApReduceMdToZf(k, epsilon, oracle);
  const Rational d = MixedDiscriminant(k, caps);
  const BoundsCheck check = CheckSandwich(report, d, spec.mode == OracleMode::kExact);
  Json j = ReportToJson(report, check);
  j["oracle"] = OracleModeName(spec.mode);
  j["mixed_discriminant"] = FormatRational(d);
  if (opt.decimal && !report.declared_zero) {
    j["estimate_decimal"] = FormatDecimal(report.estimate, *opt.decimal);
    j["mixed_discriminant_decimal"] = FormatDecimal(d, *opt.decimal);
  }
  std::cout << j.dump(2) << '\n';
  if (!opt.json_out.empty()) WriteJsonFile(opt.json_out, j);
  return check.pass ? kOk : kVerificationFailed;
}

int RunVerify(const Options& opt) {
  const std::vector<PropertyResult> results = RunVerifySuite(opt.seed, opt.trials, opt.Caps());
  bool all = true;
  Json out = Json::array();
  for (const PropertyResult& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.trials << " trials)";
    if (!r.pass) std::cout << ": " << r.detail;
    std::cout << '\n';
    all = all && r.pass;
    Json j = Json::object();
    j["name"] = r.name;
    j["pass"] = r.pass;
    j["trials"] = r.trials;
    if (!r.pass) j["detail"] = r.detail;
    out.push_back(std::move(j));
  }
  if (!opt.json_out.empty()) WriteJsonFile(opt.json_out, out);
  return all ? kOk : kVerificationFailed;
}

void AddInput(CLI::App* sub, Options& opt, const std::string& what) {
  sub->add_option("input", opt.input, what)->required()->check(CLI::ExistingFile);
}

void AddCommon(CLI::App* sub, Options& opt) {
  sub->add_option("--json", opt.json_out, "Also write the result as JSON to this file");
  sub->add_option("--decimal", opt.decimal, "Add a decimal rendering with k digits");
  sub->add_option("--max-edges", opt.max_edges, "Cap on |E| for forest enumeration");
  sub->add_option("--max-vertices", opt.max_vertices, "Cap on |V| for tree enumeration");
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact normalizers of constrained DPPs and the reductions between them"};
  app.require_subcommand(1);
  Options opt;

  auto* zt = app.add_subcommand("zt", "Sum of det(A_S) over spanning trees");
  auto* zf = app.add_subcommand("zf", "Sum of det(A_S) over forests");
  auto* znorm = app.add_subcommand("znorm", "det(A + I)");
  auto* trees = app.add_subcommand("count-trees", "Spanning tree count by Kirchhoff");
  auto* pm = app.add_subcommand("count-pm", "Perfect matching count (permanent)");
  auto* md = app.add_subcommand("mixed-disc", "Mixed discriminant");
  auto* sample = app.add_subcommand("sample", "Exact samples from a constrained DPP");
  auto* rpm = app.add_subcommand("reduce-pm-zt", "Count perfect matchings through the tree gadget");
  auto* rzf = app.add_subcommand("reduce-zt-zf", "Z_T by interpolating Z_F");
  auto* apt = app.add_subcommand("apreduce-zt", "Mixed discriminant through one Z_T oracle call");
  auto* apf = app.add_subcommand("apreduce-zf", "Mixed discriminant through one Z_F oracle call");
  auto* verify = app.add_subcommand("verify", "Property suite on seeded random instances");

  AddInput(zt, opt, "Instance bundle");
  AddInput(zf, opt, "Instance bundle");
  AddInput(znorm, opt, "Matrix or instance bundle");
  AddInput(trees, opt, "Graph or instance bundle");
  AddInput(pm, opt, "Bipartite graph");
  AddInput(md, opt, "Mixed-discriminant instance");
  AddInput(sample, opt, "Instance bundle");
  AddInput(rpm, opt, "Bipartite graph");
  AddInput(rzf, opt, "Instance bundle with a graph");
  AddInput(apt, opt, "Mixed-discriminant instance");
  AddInput(apf, opt, "Mixed-discriminant instance");
  for (CLI::App* sub : {zt, zf, znorm, trees, pm, md, sample, rpm, rzf, apt, apf, verify}) {
    AddCommon(sub, opt);
  }
  for (CLI::App* sub : {sample, apt, apf, verify}) {
    sub->add_option("--seed", opt.seed, "Random seed");
  }
  sample->add_option("--count", opt.count, "Number of samples")->check(CLI::PositiveNumber);
  for (CLI::App* sub : {apt, apf}) {
    sub->add_option("--epsilon", opt.epsilon, "Target accuracy p/q in (0, 1)");
    sub->add_option("--oracle", opt.oracle, "exact | noisy | adversarial")
        ->check(CLI::IsMember({"exact", "noisy", "adversarial"}));
    sub->add_option("--noise", opt.noise, "Oracle spread p/q, replacing epsilon/2");
    sub->add_option("--direction", opt.direction, "Adversarial direction, +1 or -1")
        ->check(CLI::IsMember({-1, 1}));
  }
  verify->add_option("--n", opt.trials, "Instances per property")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*zt) return RunZ(opt, Constraint::kSpanningTree);
    if (*zf) return RunZ(opt, Constraint::kForest);
    if (*znorm) return RunZNorm(opt);
    if (*trees) return RunCountTrees(opt);
    if (*pm) return RunCountPm(opt);
    if (*md) return RunMixedDisc(opt);
    if (*sample) return RunSample(opt);
    if (*rpm) return RunReducePmZt(opt);
    if (*rzf) return RunReduceZtZf(opt);
    if (*apt) return RunApReduce(opt, OracleTarget::kSpanningTree);
    if (*apf) return RunApReduce(opt, OracleTarget::kForest);
    if (*verify) return RunVerify(opt);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kInputError;
}

}  // namespace
}  // namespace dppcount

int main(int argc, char** argv) { return dppcount::Main(argc, argv); }
