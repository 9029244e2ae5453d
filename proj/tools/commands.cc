// Copyright 2026 The Robustfair Authors.
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

#include "commands.h"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <nlohmann/json.hpp>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "io.h"
#include "robustfair/clustering.h"
#include "robustfair/errors.h"
#include "robustfair/fair_multicolor.h"
#include "robustfair/fair_two_color.h"
#include "robustfair/ftrs.h"
#include "robustfair/generators.h"
#include "robustfair/oracles.h"
#include "robustfair/reductions.h"
#include "robustfair/streaming.h"

namespace robustfair::cli {
namespace {

using nlohmann::json;

struct Options {
  std::string report;
  std::uint64_t seed = 42;
  int threads = 1;

  std::string graph, pairs, out, preserver, input, ratio, stream, colors,
      instance, kind, colors_out;
  std::vector<std::string> inputs;
  std::vector<int> items;
  bool slack = false, exhaustive = false, oracle = false;
  std::uint64_t samples = 20000;
  int k = 2, n = -1, m = 1, ell = 1, count = 3, clusters = 0, den = 4;
  int cap = oracle::kDefaultPartitionCap;
  double g = 8, eps = 0.2, density = 0.3;
  std::int64_t multiplier = 2;
};

// Failed verification; the report is already written.
struct VerifyFailed {};

double Sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::stod(buf);
}

json ClusteringJson(const Clustering& c) {
  return {{"num_clusters", c.num_clusters()}, {"clusters", c.Clusters()}};
}

json Base(const std::string& command, const Options& o) {
  return {{"schema", kSchema}, {"version", kVersion}, {"command", command},
          {"seed", o.seed},    {"threads", o.threads}};
}

void Emit(const json& report, const Options& o, std::ostream& out) {
  if (o.report.empty()) {
    out << report.dump(2) << '\n';
    return;
  }
  std::ofstream file(o.report);
  if (!file) throw InputError("cannot write " + o.report);
  file << report.dump(2) << '\n';
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream file(path);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

struct Loaded {
  std::string text;
  std::string hash;
};

Loaded Load(const std::string& path) {
  Loaded l{io::ReadFile(path), {}};
  l.hash = io::HashHex(l.text);
  return l;
}

ColorProfile MakeProfile(std::vector<int> colors, const std::string& ratio) {
  if (ratio.empty()) return ColorProfile(std::move(colors));
  return ColorProfile(std::move(colors), ParseRatio(ratio));
}

struct ColoredInput {
  Clustering clustering;
  ColorProfile profile;
  std::string hash;
};

ColoredInput LoadColored(const std::string& path, const std::string& ratio) {
  const Loaded file = Load(path);
  std::istringstream in(file.text);
  io::ClusteringFile cf = io::ReadClustering(in, path);
  if (!cf.colors) throw InputError(path + ": no color column");
  return {cf.clustering, MakeProfile(*cf.colors, ratio), file.hash};
}

std::vector<int> LoadColors(const std::string& path, json& hashes) {
  const Loaded file = Load(path);
  hashes[path] = file.hash;
  std::istringstream in(file.text);
  return io::ReadColors(in, path);
}

json RatioOrNull(std::int64_t got, std::int64_t best) {
  if (best == 0) return nullptr;
  return Rational(got, best).ToString();
}

std::string ClusteringText(const Clustering& c, const ColorProfile* profile) {
  std::ostringstream text;
  io::WriteClustering(text, c, profile ? &profile->colors() : nullptr);
  return text.str();
}

// ---- ftrs

int FtrsBuild(const Options& o, std::ostream& out) {
  json report = Base("ftrs build", o);
  const Loaded gfile = Load(o.graph);
  std::istringstream gin(gfile.text);
  const DirectedGraph g = io::ReadGraph(gin, o.graph);
  const Loaded pfile = Load(o.pairs);
  std::istringstream pin(pfile.text);
  const VertexPairSet pairs(io::ReadPairs(pin, o.pairs, g.num_vertices()));
  if (pairs.empty()) throw InputError(o.pairs + ": no pairs");

  FtrsBuilder builder(g, {}, o.threads);
  builder.Prefetch(pairs.pairs());
  Preserver h;
  if (o.slack) {
    SlackResult slack = builder.Slack(pairs);
    h = std::move(slack.preserver);
    const SlackStats& s = slack.stats;
    report["slack"] = {{"covered", slack.covered.size()},
                       {"requested", pairs.size()},
                       {"L", s.path_prefix_length},
                       {"family_size", s.family_size},
                       {"family_min_subset", s.family_min_subset},
                       {"hitting_set", s.hitting_set_size},
                       {"high_frequency", s.high_frequency_vertices},
                       {"pool_initial", s.coupling_pool_initial},
                       {"pool_final", s.coupling_pool_final},
                       {"h1_edges", s.h1_edges},
                       {"h2_edges", s.h2_edges},
                       {"h3_edges", s.h3_edges},
                       {"h4_edges", s.h4_edges}};
  } else {
    h = builder.Full(pairs);
  }
  report["params"] = {{"graph", o.graph}, {"pairs", o.pairs},
                      {"slack", o.slack}, {"k", kFaultBudget}};
  report["inputs"] = {{"graph", gfile.hash}, {"pairs", pfile.hash}};
  report["n"] = g.num_vertices();
  report["m"] = g.num_edges();
  report["num_pairs"] = pairs.size();
  report["preserver_edges"] = h.size();
  const json hj = io::PreserverToJson(h);
  if (o.out.empty()) {
    report["preserver"] = hj;
  } else {
    WriteText(o.out, hj.dump() + "\n");
    report["out"] = o.out;
  }
  Emit(report, o, out);
  return kExitOk;
}

json VerdictJson(const oracle::FtrsVerdict& v) {
  json j = {{"passed", v.passed},
            {"sampled", v.sampled},
            {"fault_sets", v.fault_sets}};
  if (!v.reason.empty()) j["reason"] = v.reason;
  if (v.counterexample) {
    json faults = json::array();
    for (const Edge& e : v.counterexample->faults) {
      faults.push_back({e.tail, e.head});
    }
    j["counterexample"] = {
        {"pair", {v.counterexample->pair.s, v.counterexample->pair.t}},
        {"faults", faults},
        {"reachable_in_graph", v.counterexample->reachable_in_graph}};
  }
  return j;
}

int FtrsVerify(const Options& o, std::ostream& out) {
  json report = Base("ftrs verify", o);
  const Loaded gfile = Load(o.graph);
  std::istringstream gin(gfile.text);
  const DirectedGraph g = io::ReadGraph(gin, o.graph);
  const Loaded hfile = Load(o.preserver);
  json hj;
  try {
    hj = json::parse(hfile.text);
  } catch (const json::parse_error& e) {
    throw InputError(o.preserver + ": " + e.what());
  }
  const Preserver h = io::PreserverFromJson(hj, o.preserver);
  if (h.num_vertices != g.num_vertices()) {
    throw InputError(o.preserver + ": vertex count differs from the graph");
  }
  std::vector<VertexPair> pairs = h.pairs.pairs();
  report["inputs"] = {{"graph", gfile.hash}, {"preserver", hfile.hash}};
  if (!o.pairs.empty()) {
    const Loaded pfile = Load(o.pairs);
    std::istringstream pin(pfile.text);
    pairs = io::ReadPairs(pin, o.pairs, g.num_vertices());
    report["inputs"]["pairs"] = pfile.hash;
  }
  oracle::VerifyOptions vo;
  vo.k = o.k;
  vo.force_exhaustive = o.exhaustive;
  vo.samples = o.samples;
  vo.seed = o.seed;
  const oracle::FtrsVerdict v = oracle::VerifyFtrs(g, h.edges, pairs, vo);
  report["params"] = {{"graph", o.graph},
                      {"preserver", o.preserver},
                      {"k", o.k},
                      {"exhaustive", o.exhaustive},
                      {"samples", o.samples},
                      {"exhaustive_limit", vo.exhaustive_limit}};
  report["num_pairs"] = pairs.size();
  report["preserver_edges"] = h.size();
  report.update(VerdictJson(v));
  Emit(report, o, out);
  return v.passed ? kExitOk : kExitVerifyFailed;
}

// ---- fair

int FairClosest(const Options& o, std::ostream& out) {
  json report = Base("fair closest", o);
  const ColoredInput in = LoadColored(o.input, o.ratio);
  const Clustering& c = in.clustering;
  const ColorProfile& profile = in.profile;
  const FairMethod method = ChooseFairMethod(profile);
  json stages = json::object();
  Clustering result = c;
  switch (method) {
    case FairMethod::kSingleColor:
      break;
    case FairMethod::kTwoColor: {
      const TwoColorStages s = ClosestFairTwoColorStages(c, profile);
      stages["pdc_dist"] = Dist(c, s.pdc);
      stages["fair_from_pdc_dist"] = Dist(s.pdc, s.fair);
      result = s.fair;
      break;
    }
    case FairMethod::kEqui: {
      const MultiColorStages s = FairEquiStages(c, profile);
      stages["group_balanced_dist"] = Dist(c, s.intermediate);
      stages["fair_from_balanced_dist"] = Dist(s.intermediate, s.fair);
      result = s.fair;
      break;
    }
    case FairMethod::kGeneral: {
      const MultiColorStages s = FairGeneralStages(c, profile);
      stages["pdc_dist"] = Dist(c, s.intermediate);
      stages["fair_from_pdc_dist"] = Dist(s.intermediate, s.fair);
      result = s.fair;
      break;
    }
  }
  report["params"] = {{"input", o.input},
                      {"ratio", profile.RatioString()},
                      {"oracle", o.oracle},
                      {"oracle_cap", o.cap}};
  report["inputs"] = {{"input", in.hash}};
  report["method"] = FairMethodName(method);
  report["n"] = c.num_vertices();
  report["stages"] = stages;
  report["dist"] = Dist(c, result);
  report["fair"] = IsFair(result, profile);
  report["clustering"] = ClusteringJson(result);
  if (o.oracle) {
    const oracle::PartitionResult best = oracle::ClosestFair(c, profile, o.cap);
    report["oracle"] = {{"dist", best.dist},
                        {"enumerated", best.enumerated},
                        {"ratio", RatioOrNull(Dist(c, result), best.dist)}};
  }
  if (!o.out.empty()) WriteText(o.out, ClusteringText(result, &profile));
  Emit(report, o, out);
  return kExitOk;
}

int FairConsensus(const Options& o, std::ostream& out) {
  json report = Base("fair consensus", o);
  std::vector<Clustering> inputs;
  std::optional<std::vector<int>> colors;
  json hashes = json::object();
  for (const std::string& path : o.inputs) {
    const Loaded file = Load(path);
    hashes[path] = file.hash;
    std::istringstream in(file.text);
    io::ClusteringFile cf = io::ReadClustering(in, path);
    if (cf.colors) {
      if (colors && *colors != *cf.colors) {
        throw InputError(path + ": colors disagree with an earlier input");
      }
      colors = std::move(cf.colors);
    }
    inputs.push_back(std::move(cf.clustering));
  }
  if (!o.colors.empty()) colors = LoadColors(o.colors, hashes);
  if (!colors) throw InputError("no colors: add a color column or --colors");
  const ColorProfile profile = MakeProfile(*colors, o.ratio);
  const FairSolver fair = [](const Clustering& c, const ColorProfile& p) {
    return ClosestFair(c, p);
  };
  const ConsensusResult r =
      FairConsensusOffline(inputs, profile, o.ell, fair, o.threads);
  json candidates = json::array();
  for (std::size_t i = 0; i < r.candidates.size(); ++i) {
    candidates.push_back(
        {{"source", i}, {"distances", Distances(inputs, r.candidates[i])}});
  }
  report["params"] = {{"inputs", o.inputs},
                      {"ell", o.ell},
                      {"ratio", profile.RatioString()},
                      {"oracle", o.oracle},
                      {"oracle_cap", o.cap}};
  report["inputs"] = hashes;
  report["candidates"] = candidates;
  report["chosen"] = r.chosen;
  report["distances"] = Distances(inputs, r.clustering);
  report["objective"] = Sig12(r.objective);
  report["clustering"] = ClusteringJson(r.clustering);
  if (o.oracle) {
    const oracle::ConsensusResult best =
        oracle::FairConsensus(inputs, profile, o.ell, o.cap);
    report["oracle"] = {{"objective", Sig12(best.objective)},
                        {"distances", best.distances},
                        {"enumerated", best.enumerated}};
  }
  if (!o.out.empty()) WriteText(o.out, ClusteringText(r.clustering, &profile));
  Emit(report, o, out);
  return kExitOk;
}

int FairStream(const Options& o, std::ostream& out) {
  json report = Base("fair stream", o);
  if (o.n < 1) throw InputError("--n must be positive");
  json hashes = json::object();
  const ColorProfile profile = MakeProfile(LoadColors(o.colors, hashes),
                                           o.ratio);
  std::ifstream file(o.stream);
  if (!file) throw InputError("cannot open " + o.stream);
  io::StreamReader reader(file, o.stream);
  StreamParams params;
  params.g = o.g;
  params.eps = o.eps;
  params.ell = o.ell;
  params.seed = o.seed;
  params.threads = o.threads;
  const StreamResult r = AlgoFairConStream(
      [&](StreamTriple& t) { return reader.Next(t); }, o.n, o.m, profile,
      params,
      [](const Clustering& c, const ColorProfile& p) {
        return ClosestFair(c, p);
      },
      DefaultFairCcSolver(o.seed));
  hashes[o.stream] = reader.Hash();
  json candidates = json::array();
  for (const Candidate& cand : r.candidates) {
    candidates.push_back(cand.Provenance());
  }
  report["params"] = {{"stream", o.stream}, {"colors", o.colors},
                      {"n", o.n},           {"m", o.m},
                      {"g", o.g},           {"eps", o.eps},
                      {"ell", o.ell},       {"ratio", profile.RatioString()}};
  report["inputs"] = hashes;
  report["samples"] = {{"j", r.samples.j},
                       {"k", r.samples.k},
                       {"j_draws", r.samples.j_draws},
                       {"k_draws", r.samples.k_draws}};
  report["candidates"] = candidates;
  report["chosen"] = r.chosen;
  report["chosen_provenance"] = r.candidates[r.chosen].Provenance();
  report["objective"] = Sig12(r.sample_objective);
  const std::size_t bound =
      (r.samples.j.size() + r.samples.k.size()) * static_cast<std::size_t>(o.n);
  report["space"] = {{"peak_records", r.peak_records},
                     {"final_records", r.final_records},
                     {"record_bound", bound},
                     {"triples_seen", r.triples_seen}};
  report["fair"] = IsFair(r.clustering, profile);
  report["clustering"] = ClusteringJson(r.clustering);
  if (!o.out.empty()) WriteText(o.out, ClusteringText(r.clustering, &profile));
  Emit(report, o, out);
  return kExitOk;
}

int FairFairfyCc(const Options& o, std::ostream& out) {
  json report = Base("fair fairfy-cc", o);
  json hashes = json::object();
  const Loaded file = Load(o.instance);
  hashes[o.instance] = file.hash;
  std::istringstream in(file.text);
  const WeightedCCInstance inst = io::ReadWeightedInstance(in, o.instance, o.n);
  const ColorProfile profile = MakeProfile(LoadColors(o.colors, hashes),
                                           o.ratio);
  const SolverHandle handle = DefaultSolverHandle(o.seed);
  const FairfyResult r = FairfyCcStages(inst, profile, handle);
  const Rational unfair_cost = CcCost(inst, r.unfair);
  const Rational fair_cost = CcCost(inst, r.fair);
  report["params"] = {{"instance", o.instance},
                      {"colors", o.colors},
                      {"ratio", profile.RatioString()},
                      {"rho", handle.rho},
                      {"alpha", handle.alpha},
                      {"cc_solver", "pivot"},
                      {"oracle", o.oracle},
                      {"oracle_cap", o.cap}};
  report["inputs"] = hashes;
  report["n"] = inst.num_vertices();
  report["unfair_cost"] = unfair_cost.ToString();
  report["fair_cost"] = fair_cost.ToString();
  report["dist_unfair_fair"] = Dist(r.unfair, r.fair);
  report["fair"] = IsFair(r.fair, profile);
  report["clustering"] = ClusteringJson(r.fair);
  if (o.oracle) {
    const oracle::CcResult best = oracle::CcOpt(inst, &profile, o.cap);
    report["oracle"] = {{"fair_cost", best.cost.ToString()},
                        {"enumerated", best.enumerated}};
    if (best.cost != 0) {
      report["oracle"]["ratio"] = (fair_cost / best.cost).ToString();
    }
  }
  if (!o.out.empty()) WriteText(o.out, ClusteringText(r.fair, &profile));
  Emit(report, o, out);
  return kExitOk;
}

// ---- gen

int GenThreePartition(const Options& o, std::ostream& out) {
  json report = Base("gen threepartition", o);
  const ThreePartitionInstance inst = GenNpHardInstance(o.items, o.multiplier);
  report["params"] = {{"items", o.items}, {"p", o.multiplier}};
  report["target"] = inst.target;
  report["n"] = inst.clustering.num_vertices();
  report["ratio"] = inst.profile.RatioString();
  report["tau"] = inst.tau;
  report["split_tau"] = inst.split_tau;
  const auto triples = SolveThreePartition(inst.items);
  report["yes_instance"] = triples.has_value();
  if (triples) {
    report["triples"] = *triples;
    const Clustering w = ThreePartitionWitness(inst, *triples);
    report["witness_dist"] = Dist(inst.clustering, w);
    report["witness_fair"] = IsFair(w, inst.profile);
    const Clustering split = ThreePartitionSplitWitness(inst, *triples);
    report["split_witness_dist"] = Dist(inst.clustering, split);
    report["split_witness_fair"] = IsFair(split, inst.profile);
  }
  const std::string text = ClusteringText(inst.clustering, &inst.profile);
  report["instance_hash"] = io::HashHex(text);
  if (o.out.empty()) {
    report["instance"] = text;
  } else {
    WriteText(o.out, text);
    report["out"] = o.out;
  }
  Emit(report, o, out);
  return kExitOk;
}

int GenRandom(const Options& o, std::ostream& out) {
  json report = Base("gen random", o);
  if (o.n < 0) throw InputError("--n is required");
  json params = {{"kind", o.kind}, {"n", o.n}};
  std::ostringstream text;
  if (o.kind == "digraph") {
    params["p"] = o.density;
    io::WriteGraph(text, gen::RandomDigraph(o.n, o.density, o.seed));
  } else if (o.kind == "pairs") {
    params["count"] = o.count;
    io::WritePairs(text, gen::RandomPairs(o.n, o.count, o.seed));
  } else if (o.kind == "clustering" || o.kind == "stream") {
    std::mt19937_64 seeds(o.seed);
    std::optional<std::vector<int>> colors;
    if (!o.ratio.empty()) {
      colors = gen::RandomColors(o.n, ParseRatio(o.ratio), seeds());
      params["ratio"] = o.ratio;
    }
    params["clusters"] = o.clusters;
    if (o.kind == "clustering") {
      const Clustering c = gen::RandomClustering(o.n, seeds(), o.clusters);
      io::WriteClustering(text, c, colors ? &*colors : nullptr);
    } else {
      params["m"] = o.m;
      std::vector<Clustering> inputs;
      for (int j = 0; j < o.m; ++j) {
        inputs.push_back(gen::RandomClustering(o.n, seeds(), o.clusters));
      }
      io::WriteStream(text, gen::RandomStream(inputs, seeds()));
      if (colors && !o.colors_out.empty()) {
        std::ostringstream ctext;
        for (int v = 0; v < o.n; ++v) ctext << v << ' ' << (*colors)[v] << '\n';
        WriteText(o.colors_out, ctext.str());
        report["colors_out"] = o.colors_out;
      }
    }
  } else if (o.kind == "cc-instance") {
    params["den"] = o.den;
    io::WriteWeightedInstance(text, gen::RandomCcInstance(o.n, o.seed, o.den));
  } else {
    throw InputError("unknown kind '" + o.kind + "'");
  }
  report["params"] = params;
  report["instance_hash"] = io::HashHex(text.str());
  if (o.out.empty()) {
    report["instance"] = text.str();
  } else {
    WriteText(o.out, text.str());
    report["out"] = o.out;
  }
  Emit(report, o, out);
  return kExitOk;
}

// ---- oracle

int OracleClosest(const Options& o, std::ostream& out, bool pdc) {
  json report = Base(pdc ? "oracle pdc" : "oracle closest", o);
  const ColoredInput in = LoadColored(o.input, o.ratio);
  const oracle::PartitionResult r =
      pdc ? oracle::ClosestPdc(in.clustering, in.profile, o.cap)
          : oracle::ClosestFair(in.clustering, in.profile, o.cap);
  report["params"] = {{"input", o.input},
                      {"ratio", in.profile.RatioString()},
                      {"cap", o.cap}};
  report["inputs"] = {{"input", in.hash}};
  report["dist"] = r.dist;
  report["enumerated"] = r.enumerated;
  report["clustering"] = ClusteringJson(r.clustering);
  Emit(report, o, out);
  return kExitOk;
}

int OracleConsensus(const Options& o, std::ostream& out) {
  json report = Base("oracle consensus", o);
  std::vector<Clustering> inputs;
  std::optional<std::vector<int>> colors;
  json hashes = json::object();
  for (const std::string& path : o.inputs) {
    const Loaded file = Load(path);
    hashes[path] = file.hash;
    std::istringstream in(file.text);
    io::ClusteringFile cf = io::ReadClustering(in, path);
    if (cf.colors) colors = std::move(cf.colors);
    inputs.push_back(std::move(cf.clustering));
  }
  if (!o.colors.empty()) colors = LoadColors(o.colors, hashes);
  if (!colors) throw InputError("no colors: add a color column or --colors");
  const ColorProfile profile = MakeProfile(*colors, o.ratio);
  const oracle::ConsensusResult r =
      oracle::FairConsensus(inputs, profile, o.ell, o.cap);
  report["params"] = {{"inputs", o.inputs},
                      {"ell", o.ell},
                      {"ratio", profile.RatioString()},
                      {"cap", o.cap}};
  report["inputs"] = hashes;
  report["objective"] = Sig12(r.objective);
  report["distances"] = r.distances;
  report["enumerated"] = r.enumerated;
  report["clustering"] = ClusteringJson(r.clustering);
  Emit(report, o, out);
  return kExitOk;
}

int OracleCc(const Options& o, std::ostream& out) {
  json report = Base("oracle cc", o);
  json hashes = json::object();
  const Loaded file = Load(o.instance);
  hashes[o.instance] = file.hash;
  std::istringstream in(file.text);
  const WeightedCCInstance inst = io::ReadWeightedInstance(in, o.instance, o.n);
  std::optional<ColorProfile> profile;
  if (!o.colors.empty()) {
    profile = MakeProfile(LoadColors(o.colors, hashes), o.ratio);
  }
  const oracle::CcResult r =
      oracle::CcOpt(inst, profile ? &*profile : nullptr, o.cap);
  report["params"] = {{"instance", o.instance},
                      {"colors", o.colors},
                      {"fair", profile.has_value()},
                      {"cap", o.cap}};
  report["inputs"] = hashes;
  report["cost"] = r.cost.ToString();
  report["enumerated"] = r.enumerated;
  report["clustering"] = ClusteringJson(r.clustering);
  Emit(report, o, out);
  return kExitOk;
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  Options o;
  if (const char* env = std::getenv(kThreadsEnv); env != nullptr && *env) {
    try {
      std::size_t used = 0;
      o.threads = std::stoi(env, &used);
      if (used != std::string(env).size() || o.threads < 1) throw 0;
    } catch (...) {
      err << kThreadsEnv << " must be a positive integer\n";
      return kExitInputError;
    }
  }

  CLI::App app{"Fault-tolerant reachability preservers and fair clustering",
               "robustfair"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--report", o.report, "Write the JSON report here");
  app.add_option("--seed", o.seed, "Seed for every random choice");
  app.add_option("--threads", o.threads,
                 std::string("Worker cap (default from ") + kThreadsEnv + ")")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;
  const auto leaf = [&](CLI::App* parent, const std::string& name,
                        const std::string& desc, std::function<int()> fn) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  const auto group = [&](const std::string& name, const std::string& desc) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->require_subcommand(1);
    return sub;
  };

  CLI::App* ftrs = group("ftrs", "Dual fault-tolerant reachability preservers");
  CLI::App* build = leaf(ftrs, "build", "Build a 2-FTRS for a pair set",
                         [&] { return FtrsBuild(o, out); });
  build->add_option("--graph", o.graph, "Graph file")->required();
  build->add_option("--pairs", o.pairs, "Pair file")->required();
  build->add_option("--out", o.out, "Preserver JSON output");
  build->add_flag("--slack", o.slack, "Only the slack round");
  CLI::App* verify = leaf(ftrs, "verify", "Check a preserver by brute force",
                          [&] { return FtrsVerify(o, out); });
  verify->add_option("--graph", o.graph, "Graph file")->required();
  verify->add_option("--preserver", o.preserver, "Preserver JSON")
      ->required();
  verify->add_option("--pairs", o.pairs, "Override the preserver's pairs");
  verify->add_option("--k", o.k, "Fault budget")->check(CLI::Range(0, 2));
  CLI::Option* exh =
      verify->add_flag("--exhaustive", o.exhaustive, "Every fault set");
  verify->add_option("--samples", o.samples, "Sampled two-edge fault sets")
      ->excludes(exh);

  CLI::App* fair = group("fair", "Fair clustering");
  CLI::App* closest = leaf(fair, "closest", "Closest fair clustering",
                           [&] { return FairClosest(o, out); });
  closest->add_option("--input", o.input, "Clustering file with colors")
      ->required();
  closest->add_option("--ratio", o.ratio, "Color ratio, e.g. 2:1");
  closest->add_option("--out", o.out, "Write the fair clustering here");
  closest->add_flag("--oracle", o.oracle, "Compare against brute force");
  closest->add_option("--oracle-cap", o.cap, "Largest n for the oracle")
      ->check(CLI::Range(0, oracle::kHardPartitionCap));
  CLI::App* consensus = leaf(fair, "consensus", "Offline fair consensus",
                             [&] { return FairConsensus(o, out); });
  consensus->add_option("--inputs", o.inputs, "Clustering files")
      ->required()
      ->delimiter(',');
  consensus->add_option("--colors", o.colors, "Color file 'vertex color'");
  consensus->add_option("--ell", o.ell, "Objective exponent")
      ->check(CLI::PositiveNumber);
  consensus->add_option("--ratio", o.ratio, "Color ratio");
  consensus->add_option("--out", o.out, "Write the clustering here");
  consensus->add_flag("--oracle", o.oracle, "Compare against brute force");
  consensus->add_option("--oracle-cap", o.cap, "Largest n for the oracle")
      ->check(CLI::Range(0, oracle::kHardPartitionCap));
  CLI::App* stream = leaf(fair, "stream", "Streaming fair consensus",
                          [&] { return FairStream(o, out); });
  stream->add_option("--stream", o.stream, "Stream file 'u v j b'")
      ->required();
  stream->add_option("--colors", o.colors, "Color file 'vertex color'")
      ->required();
  stream->add_option("--n", o.n, "Vertices")->required();
  stream->add_option("--m", o.m, "Input clusterings")
      ->required()
      ->check(CLI::PositiveNumber);
  stream->add_option("--ratio", o.ratio, "Color ratio");
  stream->add_option("--g", o.g, "Candidate sample factor");
  stream->add_option("--eps", o.eps, "Selection accuracy");
  stream->add_option("--ell", o.ell, "Objective exponent")
      ->check(CLI::PositiveNumber);
  stream->add_option("--out", o.out, "Write the clustering here");
  CLI::App* fairfy = leaf(fair, "fairfy-cc", "Fair correlation clustering",
                          [&] { return FairFairfyCc(o, out); });
  fairfy->add_option("--instance", o.instance, "Weights 'u v w_plus'")
      ->required();
  fairfy->add_option("--colors", o.colors, "Color file 'vertex color'")
      ->required();
  fairfy->add_option("--n", o.n, "Vertices (default: largest id + 1)");
  fairfy->add_option("--ratio", o.ratio, "Color ratio");
  fairfy->add_option("--out", o.out, "Write the clustering here");
  fairfy->add_flag("--oracle", o.oracle, "Compare against brute force");
  fairfy->add_option("--oracle-cap", o.cap, "Largest n for the oracle")
      ->check(CLI::Range(0, oracle::kHardPartitionCap));

  CLI::App* gen = group("gen", "Instance generators");
  CLI::App* tp = leaf(gen, "threepartition", "Hard two-color instance",
                      [&] { return GenThreePartition(o, out); });
  tp->add_option("--items", o.items, "3-partition items")
      ->required()
      ->delimiter(',');
  tp->add_option("--p", o.multiplier, "Blue-to-red ratio");
  tp->add_option("--out", o.out, "Write the colored clustering here");
  CLI::App* rnd = leaf(gen, "random", "Seeded random instance",
                       [&] { return GenRandom(o, out); });
  rnd->add_option("--kind", o.kind,
                  "digraph|pairs|clustering|stream|cc-instance")
      ->required()
      ->check(CLI::IsMember(
          {"digraph", "pairs", "clustering", "stream", "cc-instance"}));
  rnd->add_option("--n", o.n, "Vertices")->required();
  rnd->add_option("--p", o.density, "Edge probability");
  rnd->add_option("--count", o.count, "Pairs");
  rnd->add_option("--ratio", o.ratio, "Color ratio");
  rnd->add_option("--clusters", o.clusters, "Label range (0: n)");
  rnd->add_option("--m", o.m, "Clusterings in a stream")
      ->check(CLI::PositiveNumber);
  rnd->add_option("--den", o.den, "Weight denominator")
      ->check(CLI::PositiveNumber);
  rnd->add_option("--out", o.out, "Instance output");
  rnd->add_option("--colors-out", o.colors_out, "Stream colors output");

  CLI::App* orc = group("oracle", "Brute-force ground truth");
  for (bool pdc : {false, true}) {
    CLI::App* cmd =
        leaf(orc, pdc ? "pdc" : "closest",
             pdc ? "Nearest p-divisible clustering" : "Nearest fair clustering",
             [&, pdc] { return OracleClosest(o, out, pdc); });
    cmd->add_option("--input", o.input, "Clustering file with colors")
        ->required();
    cmd->add_option("--ratio", o.ratio, "Color ratio");
    cmd->add_option("--cap", o.cap, "Largest n")
        ->check(CLI::Range(0, oracle::kHardPartitionCap));
  }
  CLI::App* ocons = leaf(orc, "consensus", "Exact fair consensus",
                         [&] { return OracleConsensus(o, out); });
  ocons->add_option("--inputs", o.inputs, "Clustering files")
      ->required()
      ->delimiter(',');
  ocons->add_option("--colors", o.colors, "Color file");
  ocons->add_option("--ell", o.ell, "Objective exponent")
      ->check(CLI::PositiveNumber);
  ocons->add_option("--ratio", o.ratio, "Color ratio");
  ocons->add_option("--cap", o.cap, "Largest n")
      ->check(CLI::Range(0, oracle::kHardPartitionCap));
  CLI::App* occ = leaf(orc, "cc", "Exact (fair) correlation clustering",
                       [&] { return OracleCc(o, out); });
  occ->add_option("--instance", o.instance, "Weights 'u v w_plus'")
      ->required();
  occ->add_option("--colors", o.colors, "Restrict to fair partitions");
  occ->add_option("--n", o.n, "Vertices");
  occ->add_option("--ratio", o.ratio, "Color ratio");
  occ->add_option("--cap", o.cap, "Largest n")
      ->check(CLI::Range(0, oracle::kHardPartitionCap));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  if (!action) {
    err << app.help();
    return kExitUsage;
  }
  try {
    return action();
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace robustfair::cli
