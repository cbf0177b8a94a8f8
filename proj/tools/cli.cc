// Copyright 2026 The evcoref Authors.
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

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "evcoref/baseline.h"
#include "evcoref/cluster.h"
#include "evcoref/corpus.h"
#include "evcoref/engine.h"
#include "evcoref/error.h"
#include "evcoref/metrics.h"
#include "evcoref/ontology.h"
#include "evcoref/ruledsl.h"
#include "evcoref/text_util.h"

#ifndef EVCOREF_DEFAULT_DATA_DIR
#define EVCOREF_DEFAULT_DATA_DIR "data"
#endif

namespace evcoref::cli {
namespace {

// EVCOREF_DATA_DIR overrides the source-tree default, e.g. for an install.
std::string DataDir() {
  const char* env = std::getenv("EVCOREF_DATA_DIR");
  return env != nullptr && *env != '\0' ? env : EVCOREF_DEFAULT_DATA_DIR;
}

const std::map<std::string, Scope> kScopes = {
    {"doc", Scope::kWithinDocument},
    {"topic", Scope::kWithinTopic},
    {"global", Scope::kCrossTopic}};

const std::map<std::string, ClusterMode> kModes = {
    {"certain", ClusterMode::kCertainOnly},
    {"possible", ClusterMode::kPossibleOnly},
    {"combined", ClusterMode::kCombined}};

const std::map<std::string, EdgeSource> kSources = {
    {"certain", EdgeSource::kCertain},
    {"possible", EdgeSource::kPossible},
    {"both", EdgeSource::kCertainAndPossible}};

const std::map<std::string, Averaging> kAveraging = {
    {"micro", Averaging::kMicro}, {"macro", Averaging::kMacro}};

struct InputOptions {
  std::string corpus;
  std::string profiles = DataDir() + "/profiles.txt";
  std::string rules = DataDir() + "/rules.txt";
  std::string gazetteer;
  std::string lexicon;
  std::string scope = "topic";
};

struct EngineFlags {
  bool enable_cross_type = false;
  std::string certain_subevents = "certain";
  std::string possible_subevents = "both";
  int threads = 1;
  bool deterministic = true;
};

struct ScoreFlags {
  std::vector<std::string> metrics{"all"};
  std::string avg = "micro";
  bool global = false;
  std::string json;
};

void AddCorpusOption(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--corpus", in.corpus, "Corpus file (JSON Lines)")->required();
  cmd->add_option("--gazetteer", in.gazetteer, "Location ancestry file");
  cmd->add_option("--lexicon", in.lexicon, "Keep only mentions whose lemma is listed");
}

void AddRuleOptions(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--profiles", in.profiles, "Event type profile file")
      ->capture_default_str();
  cmd->add_option("--rules", in.rules, "Coreference rule file")->capture_default_str();
}

void AddScopeOption(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--scope", in.scope, "Pairing scope")
      ->check(CLI::IsMember({"doc", "topic", "global"}))
      ->capture_default_str();
}

void AddEngineOptions(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_flag("--enable-cross-type", flags.enable_cross_type,
                "Apply rules whose type guards differ (e.g. Killing/Dying)");
  cmd->add_option("--certain-subevents", flags.certain_subevents,
                  "Edges a certain hasCoref condition may read")
      ->check(CLI::IsMember({"certain", "possible", "both"}))
      ->capture_default_str();
  cmd->add_option("--possible-subevents", flags.possible_subevents,
                  "Edges a possible hasCoref condition may read")
      ->check(CLI::IsMember({"certain", "possible", "both"}))
      ->capture_default_str();
  cmd->add_option("--threads", flags.threads, "Worker threads per fixpoint round")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_flag("--seedless-deterministic,!--no-seedless-deterministic",
                flags.deterministic,
                "Outputs depend only on inputs (always true; kept for scripts)");
}

void AddScoreOptions(CLI::App* cmd, ScoreFlags& flags) {
  cmd->add_option("--metrics", flags.metrics, "muc, b3, ceafm, blanc or all")
      ->check(CLI::IsMember({"muc", "b3", "ceafm", "blanc", "all"}))
      ->delimiter(',')
      ->capture_default_str();
  cmd->add_option("--avg", flags.avg, "Averaging over topics")
      ->check(CLI::IsMember({"micro", "macro"}))
      ->capture_default_str();
  cmd->add_flag("--global", flags.global, "Score all topics as one partition");
  cmd->add_option("--json", flags.json, "Also write the table as JSON to this path");
}

struct Loaded {
  ProfileStore profiles;
  Corpus corpus;
};

Corpus LoadInputCorpus(const InputOptions& in) {
  Corpus corpus = LoadCorpus(in.corpus);
  if (!in.gazetteer.empty()) corpus = ApplyGazetteer(corpus, LoadGazetteer(in.gazetteer));
  if (!in.lexicon.empty()) corpus = LemmaFilter(corpus, LoadLexicon(in.lexicon));
  return corpus;
}

// Fatal validation issues other than unknown event types, which the engine
// skips with a warning.
void RequireValidRoles(const Corpus& corpus, const ProfileStore& profiles,
                       std::ostream& err) {
  for (const auto& issue : ValidateCorpus(corpus, profiles)) {
    if (issue.field == "type" || !issue.fatal) continue;
    throw Error(ErrorCode::kSchemaError,
                "mention '" + issue.mention_id + "': " + issue.field + ": " + issue.message);
  }
  (void)err;
}

EngineOptions MakeEngineOptions(const InputOptions& in, const EngineFlags& flags) {
  EngineOptions options;
  options.scope = kScopes.at(in.scope);
  options.enable_cross_type = flags.enable_cross_type;
  options.certain_subevent_source = kSources.at(flags.certain_subevents);
  options.possible_subevent_source = kSources.at(flags.possible_subevents);
  options.threads = flags.threads;
  return options;
}

CorefGraph Reason(const InputOptions& in, const EngineFlags& flags, const Corpus& corpus,
                  std::ostream& err) {
  ProfileStore profiles = LoadProfiles(in.profiles);
  RuleSet rules = LoadRules(in.rules, profiles);
  RequireValidRoles(corpus, profiles, err);
  CorefGraph graph = Evaluate(corpus, rules, profiles, MakeEngineOptions(in, flags));
  for (const auto& w : graph.warnings()) err << "warning: " << w << '\n';
  return graph;
}

std::vector<Metric> SelectedMetrics(const std::vector<std::string>& names) {
  std::vector<Metric> out;
  for (const auto& n : names) {
    if (n == "all") return {std::begin(kAllMetrics), std::end(kAllMetrics)};
    Metric m = *ParseMetricFlag(n);
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MetricScores ScoreTopics(const TopicPartitions& response, const TopicPartitions& key,
                         const ScoreFlags& flags) {
  if (flags.global) {
    return ScoreRun({{"*", MergeTopics(response)}}, {{"*", MergeTopics(key)}},
                    kAveraging.at(flags.avg));
  }
  return ScoreRun(response, key, kAveraging.at(flags.avg));
}

void EmitTable(const std::vector<ScoreRow>& rows, const ScoreFlags& flags,
               std::ostream& out) {
  const auto metrics = SelectedMetrics(flags.metrics);
  out << FormatScoreTable(rows, metrics);
  if (!flags.json.empty()) WriteFile(flags.json, ScoreTableJson(rows, metrics));
}

std::string FormatPartitionsAs(const TopicPartitions& parts, const std::string& format) {
  return format == "conll" ? FormatConllPartitions(parts) : FormatNativePartitions(parts);
}

void WriteOrPrint(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    WriteFile(path, text);
  }
}

TopicPartitions RequireGold(const Corpus& corpus) {
  if (corpus.gold().empty()) {
    throw Error(ErrorCode::kSchemaError, "corpus has no gold records");
  }
  return corpus.gold();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rule-based event coreference and coreference scoring", "evcoref"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  InputOptions in;
  EngineFlags engine_flags;
  ScoreFlags score_flags;
  std::string out_path, log_path, partition_path, format = "native", mode = "combined";
  std::string graph_path, key_path;
  std::vector<std::string> responses, labels, pair;
  double possible_weight = 0.5;
  bool json_stats = false;

  auto* reason = app.add_subcommand("reason", "Apply the rules to a corpus to a fixpoint");
  AddCorpusOption(reason, in);
  AddRuleOptions(reason, in);
  AddScopeOption(reason, in);
  AddEngineOptions(reason, engine_flags);
  reason->add_option("--out", out_path, "Write the coreference graph here");
  reason->add_option("--log", log_path, "Write the derivation log here");
  reason->add_option("--partition-out", partition_path,
                     "Also write the clusters for --mode here");
  reason->add_option("--mode", mode, "Edges used for --partition-out")
      ->check(CLI::IsMember({"certain", "possible", "combined"}))
      ->capture_default_str();
  reason->add_option("--format", format, "Partition format")
      ->check(CLI::IsMember({"native", "conll"}))
      ->capture_default_str();

  auto* cluster = app.add_subcommand("cluster", "Turn a coreference graph into clusters");
  AddCorpusOption(cluster, in);
  cluster->add_option("--graph", graph_path, "Graph written by 'reason --out'")->required();
  cluster->add_option("--mode", mode, "Which edges to follow")
      ->check(CLI::IsMember({"certain", "possible", "combined"}))
      ->capture_default_str();
  cluster->add_option("--out", out_path, "Write the partition here instead of stdout");
  cluster->add_option("--format", format, "Partition format")
      ->check(CLI::IsMember({"native", "conll"}))
      ->capture_default_str();

  auto* score = app.add_subcommand("score", "Score response partitions against a key");
  score->add_option("--response", responses, "Response partition file(s)")->required();
  score->add_option("--label", labels, "Row label per response (defaults to file name)");
  auto* key_opt = score->add_option("--key", key_path, "Key partition file");
  auto* gold_opt = score->add_option("--corpus", in.corpus, "Use the corpus gold as key");
  key_opt->excludes(gold_opt);
  AddScoreOptions(score, score_flags);

  auto* baseline = app.add_subcommand("baseline", "Cluster mentions by shared lemma");
  AddCorpusOption(baseline, in);
  AddScopeOption(baseline, in);
  baseline->add_option("--out", out_path, "Write the partition here instead of stdout");
  baseline->add_option("--format", format, "Partition format")
      ->check(CLI::IsMember({"native", "conll"}))
      ->capture_default_str();

  auto* validate = app.add_subcommand("validate", "Check a corpus against the profiles");
  AddCorpusOption(validate, in);
  AddRuleOptions(validate, in);

  auto* stats = app.add_subcommand("stats", "Count topics, documents and mentions");
  AddCorpusOption(stats, in);
  stats->add_flag("--json", json_stats, "Print the counts as JSON");

  auto* explain = app.add_subcommand("explain", "Show how a pair became coreferent");
  AddCorpusOption(explain, in);
  AddRuleOptions(explain, in);
  AddScopeOption(explain, in);
  AddEngineOptions(explain, engine_flags);
  explain->add_option("--pair", pair, "Two mention ids")->required()->expected(2);
  explain->add_option("--possible-weight", possible_weight,
                      "Measure reported for possible-only pairs")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();

  auto* rules_cmd = app.add_subcommand("rules", "Parse, count and lint a rule file");
  AddRuleOptions(rules_cmd, in);

  auto* run = app.add_subcommand(
      "run", "Baseline and the three rule configurations scored against gold");
  AddCorpusOption(run, in);
  AddRuleOptions(run, in);
  AddScopeOption(run, in);
  AddEngineOptions(run, engine_flags);
  AddScoreOptions(run, score_flags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*reason) {
      Corpus corpus = LoadInputCorpus(in);
      CorefGraph graph = Reason(in, engine_flags, corpus, err);
      out << "certain: " << graph.size(Strength::kCertain)
          << ", possible: " << graph.size(Strength::kPossible) << '\n';
      out << "rounds: " << graph.rounds() << '\n';
      if (!out_path.empty()) WriteFile(out_path, FormatGraph(graph));
      if (!log_path.empty()) WriteFile(log_path, FormatDerivationLog(graph));
      if (!partition_path.empty()) {
        TopicPartitions parts = SplitByTopic(Clusters(graph, kModes.at(mode)), corpus);
        WriteFile(partition_path, FormatPartitionsAs(parts, format));
      }
    } else if (*cluster) {
      Corpus corpus = LoadInputCorpus(in);
      std::vector<std::string> ids;
      for (const auto& e : corpus.mentions()) ids.push_back(e.id);
      CorefGraph graph = ParseGraph(ReadFile(graph_path), ids, graph_path);
      TopicPartitions parts = SplitByTopic(Clusters(graph, kModes.at(mode)), corpus);
      WriteOrPrint(out_path, FormatPartitionsAs(parts, format), out);
    } else if (*score) {
      if (key_path.empty() && in.corpus.empty()) {
        err << "score: one of --key or --corpus is required\n";
        return kExitInputError;
      }
      if (!labels.empty() && labels.size() != responses.size()) {
        err << "score: give one --label per --response\n";
        return kExitInputError;
      }
      TopicPartitions key =
          key_path.empty() ? RequireGold(LoadCorpus(in.corpus)) : LoadPartitions(key_path);
      std::vector<ScoreRow> rows;
      for (size_t i = 0; i < responses.size(); ++i) {
        std::string label = labels.empty()
                                ? std::filesystem::path(responses[i]).filename().string()
                                : labels[i];
        rows.push_back({label, ScoreTopics(LoadPartitions(responses[i]), key, score_flags)});
      }
      EmitTable(rows, score_flags, out);
    } else if (*baseline) {
      Corpus corpus = LoadInputCorpus(in);
      TopicPartitions parts = SplitByTopic(LemmaBaseline(corpus, kScopes.at(in.scope)), corpus);
      WriteOrPrint(out_path, FormatPartitionsAs(parts, format), out);
    } else if (*validate) {
      ProfileStore profiles = LoadProfiles(in.profiles);
      RuleSet rules = LoadRules(in.rules, profiles);
      Corpus corpus = LoadInputCorpus(in);
      int fatal = 0;
      for (const auto& issue : ValidateCorpus(corpus, profiles)) {
        err << in.corpus << ": mention '" << issue.mention_id << "': " << issue.field
            << ": " << issue.message << (issue.fatal ? "" : " (warning)") << '\n';
        if (issue.fatal) ++fatal;
      }
      for (const auto& w : rules.warnings) err << "warning: " << w << '\n';
      if (fatal > 0) {
        out << "invalid: " << fatal << " error(s)\n";
        return kExitInputError;
      }
      out << "ok: " << corpus.mentions().size() << " mentions, " << rules.rules.size()
          << " rules\n";
    } else if (*stats) {
      CorpusStats s = ComputeStats(LoadInputCorpus(in));
      if (json_stats) {
        nlohmann::ordered_json j;
        j["topics"] = s.topics;
        j["documents"] = s.documents;
        j["mentions"] = s.mentions;
        j["distinct_lemmas"] = s.distinct_lemmas;
        j["gold_topics"] = s.gold_topics;
        j["gold_clusters"] = s.gold_clusters;
        j["per_type"] = s.per_type;
        out << j.dump(2) << '\n';
      } else {
        out << s.topics << (s.topics == 1 ? " topic, " : " topics, ") << s.documents
            << (s.documents == 1 ? " doc, " : " docs, ") << s.mentions
            << (s.mentions == 1 ? " mention\n" : " mentions\n");
        out << "distinct lemmas: " << s.distinct_lemmas << '\n';
        out << "gold: " << s.gold_clusters << " clusters in " << s.gold_topics
            << (s.gold_topics == 1 ? " topic\n" : " topics\n");
        for (const auto& [type, n] : s.per_type) out << "  " << type << ": " << n << '\n';
      }
    } else if (*explain) {
      Corpus corpus = LoadInputCorpus(in);
      for (const auto& id : pair) {
        if (corpus.Find(id) == nullptr) {
          err << "explain: unknown mention '" << id << "'\n";
          return kExitInputError;
        }
      }
      if (pair[0] == pair[1]) {
        err << "explain: the two mentions must differ\n";
        return kExitInputError;
      }
      CorefGraph graph = Reason(in, engine_flags, corpus, err);
      MentionPair p(pair[0], pair[1]);
      char measure[32];
      std::snprintf(measure, sizeof measure, "%.2f",
                    Measure(graph, p, possible_weight).value());
      out << "measure: " << measure << '\n';
      out << FormatExplain(Explain(graph, p));
    } else if (*rules_cmd) {
      ProfileStore profiles = LoadProfiles(in.profiles);
      RuleSet rules = LoadRules(in.rules, profiles);
      out << RuleCountReport(rules).ToText();
      for (const auto& w : rules.warnings) out << "warning: " << w << '\n';
    } else if (*run) {
      Corpus corpus = LoadInputCorpus(in);
      TopicPartitions gold = RequireGold(corpus);
      CorefGraph graph = Reason(in, engine_flags, corpus, err);
      std::vector<ScoreRow> rows;
      rows.push_back({"lemma baseline",
                      ScoreTopics(SplitByTopic(LemmaBaseline(corpus, kScopes.at(in.scope)),
                                               corpus),
                                  gold, score_flags)});
      const std::pair<const char*, ClusterMode> configs[] = {
          {"only certain", ClusterMode::kCertainOnly},
          {"only possible", ClusterMode::kPossibleOnly},
          {"possible + certain", ClusterMode::kCombined}};
      for (const auto& [label, m] : configs) {
        rows.push_back(
            {label, ScoreTopics(SplitByTopic(Clusters(graph, m), corpus), gold, score_flags)});
      }
      out << "certain: " << graph.size(Strength::kCertain)
          << ", possible: " << graph.size(Strength::kPossible) << '\n';
      EmitTable(rows, score_flags, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return IsInputError(e.code()) ? kExitInputError : kExitDomainError;
  }
  return kExitOk;
}

}  // namespace evcoref::cli
