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

// Acceptance checks, one line per criterion. Exit status is non-zero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.h"
#include "evcoref/baseline.h"
#include "evcoref/cluster.h"
#include "evcoref/corpus.h"
#include "evcoref/engine.h"
#include "evcoref/metrics.h"
#include "evcoref/ontology.h"
#include "evcoref/ruledsl.h"
#include "evcoref/text_util.h"
#include "support/oracles.h"

namespace evcoref {
namespace {

using testing::DataPath;

constexpr double kRuleBudgetSeconds = 1.0;
constexpr double kOracleBudgetSeconds = 30.0;
constexpr int kOracleCorpora = 200;
constexpr int kOracleMaxEvents = 12;
constexpr double kMetricTolerance = 1e-9;
constexpr int kCeafCases = 500;
constexpr int kCeafMaxBlocks = 7;
constexpr int kBaselineCorpora = 100;

// Collects failure messages for one criterion.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void Near(double got, double want, const std::string& what) {
    char buf[128];
    std::snprintf(buf, sizeof buf, " (got %.12f, want %.12f)", got, want);
    Expect(std::fabs(got - want) <= kMetricTolerance, what + buf);
  }
  bool ok() const { return failed_ == 0; }
  std::string Summary() const {
    std::string s = std::to_string(failed_) + " failed";
    for (const auto& f : failures_) s += "; " + f;
    return s;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void Report(int number, const std::string& title, const Check& check,
            const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", check.ok() ? "PASS" : "FAIL", number, title.c_str(),
              check.ok() ? detail.c_str() : check.Summary().c_str());
  if (!check.ok()) ++failures;
}

void RuleFidelity() {
  Check c;
  const auto start = Clock::now();
  const ProfileStore profiles = testing::ShippedProfiles();
  const RuleCountReport report(testing::ShippedRules(profiles));
  const std::pair<const char*, StrengthCounts> expected[] = {
      {"Arresting", {1, 3}}, {"Killing", {2, 5}},  {"Dying", {1, 5}},
      {"Charging", {1, 3}},  {"Shooting", {2, 4}}, {"Attacking", {2, 4}}};
  for (const auto& [type, counts] : expected) {
    const StrengthCounts got = report.For(type);
    c.Expect(got == counts, std::string(type) + " has " + std::to_string(got.certain) + "c/" +
                                std::to_string(got.possible) + "p");
  }
  const double secs = Seconds(start);
  c.Expect(secs < kRuleBudgetSeconds, "took " + std::to_string(secs) + " s");
  char detail[96];
  std::snprintf(detail, sizeof detail, "six intra-type guards match, %.3f s", secs);
  Report(1, "rule fidelity", c, detail);
}

void EngineOracle() {
  Check equal, fixpoint;
  const ProfileStore profiles = testing::ShippedProfiles();
  const RuleSet rules = testing::ShippedRules(profiles);
  std::mt19937_64 rng(2026);
  size_t edges = 0;
  int max_rounds = 0, chained = 0;
  const auto start = Clock::now();
  for (int i = 0; i < kOracleCorpora; ++i) {
    testing::RandomCorpusOptions opts;
    opts.max_events = kOracleMaxEvents;
    const Corpus corpus = testing::RandomCorpus(rng, profiles, opts);
    const EngineOptions options = testing::RandomEngineOptions(rng);
    const CorefGraph g = Evaluate(corpus, rules, profiles, options);
    const testing::OracleRun oracle = testing::BruteForceFixpoint(corpus, rules, profiles, options);
    const testing::OracleGraph got = testing::FromGraph(g);
    equal.Expect(got == oracle.edges, "corpus " + std::to_string(i) + " edge sets differ");
    equal.Expect(g.rounds() == oracle.rounds, "corpus " + std::to_string(i) + " rounds differ");
    edges += got.size();
    max_rounds = std::max(max_rounds, g.rounds());
    if (g.rounds() >= 3) ++chained;

    // Edge set after each round, rebuilt from the engine's round stamps.
    for (int r = 1; r <= g.rounds(); ++r) {
      std::vector<testing::EdgeKey> upto;
      for (const auto& [k, e] : got) {
        if (e.round <= r) upto.push_back(k);
      }
      const size_t idx = static_cast<size_t>(r - 1);
      if (idx >= oracle.after_round.size()) {
        fixpoint.Expect(false, "corpus " + std::to_string(i) + " ran past the oracle");
        break;
      }
      fixpoint.Expect(upto == oracle.after_round[idx],
                      "corpus " + std::to_string(i) + " round " + std::to_string(r));
      if (r > 1) {
        const auto& prev = oracle.after_round[idx - 1];
        const auto& cur = oracle.after_round[idx];
        fixpoint.Expect(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()),
                        "corpus " + std::to_string(i) + " shrank at round " + std::to_string(r));
        const bool last = r == g.rounds();
        fixpoint.Expect(last ? cur.size() == prev.size() : cur.size() > prev.size(),
                        "corpus " + std::to_string(i) + " round " + std::to_string(r) +
                            " growth");
      }
    }
  }
  const double secs = Seconds(start);
  equal.Expect(secs < kOracleBudgetSeconds, "took " + std::to_string(secs) + " s");
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "%d corpora, %zu edges, %d needed a subevent round, up to %d rounds, %.2f s",
                kOracleCorpora, edges, chained, max_rounds, secs);
  Report(2, "engine equals brute-force fixpoint", equal, detail);

  const Corpus sub = LoadCorpus(DataPath("fixtures/subevent.jsonl"));
  const CorefGraph g = Evaluate(sub, rules, profiles);
  const Derivation* parent = g.Find(MentionPair("K1", "K2"), Strength::kCertain);
  const Derivation* child = g.Find(MentionPair("S1", "S2"), Strength::kCertain);
  fixpoint.Expect(child != nullptr && child->edge.iteration == 1, "S1-S2 not certain at round 1");
  fixpoint.Expect(parent != nullptr && parent->edge.iteration == 2,
                  "K1-K2 not certain at round 2");
  fixpoint.Expect(g.rounds() == 3, "fixture took " + std::to_string(g.rounds()) + " rounds");
  Report(3, "fixpoint behaviour", fixpoint,
         "parent edge at round 2, stop at round 3, monotone on all random corpora");
}

Partition P(std::vector<std::vector<std::string>> blocks) { return Partition(std::move(blocks)); }

void MetricOracles() {
  Check c;
  {
    const auto s = Muc(P({{"a", "b"}, {"c"}, {"d"}}), P({{"a", "b", "c"}, {"d"}}));
    c.Near(s.recall, 0.5, "MUC recall");
    c.Near(s.precision, 1.0, "MUC precision");
    c.Near(s.f1, 2.0 / 3, "MUC F1");
    const auto t = Muc(P({{"a"}, {"b"}, {"c"}}), P({{"a"}, {"b"}, {"c"}}));
    c.Near(t.precision + t.recall + t.f1, 3.0, "MUC all-singletons");
  }
  {
    const auto s = BCubed(P({{"a"}, {"b"}, {"c"}}), P({{"a", "b"}, {"c"}}));
    c.Near(s.recall, 2.0 / 3, "B3 recall");
    c.Near(s.precision, 1.0, "B3 precision");
    const auto t = BCubed(P({{"a", "b"}, {"c", "d"}}), P({{"a", "b", "c", "d"}}));
    c.Near(t.recall, 0.5, "B3 recall, split key");
    c.Near(t.precision, 1.0, "B3 precision, split key");
  }
  {
    const auto s = CeafM(P({{"a", "b"}, {"c", "d"}}), P({{"a", "b", "c"}, {"d"}}));
    c.Near(s.precision, 0.75, "CEAF-M precision");
    c.Near(s.recall, 0.75, "CEAF-M recall");
    c.Near(s.f1, 0.75, "CEAF-M F1");
    const auto t = CeafM(P({{"a", "b"}}), P({{"a"}, {"b"}}));
    c.Near(t.precision, 0.5, "CEAF-M merged precision");
    c.Near(t.recall, 0.5, "CEAF-M merged recall");
  }
  {
    const auto s = Blanc(P({{"a", "b", "c", "d"}}), P({{"a", "b"}, {"c", "d"}}));
    c.Near(s.precision, 1.0 / 6, "BLANC precision");
    c.Near(s.recall, 0.5, "BLANC recall");
    const auto t = Blanc(P({{"a", "b"}, {"c"}}), P({{"a", "b"}, {"c"}}));
    c.Near(t.precision + t.recall + t.f1, 3.0, "BLANC perfect");
    const auto u = Blanc(P({{"a"}, {"b"}, {"c"}}), P({{"a"}, {"b"}, {"c"}}));
    c.Near(u.precision + u.recall + u.f1, 3.0, "BLANC all-singletons");
  }

  std::mt19937_64 rng(4);
  for (int i = 0; i < kCeafCases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 16)(rng);
    const Partition key = testing::RandomPartition(rng, n, kCeafMaxBlocks);
    const Partition response = testing::RandomPartition(rng, n, kCeafMaxBlocks);
    const long long want = testing::CeafMFactorialOracle(response, key);
    const long long got = AlignCeafM(response, key).total;
    c.Expect(got == want, "CEAF case " + std::to_string(i) + ": " + std::to_string(got) +
                              " vs " + std::to_string(want));
    if (n < 2) continue;
    const auto muc = testing::MucOracle(response, key);
    const auto m = Muc(response, key);
    c.Near(m.precision, muc.precision, "MUC oracle precision");
    c.Near(m.recall, muc.recall, "MUC oracle recall");
    const auto b3 = testing::BCubedOracle(response, key);
    const auto b = BCubed(response, key);
    c.Near(b.precision, b3.precision, "B3 oracle precision");
    c.Near(b.recall, b3.recall, "B3 oracle recall");
    const auto bl = testing::BlancOracle(response, key);
    const auto l = Blanc(response, key);
    c.Near(l.precision, bl.precision, "BLANC oracle precision");
    c.Near(l.recall, bl.recall, "BLANC oracle recall");

    for (Metric metric : kAllMetrics) {
      const PartitionScore s = ScoreRun({{"t", key}}, {{"t", key}}, Averaging::kMicro).Get(metric);
      c.Expect(s.precision == 1.0 && s.recall == 1.0 && s.f1 == 1.0,
               std::string(MetricName(metric)) + " perfect response below 1");
    }
  }
  Report(4, "metric oracles", c,
         "fixtures within 1e-9, " + std::to_string(kCeafCases) +
             " CEAF-M cases equal the factorial optimum, perfect responses score 1");
}

void BaselineCorrectness() {
  Check c;
  const ProfileStore profiles = testing::ShippedProfiles();
  std::mt19937_64 rng(5);
  const std::vector<std::string> words = {"kill", "slay", "die", "shoot", "Shoot", "arrest",
                                          "attack", "charge"};
  for (int i = 0; i < kBaselineCorpora; ++i) {
    const Corpus corpus = testing::RandomCorpus(rng, profiles, {30, 0.0, 0.0});
    for (Scope s : {Scope::kWithinDocument, Scope::kWithinTopic, Scope::kCrossTopic}) {
      c.Expect(LemmaBaseline(corpus, s) == testing::LemmaGroupingOracle(corpus, s),
               "corpus " + std::to_string(i) + " scope " + std::string(ScopeName(s)));
    }
    Lexicon lex;
    for (const auto& w : words) {
      if (rng() % 2) lex.insert(w);
    }
    const Corpus once = LemmaFilter(corpus, lex);
    c.Expect(LemmaFilter(once, lex) == once, "filter not idempotent on corpus " +
                                                 std::to_string(i));
    for (const auto& e : once.mentions()) {
      c.Expect(lex.count(e.lemma) > 0, "unlisted lemma survived");
    }
  }
  Report(5, "lemma baseline", c,
         std::to_string(kBaselineCorpora) + " corpora equal direct grouping, filter idempotent");
}

// Latent events with disjoint fillers, days and places; every mention of an
// event copies a subset of its fields, so a certain rule can only link
// mentions of one event.
Corpus GoldAlignedCorpus(std::mt19937_64& rng, const ProfileStore& profiles) {
  const std::vector<std::string> types = profiles.TypeNames();
  const std::map<std::string, std::vector<std::string>> lemmas = {
      {"Arresting", {"arrest", "detain"}}, {"Attacking", {"attack", "assault"}},
      {"Charging", {"charge", "indict"}},  {"Dying", {"die", "perish"}},
      {"Killing", {"kill", "slay"}},       {"Shooting", {"shoot", "fire"}}};
  std::vector<EventDescription> mentions;
  TopicPartitions gold;
  int mention_no = 0, day = 0;
  for (int t = 0; t < 12; ++t) {
    const std::string topic = "topic" + std::to_string(t);
    std::vector<std::vector<std::string>> clusters;
    const int events = std::uniform_int_distribution<int>(2, 5)(rng);
    for (int ev = 0; ev < events; ++ev) {
      const std::string& type = types[rng() % types.size()];
      const EventTypeProfile* p = profiles.Find(type);
      std::vector<std::string> roles;
      for (RoleClass rc : {RoleClass::kActive, RoleClass::kPassive, RoleClass::kTool}) {
        for (const auto& r : p->Roles(rc)) roles.push_back(r.name);
      }
      ++day;
      char when[16];
      std::snprintf(when, sizeof when, "2009-%02d-%02d", 1 + day / 28, 1 + day % 28);
      const std::string tag = topic + "_e" + std::to_string(ev);
      std::vector<std::string> cluster;
      const int count = std::uniform_int_distribution<int>(1, 4)(rng);
      for (int m = 0; m < count; ++m) {
        EventDescription e;
        char id[16];
        std::snprintf(id, sizeof id, "m%04d", mention_no++);
        e.id = id;
        e.event_type = type;
        const auto& lem = lemmas.at(type);
        e.lemma = lem[rng() % lem.size()];
        e.topic_id = topic;
        e.doc_id = topic + "_doc" + std::to_string(rng() % 3);
        for (const auto& r : roles) {
          if (rng() % 3 != 0) e.participants.push_back({r, EntityRef("ex:" + tag + "_" + r)});
        }
        if (rng() % 4 != 0) e.time = ParseTimeSpec(when);
        if (rng() % 2 != 0) e.place = PlaceSpec(EntityRef("geo:" + tag));
        cluster.push_back(e.id);
        mentions.push_back(std::move(e));
      }
      clusters.push_back(std::move(cluster));
    }
    gold[topic] = Partition(std::move(clusters));
  }
  return Corpus(std::move(mentions), std::move(gold));
}

std::string CallCli(const std::vector<std::string>& args, Check& c) {
  std::ostringstream out, err;
  const int code = cli::Run(args, out, err);
  c.Expect(code == 0, args[0] + " exited " + std::to_string(code) + ": " + err.str());
  return out.str();
}

std::string Pipeline(const std::string& corpus, const std::string& dir, Check& c) {
  const std::string graph = dir + "/graph.txt", log = dir + "/log.txt";
  const std::string part = dir + "/clusters.txt", json = dir + "/scores.json";
  std::string all = CallCli({"reason", "--corpus", corpus, "--out", graph, "--log", log}, c);
  all += CallCli({"cluster", "--corpus", corpus, "--graph", graph, "--out", part}, c);
  all += CallCli({"score", "--response", part, "--corpus", corpus, "--json", json}, c);
  for (const auto& f : {graph, log, part, json}) all += ReadFile(f);
  return all;
}

void Determinism(const std::string& synthetic_path) {
  Check c;
  const auto root = std::filesystem::temp_directory_path() /
                    ("evcoref_acceptance_" + std::to_string(::getpid()));
  size_t bytes = 0;
  for (const std::string& corpus :
       {DataPath("fixtures/lennon.jsonl"), DataPath("fixtures/subevent.jsonl"), synthetic_path}) {
    std::string runs[2];
    for (int i = 0; i < 2; ++i) {
      const auto dir = root / ("run" + std::to_string(i));
      std::filesystem::create_directories(dir);
      runs[i] = Pipeline(corpus, dir.string(), c);
    }
    c.Expect(runs[0] == runs[1], corpus + " differs between runs");
    bytes += runs[0].size();
  }
  std::filesystem::remove_all(root);
  Report(6, "determinism", c,
         "reason, cluster and score repeated on 3 corpora, " + std::to_string(bytes) +
             " bytes identical");
}

void PrecisionSemantics(const Corpus& corpus) {
  Check c;
  const ProfileStore profiles = testing::ShippedProfiles();
  const RuleSet rules = testing::ShippedRules(profiles);
  const CorefGraph g = Evaluate(corpus, rules, profiles);
  for (const auto& [pair, d] : g.edges(Strength::kCertain)) {
    const auto& topic = corpus.Find(pair.a())->topic_id;
    c.Expect(corpus.gold().at(topic).SameBlock(pair.a(), pair.b()),
             "certain edge " + pair.a() + "-" + pair.b() + " is not gold");
  }
  c.Expect(g.size(Strength::kCertain) > 0, "no certain edges fired");
  const TopicPartitions response = SplitByTopic(Clusters(g, ClusterMode::kCertainOnly), corpus);
  const MetricScores s = ScoreRun(response, corpus.gold(), Averaging::kMicro);
  char muc[16];
  std::snprintf(muc, sizeof muc, "%.2f", 100 * s.muc.precision);
  c.Expect(std::string(muc) == "100.00", std::string("MUC precision ") + muc);
  c.Expect(s.blanc.precision >= s.blanc.recall, "BLANC precision below recall");
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%zu certain edges all gold, MUC P=%s, BLANC P=%.2f >= R=%.2f",
                g.size(Strength::kCertain), muc, 100 * s.blanc.precision,
                100 * s.blanc.recall);
  Report(7, "certain-only precision", c, detail);
}

void EcbPassThrough() {
  const char* path = std::getenv("EVCOREF_ECB_CORPUS");
  if (path == nullptr || *path == '\0') {
    std::printf("SKIP [8] ECB pass-through: set EVCOREF_ECB_CORPUS to an ECB export to run\n");
    return;
  }
  Check c;
  const CorpusStats s = ComputeStats(LoadCorpus(path));
  c.Expect(s.topics == 43, "topics " + std::to_string(s.topics));
  c.Expect(s.documents == 482, "documents " + std::to_string(s.documents));
  c.Expect(s.mentions == 1744, "mentions " + std::to_string(s.mentions));
  Report(8, "ECB pass-through", c, "43 topics, 482 documents, 1744 mentions");
}

}  // namespace
}  // namespace evcoref

int main() {
  using namespace evcoref;
  try {
    RuleFidelity();
    EngineOracle();
    MetricOracles();
    BaselineCorrectness();

    std::mt19937_64 rng(7);
    const Corpus synthetic = GoldAlignedCorpus(rng, testing::ShippedProfiles());
    const auto path = std::filesystem::temp_directory_path() /
                      ("evcoref_gold_aligned_" + std::to_string(::getpid()) + ".jsonl");
    WriteFile(path.string(), FormatCorpus(synthetic));
    Determinism(path.string());
    PrecisionSemantics(synthetic);
    std::filesystem::remove(path);

    EcbPassThrough();
  } catch (const std::exception& e) {
    std::printf("FAIL aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
