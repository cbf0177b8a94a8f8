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

#include <random>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "evcoref/corpus.h"
#include "evcoref/engine.h"
#include "evcoref/ontology.h"
#include "evcoref/ruledsl.h"

namespace evcoref {
namespace {

struct Shipped {
  ProfileStore profiles = LoadProfiles(EVCOREF_BENCH_DATA_DIR "/profiles.txt");
  RuleSet rules = LoadRules(EVCOREF_BENCH_DATA_DIR "/rules.txt", profiles);
};

const Shipped& Data() {
  static const Shipped* data = new Shipped;
  return *data;
}

// `n` mentions over `topics` topics, drawing fillers from small pools so
// rules fire often. Every fourth Killing points at a Shooting subevent.
Corpus Synthetic(int n, int topics, uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::vector<std::string> types = {"Killing", "Shooting", "Dying", "Attacking"};
  const std::vector<std::string> days = {"2008-11-26", "2008-11-27", "2008-11", "2008-12-01"};
  std::vector<EventDescription> mentions;
  std::vector<std::string> shootings;
  for (int i = 0; i < n; ++i) {
    EventDescription e;
    e.id = "m" + std::to_string(i);
    e.event_type = types[rng() % types.size()];
    e.lemma = e.event_type;
    e.topic_id = "t" + std::to_string(i % topics);
    e.doc_id = e.topic_id + "_" + std::to_string(rng() % 5);
    const std::string who = "ex:p" + std::to_string(rng() % 20);
    const std::string other = "ex:p" + std::to_string(rng() % 20);
    if (e.event_type == "Killing") {
      e.participants = {{"Killer", EntityRef(who)}, {"Victim", EntityRef(other)}};
    } else if (e.event_type == "Shooting") {
      e.participants = {{"Agent", EntityRef(who)}, {"Goal", EntityRef(other)}};
      shootings.push_back(e.id);
    } else if (e.event_type == "Dying") {
      e.participants = {{"Protagonist", EntityRef(other)}};
    } else {
      e.participants = {{"Assailant", EntityRef(who)}, {"Victim", EntityRef(other)}};
    }
    e.time = ParseTimeSpec(days[rng() % days.size()]);
    e.place = PlaceSpec(EntityRef("geo:p" + std::to_string(rng() % 6)));
    if (e.event_type == "Killing" && !shootings.empty() && rng() % 4 == 0) {
      e.subevents.push_back(shootings[rng() % shootings.size()]);
    }
    mentions.push_back(std::move(e));
  }
  return Corpus(std::move(mentions));
}

void BM_Evaluate(benchmark::State& state) {
  const Corpus corpus = Synthetic(static_cast<int>(state.range(0)), 10, 1);
  EngineOptions options;
  options.threads = static_cast<int>(state.range(1));
  size_t edges = 0;
  for (auto _ : state) {
    const CorefGraph g = Evaluate(corpus, Data().rules, Data().profiles, options);
    edges = g.size(Strength::kCertain) + g.size(Strength::kPossible);
    benchmark::DoNotOptimize(edges);
  }
  state.counters["edges"] = static_cast<double>(edges);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Evaluate)
    ->ArgsProduct({{100, 400, 1600}, {1, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_EvaluateCrossTopic(benchmark::State& state) {
  const Corpus corpus = Synthetic(static_cast<int>(state.range(0)), 10, 2);
  EngineOptions options;
  options.scope = Scope::kCrossTopic;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Evaluate(corpus, Data().rules, Data().profiles, options));
  }
}
BENCHMARK(BM_EvaluateCrossTopic)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace evcoref
