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

#include "evcoref/engine.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "evcoref/compat.h"
#include "evcoref/corpus.h"
#include "evcoref/error.h"
#include "evcoref/ontology.h"
#include "evcoref/ruledsl.h"
#include "evcoref/text_util.h"

namespace evcoref {

std::string_view ScopeName(Scope s) {
  switch (s) {
    case Scope::kWithinDocument: return "doc";
    case Scope::kWithinTopic: return "topic";
    case Scope::kCrossTopic: return "global";
  }
  return "?";
}

const Derivation* CorefGraph::Find(const MentionPair& pair, Strength s) const {
  const auto& m = edges(s);
  auto it = m.find(pair);
  return it == m.end() ? nullptr : &it->second;
}

std::vector<CorefEdge> CorefGraph::EdgeList() const {
  std::vector<CorefEdge> out;
  for (const auto& [_, d] : certain_) out.push_back(d.edge);
  for (const auto& [_, d] : possible_) out.push_back(d.edge);
  std::sort(out.begin(), out.end(), [](const CorefEdge& x, const CorefEdge& y) {
    return std::tie(x.pair, x.strength) < std::tie(y.pair, y.strength);
  });
  return out;
}

bool CorefGraph::Insert(Derivation d) {
  auto& m = d.edge.strength == Strength::kCertain ? certain_ : possible_;
  MentionPair key = d.edge.pair;
  return m.emplace(std::move(key), std::move(d)).second;
}

namespace {

std::string JoinIds(const std::vector<EntityRef>& refs) {
  std::string out;
  for (const auto& r : refs) {
    if (!out.empty()) out += ",";
    out += r.id();
  }
  return out;
}

std::string TimeText(const std::optional<TimeSpec>& t) {
  return t ? t->ToString() : "(none)";
}

std::string PlaceText(const std::optional<PlaceSpec>& p) {
  return p ? p->id.id() : "(none)";
}

struct PairTask {
  size_t a;  // corpus index of the mention with the smaller id
  size_t b;
  std::vector<const CorefRule*> rules;
};

class Evaluator {
 public:
  Evaluator(const Corpus& corpus, const RuleSet& rules,
            const ProfileStore& profiles, const EngineOptions& options)
      : corpus_(corpus), rules_(rules), profiles_(profiles), options_(options) {}

  CorefGraph Run() {
    std::vector<std::string> nodes;
    for (const auto& e : corpus_.mentions()) nodes.push_back(e.id);
    std::sort(nodes.begin(), nodes.end());
    graph_ = CorefGraph(std::move(nodes));

    BuildTasks();
    if (corpus_.mentions().empty()) return std::move(graph_);

    for (int round = 1;; ++round) {
      std::vector<Derivation> derived = RunRound(round);
      if (derived.empty()) {
        graph_.set_rounds(round);
        break;
      }
      for (auto& d : derived) graph_.Insert(std::move(d));
    }
    return std::move(graph_);
  }

 private:
  std::string ScopeKey(const EventDescription& e) const {
    switch (options_.scope) {
      case Scope::kWithinDocument: return e.topic_id + '\x1f' + e.doc_id;
      case Scope::kWithinTopic: return e.topic_id;
      case Scope::kCrossTopic: return {};
    }
    return {};
  }

  bool Applies(const CorefRule& r, const std::string& ta, const std::string& tb) const {
    if (r.cross_type()) {
      if (!options_.enable_cross_type) return false;
      return (r.guard_e1 == ta && r.guard_e2 == tb) ||
             (r.guard_e1 == tb && r.guard_e2 == ta);
    }
    return r.guard_e1 == ta && ta == tb;
  }

  void BuildTasks() {
    const auto& mentions = corpus_.mentions();
    std::map<std::string, std::vector<size_t>> groups;
    for (size_t i = 0; i < mentions.size(); ++i) {
      const EventDescription& e = mentions[i];
      if (profiles_.Find(e.event_type) == nullptr) {
        graph_.AddWarning("mention '" + e.id + "' skipped: event type '" +
                          e.event_type + "' has no profile");
        continue;
      }
      groups[ScopeKey(e)].push_back(i);
    }
    for (auto& [_, members] : groups) {
      std::sort(members.begin(), members.end(), [&](size_t x, size_t y) {
        return mentions[x].id < mentions[y].id;
      });
      for (size_t i = 0; i < members.size(); ++i) {
        for (size_t j = i + 1; j < members.size(); ++j) {
          PairTask task{members[i], members[j], {}};
          const auto& ta = mentions[task.a].event_type;
          const auto& tb = mentions[task.b].event_type;
          for (const auto& r : rules_.rules) {
            if (Applies(r, ta, tb)) task.rules.push_back(&r);
          }
          if (!task.rules.empty()) tasks_.push_back(std::move(task));
        }
      }
    }
    std::sort(tasks_.begin(), tasks_.end(), [&](const PairTask& x, const PairTask& y) {
      return std::tie(mentions[x.a].id, mentions[x.b].id) <
             std::tie(mentions[y.a].id, mentions[y.b].id);
    });
  }

  std::vector<Derivation> RunRound(int round) {
    std::vector<std::vector<Derivation>> per_task(tasks_.size());
    auto work = [&](size_t begin, size_t end) {
      for (size_t t = begin; t < end; ++t) per_task[t] = EvaluateTask(tasks_[t], round);
    };
    const size_t threads = static_cast<size_t>(std::max(1, options_.threads));
    if (threads == 1 || tasks_.size() < 2 * threads) {
      work(0, tasks_.size());
    } else {
      std::vector<std::thread> pool;
      const size_t chunk = (tasks_.size() + threads - 1) / threads;
      for (size_t begin = 0; begin < tasks_.size(); begin += chunk) {
        pool.emplace_back(work, begin, std::min(tasks_.size(), begin + chunk));
      }
      for (auto& th : pool) th.join();
    }
    std::vector<Derivation> out;
    for (auto& v : per_task) {
      for (auto& d : v) out.push_back(std::move(d));
    }
    return out;
  }

  // Reads graph_ only; the caller inserts results after the round.
  std::vector<Derivation> EvaluateTask(const PairTask& task, int round) const {
    std::vector<Derivation> out;
    const auto& ea = corpus_.mentions()[task.a];
    const auto& eb = corpus_.mentions()[task.b];
    const MentionPair pair(ea.id, eb.id);
    for (Strength s : {Strength::kCertain, Strength::kPossible}) {
      if (graph_.Has(pair, s)) continue;
      for (const CorefRule* rule : task.rules) {
        if (rule->strength != s) continue;
        // Graph-independent rules were settled in round 1.
        if (round > 1 && !rule->UsesSubevents()) continue;
        std::optional<Derivation> d;
        if (rule->cross_type()) {
          d = rule->guard_e1 == ea.event_type ? Try(*rule, ea, eb) : Try(*rule, eb, ea);
        } else {
          d = Try(*rule, ea, eb);
          if (!d) d = Try(*rule, eb, ea);
        }
        if (d) {
          d->edge = CorefEdge{pair, s, rule->rule_id, round};
          out.push_back(std::move(*d));
          break;
        }
      }
    }
    return out;
  }

  bool Linked(const std::string& x, const std::string& y, EdgeSource source,
              std::optional<Strength>& via) const {
    if (x == y) {
      via.reset();
      return true;
    }
    const MentionPair p(x, y);
    if (source != EdgeSource::kPossible && graph_.Has(p, Strength::kCertain)) {
      via = Strength::kCertain;
      return true;
    }
    if (source != EdgeSource::kCertain && graph_.Has(p, Strength::kPossible)) {
      via = Strength::kPossible;
      return true;
    }
    return false;
  }

  EdgeSource SourceFor(const CorefRule& rule) const {
    return rule.strength == Strength::kCertain ? options_.certain_subevent_source
                                               : options_.possible_subevent_source;
  }

  // Allocation-free test of one condition; Try repeats the work with
  // bindings only for rules that fire.
  bool Holds(const Condition& c, const EventDescription& e1, const EventDescription& e2,
             EdgeSource source) const {
    switch (c.kind) {
      case ConditionKind::kEq:
        if (c.lhs.IsTime()) return compat::TimeEq(e1.time, e2.time);
        if (c.lhs.IsPlace()) return compat::PlaceEq(e1.place, e2.place);
        for (const auto& p : e1.participants) {
          if (p.role != c.lhs.feature) continue;
          for (const auto& q : e2.participants) {
            if (q.role == c.rhs.feature && compat::EntityEq(p.entity, q.entity)) return true;
          }
        }
        return false;
      case ConditionKind::kCompat:
        return c.lhs.IsTime() ? compat::TimeCompat(e1.time, e2.time)
                              : compat::PlaceCompat(e1.place, e2.place);
      case ConditionKind::kSubeventCoref:
        for (const auto& s1 : e1.subevents) {
          for (const auto& s2 : e2.subevents) {
            std::optional<Strength> via;
            if (Linked(s1, s2, source, via)) return true;
          }
        }
        return false;
    }
    return false;
  }

  std::optional<Derivation> Try(const CorefRule& rule, const EventDescription& e1,
                                const EventDescription& e2) const {
    for (const Condition& c : rule.conditions) {
      if (!Holds(c, e1, e2, SourceFor(rule))) return std::nullopt;
    }
    Derivation d{CorefEdge{MentionPair(e1.id, e2.id), rule.strength, rule.rule_id, 0},
                 e1.id, {}, {}};
    for (const Condition& c : rule.conditions) {
      Binding b{c.ToString(), {}, {}};
      bool ok = false;
      switch (c.kind) {
        case ConditionKind::kEq:
          if (c.lhs.IsTime()) {
            ok = compat::TimeEq(e1.time, e2.time);
            b.e1_value = TimeText(e1.time);
            b.e2_value = TimeText(e2.time);
          } else if (c.lhs.IsPlace()) {
            ok = compat::PlaceEq(e1.place, e2.place);
            b.e1_value = PlaceText(e1.place);
            b.e2_value = PlaceText(e2.place);
          } else {
            auto f1 = e1.Fillers(c.lhs.feature);
            auto f2 = e2.Fillers(c.rhs.feature);
            ok = compat::RoleEq(f1, f2);
            if (ok) {
              // Report the shared filler.
              for (const auto& x : f1) {
                if (std::find(f2.begin(), f2.end(), x) != f2.end()) {
                  b.e1_value = b.e2_value = x.id();
                  break;
                }
              }
            } else {
              b.e1_value = JoinIds(f1);
              b.e2_value = JoinIds(f2);
            }
          }
          break;
        case ConditionKind::kCompat:
          if (c.lhs.IsTime()) {
            ok = compat::TimeCompat(e1.time, e2.time);
            b.e1_value = TimeText(e1.time);
            b.e2_value = TimeText(e2.time);
          } else {
            ok = compat::PlaceCompat(e1.place, e2.place);
            b.e1_value = PlaceText(e1.place);
            b.e2_value = PlaceText(e2.place);
          }
          break;
        case ConditionKind::kSubeventCoref: {
          const EdgeSource source = SourceFor(rule);
          for (const auto& s1 : e1.subevents) {
            for (const auto& s2 : e2.subevents) {
              std::optional<Strength> via;
              if (Linked(s1, s2, source, via)) {
                ok = true;
                b.e1_value = s1;
                b.e2_value = s2;
                d.supports.push_back({s1, s2, via});
                break;
              }
            }
            if (ok) break;
          }
          break;
        }
      }
      if (!ok) return std::nullopt;
      d.bindings.push_back(std::move(b));
    }
    return d;
  }

  const Corpus& corpus_;
  const RuleSet& rules_;
  const ProfileStore& profiles_;
  const EngineOptions& options_;
  CorefGraph graph_;
  std::vector<PairTask> tasks_;
};

void ExplainInto(const CorefGraph& graph, const Derivation& d, int depth,
                 std::set<std::pair<MentionPair, Strength>>& seen,
                 std::vector<ExplainStep>& out) {
  if (!seen.insert({d.edge.pair, d.edge.strength}).second) return;
  for (const auto& s : d.supports) {
    if (!s.via) continue;
    const Derivation* sub = graph.Find(MentionPair(s.e1_sub, s.e2_sub), *s.via);
    if (sub != nullptr) ExplainInto(graph, *sub, depth + 1, seen, out);
  }
  out.push_back(ExplainStep{depth, d});
}

}  // namespace

CorefGraph Evaluate(const Corpus& corpus, const RuleSet& rules,
                    const ProfileStore& profiles, const EngineOptions& options) {
  return Evaluator(corpus, rules, profiles, options).Run();
}

CorefMeasureValue Measure(const CorefGraph& graph, const MentionPair& pair,
                          double possible_weight) {
  if (graph.Has(pair, Strength::kCertain)) return CorefMeasureValue(1.0);
  if (graph.Has(pair, Strength::kPossible)) return CorefMeasureValue(possible_weight);
  return CorefMeasureValue(0.0);
}

std::vector<ExplainStep> Explain(const CorefGraph& graph, const MentionPair& pair) {
  std::vector<ExplainStep> steps;
  std::set<std::pair<MentionPair, Strength>> seen;
  // The strongest edge decides the measure, so only that one is traced.
  const Derivation* d = graph.Find(pair, Strength::kCertain);
  if (d == nullptr) d = graph.Find(pair, Strength::kPossible);
  if (d != nullptr) ExplainInto(graph, *d, 0, seen, steps);
  if (steps.empty()) {
    throw Error(ErrorCode::kNoEdge,
                "no coreference edge between '" + pair.a() + "' and '" + pair.b() + "'");
  }
  return steps;
}

std::string FormatExplain(const std::vector<ExplainStep>& steps) {
  std::ostringstream out;
  for (const auto& step : steps) {
    const Derivation& d = step.derivation;
    const std::string indent(static_cast<size_t>(step.depth) * 2, ' ');
    const std::string& e2 = d.e1 == d.edge.pair.a() ? d.edge.pair.b() : d.edge.pair.a();
    out << indent << "round " << d.edge.iteration << ": " << d.edge.rule_id << " => "
        << d.edge.pair.a() << ' ' << StrengthName(d.edge.strength) << ' '
        << d.edge.pair.b() << '\n';
    out << indent << "  E1=" << d.e1 << " E2=" << e2 << '\n';
    for (const auto& b : d.bindings) {
      out << indent << "  " << b.condition << "  [" << b.e1_value << " | "
          << b.e2_value << "]\n";
    }
  }
  return out.str();
}

std::string FormatGraph(const CorefGraph& graph) {
  std::ostringstream out;
  out << "# rounds " << graph.rounds() << '\n';
  for (const CorefEdge& e : graph.EdgeList()) {
    out << e.pair.a() << ' ' << StrengthName(e.strength) << ' ' << e.pair.b() << ' '
        << e.rule_id << ' ' << e.iteration << '\n';
  }
  return out.str();
}

CorefGraph ParseGraph(std::string_view text, std::vector<std::string> nodes,
                      std::string_view source) {
  std::sort(nodes.begin(), nodes.end());
  std::set<std::string> known(nodes.begin(), nodes.end());
  CorefGraph graph(std::move(nodes));
  for (const auto& line : SplitLines(text)) {
    std::string_view body = TrimView(line.text);
    if (body.empty()) continue;
    auto fail = [&](const std::string& what) {
      throw ParseError(std::string(source), line.number, 1, what);
    };
    if (body.front() == '#') {
      auto words = SplitWords(body.substr(1));
      int rounds = 0;
      if (words.size() == 2 && words[0] == "rounds" && ParseInt(words[1], rounds)) {
        graph.set_rounds(rounds);
      }
      continue;
    }
    auto words = SplitWords(body);
    if (words.size() != 5) fail("expected '<id_a> <strength> <id_b> <rule_id> <round>'");
    auto strength = ParseStrength(words[1]);
    if (!strength) fail("strength must be certain or possible");
    std::string a(words[0]), b(words[2]);
    if (a == b) fail("self-loop on '" + a + "'");
    for (const auto& id : {a, b}) {
      if (!known.count(id)) fail("mention '" + id + "' is not in the corpus");
    }
    int round = 0;
    if (!ParseInt(words[4], round) || round < 1) fail("round must be a positive integer");
    Derivation d{CorefEdge{MentionPair(a, b), *strength, std::string(words[3]), round},
                 a, {}, {}};
    if (!graph.Insert(std::move(d))) fail("duplicate edge");
  }
  return graph;
}

std::string FormatDerivationLog(const CorefGraph& graph) {
  std::ostringstream out;
  out << "# rounds " << graph.rounds() << '\n';
  for (const auto& w : graph.warnings()) out << "# warning: " << w << '\n';
  for (const CorefEdge& e : graph.EdgeList()) {
    const Derivation& d = *graph.Find(e.pair, e.strength);
    out << FormatExplain({ExplainStep{0, d}});
    for (const auto& s : d.supports) {
      out << "  support " << s.e1_sub << " ~ " << s.e2_sub << " via "
          << (s.via ? StrengthName(*s.via) : std::string_view("identity")) << '\n';
    }
  }
  return out.str();
}

}  // namespace evcoref
