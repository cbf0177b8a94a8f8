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

#include "evcoref/metrics.h"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "evcoref/error.h"

namespace evcoref {

PartitionScore PartitionScore::FromPrecisionRecall(double p, double r) {
  return PartitionScore{p, r, p + r > 0 ? 2 * p * r / (p + r) : 0.0};
}

RatioCounts& RatioCounts::operator+=(const RatioCounts& o) {
  p_num += o.p_num;
  p_den += o.p_den;
  r_num += o.r_num;
  r_den += o.r_den;
  return *this;
}

namespace {

PartitionScore ScoreSide(double p_num, double p_den, double r_num, double r_den) {
  if (p_den == 0 && r_den == 0) return PartitionScore{1.0, 1.0, 1.0};
  const double p = p_den > 0 ? p_num / p_den : 0.0;
  const double r = r_den > 0 ? r_num / r_den : 0.0;
  return PartitionScore::FromPrecisionRecall(p, r);
}

void CheckUniverse(const Partition& response, const Partition& key) {
  if (response.universe() != key.universe()) {
    throw Error(ErrorCode::kUniverseMismatch,
                "response covers " + std::to_string(response.size()) +
                    " mentions, key covers " + std::to_string(key.size()) +
                    "; the mention sets must be identical");
  }
}

// Overlap sizes |K_i ∩ R_j| for every intersecting pair, keyed (i, j).
std::map<std::pair<size_t, size_t>, long long> Overlaps(const Partition& response,
                                                        const Partition& key) {
  std::map<std::pair<size_t, size_t>, long long> out;
  for (size_t i = 0; i < key.blocks().size(); ++i) {
    for (const auto& id : key.blocks()[i]) ++out[{i, *response.BlockOf(id)}];
  }
  return out;
}

// Sum over blocks S of (|S| - number of pieces S splits into under `other`).
std::pair<double, double> MucSide(const Partition& part, const Partition& other) {
  double num = 0, den = 0;
  for (const auto& block : part.blocks()) {
    std::set<size_t> pieces;
    for (const auto& id : block) pieces.insert(*other.BlockOf(id));
    num += static_cast<double>(block.size() - pieces.size());
    den += static_cast<double>(block.size() - 1);
  }
  return {num, den};
}

constexpr size_t kLexRefineLimit = 64;

long long AssignmentTotal(const std::vector<std::vector<long long>>& w,
                          const std::vector<std::optional<size_t>>& a) {
  long long t = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i]) t += w[i][*a[i]];
  }
  return t;
}

}  // namespace

PartitionScore RatioCounts::Score() const { return ScoreSide(p_num, p_den, r_num, r_den); }

BlancCounts& BlancCounts::operator+=(const BlancCounts& o) {
  key_coref += o.key_coref;
  response_coref += o.response_coref;
  right_coref += o.right_coref;
  key_noncoref += o.key_noncoref;
  response_noncoref += o.response_noncoref;
  right_noncoref += o.right_noncoref;
  return *this;
}

PartitionScore BlancCounts::CorefSide() const {
  return ScoreSide(static_cast<double>(right_coref), static_cast<double>(response_coref),
                   static_cast<double>(right_coref), static_cast<double>(key_coref));
}

PartitionScore BlancCounts::NonCorefSide() const {
  return ScoreSide(static_cast<double>(right_noncoref),
                   static_cast<double>(response_noncoref),
                   static_cast<double>(right_noncoref),
                   static_cast<double>(key_noncoref));
}

PartitionScore BlancCounts::Score() const {
  const PartitionScore c = CorefSide();
  const PartitionScore n = NonCorefSide();
  return PartitionScore{(c.precision + n.precision) / 2, (c.recall + n.recall) / 2,
                        (c.f1 + n.f1) / 2};
}

RatioCounts MucCounts(const Partition& response, const Partition& key) {
  CheckUniverse(response, key);
  auto [r_num, r_den] = MucSide(key, response);
  auto [p_num, p_den] = MucSide(response, key);
  return RatioCounts{p_num, p_den, r_num, r_den};
}

RatioCounts BCubedCounts(const Partition& response, const Partition& key) {
  CheckUniverse(response, key);
  RatioCounts c;
  c.p_den = c.r_den = static_cast<double>(key.size());
  for (const auto& [ij, overlap] : Overlaps(response, key)) {
    const double o = static_cast<double>(overlap);
    // Each of the `o` shared mentions contributes o/|K| to recall and o/|R|
    // to precision.
    c.r_num += o * o / static_cast<double>(key.blocks()[ij.first].size());
    c.p_num += o * o / static_cast<double>(response.blocks()[ij.second].size());
  }
  return c;
}

std::vector<std::optional<size_t>> MaxWeightAssignment(
    const std::vector<std::vector<long long>>& weights) {
  const size_t rows = weights.size();
  if (rows == 0) return {};
  const size_t cols = weights[0].size();
  if (rows > cols) {
    std::vector<std::vector<long long>> t(cols, std::vector<long long>(rows));
    for (size_t i = 0; i < rows; ++i) {
      for (size_t j = 0; j < cols; ++j) t[j][i] = weights[i][j];
    }
    auto col_to_row = MaxWeightAssignment(t);
    std::vector<std::optional<size_t>> out(rows);
    for (size_t j = 0; j < cols; ++j) {
      if (col_to_row[j]) out[*col_to_row[j]] = j;
    }
    return out;
  }
  // Hungarian method (shortest augmenting paths with potentials) minimizing
  // -weight; 1-based with column 0 as the virtual source.
  constexpr long long kInf = std::numeric_limits<long long>::max() / 4;
  const size_t n = rows, m = cols;
  std::vector<long long> u(n + 1, 0), v(m + 1, 0);
  std::vector<size_t> p(m + 1, 0), way(m + 1, 0);
  for (size_t i = 1; i <= n; ++i) {
    p[0] = i;
    size_t j0 = 0;
    std::vector<long long> minv(m + 1, kInf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const size_t i0 = p[j0];
      long long delta = kInf;
      size_t j1 = 0;
      for (size_t j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const long long cur = -weights[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (size_t j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::optional<size_t>> out(n);
  for (size_t j = 1; j <= m; ++j) {
    if (p[j] != 0) out[p[j] - 1] = j - 1;
  }
  return out;
}

CeafAlignment AlignCeafM(const Partition& response, const Partition& key) {
  CheckUniverse(response, key);
  const auto overlaps = Overlaps(response, key);
  const size_t nk = key.blocks().size();
  const size_t nr = response.blocks().size();

  // Connected components of the key/response overlap graph; each one is
  // matched independently. Nodes 0..nk-1 are key blocks, nk.. response.
  std::vector<size_t> parent(nk + nr);
  std::iota(parent.begin(), parent.end(), size_t{0});
  std::function<size_t(size_t)> find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [ij, _] : overlaps) parent[find(ij.first)] = find(nk + ij.second);
  std::map<size_t, std::pair<std::vector<size_t>, std::vector<size_t>>> comps;
  for (size_t i = 0; i < nk; ++i) comps[find(i)].first.push_back(i);
  for (size_t j = 0; j < nr; ++j) comps[find(nk + j)].second.push_back(j);

  CeafAlignment result;
  for (const auto& [_, comp] : comps) {
    const auto& krows = comp.first;
    const auto& rcols = comp.second;
    if (krows.empty() || rcols.empty()) continue;
    std::vector<std::vector<long long>> w(krows.size(),
                                          std::vector<long long>(rcols.size(), 0));
    for (size_t a = 0; a < krows.size(); ++a) {
      for (size_t b = 0; b < rcols.size(); ++b) {
        auto it = overlaps.find({krows[a], rcols[b]});
        if (it != overlaps.end()) w[a][b] = it->second;
      }
    }
    auto assignment = MaxWeightAssignment(w);
    long long best = AssignmentTotal(w, assignment);
    result.total += best;

    if (krows.size() <= kLexRefineLimit && rcols.size() <= kLexRefineLimit) {
      // Fix rows in order to the smallest column that still admits an
      // optimum of the remaining subproblem.
      std::vector<bool> row_free(krows.size(), true), col_free(rcols.size(), true);
      auto sub_optimum = [&]() {
        std::vector<size_t> rs, cs;
        for (size_t a = 0; a < krows.size(); ++a) if (row_free[a]) rs.push_back(a);
        for (size_t b = 0; b < rcols.size(); ++b) if (col_free[b]) cs.push_back(b);
        if (rs.empty() || cs.empty()) return 0LL;
        std::vector<std::vector<long long>> sw(rs.size(), std::vector<long long>(cs.size()));
        for (size_t x = 0; x < rs.size(); ++x) {
          for (size_t y = 0; y < cs.size(); ++y) sw[x][y] = w[rs[x]][cs[y]];
        }
        return AssignmentTotal(sw, MaxWeightAssignment(sw));
      };
      long long remaining = best;
      for (size_t a = 0; a < krows.size(); ++a) {
        row_free[a] = false;
        bool fixed = false;
        for (size_t b = 0; b < rcols.size() && !fixed; ++b) {
          if (!col_free[b] || w[a][b] == 0) continue;
          col_free[b] = false;
          if (w[a][b] + sub_optimum() == remaining) {
            remaining -= w[a][b];
            assignment[a] = b;
            fixed = true;
          } else {
            col_free[b] = true;
          }
        }
        if (!fixed) assignment[a].reset();
      }
    }
    for (size_t a = 0; a < krows.size(); ++a) {
      if (assignment[a] && w[a][*assignment[a]] > 0) {
        result.pairs.emplace_back(krows[a], rcols[*assignment[a]]);
      }
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

RatioCounts CeafMCounts(const Partition& response, const Partition& key) {
  const CeafAlignment a = AlignCeafM(response, key);
  const double total = static_cast<double>(a.total);
  return RatioCounts{total, static_cast<double>(response.size()), total,
                     static_cast<double>(key.size())};
}

BlancCounts BlancPairCounts(const Partition& response, const Partition& key) {
  CheckUniverse(response, key);
  BlancCounts c;
  auto links = [](const Partition& p) {
    long long n = 0;
    for (const auto& b : p.blocks()) {
      const auto s = static_cast<long long>(b.size());
      n += s * (s - 1) / 2;
    }
    return n;
  };
  const auto n = static_cast<long long>(key.size());
  const long long all_pairs = n * (n - 1) / 2;
  c.key_coref = links(key);
  c.response_coref = links(response);
  for (const auto& [_, overlap] : Overlaps(response, key)) {
    c.right_coref += overlap * (overlap - 1) / 2;
  }
  c.key_noncoref = all_pairs - c.key_coref;
  c.response_noncoref = all_pairs - c.response_coref;
  // Pairs split in both = all - (coref in key or response).
  c.right_noncoref = all_pairs - (c.key_coref + c.response_coref - c.right_coref);
  return c;
}

PartitionScore Muc(const Partition& response, const Partition& key) {
  return MucCounts(response, key).Score();
}

PartitionScore BCubed(const Partition& response, const Partition& key) {
  return BCubedCounts(response, key).Score();
}

PartitionScore CeafM(const Partition& response, const Partition& key) {
  return CeafMCounts(response, key).Score();
}

PartitionScore Blanc(const Partition& response, const Partition& key) {
  CheckUniverse(response, key);
  if (key.size() < 2) {
    throw Error(ErrorCode::kTooFewMentions, "BLANC needs at least two mentions");
  }
  return BlancPairCounts(response, key).Score();
}

std::string_view MetricName(Metric m) {
  switch (m) {
    case Metric::kMuc: return "MUC";
    case Metric::kBCubed: return "B3";
    case Metric::kCeafM: return "CEAF (M)";
    case Metric::kBlanc: return "BLANC";
  }
  return "?";
}

std::string_view MetricFlag(Metric m) {
  switch (m) {
    case Metric::kMuc: return "muc";
    case Metric::kBCubed: return "b3";
    case Metric::kCeafM: return "ceafm";
    case Metric::kBlanc: return "blanc";
  }
  return "?";
}

std::optional<Metric> ParseMetricFlag(std::string_view flag) {
  for (Metric m : kAllMetrics) {
    if (MetricFlag(m) == flag) return m;
  }
  return std::nullopt;
}

const PartitionScore& MetricScores::Get(Metric m) const {
  switch (m) {
    case Metric::kMuc: return muc;
    case Metric::kBCubed: return b_cubed;
    case Metric::kCeafM: return ceaf_m;
    case Metric::kBlanc: return blanc;
  }
  return muc;
}

PartitionScore& MetricScores::Get(Metric m) {
  return const_cast<PartitionScore&>(std::as_const(*this).Get(m));
}

MetricScores ScoreRun(const TopicPartitions& responses, const TopicPartitions& keys,
                      Averaging averaging) {
  std::set<std::string> rt, kt;
  for (const auto& [t, _] : responses) rt.insert(t);
  for (const auto& [t, _] : keys) kt.insert(t);
  if (rt != kt) {
    throw Error(ErrorCode::kTopicMismatch,
                "response has " + std::to_string(rt.size()) + " topics, key has " +
                    std::to_string(kt.size()) + "; topic ids must match");
  }
  for (const auto& [topic, key] : keys) {
    if (responses.at(topic).universe() != key.universe()) {
      throw Error(ErrorCode::kUniverseMismatch,
                  "topic '" + topic + "': response and key cover different mentions");
    }
  }

  MetricScores out;
  if (averaging == Averaging::kMicro) {
    RatioCounts muc, b3, ceaf;
    BlancCounts blanc;
    size_t mentions = 0;
    for (const auto& [topic, key] : keys) {
      const Partition& resp = responses.at(topic);
      muc += MucCounts(resp, key);
      b3 += BCubedCounts(resp, key);
      ceaf += CeafMCounts(resp, key);
      blanc += BlancPairCounts(resp, key);
      mentions += key.size();
    }
    out.muc = muc.Score();
    out.b_cubed = b3.Score();
    out.ceaf_m = ceaf.Score();
    if (mentions < 2) {
      throw Error(ErrorCode::kTooFewMentions, "BLANC needs at least two mentions");
    }
    out.blanc = blanc.Score();
    return out;
  }

  MetricScores sum;
  size_t topics = 0, blanc_topics = 0;
  auto accumulate = [](PartitionScore& acc, const PartitionScore& s) {
    acc.precision += s.precision;
    acc.recall += s.recall;
    acc.f1 += s.f1;
  };
  for (const auto& [topic, key] : keys) {
    const Partition& resp = responses.at(topic);
    accumulate(sum.muc, Muc(resp, key));
    accumulate(sum.b_cubed, BCubed(resp, key));
    accumulate(sum.ceaf_m, CeafM(resp, key));
    ++topics;
    if (key.size() >= 2) {
      accumulate(sum.blanc, Blanc(resp, key));
      ++blanc_topics;
    }
  }
  if (blanc_topics == 0) {
    throw Error(ErrorCode::kTooFewMentions, "no topic has two or more mentions");
  }
  auto divide = [](const PartitionScore& s, size_t n) {
    const double d = static_cast<double>(n);
    return PartitionScore{s.precision / d, s.recall / d, s.f1 / d};
  };
  out.muc = divide(sum.muc, topics);
  out.b_cubed = divide(sum.b_cubed, topics);
  out.ceaf_m = divide(sum.ceaf_m, topics);
  out.blanc = divide(sum.blanc, blanc_topics);
  return out;
}

namespace {

std::string Percent(double v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%.2f", v * 100.0);
  return buf;
}

std::string Pad(std::string s, size_t width, bool right) {
  if (s.size() >= width) return s;
  const std::string fill(width - s.size(), ' ');
  return right ? fill + s : s + fill;
}

}  // namespace

std::string FormatScoreTable(const std::vector<ScoreRow>& rows,
                             const std::vector<Metric>& metrics) {
  constexpr size_t kCell = 7;
  constexpr size_t kGroup = 3 * kCell + 2;
  size_t label_width = 5;
  for (const auto& r : rows) label_width = std::max(label_width, r.label.size());

  std::ostringstream out;
  out << Pad("", label_width, false);
  for (Metric m : metrics) {
    std::string name(MetricName(m));
    const size_t left = (kGroup - name.size()) / 2;
    out << " |" << Pad(std::string(left, ' ') + name, kGroup, false);
  }
  out << '\n' << Pad("", label_width, false);
  for (size_t i = 0; i < metrics.size(); ++i) {
    out << " |" << Pad("p", kCell, true) << ' ' << Pad("r", kCell, true) << ' '
        << Pad("F1", kCell, true);
  }
  out << '\n';
  for (const auto& r : rows) {
    out << Pad(r.label, label_width, false);
    for (Metric m : metrics) {
      const PartitionScore& s = r.scores.Get(m);
      out << " |" << Pad(Percent(s.precision), kCell, true) << ' '
          << Pad(Percent(s.recall), kCell, true) << ' ' << Pad(Percent(s.f1), kCell, true);
    }
    out << '\n';
  }
  return out.str();
}

std::string ScoreTableJson(const std::vector<ScoreRow>& rows,
                           const std::vector<Metric>& metrics) {
  nlohmann::ordered_json doc;
  doc["units"] = "percent";
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["label"] = r.label;
    for (Metric m : metrics) {
      const PartitionScore& s = r.scores.Get(m);
      row[std::string(MetricFlag(m))] = {
          {"p", s.precision * 100.0}, {"r", s.recall * 100.0}, {"f1", s.f1 * 100.0}};
    }
    arr.push_back(std::move(row));
  }
  doc["rows"] = std::move(arr);
  return doc.dump(2) + "\n";
}

}  // namespace evcoref
