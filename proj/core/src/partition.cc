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

#include "evcoref/partition.h"

#include <algorithm>
#include <set>
#include <sstream>

#include "evcoref/error.h"
#include "evcoref/text_util.h"

namespace evcoref {

Partition::Partition(std::vector<std::vector<std::string>> blocks)
    : blocks_(std::move(blocks)) {
  for (auto& block : blocks_) {
    if (block.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "partition has an empty block");
    }
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (size_t i = 0; i < blocks_.size(); ++i) {
    for (const auto& id : blocks_[i]) {
      if (!index_.emplace(id, i).second) {
        throw Error(ErrorCode::kInvalidArgument,
                    "mention '" + id + "' appears in more than one block");
      }
      universe_.push_back(id);
    }
  }
  std::sort(universe_.begin(), universe_.end());
}

Partition Partition::Singletons(std::vector<std::string> ids) {
  std::vector<std::vector<std::string>> blocks;
  blocks.reserve(ids.size());
  for (auto& id : ids) blocks.push_back({std::move(id)});
  return Partition(std::move(blocks));
}

bool Partition::Contains(std::string_view id) const {
  return index_.count(std::string(id)) > 0;
}

std::optional<size_t> Partition::BlockOf(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Partition::SameBlock(std::string_view a, std::string_view b) const {
  auto x = BlockOf(a);
  auto y = BlockOf(b);
  return x && y && *x == *y;
}

Partition Partition::Restrict(const std::vector<std::string>& ids) const {
  std::set<std::string> keep(ids.begin(), ids.end());
  std::vector<std::vector<std::string>> out;
  for (const auto& block : blocks_) {
    std::vector<std::string> kept;
    for (const auto& id : block) {
      if (keep.count(id)) kept.push_back(id);
    }
    if (!kept.empty()) out.push_back(std::move(kept));
  }
  return Partition(std::move(out));
}

std::string FormatNativePartitions(const TopicPartitions& parts) {
  std::ostringstream out;
  for (const auto& [topic, partition] : parts) {
    for (const auto& block : partition.blocks()) {
      out << topic << '\t';
      for (size_t i = 0; i < block.size(); ++i) {
        if (i) out << ' ';
        out << block[i];
      }
      out << '\n';
    }
  }
  return out.str();
}

TopicPartitions ParseNativePartitions(std::string_view text,
                                      std::string_view source) {
  std::map<std::string, std::vector<std::vector<std::string>>> blocks;
  for (const auto& line : SplitLines(text)) {
    std::string_view body = TrimView(StripComment(line.text));
    if (body.empty()) continue;
    auto tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(std::string(source), line.number, 1,
                       "expected '<topic>\\t<mention ids>'");
    }
    std::string topic(TrimView(body.substr(0, tab)));
    std::vector<std::string> block;
    for (auto word : SplitWords(body.substr(tab + 1))) block.emplace_back(word);
    if (topic.empty() || block.empty()) {
      throw ParseError(std::string(source), line.number, 1,
                       "block line needs a topic and at least one mention");
    }
    blocks[topic].push_back(std::move(block));
  }
  TopicPartitions out;
  for (auto& [topic, b] : blocks) {
    try {
      out.emplace(topic, Partition(std::move(b)));
    } catch (const Error& e) {
      throw ParseError(std::string(source), 0, 0,
                       "topic '" + topic + "': " + e.what());
    }
  }
  return out;
}

std::string FormatConllPartitions(const TopicPartitions& parts) {
  std::ostringstream out;
  for (const auto& [topic, partition] : parts) {
    out << "#begin document (" << topic << ");\n";
    for (const auto& id : partition.universe()) {
      out << topic << "\t0\t" << id << "\t(" << *partition.BlockOf(id) << ")\n";
    }
    out << "#end document\n";
  }
  return out.str();
}

TopicPartitions ParseConllPartitions(std::string_view text,
                                     std::string_view source) {
  TopicPartitions out;
  std::optional<std::string> topic;
  std::map<std::string, std::vector<std::string>> clusters;
  std::vector<std::vector<std::string>> singletons;
  auto fail = [&](int line, const std::string& what) {
    throw ParseError(std::string(source), line, 1, what);
  };
  for (const auto& line : SplitLines(text)) {
    std::string_view body = TrimView(line.text);
    if (body.empty()) continue;
    if (body.rfind("#begin document", 0) == 0) {
      if (topic) fail(line.number, "nested '#begin document'");
      auto open = body.find('(');
      auto close = body.find(')', open == std::string_view::npos ? 0 : open);
      if (open == std::string_view::npos || close == std::string_view::npos) {
        fail(line.number, "expected '#begin document (<name>);'");
      }
      topic = std::string(body.substr(open + 1, close - open - 1));
      if (out.count(*topic)) fail(line.number, "document '" + *topic + "' repeated");
      continue;
    }
    if (body.rfind("#end document", 0) == 0) {
      if (!topic) fail(line.number, "'#end document' without '#begin document'");
      for (auto& [_, members] : clusters) singletons.push_back(std::move(members));
      try {
        out.emplace(*topic, Partition(std::move(singletons)));
      } catch (const Error& e) {
        fail(line.number, e.what());
      }
      clusters.clear();
      singletons.clear();
      topic.reset();
      continue;
    }
    if (body.front() == '#') continue;
    if (!topic) fail(line.number, "mention line outside a document");
    auto cols = SplitWords(body);
    if (cols.size() < 4) fail(line.number, "expected at least 4 columns");
    std::string mention(cols[2]);
    std::string_view tag = cols.back();
    if (tag == "-") {
      singletons.push_back({mention});
    } else if (tag.size() >= 3 && tag.front() == '(' && tag.back() == ')' &&
               tag.find('|') == std::string_view::npos) {
      clusters[std::string(tag.substr(1, tag.size() - 2))].push_back(mention);
    } else {
      fail(line.number, "unsupported coreference tag '" + std::string(tag) +
                            "' (mention-level files use '(<n>)' or '-')");
    }
  }
  if (topic) throw ParseError(std::string(source), 0, 0, "missing '#end document'");
  return out;
}

TopicPartitions ParsePartitions(std::string_view text, std::string_view source) {
  for (const auto& line : SplitLines(text)) {
    std::string_view body = TrimView(line.text);
    if (body.empty()) continue;
    if (body.rfind("#begin document", 0) == 0) {
      return ParseConllPartitions(text, source);
    }
    if (body.front() != '#') break;
  }
  return ParseNativePartitions(text, source);
}

TopicPartitions LoadPartitions(const std::string& path) {
  return ParsePartitions(ReadFile(path), path);
}

Partition MergeTopics(const TopicPartitions& parts) {
  std::vector<std::vector<std::string>> blocks;
  for (const auto& [_, p] : parts) {
    for (const auto& b : p.blocks()) blocks.push_back(b);
  }
  return Partition(std::move(blocks));
}

}  // namespace evcoref
