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

#include "evcoref/ruledsl.h"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "evcoref/error.h"
#include "evcoref/ontology.h"
#include "evcoref/text_util.h"

namespace evcoref {

std::string Accessor::ToString() const {
  return (side == Side::kE1 ? "E1." : "E2.") + feature;
}

std::string Condition::ToString() const {
  const char* op = kind == ConditionKind::kEq       ? " == "
                   : kind == ConditionKind::kCompat ? " ~ "
                                                    : " hasCoref ";
  return lhs.ToString() + op + rhs.ToString();
}

std::string CorefRule::GuardKey() const {
  return cross_type() ? guard_e1 + "/" + guard_e2 : guard_e1;
}

bool CorefRule::UsesSubevents() const {
  for (const auto& c : conditions) {
    if (c.kind == ConditionKind::kSubeventCoref) return true;
  }
  return false;
}

const CorefRule* RuleSet::Find(std::string_view rule_id) const {
  for (const auto& r : rules) {
    if (r.rule_id == rule_id) return &r;
  }
  return nullptr;
}

namespace {

constexpr std::string_view kTildeUtf8 = "\xE2\x88\xBC";  // U+223C

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Cursor over one line of rule text.
class LineParser {
 public:
  LineParser(std::string_view line, int line_no, std::string_view source)
      : line_(line), line_no_(line_no), source_(source) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(std::string(source_), line_no_, static_cast<int>(pos_) + 1, what);
  }

  void SkipSpace() {
    while (pos_ < line_.size() && (line_[pos_] == ' ' || line_[pos_] == '\t')) ++pos_;
  }
  bool AtEnd() {
    SkipSpace();
    return pos_ >= line_.size();
  }
  bool Consume(std::string_view token) {
    SkipSpace();
    if (line_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void Expect(std::string_view token) {
    if (!Consume(token)) Fail("expected '" + std::string(token) + "'");
  }
  std::string Ident(const char* what) {
    SkipSpace();
    if (pos_ >= line_.size() || !IsIdentStart(line_[pos_])) {
      Fail(std::string("expected ") + what);
    }
    size_t start = pos_;
    while (pos_ < line_.size() && IsIdentChar(line_[pos_])) ++pos_;
    return std::string(line_.substr(start, pos_ - start));
  }
  size_t pos() const { return pos_; }
  void set_pos(size_t p) { pos_ = p; }

  Accessor ParseAccessor() {
    SkipSpace();
    Accessor a;
    if (Consume("E1")) {
      a.side = Side::kE1;
    } else if (Consume("E2")) {
      a.side = Side::kE2;
    } else {
      Fail("expected E1 or E2");
    }
    if (pos_ >= line_.size() || line_[pos_] != '.') Fail("expected '.' after event variable");
    ++pos_;
    if (pos_ >= line_.size() || !IsIdentStart(line_[pos_])) Fail("expected a role or feature name");
    a.feature = Ident("a role or feature name");
    return a;
  }

  ConditionKind ParseOperator() {
    if (Consume("==")) return ConditionKind::kEq;
    if (Consume("~")) return ConditionKind::kCompat;
    if (Consume(kTildeUtf8)) return ConditionKind::kCompat;
    SkipSpace();
    size_t save = pos_;
    if (pos_ < line_.size() && IsIdentStart(line_[pos_])) {
      if (Ident("operator") == "hasCoref") return ConditionKind::kSubeventCoref;
    }
    pos_ = save;
    Fail("expected '==', '~' or 'hasCoref'");
  }

 private:
  std::string_view line_;
  int line_no_;
  std::string_view source_;
  size_t pos_ = 0;
};

class RuleParser {
 public:
  RuleParser(const ProfileStore& profiles, std::string_view source)
      : profiles_(profiles), source_(source) {}

  RuleSet Parse(std::string_view text) {
    for (const auto& line : SplitLines(text)) {
      std::string_view body = StripComment(line.text);
      if (TrimView(body).empty()) continue;
      LineParser p(body, line.number, source_);
      ParseLine(p, line.number);
    }
    LintDuplicates();
    return std::move(out_);
  }

 private:
  void ParseLine(LineParser& p, int line_no) {
    p.SkipSpace();
    const size_t start = p.pos();
    std::string head = p.Ident("'certain', 'possible' or 'pragma'");
    if (head == "pragma") {
      std::string name;
      p.SkipSpace();
      size_t name_pos = p.pos();
      name = p.Ident("pragma name");
      while (p.Consume("-")) name += "-" + p.Ident("pragma name");
      if (name != "legacy-verbatim") {
        p.set_pos(name_pos);
        p.Fail("unknown pragma '" + name + "'");
      }
      if (!p.AtEnd()) p.Fail("unexpected text after pragma");
      out_.legacy_verbatim = true;
      return;
    }
    auto strength = ParseStrength(head);
    if (!strength) {
      p.set_pos(start);
      p.Fail("expected 'certain', 'possible' or 'pragma', got '" + head + "'");
    }

    CorefRule rule;
    rule.strength = *strength;
    rule.line = line_no;
    size_t guard_pos = p.pos();
    rule.guard_e1 = p.Ident("an event type");
    rule.guard_e2 = p.Consume("/") ? p.Ident("an event type") : rule.guard_e1;
    p.Expect(":");

    const EventTypeProfile* prof1 = profiles_.Find(rule.guard_e1);
    const EventTypeProfile* prof2 = profiles_.Find(rule.guard_e2);
    for (const auto& [name, prof] : {std::pair{&rule.guard_e1, prof1},
                                     std::pair{&rule.guard_e2, prof2}}) {
      if (prof == nullptr) {
        p.set_pos(guard_pos);
        throw Error(ErrorCode::kUnknownEventType,
                    Where(line_no) + "no profile for event type '" + *name + "'");
      }
    }

    if (p.AtEnd()) {
      throw Error(ErrorCode::kEmptyConjunction,
                  Where(line_no) + "rule has no conditions");
    }
    do {
      rule.conditions.push_back(ParseCondition(p, *prof1, *prof2, rule, line_no));
    } while (p.Consume("&"));
    if (!p.AtEnd()) p.Fail("expected '&' or end of line");

    const std::string key = rule.GuardKey();
    int& n = next_index_[{key, rule.strength}];
    rule.rule_id = key + "." + std::string(StrengthName(rule.strength)) + "." +
                   std::to_string(++n);
    if (rule.legacy) {
      out_.warnings.push_back(Where(line_no) + "rule " + rule.rule_id +
                              " references a role its event type does not "
                              "declare; it cannot fire on valid data");
    }
    out_.rules.push_back(std::move(rule));
  }

  Condition ParseCondition(LineParser& p, const EventTypeProfile& prof1,
                           const EventTypeProfile& prof2, CorefRule& rule,
                           int line_no) {
    const bool paren = p.Consume("(");
    p.SkipSpace();
    const size_t cond_pos = p.pos();
    Condition c;
    c.lhs = p.ParseAccessor();
    c.kind = p.ParseOperator();
    c.rhs = p.ParseAccessor();
    if (paren) p.Expect(")");

    auto fail_at = [&](const std::string& what) {
      p.set_pos(cond_pos);
      p.Fail(what);
    };
    if (c.lhs.side != Side::kE1 || c.rhs.side != Side::kE2) {
      fail_at("conditions compare E1 (left) with E2 (right)");
    }
    switch (c.kind) {
      case ConditionKind::kSubeventCoref:
        if (!c.lhs.IsSubEvent() || !c.rhs.IsSubEvent()) {
          fail_at("hasCoref relates E1.SubEvent and E2.SubEvent only");
        }
        break;
      case ConditionKind::kCompat:
        if (!((c.lhs.IsTime() && c.rhs.IsTime()) ||
              (c.lhs.IsPlace() && c.rhs.IsPlace()))) {
          fail_at("'~' applies to Time~Time or Place~Place only");
        }
        break;
      case ConditionKind::kEq:
        if (c.lhs.IsSubEvent() || c.rhs.IsSubEvent()) {
          fail_at("SubEvent can only be compared with hasCoref");
        }
        if (c.lhs.IsTime() != c.rhs.IsTime() || c.lhs.IsPlace() != c.rhs.IsPlace()) {
          fail_at("'==' must compare like features (role, Time or Place)");
        }
        break;
    }
    for (const auto& [acc, prof] : {std::pair{&c.lhs, &prof1}, std::pair{&c.rhs, &prof2}}) {
      if (!acc->IsRole() || prof->HasRole(acc->feature)) continue;
      if (!out_.legacy_verbatim) {
        throw Error(ErrorCode::kUnknownRole,
                    Where(line_no) + "rule for " + rule.GuardKey() + ": role '" +
                        acc->feature + "' is not declared by " + prof->type_name);
      }
      rule.legacy = true;
    }
    return c;
  }

  void LintDuplicates() {
    for (size_t i = 0; i < out_.rules.size(); ++i) {
      for (size_t j = 0; j < i; ++j) {
        const CorefRule& a = out_.rules[j];
        const CorefRule& b = out_.rules[i];
        if (a.strength == b.strength && a.guard_e1 == b.guard_e1 &&
            a.guard_e2 == b.guard_e2 && a.conditions == b.conditions) {
          out_.warnings.push_back(Where(b.line) + "rule " + b.rule_id +
                                  " repeats the conditions of " + a.rule_id);
          break;
        }
      }
    }
  }

  std::string Where(int line_no) const {
    return std::string(source_) + ":" + std::to_string(line_no) + ": ";
  }

  const ProfileStore& profiles_;
  std::string_view source_;
  RuleSet out_;
  std::map<std::pair<std::string, Strength>, int> next_index_;
};

}  // namespace

RuleSet ParseRules(std::string_view text, const ProfileStore& profiles,
                   std::string_view source) {
  return RuleParser(profiles, source).Parse(text);
}

RuleSet LoadRules(const std::string& path, const ProfileStore& profiles) {
  return ParseRules(ReadFile(path), profiles, path);
}

std::string FormatRule(const CorefRule& rule) {
  std::string out(StrengthName(rule.strength));
  out += ' ';
  out += rule.GuardKey();
  out += ':';
  for (size_t i = 0; i < rule.conditions.size(); ++i) {
    out += i == 0 ? " " : " & ";
    out += rule.conditions[i].ToString();
  }
  return out;
}

std::string FormatRules(const RuleSet& rules) {
  std::string out;
  if (rules.legacy_verbatim) out += "pragma legacy-verbatim\n";
  for (const auto& r : rules.rules) {
    out += FormatRule(r);
    out += '\n';
  }
  return out;
}

RuleCountReport::RuleCountReport(const RuleSet& rules) {
  for (const auto& r : rules.rules) {
    auto& c = counts_[r.GuardKey()];
    (r.strength == Strength::kCertain ? c.certain : c.possible)++;
  }
}

StrengthCounts RuleCountReport::For(std::string_view guard_key) const {
  auto it = counts_.find(guard_key);
  return it == counts_.end() ? StrengthCounts{} : it->second;
}

int RuleCountReport::total() const {
  int n = 0;
  for (const auto& [_, c] : counts_) n += c.certain + c.possible;
  return n;
}

std::string RuleCountReport::ToText() const {
  size_t width = 5;
  for (const auto& [key, _] : counts_) width = std::max(width, key.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(width)) << "guard"
      << "  certain  possible\n";
  for (const auto& [key, c] : counts_) {
    out << std::left << std::setw(static_cast<int>(width)) << key << "  "
        << std::right << std::setw(7) << c.certain << "  " << std::setw(8)
        << c.possible << '\n';
  }
  return out.str();
}

}  // namespace evcoref
