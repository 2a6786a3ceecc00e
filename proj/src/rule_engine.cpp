#include "mcda/rule_engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

using CV = CharacteristicVector;

std::uint8_t m(const CV& v, Slot s) { return v[index_of(s)]; }

bool one_or_three(std::uint8_t x) { return x == 1 || x == 3; }
bool two_or_three(std::uint8_t x) { return x == 2 || x == 3; }

constexpr std::array<NamedSubset, 16> kSubsets{{
    {"S1a", "no criteria weights", [](const CV& v) { return m(v, Slot::Weights) == 0; }},
    {"S1b", "qualitative weights", [](const CV& v) { return m(v, Slot::WeightScale) == 1; }},
    {"S1c", "quantitative weights", [](const CV& v) { return m(v, Slot::WeightScale) == 2; }},
    {"S1d", "relative weights", [](const CV& v) { return m(v, Slot::WeightScale) == 3; }},
    {"S2a", "qualitative performances",
     [](const CV& v) { return m(v, Slot::PerformanceScale) == 1; }},
    {"S2b", "quantitative performances",
     [](const CV& v) { return m(v, Slot::PerformanceScale) == 2; }},
    {"S2c", "relative performances",
     [](const CV& v) { return m(v, Slot::PerformanceScale) == 3; }},
    {"S3a", "no uncertainty", [](const CV& v) { return m(v, Slot::Uncertainty) == 0; }},
    {"S3b", "fuzzy criteria weights",
     [](const CV& v) { return one_or_three(m(v, Slot::FuzzyData)); }},
    {"S3c", "fuzzy performances",
     [](const CV& v) { return two_or_three(m(v, Slot::FuzzyData)); }},
    {"S3d", "indifference threshold",
     [](const CV& v) { return one_or_three(m(v, Slot::Thresholds)); }},
    {"S3e", "preference threshold",
     [](const CV& v) { return two_or_three(m(v, Slot::Thresholds)); }},
    {"S4a", "selection",
     [](const CV& v) { return m(v, Slot::Problematic) == 1 || m(v, Slot::Problematic) == 4; }},
    {"S4b", "sorting",
     [](const CV& v) { return m(v, Slot::Problematic) == 2 || m(v, Slot::Problematic) == 4; }},
    {"S4c", "partial ranking",
     [](const CV& v) { return m(v, Slot::Problematic) == 3 && m(v, Slot::RankingOrder) == 1; }},
    {"S4d", "complete ranking",
     [](const CV& v) { return m(v, Slot::Problematic) == 3 && m(v, Slot::RankingOrder) == 2; }},
}};

struct LabelledPattern {
  CV pattern;
  std::string_view label;
};

// Rule labels of the published rule table, keyed by full pattern.
constexpr std::array<LabelledPattern, 31> kTableLabels{{
    {{0, 0, 1, 0, 0, 0, 0, 1, 0}, "R1"},  {{0, 0, 1, 1, 1, 2, 0, 4, 0}, "R2"},
    {{0, 0, 1, 1, 2, 0, 3, 3, 1}, "R3"},  {{0, 0, 2, 0, 0, 0, 0, 1, 0}, "R4"},
    {{0, 0, 2, 1, 1, 2, 0, 3, 1}, "R5"},  {{0, 0, 2, 1, 1, 2, 0, 3, 2}, "R6"},
    {{1, 1, 1, 0, 0, 0, 0, 1, 0}, "R7"},  {{1, 1, 1, 0, 0, 0, 0, 3, 1}, "R8"},
    {{1, 1, 2, 1, 2, 0, 1, 3, 1}, "R9"},  {{1, 1, 2, 1, 2, 0, 3, 3, 1}, "R10"},
    {{1, 2, 1, 0, 0, 0, 0, 1, 0}, "R11"}, {{1, 2, 1, 0, 0, 0, 0, 3, 1}, "R12"},
    {{1, 2, 2, 0, 0, 0, 0, 3, 1}, "R13"}, {{1, 2, 2, 0, 0, 0, 0, 3, 2}, "R14"},
    {{1, 2, 2, 1, 1, 2, 0, 1, 0}, "R15"}, {{1, 2, 2, 1, 1, 3, 0, 3, 2}, "R16"},
    {{1, 2, 2, 1, 2, 0, 1, 1, 0}, "R17"}, {{1, 2, 2, 1, 2, 0, 3, 1, 0}, "R18"},
    {{1, 2, 2, 1, 2, 0, 3, 2, 0}, "R19"}, {{1, 2, 2, 1, 2, 0, 3, 3, 1}, "R20"},
    {{1, 2, 2, 1, 2, 0, 3, 3, 2}, "R21"}, {{1, 2, 2, 1, 3, 2, 3, 3, 1}, "R22"},
    {{1, 2, 2, 1, 3, 2, 3, 3, 2}, "R23"}, {{1, 2, 2, 1, 3, 3, 3, 3, 1}, "R24"},
    {{1, 2, 2, 1, 3, 3, 3, 3, 2}, "R25"}, {{1, 3, 2, 0, 0, 0, 0, 3, 2}, "R26"},
    {{1, 3, 2, 1, 1, 1, 0, 3, 2}, "R27"}, {{1, 3, 2, 1, 1, 2, 0, 3, 2}, "R28"},
    {{1, 3, 2, 1, 1, 3, 0, 3, 2}, "R29"}, {{1, 3, 3, 0, 0, 0, 0, 3, 2}, "R30"},
    {{1, 3, 3, 1, 1, 3, 0, 3, 2}, "R31"},
}};

std::string join(const std::vector<std::string>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string render_union(const std::vector<std::string>& names) {
  return names.size() == 1 ? names.front() : "(" + join(names, " ∪ ") + ")";
}

bool in_subset(std::string_view name, const CV& v) {
  const auto* subset = find_named_subset(name);
  if (!subset) throw Error("undefined subset " + std::string(name));
  return subset->contains(v);
}

CV level_projection(const CV& v, Level level) {
  CV out{};
  for (Slot s : level_slots(level)) out[index_of(s)] = v[index_of(s)];
  return out;
}

std::string generated_label(Level level, std::size_t ordinal) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "L%d-%02zu", to_int(level), ordinal);
  return buf;
}

}  // namespace

bool MethodSet::contains(int id) const noexcept {
  return std::find(ids_.begin(), ids_.end(), id) != ids_.end();
}

bool MethodSet::is_subset_of(const MethodSet& other) const noexcept {
  return std::all_of(ids_.begin(), ids_.end(), [&](int id) { return other.contains(id); });
}

MethodMask::MethodMask(std::size_t bits, bool all) : bits_(bits), words_((bits + 63) / 64, 0) {
  if (all) {
    for (std::size_t i = 0; i < bits; ++i) set(i);
  }
}

std::size_t MethodMask::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

MethodMask& MethodMask::operator&=(const MethodMask& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

MethodMask& MethodMask::operator|=(const MethodMask& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

MethodMask& MethodMask::subtract(const MethodMask& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::span<const NamedSubset> named_subsets() noexcept { return kSubsets; }

const NamedSubset* find_named_subset(std::string_view name) noexcept {
  for (const auto& s : kSubsets) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

std::string SetExpression::render() const {
  std::vector<std::string> parts;
  for (const auto& term : terms) parts.push_back(render_union(term));
  std::string positive;
  if (parts.empty()) {
    positive = "U";
  } else if (parts.size() == 1 || exclusions.empty()) {
    positive = join(parts, " ∩ ");
  } else {
    positive = "(" + join(parts, " ∩ ") + ")";
  }
  if (exclusions.empty()) return positive;
  return positive + " \\ " + render_union(exclusions);
}

MethodSet SetExpression::evaluate(const KnowledgeBase& kb) const {
  std::vector<int> ids;
  for (const auto& rec : kb.methods()) {
    const auto& v = rec.characteristics;
    const bool in_terms = std::all_of(terms.begin(), terms.end(), [&](const auto& term) {
      return std::any_of(term.begin(), term.end(),
                         [&](const std::string& name) { return in_subset(name, v); });
    });
    const bool excluded = std::any_of(exclusions.begin(), exclusions.end(),
                                      [&](const std::string& name) { return in_subset(name, v); });
    if (in_terms && !excluded) ids.push_back(rec.id);
  }
  return MethodSet(std::move(ids));
}

std::optional<std::string> table_rule_label(const CharacteristicVector& pattern) {
  for (const auto& entry : kTableLabels) {
    if (entry.pattern == pattern) return std::string(entry.label);
  }
  return std::nullopt;
}

void require_valid(const DescriptorVector& v, Level level) {
  if (const auto step = first_violation(v, level)) {
    throw InvalidRequest(static_cast<int>(*step),
                         "invalid descriptor combination at level " +
                             std::to_string(to_int(level)) + ": " + v.to_string(level) +
                             " fails " + describe(*step));
  }
}

SetExpression explain_query(const DescriptorVector& v) {
  require_valid(v, Level::Three);
  SetExpression expr;
  std::vector<std::vector<std::string>> unknown_terms;
  const auto known = [&](Slot s) { return v[s]; };
  const auto add = [&](std::string name) { expr.terms.push_back({std::move(name)}); };
  const auto exclude = [&](std::string name) { expr.exclusions.push_back(std::move(name)); };

  // Weights branch.
  if (const auto c1 = known(Slot::Weights)) {
    if (*c1 == 0) {
      add("S1a");
    } else if (const auto c11 = known(Slot::WeightScale)) {
      add(std::string("S1") + static_cast<char>('a' + *c11));
    } else {
      unknown_terms.push_back({"S1b", "S1c", "S1d"});
    }
  } else {
    unknown_terms.push_back({"S1a", "S1b", "S1c", "S1d"});
  }

  if (const auto c2 = known(Slot::PerformanceScale)) {
    add(std::string("S2") + static_cast<char>('a' + *c2 - 1));
  } else {
    unknown_terms.push_back({"S2a", "S2b", "S2c"});
  }

  // Uncertainty branch: a pair of subsets per level-3 slot, value 3 meaning
  // both, value 0 meaning neither.
  const auto pair = [&](Slot s, const char* first, const char* second) {
    const auto value = known(s);
    if (!value) {
      unknown_terms.push_back({first, second});
      return;
    }
    switch (*value) {
      case 0:
        exclude(first);
        exclude(second);
        break;
      case 1:
        add(first);
        exclude(second);
        break;
      case 2:
        add(second);
        exclude(first);
        break;
      default:
        add(first);
        add(second);
        break;
    }
  };
  if (const auto c3 = known(Slot::Uncertainty)) {
    if (*c3 == 0) {
      add("S3a");
    } else if (known(Slot::UncertaintyKind)) {
      pair(Slot::FuzzyData, "S3b", "S3c");
      pair(Slot::Thresholds, "S3d", "S3e");
    } else {
      unknown_terms.push_back({"S3b", "S3c", "S3d", "S3e"});
    }
  } else {
    unknown_terms.push_back({"S3a", "S3b", "S3c", "S3d", "S3e"});
  }

  if (const auto c4 = known(Slot::Problematic)) {
    switch (*c4) {
      case 1:
        add("S4a");
        exclude("S4b");
        break;
      case 2:
        add("S4b");
        exclude("S4a");
        break;
      case 4:
        add("S4a");
        add("S4b");
        break;
      default:
        if (const auto c41 = known(Slot::RankingOrder)) {
          add(*c41 == 1 ? "S4c" : "S4d");
        } else {
          unknown_terms.push_back({"S4c", "S4d"});
        }
        break;
    }
  } else {
    unknown_terms.push_back({"S4a", "S4b", "S4c", "S4d"});
  }

  if (count_unknowns(v, Level::Three) == static_cast<int>(kSlotCount)) return {};  // U
  for (auto& term : unknown_terms) expr.terms.push_back(std::move(term));
  return expr;
}

std::vector<Rule> derive_rule_base(const KnowledgeBase& kb, Level level) {
  std::map<CV, std::vector<int>> groups;
  for (const auto& rec : kb.methods()) {
    groups[level_projection(rec.characteristics, level)].push_back(rec.id);
  }
  std::vector<Rule> rules;
  rules.reserve(groups.size());
  std::size_t ordinal = 0;
  for (auto& [projected, ids] : groups) {
    ++ordinal;
    Rule rule;
    rule.level = level;
    for (Slot s : level_slots(level)) rule.pattern.set(s, projected[index_of(s)]);
    rule.methods = MethodSet(std::move(ids));
    if (level == Level::Three) {
      rule.id = table_rule_label(projected).value_or(generated_label(level, ordinal));
    } else {
      rule.id = generated_label(level, ordinal);
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

RuleEngine::RuleEngine(const KnowledgeBase& kb) : kb_(&kb) {
  const auto n = kb.size();
  for (Slot s : kAllSlots) {
    const auto domain = slot_domain(s);
    const auto top = *std::max_element(domain.begin(), domain.end());
    index_[index_of(s)].assign(top + 1u, MethodMask(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = kb.at(i);
    for (Slot s : kAllSlots) index_[index_of(s)][rec.value(s)].set(i);
  }
  for (Level level : kAllLevels) rules_[to_int(level) - 1] = derive_rule_base(kb, level);
  const auto& level_three = rules_[2];
  for (std::size_t i = 0; i < level_three.size(); ++i) {
    level_three_by_pattern_.emplace(level_three[i].pattern.known_values(), i);
  }
}

MethodMask RuleEngine::match(const DescriptorVector& v, Level level) const {
  MethodMask mask(kb_->size(), true);
  for (Slot s : level_slots(level)) {
    if (const auto value = v[s]) mask &= index_[index_of(s)][*value];
  }
  return mask;
}

MethodSet RuleEngine::to_method_set(const MethodMask& mask) const {
  std::vector<int> ids;
  for (std::size_t i = 0; i < kb_->size(); ++i) {
    if (mask.test(i)) ids.push_back(kb_->at(i).id);
  }
  return MethodSet(std::move(ids));
}

MethodSet RuleEngine::select_methods(const DescriptorVector& v, Level level) const {
  require_valid(v, level);
  return to_method_set(match(v, level));
}

const Rule* RuleEngine::activated_rule(const DescriptorVector& v) const {
  require_valid(v, Level::Three);
  if (!v.fully_specified()) return nullptr;
  const auto it = level_three_by_pattern_.find(v.known_values());
  return it == level_three_by_pattern_.end() ? nullptr : &rules_[2][it->second];
}

const std::vector<Rule>& RuleEngine::rule_base(Level level) const noexcept {
  return rules_[to_int(level) - 1];
}

Selection run_selection(const RuleEngine& engine, const DescriptorVector& v, bool explain) {
  Selection out;
  out.query = v;
  out.methods = engine.select_methods(v);
  out.rule = engine.activated_rule(v);
  if (explain) out.explanation = explain_query(v);
  return out;
}

}  // namespace mcda
