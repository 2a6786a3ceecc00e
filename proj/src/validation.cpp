#include "mcda/validation.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "mcda/errors.hpp"
#include "text.hpp"

namespace mcda {

namespace {

constexpr std::size_t kColumns = 17;

std::string field_str(std::string_view f) { return std::string(text::trim(f)); }

std::optional<std::string> dash_optional(std::string_view f) {
  const auto t = text::trim(f);
  if (t.empty() || t == "-") return std::nullopt;
  return std::string(t);
}

std::vector<std::string> parse_set(std::string_view f) {
  std::vector<std::string> out;
  const auto t = text::trim(f);
  if (t.empty() || t == "-") return out;
  for (auto part : text::split(t, ',')) out.push_back(normalize_abbreviation(text::trim(part)));
  return out;
}

}  // namespace

std::string_view to_string(CaseStatus status) noexcept {
  switch (status) {
    case CaseStatus::Match:
      return "Match";
    case CaseStatus::EmptySet:
      return "EmptySet";
    case CaseStatus::Mismatch:
      return "Mismatch";
  }
  return "?";
}

CaseStatus parse_case_status(std::string_view name) {
  if (name == "Match") return CaseStatus::Match;
  if (name == "EmptySet") return CaseStatus::EmptySet;
  if (name == "Mismatch") return CaseStatus::Mismatch;
  throw ParseError("unknown case status '" + std::string(name) + "'");
}

CaseInput case_input(const ReferenceCase& c) {
  CaseInput in;
  bool all_in_domain = true;
  for (Slot s : kAllSlots) all_in_domain &= in_domain(s, c.printed[index_of(s)]);
  if (all_in_domain) {
    DescriptorVector v;
    for (Slot s : kAllSlots) v.set(s, static_cast<std::uint8_t>(c.printed[index_of(s)]));
    in.descriptors = v;
    return in;
  }
  const auto at = [&](Slot s) { return c.printed[index_of(s)]; };
  if (at(Slot::PerformanceScale) != 0) {
    throw ValidationError("case " + std::to_string(c.case_no) +
                          ": descriptor digits outside their domains");
  }
  // No variants compared: the remaining digits only describe the weights.
  ProblemDescription p;
  p.performance_scale = PerformanceScale::NotCompared;
  p.weights_spec = at(Slot::Weights) == 1 && in_domain(Slot::WeightScale, at(Slot::WeightScale))
                       ? static_cast<WeightsSpec>(at(Slot::WeightScale))
                       : WeightsSpec::None;
  in.description = p;
  return in;
}

std::vector<ReferenceCase> load_cases(std::istream& source) {
  std::vector<ReferenceCase> cases;
  std::set<int> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto fields = text::split(trimmed, '|');
    const auto where = "line " + std::to_string(line_no);
    if (fields.size() != kColumns) {
      throw ParseError(where + ": expected " + std::to_string(kColumns) + " columns, got " +
                       std::to_string(fields.size()));
    }
    ReferenceCase c;
    const auto no = text::parse_int(fields[0]);
    if (!no || *no <= 0) throw ParseError(where + ": case number must be a positive integer");
    c.case_no = *no;
    for (std::size_t i = 0; i < kSlotCount; ++i) {
      const auto value = text::parse_int(fields[1 + i]);
      if (!value || *value < 0) {
        throw ParseError(where + " (case " + std::to_string(c.case_no) + "): " +
                         descriptor_name(kAllSlots[i]) + " is not a non-negative integer");
      }
      c.printed[i] = *value;
    }
    c.used_method = normalize_abbreviation(text::trim(fields[10]));
    c.expected_rule = dash_optional(fields[11]);
    c.expected_set = parse_set(fields[12]);
    try {
      c.expected_status = parse_case_status(text::trim(fields[13]));
    } catch (const ParseError& e) {
      throw ParseError(where + " (case " + std::to_string(c.case_no) + "): " + e.what());
    }
    c.citation_key = field_str(fields[14]);
    c.topic = field_str(fields[15]);
    c.note = field_str(fields[16]);

    const auto label = "case " + std::to_string(c.case_no);
    const bool empty_status = c.expected_status == CaseStatus::EmptySet;
    if (empty_status != c.expected_set.empty() || empty_status != !c.expected_rule) {
      throw ValidationError(label + ": EmptySet status, empty set and missing rule must agree");
    }
    if (c.expected_status == CaseStatus::Match &&
        std::find(c.expected_set.begin(), c.expected_set.end(), c.used_method) ==
            c.expected_set.end()) {
      throw ValidationError(label + ": Match case does not list its used method " +
                            c.used_method);
    }
    if (!seen.insert(c.case_no).second) throw DuplicateError(label + " appears twice");
    case_input(c);  // rejects digits that stand for nothing
    cases.push_back(std::move(c));
  }
  if (source.bad()) throw IoError("failed to read case corpus");
  return cases;
}

std::vector<ReferenceCase> load_cases_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open case corpus " + path.string());
  return load_cases(in);
}

CaseResult run_case(const RuleEngine& engine, const ReferenceCase& c) {
  CaseResult r;
  r.case_no = c.case_no;
  auto input = case_input(c);
  std::optional<DescriptorVector> descriptors = input.descriptors;
  if (!descriptors) {
    try {
      descriptors = classify(*input.description);
    } catch (const ClassificationError& e) {
      r.detail = e.what();
    }
  }
  if (descriptors) {
    for (int id : engine.select_methods(*descriptors)) {
      r.recommended.push_back(engine.kb().get_method(id).abbreviation);
    }
    if (const auto* rule = engine.activated_rule(*descriptors)) r.activated_rule = rule->id;
  }
  if (r.recommended.empty()) {
    r.status = CaseStatus::EmptySet;
  } else if (std::find(r.recommended.begin(), r.recommended.end(), c.used_method) !=
             r.recommended.end()) {
    r.status = CaseStatus::Match;
  } else {
    r.status = CaseStatus::Mismatch;
  }
  r.conforms = r.status == c.expected_status && r.activated_rule == c.expected_rule &&
               r.recommended == c.expected_set;
  return r;
}

ValidationReport run_cases(const RuleEngine& engine, const std::vector<ReferenceCase>& cases) {
  ValidationReport report;
  for (const auto& c : cases) {
    auto r = run_case(engine, c);
    switch (r.status) {
      case CaseStatus::Match:
        ++report.match;
        break;
      case CaseStatus::EmptySet:
        ++report.empty_set;
        break;
      case CaseStatus::Mismatch:
        ++report.mismatch;
        break;
    }
    report.deviations += r.conforms ? 0 : 1;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace mcda
