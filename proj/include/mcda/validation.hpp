#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcda/classifier.hpp"
#include "mcda/rule_engine.hpp"

namespace mcda {

enum class CaseStatus { Match, EmptySet, Mismatch };

std::string_view to_string(CaseStatus status) noexcept;
CaseStatus parse_case_status(std::string_view name);

struct ReferenceCase {
  int case_no = 0;
  /// Descriptor digits exactly as recorded in the corpus.
  std::array<int, kSlotCount> printed{};
  std::string used_method;
  std::optional<std::string> expected_rule;
  std::vector<std::string> expected_set;  // abbreviations
  CaseStatus expected_status = CaseStatus::Match;
  std::string citation_key;
  std::string topic;
  std::string note;
};

/// What the engine is asked for a case: a descriptor vector when the printed
/// digits lie in the slot domains, otherwise the problem description they
/// stand for (printed c2 = 0: variants are not compared).
struct CaseInput {
  std::optional<DescriptorVector> descriptors;
  std::optional<ProblemDescription> description;
};

CaseInput case_input(const ReferenceCase& c);

/// Throws ParseError on malformed rows and ValidationError when a row breaks
/// the corpus invariants (EmptySet iff no rule iff empty set; a Match case
/// lists its used method in the expected set).
std::vector<ReferenceCase> load_cases(std::istream& source);
std::vector<ReferenceCase> load_cases_file(const std::filesystem::path& path);

struct CaseResult {
  int case_no = 0;
  std::optional<std::string> activated_rule;
  std::vector<std::string> recommended;  // abbreviations, KB order
  CaseStatus status = CaseStatus::EmptySet;
  /// Status, rule and set all equal the recorded expectation.
  bool conforms = false;
  /// Classifier message for cases that never reach the matcher.
  std::string detail;
};

struct ValidationReport {
  std::vector<CaseResult> results;
  std::size_t match = 0;
  std::size_t empty_set = 0;
  std::size_t mismatch = 0;
  std::size_t deviations = 0;  // results with conforms == false

  bool all_conform() const noexcept { return deviations == 0; }
};

CaseResult run_case(const RuleEngine& engine, const ReferenceCase& c);
ValidationReport run_cases(const RuleEngine& engine, const std::vector<ReferenceCase>& cases);

}  // namespace mcda
