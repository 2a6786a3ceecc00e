#pragma once

#include <array>
#include <optional>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mcda/descriptor.hpp"
#include "mcda/knowledge_base.hpp"
#include "mcda/rule_engine.hpp"

namespace mcda::testing {

inline const KnowledgeBase& canonical_kb() {
  static const KnowledgeBase kb = load_kb_file(std::string(MCDA_DATA_DIR) + "/methods.kb");
  return kb;
}

inline const RuleEngine& canonical_engine() {
  static const RuleEngine engine(canonical_kb());
  return engine;
}

/// -1 stands for Unknown.
inline DescriptorVector vec(const std::array<int, kSlotCount>& values) {
  std::array<SlotValue, kSlotCount> slots{};
  for (std::size_t i = 0; i < kSlotCount; ++i) {
    if (values[i] >= 0) slots[i] = static_cast<std::uint8_t>(values[i]);
  }
  return DescriptorVector::of(slots);
}

inline std::vector<std::string> abbreviations(const KnowledgeBase& kb, const MethodSet& set) {
  std::vector<std::string> out;
  for (int id : set) out.push_back(kb.get_method(id).abbreviation);
  return out;
}

/// The canonical KB text with one line replaced (1-based index among method
/// rows) or appended when `row` is 0.
inline std::string kb_text_with_row(int row, const std::string& replacement) {
  std::ifstream in(std::string(MCDA_DATA_DIR) + "/methods.kb");
  std::ostringstream out;
  std::string line;
  int method_row = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() != '#' && ++method_row == row) {
      out << replacement << '\n';
      continue;
    }
    out << line << '\n';
  }
  if (row == 0) out << replacement << '\n';
  return out.str();
}

}  // namespace mcda::testing
