#include "mcda/descriptor.hpp"

#include <algorithm>
#include <sstream>

#include "mcda/errors.hpp"
#include "text.hpp"

namespace mcda {

namespace {

constexpr SlotValue Q = std::nullopt;  // "?" in the validity table

SlotValue v(std::uint8_t x) { return SlotValue{x}; }

// Validity table, one row set per step. Rows are the printed table rows;
// keep them in the printed order so the data can be audited line by line.
const std::vector<std::vector<SlotValue>>& step_one_rows() {
  static const std::vector<std::vector<SlotValue>> rows{
      {v(0), v(0)}, {v(1), v(1)}, {v(1), v(2)}, {v(1), v(3)}, {v(1), Q}, {Q, Q}};
  return rows;
}

const std::vector<std::vector<SlotValue>>& step_two_rows() {
  static const std::vector<std::vector<SlotValue>> rows{{v(1)}, {v(2)}, {v(3)}, {Q}};
  return rows;
}

const std::vector<std::vector<SlotValue>>& step_three_rows() {
  static const std::vector<std::vector<SlotValue>> rows{
      {v(0), v(0), v(0), v(0)},
      {v(1), v(1), v(1), v(0)},
      {v(1), v(1), v(2), v(0)},
      {v(1), v(1), v(3), v(0)},
      {v(1), v(2), v(0), v(1)},
      {v(1), v(2), v(0), v(2)},
      {v(1), v(2), v(0), v(3)},
      {v(1), v(3), v(1), v(1)},
      {v(1), v(3), v(1), v(2)},
      {v(1), v(3), v(1), v(3)},
      {v(1), v(3), v(2), v(1)},
      {v(1), v(3), v(2), v(2)},
      {v(1), v(3), v(2), v(3)},
      {v(1), v(3), v(3), v(1)},
      {v(1), v(3), v(3), v(2)},
      {v(1), v(3), v(3), v(3)},
      {v(1), v(1), Q, v(0)},
      {v(1), v(2), v(0), Q},
      {v(1), v(3), Q, Q},
      {v(1), v(3), Q, v(1)},
      {v(1), v(3), Q, v(2)},
      {v(1), v(3), Q, v(3)},
      {v(1), v(3), v(1), Q},
      {v(1), v(3), v(2), Q},
      {v(1), v(3), v(3), Q},
      {v(1), Q, Q, Q},
      {Q, Q, Q, Q},
  };
  return rows;
}

const std::vector<std::vector<SlotValue>>& step_four_rows() {
  static const std::vector<std::vector<SlotValue>> rows{
      {v(1), v(0)}, {v(2), v(0)}, {v(4), v(0)}, {v(3), v(1)},
      {v(3), v(2)}, {v(3), Q},    {Q, Q}};
  return rows;
}

constexpr std::array<Slot, 2> kStepOneSlots{Slot::Weights, Slot::WeightScale};
constexpr std::array<Slot, 1> kStepTwoSlots{Slot::PerformanceScale};
constexpr std::array<Slot, 4> kStepThreeSlots{Slot::Uncertainty, Slot::UncertaintyKind,
                                              Slot::FuzzyData, Slot::Thresholds};
constexpr std::array<Slot, 2> kStepFourSlots{Slot::Problematic, Slot::RankingOrder};

std::string value_token(SlotValue value) {
  return value ? std::to_string(*value) : std::string("?");
}

}  // namespace

DescriptorVector DescriptorVector::from_characteristics(const CharacteristicVector& values) {
  DescriptorVector out;
  for (Slot s : kAllSlots) out.set(s, values[index_of(s)]);
  return out;
}

DescriptorVector DescriptorVector::of(const std::array<SlotValue, kSlotCount>& values) {
  DescriptorVector out;
  for (Slot s : kAllSlots) out.set(s, values[index_of(s)]);
  return out;
}

void DescriptorVector::set(Slot s, SlotValue value) {
  if (value && !in_domain(s, *value)) {
    throw ValidationError(descriptor_name(s) + "=" + std::to_string(*value) +
                          " is outside the domain of " + descriptor_name(s));
  }
  slots_[index_of(s)] = value;
}

bool DescriptorVector::fully_specified(Level level) const noexcept {
  const auto slots = level_slots(level);
  return std::all_of(slots.begin(), slots.end(), [&](Slot s) { return is_known(s); });
}

CharacteristicVector DescriptorVector::known_values() const {
  CharacteristicVector out{};
  for (Slot s : kAllSlots) out[index_of(s)] = slots_[index_of(s)].value_or(0);
  return out;
}

std::string DescriptorVector::to_string(Level level) const {
  std::ostringstream os;
  bool first = true;
  for (Slot s : level_slots(level)) {
    if (!first) os << ' ';
    first = false;
    os << descriptor_name(s) << '=' << value_token((*this)[s]);
  }
  return os.str();
}

DescriptorVector parse_descriptor_tokens(std::span<const std::string> tokens) {
  DescriptorVector out;
  std::array<bool, kSlotCount> seen{};
  for (const auto& raw : tokens) {
    const auto token = text::trim(raw);
    if (token.empty()) continue;
    const auto eq = token.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("descriptor token '" + std::string(token) + "' is not of the form cX=V");
    }
    const auto key = text::trim(token.substr(0, eq));
    const auto value = text::trim(token.substr(eq + 1));
    const auto slot = slot_from_name(key);
    if (!slot || key.front() != 'c') {
      throw ParseError("unknown descriptor '" + std::string(key) + "'");
    }
    if (seen[index_of(*slot)]) {
      throw ParseError("descriptor '" + std::string(key) + "' given more than once");
    }
    seen[index_of(*slot)] = true;
    if (value == "?") continue;
    const auto number = text::parse_int(value);
    if (!number || !in_domain(*slot, *number)) {
      throw ParseError("value '" + std::string(value) + "' is outside the domain of " +
                       std::string(key));
    }
    out.set(*slot, static_cast<std::uint8_t>(*number));
  }
  return out;
}

DescriptorVector parse_descriptor_vector(std::string_view text) {
  std::vector<std::string> tokens;
  std::istringstream is{std::string(text)};
  for (std::string token; is >> token;) tokens.push_back(token);
  return parse_descriptor_tokens(tokens);
}

std::string describe(ValidityStep step) {
  switch (step) {
    case ValidityStep::Weights:
      return "step 1 (c1, c1.1)";
    case ValidityStep::Performance:
      return "step 2 (c2)";
    case ValidityStep::Uncertainty:
      return "step 3 (c3, c3.1, c3.1.1, c3.1.2)";
    case ValidityStep::Problematic:
      return "step 4 (c4, c4.1)";
  }
  return "step ?";
}

std::span<const Slot> step_slots(ValidityStep step) noexcept {
  switch (step) {
    case ValidityStep::Weights:
      return kStepOneSlots;
    case ValidityStep::Performance:
      return kStepTwoSlots;
    case ValidityStep::Uncertainty:
      return kStepThreeSlots;
    case ValidityStep::Problematic:
      return kStepFourSlots;
  }
  return {};
}

std::span<const std::vector<SlotValue>> validity_rows(ValidityStep step) {
  switch (step) {
    case ValidityStep::Weights:
      return step_one_rows();
    case ValidityStep::Performance:
      return step_two_rows();
    case ValidityStep::Uncertainty:
      return step_three_rows();
    case ValidityStep::Problematic:
      return step_four_rows();
  }
  return {};
}

bool passes_step(const DescriptorVector& vec, ValidityStep step, Level level) {
  const auto slots = step_slots(step);
  for (const auto& row : validity_rows(step)) {
    bool match = true;
    for (std::size_t i = 0; i < slots.size() && match; ++i) {
      if (!slot_in_level(slots[i], level)) continue;
      match = vec[slots[i]] == row[i];
    }
    if (match) return true;
  }
  return false;
}

std::optional<ValidityStep> first_violation(const DescriptorVector& vec, Level level) {
  for (ValidityStep step : kValiditySteps) {
    if (!passes_step(vec, step, level)) return step;
  }
  return std::nullopt;
}

bool is_valid(const DescriptorVector& vec, Level level) {
  return !first_violation(vec, level).has_value();
}

int count_unknowns(const DescriptorVector& vec, Level level) noexcept {
  int n = 0;
  for (Slot s : level_slots(level)) n += vec.is_known(s) ? 0 : 1;
  return n;
}

DescriptorVector project_to_level(const DescriptorVector& vec, Level level) noexcept {
  DescriptorVector out = vec;
  for (Slot s : kAllSlots) {
    if (!slot_in_level(s, level)) out.clear(s);
  }
  return out;
}

std::vector<SlotValue> level_values(const DescriptorVector& vec, Level level) {
  std::vector<SlotValue> out;
  for (Slot s : level_slots(level)) out.push_back(vec[s]);
  return out;
}

}  // namespace mcda
