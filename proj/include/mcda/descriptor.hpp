#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcda/hierarchy.hpp"
#include "mcda/knowledge_base.hpp"

namespace mcda {

/// Known(value) or Unknown (nullopt).
using SlotValue = std::optional<std::uint8_t>;

/// Problem-side vector c1 ... c4.1. Default-constructed vectors are all
/// Unknown. Validity is a separate check (`is_valid`); the type only keeps
/// each Known value inside its slot domain.
class DescriptorVector {
 public:
  DescriptorVector() = default;

  /// Every slot Known, copied from a characteristic vector.
  static DescriptorVector from_characteristics(const CharacteristicVector& values);

  /// Slots given in canonical order; nullopt entries are Unknown. Throws
  /// ValidationError for out-of-domain values.
  static DescriptorVector of(const std::array<SlotValue, kSlotCount>& values);

  SlotValue operator[](Slot s) const noexcept { return slots_[index_of(s)]; }
  bool is_known(Slot s) const noexcept { return slots_[index_of(s)].has_value(); }

  /// Throws ValidationError if the value is outside the slot domain.
  void set(Slot s, SlotValue value);
  void clear(Slot s) noexcept { slots_[index_of(s)].reset(); }

  /// True when every slot of the level is Known.
  bool fully_specified(Level level = Level::Three) const noexcept;

  /// Values of the level's slots as a characteristic vector; slots outside
  /// the level are 0. Requires fully_specified(level).
  CharacteristicVector known_values() const;

  /// "c1=1 c1.1=2 c2=? ..." over the level's slots.
  std::string to_string(Level level = Level::Three) const;

  friend bool operator==(const DescriptorVector&, const DescriptorVector&) = default;
  friend auto operator<=>(const DescriptorVector&, const DescriptorVector&) = default;

 private:
  std::array<SlotValue, kSlotCount> slots_{};
};

/// Parses whitespace-separated `cX=V` / `cX=?` tokens. Missing slots are
/// Unknown. Throws ParseError naming the offending token.
DescriptorVector parse_descriptor_vector(std::string_view text);
DescriptorVector parse_descriptor_tokens(std::span<const std::string> tokens);

/// The four filtering steps of the validity table.
enum class ValidityStep : std::uint8_t {
  Weights = 1,      // (c1, c1.1)
  Performance = 2,  // c2
  Uncertainty = 3,  // (c3, c3.1, c3.1.1, c3.1.2)
  Problematic = 4,  // (c4, c4.1)
};

inline constexpr std::array<ValidityStep, 4> kValiditySteps{
    ValidityStep::Weights, ValidityStep::Performance, ValidityStep::Uncertainty,
    ValidityStep::Problematic};

/// "step 1 (c1, c1.1)" etc.
std::string describe(ValidityStep step);

/// Slots checked by a step, canonical order.
std::span<const Slot> step_slots(ValidityStep step) noexcept;

/// Rows of the validity table for a step, at full (level 3) width. Unknown
/// entries are nullopt.
std::span<const std::vector<SlotValue>> validity_rows(ValidityStep step);

/// Whether the step's slot group of `v` (restricted to the level's slots)
/// matches a row of the step's table restricted the same way.
bool passes_step(const DescriptorVector& v, ValidityStep step, Level level);

/// First failing step, or nullopt when valid.
std::optional<ValidityStep> first_violation(const DescriptorVector& v, Level level);

bool is_valid(const DescriptorVector& v, Level level);

/// Number of Unknown slots among the level's slots.
int count_unknowns(const DescriptorVector& v, Level level) noexcept;

/// Slots outside the level become Unknown, i.e. impose no constraint.
DescriptorVector project_to_level(const DescriptorVector& v, Level level) noexcept;

/// Slot values restricted to the level's slots, canonical order.
std::vector<SlotValue> level_values(const DescriptorVector& v, Level level);

}  // namespace mcda
