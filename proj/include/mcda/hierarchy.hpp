#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mcda {

// The nine characteristic / descriptor positions in canonical order. The
// same slot indexes both the method side (m1 ... m4.1) and the problem side
// (c1 ... c4.1).
enum class Slot : std::uint8_t {
  Weights = 0,          // c1 / m1
  WeightScale,          // c1.1
  PerformanceScale,     // c2
  Uncertainty,          // c3
  UncertaintyKind,      // c3.1
  FuzzyData,            // c3.1.1
  Thresholds,           // c3.1.2
  Problematic,          // c4
  RankingOrder,         // c4.1
};

inline constexpr std::size_t kSlotCount = 9;

inline constexpr std::array<Slot, kSlotCount> kAllSlots{
    Slot::Weights,         Slot::WeightScale, Slot::PerformanceScale,
    Slot::Uncertainty,     Slot::UncertaintyKind, Slot::FuzzyData,
    Slot::Thresholds,      Slot::Problematic, Slot::RankingOrder};

constexpr std::size_t index_of(Slot s) noexcept { return static_cast<std::size_t>(s); }

/// Dotted suffix shared by both sides: "1", "1.1", ..., "4.1".
std::string_view slot_suffix(Slot s) noexcept;

/// "c1.1" style name.
std::string descriptor_name(Slot s);

/// "m1.1" style name.
std::string characteristic_name(Slot s);

/// Accepts either "cX" or "mX" spellings.
std::optional<Slot> slot_from_name(std::string_view name) noexcept;

/// Known values a slot may take (Unknown excluded).
std::span<const std::uint8_t> slot_domain(Slot s) noexcept;

bool in_domain(Slot s, int value) noexcept;

enum class Level : std::uint8_t { One = 1, Two = 2, Three = 3 };

inline constexpr std::array<Level, 3> kAllLevels{Level::One, Level::Two, Level::Three};

/// Level 1: c1 c2 c3 c4; level 2 adds c1.1 c3.1 c4.1; level 3 adds
/// c3.1.1 c3.1.2. Returned in canonical slot order.
std::span<const Slot> level_slots(Level level) noexcept;

bool slot_in_level(Slot s, Level level) noexcept;

std::optional<Level> level_from_int(int value) noexcept;

constexpr int to_int(Level level) noexcept { return static_cast<int>(level); }

}  // namespace mcda
