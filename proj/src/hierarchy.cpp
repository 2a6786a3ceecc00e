#include "mcda/hierarchy.hpp"

#include <algorithm>

namespace mcda {

namespace {

constexpr std::array<std::string_view, kSlotCount> kSuffixes{
    "1", "1.1", "2", "3", "3.1", "3.1.1", "3.1.2", "4", "4.1"};

constexpr std::array<std::uint8_t, 2> kBinary{0, 1};
constexpr std::array<std::uint8_t, 4> kZeroToThree{0, 1, 2, 3};
constexpr std::array<std::uint8_t, 3> kScale{1, 2, 3};
constexpr std::array<std::uint8_t, 4> kProblematic{1, 2, 3, 4};
constexpr std::array<std::uint8_t, 3> kOrder{0, 1, 2};

constexpr std::array<Slot, 4> kLevelOne{Slot::Weights, Slot::PerformanceScale,
                                        Slot::Uncertainty, Slot::Problematic};
constexpr std::array<Slot, 7> kLevelTwo{Slot::Weights,     Slot::WeightScale,
                                        Slot::PerformanceScale, Slot::Uncertainty,
                                        Slot::UncertaintyKind,  Slot::Problematic,
                                        Slot::RankingOrder};

}  // namespace

std::string_view slot_suffix(Slot s) noexcept { return kSuffixes[index_of(s)]; }

std::string descriptor_name(Slot s) { return "c" + std::string(slot_suffix(s)); }

std::string characteristic_name(Slot s) { return "m" + std::string(slot_suffix(s)); }

std::optional<Slot> slot_from_name(std::string_view name) noexcept {
  if (name.size() < 2 || (name.front() != 'c' && name.front() != 'm')) return std::nullopt;
  const auto suffix = name.substr(1);
  for (Slot s : kAllSlots) {
    if (slot_suffix(s) == suffix) return s;
  }
  return std::nullopt;
}

std::span<const std::uint8_t> slot_domain(Slot s) noexcept {
  switch (s) {
    case Slot::Weights:
    case Slot::Uncertainty:
      return kBinary;
    case Slot::WeightScale:
    case Slot::UncertaintyKind:
    case Slot::FuzzyData:
    case Slot::Thresholds:
      return kZeroToThree;
    case Slot::PerformanceScale:
      return kScale;
    case Slot::Problematic:
      return kProblematic;
    case Slot::RankingOrder:
      return kOrder;
  }
  return {};
}

bool in_domain(Slot s, int value) noexcept {
  const auto domain = slot_domain(s);
  return std::find(domain.begin(), domain.end(), value) != domain.end();
}

std::span<const Slot> level_slots(Level level) noexcept {
  switch (level) {
    case Level::One:
      return kLevelOne;
    case Level::Two:
      return kLevelTwo;
    case Level::Three:
      return kAllSlots;
  }
  return {};
}

bool slot_in_level(Slot s, Level level) noexcept {
  const auto slots = level_slots(level);
  return std::find(slots.begin(), slots.end(), s) != slots.end();
}

std::optional<Level> level_from_int(int value) noexcept {
  if (value < 1 || value > 3) return std::nullopt;
  return static_cast<Level>(value);
}

}  // namespace mcda
