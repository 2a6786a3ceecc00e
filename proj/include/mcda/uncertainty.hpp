#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <ranges>
#include <string_view>
#include <vector>

#include "mcda/descriptor.hpp"
#include "mcda/rule_engine.hpp"

namespace mcda {

/// Product over the level's slots of (domain size + 1 for Unknown).
std::size_t combination_count(Level level) noexcept;

/// The index-th vector of the level's space. Slots vary lexicographically
/// in canonical order, each running through its domain and then Unknown, so
/// index 0 is the smallest Known value in every slot. Slots outside the
/// level are Unknown.
DescriptorVector combination_at(Level level, std::size_t index);

inline auto enumerate_combinations(Level level) {
  return std::views::iota(std::size_t{0}, combination_count(level)) |
         std::views::transform([level](std::size_t i) { return combination_at(level, i); });
}

template <std::ranges::input_range R>
auto filter_valid(R&& vectors, Level level) {
  return std::forward<R>(vectors) |
         std::views::filter([level](const DescriptorVector& v) { return is_valid(v, level); });
}

struct StatsRow {
  int unknowns = 0;
  std::size_t rule_count = 0;
  std::size_t min_methods = 0;
  double mean_methods = 0.0;
  std::size_t max_methods = 0;
  bool include_empty = false;

  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

/// One row per unknown count that has at least one counted vector, sorted
/// by unknowns. With include_empty false, vectors matching no method are
/// dropped before counting.
std::vector<StatsRow> compute_stats(const RuleEngine& engine, Level level, bool include_empty);

enum class ExportFormat { Csv, Json };

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept;

/// CSV: header "unknowns,rule_count,min,mean,max", means with 4 decimals.
/// JSON: array of row objects with the same fields (mean also 4 decimals).
void export_stats(const std::vector<StatsRow>& rows, std::ostream& out, ExportFormat format);
/// Throws IoError when the destination cannot be written.
void export_stats(const std::vector<StatsRow>& rows, const std::filesystem::path& destination,
                  ExportFormat format);

/// Mean rounded half-up to 4 decimals, as printed in exports.
double round4(double value) noexcept;

struct LevelSummary {
  Level level = Level::Three;
  std::size_t total = 0;
  std::size_t valid = 0;
  std::size_t nonempty = 0;
  std::size_t fully_specified_valid = 0;
  std::size_t fully_specified_nonempty = 0;
  std::size_t single_unknown_valid = 0;
};

LevelSummary summarize_level(const RuleEngine& engine, Level level);

/// Pearson correlation of exclude-empty mean series of two levels over the
/// unknown counts both share. Descriptive only; nullopt with fewer than two
/// shared points or zero variance.
std::optional<double> mean_series_correlation(const std::vector<StatsRow>& a,
                                              const std::vector<StatsRow>& b);

}  // namespace mcda
