#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "mcda/descriptor.hpp"

namespace mcda {

// How criterion importance is expressed. Semantically: None when no weights
// w_i exist or all are equal; Ordinal for an order of importance only;
// Quantitative for numeric weights; PairwiseRatioMatrix for a reciprocal
// matrix of ratios w_ij between criteria.
enum class WeightsSpec { None, Ordinal, Quantitative, PairwiseRatioMatrix };

// How variants are evaluated on the criteria: NotCompared when there are no
// performances g_i(a) at all, then ordinal scores, numeric scores, or a
// pairwise ratio matrix e_jk between variants.
enum class PerformanceScale { NotCompared, Ordinal, Quantitative, PairwiseRatioMatrix };

enum class Problematic { Selection, Sorting, Ranking, SortingPlusSelection };

// Partial admits incomparable variants; Complete is a total order.
enum class ExpectedOrder { None, Partial, Complete };

/// Structural description of a decision problem.
struct ProblemDescription {
  WeightsSpec weights_spec = WeightsSpec::None;
  PerformanceScale performance_scale = PerformanceScale::Quantitative;
  bool fuzzy_weights = false;      // weights given as fuzzy numbers
  bool fuzzy_performance = false;  // performances given as fuzzy numbers
  bool uses_indifference_threshold = false;  // q
  bool uses_preference_threshold = false;    // p
  Problematic problematic = Problematic::Selection;
  ExpectedOrder expected_order = ExpectedOrder::None;

  friend bool operator==(const ProblemDescription&, const ProblemDescription&) = default;
};

/// First broken invariant of the description, if any.
std::optional<std::string> description_violation(const ProblemDescription& p);

/// Maps a description onto a fully specified descriptor vector. Throws
/// ValidationError when the description is inconsistent and
/// ClassificationError when no variants are compared.
DescriptorVector classify(const ProblemDescription& p);

/// A description that classifies to `v`. Throws ValidationError unless `v`
/// is fully specified and valid at level 3.
ProblemDescription witness_description(const DescriptorVector& v);

std::string_view to_string(WeightsSpec value) noexcept;
std::string_view to_string(PerformanceScale value) noexcept;
std::string_view to_string(Problematic value) noexcept;
std::string_view to_string(ExpectedOrder value) noexcept;

/// Inverse of to_string; throw ParseError on unrecognised names.
WeightsSpec parse_weights_spec(std::string_view name);
PerformanceScale parse_performance_scale(std::string_view name);
Problematic parse_problematic(std::string_view name);
ExpectedOrder parse_expected_order(std::string_view name);

}  // namespace mcda
