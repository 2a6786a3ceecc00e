#include "mcda/classifier.hpp"

#include <array>
#include <utility>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

template <typename E, std::size_t N>
E parse_enum(std::string_view name, const std::array<std::pair<E, std::string_view>, N>& table,
             std::string_view what) {
  for (const auto& [value, text] : table) {
    if (text == name) return value;
  }
  throw ParseError("unknown " + std::string(what) + " '" + std::string(name) + "'");
}

template <typename E, std::size_t N>
std::string_view name_of(E value, const std::array<std::pair<E, std::string_view>, N>& table) {
  for (const auto& [v, text] : table) {
    if (v == value) return text;
  }
  return "?";
}

constexpr std::array<std::pair<WeightsSpec, std::string_view>, 4> kWeights{{
    {WeightsSpec::None, "none"},
    {WeightsSpec::Ordinal, "ordinal"},
    {WeightsSpec::Quantitative, "quantitative"},
    {WeightsSpec::PairwiseRatioMatrix, "pairwise_ratio_matrix"},
}};

constexpr std::array<std::pair<PerformanceScale, std::string_view>, 4> kPerformance{{
    {PerformanceScale::NotCompared, "not_compared"},
    {PerformanceScale::Ordinal, "ordinal"},
    {PerformanceScale::Quantitative, "quantitative"},
    {PerformanceScale::PairwiseRatioMatrix, "pairwise_ratio_matrix"},
}};

constexpr std::array<std::pair<Problematic, std::string_view>, 4> kProblematics{{
    {Problematic::Selection, "selection"},
    {Problematic::Sorting, "sorting"},
    {Problematic::Ranking, "ranking"},
    {Problematic::SortingPlusSelection, "sorting_plus_selection"},
}};

constexpr std::array<std::pair<ExpectedOrder, std::string_view>, 3> kOrders{{
    {ExpectedOrder::None, "none"},
    {ExpectedOrder::Partial, "partial"},
    {ExpectedOrder::Complete, "complete"},
}};

std::uint8_t both_code(bool first, bool second) {
  return static_cast<std::uint8_t>((first ? 1 : 0) + (second ? 2 : 0));
}

}  // namespace

std::optional<std::string> description_violation(const ProblemDescription& p) {
  if (p.fuzzy_weights && p.weights_spec == WeightsSpec::None) {
    return std::string("fuzzy weights require a weights specification");
  }
  if (p.fuzzy_performance && p.performance_scale == PerformanceScale::NotCompared) {
    return std::string("fuzzy performances require compared variants");
  }
  const bool ranking = p.problematic == Problematic::Ranking;
  if (ranking && p.expected_order == ExpectedOrder::None) {
    return std::string("a ranking problem needs a partial or complete expected order");
  }
  if (!ranking && p.expected_order != ExpectedOrder::None) {
    return std::string("an expected order only applies to ranking problems");
  }
  return std::nullopt;
}

DescriptorVector classify(const ProblemDescription& p) {
  if (const auto violation = description_violation(p)) throw ValidationError(*violation);
  if (p.performance_scale == PerformanceScale::NotCompared) {
    throw ClassificationError("no variant comparison: no MCDA method applies");
  }

  DescriptorVector out;
  out.set(Slot::Weights, p.weights_spec == WeightsSpec::None ? 0 : 1);
  out.set(Slot::WeightScale, static_cast<std::uint8_t>(p.weights_spec));
  out.set(Slot::PerformanceScale, static_cast<std::uint8_t>(p.performance_scale));

  const bool fuzzy = p.fuzzy_weights || p.fuzzy_performance;
  const bool thresholds = p.uses_indifference_threshold || p.uses_preference_threshold;
  out.set(Slot::Uncertainty, fuzzy || thresholds ? 1 : 0);
  out.set(Slot::UncertaintyKind, both_code(fuzzy, thresholds));
  out.set(Slot::FuzzyData, both_code(p.fuzzy_weights, p.fuzzy_performance));
  out.set(Slot::Thresholds,
          both_code(p.uses_indifference_threshold, p.uses_preference_threshold));

  out.set(Slot::Problematic, static_cast<std::uint8_t>(static_cast<int>(p.problematic) + 1));
  out.set(Slot::RankingOrder, static_cast<std::uint8_t>(p.expected_order));
  return out;
}

ProblemDescription witness_description(const DescriptorVector& v) {
  if (!v.fully_specified() || !is_valid(v, Level::Three)) {
    throw ValidationError("no description classifies to " + v.to_string());
  }
  const auto at = [&](Slot s) { return static_cast<int>(*v[s]); };

  ProblemDescription p;
  p.weights_spec = static_cast<WeightsSpec>(at(Slot::WeightScale));
  p.performance_scale = static_cast<PerformanceScale>(at(Slot::PerformanceScale));
  p.fuzzy_weights = (at(Slot::FuzzyData) & 1) != 0;
  p.fuzzy_performance = (at(Slot::FuzzyData) & 2) != 0;
  p.uses_indifference_threshold = (at(Slot::Thresholds) & 1) != 0;
  p.uses_preference_threshold = (at(Slot::Thresholds) & 2) != 0;
  p.problematic = static_cast<Problematic>(at(Slot::Problematic) - 1);
  p.expected_order = static_cast<ExpectedOrder>(at(Slot::RankingOrder));
  if (const auto violation = description_violation(p)) {
    throw ValidationError("no description classifies to " + v.to_string() + ": " + *violation);
  }
  return p;
}

std::string_view to_string(WeightsSpec value) noexcept { return name_of(value, kWeights); }
std::string_view to_string(PerformanceScale value) noexcept {
  return name_of(value, kPerformance);
}
std::string_view to_string(Problematic value) noexcept { return name_of(value, kProblematics); }
std::string_view to_string(ExpectedOrder value) noexcept { return name_of(value, kOrders); }

WeightsSpec parse_weights_spec(std::string_view name) {
  return parse_enum(name, kWeights, "weights_spec");
}
PerformanceScale parse_performance_scale(std::string_view name) {
  return parse_enum(name, kPerformance, "performance_scale");
}
Problematic parse_problematic(std::string_view name) {
  return parse_enum(name, kProblematics, "problematic");
}
ExpectedOrder parse_expected_order(std::string_view name) {
  return parse_enum(name, kOrders, "expected_order");
}

}  // namespace mcda
