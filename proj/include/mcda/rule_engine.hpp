#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcda/descriptor.hpp"
#include "mcda/knowledge_base.hpp"

namespace mcda {

/// Method ids in KB order, without duplicates.
class MethodSet {
 public:
  MethodSet() = default;
  explicit MethodSet(std::vector<int> ids) : ids_(std::move(ids)) {}

  std::span<const int> ids() const noexcept { return ids_; }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  bool contains(int id) const noexcept;
  bool is_subset_of(const MethodSet& other) const noexcept;

  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }

  friend bool operator==(const MethodSet&, const MethodSet&) = default;

 private:
  std::vector<int> ids_;
};

/// Bit i set = method at KB position i.
class MethodMask {
 public:
  MethodMask() = default;
  explicit MethodMask(std::size_t bits, bool all = false);

  void set(std::size_t i) noexcept { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const noexcept { return (words_[i / 64] >> (i % 64)) & 1U; }
  std::size_t count() const noexcept;
  std::size_t bits() const noexcept { return bits_; }

  MethodMask& operator&=(const MethodMask& other) noexcept;
  MethodMask& operator|=(const MethodMask& other) noexcept;
  /// Clears every bit set in `other`.
  MethodMask& subtract(const MethodMask& other) noexcept;

  friend bool operator==(const MethodMask&, const MethodMask&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Rule {
  std::string id;
  Level level = Level::Three;
  /// Level slots Known, all other slots Unknown.
  DescriptorVector pattern;
  MethodSet methods;
};

/// The decision-tree subsets S1a ... S4d and their membership tests on a
/// method's characteristic vector.
struct NamedSubset {
  std::string_view name;
  std::string_view meaning;
  bool (*contains)(const CharacteristicVector&);
};
std::span<const NamedSubset> named_subsets() noexcept;
const NamedSubset* find_named_subset(std::string_view name) noexcept;

/// Intersection of union terms, minus an optional union of excluded subsets.
struct SetExpression {
  std::vector<std::vector<std::string>> terms;  // each term is a union
  std::vector<std::string> exclusions;

  /// e.g. "(S1c ∩ S3b ∩ (S2a ∪ S2b ∪ S2c)) \ S3d"; the universe renders "U".
  std::string render() const;
  MethodSet evaluate(const KnowledgeBase& kb) const;
};

/// Table label ("R1" ... "R31") for a level-3 rule pattern, if it has one.
std::optional<std::string> table_rule_label(const CharacteristicVector& pattern);

/// Decision-tree expression for a query. Evaluating it over the KB gives
/// exactly the methods select_methods returns. Throws InvalidRequest when
/// `v` is invalid at level 3.
SetExpression explain_query(const DescriptorVector& v);

/// Groups the KB by characteristic vector projected onto the level's slots.
/// Rules are ordered by pattern; level-3 rules carry table labels, the
/// others generated "L1-01" style labels.
std::vector<Rule> derive_rule_base(const KnowledgeBase& kb, Level level);

/// Throws InvalidRequest naming the first failing validity step.
void require_valid(const DescriptorVector& v, Level level);

/// Exact matching of descriptor vectors against a KB. Holds a reference to
/// the KB, which must outlive the engine. Const member functions are safe
/// to call concurrently.
class RuleEngine {
 public:
  explicit RuleEngine(const KnowledgeBase& kb);

  const KnowledgeBase& kb() const noexcept { return *kb_; }

  /// Methods equal to `v` on every Known slot of the level, in KB order.
  /// Throws InvalidRequest when `v` is invalid at the level.
  MethodSet select_methods(const DescriptorVector& v, Level level = Level::Three) const;

  /// Matching without the validity check; slots outside the level ignored.
  MethodMask match(const DescriptorVector& v, Level level = Level::Three) const;
  MethodSet to_method_set(const MethodMask& mask) const;

  /// Level-3 rule whose pattern equals `v`. nullptr when `v` has Unknown
  /// slots or no method matches. Throws InvalidRequest when `v` is invalid.
  const Rule* activated_rule(const DescriptorVector& v) const;

  const std::vector<Rule>& rule_base(Level level) const noexcept;

 private:
  const KnowledgeBase* kb_;
  // index [slot][value] -> methods holding that value
  std::array<std::vector<MethodMask>, kSlotCount> index_;
  std::array<std::vector<Rule>, 3> rules_;
  std::map<CharacteristicVector, std::size_t> level_three_by_pattern_;
};

/// One answered query: what /select and the `select` command report.
struct Selection {
  DescriptorVector query;
  MethodSet methods;
  const Rule* rule = nullptr;
  std::optional<SetExpression> explanation;
};

/// Throws InvalidRequest when `v` is invalid at level 3.
Selection run_selection(const RuleEngine& engine, const DescriptorVector& v, bool explain);

}  // namespace mcda
