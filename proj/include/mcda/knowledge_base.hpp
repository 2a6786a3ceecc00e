#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mcda/hierarchy.hpp"

namespace mcda {

/// Fully specified method-side vector (m1, m1.1, m2, m3, m3.1, m3.1.1,
/// m3.1.2, m4, m4.1).
using CharacteristicVector = std::array<std::uint8_t, kSlotCount>;

inline constexpr std::size_t kCanonicalMethodCount = 56;
inline constexpr std::size_t kCanonicalDistinctVectors = 31;

/// Descriptive taxonomy flags (binary relations, compensation, aggregation,
/// kind of preferential information). Display only; selection never reads
/// them.
struct RelationalMetadata {
  static constexpr std::size_t kFlagCount = 16;
  static constexpr std::array<std::string_view, kFlagCount> kFlagNames{
      "I",           "P",         "Q",        "R",           "S",
      "no_compensation", "total_compensation", "partial_compensation",
      "single_criterion", "outranking", "mixed",
      "deterministic", "cardinal", "non_deterministic", "ordinal", "fuzzy"};

  std::bitset<kFlagCount> flags;

  bool has(std::size_t flag) const { return flags.test(flag); }
  /// Flags in column order as a 16 character 0/1 string.
  std::string to_string() const;
};

struct MethodRecord {
  int id = 0;
  std::string name;
  std::string abbreviation;
  CharacteristicVector characteristics{};
  std::string citation_key;
  std::string description;
  std::optional<RelationalMetadata> relations;

  std::uint8_t value(Slot s) const noexcept { return characteristics[index_of(s)]; }
};

/// Name of the first hierarchy-consistency rule the vector breaks, or
/// nullopt when the vector is consistent (and every value is in its domain).
std::optional<std::string> hierarchy_violation(const CharacteristicVector& v);

/// Immutable method catalogue. Safe to share between threads once built.
class KnowledgeBase {
 public:
  KnowledgeBase(std::vector<MethodRecord> methods, std::string schema_version,
                std::string content_digest);

  std::span<const MethodRecord> methods() const noexcept { return methods_; }
  std::size_t size() const noexcept { return methods_.size(); }
  const MethodRecord& at(std::size_t index) const { return methods_.at(index); }

  const std::string& schema_version() const noexcept { return schema_version_; }
  /// SHA-256 (hex) of the bytes the KB was loaded from.
  const std::string& content_digest() const noexcept { return content_digest_; }

  const MethodRecord* find(int id) const noexcept;
  /// Abbreviation lookup ignores whitespace, so "A_H + T_P" finds "A_H+T_P".
  const MethodRecord* find(std::string_view abbreviation) const noexcept;

  const MethodRecord& get_method(int id) const;
  const MethodRecord& get_method(std::string_view abbreviation) const;
  /// Key is either a decimal id or an abbreviation.
  const MethodRecord& lookup(std::string_view key) const;

  /// Position of the method with this id in KB order.
  std::size_t position(int id) const;

  std::size_t distinct_vector_count() const;

 private:
  std::vector<MethodRecord> methods_;
  std::string schema_version_;
  std::string content_digest_;
  std::unordered_map<int, std::size_t> by_id_;
  std::unordered_map<std::string, std::size_t> by_abbreviation_;
};

struct KbLoadOptions {
  /// Enforce the canonical catalogue shape (56 methods, 31 distinct vectors).
  bool require_canonical_counts = true;
};

/// Parses the pipe-delimited KB format. Throws ParseError on malformed rows,
/// ValidationError on invariant violations, DuplicateError on repeated ids
/// or abbreviations.
KnowledgeBase load_kb(std::istream& source, KbLoadOptions options = {});
KnowledgeBase load_kb_file(const std::filesystem::path& path, KbLoadOptions options = {});

std::string normalize_abbreviation(std::string_view abbreviation);

std::string sha256_hex(std::string_view bytes);

}  // namespace mcda
