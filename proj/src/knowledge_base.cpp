#include "mcda/knowledge_base.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "mcda/errors.hpp"
#include "text.hpp"

namespace mcda {

namespace {

constexpr std::size_t kFixedColumns = 14;  // id .. description
constexpr std::string_view kSchemaPrefix = "# schema:";

std::string row_label(std::size_t line_no, std::string_view id_field) {
  std::ostringstream os;
  os << "line " << line_no;
  if (!text::trim(id_field).empty()) os << " (method " << text::trim(id_field) << ")";
  return os.str();
}

std::string value_text(Slot s, int v) {
  return characteristic_name(s) + "=" + std::to_string(v);
}

std::optional<RelationalMetadata> parse_relations(std::string_view field,
                                                   const std::string& where) {
  field = text::trim(field);
  if (field.empty()) return std::nullopt;
  if (field.size() != RelationalMetadata::kFlagCount ||
      field.find_first_not_of("01") != std::string_view::npos) {
    throw ParseError(where + ": relations must be " +
                     std::to_string(RelationalMetadata::kFlagCount) + " 0/1 flags, got '" +
                     std::string(field) + "'");
  }
  RelationalMetadata meta;
  for (std::size_t i = 0; i < field.size(); ++i) meta.flags.set(i, field[i] == '1');
  return meta;
}

}  // namespace

std::string RelationalMetadata::to_string() const {
  std::string out(kFlagCount, '0');
  for (std::size_t i = 0; i < kFlagCount; ++i) {
    if (flags.test(i)) out[i] = '1';
  }
  return out;
}

std::optional<std::string> hierarchy_violation(const CharacteristicVector& v) {
  for (Slot s : kAllSlots) {
    if (!in_domain(s, v[index_of(s)])) {
      return value_text(s, v[index_of(s)]) + " is outside the domain of " +
             characteristic_name(s);
    }
  }
  const auto m = [&](Slot s) { return static_cast<int>(v[index_of(s)]); };

  if (m(Slot::Weights) == 0 && m(Slot::WeightScale) != 0) {
    return std::string("m1=0 requires m1.1=0");
  }
  if (m(Slot::Weights) == 1 && m(Slot::WeightScale) == 0) {
    return std::string("m1=1 requires m1.1 in {1,2,3}");
  }
  if (m(Slot::Uncertainty) == 0) {
    if (m(Slot::UncertaintyKind) != 0 || m(Slot::FuzzyData) != 0 || m(Slot::Thresholds) != 0) {
      return std::string("m3=0 requires m3.1=m3.1.1=m3.1.2=0");
    }
  } else {
    switch (m(Slot::UncertaintyKind)) {
      case 0:
        return std::string("m3=1 requires m3.1 in {1,2,3}");
      case 1:
        if (m(Slot::FuzzyData) == 0 || m(Slot::Thresholds) != 0) {
          return std::string("m3.1=1 requires m3.1.1 in {1,2,3} and m3.1.2=0");
        }
        break;
      case 2:
        if (m(Slot::FuzzyData) != 0 || m(Slot::Thresholds) == 0) {
          return std::string("m3.1=2 requires m3.1.1=0 and m3.1.2 in {1,2,3}");
        }
        break;
      default:
        if (m(Slot::FuzzyData) == 0 || m(Slot::Thresholds) == 0) {
          return std::string("m3.1=3 requires m3.1.1 in {1,2,3} and m3.1.2 in {1,2,3}");
        }
        break;
    }
  }
  if (m(Slot::Problematic) == 3) {
    if (m(Slot::RankingOrder) == 0) return std::string("m4=3 requires m4.1 in {1,2}");
  } else if (m(Slot::RankingOrder) != 0) {
    return std::string("m4 in {1,2,4} requires m4.1=0");
  }
  return std::nullopt;
}

std::string normalize_abbreviation(std::string_view abbreviation) {
  std::string out;
  out.reserve(abbreviation.size());
  for (char c : abbreviation) {
    if (c != ' ' && c != '\t') out.push_back(c);
  }
  return out;
}

KnowledgeBase::KnowledgeBase(std::vector<MethodRecord> methods, std::string schema_version,
                             std::string content_digest)
    : methods_(std::move(methods)),
      schema_version_(std::move(schema_version)),
      content_digest_(std::move(content_digest)) {
  for (std::size_t i = 0; i < methods_.size(); ++i) {
    const auto& rec = methods_[i];
    if (!by_id_.emplace(rec.id, i).second) {
      throw DuplicateError("duplicate method id " + std::to_string(rec.id));
    }
    if (!by_abbreviation_.emplace(normalize_abbreviation(rec.abbreviation), i).second) {
      throw DuplicateError("duplicate abbreviation '" + rec.abbreviation + "' (method " +
                           std::to_string(rec.id) + ")");
    }
  }
}

const MethodRecord* KnowledgeBase::find(int id) const noexcept {
  const auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &methods_[it->second];
}

const MethodRecord* KnowledgeBase::find(std::string_view abbreviation) const noexcept {
  const auto it = by_abbreviation_.find(normalize_abbreviation(abbreviation));
  return it == by_abbreviation_.end() ? nullptr : &methods_[it->second];
}

const MethodRecord& KnowledgeBase::get_method(int id) const {
  if (const auto* rec = find(id)) return *rec;
  throw NotFoundError("no method with id " + std::to_string(id));
}

const MethodRecord& KnowledgeBase::get_method(std::string_view abbreviation) const {
  if (const auto* rec = find(abbreviation)) return *rec;
  throw NotFoundError("no method with abbreviation '" + std::string(abbreviation) + "'");
}

const MethodRecord& KnowledgeBase::lookup(std::string_view key) const {
  if (const auto id = text::parse_int(key)) return get_method(*id);
  return get_method(text::trim(key));
}

std::size_t KnowledgeBase::position(int id) const {
  const auto it = by_id_.find(id);
  if (it == by_id_.end()) throw NotFoundError("no method with id " + std::to_string(id));
  return it->second;
}

std::size_t KnowledgeBase::distinct_vector_count() const {
  std::set<CharacteristicVector> distinct;
  for (const auto& rec : methods_) distinct.insert(rec.characteristics);
  return distinct.size();
}

KnowledgeBase load_kb(std::istream& source, KbLoadOptions options) {
  const std::string bytes{std::istreambuf_iterator<char>(source), std::istreambuf_iterator<char>()};
  if (source.bad()) throw IoError("failed to read knowledge base stream");

  std::vector<MethodRecord> methods;
  std::string schema_version;
  std::set<int> ids;
  std::set<std::string> abbreviations;

  std::istringstream lines(bytes);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto trimmed = text::trim(line);
    if (trimmed.empty()) continue;
    if (trimmed.front() == '#') {
      if (trimmed.starts_with(kSchemaPrefix)) {
        schema_version = std::string(text::trim(trimmed.substr(kSchemaPrefix.size())));
      }
      continue;
    }

    const auto fields = text::split(trimmed, '|');
    const auto where = row_label(line_no, fields.front());
    if (fields.size() != kFixedColumns && fields.size() != kFixedColumns + 1) {
      throw ParseError(where + ": expected " + std::to_string(kFixedColumns) + " or " +
                       std::to_string(kFixedColumns + 1) + " columns, got " +
                       std::to_string(fields.size()));
    }

    MethodRecord rec;
    const auto id = text::parse_int(fields[0]);
    if (!id || *id <= 0) throw ParseError(where + ": id must be a positive integer");
    rec.id = *id;
    rec.name = std::string(text::trim(fields[1]));
    rec.abbreviation = normalize_abbreviation(text::trim(fields[2]));
    if (rec.name.empty()) throw ParseError(where + ": empty method name");
    if (rec.abbreviation.empty()) throw ParseError(where + ": empty abbreviation");

    for (Slot s : kAllSlots) {
      const auto raw = fields[3 + index_of(s)];
      const auto value = text::parse_int(raw);
      if (!value) {
        throw ParseError(where + ": " + characteristic_name(s) + " is not an integer ('" +
                         std::string(text::trim(raw)) + "')");
      }
      if (*value < 0 || *value > 255) {
        throw ValidationError(where + " " + rec.name + ": " + value_text(s, *value) +
                              " is outside the domain of " + characteristic_name(s));
      }
      rec.characteristics[index_of(s)] = static_cast<std::uint8_t>(*value);
    }
    rec.citation_key = std::string(text::trim(fields[12]));
    rec.description = std::string(text::trim(fields[13]));
    if (fields.size() > kFixedColumns) rec.relations = parse_relations(fields[14], where);

    if (const auto violation = hierarchy_violation(rec.characteristics)) {
      throw ValidationError("method " + std::to_string(rec.id) + " (" + rec.name +
                            ") violates " + *violation);
    }
    if (!ids.insert(rec.id).second) {
      throw DuplicateError(where + ": duplicate method id " + std::to_string(rec.id));
    }
    if (!abbreviations.insert(rec.abbreviation).second) {
      throw DuplicateError(where + ": duplicate abbreviation '" + rec.abbreviation + "'");
    }
    methods.push_back(std::move(rec));
  }

  KnowledgeBase kb(std::move(methods), std::move(schema_version), sha256_hex(bytes));
  if (options.require_canonical_counts) {
    if (kb.size() != kCanonicalMethodCount) {
      throw ValidationError("expected " + std::to_string(kCanonicalMethodCount) +
                            " methods, found " + std::to_string(kb.size()));
    }
    if (const auto distinct = kb.distinct_vector_count(); distinct != kCanonicalDistinctVectors) {
      throw ValidationError("expected " + std::to_string(kCanonicalDistinctVectors) +
                            " distinct characteristic vectors, found " +
                            std::to_string(distinct));
    }
  }
  return kb;
}

KnowledgeBase load_kb_file(const std::filesystem::path& path, KbLoadOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open knowledge base file " + path.string());
  return load_kb(in, options);
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0x0f]);
  }
  return out;
}

}  // namespace mcda
