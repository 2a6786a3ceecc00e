#pragma once

#include <json.hpp>

#include "mcda/classifier.hpp"
#include "mcda/knowledge_base.hpp"
#include "mcda/rule_engine.hpp"
#include "mcda/uncertainty.hpp"
#include "mcda/validation.hpp"

namespace mcda::json {

using nlohmann::json;

/// {id, name, abbreviation, description}
json method_summary(const MethodRecord& rec);
/// Summary plus characteristics (m-names), citation and relation flags.
json method_detail(const MethodRecord& rec);
/// {schema_version, content_digest, methods: [detail...]}
json export_kb(const KnowledgeBase& kb);

/// Slot name -> value, null for Unknown, over the level's slots.
json descriptors(const DescriptorVector& v, Level level = Level::Three);
/// Accepts c-names mapped to an integer, null or "?". Throws ParseError on
/// unknown slots and out-of-domain values.
DescriptorVector parse_descriptors(const json& object);

json rule(const Rule& r, const KnowledgeBase& kb);
json rules(const std::vector<Rule>& rs, const KnowledgeBase& kb);

json stats_rows(const std::vector<StatsRow>& rows);

json problem(const ProblemDescription& p);
/// Missing fields take their defaults. Throws ParseError on unknown fields
/// or enumerator names.
ProblemDescription parse_problem(const json& object);

json selection(const Selection& s, const KnowledgeBase& kb);

json report(const ValidationReport& r);

}  // namespace mcda::json
