#include "mcda/json_io.hpp"

#include <algorithm>

#include "mcda/errors.hpp"

namespace mcda::json {

namespace {

json ids_to_methods(const MethodSet& set, const KnowledgeBase& kb) {
  json out = json::array();
  for (int id : set) out.push_back(method_summary(kb.get_method(id)));
  return out;
}

bool read_bool(const json& object, const char* key, bool fallback) {
  if (!object.contains(key)) return fallback;
  const auto& v = object.at(key);
  if (!v.is_boolean()) throw ParseError(std::string(key) + " must be a boolean");
  return v.get<bool>();
}

std::string read_string(const json& object, const char* key) {
  const auto& v = object.at(key);
  if (!v.is_string()) throw ParseError(std::string(key) + " must be a string");
  return v.get<std::string>();
}

}  // namespace

json method_summary(const MethodRecord& rec) {
  return {{"id", rec.id},
          {"name", rec.name},
          {"abbreviation", rec.abbreviation},
          {"description", rec.description}};
}

json method_detail(const MethodRecord& rec) {
  json out = method_summary(rec);
  json characteristics = json::object();
  for (Slot s : kAllSlots) characteristics[characteristic_name(s)] = rec.value(s);
  out["characteristics"] = characteristics;
  out["citation_key"] = rec.citation_key;
  if (rec.relations) {
    json flags = json::object();
    for (std::size_t i = 0; i < RelationalMetadata::kFlagCount; ++i) {
      flags[std::string(RelationalMetadata::kFlagNames[i])] = rec.relations->has(i);
    }
    out["relations"] = flags;
  } else {
    out["relations"] = nullptr;
  }
  return out;
}

json export_kb(const KnowledgeBase& kb) {
  json methods = json::array();
  for (const auto& rec : kb.methods()) methods.push_back(method_detail(rec));
  return {{"schema_version", kb.schema_version()},
          {"content_digest", kb.content_digest()},
          {"methods", methods}};
}

json descriptors(const DescriptorVector& v, Level level) {
  json out = json::object();
  for (Slot s : level_slots(level)) {
    const auto value = v[s];
    out[descriptor_name(s)] = value ? json(*value) : json(nullptr);
  }
  return out;
}

DescriptorVector parse_descriptors(const json& object) {
  if (!object.is_object()) throw ParseError("descriptors must be a JSON object");
  DescriptorVector out;
  for (const auto& [key, value] : object.items()) {
    const auto slot = slot_from_name(key);
    if (!slot || key.front() != 'c') throw ParseError("unknown descriptor '" + key + "'");
    if (value.is_null() || (value.is_string() && value.get<std::string>() == "?")) continue;
    if (!value.is_number_integer()) {
      throw ParseError("descriptor '" + key + "' must be an integer, null or \"?\"");
    }
    const auto n = value.get<long long>();
    if (n < 0 || n > 255 || !in_domain(*slot, static_cast<int>(n))) {
      throw ParseError("value " + std::to_string(n) + " is outside the domain of " + key);
    }
    out.set(*slot, static_cast<std::uint8_t>(n));
  }
  return out;
}

json rule(const Rule& r, const KnowledgeBase& kb) {
  return {{"id", r.id},
          {"level", to_int(r.level)},
          {"pattern", descriptors(r.pattern, r.level)},
          {"method_count", r.methods.size()},
          {"methods", ids_to_methods(r.methods, kb)}};
}

json rules(const std::vector<Rule>& rs, const KnowledgeBase& kb) {
  json out = json::array();
  for (const auto& r : rs) out.push_back(rule(r, kb));
  return out;
}

json stats_rows(const std::vector<StatsRow>& rows) {
  json out = json::array();
  for (const auto& r : rows) {
    out.push_back({{"unknowns", r.unknowns},
                   {"rule_count", r.rule_count},
                   {"min", r.min_methods},
                   {"mean", round4(r.mean_methods)},
                   {"max", r.max_methods},
                   {"include_empty", r.include_empty}});
  }
  return out;
}

json problem(const ProblemDescription& p) {
  return {{"weights_spec", to_string(p.weights_spec)},
          {"performance_scale", to_string(p.performance_scale)},
          {"fuzzy_weights", p.fuzzy_weights},
          {"fuzzy_performance", p.fuzzy_performance},
          {"uses_indifference_threshold", p.uses_indifference_threshold},
          {"uses_preference_threshold", p.uses_preference_threshold},
          {"problematic", to_string(p.problematic)},
          {"expected_order", to_string(p.expected_order)}};
}

ProblemDescription parse_problem(const json& object) {
  if (!object.is_object()) throw ParseError("problem must be a JSON object");
  static const std::array<std::string_view, 8> kKnown{
      "weights_spec",     "performance_scale",           "fuzzy_weights",
      "fuzzy_performance", "uses_indifference_threshold", "uses_preference_threshold",
      "problematic",      "expected_order"};
  for (const auto& [key, value] : object.items()) {
    if (std::find(kKnown.begin(), kKnown.end(), key) == kKnown.end()) {
      throw ParseError("unknown problem field '" + key + "'");
    }
  }
  ProblemDescription p;
  if (object.contains("weights_spec")) {
    p.weights_spec = parse_weights_spec(read_string(object, "weights_spec"));
  }
  if (object.contains("performance_scale")) {
    p.performance_scale = parse_performance_scale(read_string(object, "performance_scale"));
  }
  p.fuzzy_weights = read_bool(object, "fuzzy_weights", false);
  p.fuzzy_performance = read_bool(object, "fuzzy_performance", false);
  p.uses_indifference_threshold = read_bool(object, "uses_indifference_threshold", false);
  p.uses_preference_threshold = read_bool(object, "uses_preference_threshold", false);
  if (object.contains("problematic")) {
    p.problematic = parse_problematic(read_string(object, "problematic"));
  }
  if (object.contains("expected_order")) {
    p.expected_order = parse_expected_order(read_string(object, "expected_order"));
  }
  return p;
}

json selection(const Selection& s, const KnowledgeBase& kb) {
  json out = {{"descriptors", descriptors(s.query)},
              {"methods", ids_to_methods(s.methods, kb)},
              {"method_count", s.methods.size()},
              {"activated_rule", s.rule ? json(s.rule->id) : json(nullptr)}};
  if (s.explanation) out["explanation"] = s.explanation->render();
  return out;
}

json report(const ValidationReport& r) {
  json cases = json::array();
  for (const auto& c : r.results) {
    json entry = {{"case", c.case_no},
                  {"activated_rule", c.activated_rule ? json(*c.activated_rule) : json(nullptr)},
                  {"recommended", c.recommended},
                  {"status", to_string(c.status)},
                  {"conforms", c.conforms}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    cases.push_back(entry);
  }
  return {{"match", r.match},
          {"empty_set", r.empty_set},
          {"mismatch", r.mismatch},
          {"deviations", r.deviations},
          {"cases", cases}};
}

}  // namespace mcda::json
