// Command-line front end: methods, select, rules, analyze, validate, classify, serve.

#include <CLI11.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "mcda/api.hpp"
#include "mcda/classifier.hpp"
#include "mcda/errors.hpp"
#include "mcda/json_io.hpp"
#include "mcda/knowledge_base.hpp"
#include "mcda/rule_engine.hpp"
#include "mcda/uncertainty.hpp"
#include "mcda/validation.hpp"

namespace {

using namespace mcda;

std::string env_or(const char* name, const std::string& fallback) {
  const char* value = std::getenv(name);
  return value && *value ? value : fallback;
}

void print_method_line(const MethodRecord& rec) {
  std::cout << "  " << std::setw(2) << rec.id << "  " << std::left << std::setw(10)
            << rec.abbreviation << std::right << "  " << rec.name << '\n';
}

void print_methods(const KnowledgeBase& kb, const MethodSet& set) {
  for (int id : set) print_method_line(kb.get_method(id));
}

int run_methods(const std::string& kb_path, const std::string& key, bool as_json) {
  const auto kb = load_kb_file(kb_path);
  if (!key.empty()) {
    const auto& rec = kb.lookup(key);
    if (as_json) {
      std::cout << json::method_detail(rec).dump(2) << '\n';
      return 0;
    }
    std::cout << rec.id << "  " << rec.abbreviation << "  " << rec.name << '\n';
    for (Slot s : kAllSlots) {
      std::cout << "  " << std::left << std::setw(7) << characteristic_name(s) << std::right
                << int(rec.value(s)) << '\n';
    }
    if (!rec.citation_key.empty()) std::cout << "  source " << rec.citation_key << '\n';
    if (!rec.description.empty()) std::cout << '\n' << rec.description << '\n';
    return 0;
  }
  if (as_json) {
    std::cout << json::export_kb(kb).dump(2) << '\n';
    return 0;
  }
  for (const auto& rec : kb.methods()) print_method_line(rec);
  std::cout << kb.size() << " methods, digest " << kb.content_digest() << '\n';
  return 0;
}

int run_select(const std::string& kb_path, const std::vector<std::string>& tokens, bool explain,
               bool as_json) {
  const auto kb = load_kb_file(kb_path);
  const RuleEngine engine(kb);
  const auto query = parse_descriptor_tokens(tokens);
  const auto selection = run_selection(engine, query, explain);
  if (as_json) {
    std::cout << json::selection(selection, kb).dump(2) << '\n';
    return 0;
  }
  std::cout << "query: " << query.to_string() << '\n';
  std::cout << "activated rule: " << (selection.rule ? selection.rule->id : "none") << '\n';
  std::cout << "methods (" << selection.methods.size() << "):\n";
  print_methods(kb, selection.methods);
  if (selection.explanation) std::cout << "expression: " << selection.explanation->render() << '\n';
  return 0;
}

int run_rules(const std::string& kb_path, int level_number, bool as_json) {
  const auto level = level_from_int(level_number);
  if (!level) throw ParseError("level must be 1, 2 or 3");
  const auto kb = load_kb_file(kb_path);
  const RuleEngine engine(kb);
  const auto& rules = engine.rule_base(*level);
  if (as_json) {
    std::cout << json::rules(rules, kb).dump(2) << '\n';
    return 0;
  }
  for (const auto& rule : rules) {
    std::cout << std::left << std::setw(6) << rule.id << std::right << ' '
              << rule.pattern.to_string(*level) << "  ->";
    for (int id : rule.methods) std::cout << ' ' << kb.get_method(id).abbreviation;
    std::cout << '\n';
  }
  std::cout << rules.size() << " rules at level " << level_number << '\n';
  return 0;
}

int run_analyze(const std::string& kb_path, int level_number, bool include_empty,
                const std::string& format_name, const std::string& out_path) {
  const auto level = level_from_int(level_number);
  if (!level) throw ParseError("level must be 1, 2 or 3");
  const auto format = parse_export_format(format_name);
  if (!format) throw ParseError("format must be csv or json");
  const auto kb = load_kb_file(kb_path);
  const RuleEngine engine(kb);
  const auto rows = compute_stats(engine, *level, include_empty);
  if (out_path.empty()) {
    export_stats(rows, std::cout, *format);
  } else {
    export_stats(rows, std::filesystem::path(out_path), *format);
  }
  return 0;
}

int run_validate(const std::string& kb_path, const std::string& cases_path, bool as_json) {
  const auto kb = load_kb_file(kb_path);
  const RuleEngine engine(kb);
  const auto cases = load_cases_file(cases_path);
  const auto report = run_cases(engine, cases);
  if (as_json) {
    std::cout << json::report(report).dump(2) << '\n';
  } else {
    for (const auto& r : report.results) {
      std::cout << std::setw(2) << r.case_no << "  " << std::left << std::setw(9)
                << to_string(r.status) << std::setw(5) << r.activated_rule.value_or("-")
                << std::right;
      for (const auto& abbr : r.recommended) std::cout << ' ' << abbr;
      if (r.recommended.empty()) std::cout << " -";
      if (!r.conforms) std::cout << "   <-- differs from the recorded expectation";
      std::cout << '\n';
    }
    std::cout << report.match << " Match, " << report.empty_set << " EmptySet, "
              << report.mismatch << " Mismatch, " << report.deviations << " deviations\n";
  }
  return report.all_conform() ? 0 : 1;
}

struct ClassifyArgs {
  std::string weights = "none";
  std::string performance = "quantitative";
  bool fuzzy_weights = false;
  bool fuzzy_performance = false;
  bool indifference = false;
  bool preference = false;
  std::string problematic = "selection";
  std::string order = "none";
};

int run_classify(const std::string& kb_path, const ClassifyArgs& a, bool as_json) {
  ProblemDescription p;
  p.weights_spec = parse_weights_spec(a.weights);
  p.performance_scale = parse_performance_scale(a.performance);
  p.fuzzy_weights = a.fuzzy_weights;
  p.fuzzy_performance = a.fuzzy_performance;
  p.uses_indifference_threshold = a.indifference;
  p.uses_preference_threshold = a.preference;
  p.problematic = parse_problematic(a.problematic);
  p.expected_order = parse_expected_order(a.order);
  const auto v = classify(p);
  const auto kb = load_kb_file(kb_path);
  const RuleEngine engine(kb);
  const auto selection = run_selection(engine, v, false);
  if (as_json) {
    auto out = json::selection(selection, kb);
    out["problem"] = json::problem(p);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  std::cout << v.to_string() << '\n';
  std::cout << "activated rule: " << (selection.rule ? selection.rule->id : "none") << '\n';
  print_methods(kb, selection.methods);
  return 0;
}

int run_serve(const std::string& kb_path, const std::string& cases_path,
              const std::string& address) {
  const auto kb = load_kb_file(kb_path);
  std::optional<std::vector<ReferenceCase>> cases;
  if (!cases_path.empty()) cases = load_cases_file(cases_path);
  const ApiService service(kb, std::move(cases));
  const auto [host, port] = parse_bind_address(address);
  std::cerr << "serving " << kb.size() << " methods on " << host << ':' << port << '\n';
  serve(service, host, port);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MCDA method selection"};
  app.require_subcommand(1);

  std::string kb_path = env_or("MCDA_KB", MCDA_DEFAULT_KB);
  std::string cases_path = MCDA_DEFAULT_CASES;
  bool as_json = false;

  auto* methods = app.add_subcommand("methods", "list methods, or show one by id or abbreviation");
  std::string key;
  methods->add_option("--kb", kb_path, "knowledge base file");
  methods->add_option("key", key, "method id or abbreviation");
  methods->add_flag("--json", as_json);

  auto* select = app.add_subcommand("select", "methods matching a descriptor vector");
  std::vector<std::string> tokens;
  bool explain = false;
  select->add_option("--kb", kb_path, "knowledge base file");
  select->add_option("descriptors", tokens, "cX=V or cX=? tokens; omitted slots are unknown");
  select->add_flag("--explain", explain, "print the decision-tree set expression");
  select->add_flag("--json", as_json);

  auto* rules = app.add_subcommand("rules", "rule base at a hierarchy level");
  int level = 3;
  rules->add_option("--kb", kb_path, "knowledge base file");
  rules->add_option("--level", level, "1, 2 or 3")->check(CLI::Range(1, 3));
  rules->add_flag("--json", as_json);

  auto* analyze = app.add_subcommand("analyze", "statistics over the descriptor space");
  bool include_empty = false;
  std::string format = "csv";
  std::string out_path;
  analyze->add_option("--kb", kb_path, "knowledge base file");
  analyze->add_option("--level", level, "1, 2 or 3")->check(CLI::Range(1, 3));
  analyze->add_flag("--include-empty", include_empty, "count vectors that match no method");
  analyze->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  analyze->add_option("--out", out_path, "output file (default stdout)");

  auto* validate = app.add_subcommand("validate", "run the reference case corpus");
  validate->add_option("--kb", kb_path, "knowledge base file");
  validate->add_option("--cases", cases_path, "case corpus file");
  validate->add_flag("--json", as_json);

  auto* classify_cmd = app.add_subcommand("classify", "descriptors of a problem description");
  ClassifyArgs ca;
  classify_cmd->add_option("--kb", kb_path, "knowledge base file");
  classify_cmd->add_option("--weights", ca.weights,
                           "none, ordinal, quantitative or pairwise_ratio_matrix");
  classify_cmd->add_option("--performance", ca.performance,
                           "not_compared, ordinal, quantitative or pairwise_ratio_matrix");
  classify_cmd->add_flag("--fuzzy-weights", ca.fuzzy_weights);
  classify_cmd->add_flag("--fuzzy-performance", ca.fuzzy_performance);
  classify_cmd->add_flag("--indifference", ca.indifference, "indifference threshold q used");
  classify_cmd->add_flag("--preference", ca.preference, "preference threshold p used");
  classify_cmd->add_option("--problematic", ca.problematic,
                           "selection, sorting, ranking or sorting_plus_selection");
  classify_cmd->add_option("--order", ca.order, "none, partial or complete");
  classify_cmd->add_flag("--json", as_json);

  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP service");
  std::string address = env_or("MCDA_ADDR", "127.0.0.1:8080");
  std::string serve_cases = cases_path;
  serve_cmd->add_option("--kb", kb_path, "knowledge base file");
  serve_cmd->add_option("--cases", serve_cases, "case corpus for /validate (empty to disable)");
  serve_cmd->add_option("--addr", address, "host:port");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*methods) return run_methods(kb_path, key, as_json);
    if (*select) return run_select(kb_path, tokens, explain, as_json);
    if (*rules) return run_rules(kb_path, level, as_json);
    if (*analyze) return run_analyze(kb_path, level, include_empty, format, out_path);
    if (*validate) return run_validate(kb_path, cases_path, as_json);
    if (*classify_cmd) return run_classify(kb_path, ca, as_json);
    if (*serve_cmd) return run_serve(kb_path, serve_cases, address);
  } catch (const mcda::InvalidRequest& e) {
    std::cerr << "invalid request (step " << e.step() << "): " << e.what() << '\n';
    return 3;
  } catch (const mcda::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
