// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcda/classifier.hpp"
#include "mcda/errors.hpp"
#include "mcda/knowledge_base.hpp"
#include "mcda/rule_engine.hpp"
#include "mcda/uncertainty.hpp"
#include "mcda/validation.hpp"
#include "oracle.hpp"
#include "published_rules.hpp"
#include "published_stats.hpp"

using namespace mcda;

namespace {

// Collects failed checks for one criterion.
struct Check {
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  template <typename A, typename B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", want " << want;
      failures.push_back(s.str());
    }
  }
};

DescriptorVector vec(const std::array<int, kSlotCount>& values) {
  std::array<SlotValue, kSlotCount> slots{};
  for (std::size_t i = 0; i < kSlotCount; ++i) {
    if (values[i] >= 0) slots[i] = static_cast<std::uint8_t>(values[i]);
  }
  return DescriptorVector::of(slots);
}

std::vector<std::string> abbrs(const KnowledgeBase& kb, const MethodSet& set) {
  std::vector<std::string> out;
  for (int id : set) out.push_back(kb.get_method(id).abbreviation);
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ",") + x;
  return out;
}

void kb_integrity(const KnowledgeBase& kb, Check& c) {
  c.equal(kb.size(), std::size_t{56}, "method count");
  c.equal(kb.distinct_vector_count(), std::size_t{31}, "distinct vectors");
  for (const auto& rec : kb.methods()) {
    const auto v = hierarchy_violation(rec.characteristics);
    c.expect(!v, rec.abbreviation + " breaks " + v.value_or(""));
  }
}

void rule_bases(const RuleEngine& engine, Check& c) {
  c.equal(engine.rule_base(Level::One).size(), std::size_t{13}, "level 1 rules");
  c.equal(engine.rule_base(Level::Two).size(), std::size_t{25}, "level 2 rules");
  const auto& rules = engine.rule_base(Level::Three);
  const auto& published = mcda::testing::published_rules();
  c.equal(rules.size(), published.size(), "level 3 rules");
  for (std::size_t i = 0; i < std::min(rules.size(), published.size()); ++i) {
    const auto& want = published[i];
    c.equal(rules[i].id, std::string(want.label), "label of rule " + std::to_string(i + 1));
    c.expect(rules[i].pattern == vec(want.pattern), std::string(want.label) + " pattern");
    c.equal(join(abbrs(engine.kb(), rules[i].methods)),
            join(std::vector<std::string>(want.methods.begin(), want.methods.end())),
            std::string(want.label) + " methods");
  }
  if (rules.size() == 31) {
    c.equal(rules[13].methods.size(), std::size_t{8}, "R14 size");
    c.equal(join(abbrs(engine.kb(), rules[29].methods)), std::string("A_H,A_N,M_B,D_M,R_M"),
            "R30 methods");
  }
}

void enumeration_counts(const RuleEngine& engine, Check& c) {
  const auto three = summarize_level(engine, Level::Three);
  const auto two = summarize_level(engine, Level::Two);
  const auto one = summarize_level(engine, Level::One);
  c.equal(three.total, std::size_t{450000}, "level 3 total");
  c.equal(three.valid, std::size_t{4536}, "level 3 valid");
  c.equal(three.nonempty, std::size_t{656}, "level 3 nonempty");
  c.equal(two.fully_specified_valid, std::size_t{240}, "level 2 fully specified valid");
  c.equal(two.fully_specified_nonempty, std::size_t{25}, "level 2 fully specified nonempty");
  c.equal(one.fully_specified_valid, std::size_t{48}, "level 1 fully specified valid");
  c.equal(one.fully_specified_nonempty, std::size_t{13}, "level 1 fully specified nonempty");
  c.equal(one.single_unknown_valid, std::size_t{76}, "level 1 single-unknown valid");
  c.equal(three.single_unknown_valid, std::size_t{1232}, "level 3 single-unknown valid");
}

void statistics(const RuleEngine& engine, Check& c) {
  for (Level level : kAllLevels) {
    const auto rows = compute_stats(engine, level, false);
    const auto& published = mcda::testing::published_exclude_empty(to_int(level));
    const auto tag = "level " + std::to_string(to_int(level));
    c.equal(rows.size(), published.size(), tag + " row count");
    for (std::size_t i = 0; i < std::min(rows.size(), published.size()); ++i) {
      const auto& p = published[i];
      const auto cell = tag + " k=" + std::to_string(p.unknowns);
      c.equal(rows[i].unknowns, p.unknowns, cell + " unknowns");
      c.equal(rows[i].min_methods, static_cast<std::size_t>(p.min), cell + " min");
      c.equal(rows[i].max_methods, static_cast<std::size_t>(p.max), cell + " max");
      c.expect(std::abs(rows[i].mean_methods - p.mean) <= 1e-4,
               cell + " mean " + std::to_string(rows[i].mean_methods));
    }
    if (level == Level::Three && rows.size() > 2) {
      c.equal(rows[2].rule_count, std::size_t{131}, "level 3 k=2 nonempty rules");
    }
  }
  const auto incl = compute_stats(engine, Level::Three, true);
  for (int k = 1; k <= 8; ++k) {
    const auto want = mcda::testing::kPublishedIncludeEmptyLevelThree[k - 1];
    const bool ok = static_cast<std::size_t>(k) < incl.size() && incl[k].unknowns == k &&
                    std::abs(incl[k].mean_methods - want) <= 1e-4;
    c.expect(ok, "level 3 include-empty k=" + std::to_string(k));
  }
}

void oracle_equivalence(const RuleEngine& engine, Check& c) {
  std::size_t vectors = 0, pairs = 0;
  for (const auto& v : filter_valid(enumerate_combinations(Level::Three), Level::Three)) {
    ++vectors;
    const auto got = engine.select_methods(v);
    if (std::vector<int>(got.begin(), got.end()) != oracle::scan(engine.kb(), v)) {
      c.expect(false, "scan differs at " + v.to_string());
    }
    for (Slot s : kAllSlots) {
      if (!v.is_known(s)) continue;
      auto erased = v;
      erased.clear(s);
      if (!is_valid(erased, Level::Three)) continue;
      ++pairs;
      if (!got.is_subset_of(engine.select_methods(erased))) {
        c.expect(false, "monotonicity fails at " + v.to_string() + " erasing " +
                            descriptor_name(s));
      }
    }
  }
  c.equal(vectors, std::size_t{4536}, "valid vectors checked");
  c.expect(pairs > 0, "no erasure pairs checked");
}

void validation_corpus(const RuleEngine& engine, Check& c) {
  const auto cases = load_cases_file(std::string(MCDA_DATA_DIR) + "/reference_cases.txt");
  c.equal(cases.size(), std::size_t{40}, "case count");
  const auto report = run_cases(engine, cases);
  c.equal(report.match, std::size_t{31}, "Match");
  c.equal(report.empty_set, std::size_t{7}, "EmptySet");
  c.equal(report.mismatch, std::size_t{2}, "Mismatch");
  std::vector<std::string> empty, mismatch;
  for (const auto& r : report.results) {
    if (r.status == CaseStatus::EmptySet) empty.push_back(std::to_string(r.case_no));
    if (r.status == CaseStatus::Mismatch) mismatch.push_back(std::to_string(r.case_no));
    c.expect(r.conforms, "case " + std::to_string(r.case_no) + " differs from the recorded rule/set");
  }
  c.equal(join(empty), std::string("5,12,16,29,32,33,36"), "EmptySet cases");
  c.equal(join(mismatch), std::string("1,40"), "Mismatch cases");
}

void classifier(Check& c) {
  ProblemDescription udc;
  udc.weights_spec = WeightsSpec::Quantitative;
  udc.performance_scale = PerformanceScale::Quantitative;
  udc.fuzzy_weights = true;
  udc.fuzzy_performance = true;
  udc.problematic = Problematic::Ranking;
  udc.expected_order = ExpectedOrder::Complete;
  c.equal(classify(udc).to_string(), vec({1, 2, 2, 1, 1, 3, 0, 3, 2}).to_string(),
          "urban distribution centre");

  ProblemDescription case3;
  case3.weights_spec = WeightsSpec::PairwiseRatioMatrix;
  case3.performance_scale = PerformanceScale::PairwiseRatioMatrix;
  case3.problematic = Problematic::Ranking;
  case3.expected_order = ExpectedOrder::Complete;
  c.equal(classify(case3).to_string(), vec({1, 3, 3, 0, 0, 0, 0, 3, 2}).to_string(), "case 3");

  ProblemDescription case23;
  case23.weights_spec = WeightsSpec::None;
  case23.performance_scale = PerformanceScale::Quantitative;
  case23.problematic = Problematic::Selection;
  c.equal(classify(case23).to_string(), vec({0, 0, 2, 0, 0, 0, 0, 1, 0}).to_string(), "case 23");
}

}  // namespace

int main() {
  std::optional<KnowledgeBase> kb;
  std::optional<RuleEngine> engine;
  int failed = 0;

  const auto run = [&](const std::string& name, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      body(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", elapsed.count());
    if (c.failures.empty()) {
      std::cout << "PASS " << name << " (" << timing << ")\n";
    } else {
      ++failed;
      std::cout << "FAIL " << name << " (" << timing << ")\n";
      for (const auto& f : c.failures) std::cout << "    " << f << '\n';
    }
  };

  run("KB integrity", [&](Check& c) {
    kb.emplace(load_kb_file(std::string(MCDA_DATA_DIR) + "/methods.kb"));
    engine.emplace(*kb);
    kb_integrity(*kb, c);
  });
  if (!engine) {
    std::cout << "FAIL remaining criteria: knowledge base did not load\n";
    return 1;
  }
  run("Rule bases", [&](Check& c) { rule_bases(*engine, c); });
  run("Enumeration counts", [&](Check& c) { enumeration_counts(*engine, c); });
  run("Statistics", [&](Check& c) { statistics(*engine, c); });
  run("Oracle equivalence and monotonicity", [&](Check& c) { oracle_equivalence(*engine, c); });
  run("Validation corpus", [&](Check& c) { validation_corpus(*engine, c); });
  run("Classifier", [](Check& c) { classifier(c); });

  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
            << '\n';
  return failed == 0 ? 0 : 1;
}
