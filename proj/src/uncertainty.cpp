#include "mcda/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <string>

#include "mcda/errors.hpp"

namespace mcda {

namespace {

std::string fixed4(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

struct Accumulator {
  std::size_t n = 0;
  std::size_t sum = 0;
  std::size_t min = 0;
  std::size_t max = 0;

  void add(std::size_t x) {
    min = n == 0 ? x : std::min(min, x);
    max = std::max(max, x);
    sum += x;
    ++n;
  }
};

}  // namespace

std::size_t combination_count(Level level) noexcept {
  std::size_t total = 1;
  for (Slot s : level_slots(level)) total *= slot_domain(s).size() + 1;
  return total;
}

DescriptorVector combination_at(Level level, std::size_t index) {
  if (index >= combination_count(level)) {
    throw std::out_of_range("combination index " + std::to_string(index) + " out of range");
  }
  DescriptorVector out;
  const auto slots = level_slots(level);
  for (auto it = slots.rbegin(); it != slots.rend(); ++it) {
    const auto domain = slot_domain(*it);
    const auto radix = domain.size() + 1;
    const auto digit = index % radix;
    index /= radix;
    if (digit < domain.size()) out.set(*it, domain[digit]);
  }
  return out;
}

std::vector<StatsRow> compute_stats(const RuleEngine& engine, Level level, bool include_empty) {
  std::map<int, Accumulator> by_unknowns;
  for (const auto& v : filter_valid(enumerate_combinations(level), level)) {
    const auto count = engine.match(v, level).count();
    if (count == 0 && !include_empty) continue;
    by_unknowns[count_unknowns(v, level)].add(count);
  }
  std::vector<StatsRow> rows;
  for (const auto& [k, acc] : by_unknowns) {
    rows.push_back(StatsRow{k, acc.n, acc.min,
                            static_cast<double>(acc.sum) / static_cast<double>(acc.n), acc.max,
                            include_empty});
  }
  return rows;
}

std::optional<ExportFormat> parse_export_format(std::string_view name) noexcept {
  if (name == "csv") return ExportFormat::Csv;
  if (name == "json") return ExportFormat::Json;
  return std::nullopt;
}

double round4(double value) noexcept { return std::floor(value * 10000.0 + 0.5) / 10000.0; }

void export_stats(const std::vector<StatsRow>& rows, std::ostream& out, ExportFormat format) {
  std::vector<StatsRow> sorted = rows;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const StatsRow& a, const StatsRow& b) { return a.unknowns < b.unknowns; });
  if (format == ExportFormat::Csv) {
    out << "unknowns,rule_count,min,mean,max\n";
    for (const auto& r : sorted) {
      out << r.unknowns << ',' << r.rule_count << ',' << r.min_methods << ','
          << fixed4(r.mean_methods) << ',' << r.max_methods << '\n';
    }
  } else {
    // Written by hand so the mean keeps its fixed 4-decimal form.
    out << "[";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      const auto& r = sorted[i];
      out << (i ? ",\n " : "\n ") << "{\"unknowns\": " << r.unknowns
          << ", \"rule_count\": " << r.rule_count << ", \"min\": " << r.min_methods
          << ", \"mean\": " << fixed4(r.mean_methods) << ", \"max\": " << r.max_methods
          << ", \"include_empty\": " << (r.include_empty ? "true" : "false") << "}";
    }
    out << (sorted.empty() ? "]\n" : "\n]\n");
  }
  if (!out) throw IoError("failed to write statistics");
}

void export_stats(const std::vector<StatsRow>& rows, const std::filesystem::path& destination,
                  ExportFormat format) {
  std::ofstream out(destination, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + destination.string());
  export_stats(rows, out, format);
  out.flush();
  if (!out) throw IoError("failed to write " + destination.string());
}

LevelSummary summarize_level(const RuleEngine& engine, Level level) {
  LevelSummary s;
  s.level = level;
  s.total = combination_count(level);
  for (const auto& v : filter_valid(enumerate_combinations(level), level)) {
    ++s.valid;
    const bool nonempty = engine.match(v, level).count() > 0;
    const int k = count_unknowns(v, level);
    s.nonempty += nonempty ? 1 : 0;
    if (k == 0) {
      ++s.fully_specified_valid;
      s.fully_specified_nonempty += nonempty ? 1 : 0;
    } else if (k == 1) {
      ++s.single_unknown_valid;
    }
  }
  return s;
}

std::optional<double> mean_series_correlation(const std::vector<StatsRow>& a,
                                              const std::vector<StatsRow>& b) {
  std::map<int, double> left;
  for (const auto& r : a) left[r.unknowns] = r.mean_methods;
  std::vector<std::pair<double, double>> points;
  for (const auto& r : b) {
    if (const auto it = left.find(r.unknowns); it != left.end()) {
      points.emplace_back(it->second, r.mean_methods);
    }
  }
  if (points.size() < 2) return std::nullopt;
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(points.size());
  my /= static_cast<double>(points.size());
  double sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
    syy += (y - my) * (y - my);
  }
  if (sxx == 0 || syy == 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace mcda
