#include "nilloops/report.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "nilloops/error.hpp"

namespace nilloops {

std::vector<ReportRow> report_rows(const CountReport& report) {
  std::vector<ReportRow> rows;
  std::map<int, std::vector<const BranchResult*>> by_prime;
  for (const auto& b : report.branches) by_prime[b.source.p].push_back(&b);
  for (const auto& [p, branches] : by_prime) {
    const std::string a = "Z" + std::to_string(p);
    BigCount exact = 0;
    BigCount large = 0;
    for (const BranchResult* b : branches) {
      rows.push_back({a, b->f_label, b->large_classes, b->exact + b->large_classes});
      exact += b->exact;
      large += b->large_new_same_p;
    }
    if (branches.size() > 1) {
      rows.push_back({a, std::to_string(report.order / p), large, exact + large});
    }
  }
  if (by_prime.size() > 1) rows.push_back({"", "", std::nullopt, report.total});
  return rows;
}

std::string render_text(const CountReport& report) {
  const std::vector<ReportRow> rows = report_rows(report);
  std::vector<std::vector<std::string>> cells{{"A", "F", "#Q Z(Q)>A", "#Q"}};
  for (const auto& r : rows) {
    cells.push_back({r.a, r.f, r.large ? to_grouped_decimal(*r.large) : "",
                     to_grouped_decimal(r.count)});
  }
  std::vector<std::size_t> width(4, 0);
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "n = " << report.order << '\n';
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      const std::string& s = row[c];
      if (c < 2) {
        line += s + std::string(width[c] - s.size(), ' ');
      } else {
        line += std::string(width[c] - s.size(), ' ') + s;
      }
      if (c < 3) line += "  ";
    }
    out << line << '\n';
  }
  out << "total " << to_grouped_decimal(report.total) << '\n';
  return out.str();
}

std::string render_machine(const CountReport& report) {
  std::ostringstream out;
  for (const auto& r : report_rows(report)) {
    out << report.order << '\t' << r.a << '\t' << r.f << '\t' << (r.large ? to_decimal(*r.large) : "") << '\t'
        << to_decimal(r.count) << '\n';
  }
  return out.str();
}

std::filesystem::path report_cache_path(const std::filesystem::path& cache_dir, int n) {
  return cache_dir / ("report-" + std::to_string(n) + ".txt");
}

void write_report(const std::filesystem::path& cache_dir, const CountReport& report) {
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (ec) throw Error(Errc::kIo, "cannot create " + cache_dir.string() + ": " + ec.message());
  const auto path = report_cache_path(cache_dir, report.order);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    out << render_text(report);
    if (!out) throw Error(Errc::kIo, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace nilloops
