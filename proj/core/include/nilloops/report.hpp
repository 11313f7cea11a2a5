#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nilloops/enumerator.hpp"

namespace nilloops {

// A row of the rendered table: one (A, F) branch, a per-prime summary
// (F given by its order only) or the order total (A and F empty).
struct ReportRow {
  std::string a;
  std::string f;
  std::optional<BigCount> large;  // absent on the total row
  BigCount count;
};

// Table rows: every branch with its own large-center classes, then for primes
// with several branches a summary row, then the total when there are several
// primes (or none).
std::vector<ReportRow> report_rows(const CountReport& report);

// Aligned columns "A  F  #Q Z(Q)>A  #Q" with thousands separators.
std::string render_text(const CountReport& report);

// Tab-separated "n  A  F  large  count" rows with bare digits.
std::string render_machine(const CountReport& report);

std::filesystem::path report_cache_path(const std::filesystem::path& cache_dir, int n);
// Writes render_text(report) to cache_dir/report-<n>.txt.
void write_report(const std::filesystem::path& cache_dir, const CountReport& report);

}  // namespace nilloops
