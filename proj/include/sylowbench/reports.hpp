#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sylowbench/caps.hpp"
#include "sylowbench/catalog.hpp"

namespace sylowbench {

// Rows are rendered either tab-separated with a header row or as aligned
// columns.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  std::size_t size() const { return rows_.size(); }
  std::string render(bool tsv) const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

struct ReportOptions {
  bool tsv = false;
  Caps caps;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct Report {
  int status = 0;  // 0 all checks passed, 1 some check failed
  std::string text;
};

enum class Suite { centalt, nc, cyc2, brodkey, frobenius, all };
Suite parse_suite(std::string_view name);  // throws UsageError
const char* suite_name(Suite s);

Report info_report(const NamedGroup& g, const ReportOptions& opt);
Report sylow_report(const NamedGroup& g, std::uint64_t p, const ReportOptions& opt);
Report lemmas_report(Suite suite, std::uint64_t max_order, const ReportOptions& opt);
Report scan_report(std::uint64_t p, std::uint64_t max_n, std::span<const std::uint64_t> extra, const ReportOptions& opt);
Report prove_report(std::uint64_t p, std::uint64_t n, const ReportOptions& opt);
Report selftest_report(const ReportOptions& opt);

}  // namespace sylowbench
