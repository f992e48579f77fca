#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sylowbench {

enum class Verdict { contradiction, unresolved, inapplicable };
const char* verdict_name(Verdict v);

// One rule application. The payload is a space-separated list of key=value
// pairs starting with claim=<kind>; it carries every number the statement
// relies on so the step can be re-checked in isolation.
struct TraceStep {
  std::string rule;
  std::string statement;
  std::string payload;
};

struct BranchResult {
  std::uint64_t order = 0;
  Verdict verdict = Verdict::unresolved;
  std::string surviving;  // first surviving assignment, "q:n_q,..." ("-" if none)
};

struct DerivationTrace {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::vector<TraceStep> steps;
  std::vector<BranchResult> branches;
  Verdict overall = Verdict::unresolved;
};

// {d : d | order / q^{v_q(order)}, d = 1 mod q}, ascending. Throws
// PreconditionFailed unless q is a prime dividing order.
std::vector<std::uint64_t> admissible_counts(std::uint64_t order, std::uint64_t q);

struct StructuralResult {
  bool applicable = false;
  std::string failing_condition;  // set when not applicable
  std::vector<std::uint64_t> candidate_orders;
  std::vector<TraceStep> steps;
};

StructuralResult structural_reduce(std::uint64_t p, std::uint64_t n);

// Prime -> Sylow count.
using Assignment = std::map<std::uint64_t, std::uint64_t>;

struct RefutationResult {
  Verdict verdict = Verdict::unresolved;
  std::vector<TraceStep> steps;
  std::uint64_t assignments = 0;  // enumerated after global pruning
  std::uint64_t survivors = 0;
  Assignment surviving;           // first survivor
};

// Throws PreconditionFailed unless n is admissible for p at this order.
RefutationResult arithmetic_refute(std::uint64_t order, std::uint64_t p, std::uint64_t n);

DerivationTrace prove(std::uint64_t p, std::uint64_t n);

std::string format_assignment(const Assignment& a);

// Plain text: a header line, one `RULE | statement | payload` line per step,
// then tab-separated `branch` rows and the `overall` row.
std::string format_trace(const DerivationTrace& trace);
// Inverse of format_trace; throws ParseError with the line number.
DerivationTrace parse_trace(std::string_view text);

// Re-checks every step from its payload alone with independent arithmetic,
// plus the consistency of branch and overall verdicts. Empty means valid.
std::vector<std::string> validate_trace(const DerivationTrace& trace);

}  // namespace sylowbench
