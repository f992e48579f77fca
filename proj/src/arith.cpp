#include "sylowbench/arith.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "sylowbench/errors.hpp"

namespace sylowbench {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) throw Error("valuation needs n >= 1 and p >= 2");
  unsigned v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::uint64_t prime_power_part(std::uint64_t n, std::uint64_t p) { return ipow(p, valuation(n, p)); }

std::uint64_t odd_part(std::uint64_t n) {
  if (n == 0) throw Error("odd part of 0");
  while (n % 2 == 0) n /= 2;
  return n;
}

std::uint64_t ipow(std::uint64_t base, unsigned exponent) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (base != 0 && r > UINT64_MAX / base) throw Error("integer power overflows 64 bits");
    r *= base;
  }
  return r;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  if (n == 0) throw Error("cannot factorize 0");
  std::vector<PrimePower> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    PrimePower pp{d, 0, 1};
    while (n % d == 0) {
      n /= d;
      ++pp.exponent;
      pp.value *= d;
    }
    out.push_back(pp);
  }
  if (n > 1) out.push_back({n, 1, n});
  return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (const PrimePower& pp : factorize(n)) {
    const std::size_t k = out.size();
    std::uint64_t power = 1;
    for (unsigned e = 1; e <= pp.exponent; ++e) {
      power *= pp.prime;
      for (std::size_t i = 0; i < k; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_prime_power(std::uint64_t n) { return n > 1 && factorize(n).size() == 1; }

std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw Error("legendre_valuation needs p >= 2");
  std::uint64_t total = 0;
  for (std::uint64_t pk = p; pk <= n; pk *= p) {
    total += n / pk;
    if (pk > UINT64_MAX / p) break;
  }
  return total;
}

PHallReport phall_solvable_test(std::uint64_t n, std::uint64_t p) {
  if (n == 0) throw Error("phall_solvable_test needs n >= 1");
  PHallReport report;
  report.solvable = true;
  for (const PrimePower& pp : factorize(n)) {
    FactorResidue fr{pp, pp.value % p};
    if (fr.residue != 1 % p) report.solvable = false;
    report.factors.push_back(fr);
  }
  return report;
}

namespace {

// Multiplicative decomposition search over divisors, memoized on the
// remaining cofactor.
class ProductSearch {
 public:
  template <class Admit>
  ProductSearch(std::uint64_t n, Admit admit) {
    for (std::uint64_t d : divisors(n))
      if (d > 1 && admit(d)) parts_.push_back(d);
  }

  std::optional<std::vector<std::uint64_t>> solve(std::uint64_t rest) {
    if (rest == 1) return std::vector<std::uint64_t>{};
    if (auto it = memo_.find(rest); it != memo_.end()) return it->second;
    std::optional<std::vector<std::uint64_t>> found;
    for (std::uint64_t d : parts_) {
      if (d > rest) break;
      if (rest % d != 0) continue;
      if (auto sub = solve(rest / d)) {
        sub->push_back(d);
        found = std::move(sub);
        break;
      }
    }
    memo_.emplace(rest, found);
    return found;
  }

 private:
  std::vector<std::uint64_t> parts_;  // ascending
  std::map<std::uint64_t, std::optional<std::vector<std::uint64_t>>> memo_;
};

MHallReport decompose(std::uint64_t n, std::uint64_t p, const std::set<std::uint64_t>& extra) {
  if (n == 0) throw Error("mhall_product_test needs n >= 1");
  ProductSearch search(n, [&](std::uint64_t d) { return (is_prime_power(d) && d % p == 1 % p) || extra.count(d) > 0; });
  MHallReport report;
  if (auto w = search.solve(n)) {
    report.product = true;
    report.witness = std::move(*w);
    std::sort(report.witness.begin(), report.witness.end());
  }
  return report;
}

}  // namespace

MHallReport mhall_product_test(std::uint64_t n, std::uint64_t p, std::span<const std::uint64_t> extra) {
  std::set<std::uint64_t> admitted(extra.begin(), extra.end());
  return decompose(n, p, admitted);
}

const char* frobenius_class_name(FrobeniusClass c) {
  switch (c) {
    case FrobeniusClass::one: return "1";
    case FrobeniusClass::one_plus_p: return "1+p";
    default: return "other";
  }
}

FrobeniusClass frobenius_pseudo_filter(std::uint64_t n, std::uint64_t p) {
  if (p < 2) throw Error("frobenius_pseudo_filter needs p >= 2");
  const std::uint64_t p2 = p * p;
  const std::uint64_t r = n % p2;
  if (r == 1) return FrobeniusClass::one;
  if (r == (1 + p) % p2) return FrobeniusClass::one_plus_p;
  return FrobeniusClass::other;
}

const char* candidate_status_name(CandidateStatus s) {
  switch (s) {
    case CandidateStatus::solvable_attainable: return "solvable-attainable";
    case CandidateStatus::product_attainable: return "product-attainable";
    case CandidateStatus::open: return "open";
    case CandidateStatus::pseudo_candidate: return "pseudo-candidate";
    default: return "excluded";
  }
}

CandidateVerdict classify_candidate(std::uint64_t n, std::uint64_t p, std::span<const std::uint64_t> extra) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw Error("n must be positive");
  CandidateVerdict v;
  v.n = n;
  v.p = p;
  v.cong_mod_p = n % p == 1 % p;
  v.phall = phall_solvable_test(n, p);
  v.mhall = mhall_product_test(n, p, extra);
  v.frobenius_class = frobenius_pseudo_filter(n, p);
  if (!v.cong_mod_p) {
    v.status = CandidateStatus::excluded;
  } else if (v.phall.solvable) {
    v.status = CandidateStatus::solvable_attainable;
  } else if (v.mhall.product) {
    v.status = CandidateStatus::product_attainable;
  } else {
    std::set<std::uint64_t> admitted(extra.begin(), extra.end());
    for (std::uint64_t q = p; q < n; q *= p) {
      admitted.insert(q + 1);
      if (q > UINT64_MAX / p) break;
    }
    v.projective = decompose(n, p, admitted);
    v.status = v.projective.product ? CandidateStatus::open : CandidateStatus::pseudo_candidate;
  }
  return v;
}

std::vector<CandidateVerdict> candidate_scan(std::uint64_t p, std::uint64_t max_n, std::span<const std::uint64_t> extra) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  std::vector<CandidateVerdict> out;
  for (std::uint64_t n = 1; n <= max_n; n += p) out.push_back(classify_candidate(n, p, extra));
  return out;
}

std::vector<std::uint64_t> parse_extra_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc() || ptr != line.data() + line.size() || value == 0)
      throw CatalogError("expected a positive integer, got '" + std::string(line) + "'", line_no);
    out.push_back(value);
  }
  return out;
}

std::string join_numbers(std::span<const std::uint64_t> values, std::string_view sep) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
  return out.str();
}

}  // namespace sylowbench
