#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylowbench {

// Trial-division number theory; arguments are bounded by the scan ranges
// (around 10^6), so nothing probabilistic is needed.
bool is_prime(std::uint64_t n);
// v_p(n) for n >= 1.
unsigned valuation(std::uint64_t n, std::uint64_t p);
// p^{v_p(n)}
std::uint64_t prime_power_part(std::uint64_t n, std::uint64_t p);
std::uint64_t odd_part(std::uint64_t n);
// Throws Error on overflow.
std::uint64_t ipow(std::uint64_t base, unsigned exponent);

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;  // prime^exponent
};

// Ascending by prime; empty for n = 1.
std::vector<PrimePower> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

// v_p(n!) = sum_k floor(n / p^k)
std::uint64_t legendre_valuation(std::uint64_t n, std::uint64_t p);

struct FactorResidue {
  PrimePower factor;
  std::uint64_t residue;  // factor.value mod p
};

struct PHallReport {
  bool solvable = false;
  std::vector<FactorResidue> factors;
};

// True iff every maximal prime power dividing n is 1 mod p.
PHallReport phall_solvable_test(std::uint64_t n, std::uint64_t p);

struct MHallReport {
  bool product = false;
  std::vector<std::uint64_t> witness;  // ascending parts multiplying to n
};

// Is n a product of prime powers q^t = 1 mod p and members of `extra`
// (user-supplied Sylow p-numbers of simple groups)?
MHallReport mhall_product_test(std::uint64_t n, std::uint64_t p, std::span<const std::uint64_t> extra);

enum class FrobeniusClass { one, one_plus_p, other };
const char* frobenius_class_name(FrobeniusClass c);

// Class of n mod p^2.
FrobeniusClass frobenius_pseudo_filter(std::uint64_t n, std::uint64_t p);

enum class CandidateStatus { solvable_attainable, product_attainable, open, pseudo_candidate, excluded };
const char* candidate_status_name(CandidateStatus s);

struct CandidateVerdict {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  bool cong_mod_p = false;
  PHallReport phall;
  MHallReport mhall;
  FrobeniusClass frobenius_class = FrobeniusClass::other;
  // Decomposition that becomes available once the numbers q + 1 (q a power
  // of p; n_p of PSL(2, q)) are admitted as parts. Only consulted when the
  // user data gives no product.
  MHallReport projective;
  CandidateStatus status = CandidateStatus::excluded;
};

CandidateVerdict classify_candidate(std::uint64_t n, std::uint64_t p, std::span<const std::uint64_t> extra);

// Verdicts for every n <= max_n with n = 1 mod p, ascending.
std::vector<CandidateVerdict> candidate_scan(std::uint64_t p, std::uint64_t max_n, std::span<const std::uint64_t> extra);

// One positive integer per line; '#' starts a comment; blank lines ignored.
// Throws CatalogError with the line number.
std::vector<std::uint64_t> parse_extra_list(std::string_view text);

std::string join_numbers(std::span<const std::uint64_t> values, std::string_view sep = ",");

}  // namespace sylowbench
