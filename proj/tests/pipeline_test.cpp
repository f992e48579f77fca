#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "sylowbench/arith.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/pipeline.hpp"

using namespace sylowbench;

namespace {

bool has_rule(const DerivationTrace& t, const std::string& rule, const std::string& needle) {
  for (const auto& s : t.steps)
    if (s.rule == rule && (s.statement + " " + s.payload).find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("admissible counts match the definition") {
  for (std::uint64_t order = 2; order < 400; ++order)
    for (std::uint64_t q = 2; q <= order; ++q) {
      if (!oracle::naive_prime(q) || order % q) continue;
      std::vector<std::uint64_t> expect;
      std::uint64_t m = order / oracle::naive_pow_part(order, q);
      for (std::uint64_t d = 1; d <= m; ++d)
        if (m % d == 0 && d % q == 1 % q) expect.push_back(d);
      CHECK(admissible_counts(order, q) == expect);
    }
  CHECK_THROWS_AS(admissible_counts(10, 3), PreconditionFailed);
}

TEST_CASE("structural reduction preconditions") {
  CHECK(structural_reduce(17, 35).candidate_orders == std::vector<std::uint64_t>{595});
  auto failing = [](std::uint64_t p, std::uint64_t n) {
    StructuralResult r = structural_reduce(p, n);
    CHECK_FALSE(r.applicable);
    REQUIRE_FALSE(r.steps.empty());
    return r.steps.back().payload;
  };
  CHECK(failing(2, 3).find("condition=p_not_odd_prime") != std::string::npos);
  CHECK(failing(9, 10).find("condition=p_not_odd_prime") != std::string::npos);
  CHECK(failing(5, 7).find("condition=n_not_congruent") != std::string::npos);
  CHECK(failing(5, 6).find("condition=n_even") != std::string::npos);
  CHECK(failing(3, 13).find("condition=n_not_below_p2") != std::string::npos);
  CHECK(failing(5, 21).find("condition=legendre_above_2") != std::string::npos);
  StructuralResult r = structural_reduce(7, 15);
  CHECK(r.applicable);
  CHECK(r.candidate_orders == std::vector<std::uint64_t>{105, 315});
}

TEST_CASE("prove 17 35") {
  DerivationTrace t = prove(17, 35);
  CHECK(t.overall == Verdict::contradiction);
  CHECK(has_rule(t, "R3", "n_17 <= 7 < 35"));
  CHECK(validate_trace(t).empty());
}

TEST_CASE("prove 7 15") {
  DerivationTrace t = prove(7, 15);
  REQUIRE(t.branches.size() == 2);
  CHECK(t.branches[0].order == 105);
  CHECK(t.branches[0].verdict == Verdict::contradiction);
  CHECK(has_rule(t, "R4", "scope=105"));
  CHECK(t.branches[1].order == 315);
  CHECK(t.branches[1].verdict == Verdict::contradiction);
  CHECK(has_rule(t, "R5", "scope=315"));
  CHECK(validate_trace(t).empty());
}

TEST_CASE("real sylow numbers are never refuted") {
  CHECK(prove(5, 6).overall == Verdict::inapplicable);
  CHECK(prove(3, 10).overall == Verdict::inapplicable);
  RefutationResult a5 = arithmetic_refute(60, 5, 6);
  CHECK(a5.verdict == Verdict::unresolved);
  CHECK(a5.survivors > 0);
  CHECK(arithmetic_refute(30, 5, 6).verdict == Verdict::contradiction);
  CHECK_THROWS_AS(arithmetic_refute(30, 5, 11), PreconditionFailed);
}

TEST_CASE("trace text round trip and validation") {
  for (auto [p, n] : {std::pair<std::uint64_t, std::uint64_t>{17, 35}, {7, 15}, {5, 6}, {11, 23}, {13, 27}}) {
    DerivationTrace t = prove(p, n);
    std::string text = format_trace(t);
    DerivationTrace back = parse_trace(text);
    CHECK(format_trace(back) == text);
    CHECK(validate_trace(back).empty());
  }
  CHECK_THROWS_AS(parse_trace("trace\tp=3\n"), ParseError);
  CHECK_THROWS_AS(parse_trace("nonsense\n"), ParseError);
}

TEST_CASE("validator rejects tampered traces") {
  DerivationTrace good = prove(17, 35);
  auto edit = [](DerivationTrace t, const std::string& from, const std::string& to) {
    for (auto& s : t.steps) {
      auto pos = s.payload.find(from);
      if (pos != std::string::npos) {
        s.payload.replace(pos, from.size(), to);
        break;
      }
    }
    return t;
  };
  CHECK_FALSE(validate_trace(edit(good, "value=2", "value=3")).empty());
  CHECK_FALSE(validate_trace(edit(good, "orders=595", "orders=595,1190")).empty());
  CHECK_FALSE(validate_trace(edit(good, "set=1,85", "set=1")).empty());
  CHECK_FALSE(validate_trace(edit(good, "bound=7", "bound=35")).empty());

  DerivationTrace flipped = good;
  flipped.overall = Verdict::unresolved;
  CHECK_FALSE(validate_trace(flipped).empty());

  // Every step except redundant ones (membership of n itself, an R3 prune
  // that the final kill does not need) carries the proof.
  for (std::size_t i = 0; i < good.steps.size(); ++i) {
    const std::string& payload = good.steps[i].payload;
    if (payload.starts_with("claim=member") || payload.starts_with("claim=prune")) continue;
    DerivationTrace t = good;
    t.steps.erase(t.steps.begin() + i);
    CAPTURE(payload);
    CHECK_FALSE(validate_trace(t).empty());
  }
  std::mt19937_64 rng(0x5eed0007);
  for (int i = 0; i < 20; ++i) {
    DerivationTrace t = good;
    std::swap(t.steps[rng() % 9], t.steps[rng() % 9]);
    if (format_trace(t) == format_trace(good)) continue;
    CHECK_FALSE(validate_trace(t).empty());
  }

  DerivationTrace t715 = prove(7, 15);
  for (std::size_t i = 0; i < t715.steps.size(); ++i) {
    if (t715.steps[i].rule != "R4" && t715.steps[i].rule != "R5") continue;
    DerivationTrace t = t715;
    t.steps.erase(t.steps.begin() + i);
    CHECK_FALSE(validate_trace(t).empty());
  }
}

TEST_CASE("assignment formatting") {
  Assignment a{{3, 7}, {5, 21}, {7, 15}};
  CHECK(format_assignment(a) == "3:7,5:21,7:15");
}
