// Trace re-validation. Deliberately shares no arithmetic with the pipeline:
// every number is recomputed here with naive loops.

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <set>
#include <sstream>

#include "sylowbench/pipeline.hpp"

namespace sylowbench {

namespace {

using u64 = std::uint64_t;
using Nums = std::vector<u64>;

bool prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d < n && d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

Nums primes_of(u64 n) {
  Nums out;
  for (u64 d = 2; d <= n; ++d)
    if (n % d == 0 && prime(d)) out.push_back(d);
  return out;
}

u64 max_power(u64 n, u64 q) {
  u64 pw = 1;
  while (n % (pw * q) == 0) pw *= q;
  return pw;
}

unsigned exponent(u64 n, u64 q) {
  unsigned e = 0;
  for (u64 pw = q; n % pw == 0; pw *= q) ++e;
  return e;
}

Nums counts(u64 order, u64 q) {
  const u64 rest = order / max_power(order, q);
  Nums out;
  for (u64 d = 1; d <= rest; ++d)
    if (rest % d == 0 && d % q == 1) out.push_back(d);
  return out;
}

u64 factorial_exponent(u64 n, u64 q) {
  u64 e = 0;
  for (u64 k = 2; k <= n; ++k) e += exponent(k, q);
  return e;
}

u64 strip_twos(u64 n) {
  while (n % 2 == 0) n /= 2;
  return n;
}

class Claim {
 public:
  explicit Claim(const std::string& payload) {
    std::istringstream in(payload);
    std::string token;
    while (in >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) {
        bad_ = true;
        continue;
      }
      fields_[token.substr(0, eq)] = token.substr(eq + 1);
    }
  }

  bool malformed() const { return bad_; }
  bool has(const std::string& k) const { return fields_.count(k) > 0; }
  std::string text(const std::string& k) const {
    auto it = fields_.find(k);
    return it == fields_.end() ? std::string() : it->second;
  }
  u64 num(const std::string& k) const {
    std::string s = text(k);
    u64 v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("field " + k);
    return v;
  }
  Nums list(const std::string& k) const {
    Nums out;
    std::string s = text(k);
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(std::stoull(item));
    return out;
  }
  std::map<u64, u64> assignment() const {
    std::map<u64, u64> out;
    std::istringstream in(text("assign"));
    std::string item;
    while (std::getline(in, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw std::invalid_argument("assign");
      out[std::stoull(item.substr(0, colon))] = std::stoull(item.substr(colon + 1));
    }
    return out;
  }

 private:
  std::map<std::string, std::string> fields_;
  bool bad_ = false;
};

constexpr std::array<const char*, 8> kPremises = {"odd_prime", "congruent", "legendre", "sylow_order",
                                                   "orbits",    "centralizer", "nc_quotient", "odd"};

struct ScopeState {
  std::map<u64, Nums> sets;
  std::set<u64> normal;
  bool global_contradiction = false;
};

class Checker {
 public:
  explicit Checker(const DerivationTrace& t) : t_(t) {
    for (const TraceStep& s : t.steps) {
      Claim c(s.payload);
      if (c.text("claim") == "all_normal") all_normal_.insert({c.text("m"), c.text("level")});
      if (c.has("assign") && c.has("scope")) kills_[{c.text("scope"), c.text("level")}].insert(c.text("assign"));
    }
  }

  std::vector<std::string> run() {
    for (std::size_t i = 0; i < t_.steps.size(); ++i) {
      const TraceStep& s = t_.steps[i];
      std::string why;
      try {
        Claim c(s.payload);
        if (c.malformed())
          why = "malformed payload";
        else
          why = check(s.rule, c);
      } catch (const std::exception& e) {
        why = std::string("unreadable payload (") + e.what() + ")";
      }
      if (!why.empty()) problems_.push_back("step " + std::to_string(i + 1) + " (" + s.rule + "): " + why);
    }
    check_verdicts();
    return problems_;
  }

 private:
  std::string check(const std::string& rule, const Claim& c) {
    const std::string kind = c.text("claim");
    const u64 p = t_.p, n = t_.n;
    if (std::find(kPremises.begin(), kPremises.end(), kind) != kPremises.end()) premises_.push_back(kind);
    if (kind == "inapplicable") {
      saw_inapplicable_ = true;
      const std::string cond = c.text("condition");
      if (cond == "p_not_odd_prime") return p != 2 && prime(p) ? "p is an odd prime" : "";
      if (cond == "n_not_congruent") return n % p == 1 ? "n is 1 mod p" : "";
      if (cond == "n_not_below_p2") return n < p * p ? "n < p^2" : "";
      if (cond == "legendre_above_2") return factorial_exponent(n, p) <= 2 ? "v_p(n!) <= 2" : "";
      if (cond == "n_even") return n % 2 == 1 ? "n is odd" : "";
      if (cond == "n_not_2p_plus_1") return n == 2 * p + 1 ? "n = 2p+1" : "";
      return "unknown condition " + cond;
    }
    if (kind == "odd_prime") return c.num("p") == p && p != 2 && prime(p) ? "" : "p is not an odd prime";
    if (kind == "congruent") return n % p == 1 ? "" : "n is not 1 mod p";
    if (kind == "legendre") {
      const u64 v = factorial_exponent(n, p);
      if (c.num("value") != v) return "v_p(n!) is " + std::to_string(v);
      return v <= 2 ? "" : "v_p(n!) exceeds 2";
    }
    if (kind == "sylow_order") return n < p * p && c.num("order") == p ? "" : "|P| = p does not follow";
    if (kind == "orbits") return n == 2 * p + 1 ? "" : "n is not 2p+1";
    if (kind == "centralizer") return c.num("bound") == p * p ? "" : "bound is not p^2";
    if (kind == "nc_quotient") return c.num("divisor") == p - 1 ? "" : "divisor is not p-1";
    if (kind == "odd") return n % 2 == 1 ? "" : "n is even";
    if (kind == "candidates") {
      if (premises_ != std::vector<std::string>(kPremises.begin(), kPremises.end()))
        return "candidate orders without the structural premises in order";
      Nums expect;
      const u64 odd = strip_twos(p - 1);
      if (c.num("oddpart") != odd) return "odd part of p-1 is " + std::to_string(odd);
      for (u64 d = 1; d <= odd; ++d)
        if (odd % d == 0) expect.push_back(p * n * d);
      candidates_ = expect;
      return c.list("orders") == expect ? "" : "candidate orders differ";
    }
    if (kind == "admissible") {
      Nums expect = counts(c.num("order"), c.num("q"));
      if (c.list("set") != expect) return "admissible set differs";
      scopes_[c.num("order")].sets[c.num("q")] = expect;
      return "";
    }
    if (kind == "member") {
      Nums adm = counts(c.num("order"), c.num("q"));
      if (std::find(adm.begin(), adm.end(), c.num("n")) == adm.end()) return "n is not admissible";
      if (c.num("q") != p || c.num("n") != n) return "member claim is not about n_p = n";
      scopes_[c.num("order")].sets[p] = {n};
      return "";
    }
    if (kind == "normal") {
      ScopeState& st = scopes_[c.num("order")];
      const u64 q = c.num("q");
      if (st.sets[q] != Nums{1}) return "n_q is not forced to 1";
      if (c.num("t") != max_power(c.num("order"), q)) return "|T| is not the full q-part";
      st.normal.insert(q);
      return "";
    }
    if (kind == "prune") {
      ScopeState& st = scopes_[c.num("order")];
      std::string why = product_rule(c.num("order"), c.num("q"), c.num("r"), c.num("qt"), c.num("bound"));
      if (!why.empty()) return why;
      if (!st.normal.count(c.num("r"))) return "T was not shown normal";
      if (c.list("before") != st.sets[c.num("q")]) return "set before pruning differs";
      Nums after;
      for (u64 d : st.sets[c.num("q")])
        if (c.num("bound") % d == 0) after.push_back(d);
      if (c.list("after") != after) return "pruned set differs";
      st.sets[c.num("q")] = after;
      return "";
    }
    if (kind == "normal_product" && !c.has("assign")) {
      ScopeState& st = scopes_[c.num("scope")];
      std::string why = product_rule(c.num("scope"), c.num("q"), c.num("r"), c.num("qt"), c.num("bound"));
      if (!why.empty()) return why;
      if (!st.normal.count(c.num("r"))) return "T was not shown normal";
      for (u64 d : st.sets[c.num("q")])
        if (c.num("bound") % d == 0) return "some admissible n_q divides the bound";
      st.global_contradiction = true;
      return "";
    }
    if (kind == "normal_product" || kind == "element_count" || kind == "abelian_normalizer") return check_kill(kind, c);
    if (kind == "all_normal") {
      const u64 m = c.num("m");
      const Nums ps = primes_of(m);
      if (c.text("via") == "sylow_counts") {
        for (u64 r : ps)
          if (counts(m, r) != Nums{1}) return "n_" + std::to_string(r) + " is not forced for order " + std::to_string(m);
        return "";
      }
      if (c.text("via") != "refutation") return "unknown derivation";
      if (c.num("level") >= 2) return "refutation beyond the depth cap";
      u64 total = 1;
      for (u64 r : ps) total *= counts(m, r).size();
      if (c.num("refuted") != total - 1) return "refuted count is not the number of other assignments";
      auto it = kills_.find({c.text("m"), c.text("level")});
      const std::size_t found = it == kills_.end() ? 0 : it->second.size();
      return found == total - 1 ? "" : "only " + std::to_string(found) + " refutations present";
    }
    if (kind == "branch") {
      const u64 order = c.num("order");
      ScopeState& st = scopes_[order];
      const bool global = c.num("global") == 1;
      if (global != st.global_contradiction) return "global flag disagrees with the propagation steps";
      std::string verdict = c.text("verdict");
      if (!global) {
        u64 total = 1;
        for (u64 r : primes_of(order)) total *= st.sets[r].size();
        if (c.num("assignments") != total) return "assignment count should be " + std::to_string(total);
        auto it = kills_.find({std::to_string(order), "0"});
        const u64 found = it == kills_.end() ? 0 : it->second.size();
        if (c.num("refuted") != found) return "refuted count disagrees with the refutation steps";
        const bool all = found == total;
        if ((verdict == "CONTRADICTION") != all) return "verdict does not match the refutations";
      } else if (verdict != "CONTRADICTION") {
        return "global contradiction with verdict " + verdict;
      }
      branch_verdicts_[order] = verdict;
      return "";
    }
    (void)rule;
    return "unknown claim '" + kind + "'";
  }

  std::string product_rule(u64 order, u64 q, u64 r, u64 qt, u64 bound) {
    if (!prime(q) || !prime(r) || q == r || order % q || order % r) return "q, r are not distinct primes of the order";
    if (qt != max_power(order, q) * max_power(order, r)) return "|QT| is not the product of the Sylow orders";
    if (counts(qt, q) != Nums{1}) return "groups of order |QT| can have several Sylow q-subgroups";
    if (bound * qt != order) return "bound is not order/|QT|";
    return "";
  }

  std::string check_kill(const std::string& kind, const Claim& c) {
    const u64 order = c.num("scope");
    const u64 level = c.num("level");
    const auto a = c.assignment();
    const Nums ps = primes_of(order);
    if (a.size() != ps.size()) return "assignment does not cover the primes of the order";
    for (u64 r : ps) {
      auto it = a.find(r);
      if (it == a.end()) return "assignment misses " + std::to_string(r);
      Nums allowed = level == 0 ? scopes_[order].sets[r] : counts(order, r);
      if (std::find(allowed.begin(), allowed.end(), it->second) == allowed.end())
        return "n_" + std::to_string(r) + " = " + std::to_string(it->second) + " is not admissible here";
    }
    if (kind == "normal_product") {
      const u64 q = c.num("q"), r = c.num("r");
      std::string why = product_rule(order, q, r, c.num("qt"), c.num("bound"));
      if (!why.empty()) return why;
      if (a.at(r) != 1) return "T is not normal in this assignment";
      if (c.num("nq") != a.at(q)) return "n_q differs from the assignment";
      return c.num("bound") % a.at(q) != 0 ? "" : "n_q divides the bound";
    }
    if (kind == "element_count") {
      u64 sum = 1;
      for (u64 r : ps)
        if (exponent(order, r) == 1) sum += a.at(r) * (r - 1);
      if (c.num("sum") != sum) return "element count is " + std::to_string(sum);
      return sum > order ? "" : "element count fits";
    }
    const u64 q = c.num("q"), r = c.num("r"), m = c.num("m");
    if (a.at(q) == 0 || m * a.at(q) != order) return "m is not |G|/n_q";
    for (u64 s : primes_of(m))
      if (exponent(m, s) > 2) return "a Sylow subgroup of order m is too large";
    if (!all_normal_.count({std::to_string(m), std::to_string(level + 1)})) return "no all-normal derivation for m";
    if (r == q || max_power(m, r) != max_power(order, r)) return "Sylow r of N_G(Q) is not Sylow in G";
    if (c.num("bound") * m != order) return "bound is not order/m";
    if (c.num("nr") != a.at(r)) return "n_r differs from the assignment";
    return c.num("bound") % a.at(r) != 0 ? "" : "n_r divides the bound";
  }

  void check_verdicts() {
    if (t_.overall == Verdict::inapplicable) {
      if (!saw_inapplicable_) problems_.push_back("INAPPLICABLE without a failing condition");
      if (!t_.branches.empty()) problems_.push_back("INAPPLICABLE trace has branches");
      return;
    }
    if (saw_inapplicable_) problems_.push_back("failing condition present but overall is not INAPPLICABLE");
    Nums orders;
    bool all = true;
    for (const BranchResult& b : t_.branches) {
      orders.push_back(b.order);
      auto it = branch_verdicts_.find(b.order);
      if (it == branch_verdicts_.end() || it->second != verdict_name(b.verdict))
        problems_.push_back("branch " + std::to_string(b.order) + " verdict is not backed by an R6 step");
      all = all && b.verdict == Verdict::contradiction;
    }
    if (orders != candidates_) problems_.push_back("branches do not match the candidate orders");
    const Verdict expect = all && !orders.empty() ? Verdict::contradiction : Verdict::unresolved;
    if (t_.overall != expect) problems_.push_back(std::string("overall should be ") + verdict_name(expect));
  }

  const DerivationTrace& t_;
  std::vector<std::string> problems_;
  std::map<u64, ScopeState> scopes_;
  std::set<std::pair<std::string, std::string>> all_normal_;
  std::map<std::pair<std::string, std::string>, std::set<std::string>> kills_;
  std::map<u64, std::string> branch_verdicts_;
  Nums candidates_;
  std::vector<std::string> premises_;
  bool saw_inapplicable_ = false;
};

}  // namespace

std::vector<std::string> validate_trace(const DerivationTrace& trace) { return Checker(trace).run(); }

}  // namespace sylowbench
