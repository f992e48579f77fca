#include "sylowbench/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>
#include <sstream>

#include "sylowbench/arith.hpp"
#include "sylowbench/errors.hpp"

namespace sylowbench {

namespace {

constexpr unsigned kMaxLevel = 2;
constexpr std::uint64_t kMaxAssignments = 1000000;

class Payload {
 public:
  explicit Payload(std::string_view claim) { out_ << "claim=" << claim; }

  Payload& operator()(std::string_view key, std::uint64_t value) {
    out_ << ' ' << key << '=' << value;
    return *this;
  }
  Payload& operator()(std::string_view key, std::string_view value) {
    out_ << ' ' << key << '=' << value;
    return *this;
  }

  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string braces(const std::vector<std::uint64_t>& s) { return "{" + join_numbers(s, ", ") + "}"; }

std::string sylow_name(std::uint64_t q) { return "n_" + std::to_string(q); }

bool only_one(const std::vector<std::uint64_t>& s) { return s.size() == 1 && s.front() == 1; }

std::uint64_t part(std::uint64_t order, std::uint64_t q) { return prime_power_part(order, q); }

struct AllNormal {
  bool ok = false;
  std::vector<TraceStep> steps;  // derivation, ending with the all_normal claim
};

// Kill rules R2-R5 for complete assignments, with the memoized recursive
// all-normal analysis behind R5.
class Refuter {
 public:
  std::optional<std::vector<TraceStep>> kill(std::uint64_t order, const Assignment& a, unsigned level) {
    const std::vector<PrimePower> facs = factorize(order);
    const std::string assign = format_assignment(a);
    auto base = [&](std::string_view claim) {
      Payload pl(claim);
      pl("scope", order)("level", level)("assign", assign);
      return pl;
    };

    for (const PrimePower& r : facs) {
      if (a.at(r.prime) != 1) continue;
      for (const PrimePower& q : facs) {
        if (q.prime == r.prime) continue;
        const std::uint64_t qt = q.value * r.value;
        if (!only_one(admissible_counts(qt, q.prime))) continue;
        const std::uint64_t bound = order / qt;
        const std::uint64_t nq = a.at(q.prime);
        if (bound % nq == 0) continue;
        std::ostringstream st;
        st << "n_" << r.prime << " = 1: T normal of order " << r.value << "; QT of order " << qt
           << " has admissible_counts(" << qt << ", " << q.prime << ") = {1}, so " << sylow_name(q.prime)
           << " divides " << order << "/" << qt << " = " << bound << ", not " << nq;
        return std::vector<TraceStep>{{"R3", st.str(),
                                       base("normal_product")("q", q.prime)("r", r.prime)("qt", qt)("bound", bound)(
                                           "nq", nq)("holds", std::uint64_t{0})
                                           .str()}};
      }
    }

    std::uint64_t sum = 1;
    std::ostringstream terms;
    for (const PrimePower& q : facs) {
      if (q.exponent != 1) continue;
      sum += a.at(q.prime) * (q.prime - 1);
      terms << " + " << a.at(q.prime) << "*" << (q.prime - 1);
    }
    if (sum > order) {
      std::ostringstream st;
      st << "prime-order Sylow subgroups meet trivially: 1" << terms.str() << " = " << sum << " > " << order;
      return std::vector<TraceStep>{{"R4", st.str(), base("element_count")("sum", sum).str()}};
    }

    for (const PrimePower& q : facs) {
      const std::uint64_t nq = a.at(q.prime);
      if (nq == 1) continue;
      const std::uint64_t m = order / nq;
      const auto mfacs = factorize(m);
      if (std::any_of(mfacs.begin(), mfacs.end(), [](const PrimePower& f) { return f.exponent > 2; })) continue;
      for (const PrimePower& r : mfacs) {
        if (r.prime == q.prime || r.value != part(order, r.prime)) continue;
        const std::uint64_t bound = order / m;
        const std::uint64_t nr = a.at(r.prime);
        if (bound % nr == 0) continue;
        const AllNormal& an = all_normal(m, level + 1);
        if (!an.ok) break;
        std::vector<TraceStep> steps = an.steps;
        std::ostringstream st;
        st << "N_G(Q) for q = " << q.prime << " has order " << order << "/" << nq << " = " << m
           << ", which is abelian since every group of order " << m
           << " has normal Sylow subgroups of order r or r^2; it centralizes a Sylow " << r.prime
           << "-subgroup of G, so " << sylow_name(r.prime) << " divides " << order << "/" << m << " = " << bound
           << ", not " << nr;
        steps.push_back({"R5", st.str(),
                         base("abelian_normalizer")("q", q.prime)("m", m)("r", r.prime)("bound", bound)("nr", nr).str()});
        return steps;
      }
    }
    return std::nullopt;
  }

  // Does every group of order m have all Sylow counts equal to 1?
  const AllNormal& all_normal(std::uint64_t m, unsigned level) {
    auto key = std::make_pair(m, level);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    AllNormal out;
    const auto facs = factorize(m);
    std::vector<std::vector<std::uint64_t>> sets;
    bool trivial = true;
    for (const PrimePower& f : facs) {
      sets.push_back(admissible_counts(m, f.prime));
      trivial = trivial && only_one(sets.back());
    }
    if (trivial) {
      out.ok = true;
      out.steps.push_back({"R5",
                           "every group of order " + std::to_string(m) + " has all admissible Sylow counts equal to 1",
                           Payload("all_normal")("m", m)("level", level)("via", "sylow_counts").str()});
    } else if (level < kMaxLevel) {
      std::uint64_t refuted = 0;
      out.ok = true;
      for_each_assignment(facs, sets, [&](const Assignment& a) {
        if (std::all_of(a.begin(), a.end(), [](const auto& kv) { return kv.second == 1; })) return true;
        auto k = kill(m, a, level);
        if (!k) {
          out.ok = false;
          return false;
        }
        ++refuted;
        out.steps.insert(out.steps.end(), k->begin(), k->end());
        return true;
      });
      if (out.ok) {
        out.steps.push_back({"R5",
                             "every group of order " + std::to_string(m) + " has all Sylow counts equal to 1: the " +
                                 std::to_string(refuted) + " other assignments are refuted",
                             Payload("all_normal")("m", m)("level", level)("via", "refutation")("refuted", refuted)
                                 .str()});
      } else {
        out.steps.clear();
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

  // Calls f on each assignment in lexicographic order until it returns false.
  template <class F>
  static bool for_each_assignment(const std::vector<PrimePower>& facs, const std::vector<std::vector<std::uint64_t>>& sets,
                                  F&& f) {
    std::vector<std::size_t> idx(facs.size(), 0);
    if (std::any_of(sets.begin(), sets.end(), [](const auto& s) { return s.empty(); })) return true;
    while (true) {
      Assignment a;
      for (std::size_t i = 0; i < facs.size(); ++i) a[facs[i].prime] = sets[i][idx[i]];
      if (!f(a)) return false;
      std::size_t i = facs.size();
      while (i > 0) {
        --i;
        if (++idx[i] < sets[i].size()) break;
        idx[i] = 0;
        if (i == 0) return true;
      }
      if (facs.empty()) return true;
    }
  }

 private:
  std::map<std::pair<std::uint64_t, unsigned>, AllNormal> memo_;
};

// Appends steps, dropping exact repeats of shared sub-derivations.
class StepSink {
 public:
  explicit StepSink(std::vector<TraceStep>& out) : out_(out) {}

  void add(const TraceStep& s) {
    const bool shared = s.payload.starts_with("claim=all_normal") ||
                        (s.payload.find(" level=") != std::string::npos && s.payload.find(" level=0") == std::string::npos);
    if (shared && !seen_.insert(s.payload).second) return;
    out_.push_back(s);
  }

  void add_all(const std::vector<TraceStep>& steps) {
    for (const TraceStep& s : steps) add(s);
  }

 private:
  std::vector<TraceStep>& out_;
  std::set<std::string> seen_;
};

}  // namespace

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::contradiction: return "CONTRADICTION";
    case Verdict::unresolved: return "UNRESOLVED";
    default: return "INAPPLICABLE";
  }
}

std::vector<std::uint64_t> admissible_counts(std::uint64_t order, std::uint64_t q) {
  if (!is_prime(q)) throw PreconditionFailed("admissible_counts: " + std::to_string(q) + " is not prime");
  if (order == 0 || order % q != 0)
    throw PreconditionFailed("admissible_counts: " + std::to_string(q) + " does not divide " + std::to_string(order));
  std::vector<std::uint64_t> out;
  for (std::uint64_t d : divisors(order / part(order, q)))
    if (d % q == 1) out.push_back(d);
  return out;
}

std::string format_assignment(const Assignment& a) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [q, n] : a) {
    out << (first ? "" : ",") << q << ":" << n;
    first = false;
  }
  return first ? "-" : out.str();
}

StructuralResult structural_reduce(std::uint64_t p, std::uint64_t n) {
  StructuralResult r;
  auto stop = [&](const char* rule, const std::string& condition, const std::string& key) {
    r.failing_condition = condition;
    r.steps.push_back({rule, "INAPPLICABLE: " + condition, Payload("inapplicable")("condition", key)("p", p)("n", n).str()});
    return r;
  };
  const std::string ps = std::to_string(p), ns = std::to_string(n);

  if (p < 3 || !is_prime(p)) return stop("S1", "p = " + ps + " is not an odd prime", "p_not_odd_prime");
  r.steps.push_back({"S1", "p = " + ps + " is an odd prime", Payload("odd_prime")("p", p).str()});
  if (n == 0 || n % p != 1) return stop("S1", "n = " + ns + " is not 1 mod " + ps, "n_not_congruent");
  r.steps.push_back({"S1",
                     "n = " + ns + " = 1 mod " + ps + "; a minimal G acts faithfully on its " + ns +
                         " Sylow " + ps + "-subgroups and lies in A_" + ns,
                     Payload("congruent")("p", p)("n", n).str()});

  const std::uint64_t v = legendre_valuation(n, p);
  if (n >= p * p) return stop("S2", "n = " + ns + " >= p^2 = " + std::to_string(p * p), "n_not_below_p2");
  if (v > 2) return stop("S2", "v_" + ps + "(" + ns + "!) = " + std::to_string(v) + " > 2", "legendre_above_2");
  r.steps.push_back({"S2", "v_" + ps + "(" + ns + "!) = " + std::to_string(v) + ", so |P| divides " + ps + "^2",
                     Payload("legendre")("p", p)("n", n)("value", v).str()});
  r.steps.push_back({"S2",
                     "|P| = " + ps + ": an abelian P of order " + ps + "^2 would move some Q through an orbit of size " +
                         ps + "^2 > " + ns,
                     Payload("sylow_order")("p", p)("n", n)("order", p).str()});

  if (n % 2 == 0) return stop("S3", "n = " + ns + " is even", "n_even");
  if (n != 2 * p + 1) return stop("S3", "n = " + ns + " is not 2p+1 = " + std::to_string(2 * p + 1), "n_not_2p_plus_1");
  r.steps.push_back({"S3", "n = 2p+1: P has orbits of size 1, " + ps + " and " + ps + " on the Sylow " + ps + "-subgroups",
                     Payload("orbits")("p", p)("n", n).str()});
  r.steps.push_back({"S3",
                     "C_G(P) = P, since a product of two disjoint " + ps + "-cycles has centralizer of order " +
                         std::to_string(p * p) + " in A_" + std::to_string(2 * p),
                     Payload("centralizer")("p", p)("bound", p * p).str()});
  r.steps.push_back({"S3", "N_G(P)/P is cyclic of order dividing " + std::to_string(p - 1),
                     Payload("nc_quotient")("p", p)("divisor", p - 1).str()});
  r.steps.push_back({"S3", "n = " + ns + " is odd, so a Sylow 2-subgroup embeds in N_G(P)/P and is cyclic; G has a normal 2-complement",
                     Payload("odd")("n", n).str()});

  const std::uint64_t odd = odd_part(p - 1);
  for (std::uint64_t d : divisors(odd)) r.candidate_orders.push_back(p * n * d);
  const std::string orders = join_numbers(r.candidate_orders, ", ");
  r.steps.push_back({"S3",
                     "|G| = p*n*d with d dividing " + std::to_string(odd) + ": candidate order" +
                         (r.candidate_orders.size() == 1 ? " " : "s ") + orders,
                     Payload("candidates")("p", p)("n", n)("oddpart", odd)("orders", join_numbers(r.candidate_orders))
                         .str()});
  r.applicable = true;
  return r;
}

RefutationResult arithmetic_refute(std::uint64_t order, std::uint64_t p, std::uint64_t n) {
  const auto adm_p = admissible_counts(order, p);
  if (std::find(adm_p.begin(), adm_p.end(), n) == adm_p.end())
    throw PreconditionFailed("arithmetic_refute: " + std::to_string(n) + " is not an admissible Sylow " +
                             std::to_string(p) + "-count for order " + std::to_string(order));
  RefutationResult res;
  StepSink sink(res.steps);
  Refuter refuter;
  const auto facs = factorize(order);
  const std::string os = std::to_string(order);

  std::map<std::uint64_t, std::vector<std::uint64_t>> sets;
  for (const PrimePower& q : facs) {
    if (q.prime == p) continue;
    sets[q.prime] = admissible_counts(order, q.prime);
    std::string st = "admissible_counts(" + os + ", " + std::to_string(q.prime) + ") = " + braces(sets[q.prime]);
    if (only_one(sets[q.prime])) st += ": " + sylow_name(q.prime) + " forced to 1";
    sink.add({"R1", st, Payload("admissible")("order", order)("q", q.prime)("set", join_numbers(sets[q.prime])).str()});
  }
  sets[p] = {n};
  sink.add({"R1", sylow_name(p) + " = " + std::to_string(n) + " is admissible for order " + os,
            Payload("member")("order", order)("q", p)("n", n).str()});

  // Global propagation from forced normal Sylow subgroups.
  std::set<std::uint64_t> normal;
  bool contradiction = false;
  for (bool changed = true; changed && !contradiction;) {
    changed = false;
    for (const PrimePower& r : facs) {
      if (!only_one(sets[r.prime]) || normal.count(r.prime)) continue;
      normal.insert(r.prime);
      sink.add({"R2",
                sylow_name(r.prime) + " = 1: Sylow " + std::to_string(r.prime) + "-subgroup T is normal, |T| = " +
                    std::to_string(r.value),
                Payload("normal")("order", order)("q", r.prime)("t", r.value).str()});
    }
    for (const PrimePower& r : facs) {
      if (!normal.count(r.prime)) continue;
      for (const PrimePower& q : facs) {
        if (q.prime == r.prime || contradiction) continue;
        const std::uint64_t qt = q.value * r.value;
        if (!only_one(admissible_counts(qt, q.prime))) continue;
        const std::uint64_t bound = order / qt;
        std::vector<std::uint64_t> kept;
        for (std::uint64_t d : sets[q.prime])
          if (bound % d == 0) kept.push_back(d);
        if (kept == sets[q.prime]) continue;
        const std::string letter = q.prime == p ? "P" : "Q";
        std::ostringstream st;
        st << letter << "T of order " << qt << ": admissible_counts(" << qt << ", " << q.prime << ") = {1}, so T <= N_G("
           << letter << ") and " << sylow_name(q.prime) << " divides " << os << "/" << qt << " = " << bound;
        if (kept.empty()) {
          const std::uint64_t nq = sets[q.prime].front();
          if (bound < nq)
            st << ", so " << sylow_name(q.prime) << " <= " << bound << " < " << nq;
          else
            st << ", which " << nq << " does not";
          sink.add({"R3", st.str(),
                    Payload("normal_product")("scope", order)("level", std::uint64_t{0})("q", q.prime)("r", r.prime)(
                        "qt", qt)("bound", bound)("nq", nq)("holds", std::uint64_t{0})
                        .str()});
          contradiction = true;
        } else {
          st << ": " << braces(sets[q.prime]) << " shrinks to " << braces(kept);
          sink.add({"R3", st.str(),
                    Payload("prune")("order", order)("q", q.prime)("r", r.prime)("qt", qt)("bound", bound)(
                        "before", join_numbers(sets[q.prime]))("after", join_numbers(kept))
                        .str()});
          sets[q.prime] = kept;
          changed = true;
        }
      }
    }
  }

  std::uint64_t refuted = 0;
  if (!contradiction) {
    std::vector<std::vector<std::uint64_t>> ordered;
    for (const PrimePower& q : facs) ordered.push_back(sets[q.prime]);
    Refuter::for_each_assignment(facs, ordered, [&](const Assignment& a) {
      if (++res.assignments > kMaxAssignments) return false;
      if (auto k = refuter.kill(order, a, 0)) {
        ++refuted;
        sink.add_all(*k);
      } else {
        if (res.survivors++ == 0) res.surviving = a;
      }
      return true;
    });
  }
  const bool all_dead = contradiction || (res.assignments <= kMaxAssignments && refuted == res.assignments);
  res.verdict = all_dead ? Verdict::contradiction : Verdict::unresolved;
  std::string st = contradiction ? "global propagation refutes order " + os
                                 : std::to_string(refuted) + " of " + std::to_string(res.assignments) +
                                       " assignments for order " + os + " refuted";
  if (!all_dead) st += "; surviving " + format_assignment(res.surviving);
  sink.add({"R6", st + ": " + verdict_name(res.verdict),
            Payload("branch")("order", order)("assignments", res.assignments)("refuted", refuted)(
                "global", std::uint64_t{contradiction ? 1u : 0u})("verdict", verdict_name(res.verdict))
                .str()});
  return res;
}

DerivationTrace prove(std::uint64_t p, std::uint64_t n) {
  DerivationTrace t;
  t.p = p;
  t.n = n;
  StructuralResult s = structural_reduce(p, n);
  t.steps = s.steps;
  if (!s.applicable) {
    t.overall = Verdict::inapplicable;
    return t;
  }
  bool all = true;
  for (std::uint64_t order : s.candidate_orders) {
    RefutationResult r = arithmetic_refute(order, p, n);
    t.steps.insert(t.steps.end(), r.steps.begin(), r.steps.end());
    t.branches.push_back({order, r.verdict, r.verdict == Verdict::contradiction ? "-" : format_assignment(r.surviving)});
    all = all && r.verdict == Verdict::contradiction;
  }
  t.overall = all ? Verdict::contradiction : Verdict::unresolved;
  return t;
}

std::string format_trace(const DerivationTrace& trace) {
  std::ostringstream out;
  out << "trace\tp=" << trace.p << "\tn=" << trace.n << '\n';
  for (const TraceStep& s : trace.steps) out << s.rule << " | " << s.statement << " | " << s.payload << '\n';
  for (const BranchResult& b : trace.branches)
    out << "branch\t" << b.order << '\t' << verdict_name(b.verdict) << '\t' << b.surviving << '\n';
  out << "overall\t" << verdict_name(trace.overall) << '\n';
  return out.str();
}

DerivationTrace parse_trace(std::string_view text) {
  DerivationTrace t;
  std::size_t line_no = 0;
  bool have_header = false, have_overall = false;
  auto verdict_of = [&](std::string_view s) {
    if (s == "CONTRADICTION") return Verdict::contradiction;
    if (s == "UNRESOLVED") return Verdict::unresolved;
    if (s == "INAPPLICABLE") return Verdict::inapplicable;
    throw ParseError("unknown verdict '" + std::string(s) + "'", line_no);
  };
  auto tabs = [](std::string_view line) {
    std::vector<std::string_view> out;
    while (true) {
      auto at = line.find('\t');
      out.push_back(line.substr(0, at));
      if (at == std::string_view::npos) return out;
      line = line.substr(at + 1);
    }
  };
  auto number = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("bad number '" + std::string(s) + "'", line_no);
    return v;
  };
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty()) continue;
    if (have_overall) throw ParseError("content after the overall line", line_no);
    if (line.starts_with("trace\t")) {
      auto f = tabs(line);
      if (f.size() != 3 || !f[1].starts_with("p=") || !f[2].starts_with("n=")) throw ParseError("bad header", line_no);
      t.p = number(f[1].substr(2));
      t.n = number(f[2].substr(2));
      have_header = true;
    } else if (line.starts_with("branch\t")) {
      auto f = tabs(line);
      if (f.size() != 4) throw ParseError("branch rows have four fields", line_no);
      t.branches.push_back({number(f[1]), verdict_of(f[2]), std::string(f[3])});
    } else if (line.starts_with("overall\t")) {
      t.overall = verdict_of(line.substr(8));
      have_overall = true;
    } else {
      auto first = line.find(" | ");
      auto last = line.rfind(" | ");
      if (first == std::string_view::npos || first == last) throw ParseError("expected 'RULE | statement | payload'", line_no);
      t.steps.push_back({std::string(line.substr(0, first)), std::string(line.substr(first + 3, last - first - 3)),
                         std::string(line.substr(last + 3))});
    }
  }
  if (!have_header) throw ParseError("missing trace header", 1);
  if (!have_overall) throw ParseError("missing overall line", line_no);
  return t;
}

}  // namespace sylowbench
