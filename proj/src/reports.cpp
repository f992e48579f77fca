#include "sylowbench/reports.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "sylowbench/arith.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/pipeline.hpp"
#include "sylowbench/sylow.hpp"

namespace sylowbench {

namespace {

using Rows = std::vector<std::vector<std::string>>;

// Runs the tasks on a small pool; results come back in task order.
template <class T>
std::vector<T> run_all(const std::vector<std::function<T()>>& tasks, unsigned threads) {
  std::vector<T> results(tasks.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) results[i] = tasks[i]();
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string num(std::uint64_t v) { return std::to_string(v); }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (const PrimePower& f : factorize(n)) out.push_back(f.prime);
  return out;
}

std::string factor_text(std::uint64_t n) {
  if (n == 1) return "1";
  std::string out;
  for (const PrimePower& f : factorize(n)) {
    if (!out.empty()) out += "*";
    out += num(f.prime);
    if (f.exponent > 1) out += "^" + num(f.exponent);
  }
  return out;
}

// Cap overflows become SKIP rows, other engine errors FAIL rows.
Rows guarded(const std::string& suite, const NamedGroup& g, const std::string& p,
             const std::function<Rows()>& body) {
  try {
    return body();
  } catch (const CapExceeded& e) {
    return {{suite, g.name, p, e.what(), "-", "SKIP"}};
  } catch (const OrbitCapExceeded& e) {
    return {{suite, g.name, p, e.what(), "-", "SKIP"}};
  } catch (const IndexCapExceeded& e) {
    return {{suite, g.name, p, e.what(), "-", "SKIP"}};
  } catch (const Error& e) {
    return {{suite, g.name, p, e.what(), "no error", "FAIL"}};
  }
}

Rows centalt_rows(const Caps& caps) {
  Rows rows;
  for (std::uint64_t p : {3, 5, 7}) {
    const std::string name = "alternating(" + num(2 * p) + ")";
    NamedGroup label{name, PermGroup(1)};
    Rows r = guarded("centalt", label, num(p), [&]() -> Rows {
      CentaltResult c = verify_centalt(p, caps);
      std::string observed = "|C_A(sigma)|=" + num(c.order) + " |C_S(sigma)|=" + num(c.symmetric_order) + " via " +
                             method_name(c.method);
      bool ok = c.pass && c.symmetric_order == 2 * p * p;
      return {{"centalt", name, num(p), observed, "|C_A|=" + num(p * p) + " |C_S|=" + num(2 * p * p), ok ? "PASS" : "FAIL"}};
    });
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

Rows nc_rows(const NamedGroup& g, const Caps& caps) {
  Rows rows;
  const std::uint64_t order = g.group.order();
  for (const PrimePower& f : factorize(order)) {
    if (f.exponent != 1) continue;
    Rows r = guarded("nc", g, num(f.prime), [&]() -> Rows {
      NcResult nc = nc_check(g.group, f.prime, caps);
      std::string observed = "|N/C|=" + num(nc.nc_order) + (nc.is_cyclic ? " cyclic" : " not cyclic");
      return {{"nc", g.name, num(f.prime), observed, "cyclic, order | " + num(f.prime - 1), nc.holds() ? "PASS" : "FAIL"}};
    });
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

Rows cyc2_rows(const NamedGroup& g, const Caps& caps) {
  return guarded("cyc2", g, "2", [&]() -> Rows {
    auto v = verify_cyc2(g.group, caps);
    if (std::holds_alternative<NotCyclicSylow2>(v)) return {};
    const Cyc2Verification& c = std::get<Cyc2Verification>(v);
    std::string observed = "|N|=" + num(c.complement.order()) + " index=" + num(c.index) +
                           (c.normal ? " normal " : " not-normal ") + uniqueness_name(c.uniqueness);
    return {{"cyc2", g.name, "2", observed, "normal, index " + num(c.sylow2_order), c.holds() ? "PASS" : "FAIL"}};
  });
}

Rows brodkey_rows(const NamedGroup& g, const Caps& caps) {
  Rows rows;
  for (std::uint64_t p : prime_divisors(g.group.order())) {
    Rows r = guarded("brodkey", g, num(p), [&]() -> Rows {
      auto b = brodkey_pair(g.group, p, caps);
      if (std::holds_alternative<NotAbelianSylow>(b)) return {};
      const BrodkeyPair& pair = std::get<BrodkeyPair>(b);
      bool ok = pair.intersection_order == pair.p_core_order;
      return {{"brodkey", g.name, num(p), "|P cap Q|=" + num(pair.intersection_order), "|O_p|=" + num(pair.p_core_order),
               ok ? "PASS" : "FAIL"}};
    });
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

Rows frobenius_rows(const NamedGroup& g, const Caps& caps) {
  const std::uint64_t order = g.group.order();
  Rows rows;
  for (std::uint64_t p : prime_divisors(order)) {
    Rows r = guarded("frobenius", g, num(p), [&]() -> Rows {
      Rows out;
      for (const FrobeniusRow& row : frobenius_counts(g.group, p, caps)) {
        std::string observed = "n_" + num(p) + "^" + num(row.a) + "=" + num(row.count);
        std::string expected = "1 mod " + num(p);
        bool ok = row.mod_p_ok;
        if (row.mod_p2_class) {
          observed += std::string(" class ") + frobenius_class_name(*row.mod_p2_class);
          expected += ", 1 or 1+p mod " + num(p * p);
          ok = ok && *row.mod_p2_class != FrobeniusClass::other;
        }
        out.push_back({"frobenius", g.name, num(p), observed, expected, ok ? "PASS" : "FAIL"});
      }
      return out;
    });
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

struct Tally {
  std::size_t pass = 0, fail = 0, skip = 0;
  std::vector<std::string> failures;

  void add(bool ok, const std::string& what) {
    if (ok) {
      ++pass;
    } else {
      ++fail;
      failures.push_back(what);
    }
  }
  void absorb(const Rows& rows) {
    for (const auto& r : rows) {
      if (r.back() == "PASS") ++pass;
      if (r.back() == "SKIP") ++skip;
      if (r.back() == "FAIL") {
        ++fail;
        failures.push_back(r[0] + " " + r[1] + " p=" + r[2] + ": observed " + r[3] + ", expected " + r[4]);
      }
    }
  }
};

}  // namespace

std::string Table::render(bool tsv) const {
  std::ostringstream out;
  if (tsv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "\t" : "") << cells[i];
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
    return out.str();
  }
  std::vector<std::size_t> width(header_.size());
  for (std::size_t i = 0; i < header_.size(); ++i) width[i] = header_[i].size();
  for (const auto& r : rows_)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    std::string text;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      text += cells[i];
      if (i + 1 < cells.size()) text += std::string(width[i] - cells[i].size() + 2, ' ');
    }
    out << text << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
  return out.str();
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::centalt, Suite::nc, Suite::cyc2, Suite::brodkey, Suite::frobenius, Suite::all})
    if (name == suite_name(s)) return s;
  throw UsageError("unknown suite '" + std::string(name) + "' (centalt, nc, cyc2, brodkey, frobenius, all)");
}

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::centalt: return "centalt";
    case Suite::nc: return "nc";
    case Suite::cyc2: return "cyc2";
    case Suite::brodkey: return "brodkey";
    case Suite::frobenius: return "frobenius";
    default: return "all";
  }
}

Report info_report(const NamedGroup& g, const ReportOptions& opt) {
  const PermGroup& G = g.group;
  Table t({"field", "value"});
  const std::uint64_t order = G.order();
  t.add({"name", g.name});
  t.add({"degree", num(G.degree())});
  t.add({"order", num(order)});
  t.add({"factorization", factor_text(order)});
  t.add({"generators", num(G.generators().size())});
  for (std::size_t i = 0; i < G.generators().size(); ++i) t.add({"generator " + num(i + 1), format_cycles(G.generators()[i])});
  t.add({"orbits", num(orbits(G).size())});
  t.add({"abelian", yes_no(G.is_abelian())});
  std::vector<Point> base = G.chain().base();
  std::string base_text;
  for (Point b : base) base_text += (base_text.empty() ? "" : " ") + num(b + 1);
  t.add({"base", base_text.empty() ? "-" : base_text});
  return {0, t.render(opt.tsv)};
}

Report sylow_report(const NamedGroup& g, std::uint64_t p, const ReportOptions& opt) {
  if (!is_prime(p)) throw UsageError("--p must be a prime, got " + num(p));
  SylowReport r = count_sylow(g.group, p, opt.caps);
  const std::uint64_t order = g.group.order();
  bool ok = r.count % p == 1 && r.count * r.normalizer_order == order && r.action_kernel_order % r.p_core_order == 0 &&
            r.orbit_size == r.count;
  Table t({"group", "order", "p", "sylow_order", "count", "normalizer_order", "method", "p_core_order",
           "kernel_order", "check"});
  t.add({g.name, num(order), num(p), num(r.sylow_order), num(r.count), num(r.normalizer_order),
         method_name(r.normalizer_method), num(r.p_core_order), num(r.action_kernel_order), ok ? "PASS" : "FAIL"});
  return {ok ? 0 : 1, t.render(opt.tsv)};
}

Report lemmas_report(Suite suite, std::uint64_t max_order, const ReportOptions& opt) {
  std::vector<std::function<Rows()>> tasks;
  const Caps caps = opt.caps;
  auto wants = [&](Suite s) { return suite == Suite::all || suite == s; };
  if (wants(Suite::centalt)) tasks.push_back([caps] { return centalt_rows(caps); });
  const auto& catalog = builtin_catalog();
  using RowFn = Rows (*)(const NamedGroup&, const Caps&);
  const std::pair<Suite, RowFn> per_group[] = {
      {Suite::nc, nc_rows}, {Suite::cyc2, cyc2_rows}, {Suite::brodkey, brodkey_rows}, {Suite::frobenius, frobenius_rows}};
  for (const auto& [s, fn] : per_group) {
    if (!wants(s)) continue;
    for (const NamedGroup& g : catalog) {
      if (g.group.order() > max_order) continue;
      tasks.push_back([fn, &g, caps] { return fn(g, caps); });
    }
  }
  Table t({"suite", "group", "p", "observed", "expected", "result"});
  Tally tally;
  for (const Rows& rows : run_all(tasks, opt.threads)) {
    tally.absorb(rows);
    for (const auto& r : rows) t.add(r);
  }
  std::string text = t.render(opt.tsv);
  text += "summary: " + num(tally.pass) + " pass, " + num(tally.fail) + " fail, " + num(tally.skip) + " skip\n";
  return {tally.fail ? 1 : 0, text};
}

Report scan_report(std::uint64_t p, std::uint64_t max_n, std::span<const std::uint64_t> extra, const ReportOptions& opt) {
  if (!is_prime(p)) throw UsageError("--p must be a prime, got " + num(p));
  Table t({"n", "factorization", "solvable", "product", "mod_p2", "status"});
  for (const CandidateVerdict& v : candidate_scan(p, max_n, extra)) {
    std::string product = "-";
    if (v.mhall.product) product = v.mhall.witness.empty() ? "1" : join_numbers(v.mhall.witness, "*");
    else if (v.projective.product) product = "(" + join_numbers(v.projective.witness, "*") + ")";
    t.add({num(v.n), factor_text(v.n), yes_no(v.phall.solvable), product, frobenius_class_name(v.frobenius_class),
           candidate_status_name(v.status)});
  }
  return {0, t.render(opt.tsv)};
}

Report prove_report(std::uint64_t p, std::uint64_t n, const ReportOptions&) {
  DerivationTrace trace = prove(p, n);
  std::string text = format_trace(trace);
  std::vector<std::string> problems = validate_trace(parse_trace(text));
  for (const std::string& pr : problems) text += "invalid\t" + pr + "\n";
  return {problems.empty() ? 0 : 1, text};
}

Report selftest_report(const ReportOptions& opt) {
  const auto& catalog = builtin_catalog();
  const Caps caps = opt.caps;
  std::vector<std::pair<std::string, Tally>> sections;

  {
    Tally t;
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 200; ++i) {
      std::size_t degree = 1 + rng() % 12;
      std::vector<Point> images(degree);
      for (std::size_t k = 0; k < degree; ++k) images[k] = static_cast<Point>(k);
      std::shuffle(images.begin(), images.end(), rng);
      Permutation a = Permutation::from_images(images);
      t.add(parse_cycles(format_cycles(a), degree) == a, "cycle notation round trip for " + format_cycles(a));
      t.add(compose(a, inverse(a)).is_identity(), "a * a^-1 for " + format_cycles(a));
    }
    sections.emplace_back("permutations", t);
  }
  {
    std::vector<std::function<Tally()>> tasks;
    for (const NamedGroup& g : catalog) {
      tasks.push_back([&g, caps] {
        Tally t;
        const std::uint64_t order = g.group.order();
        if (order <= caps.elements) t.add(enumerate_elements(g.group, caps.elements).size() == order, g.name + ": chain order vs closure");
        for (Point x = 0; x < g.group.degree(); ++x) {
          OrbitStabilizer os = orbit_and_stabilizer(g.group, x);
          t.add(os.orbit.size() * os.stabilizer.order() == order, g.name + ": orbit-stabilizer at " + num(x + 1));
        }
        return t;
      });
    }
    Tally total;
    for (const Tally& t : run_all(tasks, opt.threads)) {
      total.pass += t.pass;
      total.fail += t.fail;
      total.failures.insert(total.failures.end(), t.failures.begin(), t.failures.end());
    }
    sections.emplace_back("group engine", total);
  }
  {
    std::vector<std::function<Tally()>> tasks;
    for (const NamedGroup& g : catalog) {
      for (std::uint64_t p : prime_divisors(g.group.order())) {
        tasks.push_back([&g, p, caps] {
          Tally t;
          try {
            SylowReport r = count_sylow(g.group, p, caps);
            const std::string what = g.name + " p=" + num(p);
            t.add(r.count % p == 1, what + ": n_p = " + num(r.count) + " is not 1 mod p");
            t.add(r.count * r.normalizer_order == g.group.order(), what + ": n_p * |N| != |G|");
            t.add(r.action_kernel_order % r.p_core_order == 0, what + ": |O_p| does not divide the kernel order");
          } catch (const CapExceeded&) {
            ++t.skip;
          } catch (const OrbitCapExceeded&) {
            ++t.skip;
          }
          return t;
        });
      }
    }
    Tally total;
    for (const Tally& t : run_all(tasks, opt.threads)) {
      total.pass += t.pass;
      total.fail += t.fail;
      total.skip += t.skip;
      total.failures.insert(total.failures.end(), t.failures.begin(), t.failures.end());
    }
    sections.emplace_back("sylow congruence", total);
  }
  {
    Report lemmas = lemmas_report(Suite::all, UINT64_MAX, {true, caps, opt.threads});
    Tally t;
    std::istringstream in(lemmas.text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
      if (line.starts_with("summary:")) continue;
      std::vector<std::string> cells;
      std::istringstream ls(line);
      for (std::string c; std::getline(ls, c, '\t');) cells.push_back(c);
      t.absorb({cells});
    }
    sections.emplace_back("lemmas", t);
  }
  {
    Tally t;
    const std::uint64_t none[] = {0};
    std::span<const std::uint64_t> empty(none, 0);
    t.add(!phall_solvable_test(6, 5).solvable, "phall_solvable_test(6, 5)");
    t.add(!mhall_product_test(22, 3, empty).product, "mhall_product_test(22, 3)");
    t.add(!mhall_product_test(22, 7, empty).product, "mhall_product_test(22, 7)");
    t.add(frobenius_pseudo_filter(35, 17) == FrobeniusClass::other, "frobenius_pseudo_filter(35, 17)");
    std::vector<std::uint64_t> flagged;
    for (const CandidateVerdict& v : candidate_scan(17, 40, empty))
      if (v.status == CandidateStatus::pseudo_candidate) flagged.push_back(v.n);
    t.add(flagged == std::vector<std::uint64_t>{35}, "candidate_scan(17, 40) flags " + join_numbers(flagged));
    sections.emplace_back("filters", t);
  }
  {
    Tally t;
    DerivationTrace a = prove(17, 35);
    t.add(a.overall == Verdict::contradiction, "prove(17, 35) is " + std::string(verdict_name(a.overall)));
    t.add(prove(5, 6).overall == Verdict::inapplicable, "prove(5, 6) is not INAPPLICABLE");
    for (auto [p, n] : {std::pair<std::uint64_t, std::uint64_t>{17, 35}, {7, 15}, {5, 6}, {3, 7}}) {
      auto problems = validate_trace(parse_trace(format_trace(prove(p, n))));
      t.add(problems.empty(), "trace for (" + num(p) + ", " + num(n) + ") fails validation");
    }
    std::vector<std::function<Tally()>> tasks;
    for (const NamedGroup& g : catalog) {
      for (std::uint64_t p : prime_divisors(g.group.order())) {
        tasks.push_back([&g, p, caps] {
          Tally s;
          try {
            std::uint64_t n = count_sylow(g.group, p, caps).count;
            s.add(prove(p, n).overall != Verdict::contradiction,
                  "soundness: prove(" + num(p) + ", " + num(n) + ") refutes a count realized by " + g.name);
          } catch (const CapExceeded&) {
            ++s.skip;
          } catch (const OrbitCapExceeded&) {
            ++s.skip;
          }
          return s;
        });
      }
    }
    for (const Tally& s : run_all(tasks, opt.threads)) {
      t.pass += s.pass;
      t.fail += s.fail;
      t.skip += s.skip;
      t.failures.insert(t.failures.end(), s.failures.begin(), s.failures.end());
    }
    sections.emplace_back("theorem pipeline", t);
  }

  Table table({"section", "pass", "fail", "skip"});
  bool failed = false;
  std::string details;
  for (const auto& [name, t] : sections) {
    table.add({name, num(t.pass), num(t.fail), num(t.skip)});
    failed = failed || t.fail > 0;
    for (const std::string& f : t.failures) details += "FAIL\t" + name + "\t" + f + "\n";
  }
  return {failed ? 1 : 0, table.render(opt.tsv) + details};
}

}  // namespace sylowbench
