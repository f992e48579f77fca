#include "sylowbench.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

#include "sylowbench/arith.hpp"
#include "sylowbench/catalog.hpp"
#include "sylowbench/errors.hpp"
#include "sylowbench/pipeline.hpp"
#include "sylowbench/reports.hpp"
#include "sylowbench/sylow.hpp"

struct swb_group {
  sylowbench::PermGroup group;
};

namespace {

namespace sb = sylowbench;

thread_local std::string last_error;

swb_status fail(swb_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating engine exceptions into status codes.
template <class F>
swb_status guard(F&& body) {
  try {
    last_error.clear();
    body();
    return SWB_OK;
  } catch (const sb::ParseError& e) {
    return fail(SWB_ERR_PARSE, e.what());
  } catch (const sb::DegreeMismatch& e) {
    return fail(SWB_ERR_DEGREE, e.what());
  } catch (const sb::CapExceeded& e) {
    return fail(SWB_ERR_CAP, e.what());
  } catch (const sb::OrbitCapExceeded& e) {
    return fail(SWB_ERR_ORBIT_CAP, e.what());
  } catch (const sb::IndexCapExceeded& e) {
    return fail(SWB_ERR_INDEX_CAP, e.what());
  } catch (const sb::NotASubgroup& e) {
    return fail(SWB_ERR_NOT_SUBGROUP, e.what());
  } catch (const sb::PreconditionFailed& e) {
    return fail(SWB_ERR_PRECONDITION, e.what());
  } catch (const sb::UsageError& e) {
    return fail(SWB_ERR_USAGE, e.what());
  } catch (const sb::IoError& e) {
    return fail(SWB_ERR_IO, e.what());
  } catch (const sb::CatalogError& e) {
    return fail(SWB_ERR_CATALOG, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SWB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SWB_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sb::Caps to_caps(const swb_caps* c) {
  sb::Caps caps;
  if (c) {
    caps.elements = c->elements;
    caps.orbit = c->orbit;
    caps.degree = c->degree;
    caps.regular = c->regular;
    caps.subgroup_search = c->subgroup_search;
  }
  return caps;
}

sb::ReportOptions to_options(const swb_report_options* o) {
  sb::ReportOptions opt;
  if (o) {
    opt.tsv = o->tsv != 0;
    opt.caps = to_caps(&o->caps);
    opt.threads = o->threads;
  }
  return opt;
}

swb_status missing(const char* what) { return fail(SWB_ERR_ARGUMENT, std::string(what) + " is null"); }

template <class F>
swb_status report(int* exit_status, char** text, F&& make) {
  if (!exit_status || !text) return missing("output pointer");
  return guard([&] {
    sb::Report r = make();
    *text = copy_string(r.text);
    *exit_status = r.status;
  });
}

}  // namespace

extern "C" {

const char* swb_version(void) { return "0.1.0"; }

const char* swb_status_name(swb_status status) {
  switch (status) {
    case SWB_OK: return "ok";
    case SWB_ERR_ARGUMENT: return "invalid argument";
    case SWB_ERR_PARSE: return "parse error";
    case SWB_ERR_DEGREE: return "degree mismatch";
    case SWB_ERR_CAP: return "element cap exceeded";
    case SWB_ERR_ORBIT_CAP: return "orbit cap exceeded";
    case SWB_ERR_INDEX_CAP: return "index cap exceeded";
    case SWB_ERR_NOT_SUBGROUP: return "not a subgroup";
    case SWB_ERR_PRECONDITION: return "precondition failed";
    case SWB_ERR_USAGE: return "usage error";
    case SWB_ERR_IO: return "i/o error";
    case SWB_ERR_CATALOG: return "catalog error";
    case SWB_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* swb_last_error(void) { return last_error.c_str(); }

void swb_string_free(char* s) { std::free(s); }

void swb_caps_default(swb_caps* out) {
  if (!out) return;
  sb::Caps c;
  *out = {c.elements, c.orbit, c.degree, c.regular, c.subgroup_search};
}

void swb_report_options_default(swb_report_options* out) {
  if (!out) return;
  out->tsv = 0;
  swb_caps_default(&out->caps);
  out->threads = 0;
}

swb_status swb_group_from_ref(const char* ref, swb_group** out) {
  if (!ref || !out) return missing("argument");
  return guard([&] { *out = new swb_group{sb::resolve_group(ref).group}; });
}

swb_status swb_group_from_generators(size_t degree, const char* const* generators, size_t count, swb_group** out) {
  if (!out || (count > 0 && !generators)) return missing("argument");
  return guard([&] {
    std::vector<sb::Permutation> gens;
    for (size_t i = 0; i < count; ++i) {
      if (!generators[i]) throw sb::UsageError("generator " + std::to_string(i) + " is null");
      gens.push_back(sb::parse_cycles(generators[i], degree));
    }
    *out = new swb_group{sb::PermGroup(degree, std::move(gens))};
  });
}

void swb_group_free(swb_group* g) { delete g; }

swb_status swb_group_degree(const swb_group* g, size_t* out) {
  if (!g || !out) return missing("argument");
  *out = g->group.degree();
  return SWB_OK;
}

swb_status swb_group_order(const swb_group* g, uint64_t* out) {
  if (!g || !out) return missing("argument");
  return guard([&] { *out = g->group.order(); });
}

swb_status swb_group_contains(const swb_group* g, const char* perm, int* out) {
  if (!g || !perm || !out) return missing("argument");
  return guard([&] { *out = g->group.contains(sb::parse_cycles(perm, g->group.degree())) ? 1 : 0; });
}

swb_status swb_perm_normalize(const char* text, size_t degree, char** out) {
  if (!text || !out) return missing("argument");
  return guard([&] { *out = copy_string(sb::format_cycles(sb::parse_cycles(text, degree))); });
}

swb_status swb_count_sylow(const swb_group* g, uint64_t p, const swb_caps* caps, swb_sylow_report* out) {
  if (!g || !out) return missing("argument");
  return guard([&] {
    sb::SylowReport r = sb::count_sylow(g->group, p, to_caps(caps));
    *out = {r.p,
            r.sylow_order,
            r.count,
            r.normalizer_order,
            r.p_core_order,
            r.action_kernel_order,
            r.normalizer_method == sb::Method::brute_force ? SWB_BRUTE_FORCE : SWB_ORBIT_STABILIZER};
  });
}

swb_status swb_legendre_valuation(uint64_t n, uint64_t p, uint64_t* out) {
  if (!out) return missing("argument");
  return guard([&] {
    if (!sb::is_prime(p)) throw sb::PreconditionFailed(std::to_string(p) + " is not prime");
    *out = sb::legendre_valuation(n, p);
  });
}

swb_status swb_phall_solvable(uint64_t n, uint64_t p, int* out) {
  if (!out) return missing("argument");
  return guard([&] { *out = sb::phall_solvable_test(n, p).solvable ? 1 : 0; });
}

swb_status swb_mhall_product(uint64_t n, uint64_t p, const uint64_t* extra, size_t extra_count, int* out) {
  if (!out || (extra_count > 0 && !extra)) return missing("argument");
  return guard([&] {
    *out = sb::mhall_product_test(n, p, std::span<const uint64_t>(extra, extra_count)).product ? 1 : 0;
  });
}

swb_status swb_frobenius_filter(uint64_t n, uint64_t p, swb_frobenius_class* out) {
  if (!out) return missing("argument");
  return guard([&] {
    switch (sb::frobenius_pseudo_filter(n, p)) {
      case sb::FrobeniusClass::one: *out = SWB_CLASS_ONE; break;
      case sb::FrobeniusClass::one_plus_p: *out = SWB_CLASS_ONE_PLUS_P; break;
      default: *out = SWB_CLASS_OTHER; break;
    }
  });
}

swb_status swb_prove(uint64_t p, uint64_t n, swb_verdict* verdict, char** trace) {
  if (!verdict) return missing("argument");
  return guard([&] {
    sb::DerivationTrace t = sb::prove(p, n);
    if (trace) *trace = copy_string(sb::format_trace(t));
    *verdict = t.overall == sb::Verdict::contradiction ? SWB_CONTRADICTION
               : t.overall == sb::Verdict::unresolved  ? SWB_UNRESOLVED
                                                       : SWB_INAPPLICABLE;
  });
}

swb_status swb_report_info(const char* ref, const swb_report_options* options, int* exit_status, char** text) {
  if (!ref) return missing("ref");
  return report(exit_status, text, [&] { return sb::info_report(sb::resolve_group(ref), to_options(options)); });
}

swb_status swb_report_sylow(const char* ref, uint64_t p, const swb_report_options* options, int* exit_status,
                            char** text) {
  if (!ref) return missing("ref");
  return report(exit_status, text, [&] { return sb::sylow_report(sb::resolve_group(ref), p, to_options(options)); });
}

swb_status swb_report_lemmas(const char* suite, uint64_t max_order, const swb_report_options* options,
                             int* exit_status, char** text) {
  return report(exit_status, text, [&] {
    return sb::lemmas_report(sb::parse_suite(suite ? suite : "all"), max_order, to_options(options));
  });
}

swb_status swb_report_scan(uint64_t p, uint64_t max_n, const char* extra_path, const swb_report_options* options,
                           int* exit_status, char** text) {
  return report(exit_status, text, [&] {
    std::vector<uint64_t> extra;
    if (extra_path) {
      std::ifstream in(extra_path);
      if (!in) throw sb::IoError(std::string("cannot open '") + extra_path + "'");
      std::ostringstream buf;
      buf << in.rdbuf();
      extra = sb::parse_extra_list(buf.str());
    }
    return sb::scan_report(p, max_n, extra, to_options(options));
  });
}

swb_status swb_report_prove(uint64_t p, uint64_t n, const swb_report_options* options, int* exit_status, char** text) {
  return report(exit_status, text, [&] { return sb::prove_report(p, n, to_options(options)); });
}

swb_status swb_report_selftest(const swb_report_options* options, int* exit_status, char** text) {
  return report(exit_status, text, [&] { return sb::selftest_report(to_options(options)); });
}

}  // extern "C"
