#include <string>

#include "doctest.h"
#include "sylowbench.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  swb_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("group handles") {
  swb_group* g = nullptr;
  REQUIRE(swb_group_from_ref("builtin:dodecahedral", &g) == SWB_OK);
  uint64_t order = 0;
  CHECK(swb_group_order(g, &order) == SWB_OK);
  CHECK(order == 120);
  swb_sylow_report r;
  CHECK(swb_count_sylow(g, 5, nullptr, &r) == SWB_OK);
  CHECK(r.count == 6);
  CHECK(r.count * r.normalizer_order == 120);
  swb_group_free(g);

  const char* gens[] = {"(1 2 3)", "(1 2)"};
  REQUIRE(swb_group_from_generators(3, gens, 2, &g) == SWB_OK);
  size_t degree = 0;
  CHECK(swb_group_degree(g, &degree) == SWB_OK);
  CHECK(degree == 3);
  int in = 0;
  CHECK(swb_group_contains(g, "(1 3)", &in) == SWB_OK);
  CHECK(in == 1);
  CHECK(swb_group_contains(g, "(1 4)", &in) == SWB_ERR_PARSE);
  swb_group_free(g);
}

TEST_CASE("error codes") {
  swb_group* g = nullptr;
  CHECK(swb_group_from_ref("builtin:dihedral(2)", &g) == SWB_ERR_CATALOG);
  CHECK(std::string(swb_last_error()).size() > 0);
  CHECK(swb_group_from_ref("nothing", &g) == SWB_ERR_USAGE);
  CHECK(swb_group_from_ref("file:/nonexistent:g", &g) == SWB_ERR_IO);
  CHECK(swb_group_from_ref(nullptr, &g) == SWB_ERR_ARGUMENT);
  const char* bad[] = {"(1 2"};
  CHECK(swb_group_from_generators(3, bad, 1, &g) == SWB_ERR_PARSE);
  uint64_t v;
  CHECK(swb_legendre_valuation(10, 4, &v) == SWB_ERR_PRECONDITION);
  CHECK(std::string(swb_status_name(SWB_ERR_ORBIT_CAP)) == "orbit cap exceeded");

  swb_caps caps;
  swb_caps_default(&caps);
  caps.elements = 10;
  caps.orbit = 10;
  REQUIRE(swb_group_from_ref("builtin:symmetric(7)", &g) == SWB_OK);
  swb_sylow_report r;
  swb_status s = swb_count_sylow(g, 2, &caps, &r);
  CHECK((s == SWB_ERR_CAP || s == SWB_ERR_ORBIT_CAP));
  swb_group_free(g);
}

TEST_CASE("arithmetic and proofs") {
  uint64_t v = 0;
  CHECK(swb_legendre_valuation(35, 17, &v) == SWB_OK);
  CHECK(v == 2);
  int b = 1;
  CHECK(swb_phall_solvable(6, 5, &b) == SWB_OK);
  CHECK(b == 0);
  uint64_t extra[] = {22};
  CHECK(swb_mhall_product(22, 3, extra, 1, &b) == SWB_OK);
  CHECK(b == 1);
  CHECK(swb_mhall_product(22, 3, nullptr, 0, &b) == SWB_OK);
  CHECK(b == 0);
  swb_frobenius_class c;
  CHECK(swb_frobenius_filter(35, 17, &c) == SWB_OK);
  CHECK(c == SWB_CLASS_OTHER);

  swb_verdict verdict;
  char* trace = nullptr;
  CHECK(swb_prove(17, 35, &verdict, &trace) == SWB_OK);
  CHECK(verdict == SWB_CONTRADICTION);
  CHECK(take(trace).find("overall\tCONTRADICTION") != std::string::npos);
  CHECK(swb_prove(5, 6, &verdict, nullptr) == SWB_OK);
  CHECK(verdict == SWB_INAPPLICABLE);

  char* canon = nullptr;
  CHECK(swb_perm_normalize("(3 2 1)(5 4)", 5, &canon) == SWB_OK);
  CHECK(take(canon) == "(1 3 2)(4 5)");
}

TEST_CASE("reports") {
  swb_report_options opt;
  swb_report_options_default(&opt);
  opt.tsv = 1;
  int status = -1;
  char* text = nullptr;
  REQUIRE(swb_report_sylow("builtin:alternating(5)", 5, &opt, &status, &text) == SWB_OK);
  std::string s = take(text);
  CHECK(status == 0);
  CHECK(s.find("PASS") != std::string::npos);

  REQUIRE(swb_report_scan(17, 40, nullptr, &opt, &status, &text) == SWB_OK);
  s = take(text);
  CHECK(s.find("35\t") != std::string::npos);
  CHECK(s.find("pseudo-candidate") != std::string::npos);

  REQUIRE(swb_report_prove(7, 15, &opt, &status, &text) == SWB_OK);
  s = take(text);
  CHECK(status == 0);
  CHECK(s.find("invalid") == std::string::npos);

  REQUIRE(swb_report_lemmas("nc", 60, &opt, &status, &text) == SWB_OK);
  s = take(text);
  CHECK(status == 0);
  CHECK(s.find("summary:") != std::string::npos);
  CHECK(swb_report_lemmas("bogus", 60, &opt, &status, &text) == SWB_ERR_USAGE);
  CHECK(swb_report_scan(3, 20, "/nonexistent/list", &opt, &status, &text) == SWB_ERR_IO);
  CHECK(swb_report_info("builtin:cyclic(5)", &opt, nullptr, &text) == SWB_ERR_ARGUMENT);
}
