#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "sylowbench.h"

namespace {

constexpr int kUsage = 2;

int finish(swb_status status, int exit_status, char* text, const CLI::App& sub) {
  if (status != SWB_OK) {
    std::cerr << "error: " << swb_status_name(status) << ": " << swb_last_error() << "\n\n" << sub.help();
    return kUsage;
  }
  if (text) std::fputs(text, stdout);
  swb_string_free(text);
  return exit_status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sylow subgroup workbench: permutation-group engines, Sylow-number filters and derivations"};
  app.fallthrough();
  app.require_subcommand(1);

  swb_report_options opt;
  swb_report_options_default(&opt);
  bool tsv = false;
  app.add_flag("--tsv", tsv, "Tab-separated output with a header row");
  app.add_option("--cap-elements", opt.caps.elements, "Largest group enumerated element by element")
      ->check(CLI::PositiveNumber);
  app.add_option("--cap-orbit", opt.caps.orbit, "Largest orbit enumerated explicitly")->check(CLI::PositiveNumber);

  std::string ref;
  std::uint64_t p = 0, n = 0, max_n = 0, max_order = UINT64_MAX;
  std::string suite = "all", extra;

  auto* info = app.add_subcommand("info", "Order, degree and generators of a group");
  info->add_option("group", ref, "builtin:<spec> or file:<path>:<name>")->required();

  auto* sylow = app.add_subcommand("sylow", "Sylow p-subgroup count, normalizer, p-core and kernel");
  sylow->add_option("group", ref, "builtin:<spec> or file:<path>:<name>")->required();
  sylow->add_option("--p", p, "Prime")->required();

  auto* lemmas = app.add_subcommand("lemmas", "Run the lemma suites over the built-in catalog");
  lemmas->add_option("--suite", suite, "centalt, nc, cyc2, brodkey, frobenius or all")
      ->check(CLI::IsMember({"centalt", "nc", "cyc2", "brodkey", "frobenius", "all"}));
  lemmas->add_option("--max-order", max_order, "Skip catalog groups above this order");

  auto* scan = app.add_subcommand("scan", "Classify candidate Sylow p-numbers up to a bound");
  scan->add_option("--p", p, "Prime")->required();
  scan->add_option("--max", max_n, "Largest n")->required();
  scan->add_option("--extra", extra, "File of extra admissible parts, one per line")->check(CLI::ExistingFile);

  auto* prove = app.add_subcommand("prove", "Derive a contradiction (or not) for n Sylow p-subgroups");
  prove->add_option("--p", p, "Prime")->required();
  prove->add_option("--n", n, "Sylow count")->required();

  auto* selftest = app.add_subcommand("selftest", "Run every invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  opt.tsv = tsv ? 1 : 0;

  int exit_status = 0;
  char* text = nullptr;
  swb_status status = SWB_OK;
  const CLI::App* used = app.get_subcommands().front();
  if (*info) status = swb_report_info(ref.c_str(), &opt, &exit_status, &text);
  if (*sylow) status = swb_report_sylow(ref.c_str(), p, &opt, &exit_status, &text);
  if (*lemmas) status = swb_report_lemmas(suite.c_str(), max_order, &opt, &exit_status, &text);
  if (*scan) status = swb_report_scan(p, max_n, extra.empty() ? nullptr : extra.c_str(), &opt, &exit_status, &text);
  if (*prove) status = swb_report_prove(p, n, &opt, &exit_status, &text);
  if (*selftest) status = swb_report_selftest(&opt, &exit_status, &text);
  return finish(status, exit_status, text, *used);
}
