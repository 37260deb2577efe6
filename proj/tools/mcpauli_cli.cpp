#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mcpauli/catalog.hpp"
#include "mcpauli/identities.hpp"
#include "mcpauli/metrics.hpp"
#include "mcpauli/tables.hpp"
#include "mcpauli/text_format.hpp"

using namespace mcpauli;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << '\n';
  return exit_usage;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

int cmd_list() {
  for (const auto& e : catalog()) {
    std::printf("%-24.*s %.*s\n", static_cast<int>(e.key.size()), e.key.data(), static_cast<int>(e.description.size()),
                e.description.data());
  }
  return exit_ok;
}

int cmd_build(const std::string& key, const std::string& out) {
  const auto* e = find_entry(key);
  if (!e) return usage_error("unknown catalog key '" + key + "'");
  const auto text = serialize(e->build());
  if (out.empty()) {
    std::cout << text;
  } else if (!write_file(out, text)) {
    return usage_error("cannot write " + out);
  }
  return exit_ok;
}

int cmd_verify(const std::string& key, double tol) {
  const auto* e = find_entry(key);
  if (!e) return usage_error("unknown catalog key '" + key + "'");
  const auto v = assert_equiv(e->build(), e->target(), tol);
  if (v.equivalent) {
    std::printf("equivalent (%zu branches, leakage %.1e, max deviation %.1e)\n", v.branches.size(), v.leakage,
                v.max_deviation);
    return exit_ok;
  }
  std::printf("NOT equivalent: %s (leakage %.1e, max deviation %.1e, weight error %.1e)\n", v.reason.c_str(),
              v.leakage, v.max_deviation, v.weight_error);
  return exit_failed;
}

int cmd_report(const std::string& key) {
  const auto* e = find_entry(key);
  if (!e) return usage_error("unknown catalog key '" + key + "'");
  std::cout << format_header() << '\n' << format_row(e->key, resource_report(e->build())) << '\n';
  return exit_ok;
}

int cmd_table(const std::string& which, int n_max) {
  if (which == "cccz")
    std::cout << render_cccz(cccz_table());
  else if (which == "cadd")
    std::cout << render_add_control(add_control_table());
  else
    std::cout << render_cnz(cnz_table(n_max));
  return exit_ok;
}

int cmd_scan(int n_max, const std::string& out) {
  const auto csv = render_scan_csv(tdepth_scan(n_max));
  if (!write_file(out, csv)) return usage_error("cannot write " + out);
  std::cout << "wrote " << out << '\n';
  return exit_ok;
}

int cmd_identities(std::uint64_t seed, int samples) {
  bool all = true;
  for (const auto& id : identities()) {
    const auto v = verify_identity(id.key, seed, samples);
    all = all && v.holds;
    std::printf("%-4s %-22.*s samples=%d max_dev=%.1e%s\n", v.holds ? "ok" : "FAIL", static_cast<int>(id.key.size()),
                id.key.data(), v.samples, v.max_deviation, v.exact_phase ? "" : " (up to phase)");
  }
  return all ? exit_ok : exit_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-controlled Pauli decompositions: build, verify and cost them"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list catalog keys");

  std::string key, out;
  auto* build = app.add_subcommand("build", "print a catalog circuit in text form");
  build->add_option("key", key, "catalog key")->required();
  build->add_option("--out", out, "write to file instead of stdout");

  double tol = 1e-9;
  auto* verify = app.add_subcommand("verify", "check a catalog circuit against its target");
  verify->add_option("key", key, "catalog key")->required();
  verify->add_option("--tol", tol, "tolerance")->check(CLI::PositiveNumber);

  auto* report = app.add_subcommand("report", "resource counts of a catalog circuit");
  report->add_option("key", key, "catalog key")->required();

  std::string which;
  int n_max = 8;
  auto* table = app.add_subcommand("table", "print a comparison table");
  table->add_option("which", which, "cccz | cadd | cnz")->required()->check(CLI::IsMember({"cccz", "cadd", "cnz"}));
  table->add_option("--n-max", n_max, "largest n for the cnz table")->check(CLI::Range(3, 12));

  auto* scan = app.add_subcommand("tdepth-scan", "T-depth of every feedback family and strategy as CSV");
  scan->add_option("--n-max", n_max, "largest n")->required()->check(CLI::Range(3, 9));
  scan->add_option("--out", out, "CSV file")->required();

  std::uint64_t seed = 1;
  int samples = 100;
  auto* ids = app.add_subcommand("identities", "check the circuit identities on random samples");
  ids->add_option("--seed", seed, "random seed");
  ids->add_option("--samples", samples, "samples per identity")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*list) return cmd_list();
    if (*build) return cmd_build(key, out);
    if (*verify) return cmd_verify(key, tol);
    if (*report) return cmd_report(key);
    if (*table) return cmd_table(which, n_max);
    if (*scan) return cmd_scan(n_max, out);
    if (*ids) return cmd_identities(seed, samples);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}
