#include "mcpauli/tables.hpp"

#include <cstdio>
#include <sstream>

#include "mcpauli/catalog.hpp"

namespace mcpauli {

std::vector<NamedReport> cccz_table() {
  std::vector<NamedReport> rows;
  rows.push_back({"selinger-logdepth", resource_report(cnz_selinger_logdepth(3, true))});
  rows.push_back({"cz+jones-c", resource_report(cnz_build(3, "cz", AddMethod::jones, Strategy::exhaustive))});
  rows.push_back({"cz+gidney-b", resource_report(cnz_build(3, "cz", AddMethod::gidney, Strategy::exhaustive))});
  for (const char* key : {"cccz-gidney", "cccz-fig1a", "cccz-fig1a-prime", "cccz-fig1b"})
    rows.push_back({key, resource_report(build_named(key))});
  return rows;
}

std::vector<MethodDelta> add_control_table() {
  const Circuit base = build_named("cz");
  const auto before = resource_report(base);
  std::vector<MethodDelta> rows;
  for (auto m : all_methods) {
    const auto after = resource_report(add_control(m, base, 0));
    rows.push_back({m,
                    after.t_count - before.t_count,
                    {after.cnot.min - before.cnot.min, after.cnot.max - before.cnot.max},
                    after.ancillas - before.ancillas,
                    after.feedback - before.feedback});
  }
  return rows;
}

std::vector<CnzFamily> cnz_families() {
  return {
      {"selinger-logdepth", "", AddMethod::selinger},
      {"cz+jones-c", "cz", AddMethod::jones},
      {"cz+gidney-b", "cz", AddMethod::gidney},
      {"cccz-gidney+gidney-b", "cccz-gidney", AddMethod::gidney},
      {"cccz-fig1a+paler-a", "cccz-fig1a", AddMethod::paler},
      {"cccz-fig1a-prime+paler-a", "cccz-fig1a-prime", AddMethod::paler},
      {"cccz-fig1a+gidney-b", "cccz-fig1a", AddMethod::gidney},
      {"cccz-fig1b+gidney-b", "cccz-fig1b", AddMethod::gidney},
      {"cccz-fig1b+jones-c", "cccz-fig1b", AddMethod::jones},
  };
}

Circuit build_family(const CnzFamily& f, int n, Strategy strategy) {
  if (f.base.empty()) return cnz_selinger_logdepth(n, true);
  return cnz_build(n, f.base, f.method, strategy);
}

std::vector<CnzRow> cnz_table(int n_max) {
  std::vector<CnzRow> rows;
  for (int n = 3; n <= n_max; ++n)
    for (const auto& f : cnz_families()) rows.push_back({n, f.label, resource_report(build_family(f, n))});
  return rows;
}

std::vector<ScanRow> tdepth_scan(int n_max) {
  std::vector<ScanRow> rows;
  for (const auto& f : cnz_families()) {
    if (f.base.empty()) continue;
    for (int n = 3; n <= n_max; ++n)
      for (auto s : {Strategy::linear, Strategy::greedy, Strategy::exhaustive})
        rows.push_back({n, f.base, std::string(method_name(f.method)), s, resource_report(build_family(f, n, s))});
  }
  return rows;
}

std::string render_cccz(const std::vector<NamedReport>& rows) {
  std::string out = format_header() + '\n';
  for (const auto& r : rows) out += format_row(r.name, r.report) + '\n';
  return out;
}

std::string render_add_control(const std::vector<MethodDelta>& rows) {
  std::ostringstream out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-14s %4s %8s %8s %5s %4s\n", "method", "dT", "dCNOTmin", "dCNOTmax", "danc", "dfb");
  out << buf;
  for (const auto& r : rows) {
    const auto name = method_name(r.method);
    std::snprintf(buf, sizeof buf, "%-14.*s %4d %8d %8d %5d %4d\n", static_cast<int>(name.size()), name.data(), r.t,
                  r.cnot.min, r.cnot.max, r.ancillas, r.feedback);
    out << buf;
  }
  return out.str();
}

std::string render_cnz(const std::vector<CnzRow>& rows) {
  std::ostringstream out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%3s %-26s %4s %7s %7s %6s %4s %3s\n", "n", "family", "T", "CNOTmin", "CNOTmax",
                "Tdepth", "anc", "fb");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%3d %-26s %4d %7d %7d %6d %4d %3d\n", r.n, r.family.c_str(), r.report.t_count,
                  r.report.cnot.min, r.report.cnot.max, r.report.t_depth, r.report.ancillas, r.report.feedback);
    out << buf;
  }
  return out.str();
}

std::string render_scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = "n,base,method,strategy,t_count,cnot_min,cnot_max,t_depth\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n) + ',' + r.base + ',' + r.method + ',' + std::string(strategy_name(r.strategy)) + ',' +
           std::to_string(r.report.t_count) + ',' + std::to_string(r.report.cnot.min) + ',' +
           std::to_string(r.report.cnot.max) + ',' + std::to_string(r.report.t_depth) + '\n';
  }
  return out;
}

}  // namespace mcpauli
