#pragma once

#include <string>
#include <vector>

#include "mcpauli/decomp.hpp"
#include "mcpauli/metrics.hpp"

namespace mcpauli {

struct NamedReport {
  std::string name;
  ResourceReport report;
};

// CCCZ constructions side by side.
std::vector<NamedReport> cccz_table();

// Cost of one add_control application, measured on a CZ base.
struct MethodDelta {
  AddMethod method;
  int t = 0;
  CnotRange cnot;
  int ancillas = 0;
  int feedback = 0;
};
std::vector<MethodDelta> add_control_table();

// A C^nZ family: a base catalog key plus a method, or the log-depth measurement-free tree.
struct CnzFamily {
  std::string label;
  std::string base;  // empty for the tree
  AddMethod method = AddMethod::selinger;
};
std::vector<CnzFamily> cnz_families();
Circuit build_family(const CnzFamily& f, int n, Strategy strategy = Strategy::linear);

struct CnzRow {
  int n = 0;
  std::string family;
  ResourceReport report;
};
std::vector<CnzRow> cnz_table(int n_max);

struct ScanRow {
  int n = 0;
  std::string base;
  std::string method;
  Strategy strategy = Strategy::linear;
  ResourceReport report;
};
// feedback families only, every strategy, n = 3..n_max
std::vector<ScanRow> tdepth_scan(int n_max);

std::string render_cccz(const std::vector<NamedReport>& rows);
std::string render_add_control(const std::vector<MethodDelta>& rows);
std::string render_cnz(const std::vector<CnzRow>& rows);
std::string render_scan_csv(const std::vector<ScanRow>& rows);

}  // namespace mcpauli
