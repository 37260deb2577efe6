#pragma once

#include <string>
#include <string_view>

#include "mcpauli/circuit.hpp"

namespace mcpauli {

struct CnotRange {
  int min = 0;
  int max = 0;

  friend bool operator==(const CnotRange&, const CnotRange&) = default;
};

// All metrics require a low-level circuit and throw std::invalid_argument otherwise.
int t_count(const Circuit& c);
// CX and CZ both count; conditioned ones count on the outcomes that fire them
CnotRange cnot_count_range(const Circuit& c);
// ASAP layering of the instruction DAG, T/Tdg weighted 1
int t_depth(const Circuit& c);
// measurements whose bit conditions some later gate
int feedback_count(const Circuit& c);

struct ResourceReport {
  int t_count = 0;
  CnotRange cnot;
  int t_depth = 0;
  int ancillas = 0;
  int feedback = 0;
  bool conditioned_t = false;

  friend bool operator==(const ResourceReport&, const ResourceReport&) = default;
};

ResourceReport resource_report(const Circuit& c);

std::string format_row(std::string_view name, const ResourceReport& r);
std::string format_header();
std::string csv_header();
std::string csv_row(std::string_view name, const ResourceReport& r);

}  // namespace mcpauli
