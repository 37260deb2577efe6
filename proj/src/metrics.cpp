#include "mcpauli/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace mcpauli {

namespace {

void require_low_level(const Circuit& c) {
  auto report = validate(c);
  if (!report.ok()) throw std::invalid_argument("metrics: circuit is invalid");
  if (!report.low_level()) throw std::invalid_argument("metrics: circuit contains high-level gates");
}

bool is_two_qubit(GateKind k) { return k == GateKind::CX || k == GateKind::CZ; }

// index of the measurement whose result each conditioned instruction reads (or -1)
std::vector<int> condition_sources(const Circuit& c, int& measure_count) {
  std::vector<int> last_write(c.classical_bits(), -1);
  std::vector<int> source(c.size(), -1);
  measure_count = 0;
  const auto instrs = c.instructions();
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    if (const auto* m = std::get_if<Measure>(&instrs[i]))
      last_write[m->bit.index] = measure_count++;
    else if (const auto* cd = std::get_if<Conditioned>(&instrs[i]))
      source[i] = last_write[cd->bit.index];
  }
  return source;
}

}  // namespace

int t_count(const Circuit& c) {
  require_low_level(c);
  int n = 0;
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins))
      n += is_t_like(g->kind);
    else if (const auto* cd = std::get_if<Conditioned>(&ins))
      n += is_t_like(cd->gate.kind);
  }
  return n;
}

CnotRange cnot_count_range(const Circuit& c) {
  require_low_level(c);
  int measures = 0;
  const auto source = condition_sources(c, measures);
  if (measures > 20) throw std::invalid_argument("cnot_count_range: more than 20 measurements");

  int base = 0;
  std::vector<std::pair<int, bool>> conditional;  // (measurement, value that fires it)
  const auto instrs = c.instructions();
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    if (const auto* g = std::get_if<Gate>(&instrs[i])) {
      base += is_two_qubit(g->kind);
    } else if (const auto* cd = std::get_if<Conditioned>(&instrs[i])) {
      if (is_two_qubit(cd->gate.kind)) conditional.emplace_back(source[i], cd->value);
    }
  }
  CnotRange r{base, base};
  if (conditional.empty()) return r;
  r.min = std::numeric_limits<int>::max();
  r.max = 0;
  for (std::uint32_t bits = 0; bits < (1u << measures); ++bits) {
    int n = base;
    for (auto [m, v] : conditional) n += (((bits >> m) & 1u) != 0) == v;
    r.min = std::min(r.min, n);
    r.max = std::max(r.max, n);
  }
  return r;
}

int t_depth(const Circuit& c) {
  require_low_level(c);
  std::vector<int> qubit_time(c.total_qubits(), 0);
  std::vector<int> bit_time(c.classical_bits(), 0);
  int depth = 0;

  auto place = [&](const Gate& g, int ready) {
    for (const auto& q : g.qubits) ready = std::max(ready, qubit_time[c.flat_index(q)]);
    const int done = ready + (is_t_like(g.kind) ? 1 : 0);
    for (const auto& q : g.qubits) qubit_time[c.flat_index(q)] = done;
    depth = std::max(depth, done);
  };
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins)) {
      place(*g, 0);
    } else if (const auto* m = std::get_if<Measure>(&ins)) {
      bit_time[m->bit.index] = qubit_time[c.flat_index(m->qubit)];
    } else {
      const auto& cd = std::get<Conditioned>(ins);
      place(cd.gate, bit_time[cd.bit.index]);
    }
  }
  return depth;
}

int feedback_count(const Circuit& c) {
  require_low_level(c);
  int measures = 0;
  const auto source = condition_sources(c, measures);
  std::vector<bool> used(measures, false);
  for (int s : source)
    if (s >= 0) used[s] = true;
  return static_cast<int>(std::count(used.begin(), used.end(), true));
}

ResourceReport resource_report(const Circuit& c) {
  ResourceReport r;
  r.t_count = t_count(c);
  r.cnot = cnot_count_range(c);
  r.t_depth = t_depth(c);
  r.ancillas = static_cast<int>(c.ancillas());
  r.feedback = feedback_count(c);
  for (const auto& ins : c.instructions())
    if (const auto* cd = std::get_if<Conditioned>(&ins); cd && is_t_like(cd->gate.kind)) r.conditioned_t = true;
  return r;
}

std::string format_header() {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-28s %4s %7s %7s %6s %4s %3s", "name", "T", "CNOTmin", "CNOTmax", "Tdepth",
                "anc", "fb");
  return buf;
}

std::string format_row(std::string_view name, const ResourceReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-28.*s %4d %7d %7d %6d %4d %3d%s", static_cast<int>(name.size()), name.data(),
                r.t_count, r.cnot.min, r.cnot.max, r.t_depth, r.ancillas, r.feedback,
                r.conditioned_t ? "  (conditioned T)" : "");
  return buf;
}

std::string csv_header() { return "name,T,CNOTmin,CNOTmax,Tdepth,anc,fb"; }

std::string csv_row(std::string_view name, const ResourceReport& r) {
  return std::string(name) + ',' + std::to_string(r.t_count) + ',' + std::to_string(r.cnot.min) + ',' +
         std::to_string(r.cnot.max) + ',' + std::to_string(r.t_depth) + ',' + std::to_string(r.ancillas) + ',' +
         std::to_string(r.feedback);
}

}  // namespace mcpauli
