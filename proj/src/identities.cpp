#include "mcpauli/identities.hpp"

#include <functional>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "mcpauli/catalog.hpp"
#include "mcpauli/decomp.hpp"
#include "mcpauli/target.hpp"

namespace mcpauli {

namespace {

using Rng = std::mt19937_64;
using Columns = std::optional<std::vector<Eigen::Index>>;

struct Case {
  Circuit lhs;
  Circuit rhs;
  Columns columns;
};

constexpr QubitId q0 = data_qubit(0);
constexpr QubitId q1 = data_qubit(1);
constexpr QubitId q2 = data_qubit(2);

Control pos(QubitId q) { return {q, Polarity::positive}; }

Matrix phase_matrix(double theta) {
  Matrix p = Matrix::Identity(2, 2);
  p(1, 1) = std::polar(1.0, theta);
  return p;
}

double random_angle(Rng& rng) { return std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng); }

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<QubitId> range(int from, int count) {
  std::vector<QubitId> out;
  for (int i = 0; i < count; ++i) out.push_back(data_qubit(from + i));
  return out;
}

std::vector<Control> positive(const std::vector<QubitId>& qs) {
  std::vector<Control> out;
  for (auto q : qs) out.push_back(pos(q));
  return out;
}

// columns whose bits on the leading `zeros` qubits are 0
std::vector<Eigen::Index> leading_zero_columns(int qubits, int zeros) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < (Eigen::Index{1} << (qubits - zeros)); ++i) out.push_back(i);
  return out;
}

Gate ccx() { return Gate::mcp(PauliAxis::X, q2, {pos(q0), pos(q1)}); }
Gate ccz(Polarity p0, Polarity p1) { return Gate::mcp(PauliAxis::Z, q2, {{q0, p0}, {q1, p1}}); }

// rhs1: ccz, a, ccx, b    rhs2: c, ccx, d, ccz   (time order)
std::vector<Case> relative_toffoli(const Circuit& lhs, Gate cz_gate, GateKind a, GateKind b, GateKind c, GateKind d) {
  CircuitBuilder r1(3), r2(3);
  r1.gate(cz_gate).gate(Gate::single(a, q2)).gate(ccx()).gate(Gate::single(b, q2));
  r2.gate(Gate::single(c, q2)).gate(ccx()).gate(Gate::single(d, q2)).gate(cz_gate);
  return {{lhs, r1.build(), {}}, {lhs, r2.build(), {}}};
}

std::vector<Case> pauli_conversion(Rng& rng) {
  const int n = pick(rng, 1, 3);
  std::vector<Case> out;
  for (auto axis : {PauliAxis::X, PauliAxis::Y}) {
    CircuitBuilder direct(n + 1), via_z(n + 1);
    const auto controls = positive(range(0, n));
    direct.gate(Gate::mcp(axis, data_qubit(n), controls));
    via_z.gate(Gate::mcp(PauliAxis::Z, data_qubit(n), controls));
    out.push_back({direct.build(), convert_pauli(via_z.build(), n, axis), {}});
  }
  return out;
}

std::vector<Case> ket0_phase(Rng& rng) {
  CircuitBuilder lhs(2);
  lhs.gate(Gate::unitary("P", phase_matrix(random_angle(rng)), {q0}));
  return {{lhs.build(), CircuitBuilder(2).build(), leading_zero_columns(2, 1)}};
}

std::vector<Case> ket0_control(Rng& rng) {
  const int m = pick(rng, 1, 2);
  CircuitBuilder lhs(m + 1);
  lhs.gate(Gate::unitary("U", random_unitary(Eigen::Index{1} << m, rng), range(1, m), {pos(q0)}));
  return {{lhs.build(), CircuitBuilder(m + 1).build(), leading_zero_columns(m + 1, 1)}};
}

std::vector<Case> phase_measure(Rng& rng) {
  CircuitBuilder lhs(2), rhs(2);
  lhs.gate(Gate::unitary("P", phase_matrix(random_angle(rng)), {q0}));
  lhs.measure(q0);
  rhs.measure(q0);
  return {{lhs.build(), rhs.build(), {}}};
}

std::vector<Case> control_measure(Rng& rng, bool open) {
  const int m = pick(rng, 1, 2);
  const Matrix u = random_unitary(Eigen::Index{1} << m, rng);
  CircuitBuilder lhs(m + 1), rhs(m + 1);
  if (open) lhs.x(q0);
  lhs.gate(Gate::unitary("U", u, range(1, m), {pos(q0)}));
  if (open) lhs.x(q0);
  lhs.measure(q0);
  const auto bit = rhs.measure(q0);
  rhs.conditioned(bit, !open, Gate::unitary("U", u, range(1, m)));
  return {{lhs.build(), rhs.build(), {}}};
}

std::vector<Case> rtof_1a(Rng&) {
  return relative_toffoli(build_named("paler-rtof"), ccz(Polarity::positive, Polarity::negative), GateKind::Sdg,
                          GateKind::S, GateKind::Sdg, GateKind::S);
}

std::vector<Case> rtof_1b(Rng&) {
  CircuitBuilder lhs(3);
  lhs.h(q2).tdg(q2).cx(q1, q2).t(q2).cx(q0, q2).tdg(q2).cx(q1, q2).t(q2).h(q2);
  return relative_toffoli(lhs.build(), ccz(Polarity::positive, Polarity::negative), GateKind::S, GateKind::Sdg,
                          GateKind::S, GateKind::Sdg);
}

std::vector<Case> rtof_2a(Rng&) {
  CircuitBuilder lhs(3);
  lhs.h(q2).t(q2).cx(q1, q2).cx(q0, q2).cx(q2, q0).cx(q2, q1);
  lhs.tdg(q0).tdg(q1).t(q2).cx(q2, q0).cx(q2, q1).h(q2);
  return relative_toffoli(lhs.build(), ccz(Polarity::negative, Polarity::negative), GateKind::Sdg, GateKind::Sdg,
                          GateKind::Sdg, GateKind::Sdg);
}

std::vector<Case> rtof_2b(Rng&) {
  CircuitBuilder lhs(3);
  lhs.h(q2).cx(q2, q0).cx(q2, q1).tdg(q0).tdg(q1).t(q2);
  lhs.cx(q2, q0).cx(q2, q1).cx(q0, q2).cx(q1, q2).t(q2).h(q2);
  return relative_toffoli(lhs.build(), ccz(Polarity::negative, Polarity::negative), GateKind::Sdg, GateKind::Sdg,
                          GateKind::Sdg, GateKind::Sdg);
}

std::vector<Case> rtof_3(Rng&) {
  return relative_toffoli(build_named("cc-minus-ix"), ccz(Polarity::positive, Polarity::positive), GateKind::S,
                          GateKind::Sdg, GateKind::Sdg, GateKind::S);
}

// m-qubit register first, then the n controls
std::vector<Case> key_equation(Rng& rng) {
  const int m = pick(rng, 1, 2);
  const int n = pick(rng, 1, 3);
  const Matrix u = random_unitary(Eigen::Index{1} << m, rng);
  const auto reg = range(0, m);
  const auto ctl = range(m, n);
  const std::vector<Control> rest = positive({ctl.begin(), ctl.end() - 1});

  CircuitBuilder lhs(m + n, 1), rhs(m + n);
  const QubitId anc = ancilla_qubit(0);
  lhs.gate(Gate::mcp(PauliAxis::X, anc, positive(ctl)));
  lhs.gate(Gate::unitary("U", u, reg, {pos(anc)}));
  lhs.h(anc);
  const auto bit = lhs.measure(anc);
  lhs.conditioned(bit, true, Gate::mcp(PauliAxis::Z, ctl.back(), rest));
  rhs.gate(Gate::unitary("U", u, reg, positive(ctl)));
  return {{lhs.build(), rhs.build(), {}}};
}

std::vector<Case> key_equation_variant(Rng& rng) {
  const int m = pick(rng, 1, 2);
  const int n = pick(rng, 1, 3);
  const auto reg = range(0, m);
  const auto ctl = range(m, n);
  const std::vector<Control> rest = positive({ctl.begin(), ctl.end() - 1});

  CircuitBuilder lhs(m + n, 1), rhs(m + n);
  const QubitId anc = ancilla_qubit(0);
  lhs.gate(Gate::mcp(PauliAxis::X, anc, positive(ctl)));
  lhs.h(anc).x(anc);
  lhs.gate(Gate::mcp(PauliAxis::X, anc, positive(reg)));
  const auto bit = lhs.measure(anc);
  lhs.conditioned(bit, false, Gate::mcp(PauliAxis::Z, ctl.back(), rest));
  auto all = range(0, m + n - 1);
  rhs.gate(Gate::mcp(PauliAxis::Z, data_qubit(m + n - 1), positive(all)));
  return {{lhs.build(), rhs.build(), {}}};
}

struct Entry {
  IdentityInfo info;
  std::function<std::vector<Case>(Rng&)> cases;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = {
      {{"pauli-conversion", "C^nX = H C^nZ H and C^nY = (H S^dag)^dag C^nZ (H S^dag) on the target", true},
       pauli_conversion},
      {{"ket0-phase", "a phase gate on a qubit known to be |0> does nothing", true}, ket0_phase},
      {{"ket0-control", "a gate controlled by a qubit known to be |0> does nothing", true}, ket0_control},
      {{"phase-measure", "a phase gate right before a Z measurement does nothing", true}, phase_measure},
      {{"control-measure", "controlled-U then measuring the control = measure, then classically controlled U", true},
       [](Rng& r) { return control_measure(r, false); }},
      {{"controlo-measure", "open-controlled U then measuring the control = measure, then U on outcome 0", true},
       [](Rng& r) { return control_measure(r, true); }},
      {{"rtof-1a", "T-count-4 relative Toffoli = CCZ(q1 open) Sdg CCX S, either order", false}, rtof_1a},
      {{"rtof-1b", "its conjugate = CCZ(q1 open) S CCX Sdg, either order", false}, rtof_1b},
      {{"rtof-2a", "logical-AND core = CCZ(both open) Sdg CCX Sdg, either order", false}, rtof_2a},
      {{"rtof-2b", "mirrored logical-AND core, same right-hand side", false}, rtof_2b},
      {{"rtof-3", "CC(-iX) block = CCZ S CCX Sdg, either order", false}, rtof_3},
      {{"key-equation",
        "C^nX onto an ancilla, ancilla-controlled U, X-measurement with C^(n-1)Z fix-up = n-controlled U", true},
       key_equation},
      {{"key-equation-variant", "AND of two registers through one measured ancilla = C^(m+n-1)Z", true},
       key_equation_variant},
  };
  return list;
}

}  // namespace

std::span<const IdentityInfo> identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> out;
    for (const auto& e : entries()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

IdentityVerdict verify_identity(std::string_view key, std::uint64_t seed, int samples, double tol) {
  const Entry* found = nullptr;
  for (const auto& e : entries())
    if (e.info.key == key) found = &e;
  if (!found) throw std::out_of_range("unknown identity '" + std::string(key) + "'");

  IdentityVerdict v;
  v.key = std::string(key);
  v.holds = true;
  v.exact_phase = true;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    for (const auto& c : found->cases(rng)) {
      const auto r = compare_circuits(c.lhs, c.rhs, c.columns, tol);
      v.holds = v.holds && r.equal;
      v.exact_phase = v.exact_phase && r.exact;
      v.max_deviation = std::max(v.max_deviation, r.deviation);
      ++v.comparisons;
    }
    ++v.samples;
  }
  return v;
}

}  // namespace mcpauli
