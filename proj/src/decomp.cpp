#include "mcpauli/decomp.hpp"

#include <stdexcept>

namespace mcpauli {

namespace {

void cc_ix(CircuitBuilder& b, QubitId c1, QubitId c2, QubitId t, QubitId aux, bool minus) {
  b.h(t).cx(t, c2).cx(c1, aux).cx(t, c1).cx(c2, aux);
  if (minus)
    b.tdg(c1).tdg(c2).t(t).t(aux);
  else
    b.t(c1).t(c2).tdg(t).tdg(aux);
  b.cx(c2, aux).cx(t, c1).cx(c1, aux).cx(t, c2).h(t);
}

}  // namespace

void append_cc_minus_ix(CircuitBuilder& b, QubitId c1, QubitId c2, QubitId target, QubitId aux) {
  cc_ix(b, c1, c2, target, aux, true);
}

void append_cc_plus_ix(CircuitBuilder& b, QubitId c1, QubitId c2, QubitId target, QubitId aux) {
  cc_ix(b, c1, c2, target, aux, false);
}

void append_ccz_tdepth1(CircuitBuilder& b, QubitId q0, QubitId q1, QubitId q2, const std::array<QubitId, 4>& anc) {
  const auto [a0, a1, a2, a3] = anc;
  b.cx(q1, a2).cx(q0, a0).cx(q1, a1).cx(q2, a2).cx(a0, a3).cx(q0, a1).cx(q2, a3).cx(a2, a0);
  b.t(q0).t(q1).t(q2).t(a0).tdg(a1).tdg(a2).tdg(a3);
  b.cx(a2, a0).cx(q2, a3).cx(q0, a1).cx(a0, a3).cx(q2, a2).cx(q1, a1).cx(q0, a0).cx(q1, a2);
}

std::string_view method_name(AddMethod m) {
  switch (m) {
    case AddMethod::selinger: return "selinger-eq6";
    case AddMethod::jones_toffoli: return "jones-eq10";
    case AddMethod::paler: return "paler-a";
    case AddMethod::gidney: return "gidney-b";
    case AddMethod::jones: return "jones-c";
  }
  return "?";
}

std::optional<AddMethod> parse_method(std::string_view name) {
  for (auto m : all_methods)
    if (method_name(m) == name) return m;
  return std::nullopt;
}

int method_ancillas(AddMethod m) {
  switch (m) {
    case AddMethod::paler:
    case AddMethod::gidney:
      return 1;
    default:
      return 2;
  }
}

bool method_uses_feedback(AddMethod m) { return m != AddMethod::selinger; }

namespace {

bool control_only(const Gate& g, QubitId d) {
  switch (g.kind) {
    case GateKind::CX:
      return g.qubits[1] != d;
    case GateKind::CZ:
      return true;
    case GateKind::MCP:
    case GateKind::Unitary:
      for (const auto& q : g.qubits)
        if (q == d) return false;
      for (const auto& c : g.controls)
        if (c.qubit == d && c.polarity == Polarity::negative) return false;
      return true;
    default:
      return g.qubits[0] != d;
  }
}

bool touches(const Gate& g, QubitId d) {
  for (const auto& q : g.support())
    if (q == d) return true;
  return false;
}

void check_structural(const Circuit& inner, QubitId d) {
  for (const auto& ins : inner.instructions()) {
    const Gate* g = nullptr;
    if (const auto* m = std::get_if<Measure>(&ins)) {
      if (m->qubit == d) throw std::invalid_argument("add_control: designated wire is measured");
      continue;
    }
    if (const auto* cd = std::get_if<Conditioned>(&ins))
      g = &cd->gate;
    else
      g = &std::get<Gate>(ins);
    if (touches(*g, d) && !control_only(*g, d))
      throw std::invalid_argument("add_control: designated wire is not used purely as a control");
  }
}

void prefix(CircuitBuilder& b, AddMethod m, QubitId c1, QubitId c2, QubitId a, QubitId aux) {
  switch (m) {
    case AddMethod::selinger:
      append_cc_minus_ix(b, c1, c2, a, aux);
      break;
    case AddMethod::jones_toffoli:
      append_cc_minus_ix(b, c1, c2, a, aux);
      b.s(a);
      break;
    case AddMethod::paler:
      b.h(a).t(a).cx(c2, a).tdg(a).cx(c1, a).t(a).cx(c2, a).tdg(a).h(a);
      break;
    case AddMethod::gidney:
      b.h(a).t(a).cx(c2, a).cx(c1, a).cx(a, c1).cx(a, c2);
      b.tdg(c1).tdg(c2).t(a);
      b.cx(a, c1).cx(a, c2).h(a);
      break;
    case AddMethod::jones:
      b.h(a).cx(c1, aux).cx(a, c1).cx(a, c2).cx(c2, aux);
      b.tdg(c1).tdg(c2).t(a).t(aux);
      b.cx(c2, aux).cx(a, c1).cx(a, c2).cx(c1, aux).h(a);
      break;
  }
}

void suffix(CircuitBuilder& b, AddMethod m, QubitId c1, QubitId c2, QubitId a, QubitId aux) {
  if (m == AddMethod::selinger) {
    append_cc_plus_ix(b, c1, c2, a, aux);
    return;
  }
  if (m != AddMethod::jones_toffoli) b.s(a);
  b.h(a);
  const auto bit = b.measure(a);
  b.conditioned(bit, m != AddMethod::paler, Gate::cz(c1, c2));
}

}  // namespace

Circuit add_control(AddMethod method, const Circuit& inner, std::uint32_t designated, ControlCheck check) {
  if (designated >= inner.data_qubits()) throw std::invalid_argument("add_control: designated qubit out of range");
  const QubitId d = data_qubit(designated);
  if (check == ControlCheck::structural) check_structural(inner, d);

  CircuitBuilder b(inner.data_qubits(), inner.ancillas(), inner.classical_bits());
  const QubitId c2 = b.add_data_qubit();
  const QubitId a = b.add_ancilla();
  const QubitId aux = method_ancillas(method) > 1 ? b.add_ancilla() : a;

  prefix(b, method, d, c2, a, aux);
  auto rename = [&](QubitId q) { return q == d ? a : q; };
  for (const auto& ins : inner.instructions()) b.instruction(remap_instruction(ins, rename));
  suffix(b, method, d, c2, a, aux);
  return b.build();
}

std::string_view strategy_name(Strategy s) {
  switch (s) {
    case Strategy::linear: return "linear";
    case Strategy::greedy: return "greedy";
    case Strategy::exhaustive: return "exhaustive";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view name) {
  for (auto s : {Strategy::linear, Strategy::greedy, Strategy::exhaustive})
    if (strategy_name(s) == name) return s;
  return std::nullopt;
}

Circuit convert_pauli(const Circuit& c, std::uint32_t target, PauliAxis axis) {
  if (target >= c.data_qubits()) throw std::invalid_argument("convert_pauli: target out of range");
  const QubitId t = data_qubit(target);
  CircuitBuilder b(c.data_qubits(), c.ancillas(), c.classical_bits());
  if (axis == PauliAxis::Y) b.sdg(t);
  if (axis != PauliAxis::Z) b.h(t);
  for (const auto& ins : c.instructions()) b.instruction(ins);
  if (axis != PauliAxis::Z) b.h(t);
  if (axis == PauliAxis::Y) b.s(t);
  return b.build();
}

}  // namespace mcpauli
