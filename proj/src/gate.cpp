#include "mcpauli/gate.hpp"

#include <stdexcept>

namespace mcpauli {

bool is_single_qubit(GateKind k) {
  switch (k) {
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::MCP:
    case GateKind::Unitary:
      return false;
    default:
      return true;
  }
}

bool is_t_like(GateKind k) { return k == GateKind::T || k == GateKind::Tdg; }

std::string_view mnemonic(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::SX: return "sx";
    case GateKind::SXdg: return "sxdg";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::MCP: return "mcp";
    case GateKind::Unitary: return "unitary";
  }
  return "?";
}

Gate Gate::single(GateKind k, QubitId q) {
  if (!is_single_qubit(k)) throw std::invalid_argument("not a single-qubit gate kind");
  Gate g;
  g.kind = k;
  g.qubits = {q};
  return g;
}

Gate Gate::cx(QubitId control, QubitId target) {
  Gate g;
  g.kind = GateKind::CX;
  g.qubits = {control, target};
  return g;
}

Gate Gate::cz(QubitId a, QubitId b) {
  Gate g;
  g.kind = GateKind::CZ;
  g.qubits = {a, b};
  return g;
}

Gate Gate::mcp(PauliAxis axis, QubitId target, std::vector<Control> controls) {
  Gate g;
  g.kind = GateKind::MCP;
  g.qubits = {target};
  g.controls = std::move(controls);
  g.axis = axis;
  return g;
}

Gate Gate::unitary(std::string label, Eigen::MatrixXcd m, std::vector<QubitId> targets,
                   std::vector<Control> controls) {
  const Eigen::Index dim = Eigen::Index{1} << targets.size();
  if (targets.empty() || m.rows() != dim || m.cols() != dim)
    throw std::invalid_argument("unitary gate: matrix size does not match target count");
  Gate g;
  g.kind = GateKind::Unitary;
  g.qubits = std::move(targets);
  g.controls = std::move(controls);
  g.matrix = std::make_shared<const Eigen::MatrixXcd>(std::move(m));
  g.label = std::move(label);
  return g;
}

std::vector<QubitId> Gate::support() const {
  std::vector<QubitId> out = qubits;
  for (const auto& c : controls) out.push_back(c.qubit);
  return out;
}

bool operator==(const Gate& a, const Gate& b) {
  if (a.kind != b.kind || a.qubits != b.qubits || a.controls != b.controls) return false;
  if (a.kind == GateKind::MCP && a.axis != b.axis) return false;
  if (a.kind == GateKind::Unitary) {
    if (a.label != b.label) return false;
    if (a.matrix == b.matrix) return true;
    if (!a.matrix || !b.matrix) return false;
    return *a.matrix == *b.matrix;
  }
  return true;
}

}  // namespace mcpauli
