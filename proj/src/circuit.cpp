#include "mcpauli/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcpauli {

Circuit::Circuit(std::uint32_t data_qubits, std::uint32_t ancillas, std::uint32_t classical_bits,
                 std::vector<Instruction> instructions)
    : data_(data_qubits),
      ancillas_(ancillas),
      bits_(classical_bits),
      instructions_(std::make_shared<const std::vector<Instruction>>(std::move(instructions))) {
  if (data_qubits == 0) throw std::invalid_argument("circuit needs at least one data qubit");
}

bool operator==(const Circuit& a, const Circuit& b) {
  return a.data_ == b.data_ && a.ancillas_ == b.ancillas_ && a.bits_ == b.bits_ &&
         *a.instructions_ == *b.instructions_;
}

CircuitBuilder::CircuitBuilder(std::uint32_t data_qubits, std::uint32_t ancillas,
                               std::uint32_t classical_bits)
    : data_(data_qubits), ancillas_(ancillas), bits_(classical_bits) {}

QubitId CircuitBuilder::add_ancilla() { return ancilla_qubit(ancillas_++); }
QubitId CircuitBuilder::add_data_qubit() { return data_qubit(data_++); }
ClassicalBitId CircuitBuilder::add_bit() { return {bits_++}; }

CircuitBuilder& CircuitBuilder::gate(Gate g) {
  instructions_.emplace_back(std::move(g));
  return *this;
}

ClassicalBitId CircuitBuilder::measure(QubitId q) {
  auto bit = add_bit();
  instructions_.emplace_back(Measure{q, bit});
  return bit;
}

CircuitBuilder& CircuitBuilder::measure(QubitId q, ClassicalBitId bit) {
  bits_ = std::max(bits_, bit.index + 1);
  instructions_.emplace_back(Measure{q, bit});
  return *this;
}

CircuitBuilder& CircuitBuilder::conditioned(ClassicalBitId bit, bool value, Gate g) {
  instructions_.emplace_back(Conditioned{bit, value, std::move(g)});
  return *this;
}

CircuitBuilder& CircuitBuilder::instruction(Instruction ins) {
  instructions_.push_back(std::move(ins));
  return *this;
}

CircuitBuilder& CircuitBuilder::cz_polarity(Control a, Control b) {
  for (const auto& c : {a, b})
    if (c.polarity == Polarity::negative) x(c.qubit);
  cz(a.qubit, b.qubit);
  for (const auto& c : {a, b})
    if (c.polarity == Polarity::negative) x(c.qubit);
  return *this;
}

CircuitBuilder& CircuitBuilder::cz_polarity_if(ClassicalBitId bit, bool value, Control a, Control b) {
  for (const auto& c : {a, b})
    if (c.polarity == Polarity::negative) conditioned(bit, value, Gate::single(GateKind::X, c.qubit));
  conditioned(bit, value, Gate::cz(a.qubit, b.qubit));
  for (const auto& c : {a, b})
    if (c.polarity == Polarity::negative) conditioned(bit, value, Gate::single(GateKind::X, c.qubit));
  return *this;
}

Circuit CircuitBuilder::build() const { return Circuit(data_, ancillas_, bits_, instructions_); }

std::string_view issue_name(IssueCode code) {
  switch (code) {
    case IssueCode::qubit_out_of_range: return "qubit out of range";
    case IssueCode::bit_out_of_range: return "classical bit out of range";
    case IssueCode::duplicate_qubit: return "duplicate qubit in gate";
    case IssueCode::bad_arity: return "wrong operand count";
    case IssueCode::unwritten_classical_bit: return "unwritten classical bit";
    case IssueCode::qubit_used_after_measure: return "qubit used after measurement";
  }
  return "?";
}

namespace {

std::size_t expected_arity(const Gate& g) {
  if (is_single_qubit(g.kind) || g.kind == GateKind::MCP) return 1;
  if (g.kind == GateKind::CX || g.kind == GateKind::CZ) return 2;
  return g.qubits.empty() ? 1 : g.qubits.size();
}

}  // namespace

ValidationReport validate(const Circuit& c) {
  ValidationReport report;
  bool high_level = false;
  std::vector<bool> written(c.classical_bits(), false);
  std::vector<bool> measured(c.total_qubits(), false);
  auto issue = [&](std::size_t i, IssueCode code) { report.issues.push_back({i, code}); };

  auto check_gate = [&](std::size_t i, const Gate& g) {
    if (g.kind == GateKind::MCP || g.kind == GateKind::Unitary) high_level = true;
    if (g.qubits.size() != expected_arity(g)) issue(i, IssueCode::bad_arity);
    if (g.kind == GateKind::Unitary && (!g.matrix || g.matrix->rows() != (Eigen::Index{1} << g.qubits.size())))
      issue(i, IssueCode::bad_arity);
    auto support = g.support();
    for (const auto& q : support) {
      if (!c.contains(q)) {
        issue(i, IssueCode::qubit_out_of_range);
        return;
      }
      if (measured[c.flat_index(q)]) issue(i, IssueCode::qubit_used_after_measure);
    }
    std::sort(support.begin(), support.end());
    if (std::adjacent_find(support.begin(), support.end()) != support.end())
      issue(i, IssueCode::duplicate_qubit);
  };

  const auto instrs = c.instructions();
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    const auto& ins = instrs[i];
    if (const auto* g = std::get_if<Gate>(&ins)) {
      check_gate(i, *g);
    } else if (const auto* m = std::get_if<Measure>(&ins)) {
      if (!c.contains(m->qubit)) {
        issue(i, IssueCode::qubit_out_of_range);
      } else {
        const auto flat = c.flat_index(m->qubit);
        if (measured[flat]) issue(i, IssueCode::qubit_used_after_measure);
        measured[flat] = true;
      }
      if (m->bit.index >= c.classical_bits())
        issue(i, IssueCode::bit_out_of_range);
      else
        written[m->bit.index] = true;
    } else {
      const auto& cd = std::get<Conditioned>(ins);
      if (cd.bit.index >= c.classical_bits())
        issue(i, IssueCode::bit_out_of_range);
      else if (!written[cd.bit.index])
        issue(i, IssueCode::unwritten_classical_bit);
      check_gate(i, cd.gate);
    }
  }
  if (!report.issues.empty())
    report.level = ValidityLevel::invalid;
  else if (high_level)
    report.level = ValidityLevel::high_level_ok;
  return report;
}

QubitMap QubitMap::identity(const Circuit& c) {
  QubitMap m;
  for (std::uint32_t i = 0; i < c.data_qubits(); ++i) m.data.push_back(data_qubit(i));
  for (std::uint32_t i = 0; i < c.ancillas(); ++i) m.ancilla.push_back(ancilla_qubit(i));
  return m;
}

Circuit compose(const Circuit& a, const Circuit& b, const QubitMap& map) {
  if (map.data.size() != b.data_qubits() || map.ancilla.size() != b.ancillas())
    throw std::invalid_argument("compose: qubit map does not cover the right-hand circuit");
  std::vector<QubitId> images = map.data;
  images.insert(images.end(), map.ancilla.begin(), map.ancilla.end());
  std::uint32_t data = a.data_qubits();
  std::uint32_t anc = a.ancillas();
  for (const auto& q : images) {
    if (q.reg == Register::data)
      data = std::max(data, q.index + 1);
    else
      anc = std::max(anc, q.index + 1);
  }
  auto sorted = images;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("compose: qubit map is not injective");

  auto f = [&](QubitId q) {
    if (!b.contains(q)) throw std::invalid_argument("compose: right-hand circuit has an out-of-range qubit");
    return q.reg == Register::data ? map.data[q.index] : map.ancilla[q.index];
  };
  std::vector<Instruction> out(a.instructions().begin(), a.instructions().end());
  out.reserve(a.size() + b.size());
  for (const auto& ins : b.instructions()) out.push_back(remap_instruction(ins, f, a.classical_bits()));
  return Circuit(data, anc, a.classical_bits() + b.classical_bits(), std::move(out));
}

Circuit compose(const Circuit& a, const Circuit& b) { return compose(a, b, QubitMap::identity(b)); }

namespace {

Gate inverse_gate(const Gate& g) {
  Gate out = g;
  switch (g.kind) {
    case GateKind::T: out.kind = GateKind::Tdg; break;
    case GateKind::Tdg: out.kind = GateKind::T; break;
    case GateKind::S: out.kind = GateKind::Sdg; break;
    case GateKind::Sdg: out.kind = GateKind::S; break;
    case GateKind::SX: out.kind = GateKind::SXdg; break;
    case GateKind::SXdg: out.kind = GateKind::SX; break;
    case GateKind::Unitary:
      out.matrix = std::make_shared<const Eigen::MatrixXcd>(g.matrix->adjoint());
      out.label = g.label.ends_with("^-1") ? g.label.substr(0, g.label.size() - 3) : g.label + "^-1";
      break;
    default: break;
  }
  return out;
}

}  // namespace

Circuit inverse(const Circuit& c) {
  std::vector<Instruction> out;
  out.reserve(c.size());
  for (auto it = c.instructions().rbegin(); it != c.instructions().rend(); ++it) {
    const auto* g = std::get_if<Gate>(&*it);
    if (!g) throw std::invalid_argument("inverse: circuit contains measurement or classical control");
    out.emplace_back(inverse_gate(*g));
  }
  return Circuit(c.data_qubits(), c.ancillas(), c.classical_bits(), std::move(out));
}

}  // namespace mcpauli
