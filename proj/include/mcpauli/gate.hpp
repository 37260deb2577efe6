#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace mcpauli {

enum class Register : std::uint8_t { data, ancilla };

struct QubitId {
  std::uint32_t index = 0;
  Register reg = Register::data;

  friend auto operator<=>(const QubitId&, const QubitId&) = default;
};

constexpr QubitId data_qubit(std::uint32_t i) { return {i, Register::data}; }
constexpr QubitId ancilla_qubit(std::uint32_t i) { return {i, Register::ancilla}; }

struct ClassicalBitId {
  std::uint32_t index = 0;

  friend auto operator<=>(const ClassicalBitId&, const ClassicalBitId&) = default;
};

enum class Polarity : std::uint8_t { positive, negative };
enum class PauliAxis : std::uint8_t { X, Y, Z };

struct Control {
  QubitId qubit;
  Polarity polarity = Polarity::positive;

  friend bool operator==(const Control&, const Control&) = default;
};

// SX only exists so that inverse() of SXdg is one gate.
enum class GateKind : std::uint8_t { H, T, Tdg, S, Sdg, X, Y, Z, SX, SXdg, CX, CZ, MCP, Unitary };

bool is_single_qubit(GateKind k);
bool is_t_like(GateKind k);
std::string_view mnemonic(GateKind k);

// CX: qubits = {control, target}. CZ: qubits = {a, b}.
// MCP: qubits = {target}, Pauli on `axis` controlled by `controls`.
// Unitary: `matrix` acts on `qubits` (first qubit most significant), controlled by `controls`.
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<QubitId> qubits;
  std::vector<Control> controls;
  PauliAxis axis = PauliAxis::Z;
  std::shared_ptr<const Eigen::MatrixXcd> matrix;
  std::string label;

  static Gate single(GateKind k, QubitId q);
  static Gate cx(QubitId control, QubitId target);
  static Gate cz(QubitId a, QubitId b);
  static Gate mcp(PauliAxis axis, QubitId target, std::vector<Control> controls);
  static Gate unitary(std::string label, Eigen::MatrixXcd m, std::vector<QubitId> targets,
                      std::vector<Control> controls = {});

  // every qubit the gate touches, controls included
  std::vector<QubitId> support() const;

  friend bool operator==(const Gate& a, const Gate& b);
};

struct Measure {
  QubitId qubit;
  ClassicalBitId bit;

  friend bool operator==(const Measure&, const Measure&) = default;
};

struct Conditioned {
  ClassicalBitId bit;
  bool value = true;
  Gate gate;

  friend bool operator==(const Conditioned&, const Conditioned&) = default;
};

using Instruction = std::variant<Gate, Measure, Conditioned>;

// Gate with every qubit passed through f.
template <typename F>
Gate remap_gate(const Gate& g, F&& f) {
  Gate out = g;
  for (auto& q : out.qubits) q = f(q);
  for (auto& c : out.controls) c.qubit = f(c.qubit);
  return out;
}

template <typename F>
Instruction remap_instruction(const Instruction& ins, F&& f, std::uint32_t bit_offset = 0) {
  if (auto* g = std::get_if<Gate>(&ins)) return remap_gate(*g, f);
  if (auto* m = std::get_if<Measure>(&ins)) return Measure{f(m->qubit), {m->bit.index + bit_offset}};
  const auto& c = std::get<Conditioned>(ins);
  return Conditioned{{c.bit.index + bit_offset}, c.value, remap_gate(c.gate, f)};
}

}  // namespace mcpauli
