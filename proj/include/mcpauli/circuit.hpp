#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mcpauli/gate.hpp"

namespace mcpauli {

// Immutable instruction list over data qubits, ancillas (start in |0>) and classical bits.
// Copies share storage. Structural problems are reported by validate(), not by the constructor.
class Circuit {
 public:
  Circuit(std::uint32_t data_qubits, std::uint32_t ancillas, std::uint32_t classical_bits,
          std::vector<Instruction> instructions = {});

  std::uint32_t data_qubits() const { return data_; }
  std::uint32_t ancillas() const { return ancillas_; }
  std::uint32_t classical_bits() const { return bits_; }
  std::uint32_t total_qubits() const { return data_ + ancillas_; }

  std::span<const Instruction> instructions() const { return *instructions_; }
  std::size_t size() const { return instructions_->size(); }
  bool empty() const { return instructions_->empty(); }

  // data qubits first, then ancillas; flat index 0 is the most significant bit of a basis label
  std::uint32_t flat_index(QubitId q) const {
    return q.reg == Register::data ? q.index : data_ + q.index;
  }
  bool contains(QubitId q) const {
    return q.index < (q.reg == Register::data ? data_ : ancillas_);
  }

  friend bool operator==(const Circuit& a, const Circuit& b);

 private:
  std::uint32_t data_;
  std::uint32_t ancillas_;
  std::uint32_t bits_;
  std::shared_ptr<const std::vector<Instruction>> instructions_;
};

class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::uint32_t data_qubits, std::uint32_t ancillas = 0,
                          std::uint32_t classical_bits = 0);

  QubitId add_ancilla();
  QubitId add_data_qubit();
  ClassicalBitId add_bit();

  CircuitBuilder& gate(Gate g);
  CircuitBuilder& h(QubitId q) { return gate(Gate::single(GateKind::H, q)); }
  CircuitBuilder& t(QubitId q) { return gate(Gate::single(GateKind::T, q)); }
  CircuitBuilder& tdg(QubitId q) { return gate(Gate::single(GateKind::Tdg, q)); }
  CircuitBuilder& s(QubitId q) { return gate(Gate::single(GateKind::S, q)); }
  CircuitBuilder& sdg(QubitId q) { return gate(Gate::single(GateKind::Sdg, q)); }
  CircuitBuilder& x(QubitId q) { return gate(Gate::single(GateKind::X, q)); }
  CircuitBuilder& y(QubitId q) { return gate(Gate::single(GateKind::Y, q)); }
  CircuitBuilder& z(QubitId q) { return gate(Gate::single(GateKind::Z, q)); }
  CircuitBuilder& sxdg(QubitId q) { return gate(Gate::single(GateKind::SXdg, q)); }
  CircuitBuilder& cx(QubitId c, QubitId t) { return gate(Gate::cx(c, t)); }
  CircuitBuilder& cz(QubitId a, QubitId b) { return gate(Gate::cz(a, b)); }

  // measures into a freshly allocated classical bit
  ClassicalBitId measure(QubitId q);
  CircuitBuilder& measure(QubitId q, ClassicalBitId bit);
  CircuitBuilder& conditioned(ClassicalBitId bit, bool value, Gate g);
  CircuitBuilder& instruction(Instruction ins);

  // CZ with open controls realised by X conjugation
  CircuitBuilder& cz_polarity(Control a, Control b);
  CircuitBuilder& cz_polarity_if(ClassicalBitId bit, bool value, Control a, Control b);

  std::uint32_t data_qubits() const { return data_; }
  std::uint32_t ancillas() const { return ancillas_; }
  std::uint32_t classical_bits() const { return bits_; }

  Circuit build() const;

 private:
  std::uint32_t data_;
  std::uint32_t ancillas_;
  std::uint32_t bits_;
  std::vector<Instruction> instructions_;
};

enum class ValidityLevel { invalid, high_level_ok, low_level_ok };

enum class IssueCode {
  qubit_out_of_range,
  bit_out_of_range,
  duplicate_qubit,
  bad_arity,
  unwritten_classical_bit,
  qubit_used_after_measure,
};

std::string_view issue_name(IssueCode code);

struct ValidationIssue {
  std::size_t instruction = 0;
  IssueCode code{};
};

struct ValidationReport {
  ValidityLevel level = ValidityLevel::low_level_ok;
  std::vector<ValidationIssue> issues;

  bool ok() const { return level != ValidityLevel::invalid; }
  bool low_level() const { return level == ValidityLevel::low_level_ok; }
};

ValidationReport validate(const Circuit& c);

// Image of every qubit of the right-hand circuit in the composed circuit.
struct QubitMap {
  std::vector<QubitId> data;
  std::vector<QubitId> ancilla;

  static QubitMap identity(const Circuit& c);
};

// a followed by b. Images beyond a's registers extend them; b's classical bits are appended.
Circuit compose(const Circuit& a, const Circuit& b, const QubitMap& map);
Circuit compose(const Circuit& a, const Circuit& b);

// Reverses a measurement-free circuit and inverts every gate.
Circuit inverse(const Circuit& c);

}  // namespace mcpauli
