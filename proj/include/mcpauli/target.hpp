#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcpauli/circuit.hpp"
#include "mcpauli/linalg.hpp"

namespace mcpauli {

// What a decomposition is supposed to implement on its data register.
struct TargetSpec {
  enum class Kind { mcp, controlled_unitary, matrix };

  Kind kind = Kind::mcp;
  int qubits = 0;  // input register size

  // mcp: Pauli `axis` on `target` controlled by `controls`
  std::vector<Control> controls;
  std::uint32_t target = 0;
  PauliAxis axis = PauliAxis::Z;

  // controlled_unitary: `u` on `targets`, controlled (positively) by `control_qubits`
  Matrix u;
  std::vector<std::uint32_t> control_qubits;
  std::vector<std::uint32_t> targets;

  // matrix: explicit operator, output rows x 2^qubits columns
  Matrix explicit_matrix;

  // when set, only these input basis states are compared
  std::optional<std::vector<Eigen::Index>> promised;

  static TargetSpec mcz(int n);
  static TargetSpec mcp(int qubits, PauliAxis axis, std::uint32_t target, std::vector<Control> controls);
  static TargetSpec controlled(int qubits, Matrix u, std::vector<std::uint32_t> controls,
                               std::vector<std::uint32_t> targets);
  static TargetSpec exact(int qubits, Matrix m);

  TargetSpec with_promise(std::vector<Eigen::Index> columns) const;
  std::string describe() const;
};

// Dense operator built directly from the definition, never through the simulator.
Matrix target_matrix(const TargetSpec& spec);

struct BranchFit {
  std::string outcome;
  cplx coefficient;   // K_b ~ coefficient * target
  double deviation = 0;
};

struct EquivalenceVerdict {
  bool equivalent = false;
  double max_deviation = 0;
  double leakage = 0;
  double weight_error = 0;  // |sum_b |c_b|^2 - 1|
  std::vector<BranchFit> branches;  // nonzero branches only
  std::string reason;
};

// Per-branch comparison up to a branch coefficient; the coefficients must have squared
// magnitudes summing to one and every restored ancilla must come back to |0>.
EquivalenceVerdict assert_equiv(const Circuit& c, const TargetSpec& spec, double tol = 1e-9);

struct ChannelComparison {
  bool equal = false;
  bool exact = false;       // equal with every branch phase 1
  bool per_branch = false;  // false: compared as outcome-summed channels
  double deviation = 0;
  cplx phase{1, 0};         // phase of the first nonzero branch
};

// Compares two circuits over the same data register. Matching measurement counts compare
// branch by branch up to phase; otherwise the outcome-summed channels are compared via their
// Choi matrices.
ChannelComparison compare_circuits(const Circuit& lhs, const Circuit& rhs,
                                   const std::optional<std::vector<Eigen::Index>>& columns, double tol = 1e-9);

}  // namespace mcpauli
