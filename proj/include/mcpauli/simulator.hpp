#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcpauli/circuit.hpp"
#include "mcpauli/linalg.hpp"

namespace mcpauli {

inline constexpr int max_simulated_qubits = 16;

// Amplitudes over `qubits` qubits; qubit 0 is the most significant bit of the index.
class StateVector {
 public:
  explicit StateVector(int qubits);
  StateVector(int qubits, Vector amplitudes);
  static StateVector basis(int qubits, Eigen::Index index);

  int qubits() const { return qubits_; }
  const Vector& amplitudes() const { return amp_; }
  cplx operator[](Eigen::Index i) const { return amp_[i]; }
  double norm() const { return amp_.norm(); }

 private:
  int qubits_;
  Vector amp_;
};

// Runs c on `input` (data qubits only; ancillas start in |0>). Each measurement projects onto the
// matching entry of `outcomes` without renormalising. Returns the state of all data+ancilla qubits.
StateVector simulate(const Circuit& c, const StateVector& input, const std::vector<int>& outcomes);

struct KrausBranch {
  std::string outcome;  // one character per measurement, in program order
  Matrix kraus;         // unmeasured data qubits <- data qubits
};

struct KrausChannel {
  int input_qubits = 0;
  int output_qubits = 0;
  std::vector<KrausBranch> branches;  // all 2^m outcomes in lexicographic order
  double leakage = 0;                 // largest norm left outside |0> on restored ancillas

  // sum_b K_b^dagger K_b
  Matrix completeness() const;
};

// Kraus operators of c with measured qubits contracted against their outcome and unmeasured ancillas
// projected onto |0>. `columns` restricts the inputs that are simulated; the rest stay zero.
KrausChannel kraus_of(const Circuit& c, const std::optional<std::vector<Eigen::Index>>& columns = std::nullopt);

// Unitary of a measurement-free circuit with all ancillas restored; throws otherwise.
Matrix unitary_of(const Circuit& c, double tol = 1e-9);

// Largest number of qubits held at once when ancillas are allocated at first use and
// dropped after their last use.
int peak_live_qubits(const Circuit& c);

}  // namespace mcpauli
