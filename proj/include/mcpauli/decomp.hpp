#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcpauli/circuit.hpp"

namespace mcpauli {

// Shared building blocks, appended to a builder.

// CC(-iX) onto `target` with a restored helper ancilla; T-count 4, T-depth 1.
void append_cc_minus_ix(CircuitBuilder& b, QubitId c1, QubitId c2, QubitId target, QubitId aux);
// CC(iX), the inverse of the block above.
void append_cc_plus_ix(CircuitBuilder& b, QubitId c1, QubitId c2, QubitId target, QubitId aux);
// Exact CCZ, T-count 7, T-depth 1, four restored ancillas.
void append_ccz_tdepth1(CircuitBuilder& b, QubitId q0, QubitId q1, QubitId q2, const std::array<QubitId, 4>& anc);

// Ways of adding one control to a circuit that is controlled on some wire.
enum class AddMethod { selinger, jones_toffoli, paler, gidney, jones };

inline constexpr std::array<AddMethod, 5> all_methods = {AddMethod::selinger, AddMethod::jones_toffoli,
                                                        AddMethod::paler, AddMethod::gidney, AddMethod::jones};

// "selinger-eq6", "jones-eq10", "paler-a", "gidney-b", "jones-c"
std::string_view method_name(AddMethod m);
std::optional<AddMethod> parse_method(std::string_view name);
// ancillas introduced per application
int method_ancillas(AddMethod m);
bool method_uses_feedback(AddMethod m);

enum class ControlCheck {
  structural,      // designated wire may only act as a control (CX control, CZ operand, positive MCP control)
  symmetric_base,  // caller vouches the circuit is a C^kZ, which is block diagonal in every wire
};

// Adds a control: the designated data qubit d becomes the first control, a new data qubit
// (index = old data count) the second, and inside the circuit d is replaced by a fresh ancilla
// holding their AND.
Circuit add_control(AddMethod method, const Circuit& inner, std::uint32_t designated,
                    ControlCheck check = ControlCheck::structural);

enum class Strategy { linear, greedy, exhaustive };

std::string_view strategy_name(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view name);

struct CnzBuild {
  Circuit circuit;
  std::vector<std::uint32_t> designations;  // designated qubit at each step
};

// C^nZ from a C^kZ catalog base (k <= n) by n-k applications of `method`.
// linear designates the newest control each time; greedy picks the designation that minimises
// the intermediate T-depth; exhaustive minimises the final T-depth over all sequences.
// Ties go to the lexicographically smallest designation sequence.
CnzBuild cnz_search(int n, std::string_view base, AddMethod method, Strategy strategy);
Circuit cnz_build(int n, std::string_view base, AddMethod method, Strategy strategy);

// Measurement-free C^nZ: pairs of wires are ANDed by CC(-iX) blocks in a tree, the last three
// wires get a T-depth-1 CCZ, then the tree is undone.
// improved: all n+1 wires go into the tree until three are left; otherwise only the first n-1
// wires are reduced to one and the CCZ takes the last two.
Circuit cnz_selinger_logdepth(int n, bool improved = true);

// Turns a Z-target circuit into an X- or Y-target one by conjugating the target qubit.
Circuit convert_pauli(const Circuit& c, std::uint32_t target, PauliAxis axis);

}  // namespace mcpauli
