#include "mcpauli/catalog.hpp"

#include <stdexcept>

#include "mcpauli/decomp.hpp"

namespace mcpauli {

namespace {

constexpr QubitId q0 = data_qubit(0);
constexpr QubitId q1 = data_qubit(1);
constexpr QubitId q2 = data_qubit(2);
constexpr QubitId q3 = data_qubit(3);
constexpr QubitId a0 = ancilla_qubit(0);
constexpr QubitId a1 = ancilla_qubit(1);

Control pos(QubitId q) { return {q, Polarity::positive}; }
Control neg(QubitId q) { return {q, Polarity::negative}; }

Circuit toffoli_standard() {
  CircuitBuilder b(3);
  b.h(q2).cx(q1, q2).tdg(q2).cx(q0, q2).t(q2).cx(q1, q2).tdg(q2).cx(q0, q2);
  b.t(q1).t(q2).cx(q0, q1).h(q2).t(q0).tdg(q1).cx(q0, q1);
  return b.build();
}

Circuit toffoli_tdepth4() {
  CircuitBuilder b(3);
  b.h(q2).cx(q1, q2).tdg(q2).cx(q0, q2).t(q2).cx(q1, q2).t(q1).tdg(q2).cx(q0, q2);
  b.cx(q0, q1).t(q0).tdg(q1).t(q2).cx(q0, q1).h(q2);
  return b.build();
}

Circuit toffoli_amy() {
  CircuitBuilder b(3);
  b.h(q2).t(q0).t(q1).t(q2).cx(q1, q0).cx(q2, q1).cx(q0, q2).tdg(q1).cx(q0, q1);
  b.tdg(q0).tdg(q1).t(q2).cx(q2, q1).cx(q0, q2).cx(q1, q0).h(q2);
  return b.build();
}

Circuit ccz_selinger() {
  CircuitBuilder b(3, 4);
  append_ccz_tdepth1(b, q0, q1, q2, {a0, a1, ancilla_qubit(2), ancilla_qubit(3)});
  return b.build();
}

Circuit cc_minus_ix() {
  CircuitBuilder b(3, 1);
  append_cc_minus_ix(b, q0, q1, q2, a0);
  return b.build();
}

Circuit cc_plus_ix() {
  CircuitBuilder b(3, 1);
  append_cc_plus_ix(b, q0, q1, q2, a0);
  return b.build();
}

Circuit logical_and() {
  CircuitBuilder b(3);
  b.h(q2).t(q2).cx(q1, q2).cx(q0, q2).cx(q2, q0).cx(q2, q1);
  b.tdg(q0).tdg(q1).t(q2);
  b.cx(q2, q0).cx(q2, q1).h(q2).s(q2);
  return b.build();
}

Circuit logical_and_uncompute() {
  CircuitBuilder b(3);
  b.h(q2);
  const auto m = b.measure(q2);
  b.conditioned(m, true, Gate::cz(q0, q1));
  return b.build();
}

Circuit jones_toffoli() {
  CircuitBuilder b(3, 2);
  append_cc_minus_ix(b, q0, q1, a0, a1);
  b.s(a0).cx(a0, q2).h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, true, Gate::cz(q0, q1));
  return b.build();
}

Circuit cccz_gidney() {
  CircuitBuilder b(4, 1);
  b.h(a0).t(a0).cx(q1, a0).tdg(a0).cx(q0, a0).t(a0).cx(q1, a0);
  b.cx(q2, a0).tdg(a0).cx(q3, a0).t(a0).cx(q2, a0).tdg(a0).cx(q3, a0).sxdg(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, false, Gate::cz(q2, q3));
  b.conditioned(m, true, Gate::cz(q0, q1));
  return b.build();
}

Circuit paler_rtof() {
  CircuitBuilder b(3);
  b.h(q2).t(q2).cx(q1, q2).tdg(q2).cx(q0, q2).t(q2).cx(q1, q2).tdg(q2).h(q2);
  return b.build();
}

Circuit toffoli_paler() {
  CircuitBuilder b(3, 1);
  b.h(a0).t(a0).cx(q1, a0).tdg(a0).cx(q0, a0).t(a0).cx(q1, a0).tdg(a0).h(a0);
  b.sdg(a0).cx(a0, q2).h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, true, Gate::cz(q0, q1));
  return b.build();
}

Circuit ccz_paler() {
  CircuitBuilder b(3, 1);
  b.h(a0).t(a0).cx(q2, a0).tdg(a0).cx(q1, a0).t(a0).cx(q2, a0).tdg(a0).cx(q0, a0).s(a0).h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, true, Gate::cz(q1, q2));
  return b.build();
}

Circuit ccz_gidney() {
  CircuitBuilder b(3, 1);
  b.h(a0).t(a0).cx(q2, a0).cx(q1, a0).cx(a0, q1).cx(a0, q2);
  b.tdg(q1).tdg(q2).t(a0);
  b.cx(a0, q1).cx(a0, q2).cx(q0, a0).s(a0).h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, false, Gate::cz(q1, q2));
  return b.build();
}

Circuit ccz_jones() {
  CircuitBuilder b(3, 2);
  b.h(a0).cx(q1, a1).cx(a0, q1).cx(a0, q2).cx(q2, a1);
  b.tdg(q1).tdg(q2).t(a0).t(a1);
  b.cx(q2, a1).cx(a0, q1).cx(a0, q2).cx(q1, a1).cx(q0, a0).s(a0).h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, false, Gate::cz(q1, q2));
  return b.build();
}

Circuit cccz_fig1a() {
  CircuitBuilder b(4, 1);
  b.h(a0).t(a0).cx(q3, a0).tdg(a0).cx(q2, a0).t(a0).cx(q3, a0);
  b.cx(q1, a0).t(a0).cx(q0, a0).tdg(a0).cx(q1, a0).t(a0).h(a0);
  const auto m = b.measure(a0);
  b.cz_polarity_if(m, true, pos(q0), neg(q1));
  b.conditioned(m, true, Gate::cz(q2, q3));
  return b.build();
}

Circuit cccz_fig1a_prime() {
  CircuitBuilder b(4, 1);
  b.h(a0).t(a0).cx(q3, a0).tdg(a0).cx(q2, a0).t(a0).cx(q3, a0).sdg(a0);
  b.cx(q1, a0).tdg(a0).cx(q0, a0).t(a0).cx(q1, a0).tdg(a0).h(a0);
  const auto m = b.measure(a0);
  b.cz_polarity_if(m, true, pos(q0), neg(q1));
  b.conditioned(m, false, Gate::cz(q2, q3));
  return b.build();
}

Circuit cccz_fig1b() {
  CircuitBuilder b(4, 1);
  b.h(a0).cx(a0, q2).cx(a0, q3).tdg(q2).tdg(q3).t(a0).cx(a0, q2).cx(a0, q3);
  b.cx(q3, a0).cx(q2, a0).cx(q1, a0).cx(q0, a0);
  b.cx(a0, q0).cx(a0, q1).tdg(q0).tdg(q1).t(a0).cx(a0, q0).cx(a0, q1).h(a0);
  const auto m = b.measure(a0);
  b.cz_polarity_if(m, true, neg(q0), neg(q1));
  b.conditioned(m, true, Gate::cz(q2, q3));
  return b.build();
}

Circuit cccz_no_advantage() {
  CircuitBuilder b(4, 2);
  b.h(a0);
  b.cx(q2, a1).cx(a0, q2).cx(a0, q3).cx(q3, a1).tdg(q2).tdg(q3).t(a1);
  b.cx(q3, a1).cx(a0, q2).cx(a0, q3).cx(q2, a1);
  b.cx(q1, a1).cx(a0, q0).cx(a0, q1).cx(q0, a1).tdg(q0).tdg(q1).t(a1);
  b.cx(q0, a1).cx(a0, q0).cx(a0, q1).cx(q1, a1);
  b.h(a0);
  const auto m = b.measure(a0);
  b.conditioned(m, true, Gate::cz(q0, q1));
  b.conditioned(m, true, Gate::cz(q2, q3));
  return b.build();
}

Circuit c5z_tree() { return cnz_selinger_logdepth(5, true); }

Circuit cz() {
  CircuitBuilder b(2);
  b.cz(q0, q1);
  return b.build();
}

TargetSpec toffoli_target() { return TargetSpec::mcp(3, PauliAxis::X, 2, {pos(q0), pos(q1)}); }
TargetSpec ccz_target() { return TargetSpec::mcz(2); }
TargetSpec cccz_target() { return TargetSpec::mcz(3); }
TargetSpec c5z_target() { return TargetSpec::mcz(5); }
TargetSpec cz_target() { return TargetSpec::mcz(1); }

TargetSpec cc_ix_target(cplx phase) {
  Matrix u(2, 2);
  u << 0, phase, phase, 0;
  return TargetSpec::controlled(3, u, {0, 1}, {2});
}
TargetSpec cc_minus_ix_target() { return cc_ix_target(cplx(0, -1)); }
TargetSpec cc_plus_ix_target() { return cc_ix_target(cplx(0, 1)); }

TargetSpec logical_and_target() { return toffoli_target().with_promise({0, 2, 4, 6}); }

TargetSpec logical_and_uncompute_target() {
  // |a b t> -> |a b> on inputs with t = a AND b
  Matrix m = Matrix::Zero(4, 8);
  for (Eigen::Index ab = 0; ab < 4; ++ab) m(ab, 2 * ab + (ab == 3 ? 1 : 0)) = 1;
  return TargetSpec::exact(3, m).with_promise({0, 2, 4, 7});
}

// S(q2) CCX S^dagger(q2) CCZ with q1 open
TargetSpec paler_rtof_target() {
  const Matrix ccx = target_matrix(toffoli_target());
  const Matrix ccz_open = target_matrix(TargetSpec::mcp(3, PauliAxis::Z, 2, {pos(q0), neg(q1)}));
  Matrix s = Matrix::Identity(8, 8);
  for (Eigen::Index i = 1; i < 8; i += 2) s(i, i) = cplx(0, 1);
  return TargetSpec::exact(3, s * ccx * s.adjoint() * ccz_open);
}

const CatalogEntry entries[] = {
    {"toffoli-standard", "textbook 7-T Toffoli", "Nielsen & Chuang, Quantum Computation and Quantum Information",
     toffoli_standard, toffoli_target, {7, 6, 6, {}, 0, 0}},
    {"toffoli-tdepth4", "7-T Toffoli rearranged to T-depth 4", "Amy, Maslov, Mosca, Roetteler 2013",
     toffoli_tdepth4, toffoli_target, {7, {}, {}, 4, 0, 0}},
    {"toffoli-amy", "7-T Toffoli with T-depth 3", "Amy, Maslov, Mosca, Roetteler 2013", toffoli_amy, toffoli_target,
     {7, 7, 7, 3, 0, 0}},
    {"ccz-selinger", "CCZ with T-depth 1 using four restored ancillas", "Selinger 2013", ccz_selinger, ccz_target,
     {7, 16, 16, 1, 4, 0}},
    {"cc-minus-ix", "doubly controlled -iX with one restored ancilla", "Selinger 2013", cc_minus_ix,
     cc_minus_ix_target, {4, 8, 8, 1, 1, 0}},
    {"cc-plus-ix", "doubly controlled iX with one restored ancilla", "Selinger 2013", cc_plus_ix, cc_plus_ix_target,
     {4, 8, 8, 1, 1, 0}},
    {"logical-and", "temporary logical AND onto a target known to be |0>", "Gidney 2018", logical_and,
     logical_and_target, {4, {}, {}, {}, 0, 0}},
    {"logical-and-uncompute", "measurement-based uncomputation of a logical AND", "Gidney 2018",
     logical_and_uncompute, logical_and_uncompute_target, {0, 0, 1, 0, 0, 1}},
    {"jones-eq10-toffoli", "Toffoli from a T-count-4 AND and measurement-based uncomputation", "Jones 2013",
     jones_toffoli, toffoli_target, {4, {}, {}, {}, 2, 1}},
    {"cccz-gidney", "CCCZ with one measured ancilla", "Gidney & Jones 2021", cccz_gidney, cccz_target,
     {6, 8, 8, 6, 1, 1}},
    {"paler-rtof", "relative-phase Toffoli with T-count 4", "Paler et al. 2022", paler_rtof, paler_rtof_target,
     {4, 3, 3, {}, 0, 0}},
    {"toffoli-paler", "Toffoli from a relative-phase Toffoli and one measured ancilla", "Paler et al. 2022",
     toffoli_paler, toffoli_target, {4, {}, {}, {}, 1, 1}},
    {"ccz-paler-fig2a", "CCZ, T-count 4, relative-phase AND", "Paler et al. 2022", ccz_paler, ccz_target,
     {4, 4, 5, {}, 1, 1}},
    {"ccz-gidney-fig2b", "CCZ, T-count 4, T-depth 2, logical AND", "Gidney 2018", ccz_gidney, ccz_target,
     {4, {}, {}, 2, 1, 1}},
    {"ccz-jones-fig2c", "CCZ, T-count 4, T-depth 1, extra restored ancilla", "Jones 2013", ccz_jones, ccz_target,
     {4, {}, {}, 1, 2, 1}},
    {"cccz-fig1a", "CCCZ, T-count 6, CNOT 6-8", "original construction", cccz_fig1a, cccz_target, {6, 6, 8, 6, 1, 1}},
    {"cccz-fig1a-prime", "CCCZ, T-count 6, CNOT 7", "original construction", cccz_fig1a_prime, cccz_target,
     {6, 7, 7, 6, 1, 1}},
    {"cccz-fig1b", "CCCZ, T-count 6, T-depth 2", "original construction", cccz_fig1b, cccz_target, {6, 12, 14, 2, 1, 1}},
    {"cccz-no-advantage", "CCCZ from two parallel AND halves, no gain over the others", "original construction",
     cccz_no_advantage, cccz_target, {6, {}, {}, {}, 2, 1}},
    {"c5z-tree", "C5Z from a log-depth tree of CC(-iX) blocks around a T-depth-1 CCZ", "Selinger 2013", c5z_tree,
     c5z_target, {31, 64, 64, 3, {}, 0}},
    {"cz", "controlled-Z, the trivial base", "", cz, cz_target, {0, 1, 1, 0, 0, 0}},
};

}  // namespace

std::span<const CatalogEntry> catalog() { return entries; }

const CatalogEntry* find_entry(std::string_view key) {
  for (const auto& e : entries)
    if (e.key == key) return &e;
  return nullptr;
}

const CatalogEntry& entry(std::string_view key) {
  if (const auto* e = find_entry(key)) return *e;
  throw std::out_of_range("unknown catalog key '" + std::string(key) + "'");
}

Circuit build_named(std::string_view key) { return entry(key).build(); }

}  // namespace mcpauli
