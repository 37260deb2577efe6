#include <doctest.h>

#include <random>

#include "mcpauli/catalog.hpp"
#include "mcpauli/linalg.hpp"
#include "mcpauli/simulator.hpp"
#include "mcpauli/target.hpp"
#include "oracle.hpp"

using namespace mcpauli;

namespace {

constexpr QubitId q0 = data_qubit(0);
constexpr QubitId q1 = data_qubit(1);
constexpr QubitId q2 = data_qubit(2);
constexpr QubitId a0 = ancilla_qubit(0);

Circuit random_word(int qubits, int length, std::mt19937_64& rng) {
  static constexpr GateKind kinds[] = {GateKind::H,  GateKind::T, GateKind::Tdg, GateKind::S, GateKind::Sdg,
                                       GateKind::X,  GateKind::Y, GateKind::Z,   GateKind::SX, GateKind::SXdg};
  std::uniform_int_distribution<int> pick(0, 12), wire(0, qubits - 1);
  CircuitBuilder b(static_cast<std::uint32_t>(qubits));
  for (int i = 0; i < length; ++i) {
    const int k = pick(rng);
    const auto a = data_qubit(static_cast<std::uint32_t>(wire(rng)));
    auto c = data_qubit(static_cast<std::uint32_t>(wire(rng)));
    if (k < 10) {
      b.gate(Gate::single(kinds[k], a));
    } else if (a != c) {
      if (k == 10) b.cx(a, c);
      if (k == 11) b.cz(a, c);
      if (k == 12) b.gate(Gate::mcp(PauliAxis::Y, c, {{a, Polarity::negative}}));
    }
  }
  return b.build();
}

}  // namespace

TEST_CASE("mcz_matrix is the diagonal with a single -1") {
  for (int n = 1; n <= 5; ++n) {
    const Matrix m = mcz_matrix(n);
    CHECK(max_abs_diff(m, oracle::mcz(n)) == 0.0);
  }
}

TEST_CASE("unitary_of agrees with the reference model on random words") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const Circuit c = random_word(3, 40, rng);
    const Matrix u = unitary_of(c);
    CHECK(max_abs_diff(u, oracle::channel(c).branches.front()) < 1e-12);
    CHECK(max_abs_diff(u.adjoint() * u, Matrix::Identity(8, 8)) < 1e-12);
  }
}

TEST_CASE("simulate prepares a Bell pair") {
  CircuitBuilder b(2);
  b.h(q0).cx(q0, q1);
  const auto s = simulate(b.build(), StateVector::basis(2, 0), {});
  const double r = 1 / std::sqrt(2.0);
  CHECK(std::abs(s[0] - r) < 1e-12);
  CHECK(std::abs(s[3] - r) < 1e-12);
  CHECK(std::abs(s[1]) < 1e-12);
}

TEST_CASE("simulate projects on the requested outcome without renormalising") {
  CircuitBuilder b(1, 1);
  b.h(q0).cx(q0, a0);
  b.measure(a0);
  const auto s0 = simulate(b.build(), StateVector::basis(1, 0), {0});
  const auto s1 = simulate(b.build(), StateVector::basis(1, 0), {1});
  CHECK(s0.norm() == doctest::Approx(1 / std::sqrt(2.0)));
  CHECK(std::abs(s0[0b00]) > 0.7);
  CHECK(std::abs(s1[0b11]) > 0.7);
  CHECK_THROWS_AS(simulate(b.build(), StateVector::basis(1, 0), {}), std::invalid_argument);
}

TEST_CASE("kraus_of matches the reference model branch by branch") {
  for (const char* key : {"cccz-fig1b", "jones-eq10-toffoli", "ccz-gidney-fig2b", "logical-and-uncompute"}) {
    CAPTURE(key);
    const Circuit c = build_named(key);
    const auto ch = kraus_of(c);
    const auto ref = oracle::channel(c);
    REQUIRE(ch.branches.size() == ref.branches.size());
    for (std::size_t b = 0; b < ref.branches.size(); ++b)
      CHECK(max_abs_diff(ch.branches[b].kraus, ref.branches[b]) < 1e-12);
  }
}

TEST_CASE("a channel with feedback is complete") {
  const auto ch = kraus_of(build_named("cccz-gidney"));
  CHECK(ch.branches.size() == 2);
  CHECK(ch.branches[0].outcome == "0");
  CHECK(max_abs_diff(ch.completeness(), Matrix::Identity(16, 16)) < 1e-12);
  CHECK(ch.leakage < 1e-12);
}

TEST_CASE("an ancilla left dirty shows up as leakage") {
  CircuitBuilder b(2, 1);
  b.cx(q0, a0);
  const auto ch = kraus_of(b.build());
  CHECK(ch.leakage == doctest::Approx(1.0));
  CHECK_THROWS_AS(unitary_of(b.build()), std::invalid_argument);

  const auto v = assert_equiv(b.build(), TargetSpec::exact(2, Matrix::Identity(4, 4)));
  CHECK_FALSE(v.equivalent);
  CHECK(v.leakage > 0.5);
}

TEST_CASE("unitary_of refuses measurements") {
  CHECK_THROWS_AS(unitary_of(build_named("cccz-fig1a")), std::invalid_argument);
}

TEST_CASE("qubit limit") {
  CircuitBuilder b(17);
  b.h(q0);
  CHECK_THROWS_AS(simulate(b.build(), StateVector::basis(17, 0), {}), std::length_error);
  CHECK_THROWS_AS(kraus_of(b.build()), std::length_error);

  // ancillas released early keep a wide circuit under the limit
  const Circuit chain = build_named("c5z-tree");
  CHECK(peak_live_qubits(chain) <= max_simulated_qubits);
}

TEST_CASE("assert_equiv accepts a global phase and rejects a wrong sign") {
  CircuitBuilder b(3);
  b.gate(Gate::mcp(PauliAxis::Z, q2, {{q0}, {q1}}));
  b.x(q0).z(q0).x(q0).z(q0);  // -I
  auto v = assert_equiv(b.build(), TargetSpec::mcz(2));
  CHECK(v.equivalent);
  CHECK(std::abs(v.branches.front().coefficient + 1.0) < 1e-12);

  CircuitBuilder wrong(3);
  wrong.gate(Gate::mcp(PauliAxis::Z, q2, {{q0}, {q1, Polarity::negative}}));
  v = assert_equiv(wrong.build(), TargetSpec::mcz(2));
  CHECK_FALSE(v.equivalent);
  CHECK(v.max_deviation > 0.5);
}

TEST_CASE("assert_equiv rejects branches that are individually fine but differ in phase") {
  // measuring a |+> ancilla and applying Z on outcome 1 to a data qubit: each branch is
  // proportional to a unitary, but not to the same one
  CircuitBuilder b(1, 1);
  b.h(a0);
  const auto bit = b.measure(a0);
  b.conditioned(bit, true, Gate::single(GateKind::Z, q0));
  const auto v = assert_equiv(b.build(), TargetSpec::exact(1, Matrix::Identity(2, 2)));
  CHECK_FALSE(v.equivalent);
}

TEST_CASE("target_matrix agrees with the reference targets") {
  std::mt19937_64 rng(3);
  const Matrix u = random_unitary(4, rng);
  const auto c = TargetSpec::controlled(4, u, {0, 3}, {1, 2});
  CHECK(max_abs_diff(target_matrix(c), oracle::controlled(4, u, {0, 3}, {1, 2})) < 1e-15);
  for (auto axis : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
    const auto s = TargetSpec::mcp(3, axis, 1, {{q2, Polarity::negative}, {q0}});
    CHECK(max_abs_diff(target_matrix(s), oracle::target_of(s)) == 0.0);
  }
}
