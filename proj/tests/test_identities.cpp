#include <doctest.h>

#include "mcpauli/identities.hpp"
#include "mcpauli/target.hpp"

using namespace mcpauli;

namespace {

constexpr QubitId q0 = data_qubit(0);
constexpr QubitId q1 = data_qubit(1);
constexpr QubitId q2 = data_qubit(2);

}  // namespace

TEST_CASE("thirteen identities, each holding on 100 samples") {
  REQUIRE(identities().size() == 13);
  for (const auto& id : identities()) {
    CAPTURE(id.key);
    const auto v = verify_identity(id.key, 11, 100);
    CHECK(v.holds);
    CHECK(v.samples == 100);
    CHECK(v.max_deviation < 1e-9);
  }
}

TEST_CASE("only the phase-before-measurement identity needs a phase") {
  for (const auto& id : identities()) {
    CAPTURE(id.key);
    CHECK(verify_identity(id.key, 5, 10).exact_phase == (id.key != "phase-measure"));
  }
}

TEST_CASE("identity verdicts are deterministic in the seed") {
  const auto a = verify_identity("key-equation", 42, 20);
  const auto b = verify_identity("key-equation", 42, 20);
  CHECK(a.max_deviation == b.max_deviation);
  CHECK(a.comparisons == b.comparisons);
  CHECK_THROWS_AS(verify_identity("no-such-identity"), std::out_of_range);
}

// negative controls: the comparison used by the identity suite must notice real differences
TEST_CASE("compare_circuits tells different circuits apart") {
  SUBCASE("CCZ against CCZ with an open control") {
    CircuitBuilder a(3), b(3);
    a.gate(Gate::mcp(PauliAxis::Z, q2, {{q0}, {q1}}));
    b.gate(Gate::mcp(PauliAxis::Z, q2, {{q0}, {q1, Polarity::negative}}));
    CHECK_FALSE(compare_circuits(a.build(), b.build(), std::nullopt).equal);
  }
  SUBCASE("S against T") {
    CircuitBuilder a(1), b(1);
    a.s(q0);
    b.t(q0);
    CHECK_FALSE(compare_circuits(a.build(), b.build(), std::nullopt).equal);
  }
  SUBCASE("measure-and-correct on the wrong outcome") {
    CircuitBuilder a(2), b(2);
    a.cz(q0, q1);
    a.measure(q0);
    const auto bit = b.measure(q0);
    b.conditioned(bit, false, Gate::single(GateKind::Z, q1));
    CHECK_FALSE(compare_circuits(a.build(), b.build(), std::nullopt).equal);
  }
  SUBCASE("phase before measurement is harmless, before a Hadamard it is not") {
    CircuitBuilder a(1), b(1), c(1);
    a.t(q0);
    a.measure(q0);
    b.measure(q0);
    CHECK(compare_circuits(a.build(), b.build(), std::nullopt).equal);
    c.t(q0).h(q0);
    c.measure(q0);
    CircuitBuilder d(1);
    d.h(q0);
    d.measure(q0);
    CHECK_FALSE(compare_circuits(c.build(), d.build(), std::nullopt).equal);
  }
  SUBCASE("a promise restricts the comparison") {
    CircuitBuilder a(2), b(2);
    a.cz(q0, q1);
    CHECK_FALSE(compare_circuits(a.build(), b.build(), std::nullopt).equal);
    CHECK(compare_circuits(a.build(), b.build(), std::vector<Eigen::Index>{0, 1}).equal);
  }
}
