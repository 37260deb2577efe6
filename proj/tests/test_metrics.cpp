#include <doctest.h>

#include "mcpauli/catalog.hpp"
#include "mcpauli/metrics.hpp"

using namespace mcpauli;

namespace {

constexpr QubitId q0 = data_qubit(0);
constexpr QubitId q1 = data_qubit(1);
constexpr QubitId a0 = ancilla_qubit(0);

}  // namespace

TEST_CASE("T-count and CNOT range on a hand-built circuit") {
  CircuitBuilder b(2, 1);
  b.t(q0).tdg(q1).cx(q0, a0).cz(q0, q1).t(a0);
  const auto bit = b.measure(a0);
  b.conditioned(bit, true, Gate::cz(q0, q1));
  b.conditioned(bit, true, Gate::cx(q1, q0));
  b.conditioned(bit, false, Gate::single(GateKind::S, q0));
  const Circuit c = b.build();
  CHECK(t_count(c) == 3);
  CHECK(cnot_count_range(c) == CnotRange{2, 4});
  CHECK(feedback_count(c) == 1);
}

TEST_CASE("T-depth layers parallel T gates and follows dependencies") {
  CircuitBuilder par(3);
  par.t(q0).t(q1).t(data_qubit(2));
  CHECK(t_depth(par.build()) == 1);

  CircuitBuilder chain(2);
  chain.t(q0).cx(q0, q1).t(q1).h(q1).tdg(q1);
  CHECK(t_depth(chain.build()) == 3);

  CircuitBuilder cliff(2);
  cliff.h(q0).cx(q0, q1).s(q1);
  CHECK(t_depth(cliff.build()) == 0);
}

TEST_CASE("conditioned gates wait for their measurement") {
  CircuitBuilder b(2, 1);
  b.t(a0);
  const auto bit = b.measure(a0);
  b.conditioned(bit, true, Gate::single(GateKind::T, q1));
  CHECK(t_depth(b.build()) == 2);
}

TEST_CASE("metrics refuse high-level circuits") {
  CircuitBuilder b(3);
  b.gate(Gate::mcp(PauliAxis::Z, data_qubit(2), {{q0}, {q1}}));
  CHECK_THROWS_AS(t_count(b.build()), std::invalid_argument);
  CHECK_THROWS_AS(resource_report(b.build()), std::invalid_argument);
}

TEST_CASE("catalog circuits match their published resources") {
  for (const auto& e : catalog()) {
    CAPTURE(e.key);
    const auto r = resource_report(e.build());
    const auto& x = e.expected;
    if (x.t_count) CHECK(r.t_count == *x.t_count);
    if (x.cnot_min) CHECK(r.cnot.min == *x.cnot_min);
    if (x.cnot_max) CHECK(r.cnot.max == *x.cnot_max);
    if (x.t_depth) CHECK(r.t_depth == *x.t_depth);
    if (x.ancillas) CHECK(r.ancillas == *x.ancillas);
    if (x.feedback) CHECK(r.feedback == *x.feedback);
  }
}

TEST_CASE("report row and CSV formats") {
  const auto r = resource_report(build_named("cccz-fig1b"));
  CHECK(csv_header() == "name,T,CNOTmin,CNOTmax,Tdepth,anc,fb");
  CHECK(csv_row("cccz-fig1b", r) == "cccz-fig1b,6,12,14,2,1,1");
  const std::string row = format_row("cccz-fig1b", r);
  CHECK(row.find("cccz-fig1b") != std::string::npos);
  CHECK(format_header().find("Tdepth") != std::string::npos);
}
