#pragma once
// Reference model for the tests. Shares no code with the library's simulator or target builder:
// gate matrices, the state update, branch enumeration and the target operators are all written
// out here from their definitions.

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "mcpauli/circuit.hpp"
#include "mcpauli/target.hpp"

namespace oracle {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using Index = Eigen::Index;
using namespace mcpauli;

inline Mat m2(cplx a, cplx b, cplx c, cplx d) {
  Mat m(2, 2);
  m << a, b, c, d;
  return m;
}

inline Mat single_matrix(GateKind k) {
  const double r = 1 / std::sqrt(2.0);
  const cplx i(0, 1);
  const cplx w = std::exp(i * std::numbers::pi / 4.0);
  switch (k) {
    case GateKind::H: return m2(r, r, r, -r);
    case GateKind::T: return m2(1, 0, 0, w);
    case GateKind::Tdg: return m2(1, 0, 0, std::conj(w));
    case GateKind::S: return m2(1, 0, 0, i);
    case GateKind::Sdg: return m2(1, 0, 0, -i);
    case GateKind::X: return m2(0, 1, 1, 0);
    case GateKind::Y: return m2(0, -i, i, 0);
    case GateKind::Z: return m2(1, 0, 0, -1);
    case GateKind::SX: return 0.5 * m2(1.0 + i, 1.0 - i, 1.0 - i, 1.0 + i);
    case GateKind::SXdg: return 0.5 * m2(1.0 - i, 1.0 + i, 1.0 + i, 1.0 - i);
    default: throw std::invalid_argument("oracle: not single-qubit");
  }
}

inline Mat pauli(PauliAxis a) {
  return single_matrix(a == PauliAxis::X ? GateKind::X : a == PauliAxis::Y ? GateKind::Y : GateKind::Z);
}

// Full register, qubit 0 is the most significant bit.
struct Register {
  int n = 0;
  std::uint32_t data = 0;
  int flat(QubitId q) const { return q.reg == mcpauli::Register::data ? int(q.index) : int(data + q.index); }
  Index mask(QubitId q) const { return Index{1} << (n - 1 - flat(q)); }
};

// u on `targets` (first one most significant) when every control matches its polarity
inline void apply(Vec& psi, const Register& r, const Mat& u, const std::vector<QubitId>& targets,
                  const std::vector<Control>& controls) {
  const Index dim = psi.size();
  const int k = int(targets.size());
  std::vector<Index> tmask;
  Index all_t = 0;
  for (auto q : targets) {
    tmask.push_back(r.mask(q));
    all_t |= r.mask(q);
  }
  Vec out = psi;
  for (Index base = 0; base < dim; ++base) {
    if (base & all_t) continue;
    bool on = true;
    for (const auto& c : controls) {
      const bool bit = (base & r.mask(c.qubit)) != 0;
      on = on && (bit == (c.polarity == Polarity::positive));
    }
    if (!on) continue;
    auto idx = [&](Index sub) {
      Index x = base;
      for (int j = 0; j < k; ++j)
        if (sub & (Index{1} << (k - 1 - j))) x |= tmask[j];
      return x;
    };
    for (Index row = 0; row < (Index{1} << k); ++row) {
      cplx acc = 0;
      for (Index col = 0; col < (Index{1} << k); ++col) acc += u(row, col) * psi[idx(col)];
      out[idx(row)] = acc;
    }
  }
  psi = out;
}

inline void apply_gate(Vec& psi, const Register& r, const Gate& g) {
  switch (g.kind) {
    case GateKind::CX: apply(psi, r, single_matrix(GateKind::X), {g.qubits[1]}, {{g.qubits[0]}}); return;
    case GateKind::CZ: apply(psi, r, single_matrix(GateKind::Z), {g.qubits[1]}, {{g.qubits[0]}}); return;
    case GateKind::MCP: apply(psi, r, pauli(g.axis), g.qubits, g.controls); return;
    case GateKind::Unitary: apply(psi, r, *g.matrix, g.qubits, g.controls); return;
    default: apply(psi, r, single_matrix(g.kind), g.qubits, {}); return;
  }
}

struct Channel {
  std::vector<Mat> branches;  // one per outcome string
  double leakage = 0;         // largest norm found on an unmeasured ancilla outside |0>
  int outputs = 0;
};

// Kraus operators over the given input columns (all if empty).
inline Channel channel(const Circuit& c, std::vector<Index> columns = {}) {
  Register r{int(c.total_qubits()), c.data_qubits()};
  if (r.n > 20) throw std::invalid_argument("oracle: too many qubits");
  const Index in_dim = Index{1} << c.data_qubits();
  if (columns.empty())
    for (Index i = 0; i < in_dim; ++i) columns.push_back(i);

  std::vector<QubitId> measured_q;
  for (const auto& ins : c.instructions())
    if (const auto* m = std::get_if<Measure>(&ins)) measured_q.push_back(m->qubit);
  const int m = int(measured_q.size());
  std::vector<bool> measured(r.n, false);
  for (auto q : measured_q) measured[r.flat(q)] = true;
  std::vector<int> out_qubits;
  for (int q = 0; q < int(c.data_qubits()); ++q)
    if (!measured[q]) out_qubits.push_back(q);

  Channel ch;
  ch.outputs = int(out_qubits.size());
  const Index out_dim = Index{1} << ch.outputs;
  for (Index outcome = 0; outcome < (Index{1} << m); ++outcome) {
    Mat k = Mat::Zero(out_dim, Index(columns.size()));
    for (std::size_t col = 0; col < columns.size(); ++col) {
      Vec psi = Vec::Zero(Index{1} << r.n);
      psi[columns[col] << (r.n - c.data_qubits())] = 1;
      std::vector<int> bits(c.classical_bits(), 0);
      int next = 0;
      for (const auto& ins : c.instructions()) {
        if (const auto* g = std::get_if<Gate>(&ins)) {
          apply_gate(psi, r, *g);
        } else if (const auto* me = std::get_if<Measure>(&ins)) {
          const int v = int((outcome >> (m - 1 - next)) & 1);
          ++next;
          for (Index x = 0; x < psi.size(); ++x)
            if (((x & r.mask(me->qubit)) != 0) != (v == 1)) psi[x] = 0;
          bits[me->bit.index] = v;
        } else {
          const auto& cd = std::get<Conditioned>(ins);
          if ((bits[cd.bit.index] == 1) == cd.value) apply_gate(psi, r, cd.gate);
        }
      }
      double leak = 0;
      for (Index x = 0; x < psi.size(); ++x) {
        bool clean = true;
        for (int q = int(c.data_qubits()); q < r.n; ++q)
          if (!measured[q] && (x & (Index{1} << (r.n - 1 - q)))) clean = false;
        if (!clean) {
          leak += std::norm(psi[x]);
          continue;
        }
        Index o = 0;
        for (int q : out_qubits) o = (o << 1) | ((x >> (r.n - 1 - q)) & 1);
        k(o, Index(col)) += psi[x];
      }
      ch.leakage = std::max(ch.leakage, std::sqrt(leak));
    }
    ch.branches.push_back(std::move(k));
  }
  return ch;
}

// diag(1, ..., 1, -1) on n+1 qubits
inline Mat mcz(int n) {
  const Index dim = Index{1} << (n + 1);
  Mat m = Mat::Identity(dim, dim);
  m(dim - 1, dim - 1) = -1;
  return m;
}

// Pauli on `target` when every control matches, by columns
inline Mat multi_controlled_pauli(int qubits, PauliAxis axis, std::uint32_t target, const std::vector<Control>& ctl) {
  const Index dim = Index{1} << qubits;
  auto bit = [&](Index x, std::uint32_t q) { return (x >> (qubits - 1 - int(q))) & 1; };
  const Mat p = pauli(axis);
  Mat m = Mat::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    bool on = true;
    for (const auto& c : ctl) on = on && (bit(x, c.qubit.index) == (c.polarity == Polarity::positive ? 1 : 0));
    if (!on) {
      m(x, x) = 1;
      continue;
    }
    const Index b = bit(x, target);
    const Index flip = Index{1} << (qubits - 1 - int(target));
    for (Index out = 0; out < 2; ++out) {
      const Index y = out == b ? x : (x ^ flip);
      m(y, x) += p(out, b);
    }
  }
  return m;
}

// u on `targets` controlled by `controls`, all positive, by columns
inline Mat controlled(int qubits, const Mat& u, const std::vector<std::uint32_t>& controls,
                      const std::vector<std::uint32_t>& targets) {
  const Index dim = Index{1} << qubits;
  const int k = int(targets.size());
  auto bit = [&](Index x, std::uint32_t q) { return (x >> (qubits - 1 - int(q))) & 1; };
  Mat m = Mat::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    bool on = true;
    for (auto c : controls) on = on && bit(x, c);
    if (!on) {
      m(x, x) = 1;
      continue;
    }
    Index sub = 0, rest = x;
    for (auto t : targets) {
      sub = (sub << 1) | bit(x, t);
      rest &= ~(Index{1} << (qubits - 1 - int(t)));
    }
    for (Index row = 0; row < (Index{1} << k); ++row) {
      Index y = rest;
      for (int j = 0; j < k; ++j)
        if (row & (Index{1} << (k - 1 - j))) y |= Index{1} << (qubits - 1 - int(targets[j]));
      m(y, x) = u(row, sub);
    }
  }
  return m;
}

// Target operator of a TargetSpec, built without the library's target builder.
inline Mat target_of(const TargetSpec& s) {
  switch (s.kind) {
    case TargetSpec::Kind::mcp: return multi_controlled_pauli(s.qubits, s.axis, s.target, s.controls);
    case TargetSpec::Kind::controlled_unitary: return controlled(s.qubits, s.u, s.control_qubits, s.targets);
    case TargetSpec::Kind::matrix: return s.explicit_matrix;
  }
  return {};
}

struct Fit {
  bool ok = false;
  double deviation = 0;
  double weight_error = 0;
  double leakage = 0;
};

// Every branch proportional to the target, weights summing to one, nothing left on the ancillas.
inline Fit fit(const Channel& ch, const Mat& target, double tol = 1e-9) {
  Fit f;
  f.leakage = ch.leakage;
  double weight = 0;
  for (const auto& k : ch.branches) {
    if (k.rows() != target.rows() || k.cols() != target.cols()) return f;
    const cplx coef = (target.adjoint() * k).trace() / (target.adjoint() * target).trace();
    f.deviation = std::max(f.deviation, (k - coef * target).cwiseAbs().maxCoeff());
    weight += std::norm(coef);
  }
  f.weight_error = std::abs(weight - 1);
  f.ok = f.deviation < tol && f.weight_error < tol && f.leakage < tol;
  return f;
}

inline Mat select_columns(const Mat& m, const std::vector<Index>& cols) {
  if (cols.empty()) return m;
  Mat out(m.rows(), Index(cols.size()));
  for (std::size_t i = 0; i < cols.size(); ++i) out.col(Index(i)) = m.col(cols[i]);
  return out;
}

// Checks c against its target entirely inside the reference model.
inline Fit check(const Circuit& c, const TargetSpec& spec, double tol = 1e-9) {
  const std::vector<Index> cols = spec.promised ? *spec.promised : std::vector<Index>{};
  return fit(channel(c, cols), select_columns(target_of(spec), cols), tol);
}

}  // namespace oracle
