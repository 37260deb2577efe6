#include "mcpauli/target.hpp"

#include <sstream>
#include <stdexcept>

#include "mcpauli/simulator.hpp"

namespace mcpauli {

using Index = Eigen::Index;

Matrix mcz_matrix(int n) {
  if (n < 0 || n + 1 > 12) throw std::invalid_argument("mcz_matrix: need 0 <= n <= 11");
  const Index dim = Index{1} << (n + 1);
  Matrix m = Matrix::Identity(dim, dim);
  m(dim - 1, dim - 1) = -1;
  return m;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

TargetSpec TargetSpec::mcz(int n) {
  std::vector<Control> controls;
  for (int i = 0; i < n; ++i) controls.push_back({data_qubit(i), Polarity::positive});
  return mcp(n + 1, PauliAxis::Z, static_cast<std::uint32_t>(n), std::move(controls));
}

TargetSpec TargetSpec::mcp(int qubits, PauliAxis axis, std::uint32_t target, std::vector<Control> controls) {
  TargetSpec s;
  s.kind = Kind::mcp;
  s.qubits = qubits;
  s.axis = axis;
  s.target = target;
  s.controls = std::move(controls);
  return s;
}

TargetSpec TargetSpec::controlled(int qubits, Matrix u, std::vector<std::uint32_t> controls,
                                  std::vector<std::uint32_t> targets) {
  if (u.rows() != (Index{1} << targets.size()) || u.cols() != u.rows())
    throw std::invalid_argument("controlled target: matrix size does not match target count");
  TargetSpec s;
  s.kind = Kind::controlled_unitary;
  s.qubits = qubits;
  s.u = std::move(u);
  s.control_qubits = std::move(controls);
  s.targets = std::move(targets);
  return s;
}

TargetSpec TargetSpec::exact(int qubits, Matrix m) {
  if (m.cols() != (Index{1} << qubits)) throw std::invalid_argument("explicit target: column count mismatch");
  TargetSpec s;
  s.kind = Kind::matrix;
  s.qubits = qubits;
  s.explicit_matrix = std::move(m);
  return s;
}

TargetSpec TargetSpec::with_promise(std::vector<Index> columns) const {
  TargetSpec s = *this;
  s.promised = std::move(columns);
  return s;
}

std::string TargetSpec::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::mcp:
      out << "C^" << controls.size() << ("XYZ"[static_cast<int>(axis)]) << " on " << qubits << " qubits";
      break;
    case Kind::controlled_unitary:
      out << control_qubits.size() << "-controlled " << targets.size() << "-qubit unitary";
      break;
    case Kind::matrix:
      out << explicit_matrix.rows() << "x" << explicit_matrix.cols() << " operator";
      break;
  }
  if (promised) out << " (promised inputs only)";
  return out.str();
}

namespace {

bool bit_of(Index basis, int qubits, std::uint32_t q) { return (basis >> (qubits - 1 - static_cast<int>(q))) & 1; }

}  // namespace

Matrix target_matrix(const TargetSpec& spec) {
  const int n = spec.qubits;
  const Index dim = Index{1} << n;
  switch (spec.kind) {
    case TargetSpec::Kind::matrix:
      return spec.explicit_matrix;
    case TargetSpec::Kind::mcp: {
      Matrix m = Matrix::Zero(dim, dim);
      const auto p = pauli_matrix(spec.axis);
      const Index tbit = Index{1} << (n - 1 - static_cast<int>(spec.target));
      for (Index col = 0; col < dim; ++col) {
        bool fire = true;
        for (const auto& c : spec.controls)
          fire = fire && bit_of(col, n, c.qubit.index) == (c.polarity == Polarity::positive);
        if (!fire) {
          m(col, col) = 1;
          continue;
        }
        const int in = (col & tbit) ? 1 : 0;
        for (int out = 0; out < 2; ++out) {
          const Index row = out ? (col | tbit) : (col & ~tbit);
          m(row, col) += p(out, in);
        }
      }
      return m;
    }
    case TargetSpec::Kind::controlled_unitary: {
      Matrix m = Matrix::Zero(dim, dim);
      const int k = static_cast<int>(spec.targets.size());
      Index tmask = 0;
      for (auto t : spec.targets) tmask |= Index{1} << (n - 1 - static_cast<int>(t));
      for (Index col = 0; col < dim; ++col) {
        bool fire = true;
        for (auto c : spec.control_qubits) fire = fire && bit_of(col, n, c);
        if (!fire) {
          m(col, col) = 1;
          continue;
        }
        Index sub_in = 0;
        for (auto t : spec.targets) sub_in = 2 * sub_in + bit_of(col, n, t);
        for (Index sub_out = 0; sub_out < (Index{1} << k); ++sub_out) {
          Index row = col & ~tmask;
          for (int j = 0; j < k; ++j)
            if ((sub_out >> (k - 1 - j)) & 1) row |= Index{1} << (n - 1 - static_cast<int>(spec.targets[j]));
          m(row, col) = spec.u(sub_out, sub_in);
        }
      }
      return m;
    }
  }
  return {};
}

namespace {

std::vector<Index> all_columns(Index n) {
  std::vector<Index> out(n);
  for (Index i = 0; i < n; ++i) out[i] = i;
  return out;
}

Matrix select_columns(const Matrix& m, const std::vector<Index>& cols) {
  Matrix out(m.rows(), static_cast<Index>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) out.col(static_cast<Index>(k)) = m.col(cols[k]);
  return out;
}

// least-squares scalar c with a ~ c b, and the residual
std::pair<cplx, double> fit(const Matrix& a, const Matrix& b) {
  const double bb = b.squaredNorm();
  if (bb == 0) return {cplx(0), a.size() ? a.cwiseAbs().maxCoeff() : 0.0};
  const cplx c = (b.array().conjugate() * a.array()).sum() / bb;
  return {c, max_abs_diff(a, c * b)};
}

}  // namespace

EquivalenceVerdict assert_equiv(const Circuit& c, const TargetSpec& spec, double tol) {
  if (spec.qubits != static_cast<int>(c.data_qubits()))
    throw std::invalid_argument("assert_equiv: target and circuit register sizes differ");
  const Matrix target = target_matrix(spec);
  const auto ch = kraus_of(c, spec.promised);
  if (target.rows() != (Index{1} << ch.output_qubits))
    throw std::invalid_argument("assert_equiv: target output dimension does not match circuit");
  const auto cols = spec.promised ? *spec.promised : all_columns(target.cols());
  const Matrix t = select_columns(target, cols);

  EquivalenceVerdict v;
  v.leakage = ch.leakage;
  double weight = 0;
  for (const auto& b : ch.branches) {
    const Matrix k = select_columns(b.kraus, cols);
    if (k.size() == 0 || k.cwiseAbs().maxCoeff() < tol) continue;
    auto [coef, dev] = fit(k, t);
    v.branches.push_back({b.outcome, coef, dev});
    v.max_deviation = std::max(v.max_deviation, dev);
    weight += std::norm(coef);
  }
  v.weight_error = std::abs(weight - 1);
  if (v.leakage >= tol)
    v.reason = "ancilla not restored";
  else if (v.max_deviation >= tol)
    v.reason = "branch differs from target";
  else if (v.weight_error >= tol)
    v.reason = "branch weights do not sum to one";
  v.equivalent = v.reason.empty();
  return v;
}

ChannelComparison compare_circuits(const Circuit& lhs, const Circuit& rhs,
                                   const std::optional<std::vector<Index>>& columns, double tol) {
  if (lhs.data_qubits() != rhs.data_qubits())
    throw std::invalid_argument("compare_circuits: data registers differ");
  const auto kl = kraus_of(lhs, columns);
  const auto kr = kraus_of(rhs, columns);
  if (kl.output_qubits != kr.output_qubits) throw std::invalid_argument("compare_circuits: output registers differ");
  const auto cols = columns ? *columns : all_columns(Index{1} << kl.input_qubits);

  ChannelComparison r;
  r.deviation = std::max(kl.leakage, kr.leakage);
  if (kl.branches.size() == kr.branches.size()) {
    r.per_branch = true;
    r.exact = true;
    bool first = true;
    for (std::size_t b = 0; b < kl.branches.size(); ++b) {
      const Matrix a = select_columns(kl.branches[b].kraus, cols);
      const Matrix e = select_columns(kr.branches[b].kraus, cols);
      const bool a_zero = a.cwiseAbs().maxCoeff() < tol;
      const bool e_zero = e.cwiseAbs().maxCoeff() < tol;
      if (a_zero && e_zero) continue;
      auto [coef, dev] = fit(a, e);
      r.deviation = std::max({r.deviation, dev, std::abs(std::abs(coef) - 1)});
      if (std::abs(coef - cplx(1)) >= tol) r.exact = false;
      if (first) r.phase = std::abs(coef) > 0 ? coef / std::abs(coef) : cplx(1);
      first = false;
    }
  } else {
    auto choi = [&](const KrausChannel& ch) {
      const Index n = ch.branches.front().kraus.rows() * static_cast<Index>(cols.size());
      Matrix j = Matrix::Zero(n, n);
      for (const auto& b : ch.branches) {
        const Matrix k = select_columns(b.kraus, cols);
        const Eigen::Map<const Vector> v(k.data(), n);
        j += v * v.adjoint();
      }
      return j;
    };
    r.deviation = std::max(r.deviation, max_abs_diff(choi(kl), choi(kr)));
  }
  r.equal = r.deviation < tol;
  if (!r.equal) r.exact = false;
  if (!r.per_branch) r.exact = r.equal;
  return r;
}

}  // namespace mcpauli
