#include "mcpauli/simulator.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace mcpauli {

StateVector::StateVector(int qubits) : qubits_(qubits), amp_(Vector::Zero(Eigen::Index{1} << qubits)) {
  amp_[0] = 1;
}

StateVector::StateVector(int qubits, Vector amplitudes) : qubits_(qubits), amp_(std::move(amplitudes)) {
  if (amp_.size() != (Eigen::Index{1} << qubits)) throw std::invalid_argument("state size does not match qubit count");
}

StateVector StateVector::basis(int qubits, Eigen::Index index) {
  StateVector s(qubits);
  s.amp_.setZero();
  s.amp_[index] = 1;
  return s;
}

Matrix KrausChannel::completeness() const {
  const Eigen::Index dim = Eigen::Index{1} << input_qubits;
  Matrix sum = Matrix::Zero(dim, dim);
  for (const auto& b : branches) sum += b.kraus.adjoint() * b.kraus;
  return sum;
}

namespace {

// rows = basis states of the live qubits, columns = independent inputs
using State = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Index = Eigen::Index;

struct Schedule {
  std::vector<std::vector<std::uint32_t>> allocate;  // before instruction i
  std::vector<std::vector<std::uint32_t>> release;   // after instruction i
  std::vector<int> ordinal;                          // measurement number of instruction i, or -1
  int measures = 0;
  int peak = 0;
};

std::vector<std::uint32_t> touched(const Circuit& c, const Instruction& ins) {
  std::vector<std::uint32_t> out;
  auto add_gate = [&](const Gate& g) {
    for (const auto& q : g.support()) out.push_back(c.flat_index(q));
  };
  if (const auto* g = std::get_if<Gate>(&ins))
    add_gate(*g);
  else if (const auto* m = std::get_if<Measure>(&ins))
    out.push_back(c.flat_index(m->qubit));
  else
    add_gate(std::get<Conditioned>(ins).gate);
  return out;
}

Schedule make_schedule(const Circuit& c, bool lazy) {
  const auto instrs = c.instructions();
  const std::uint32_t n = c.total_qubits();
  Schedule s;
  s.allocate.resize(instrs.size());
  s.release.resize(instrs.size());
  s.ordinal.assign(instrs.size(), -1);
  std::vector<int> first(n, -1), last(n, -1);
  std::vector<bool> measured(n, false);
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    for (auto q : touched(c, instrs[i])) {
      if (first[q] < 0) first[q] = static_cast<int>(i);
      last[q] = static_cast<int>(i);
    }
    if (const auto* m = std::get_if<Measure>(&instrs[i])) {
      measured[c.flat_index(m->qubit)] = true;
      s.ordinal[i] = s.measures++;
    }
  }
  int live = lazy ? static_cast<int>(c.data_qubits()) : static_cast<int>(n);
  s.peak = live;
  if (!lazy) return s;
  for (std::uint32_t q = c.data_qubits(); q < n; ++q)
    if (first[q] >= 0) s.allocate[first[q]].push_back(q);
  for (std::uint32_t q = 0; q < n; ++q)
    if (last[q] >= 0 && (measured[q] || q >= c.data_qubits())) s.release[last[q]].push_back(q);
  for (std::size_t i = 0; i < instrs.size(); ++i) {
    live += static_cast<int>(s.allocate[i].size());
    s.peak = std::max(s.peak, live);
    live -= static_cast<int>(s.release[i].size());
  }
  return s;
}

struct Context {
  State st;
  std::vector<std::uint32_t> order;  // flat qubit id at each position
  std::vector<int> bits;             // classical register
  std::vector<int> qubit_outcome;    // per flat qubit, -1 if not measured
  std::string outcome;
  Eigen::ArrayXd discarded;          // per column, squared norm thrown away
};

int shift_of(const Context& ctx, std::uint32_t flat) {
  auto it = std::find(ctx.order.begin(), ctx.order.end(), flat);
  if (it == ctx.order.end()) throw std::logic_error("simulator: qubit is not live");
  return static_cast<int>(ctx.order.size() - 1 - (it - ctx.order.begin()));
}

void apply_2x2(State& st, int shift, const Matrix2c<double>& m, Index mask, Index want) {
  const Index bit = Index{1} << shift;
  const Index cols = st.cols();
  for (Index i = 0; i < st.rows(); ++i) {
    if ((i & bit) || (i & mask) != want) continue;
    cplx* r0 = st.data() + i * cols;
    cplx* r1 = st.data() + (i | bit) * cols;
    for (Index k = 0; k < cols; ++k) {
      const cplx a = r0[k], b = r1[k];
      r0[k] = m(0, 0) * a + m(0, 1) * b;
      r1[k] = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

void negate_where(State& st, Index mask, Index want) {
  for (Index i = 0; i < st.rows(); ++i)
    if ((i & mask) == want) st.row(i) *= -1.0;
}

void apply_unitary(State& st, const std::vector<int>& shifts, const Matrix& m, Index mask, Index want) {
  const int k = static_cast<int>(shifts.size());
  const Index dim = Index{1} << k;
  Index tmask = 0;
  for (int s : shifts) tmask |= Index{1} << s;
  std::vector<Index> idx(dim);
  Vector in(dim);
  for (Index i = 0; i < st.rows(); ++i) {
    if ((i & tmask) || (i & mask) != want) continue;
    for (Index sub = 0; sub < dim; ++sub) {
      Index r = i;
      for (int t = 0; t < k; ++t)
        if ((sub >> (k - 1 - t)) & 1) r |= Index{1} << shifts[t];
      idx[sub] = r;
    }
    for (Index col = 0; col < st.cols(); ++col) {
      for (Index sub = 0; sub < dim; ++sub) in[sub] = st(idx[sub], col);
      const Vector out = m * in;
      for (Index sub = 0; sub < dim; ++sub) st(idx[sub], col) = out[sub];
    }
  }
}

void apply_gate(Context& ctx, const Gate& g) {
  Index mask = 0, want = 0;
  for (const auto& c : g.controls) {
    const Index b = Index{1} << shift_of(ctx, c.qubit.index);
    mask |= b;
    if (c.polarity == Polarity::positive) want |= b;
  }
  switch (g.kind) {
    case GateKind::CX: {
      const Index b = Index{1} << shift_of(ctx, g.qubits[0].index);
      apply_2x2(ctx.st, shift_of(ctx, g.qubits[1].index), gate_matrix(GateKind::X), b, b);
      return;
    }
    case GateKind::CZ: {
      const Index b = (Index{1} << shift_of(ctx, g.qubits[0].index)) | (Index{1} << shift_of(ctx, g.qubits[1].index));
      negate_where(ctx.st, b, b);
      return;
    }
    case GateKind::MCP:
      apply_2x2(ctx.st, shift_of(ctx, g.qubits[0].index), pauli_matrix(g.axis), mask, want);
      return;
    case GateKind::Unitary: {
      std::vector<int> shifts;
      for (const auto& q : g.qubits) shifts.push_back(shift_of(ctx, q.index));
      apply_unitary(ctx.st, shifts, *g.matrix, mask, want);
      return;
    }
    default:
      apply_2x2(ctx.st, shift_of(ctx, g.qubits[0].index), gate_matrix(g.kind), 0, 0);
  }
}

// appended qubit becomes the least significant bit
void add_qubit(Context& ctx, std::uint32_t flat) {
  State next = State::Zero(ctx.st.rows() * 2, ctx.st.cols());
  for (Index i = 0; i < ctx.st.rows(); ++i) next.row(2 * i) = ctx.st.row(i);
  ctx.st = std::move(next);
  ctx.order.push_back(flat);
}

void remove_qubit(Context& ctx, std::uint32_t flat, int value, bool count_discard) {
  const int s = shift_of(ctx, flat);
  const Index low = (Index{1} << s) - 1;
  State next(ctx.st.rows() / 2, ctx.st.cols());
  for (Index j = 0; j < next.rows(); ++j) {
    const Index keep = ((j >> s) << (s + 1)) | (Index{value} << s) | (j & low);
    next.row(j) = ctx.st.row(keep);
    if (count_discard) ctx.discarded += ctx.st.row(keep ^ (Index{1} << s)).cwiseAbs2().transpose().array();
  }
  ctx.st = std::move(next);
  ctx.order.erase(std::find(ctx.order.begin(), ctx.order.end(), flat));
}

void zero_mismatch(Context& ctx, std::uint32_t flat, int value) {
  const Index bit = Index{1} << shift_of(ctx, flat);
  for (Index i = 0; i < ctx.st.rows(); ++i)
    if (((i & bit) != 0) != (value != 0)) ctx.st.row(i).setZero();
}

// The Gate qubit ids carry the register; shift_of wants the flat id.
Gate flatten(const Circuit& c, const Gate& g) {
  return remap_gate(g, [&](QubitId q) { return QubitId{c.flat_index(q), Register::data}; });
}

class Runner {
 public:
  using Sink = std::function<void(Context&)>;

  Runner(const Circuit& c, const Schedule& s, bool lazy, const std::vector<int>* fixed, Sink sink)
      : c_(c), s_(s), lazy_(lazy), fixed_(fixed), sink_(std::move(sink)) {
    for (const auto& ins : c.instructions()) {
      if (const auto* g = std::get_if<Gate>(&ins))
        flat_.emplace_back(flatten(c, *g));
      else if (const auto* cd = std::get_if<Conditioned>(&ins))
        flat_.emplace_back(Conditioned{cd->bit, cd->value, flatten(c, cd->gate)});
      else
        flat_.push_back(ins);
    }
  }

  void run(Context ctx, std::size_t pc) {
    for (; pc < flat_.size(); ++pc) {
      for (auto q : s_.allocate[pc]) add_qubit(ctx, q);
      const auto& ins = flat_[pc];
      if (const auto* g = std::get_if<Gate>(&ins)) {
        apply_gate(ctx, *g);
      } else if (const auto* cd = std::get_if<Conditioned>(&ins)) {
        if ((ctx.bits[cd->bit.index] != 0) == cd->value) apply_gate(ctx, cd->gate);
      } else {
        const auto& m = std::get<Measure>(ins);
        if (fixed_) {
          measure(ctx, m, (*fixed_)[s_.ordinal[pc]]);
        } else {
          Context zero = ctx;
          measure(zero, m, 0);
          release(zero, pc);
          if (zero.st.squaredNorm() > 0) run(std::move(zero), pc + 1);
          measure(ctx, m, 1);
          release(ctx, pc);
          if (ctx.st.squaredNorm() > 0) run(std::move(ctx), pc + 1);
          return;
        }
      }
      release(ctx, pc);
    }
    sink_(ctx);
  }

 private:
  void measure(Context& ctx, const Measure& m, int value) {
    const auto flat = c_.flat_index(m.qubit);
    ctx.bits[m.bit.index] = value;
    ctx.qubit_outcome[flat] = value;
    ctx.outcome.push_back(value ? '1' : '0');
    if (!lazy_) zero_mismatch(ctx, flat, value);
  }

  void release(Context& ctx, std::size_t pc) {
    for (auto q : s_.release[pc]) {
      const int v = ctx.qubit_outcome[q];
      remove_qubit(ctx, q, v < 0 ? 0 : v, v < 0);
    }
  }

  const Circuit& c_;
  const Schedule& s_;
  bool lazy_;
  const std::vector<int>* fixed_;
  Sink sink_;
  std::vector<Instruction> flat_;
};

void require_valid(const Circuit& c) {
  if (!validate(c).ok()) throw std::invalid_argument("simulator: circuit is invalid");
}

}  // namespace

int peak_live_qubits(const Circuit& c) { return make_schedule(c, true).peak; }

StateVector simulate(const Circuit& c, const StateVector& input, const std::vector<int>& outcomes) {
  require_valid(c);
  if (input.qubits() != static_cast<int>(c.data_qubits()))
    throw std::invalid_argument("simulate: input state size does not match data register");
  if (c.total_qubits() > max_simulated_qubits) throw std::length_error("simulate: more than 16 qubits");
  const auto sched = make_schedule(c, false);
  if (static_cast<int>(outcomes.size()) != sched.measures)
    throw std::invalid_argument("simulate: one outcome per measurement required");

  Context ctx;
  const int anc = static_cast<int>(c.ancillas());
  ctx.st = State::Zero(Index{1} << c.total_qubits(), 1);
  for (Index i = 0; i < input.amplitudes().size(); ++i) ctx.st(i << anc, 0) = input[i];
  for (std::uint32_t q = 0; q < c.total_qubits(); ++q) ctx.order.push_back(q);
  ctx.bits.assign(c.classical_bits(), 0);
  ctx.qubit_outcome.assign(c.total_qubits(), -1);
  ctx.discarded = Eigen::ArrayXd::Zero(1);

  Vector out;
  Runner runner(c, sched, false, &outcomes, [&](Context& done) { out = done.st.col(0); });
  runner.run(std::move(ctx), 0);
  return StateVector(static_cast<int>(c.total_qubits()), std::move(out));
}

KrausChannel kraus_of(const Circuit& c, const std::optional<std::vector<Eigen::Index>>& columns) {
  require_valid(c);
  const auto sched = make_schedule(c, true);
  if (sched.peak > max_simulated_qubits)
    throw std::length_error("kraus_of: more than 16 simultaneously live qubits");

  std::vector<bool> measured(c.data_qubits(), false);
  for (const auto& ins : c.instructions())
    if (const auto* m = std::get_if<Measure>(&ins); m && m->qubit.reg == Register::data)
      measured[m->qubit.index] = true;

  KrausChannel ch;
  ch.input_qubits = static_cast<int>(c.data_qubits());
  ch.output_qubits = static_cast<int>(std::count(measured.begin(), measured.end(), false));
  const Index in_dim = Index{1} << ch.input_qubits;
  const Index out_dim = Index{1} << ch.output_qubits;
  if ((Index{1} << sched.measures) * in_dim * out_dim > (Index{1} << 26))
    throw std::length_error("kraus_of: channel too large to store");

  for (Index b = 0; b < (Index{1} << sched.measures); ++b) {
    std::string label(sched.measures, '0');
    for (int k = 0; k < sched.measures; ++k)
      if ((b >> (sched.measures - 1 - k)) & 1) label[k] = '1';
    ch.branches.push_back({label, Matrix::Zero(out_dim, in_dim)});
  }

  std::vector<Index> cols;
  if (columns) {
    cols = *columns;
    for (auto col : cols)
      if (col < 0 || col >= in_dim) throw std::invalid_argument("kraus_of: column out of range");
  } else {
    for (Index i = 0; i < in_dim; ++i) cols.push_back(i);
  }

  // batch inputs so that one state matrix stays around 2^22 amplitudes
  const Index batch = std::max<Index>(1, (Index{1} << 22) >> sched.peak);
  for (std::size_t start = 0; start < cols.size(); start += batch) {
    const std::size_t stop = std::min(cols.size(), start + static_cast<std::size_t>(batch));
    const Index width = static_cast<Index>(stop - start);
    Context ctx;
    ctx.st = State::Zero(in_dim, width);
    for (Index k = 0; k < width; ++k) ctx.st(cols[start + k], k) = 1;
    for (std::uint32_t q = 0; q < c.data_qubits(); ++q) ctx.order.push_back(q);
    ctx.bits.assign(c.classical_bits(), 0);
    ctx.qubit_outcome.assign(c.total_qubits(), -1);
    ctx.discarded = Eigen::ArrayXd::Zero(width);

    Runner runner(c, sched, true, nullptr, [&](Context& done) {
      Index b = 0;
      for (char ch_bit : done.outcome) b = 2 * b + (ch_bit == '1');
      auto& K = ch.branches[b].kraus;
      for (Index k = 0; k < width; ++k) K.col(cols[start + k]) = done.st.col(k);
      ch.leakage = std::max(ch.leakage, std::sqrt(done.discarded.maxCoeff()));
    });
    runner.run(std::move(ctx), 0);
  }
  return ch;
}

Matrix unitary_of(const Circuit& c, double tol) {
  for (const auto& ins : c.instructions())
    if (!std::holds_alternative<Gate>(ins)) throw std::invalid_argument("unitary_of: circuit has measurements");
  auto ch = kraus_of(c);
  if (ch.leakage > tol) throw std::invalid_argument("unitary_of: ancillas are not restored");
  return ch.branches.front().kraus;
}

}  // namespace mcpauli
