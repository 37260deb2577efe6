#include <limits>
#include <stdexcept>

#include "mcpauli/catalog.hpp"
#include "mcpauli/decomp.hpp"
#include "mcpauli/metrics.hpp"

namespace mcpauli {

namespace {

bool implements_mcz(const TargetSpec& t, int data) {
  if (t.kind != TargetSpec::Kind::mcp || t.axis != PauliAxis::Z || t.promised) return false;
  if (static_cast<int>(t.controls.size()) != data - 1) return false;
  for (const auto& c : t.controls)
    if (c.polarity != Polarity::positive) return false;
  return true;
}

struct Search {
  AddMethod method = AddMethod::selinger;
  int steps = 0;
  int best_depth = std::numeric_limits<int>::max();
  std::vector<std::uint32_t> path;
  std::vector<std::uint32_t> best_path;
  std::optional<Circuit> best;

  Circuit add(const Circuit& c, std::uint32_t d) const {
    return add_control(method, c, d, ControlCheck::symmetric_base);
  }

  void exhaust(const Circuit& c, int depth) {
    if (depth == steps) {
      const int td = t_depth(c);
      if (td < best_depth) {
        best_depth = td;
        best_path = path;
        best = c;
      }
      return;
    }
    for (std::uint32_t d = 0; d < c.data_qubits(); ++d) {
      path.push_back(d);
      exhaust(add(c, d), depth + 1);
      path.pop_back();
    }
  }
};

}  // namespace

CnzBuild cnz_search(int n, std::string_view base, AddMethod method, Strategy strategy) {
  const auto& e = entry(base);
  Circuit c = e.build();
  if (!implements_mcz(e.target(), static_cast<int>(c.data_qubits())))
    throw std::invalid_argument("cnz_build: base '" + std::string(base) + "' does not implement a C^kZ");
  const int k = static_cast<int>(c.data_qubits()) - 1;
  if (n < k) throw std::invalid_argument("cnz_build: n is smaller than the base control count");

  Search s;
  s.method = method;
  s.steps = n - k;
  switch (strategy) {
    case Strategy::linear: {
      CnzBuild out{c, {}};
      for (int i = 0; i < s.steps; ++i) {
        const auto d = out.circuit.data_qubits() - 1;
        out.circuit = s.add(out.circuit, d);
        out.designations.push_back(d);
      }
      return out;
    }
    case Strategy::greedy: {
      CnzBuild out{c, {}};
      for (int i = 0; i < s.steps; ++i) {
        std::optional<Circuit> pick;
        std::uint32_t pick_d = 0;
        int pick_depth = std::numeric_limits<int>::max();
        for (std::uint32_t d = 0; d < out.circuit.data_qubits(); ++d) {
          auto next = s.add(out.circuit, d);
          const int td = t_depth(next);
          if (td < pick_depth) {
            pick_depth = td;
            pick = std::move(next);
            pick_d = d;
          }
        }
        out.circuit = *pick;
        out.designations.push_back(pick_d);
      }
      return out;
    }
    case Strategy::exhaustive:
      s.exhaust(c, 0);
      return {*s.best, s.best_path};
  }
  throw std::logic_error("unreachable");
}

Circuit cnz_build(int n, std::string_view base, AddMethod method, Strategy strategy) {
  return cnz_search(n, base, method, strategy).circuit;
}

Circuit cnz_selinger_logdepth(int n, bool improved) {
  if (n < 2) throw std::invalid_argument("cnz_selinger_logdepth: need n >= 2");
  struct Block {
    QubitId c1, c2, target, aux;
  };
  CircuitBuilder b(static_cast<std::uint32_t>(n + 1));
  std::vector<QubitId> pool;  // restored helpers, reusable once a level is done
  auto helper = [&](std::size_t i) {
    while (pool.size() <= i) pool.push_back(b.add_ancilla());
    return pool[i];
  };

  std::vector<QubitId> wires;
  const int tree_wires = improved ? n + 1 : n - 1;
  for (int i = 0; i < tree_wires; ++i) wires.push_back(data_qubit(i));
  const std::size_t keep = improved ? 3 : 1;

  std::vector<std::vector<Block>> levels;
  while (wires.size() > keep) {
    const std::size_t w = wires.size();
    const std::size_t pairs = w - std::max(keep, (w + 1) / 2);
    std::vector<Block> level;
    std::vector<QubitId> next;
    for (std::size_t p = 0; p < pairs; ++p) {
      level.push_back({wires[2 * p], wires[2 * p + 1], b.add_ancilla(), {}});
      next.push_back(level.back().target);
    }
    for (std::size_t i = 2 * pairs; i < w; ++i) next.push_back(wires[i]);
    for (std::size_t p = 0; p < level.size(); ++p) level[p].aux = helper(p);
    levels.push_back(std::move(level));
    wires = std::move(next);
  }
  if (!improved) {
    wires.push_back(data_qubit(n - 1));
    wires.push_back(data_qubit(n));
  }

  for (const auto& level : levels)
    for (const auto& blk : level) append_cc_minus_ix(b, blk.c1, blk.c2, blk.target, blk.aux);
  append_ccz_tdepth1(b, wires[0], wires[1], wires[2], {helper(0), helper(1), helper(2), helper(3)});
  for (auto it = levels.rbegin(); it != levels.rend(); ++it)
    for (const auto& blk : *it) append_cc_plus_ix(b, blk.c1, blk.c2, blk.target, blk.aux);
  return b.build();
}

}  // namespace mcpauli
