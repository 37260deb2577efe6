#include "mcpauli/text_format.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace mcpauli {

ParseError::ParseError(std::size_t line, std::string token, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what + " '" + token + "'"),
      line_(line),
      token_(std::move(token)) {}

namespace {

std::string qubit_name(QubitId q) {
  return (q.reg == Register::data ? "q" : "a") + std::to_string(q.index);
}

char axis_char(PauliAxis a) {
  switch (a) {
    case PauliAxis::X: return 'x';
    case PauliAxis::Y: return 'y';
    case PauliAxis::Z: return 'z';
  }
  return '?';
}

std::string gate_text(const Gate& g) {
  std::string out(mnemonic(g.kind));
  if (g.kind == GateKind::Unitary) throw std::invalid_argument("unitary gates have no text form");
  if (g.kind == GateKind::MCP) {
    out += ' ';
    out += axis_char(g.axis);
    out += ' ' + qubit_name(g.qubits.at(0)) + " ctrl [";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) out += ',';
      out += g.controls[i].polarity == Polarity::positive ? '+' : '-';
      out += qubit_name(g.controls[i].qubit);
    }
    return out + "]";
  }
  for (const auto& q : g.qubits) out += ' ' + qubit_name(q);
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint32_t> to_uint(std::string_view s) {
  std::uint32_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

class LineParser {
 public:
  LineParser(std::size_t line, std::vector<std::string_view> tokens) : line_(line), toks_(std::move(tokens)) {}

  [[noreturn]] void fail(std::string_view tok, const std::string& what) const {
    throw ParseError(line_, std::string(tok), what);
  }

  bool done() const { return pos_ >= toks_.size(); }
  std::string_view next(const char* what) {
    if (done()) fail("<end of line>", std::string("expected ") + what);
    return toks_[pos_++];
  }
  void finish() const {
    if (!done()) fail(toks_[pos_], "unexpected token");
  }

  QubitId qubit(std::string_view tok) const {
    if (tok.size() < 2 || (tok[0] != 'q' && tok[0] != 'a')) fail(tok, "expected qubit");
    auto v = to_uint(tok.substr(1));
    if (!v) fail(tok, "expected qubit");
    return tok[0] == 'q' ? data_qubit(*v) : ancilla_qubit(*v);
  }
  ClassicalBitId bit(std::string_view tok) const {
    if (tok.size() < 2 || tok[0] != 'c') fail(tok, "expected classical bit");
    auto v = to_uint(tok.substr(1));
    if (!v) fail(tok, "expected classical bit");
    return {*v};
  }

  Gate gate() {
    auto name = next("gate");
    static constexpr GateKind singles[] = {GateKind::H,  GateKind::T, GateKind::Tdg, GateKind::S,
                                           GateKind::Sdg, GateKind::X, GateKind::Y,   GateKind::Z,
                                           GateKind::SX, GateKind::SXdg};
    for (auto k : singles)
      if (name == mnemonic(k)) return Gate::single(k, qubit(next("qubit")));
    if (name == "cx" || name == "cz") {
      auto a = qubit(next("qubit"));
      auto b = qubit(next("qubit"));
      return name == "cx" ? Gate::cx(a, b) : Gate::cz(a, b);
    }
    if (name == "mcp") return mcp();
    fail(name, "unknown gate");
  }

 private:
  Gate mcp() {
    auto ax = next("axis");
    PauliAxis axis{};
    if (ax == "x")
      axis = PauliAxis::X;
    else if (ax == "y")
      axis = PauliAxis::Y;
    else if (ax == "z")
      axis = PauliAxis::Z;
    else
      fail(ax, "expected axis x|y|z");
    auto target = qubit(next("qubit"));
    auto kw = next("ctrl");
    if (kw != "ctrl") fail(kw, "expected 'ctrl'");
    // the control list may contain spaces after commas; glue the rest of the line back together
    std::string list;
    while (!done()) list += next("control list");
    if (list.size() < 2 || list.front() != '[' || list.back() != ']') fail(list, "expected [controls]");
    std::vector<Control> controls;
    std::string_view body(list);
    body = body.substr(1, body.size() - 2);
    while (!body.empty()) {
      auto comma = body.find(',');
      auto item = body.substr(0, comma);
      if (item.size() < 2 || (item[0] != '+' && item[0] != '-')) fail(item, "expected +qubit or -qubit");
      controls.push_back({qubit(item.substr(1)), item[0] == '+' ? Polarity::positive : Polarity::negative});
      if (comma == std::string_view::npos) break;
      body = body.substr(comma + 1);
      if (body.empty()) fail(list, "trailing comma");
    }
    return Gate::mcp(axis, target, std::move(controls));
  }

  std::size_t line_;
  std::vector<std::string_view> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Circuit& c) {
  std::ostringstream out;
  out << "circuit data=" << c.data_qubits() << " anc=" << c.ancillas() << " cbits=" << c.classical_bits()
      << '\n';
  for (const auto& ins : c.instructions()) {
    if (const auto* g = std::get_if<Gate>(&ins)) {
      out << gate_text(*g) << '\n';
    } else if (const auto* m = std::get_if<Measure>(&ins)) {
      out << "measure " << qubit_name(m->qubit) << " -> c" << m->bit.index << '\n';
    } else {
      const auto& cd = std::get<Conditioned>(ins);
      out << "cif c" << cd.bit.index << "==" << (cd.value ? 1 : 0) << ' ' << gate_text(cd.gate) << '\n';
    }
  }
  return out.str();
}

Circuit parse(std::string_view text) {
  std::optional<CircuitBuilder> builder;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    LineParser p(line_no, toks);

    if (!builder) {
      if (p.next("header") != "circuit") p.fail(toks[0], "expected 'circuit' header");
      std::uint32_t counts[3] = {0, 0, 0};
      static constexpr std::string_view keys[] = {"data=", "anc=", "cbits="};
      for (int k = 0; k < 3; ++k) {
        auto tok = p.next(keys[k].data());
        if (!tok.starts_with(keys[k])) p.fail(tok, std::string("expected ") + std::string(keys[k]));
        auto v = to_uint(tok.substr(keys[k].size()));
        if (!v) p.fail(tok, "expected a count");
        counts[k] = *v;
      }
      p.finish();
      if (counts[0] == 0) p.fail(toks[1], "need at least one data qubit");
      builder.emplace(counts[0], counts[1], counts[2]);
      continue;
    }

    if (toks[0] == "measure") {
      p.next("measure");
      auto q = p.qubit(p.next("qubit"));
      auto arrow = p.next("->");
      if (arrow != "->") p.fail(arrow, "expected '->'");
      auto b = p.bit(p.next("classical bit"));
      p.finish();
      builder->instruction(Measure{q, b});
    } else if (toks[0] == "cif") {
      p.next("cif");
      auto cond = p.next("condition");
      auto eq = cond.find("==");
      if (eq == std::string_view::npos) p.fail(cond, "expected c<k>==<0|1>");
      auto b = p.bit(cond.substr(0, eq));
      auto val = cond.substr(eq + 2);
      if (val != "0" && val != "1") p.fail(cond, "condition value must be 0 or 1");
      auto g = p.gate();
      p.finish();
      builder->conditioned(b, val == "1", std::move(g));
    } else {
      auto g = p.gate();
      p.finish();
      builder->gate(std::move(g));
    }
  }
  if (!builder) throw ParseError(line_no, "<end of input>", "missing 'circuit' header");
  return builder->build();
}

}  // namespace mcpauli
