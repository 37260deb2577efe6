#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mcpauli/circuit.hpp"

namespace mcpauli {

// Line-oriented text form:
//
//   circuit data=4 anc=1 cbits=1
//   h a0
//   cx q3 a0
//   measure a0 -> c0
//   cif c0==1 cz q2 q3
//   mcp z q3 ctrl [+q0,-q1,+q2]
//
// '#' starts a comment. Unitary gates have no text form.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string token, const std::string& what);

  std::size_t line() const { return line_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t line_;
  std::string token_;
};

std::string serialize(const Circuit& c);
Circuit parse(std::string_view text);

}  // namespace mcpauli
