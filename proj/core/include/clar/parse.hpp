#pragma once

#include <string>
#include <utility>
#include <vector>

#include "clar/formula.hpp"
#include "clar/moves.hpp"

namespace clar {

struct ParseError : std::runtime_error {
  size_t position;  // byte offset into the input
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what + " (at offset " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct ParseOptions {
  // Accept ~ over non-elementary operands by pushing it inward and dualizing
  // the choice operators. Off by default: such inputs are rejected with a
  // hint instead.
  bool normalize = false;
};

PTerm parse_pterm(const std::string& text);
Formula parse_formula(const std::string& text, const ParseOptions& opts = {});

// "E1, E2 |o- F"; the antecedent may be empty.
std::pair<std::vector<Formula>, Formula> parse_sequent_parts(
    const std::string& text, const ParseOptions& opts = {});

Labmove parse_labmove(const std::string& line);
// One labmove per line; blank lines and '#'-comments are skipped.
Position parse_position(const std::string& text);

}  // namespace clar
