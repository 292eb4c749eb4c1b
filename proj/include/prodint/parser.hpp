#pragma once

#include <stdexcept>
#include <string>

#include "prodint/ast.hpp"

namespace prodint {

struct parse_error : std::runtime_error {
  parse_error(int line, int col, const std::string &msg)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line(line), col(col) {}
  int line;
  int col;
};

// Parses a source file of the tiny language. Besides syntax, checks that
// every variable is declared or assigned before it is read and that array
// names are only ever defined by allocations.
program parse(const std::string &text);

// for-loops rewritten to init; while (cond) { body; step }.
program desugar(const program &p);

} // namespace prodint
