#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "ag/polynomial.hpp"

namespace ag {

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Grammar: terms separated by '+'/'-'; a term is an optional rational
// coefficient ("p" or "p/q"), then '*'-separated variable powers
// "name^k" (k omitted means 1). Whitespace is insignificant. "" and "0"
// denote the zero polynomial.
Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables);

// Canonical printing in the same grammar, terms in canonical monomial
// order, exact coefficients as "p" / "p/q".
std::string to_string(const Polynomial& f, const std::vector<std::string>& variables);
std::string to_string(const Monomial& m, const std::vector<std::string>& variables);

// "x1", "x2", ... — coordinate names used for kernel and inverse-system
// variables.
std::vector<std::string> numbered_variables(const std::string& prefix, std::size_t count);

}  // namespace ag
