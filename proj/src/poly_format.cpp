#include "ag/poly_format.hpp"

#include <cctype>

namespace ag {

namespace {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_digits(Cursor& cur) {
  cur.skip_ws();
  std::string out;
  while (cur.pos < cur.text.size() &&
         std::isdigit(static_cast<unsigned char>(cur.text[cur.pos])))
    out += cur.text[cur.pos++];
  if (out.empty()) throw ParseError("expected a number", cur.pos);
  return out;
}

Rational read_coefficient(Cursor& cur) {
  std::string num = read_digits(cur);
  if (cur.accept('/')) {
    const std::size_t at = cur.pos;
    std::string den = read_digits(cur);
    Rational r = rational_from_string(num + "/" + den);
    if (r.get_den() == 0) throw ParseError("zero denominator", at);
    return r;
  }
  return rational_from_string(num);
}

std::size_t read_variable(Cursor& cur, const std::vector<std::string>& variables) {
  cur.skip_ws();
  const std::size_t start = cur.pos;
  std::string name;
  if (cur.pos < cur.text.size() && is_name_start(cur.text[cur.pos])) {
    while (cur.pos < cur.text.size() && is_name_char(cur.text[cur.pos]))
      name += cur.text[cur.pos++];
  }
  if (name.empty()) throw ParseError("expected a variable name", start);
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return i;
  throw ParseError("unknown variable '" + name + "'", start);
}

// term := coefficient ['*' powers] | powers
void read_term(Cursor& cur, const std::vector<std::string>& variables, bool negative,
               Polynomial& acc) {
  const std::size_t arity = variables.size();
  Rational coeff = 1;
  std::vector<std::uint32_t> exps(arity, 0);
  bool have_powers = false;

  cur.skip_ws();
  if (cur.pos < cur.text.size() &&
      std::isdigit(static_cast<unsigned char>(cur.text[cur.pos]))) {
    coeff = read_coefficient(cur);
    if (!cur.accept('*')) {
      acc.add_term(Monomial(std::move(exps)), negative ? -coeff : coeff);
      return;
    }
  }
  for (;;) {
    const std::size_t var = read_variable(cur, variables);
    std::uint32_t power = 1;
    if (cur.accept('^')) {
      const std::size_t at = cur.pos;
      const std::string digits = read_digits(cur);
      try {
        power = static_cast<std::uint32_t>(std::stoul(digits));
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", at);
      }
    }
    exps[var] += power;
    have_powers = true;
    if (!cur.accept('*')) break;
  }
  (void)have_powers;
  acc.add_term(Monomial(std::move(exps)), negative ? -coeff : coeff);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text,
                            const std::vector<std::string>& variables) {
  Polynomial acc(variables.size());
  Cursor cur{text};
  if (cur.done()) return acc;

  bool negative = false;
  if (cur.accept('-'))
    negative = true;
  else
    cur.accept('+');

  for (;;) {
    read_term(cur, variables, negative, acc);
    if (cur.done()) break;
    if (cur.accept('+'))
      negative = false;
    else if (cur.accept('-'))
      negative = true;
    else
      throw ParseError("expected '+' or '-'", cur.pos);
  }
  return acc;
}

std::string to_string(const Monomial& m, const std::vector<std::string>& variables) {
  if (m.arity() != variables.size())
    throw std::invalid_argument("variable name count must match arity");
  if (m.is_constant()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.arity(); ++i) {
    const std::uint32_t e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += "*";
    out += variables[i];
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& variables) {
  if (f.arity() != variables.size())
    throw std::invalid_argument("variable name count must match arity");
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const bool negative = c < 0;
    const Rational abs = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (m.is_constant()) {
      out += to_string(abs);
    } else if (abs == 1) {
      out += to_string(m, variables);
    } else {
      out += to_string(abs) + "*" + to_string(m, variables);
    }
  }
  return out;
}

std::vector<std::string> numbered_variables(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

}  // namespace ag
