#pragma once

#include <random>

#include "ag/local_algebra.hpp"
#include "ag/poly_format.hpp"

namespace ag::testing {

// Deterministic generators for the property-style tests.
inline std::mt19937& rng() {
  static std::mt19937 engine(20240817u);
  return engine;
}

inline Rational random_rational(std::mt19937& engine, long max_abs = 9) {
  std::uniform_int_distribution<long> num(-max_abs, max_abs);
  std::uniform_int_distribution<long> den(1, 3);
  return make_rational(num(engine), den(engine));
}

inline Rational random_nonzero_rational(std::mt19937& engine, long max_abs = 9) {
  for (;;) {
    Rational r = random_rational(engine, max_abs);
    if (r != 0) return r;
  }
}

inline Polynomial random_polynomial(std::mt19937& engine, std::size_t arity,
                                    std::uint32_t max_degree, std::size_t max_terms) {
  const auto monos = monomials_up_to_degree(arity, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<std::size_t> count(0, max_terms);
  Polynomial f(arity);
  const std::size_t terms = count(engine);
  for (std::size_t k = 0; k < terms; ++k)
    f.add_term(monos[pick(engine)], random_rational(engine));
  return f;
}

// --- corpus presentations used across the suites ---

inline IdealPresentation univariate_power(std::uint32_t n) {
  // k[x]/(x^n)
  return IdealPresentation{{"x"},
                           {Polynomial::term(Monomial::variable(1, 0, n), 1)}};
}

inline IdealPresentation two_squares() {
  // k[x,y]/(x^2, y^2)
  return IdealPresentation{
      {"x", "y"},
      {Polynomial::term(Monomial::variable(2, 0, 2), 1),
       Polynomial::term(Monomial::variable(2, 1, 2), 1)}};
}

inline IdealPresentation mixed_relations() {
  // k[x,y]/(xy, x^2 - y^2)
  const std::vector<std::string> vars = {"x", "y"};
  return IdealPresentation{vars,
                           {parse_polynomial("x*y", vars),
                            parse_polynomial("x^2 - y^2", vars)}};
}

inline IdealPresentation non_gorenstein_control() {
  // k[x,y]/(x^2, xy, y^2): two-dimensional socle
  const std::vector<std::string> vars = {"x", "y"};
  return IdealPresentation{vars,
                           {parse_polynomial("x^2", vars), parse_polynomial("x*y", vars),
                            parse_polynomial("y^2", vars)}};
}

}  // namespace ag::testing
