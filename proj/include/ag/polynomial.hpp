#pragma once

#include <map>
#include <vector>

#include "ag/monomial.hpp"
#include "ag/rational.hpp"

namespace ag {

// Sparse multivariate polynomial over the rationals with a fixed arity.
// Zero coefficients are never stored; the term map iterates in the
// canonical monomial order, which is also the printing order. Values are
// immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  Polynomial() = default;  // the zero polynomial in zero variables
  explicit Polynomial(std::size_t arity) : arity_(arity) {}
  static Polynomial constant(std::size_t arity, const Rational& c);
  static Polynomial variable(std::size_t arity, std::size_t index);
  static Polynomial term(const Monomial& m, const Rational& c);

  std::size_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  // degree of the zero polynomial is -1
  int degree() const;
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;

  void add_term(const Monomial& m, const Rational& c);

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial operator*(const Rational& scalar) const;
  Polynomial& operator+=(const Polynomial& other);
  bool operator==(const Polynomial& other) const = default;

 private:
  std::size_t arity_ = 0;
  TermMap terms_;
};

inline Polynomial operator*(const Rational& scalar, const Polynomial& f) {
  return f * scalar;
}

// Terms of total degree <= max_degree.
Polynomial truncate(const Polynomial& f, int max_degree);

// Terms of total degree exactly m.
Polynomial homogeneous_component(const Polynomial& f, std::uint32_t m);

Polynomial partial_derivative(const Polynomial& f, std::size_t var);

// All first-order partial derivatives, in variable order.
std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// f(d/dx_1, ..., d/dx_M) applied to g.
Polynomial apolarity_apply(const Polynomial& f, const Polynomial& g);

// Constant term of f applied to g as a differential operator; symmetric,
// and on monomials [x^a, x^b] = 0 for a != b and a! for a = b.
Rational apolarity_pairing(const Polynomial& f, const Polynomial& g);

// Exact composition f(images[0], ..., images[arity-1]); the images must
// share a common arity, which becomes the arity of the result.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images);

// Substitution inside the truncated space k_nu[x]: the images must vanish
// at the origin and have linearly independent linear parts.
Polynomial substitute_truncated(const Polynomial& f,
                                const std::vector<Polynomial>& images,
                                std::uint32_t truncation_degree);

Rational evaluate(const Polynomial& f, const std::vector<Rational>& point);

// Same terms viewed in a ring with extra trailing variables.
Polynomial embed(const Polynomial& f, std::size_t new_arity);

// Substitute an exact value for the last variable and drop it.
Polynomial instantiate_last_variable(const Polynomial& f, const Rational& value);

}  // namespace ag
