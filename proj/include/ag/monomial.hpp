#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ag {

// Exponent vector of fixed arity. The canonical order sorts by total
// degree first; inside a degree block, earlier-variable-heavy monomials
// come first. Basis selection in the quotient construction relies on
// "standard monomials are the canonical-minimal ones", and polynomial
// printing iterates in this order.
class Monomial {
 public:
  explicit Monomial(std::size_t arity) : exps_(arity, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}
  static Monomial variable(std::size_t arity, std::size_t index,
                           std::uint32_t power = 1);

  std::size_t arity() const { return exps_.size(); }
  std::uint32_t degree() const;
  std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exps_; }
  bool is_constant() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  bool divisible_by(const Monomial& other) const;
  Monomial divided_by(const Monomial& other) const;

  static int compare(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& other) const = default;
  bool operator<(const Monomial& other) const { return compare(*this, other) < 0; }

 private:
  std::vector<std::uint32_t> exps_;
};

// All monomials of the given arity with degree <= / == the bound,
// listed in canonical order.
std::vector<Monomial> monomials_up_to_degree(std::size_t arity, std::uint32_t degree);
std::vector<Monomial> monomials_of_degree(std::size_t arity, std::uint32_t degree);

}  // namespace ag
