#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ag/linalg.hpp"
#include "ag/poly_format.hpp"
#include "ag/polynomial.hpp"

namespace ag {

struct NotArtinianError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Generators of an ideal inside (x_1,...,x_m): every generator must have
// zero constant term, so the quotient is taken at the origin.
struct IdealPresentation {
  std::vector<std::string> variables;
  std::vector<Polynomial> generators;
};

class LocalAlgebra;
using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, RatVec coords);

  const AlgebraPtr& algebra() const { return algebra_; }
  const RatVec& coords() const { return coords_; }
  const Rational& coord(std::size_t i) const { return coords_[i]; }
  bool is_zero() const { return is_zero_vector(coords_); }
  // coordinate 0 is the coefficient of 1; all other basis labels lie in m
  bool in_maximal_ideal() const { return coords_[0] == 0; }

  AlgebraElement operator+(const AlgebraElement& other) const;
  AlgebraElement operator-(const AlgebraElement& other) const;
  AlgebraElement operator*(const AlgebraElement& other) const;
  AlgebraElement operator*(const Rational& scalar) const;
  bool operator==(const AlgebraElement& other) const;

 private:
  AlgebraPtr algebra_;
  RatVec coords_;
};

inline AlgebraElement operator*(const Rational& scalar, const AlgebraElement& a) {
  return a * scalar;
}

// Finite-dimensional local algebra k[[x_1,...,x_m]]/I presented by exact
// structure constants over a monomial basis. Construction truncates at
// increasing degree D and stops once the dimension of
// k[x]/(I + (x)^D) stabilizes; at that point (x)^D lies inside the ideal
// (Nakayama), so the structure constants are those of the local quotient
// itself. Instances are immutable once built.
struct AlgebraBuildOptions {
  // basis of the maximal ideal to use instead of the default standard
  // monomials; index 0 of the algebra basis is always the monomial 1
  std::vector<Monomial> basis_override;
  std::optional<Polynomial> socle_override;
  std::uint32_t max_truncation_degree = 32;
};

class LocalAlgebra : public std::enable_shared_from_this<LocalAlgebra> {
 public:
  static AlgebraPtr build(IdealPresentation pres, AlgebraBuildOptions opts = {});

  std::size_t dimension() const { return dim_; }
  std::size_t maximal_ideal_dimension() const { return dim_ - 1; }
  const std::vector<Monomial>& basis_labels() const { return labels_; }
  std::string label_string(std::size_t i) const;
  const IdealPresentation& presentation() const { return pres_; }
  const std::vector<std::string>& variables() const { return pres_.variables; }
  // smallest D with dim k[x]/(I+(x)^D) = dim k[x]/(I+(x)^{D+1})
  std::uint32_t truncation_degree() const { return stab_degree_; }

  std::uint32_t socle_degree() const { return socle_degree_; }
  const std::vector<std::size_t>& hilbert_function() const { return hilbert_; }
  std::size_t embedding_dimension() const { return embedding_dim_; }
  bool is_gorenstein() const { return socle_basis_.size() == 1; }
  std::size_t socle_dimension() const { return socle_basis_.size(); }
  const std::vector<RatVec>& socle_subspace() const { return socle_basis_; }
  AlgebraElement socle_generator() const;  // requires Gorenstein

  const RatVec& product_coords(std::size_t i, std::size_t j) const {
    return mult_[i * dim_ + j];
  }

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement basis_element(std::size_t i) const;
  AlgebraElement element(RatVec coords) const;

  // residue class of an arbitrary polynomial in the presentation
  // variables; a ring homomorphism onto the algebra
  AlgebraElement normal_form(const Polynomial& f) const;

 private:
  LocalAlgebra() = default;

  IdealPresentation pres_;
  std::size_t dim_ = 0;
  std::uint32_t stab_degree_ = 0;
  std::vector<Monomial> labels_;
  std::vector<RatVec> mult_;                // dim x dim structure constants
  std::map<Monomial, RatVec> reduction_;    // monomials of degree < D_stab
  std::vector<RatVec> socle_basis_;
  RatVec socle_generator_;
  std::uint32_t socle_degree_ = 0;
  std::vector<std::size_t> hilbert_;
  std::size_t embedding_dim_ = 0;
};

// exp(x) = sum_{m=0}^{nu} x^m/m! for x in the maximal ideal
AlgebraElement exp_m(const AlgebraElement& x);
// log(1+x) = sum_{m=1}^{nu} (-1)^{m+1} x^m / m for u = 1+x
AlgebraElement log_unit(const AlgebraElement& u);

// The element written as a linear combination of basis-label monomials.
Polynomial to_polynomial(const AlgebraElement& a);
std::string to_string(const AlgebraElement& a);

// Coordinates of a symbolic algebra element: entries are polynomials in
// some coordinate variables. Used to expand expressions like
// exp(a_1 e_1 + ... + a_n e_n) exactly.
using SymbolicElement = std::vector<Polynomial>;

SymbolicElement symbolic_product(const LocalAlgebra& algebra, const SymbolicElement& a,
                                 const SymbolicElement& b);
Polynomial apply_functional(const RatVec& omega, const SymbolicElement& a);

}  // namespace ag
