#pragma once

#include <optional>
#include <vector>

#include "ag/local_algebra.hpp"

namespace ag {

// Linear projection of a Gorenstein algebra onto its socle whose kernel
// contains 1. Stored as the socle generator s, the functional omega with
// pi(a) = omega(a) s, and an ordered basis of K = ker(pi) intersected
// with the maximal ideal.
class AdmissibleProjection {
 public:
  static AdmissibleProjection make(
      AlgebraPtr algebra,
      std::optional<std::vector<AlgebraElement>> complement_basis = std::nullopt,
      std::optional<AlgebraElement> socle_generator = std::nullopt);

  const AlgebraPtr& algebra() const { return algebra_; }
  const AlgebraElement& socle_generator() const { return socle_; }
  const RatVec& functional() const { return omega_; }
  const std::vector<AlgebraElement>& kernel_basis() const { return kernel_basis_; }
  std::size_t kernel_dimension() const { return kernel_basis_.size(); }

  Rational apply_functional(const AlgebraElement& a) const;
  AlgebraElement project(const AlgebraElement& a) const;

  // decomposition m = K + Soc: kernel coordinates and the socle coordinate
  std::pair<RatVec, Rational> split(const AlgebraElement& x) const;
  AlgebraElement from_kernel_coords(const RatVec& coords) const;

 private:
  AlgebraPtr algebra_;
  AlgebraElement socle_;
  RatVec omega_;
  std::vector<AlgebraElement> kernel_basis_;
  RatMatrix frame_inverse_;  // inverse of the basis (1, kernel..., s)

  AdmissibleProjection(AlgebraPtr algebra, AlgebraElement socle, RatVec omega,
                       std::vector<AlgebraElement> kernel_basis, RatMatrix frame_inverse);
};

// P(a_1,...,a_n) = omega(exp(a_1 e_1 + ... + a_n e_n)) in the kernel-basis
// coordinates, socle identified with k via s. Zero constant and linear
// parts; degree equals the socle degree once dim A > 2.
struct NilPolynomial {
  AdmissibleProjection projection;
  Polynomial poly;
};

NilPolynomial nil_polynomial(const AdmissibleProjection& pi);

// Gram matrix of b(a,c) = omega(ac) over the full algebra basis.
RatMatrix bilinear_form_gram(const LocalAlgebra& algebra, const RatVec& omega);
// Same, from a projection; throws SingularMatrixError when degenerate,
// which cannot happen for a valid projection on a Gorenstein algebra.
RatMatrix bilinear_form_bpi(const AdmissibleProjection& pi);

// Dense symmetric order-m tensor on an n-dimensional space; every index
// permutation is materialized (fine for n <= 16).
class SymmetricForm {
 public:
  SymmetricForm(std::size_t dim, std::uint32_t order);
  std::size_t dimension() const { return dim_; }
  std::uint32_t order() const { return order_; }
  const Rational& value(const std::vector<std::size_t>& index) const;
  void set_symmetric(std::vector<std::size_t> index, const Rational& v);
  // sum over all ordered tuples of value * x_{i_1}...x_{i_m}
  Polynomial diagonal_polynomial() const;

 private:
  std::size_t flat(const std::vector<std::size_t>& index) const;
  std::size_t dim_;
  std::uint32_t order_;
  std::vector<Rational> entries_;
};

// pi_m(x_1,...,x_m) = pi(x_1 ... x_m) on the kernel basis, with values in
// k via the socle generator. Requires 2 <= m <= socle degree.
SymmetricForm pi_m_form(const AdmissibleProjection& pi, std::uint32_t m);

// Quadratic/cubic data of a nil-polynomial: P2 = sum g_ij a_i a_j,
// P3 = sum h_ijl a_i a_j a_l, together with the Gram of pi_2 and pi_3.
struct FormTensors {
  RatMatrix gram2;
  SymmetricForm pi3;
  RatMatrix g;       // = gram2 / 2
  SymmetricForm h;   // = pi3 / 6
};
FormTensors form_tensors(const AdmissibleProjection& pi);

// Unique z in K with pi_2(z, .) = pi_3(x, y, .); commutative and bilinear.
RatVec star_product(const AdmissibleProjection& pi, const RatVec& x, const RatVec& y);

// The vector (sum_{ij} g^{ij} h_{ijl})_l computed from the quadratic and
// cubic parts of P; identically zero for every nil-polynomial.
RatVec blaschke_residual(const Polynomial& P);
RatVec blaschke_residual(const NilPolynomial& P);

enum class HypersurfaceVariant {
  graph,     // S: graph of P inside m, eval = P(x_K) - u
  zero_set,  // script S: zero set of pi(exp(.)), eval = omega(exp(x))
};
Rational hypersurface_eval(const AdmissibleProjection& pi, const AlgebraElement& x,
                           HypersurfaceVariant variant);

// x0 in m with pi2(exp(x)) = pi1(exp(x + x0)) for all x in m; solved via
// the multiplication-operator map on K_1 and verified as an exact
// polynomial identity before returning.
AlgebraElement find_translation(const AdmissibleProjection& pi1,
                                const AdmissibleProjection& pi2);

// The projection a -> pi(exp(z0) a) for z0 on the zero-set hypersurface;
// its zero set is the translate of pi's by -z0.
AdmissibleProjection twist_projection(const AdmissibleProjection& pi,
                                      const AlgebraElement& z0);

}  // namespace ag
