#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ag/nilpoly.hpp"

namespace ag {

enum class InverseSystemProvenance { nil_restriction, generalized, user_supplied };

// A polynomial g of degree nu proposed as a Macaulay inverse system:
// the defining ideal of the quotient should equal Ann(g).
struct InverseSystemCandidate {
  Polynomial poly;
  std::uint32_t socle_degree;
  InverseSystemProvenance provenance;
};

InverseSystemCandidate make_inverse_system_candidate(
    Polynomial g, InverseSystemProvenance provenance = InverseSystemProvenance::user_supplied);

// Q(x_1,...,x_M) = sum_{j=0}^{nu} omega((x_1 b_1 + ... + x_M b_M)^j)/j!
// for a basis B of a complement to m^2 inside ker(omega); equals the
// restriction of the nil-polynomial of pi to span(B).
InverseSystemCandidate nil_restriction_inverse_system(
    const AdmissibleProjection& pi, const std::vector<AlgebraElement>& complement);

// Same formula over any algebra-generating tuple e_1,...,e_m and any
// functional with kernel complementary to the socle; m need not equal
// the embedding dimension.
InverseSystemCandidate generalized_inverse_system(
    const AlgebraPtr& algebra, const RatVec& omega,
    const std::vector<AlgebraElement>& generators);

bool annihilates(const Polynomial& f, const InverseSystemCandidate& g);

// dim span{x^a * g : all a} = dim k[x]/Ann(g)
std::size_t derivative_span_dimension(const InverseSystemCandidate& g);

struct InverseSystemReport {
  bool ok = false;
  std::vector<std::string> failures;
  std::size_t span_dimension = 0;
  std::size_t algebra_dimension = 0;
};

// Checks that the presentation ideal annihilates g (generators plus all
// monomials of the stabilized truncation degree) and that the derivative
// span dimension matches dim A; together these give I = Ann(g).
InverseSystemReport verify_inverse_system(const LocalAlgebra& algebra,
                                          const InverseSystemCandidate& g);

// Substitution data T_1,...,T_m in k_nu[x]: components vanish at the
// origin and have linearly independent linear parts, so f -> f(T) induces
// a linear automorphism of k_nu[x].
class SubstitutionMap {
 public:
  static SubstitutionMap make(std::vector<Polynomial> components,
                              std::uint32_t truncation_degree);
  static SubstitutionMap identity(std::size_t arity, std::uint32_t truncation_degree);

  std::size_t arity() const { return components_.size(); }
  std::uint32_t truncation_degree() const { return truncation_degree_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  // matrix of phi over the canonical monomial basis; fixed at construction
  const RatMatrix& matrix() const { return matrix_; }

 private:
  SubstitutionMap(std::vector<Polynomial> components, std::uint32_t truncation_degree)
      : components_(std::move(components)), truncation_degree_(truncation_degree) {}
  std::vector<Polynomial> components_;
  std::uint32_t truncation_degree_;
  std::vector<Monomial> basis_;
  RatMatrix matrix_;
};

// f -> f(T_1,...,T_m) mod degree > nu
Polynomial phi_apply(const SubstitutionMap& T, const Polynomial& f);

// Matrix of phi over the canonical monomial basis of k_nu[x].
RatMatrix phi_matrix(const SubstitutionMap& T);

// Adjoint with respect to [f,g] = (f * g)(0): the matrix transpose under
// the diagonal factorial weighting [x^a, x^a] = a!.
Polynomial phi_adjoint_apply(const SubstitutionMap& T, const Polynomial& g);

struct EquivalenceReport {
  bool holds = false;
  std::string lhs;  // canonical string of phi*(g1)
  std::string rhs;  // canonical string of h * g2
  std::optional<std::string> first_mismatch_monomial;
};

// phi*(g1) = h * g2, cross-checked against the pairing identity
// (phi(f) * g1)(0) = (f * (h * g2))(0) over every monomial f of degree
// <= nu; the two formulations must agree.
EquivalenceReport check_equivalence(const InverseSystemCandidate& g1,
                                    const InverseSystemCandidate& g2,
                                    const SubstitutionMap& T, const Polynomial& h);

}  // namespace ag
