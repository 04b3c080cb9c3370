#include "ag/iso_check.hpp"

#include <algorithm>

namespace ag {

GradedLinearCandidate identity_candidate(std::size_t n) {
  return GradedLinearCandidate{RatMatrix::identity(n), Rational(1)};
}

DegreeMatchReport verify_graded_match(const NilPolynomial& P, const NilPolynomial& Ptilde,
                                      const GradedLinearCandidate& candidate) {
  const std::size_t n = P.projection.kernel_dimension();
  if (Ptilde.projection.kernel_dimension() != n ||
      candidate.L1.rows() != n || candidate.L1.cols() != n)
    throw std::invalid_argument("kernel dimension mismatch");
  if (candidate.c == 0) throw std::invalid_argument("socle scale must be nonzero");
  if (!candidate.L1.invertible())
    throw std::invalid_argument("candidate matrix is singular");

  // x_i = sum_j L1[i][j] y_j substituted into Ptilde
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial image(n);
    for (std::size_t j = 0; j < n; ++j)
      if (candidate.L1.at(i, j) != 0)
        image += Polynomial::variable(n, j) * candidate.L1.at(i, j);
    images.push_back(std::move(image));
  }

  const std::uint32_t top = std::max(P.projection.algebra()->socle_degree(),
                                     Ptilde.projection.algebra()->socle_degree());
  DegreeMatchReport report;
  report.matched = true;
  for (std::uint32_t m = 2; m <= top; ++m) {
    const Polynomial lhs = homogeneous_component(P.poly, m) * candidate.c;
    const Polynomial rhs = substitute(homogeneous_component(Ptilde.poly, m), images);
    const bool ok = lhs == rhs;
    report.degrees.emplace_back(m, ok);
    report.matched = report.matched && ok;
  }
  return report;
}

AlgebraMap extend_to_algebra_map(const GradedLinearCandidate& candidate,
                                 const AdmissibleProjection& pi,
                                 const AdmissibleProjection& pi_tilde) {
  const NilPolynomial P = nil_polynomial(pi);
  const NilPolynomial Pt = nil_polynomial(pi_tilde);
  if (!verify_graded_match(P, Pt, candidate).matched)
    throw std::invalid_argument("candidate failed the graded match; refusing to extend");

  const auto& source = *pi.algebra();
  const auto& target = *pi_tilde.algebra();
  const std::size_t dm = source.dimension() - 1;
  if (target.dimension() - 1 != dm) throw std::invalid_argument("dimension mismatch");
  const std::size_t n = pi.kernel_dimension();

  RatMatrix matrix(dm, dm);
  for (std::size_t j = 1; j <= dm; ++j) {
    const auto [kernel_coords, socle_coord] = pi.split(source.basis_element(j));
    // image = sum_i (L1 a)_i v~_i + c u s~
    const RatVec mapped = candidate.L1.apply(kernel_coords);
    AlgebraElement image = pi_tilde.socle_generator() * (candidate.c * socle_coord);
    for (std::size_t i = 0; i < n; ++i)
      image = image + pi_tilde.kernel_basis()[i] * mapped[i];
    if (image.coord(0) != 0) throw std::logic_error("image leaves the maximal ideal");
    for (std::size_t k = 1; k <= dm; ++k) matrix.at(k - 1, j - 1) = image.coord(k);
  }
  return AlgebraMap{pi.algebra(), pi_tilde.algebra(), std::move(matrix)};
}

bool verify_algebra_homomorphism(const AlgebraMap& map) {
  const auto& source = *map.source;
  const auto& target = *map.target;
  const std::size_t dm = source.dimension() - 1;
  if (target.dimension() - 1 != dm || map.matrix.rows() != dm || map.matrix.cols() != dm)
    return false;
  if (!map.matrix.invertible()) return false;

  const auto apply_map = [&](const RatVec& coords) {
    // coords are full algebra coordinates of a maximal-ideal element
    RatVec restricted(coords.begin() + 1, coords.end());
    const RatVec mapped = map.matrix.apply(restricted);
    RatVec full(target.dimension());
    for (std::size_t k = 0; k < dm; ++k) full[k + 1] = mapped[k];
    return target.element(std::move(full));
  };

  for (std::size_t i = 1; i <= dm; ++i)
    for (std::size_t j = i; j <= dm; ++j) {
      const RatVec& prod = source.product_coords(i, j);
      if (prod[0] != 0) return false;  // products of m-elements stay in m
      const AlgebraElement lhs = apply_map(prod);
      const AlgebraElement rhs = apply_map(source.basis_element(i).coords()) *
                                 apply_map(source.basis_element(j).coords());
      if (!(lhs == rhs)) return false;
    }
  return true;
}

GradedLinearCandidate solve_linear_ansatz(
    const NilPolynomial& P, const NilPolynomial& Ptilde,
    const std::vector<std::pair<std::size_t, std::size_t>>& pattern,
    const RatMatrix& base, const Rational& c) {
  const std::size_t n = P.projection.kernel_dimension();
  if (Ptilde.projection.kernel_dimension() != n || base.rows() != n || base.cols() != n)
    throw std::invalid_argument("kernel dimension mismatch");
  const std::size_t unknowns = pattern.size();
  for (const auto& [r, col] : pattern)
    if (r < 1 || r > n || col < 1 || col > n)
      throw std::invalid_argument("ansatz pattern entry out of range");

  // variables: y_0..y_{n-1}, then one unknown per pattern entry
  const std::size_t total_vars = n + unknowns;
  std::vector<Polynomial> images(n, Polynomial(total_vars));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool is_free = false;
      for (std::size_t p = 0; p < unknowns; ++p) {
        if (pattern[p].first == i + 1 && pattern[p].second == j + 1) {
          images[i] += Polynomial::variable(total_vars, n + p) *
                       Polynomial::variable(total_vars, j);
          is_free = true;
          break;
        }
      }
      if (!is_free && base.at(i, j) != 0)
        images[i] += Polynomial::variable(total_vars, j) * base.at(i, j);
    }

  const std::uint32_t top = std::max(P.projection.algebra()->socle_degree(),
                                     Ptilde.projection.algebra()->socle_degree());
  Polynomial difference(total_vars);
  for (std::uint32_t m = 2; m <= top; ++m) {
    difference += embed(homogeneous_component(P.poly, m), total_vars) * c;
    difference += -substitute(homogeneous_component(Ptilde.poly, m), images);
  }

  // One equation per y-monomial. Groups that stay affine in the unknowns
  // form a necessary linear system: if it is inconsistent the ansatz has
  // no solution regardless of the nonlinear leftovers; if it is
  // consistent but nonlinear groups exist, the ansatz is rejected as
  // nonlinear instead of being guessed at.
  struct Equation {
    Rational constant{0};
    RatVec linear;
    bool nonlinear = false;
  };
  std::map<Monomial, Equation> equations;
  for (const auto& [mono, coeff] : difference.terms()) {
    std::uint32_t u_degree = 0;
    for (std::size_t p = 0; p < unknowns; ++p) u_degree += mono.exponent(n + p);
    std::vector<std::uint32_t> y_exps(mono.exponents().begin(),
                                      mono.exponents().begin() + n);
    auto [it, inserted] = equations.try_emplace(Monomial{std::move(y_exps)});
    if (inserted) it->second.linear.assign(unknowns, Rational(0));
    if (u_degree == 0) {
      it->second.constant += coeff;
    } else if (u_degree == 1) {
      for (std::size_t p = 0; p < unknowns; ++p)
        if (mono.exponent(n + p) == 1) it->second.linear[p] += coeff;
    } else {
      it->second.nonlinear = true;
    }
  }

  RatMatrix system(0, unknowns);
  RatVec rhs;
  bool any_nonlinear = false;
  for (const auto& [y_part, eq] : equations) {
    if (eq.nonlinear) {
      any_nonlinear = true;
      continue;
    }
    if (is_zero_vector(eq.linear)) {
      if (eq.constant != 0) throw NoSolutionError("no solution in this ansatz");
      continue;
    }
    system.append_row(eq.linear);
    rhs.push_back(-eq.constant);
  }
  const auto solution = system.solve(rhs);
  if (!solution) throw NoSolutionError("no solution in this ansatz");
  if (any_nonlinear)
    throw NonlinearAnsatzError(
        "nonlinear ansatz: matching equations are not affine in the unknowns");

  RatMatrix L1 = base;
  for (std::size_t p = 0; p < unknowns; ++p)
    L1.at(pattern[p].first - 1, pattern[p].second - 1) = (*solution)[p];
  if (!L1.invertible()) throw NoSolutionError("solved ansatz matrix is singular");
  GradedLinearCandidate candidate{std::move(L1), c};
  if (!verify_graded_match(P, Ptilde, candidate).matched)
    throw std::logic_error("ansatz solution failed re-verification");
  return candidate;
}

namespace {

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

CriterionReport criterion_report(const AdmissibleProjection& pi,
                                 const AdmissibleProjection& pi_tilde,
                                 const std::optional<GradedLinearCandidate>& candidate) {
  CriterionReport report;
  const auto& source = *pi.algebra();
  const auto& target = *pi_tilde.algebra();

  if (source.dimension() != target.dimension())
    report.mismatches.push_back({"dimension", std::to_string(source.dimension()),
                                 std::to_string(target.dimension())});
  if (source.socle_degree() != target.socle_degree())
    report.mismatches.push_back({"socle_degree", std::to_string(source.socle_degree()),
                                 std::to_string(target.socle_degree())});
  if (source.hilbert_function() != target.hilbert_function())
    report.mismatches.push_back({"hilbert", join_sizes(source.hilbert_function()),
                                 join_sizes(target.hilbert_function())});
  if (source.embedding_dimension() != target.embedding_dimension())
    report.mismatches.push_back({"embedding_dimension",
                                 std::to_string(source.embedding_dimension()),
                                 std::to_string(target.embedding_dimension())});
  if (!report.mismatches.empty()) return report;

  const NilPolynomial P = nil_polynomial(pi);
  const NilPolynomial Pt = nil_polynomial(pi_tilde);
  const GradedLinearCandidate cand =
      candidate ? *candidate : identity_candidate(pi.kernel_dimension());

  DegreeMatchReport match = verify_graded_match(P, Pt, cand);
  for (const auto& [m, ok] : match.degrees) {
    (void)ok;
    report.checked_degrees.push_back(m);
  }
  report.match_report = match;
  if (!match.matched) return report;

  AlgebraMap extended = extend_to_algebra_map(cand, pi, pi_tilde);
  report.oracle_homomorphism = verify_algebra_homomorphism(extended);
  if (!report.oracle_homomorphism)
    throw std::logic_error("graded match passed but the homomorphism oracle failed");
  report.witness = cand;
  report.extended_map = std::move(extended);
  report.isomorphic = true;
  return report;
}

}  // namespace ag
