#include "ag/inverse_system.hpp"

#include <algorithm>

namespace ag {

namespace {

// Q/R share one expansion: sum_j omega((x_1 e_1 + ... + x_m e_m)^j)/j!
Polynomial moment_expansion(const LocalAlgebra& algebra, const RatVec& omega,
                            const std::vector<AlgebraElement>& elements) {
  const std::size_t d = algebra.dimension();
  const std::size_t m = elements.size();
  SymbolicElement generic(d, Polynomial(m));
  for (std::size_t k = 0; k < m; ++k) {
    const Polynomial var = Polynomial::variable(m, k);
    for (std::size_t i = 0; i < d; ++i)
      if (elements[k].coord(i) != 0) generic[i] += var * elements[k].coord(i);
  }
  SymbolicElement power(d, Polynomial(m));
  power[0] = Polynomial::constant(m, 1);  // j = 0 term is 1
  Polynomial out = apply_functional(omega, power);
  for (std::uint32_t j = 1; j <= algebra.socle_degree(); ++j) {
    power = symbolic_product(algebra, power, generic);
    out += apply_functional(omega, power) * (1 / factorial(j));
  }
  return out;
}

RatVec coefficient_vector(const Polynomial& f, const std::vector<Monomial>& basis) {
  RatVec v(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) v[i] = f.coefficient(basis[i]);
  return v;
}

}  // namespace

InverseSystemCandidate make_inverse_system_candidate(Polynomial g,
                                                     InverseSystemProvenance provenance) {
  const int deg = g.degree();
  if (deg < 1) throw std::invalid_argument("inverse system must be nonzero of degree >= 1");
  return InverseSystemCandidate{std::move(g), static_cast<std::uint32_t>(deg), provenance};
}

InverseSystemCandidate nil_restriction_inverse_system(
    const AdmissibleProjection& pi, const std::vector<AlgebraElement>& complement) {
  const auto& algebra = *pi.algebra();
  const std::size_t d = algebra.dimension();
  const std::size_t M = algebra.embedding_dimension();
  if (complement.size() != M)
    throw std::invalid_argument("complement basis must have " + std::to_string(M) +
                                " elements (the embedding dimension)");
  for (const auto& b : complement) {
    if (b.algebra() != pi.algebra()) throw std::invalid_argument("algebra mismatch");
    if (!b.in_maximal_ideal())
      throw std::invalid_argument("complement element outside the maximal ideal");
    if (pi.apply_functional(b) != 0)
      throw std::invalid_argument("complement element outside the projection kernel");
  }
  // residues must span m/m^2: rank of the m^2 span plus B must be
  // dim m^2 + M
  {
    RowSpan span(d);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 1; j < d; ++j) span.insert(algebra.product_coords(i, j));
    const std::size_t dim_m2 = span.rank();
    for (const auto& b : complement) span.insert(b.coords());
    if (span.rank() != dim_m2 + M)
      throw std::invalid_argument("complement does not span m/m^2");
  }
  Polynomial q = moment_expansion(algebra, pi.functional(), complement);
  InverseSystemCandidate out =
      make_inverse_system_candidate(std::move(q), InverseSystemProvenance::nil_restriction);
  if (out.socle_degree != algebra.socle_degree())
    throw std::logic_error("restricted nil-polynomial degree differs from the socle degree");
  return out;
}

InverseSystemCandidate generalized_inverse_system(
    const AlgebraPtr& algebra_ptr, const RatVec& omega,
    const std::vector<AlgebraElement>& generators) {
  const auto& algebra = *algebra_ptr;
  const std::size_t d = algebra.dimension();
  if (!algebra.is_gorenstein())
    throw std::invalid_argument("inverse systems require a Gorenstein algebra");
  if (omega.size() != d) throw std::invalid_argument("functional size mismatch");
  {
    Rational on_socle = 0;
    const AlgebraElement socle = algebra.socle_generator();
    for (std::size_t i = 0; i < d; ++i) on_socle += omega[i] * socle.coord(i);
    if (on_socle == 0)
      throw std::invalid_argument("functional kernel is not complementary to the socle");
  }
  for (const auto& e : generators) {
    if (e.algebra() != algebra_ptr) throw std::invalid_argument("algebra mismatch");
    if (!e.in_maximal_ideal())
      throw std::invalid_argument("generator outside the maximal ideal");
  }
  // iterated span closure: 1 and the generators must generate A
  {
    RowSpan span(d);
    std::vector<RatVec> fresh;
    span.insert(algebra.one().coords());
    fresh.push_back(algebra.one().coords());
    for (const auto& e : generators)
      if (span.insert(e.coords())) fresh.push_back(e.coords());
    while (!fresh.empty() && span.rank() < d) {
      std::vector<RatVec> next;
      for (const auto& v : fresh)
        for (const auto& e : generators) {
          const AlgebraElement prod = algebra.element(v) * e;
          if (span.insert(prod.coords())) next.push_back(prod.coords());
        }
      fresh = std::move(next);
    }
    if (span.rank() != d)
      throw std::invalid_argument("elements do not generate the algebra");
  }
  return make_inverse_system_candidate(moment_expansion(algebra, omega, generators),
                                       InverseSystemProvenance::generalized);
}

bool annihilates(const Polynomial& f, const InverseSystemCandidate& g) {
  return apolarity_apply(f, g.poly).is_zero();
}

std::size_t derivative_span_dimension(const InverseSystemCandidate& g) {
  if (g.poly.is_zero()) throw std::invalid_argument("zero inverse system");
  const std::size_t m = g.poly.arity();
  const std::uint32_t nu = static_cast<std::uint32_t>(g.poly.degree());
  const auto basis = monomials_up_to_degree(m, nu);
  RatMatrix rows;
  for (const auto& alpha : basis) {
    const Polynomial derived = apolarity_apply(Polynomial::term(alpha, 1), g.poly);
    rows.append_row(coefficient_vector(derived, basis));
  }
  return rows.rank();
}

InverseSystemReport verify_inverse_system(const LocalAlgebra& algebra,
                                          const InverseSystemCandidate& g) {
  if (g.poly.arity() != algebra.variables().size())
    throw std::invalid_argument("arity mismatch");
  InverseSystemReport report;
  report.algebra_dimension = algebra.dimension();

  for (const auto& gen : algebra.presentation().generators) {
    if (!annihilates(gen, g))
      report.failures.push_back("generator " + to_string(gen, algebra.variables()) +
                                " does not annihilate the candidate");
  }
  // once the construction stabilizes, the ideal is generated by the
  // presentation generators together with all monomials of degree D_stab
  for (const auto& mono :
       monomials_of_degree(g.poly.arity(), algebra.truncation_degree())) {
    if (!annihilates(Polynomial::term(mono, 1), g))
      report.failures.push_back("monomial " + to_string(mono, algebra.variables()) +
                                " does not annihilate the candidate");
  }
  report.span_dimension = derivative_span_dimension(g);
  if (report.span_dimension != report.algebra_dimension)
    report.failures.push_back(
        "derivative span dimension " + std::to_string(report.span_dimension) +
        " != algebra dimension " + std::to_string(report.algebra_dimension));
  report.ok = report.failures.empty();
  return report;
}

SubstitutionMap SubstitutionMap::make(std::vector<Polynomial> components,
                                      std::uint32_t truncation_degree) {
  const std::size_t m = components.size();
  if (m == 0) throw std::invalid_argument("empty substitution");
  if (truncation_degree < 1) throw std::invalid_argument("truncation degree must be >= 1");
  RatMatrix linear(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& T = components[i];
    if (T.arity() != m) throw std::invalid_argument("substitution component arity mismatch");
    if (T.constant_term() != 0)
      throw std::invalid_argument("substitution component has nonzero constant term");
    if (T.degree() > static_cast<int>(truncation_degree))
      throw std::invalid_argument("substitution component degree exceeds the truncation");
    for (std::size_t j = 0; j < m; ++j)
      linear.at(i, j) = T.coefficient(Monomial::variable(m, j));
  }
  if (linear.rank() != m)
    throw std::invalid_argument("substitution components have dependent linear parts");
  SubstitutionMap map(std::move(components), truncation_degree);
  map.basis_ = monomials_up_to_degree(m, truncation_degree);
  std::vector<RatVec> columns;
  columns.reserve(map.basis_.size());
  for (const auto& mono : map.basis_) {
    const Polynomial image = substitute_truncated(Polynomial::term(mono, 1),
                                                  map.components_, truncation_degree);
    columns.push_back(coefficient_vector(image, map.basis_));
  }
  map.matrix_ = RatMatrix::from_columns(columns);
  return map;
}

SubstitutionMap SubstitutionMap::identity(std::size_t arity,
                                          std::uint32_t truncation_degree) {
  std::vector<Polynomial> comps;
  comps.reserve(arity);
  for (std::size_t i = 0; i < arity; ++i) comps.push_back(Polynomial::variable(arity, i));
  return make(std::move(comps), truncation_degree);
}

Polynomial phi_apply(const SubstitutionMap& T, const Polynomial& f) {
  if (f.arity() != T.arity()) throw std::invalid_argument("arity mismatch");
  return substitute_truncated(f, T.components(), T.truncation_degree());
}

RatMatrix phi_matrix(const SubstitutionMap& T) { return T.matrix(); }

Polynomial phi_adjoint_apply(const SubstitutionMap& T, const Polynomial& g) {
  if (g.arity() != T.arity()) throw std::invalid_argument("arity mismatch");
  if (g.degree() > static_cast<int>(T.truncation_degree()))
    throw std::invalid_argument("degree overflow: candidate exceeds the truncated space");
  const auto& basis = T.basis();
  const auto weight = [&](std::size_t i) {
    Rational w = 1;
    for (std::size_t v = 0; v < basis[i].arity(); ++v)
      w *= factorial(basis[i].exponent(v));
    return w;
  };
  // adjoint under the factorial pairing: D^{-1} phi^T D
  RatVec weighted = coefficient_vector(g, basis);
  for (std::size_t i = 0; i < basis.size(); ++i) weighted[i] *= weight(i);
  RatVec image = T.matrix().transposed().apply(weighted);
  Polynomial out(g.arity());
  for (std::size_t i = 0; i < basis.size(); ++i)
    out.add_term(basis[i], image[i] / weight(i));
  return out;
}

EquivalenceReport check_equivalence(const InverseSystemCandidate& g1,
                                    const InverseSystemCandidate& g2,
                                    const SubstitutionMap& T, const Polynomial& h) {
  if (g1.poly.arity() != T.arity() || g2.poly.arity() != T.arity() ||
      h.arity() != T.arity())
    throw std::invalid_argument("arity mismatch");
  if (h.constant_term() == 0) throw std::invalid_argument("not a unit: h(0) = 0");

  const Polynomial lhs = phi_adjoint_apply(T, g1.poly);
  const Polynomial rhs = apolarity_apply(h, g2.poly);
  const bool direct = lhs == rhs;

  // pairing route: (phi(f) * g1)(0) = (f * (h * g2))(0) for every
  // monomial f of degree <= nu
  bool pairing = true;
  for (const auto& mono : monomials_up_to_degree(T.arity(), T.truncation_degree())) {
    const Polynomial f = Polynomial::term(mono, 1);
    if (apolarity_pairing(phi_apply(T, f), g1.poly) != apolarity_pairing(f, rhs)) {
      pairing = false;
      break;
    }
  }
  if (direct != pairing)
    throw std::logic_error("equivalence formulations disagree");

  EquivalenceReport report;
  report.holds = direct;
  const auto vars = numbered_variables("z", T.arity());
  report.lhs = to_string(lhs, vars);
  report.rhs = to_string(rhs, vars);
  if (!direct) {
    const Polynomial diff = lhs - rhs;
    report.first_mismatch_monomial = to_string(diff.terms().begin()->first, vars);
  }
  return report;
}

}  // namespace ag
