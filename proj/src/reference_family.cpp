#include "ag/reference_family.hpp"

namespace ag::reference {

namespace {

const std::vector<std::string> kVars = {"x", "y", "z"};

Polynomial parse3(const std::string& text) { return parse_polynomial(text, kVars); }

Monomial mono7(std::initializer_list<std::uint32_t> exps) {
  return Monomial(std::vector<std::uint32_t>(exps));
}

Polynomial with_terms(std::size_t arity,
                      std::initializer_list<std::pair<Monomial, Rational>> terms) {
  Polynomial f(arity);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

}  // namespace

IdealPresentation base_presentation() {
  return IdealPresentation{kVars,
                           jacobian_generators(parse3("x^4 + x*y^2 + y^3 + x*z^2"))};
}

IdealPresentation perturbed_presentation(const Rational& t) {
  if (t == 0) throw std::invalid_argument("perturbation parameter t must be nonzero");
  Polynomial f = parse3("x^4 + x*y^2 + y^3 + x*z^2");
  f.add_term(Monomial(std::vector<std::uint32_t>{5, 0, 0}), t);
  return IdealPresentation{kVars, jacobian_generators(f)};
}

std::vector<Monomial> maximal_ideal_basis() {
  const std::vector<std::string> texts = {"x^4", "x", "x^2", "x^3", "y", "z", "y*z", "z^2"};
  std::vector<Monomial> basis;
  for (const auto& text : texts) {
    const Polynomial p = parse3(text);
    basis.push_back(p.terms().begin()->first);
  }
  return basis;
}

AlgebraPtr build_base() {
  AlgebraBuildOptions opts;
  opts.basis_override = maximal_ideal_basis();
  return LocalAlgebra::build(base_presentation(), std::move(opts));
}

AlgebraPtr build_perturbed(const Rational& t) {
  AlgebraBuildOptions opts;
  opts.basis_override = maximal_ideal_basis();
  return LocalAlgebra::build(perturbed_presentation(t), std::move(opts));
}

AdmissibleProjection standard_projection(const AlgebraPtr& algebra) {
  return AdmissibleProjection::make(algebra);
}

Polynomial expected_nilpoly_base() {
  // x1*x3 + 1/2 x2^2 + 6 x2*x4 - 8/3 x4*x7 - 8/3 x5*x6
  // + 1/2 x1^2*x2 + 3 x1^2*x4 - 2 x1*x4^2 + 4/9 x4^3 - 4/3 x4*x5^2
  // + 1/24 x1^4
  return with_terms(
      7, {{mono7({1, 0, 1, 0, 0, 0, 0}), Rational(1)},
          {mono7({0, 2, 0, 0, 0, 0, 0}), make_rational(1, 2)},
          {mono7({0, 1, 0, 1, 0, 0, 0}), Rational(6)},
          {mono7({0, 0, 0, 1, 0, 0, 1}), make_rational(-8, 3)},
          {mono7({0, 0, 0, 0, 1, 1, 0}), make_rational(-8, 3)},
          {mono7({2, 1, 0, 0, 0, 0, 0}), make_rational(1, 2)},
          {mono7({2, 0, 0, 1, 0, 0, 0}), Rational(3)},
          {mono7({1, 0, 0, 2, 0, 0, 0}), Rational(-2)},
          {mono7({0, 0, 0, 3, 0, 0, 0}), make_rational(4, 9)},
          {mono7({0, 0, 0, 1, 2, 0, 0}), make_rational(-4, 3)},
          {mono7({4, 0, 0, 0, 0, 0, 0}), make_rational(1, 24)}});
}

Polynomial expected_nilpoly_perturbed(const Rational& t) {
  Polynomial p = expected_nilpoly_base();
  p.add_term(mono7({1, 0, 0, 1, 0, 0, 0}), t * make_rational(15, 2));
  p.add_term(mono7({0, 0, 0, 2, 0, 0, 0}), t * make_rational(-5, 2));
  return p;
}

Polynomial expected_inverse_system_base() {
  // 3 z1^2*z2 - 2 z1*z2^2 + 4/9 z2^3 - 4/3 z2*z3^2 + 1/24 z1^4
  return with_terms(3, {{Monomial(std::vector<std::uint32_t>{2, 1, 0}), Rational(3)},
                        {Monomial(std::vector<std::uint32_t>{1, 2, 0}), Rational(-2)},
                        {Monomial(std::vector<std::uint32_t>{0, 3, 0}), make_rational(4, 9)},
                        {Monomial(std::vector<std::uint32_t>{0, 1, 2}), make_rational(-4, 3)},
                        {Monomial(std::vector<std::uint32_t>{4, 0, 0}), make_rational(1, 24)}});
}

Polynomial expected_inverse_system_perturbed(const Rational& t) {
  Polynomial q = expected_inverse_system_base();
  q.add_term(Monomial(std::vector<std::uint32_t>{1, 1, 0}), t * make_rational(15, 2));
  q.add_term(Monomial(std::vector<std::uint32_t>{0, 2, 0}), t * make_rational(-5, 2));
  return q;
}

GradedLinearCandidate matching_candidate(const Rational& t) {
  RatMatrix L1 = RatMatrix::identity(7);
  L1.at(2, 3) = t * make_rational(15, 2);   // x_3 gets (15t/2) y_4
  L1.at(6, 3) = t * make_rational(15, 16);  // x_7 gets (15t/16) y_4
  return GradedLinearCandidate{std::move(L1), Rational(1)};
}

std::vector<Polynomial> equivalence_substitution(const Rational& t) {
  Polynomial t2 = Polynomial::variable(3, 1);
  t2.add_term(Monomial(std::vector<std::uint32_t>{0, 0, 2}), t * make_rational(-15, 16));
  t2.add_term(Monomial(std::vector<std::uint32_t>{3, 0, 0}), t * make_rational(-15, 2));
  return {Polynomial::variable(3, 0), std::move(t2), Polynomial::variable(3, 2)};
}

namespace {

void check(std::vector<SuiteCheck>& out, const std::string& name, bool passed,
           const std::string& detail = "") {
  out.push_back(SuiteCheck{name, passed, detail});
}

std::string hilbert_string(const std::vector<std::size_t>& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(h[i]);
  }
  return s;
}

}  // namespace

std::vector<SuiteCheck> run_suite(const Rational& t) {
  std::vector<SuiteCheck> checks;

  const AlgebraPtr base = build_base();
  const AlgebraPtr pert = build_perturbed(t);

  for (const auto& [label, algebra] :
       {std::pair<std::string, AlgebraPtr>{"base", base}, {"perturbed", pert}}) {
    check(checks, label + " dimension = 9", algebra->dimension() == 9,
          "got " + std::to_string(algebra->dimension()));
    check(checks, label + " socle degree = 4", algebra->socle_degree() == 4,
          "got " + std::to_string(algebra->socle_degree()));
    check(checks, label + " hilbert = 1,3,3,1,1",
          algebra->hilbert_function() == std::vector<std::size_t>{1, 3, 3, 1, 1},
          "got " + hilbert_string(algebra->hilbert_function()));
    check(checks, label + " embedding dimension = 3", algebra->embedding_dimension() == 3);
    check(checks, label + " Gorenstein", algebra->is_gorenstein());
  }

  const AdmissibleProjection pi0 = standard_projection(base);
  const AdmissibleProjection pit = standard_projection(pert);
  const NilPolynomial P0 = nil_polynomial(pi0);
  const NilPolynomial Pt = nil_polynomial(pit);
  const auto x_vars = numbered_variables("x", 7);
  const auto y_vars = numbered_variables("y", 7);
  check(checks, "base nil-polynomial", P0.poly == expected_nilpoly_base(),
        to_string(P0.poly, x_vars));
  check(checks, "perturbed nil-polynomial", Pt.poly == expected_nilpoly_perturbed(t),
        to_string(Pt.poly, y_vars));

  check(checks, "base Blaschke residual = 0", is_zero_vector(blaschke_residual(P0)));
  check(checks, "perturbed Blaschke residual = 0", is_zero_vector(blaschke_residual(Pt)));

  const GradedLinearCandidate candidate = matching_candidate(t);
  const DegreeMatchReport match = verify_graded_match(Pt, P0, candidate);
  check(checks, "graded match at degrees 2,3,4", match.matched);
  const AlgebraMap extended = extend_to_algebra_map(candidate, pit, pi0);
  check(checks, "extension is a homomorphism (oracle)",
        verify_algebra_homomorphism(extended));
  {
    bool recovered = false;
    std::string detail;
    try {
      const GradedLinearCandidate solved = solve_linear_ansatz(
          Pt, P0, {{3, 4}, {7, 4}}, RatMatrix::identity(7), Rational(1));
      recovered = solved.L1 == candidate.L1 && solved.c == candidate.c;
      detail = "entries " + to_string(solved.L1.at(2, 3)) + ", " +
               to_string(solved.L1.at(6, 3));
    } catch (const std::exception& e) {
      detail = e.what();
    }
    check(checks, "ansatz {(3,4),(7,4)} recovers the matching map", recovered, detail);
  }

  // inverse systems from the restriction to the x, y, z residues
  const auto restriction_of = [](const AdmissibleProjection& pi) {
    const auto& algebra = *pi.algebra();
    std::vector<AlgebraElement> B;
    for (std::size_t i = 0; i < 3; ++i)
      B.push_back(algebra.normal_form(Polynomial::variable(3, i)));
    return nil_restriction_inverse_system(pi, B);
  };
  const InverseSystemCandidate Q0 = restriction_of(pi0);
  const InverseSystemCandidate Qt = restriction_of(pit);
  const auto z_vars = numbered_variables("z", 3);
  check(checks, "base inverse system", Q0.poly == expected_inverse_system_base(),
        to_string(Q0.poly, z_vars));
  check(checks, "perturbed inverse system",
        Qt.poly == expected_inverse_system_perturbed(t), to_string(Qt.poly, z_vars));
  check(checks, "base inverse system verified", verify_inverse_system(*base, Q0).ok);
  check(checks, "perturbed inverse system verified", verify_inverse_system(*pert, Qt).ok);

  const SubstitutionMap T = SubstitutionMap::make(equivalence_substitution(t), 4);
  const EquivalenceReport equiv =
      check_equivalence(Qt, Q0, T, Polynomial::constant(3, 1));
  check(checks, "inverse-system equivalence via the substitution", equiv.holds,
        equiv.holds ? "" : "lhs " + equiv.lhs + " vs rhs " + equiv.rhs);

  return checks;
}

}  // namespace ag::reference
