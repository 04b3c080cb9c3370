#include <doctest.h>

#include "ag/iso_check.hpp"
#include "ag/reference_family.hpp"
#include "test_support.hpp"

using namespace ag;

TEST_CASE("graded match of the family candidate") {
  for (const Rational& t : {Rational(1), Rational(2), make_rational(-1, 3)}) {
    CAPTURE(to_string(t));
    const AlgebraPtr A0 = reference::build_base();
    const AlgebraPtr At = reference::build_perturbed(t);
    const NilPolynomial P0 = nil_polynomial(AdmissibleProjection::make(A0));
    const NilPolynomial Pt = nil_polynomial(AdmissibleProjection::make(At));

    SUBCASE("reflexivity") {
      CHECK(verify_graded_match(P0, P0, identity_candidate(7)).matched);
    }

    const GradedLinearCandidate candidate = reference::matching_candidate(t);
    const DegreeMatchReport report = verify_graded_match(Pt, P0, candidate);
    CHECK(report.matched);
    REQUIRE(report.degrees.size() == 3);
    for (const auto& [m, ok] : report.degrees) CHECK(ok);

    // identity fails at degree 2: the quadratic terms differ
    const DegreeMatchReport identity_report =
        verify_graded_match(Pt, P0, identity_candidate(7));
    CHECK_FALSE(identity_report.matched);
    CHECK(identity_report.degrees.front() == std::pair<std::uint32_t, bool>{2, false});
    CHECK(identity_report.degrees[1].second);  // cubics agree
    CHECK(identity_report.degrees[2].second);  // quartics agree
  }
}

TEST_CASE("extension to an algebra map and the oracle") {
  const Rational t = 1;
  const AlgebraPtr A0 = reference::build_base();
  const AlgebraPtr At = reference::build_perturbed(t);
  const AdmissibleProjection pi0 = AdmissibleProjection::make(A0);
  const AdmissibleProjection pit = AdmissibleProjection::make(At);

  const AlgebraMap map =
      extend_to_algebra_map(reference::matching_candidate(t), pit, pi0);
  // e_{t,4} maps to (15t/2) e_{0,3} + e_{0,4} + (15t/16) e_{0,7};
  // maximal-ideal coordinates index the labels x^4, x, x^2, x^3, y, ...
  CHECK(map.matrix.at(3, 4) == make_rational(15, 2));
  CHECK(map.matrix.at(4, 4) == 1);
  CHECK(map.matrix.at(7, 4) == make_rational(15, 16));
  CHECK(map.matrix.at(0, 0) == 1);
  CHECK(verify_algebra_homomorphism(map));

  // identity candidate on (A0, pi0, pi0) extends to the identity matrix
  const AlgebraMap id_map = extend_to_algebra_map(identity_candidate(7), pi0, pi0);
  CHECK(id_map.matrix == RatMatrix::identity(8));
  CHECK(verify_algebra_homomorphism(id_map));

  // the raw identity matrix is not a homomorphism from m_t to m_0
  const AlgebraMap not_hom{At, A0, RatMatrix::identity(8)};
  CHECK_FALSE(verify_algebra_homomorphism(not_hom));

  // unverified candidates are refused
  CHECK_THROWS_AS(extend_to_algebra_map(identity_candidate(7), pit, pi0),
                  std::invalid_argument);
}

TEST_CASE("scaling the socle needs a square root: rejected over the rationals") {
  // c = 2 on k[x]/(x^3) would need x -> a x with a^2 = 2
  const AlgebraPtr A = LocalAlgebra::build(testing::univariate_power(3));
  const NilPolynomial P = nil_polynomial(AdmissibleProjection::make(A));
  for (long num = -6; num <= 6; ++num) {
    if (num == 0) continue;
    for (long den = 1; den <= 4; ++den) {
      GradedLinearCandidate cand{RatMatrix::identity(1), Rational(2)};
      cand.L1.at(0, 0) = make_rational(num, den);
      CHECK_FALSE(verify_graded_match(P, P, cand).matched);
    }
  }
  // and the ansatz solver reports the obstruction as nonlinear
  CHECK_THROWS_AS(
      solve_linear_ansatz(P, P, {{1, 1}}, RatMatrix::identity(1), Rational(2)),
      NonlinearAnsatzError);
}

TEST_CASE("ansatz solver recovers the family matching map") {
  for (const Rational& t : {Rational(1), Rational(2), make_rational(-1, 3)}) {
    const AlgebraPtr A0 = reference::build_base();
    const AlgebraPtr At = reference::build_perturbed(t);
    const NilPolynomial P0 = nil_polynomial(AdmissibleProjection::make(A0));
    const NilPolynomial Pt = nil_polynomial(AdmissibleProjection::make(At));

    const GradedLinearCandidate solved = solve_linear_ansatz(
        Pt, P0, {{3, 4}, {7, 4}}, RatMatrix::identity(7), Rational(1));
    CHECK(solved.L1 == reference::matching_candidate(t).L1);
    CHECK(solved.c == 1);

    // the empty pattern on identical polynomials returns the identity
    const GradedLinearCandidate id =
        solve_linear_ansatz(P0, P0, {}, RatMatrix::identity(7), Rational(1));
    CHECK(id.L1 == RatMatrix::identity(7));

    // scaling y1 alone cannot absorb the quadratic mismatch
    CHECK_THROWS_AS(
        solve_linear_ansatz(Pt, P0, {{1, 1}}, RatMatrix::identity(7), Rational(1)),
        NoSolutionError);
  }
}

TEST_CASE("criterion report") {
  const Rational t = 1;
  const AlgebraPtr A0 = reference::build_base();
  const AlgebraPtr At = reference::build_perturbed(t);
  const AdmissibleProjection pi0 = AdmissibleProjection::make(A0);
  const AdmissibleProjection pit = AdmissibleProjection::make(At);

  const CriterionReport good =
      criterion_report(pit, pi0, reference::matching_candidate(t));
  CHECK(good.isomorphic);
  CHECK(good.oracle_homomorphism);
  CHECK(good.checked_degrees == std::vector<std::uint32_t>{2, 3, 4});
  REQUIRE(good.witness);
  CHECK(good.witness->L1.at(2, 3) == make_rational(15, 2));

  const CriterionReport self = criterion_report(pi0, pi0, std::nullopt);
  CHECK(self.isomorphic);

  // failed match is inconclusive, not a refutation
  const CriterionReport unmatched = criterion_report(pit, pi0, std::nullopt);
  CHECK_FALSE(unmatched.isomorphic);
  CHECK(unmatched.mismatches.empty());
  REQUIRE(unmatched.match_report);
  CHECK_FALSE(unmatched.match_report->matched);

  // structural mismatch: dimensions 9 vs 5
  const AlgebraPtr small = LocalAlgebra::build(testing::univariate_power(5));
  const CriterionReport mismatch =
      criterion_report(pi0, AdmissibleProjection::make(small), std::nullopt);
  CHECK_FALSE(mismatch.isomorphic);
  REQUIRE_FALSE(mismatch.mismatches.empty());
  CHECK(mismatch.mismatches.front().invariant == "dimension");
  CHECK(mismatch.mismatches.front().source_value == "9");
  CHECK(mismatch.mismatches.front().target_value == "5");
}

TEST_CASE("translation reduces affine data to the linear block step") {
  // a twisted projection has a translated zero set; find_translation
  // recovers the shift and the identity holds pointwise, independently of
  // the symbolic verification inside find_translation
  const AlgebraPtr A0 = reference::build_base();
  const AdmissibleProjection pi0 = AdmissibleProjection::make(A0);
  const NilPolynomial P0 = nil_polynomial(pi0);

  RatVec coords(7);
  coords[1] = 1;
  coords[5] = -3;
  std::vector<Rational> point(7, Rational(0));
  point[1] = 1;
  point[5] = -3;
  const AlgebraElement z0 = pi0.from_kernel_coords(coords) -
                            pi0.socle_generator() * evaluate(P0.poly, point);
  REQUIRE(hypersurface_eval(pi0, z0, HypersurfaceVariant::zero_set) == 0);
  const AdmissibleProjection twisted = twist_projection(pi0, z0);
  const AlgebraElement x0 = find_translation(pi0, twisted);
  CHECK(x0 == z0);

  auto& engine = testing::rng();
  for (int trial = 0; trial < 8; ++trial) {
    RatVec c(9);
    for (std::size_t i = 1; i < 9; ++i) c[i] = testing::random_rational(engine);
    const AlgebraElement x = A0->element(std::move(c));
    CHECK(twisted.apply_functional(exp_m(x)) == pi0.apply_functional(exp_m(x + x0)));
  }
}
