#include <doctest.h>

#include "ag/local_algebra.hpp"
#include "ag/reference_family.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

AlgebraElement nf(const AlgebraPtr& A, const std::string& text) {
  return A->normal_form(parse_polynomial(text, A->variables()));
}

}  // namespace

TEST_CASE("univariate truncation k[x]/(x^3)") {
  const AlgebraPtr A = LocalAlgebra::build(testing::univariate_power(3));
  CHECK(A->dimension() == 3);
  CHECK(A->socle_degree() == 2);
  CHECK(A->hilbert_function() == std::vector<std::size_t>{1, 1, 1});
  CHECK(A->embedding_dimension() == 1);
  CHECK(A->is_gorenstein());
  CHECK(A->label_string(0) == "1");
  CHECK(A->label_string(1) == "x");
  CHECK(A->label_string(2) == "x^2");
  CHECK(to_string(A->socle_generator()) == "x^2");
}

TEST_CASE("hand reduction oracle k[x,y]/(xy, x^2 - y^2)") {
  // by hand: x^2 = y^2, xy = 0, x^3 = x*y^2 = (xy)y = 0, so the standard
  // monomials are 1, x, y, x^2 and the socle is x^2
  const AlgebraPtr A = LocalAlgebra::build(testing::mixed_relations());
  CHECK(A->dimension() == 4);
  CHECK(A->socle_degree() == 2);
  CHECK(A->label_string(1) == "x");
  CHECK(A->label_string(2) == "y");
  CHECK(A->label_string(3) == "x^2");
  CHECK(A->is_gorenstein());
  CHECK(to_string(A->socle_generator()) == "x^2");
  CHECK(nf(A, "y^2") == A->basis_element(3));
  CHECK(nf(A, "x*y").is_zero());
}

TEST_CASE("hand computation oracle k[x,y]/(x^2, y^2)") {
  const AlgebraPtr A = LocalAlgebra::build(testing::two_squares());
  CHECK(A->dimension() == 4);
  CHECK(A->socle_degree() == 2);
  CHECK(A->is_gorenstein());
  CHECK(to_string(A->socle_generator()) == "x*y");
  CHECK(A->hilbert_function() == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("non-Gorenstein control has a two-dimensional socle") {
  const AlgebraPtr A = LocalAlgebra::build(testing::non_gorenstein_control());
  CHECK(A->dimension() == 3);
  CHECK(A->socle_dimension() == 2);
  CHECK_FALSE(A->is_gorenstein());
  CHECK_THROWS_AS(A->socle_generator(), std::invalid_argument);
}

TEST_CASE("base family member invariants") {
  const AlgebraPtr A = reference::build_base();
  CHECK(A->dimension() == 9);
  CHECK(A->socle_degree() == 4);
  CHECK(A->hilbert_function() == std::vector<std::size_t>{1, 3, 3, 1, 1});
  CHECK(A->embedding_dimension() == 3);
  CHECK(A->is_gorenstein());
  CHECK(A->truncation_degree() == 5);
  CHECK(to_string(A->socle_generator()) == "x^4");
}

TEST_CASE("perturbed family member invariants at several t") {
  for (const Rational& t :
       {Rational(1), Rational(2), make_rational(-1, 3), make_rational(5, 7)}) {
    const AlgebraPtr A = reference::build_perturbed(t);
    CHECK(A->dimension() == 9);
    CHECK(A->socle_degree() == 4);
    CHECK(A->hilbert_function() == std::vector<std::size_t>{1, 3, 3, 1, 1});
    CHECK(A->is_gorenstein());
  }
}

TEST_CASE("normal forms in the base algebra") {
  const AlgebraPtr A = reference::build_base();
  // x^4 represents the socle generator, basis index 1
  CHECK(nf(A, "x^4") == A->basis_element(1));
  for (const auto& g : A->presentation().generators)
    CHECK(A->normal_form(g).is_zero());
  // x^2*y = 6 x^4: forced by the 6 x2 x4 coefficient and checked by hand
  CHECK(nf(A, "x^2*y") == A->basis_element(1) * Rational(6));
  CHECK(nf(A, "x*y^2") == A->basis_element(1) * Rational(-4));
  CHECK(nf(A, "y^3") == A->basis_element(1) * make_rational(8, 3));
  CHECK(nf(A, "x*z").is_zero());
}

TEST_CASE("multiplication agrees with the normal-form oracle") {
  const AlgebraPtr A = reference::build_base();
  const AlgebraElement one = A->one();
  const AlgebraElement x = A->basis_element(2);
  CHECK(one * x == x);
  // socle times anything in m is zero
  const AlgebraElement socle = A->socle_generator();
  for (std::size_t i = 1; i < A->dimension(); ++i)
    CHECK((socle * A->basis_element(i)).is_zero());
  // x * x^3 = x^4
  CHECK(A->basis_element(2) * A->basis_element(4) == A->basis_element(1));

  // dual route: structure constants versus polynomial reduction
  auto& engine = testing::rng();
  for (int trial = 0; trial < 15; ++trial) {
    const Polynomial f = testing::random_polynomial(engine, 3, 4, 6);
    const Polynomial g = testing::random_polynomial(engine, 3, 4, 6);
    CHECK(A->normal_form(f * g) == A->normal_form(f) * A->normal_form(g));
  }
}

TEST_CASE("exp and log") {
  const AlgebraPtr A = reference::build_base();
  CHECK(exp_m(A->zero()) == A->one());
  const AlgebraElement s = A->socle_generator();
  CHECK(exp_m(s) == A->one() + s);
  // exp(x) = 1 + x + x^2/2 + x^3/6 + x^4/24 with x^4 the socle label
  const AlgebraElement via_exp = exp_m(A->basis_element(2));
  AlgebraElement expected = A->one() + A->basis_element(2) +
                            A->basis_element(3) * make_rational(1, 2) +
                            A->basis_element(4) * make_rational(1, 6) +
                            A->basis_element(1) * make_rational(1, 24);
  CHECK(via_exp == expected);
  CHECK_THROWS_AS(exp_m(A->one()), std::invalid_argument);
  CHECK_THROWS_AS(log_unit(A->basis_element(2)), std::invalid_argument);
}

TEST_CASE("exp and log are mutually inverse on a spanning set") {
  for (const auto& pres :
       {testing::univariate_power(4), testing::two_squares(), testing::mixed_relations(),
        testing::non_gorenstein_control(), reference::base_presentation()}) {
    const AlgebraPtr A = LocalAlgebra::build(pres);
    auto& engine = testing::rng();
    for (std::size_t i = 1; i < A->dimension(); ++i) {
      const AlgebraElement x = A->basis_element(i);
      CHECK(log_unit(exp_m(x)) == x);
    }
    for (int trial = 0; trial < 5; ++trial) {
      RatVec coords(A->dimension());
      for (std::size_t i = 1; i < A->dimension(); ++i)
        coords[i] = testing::random_rational(engine);
      const AlgebraElement x = A->element(std::move(coords));
      CHECK(log_unit(exp_m(x)) == x);
      CHECK(exp_m(log_unit(A->one() + x)) == A->one() + x);
    }
  }
}

TEST_CASE("basis override is validated") {
  AlgebraBuildOptions opts;
  opts.basis_override = reference::maximal_ideal_basis();
  opts.basis_override[0] = opts.basis_override[1];  // duplicate: dependent
  CHECK_THROWS_AS(LocalAlgebra::build(reference::base_presentation(), opts),
                  std::invalid_argument);

  AlgebraBuildOptions wrong_count;
  wrong_count.basis_override = {Monomial::variable(3, 0)};
  CHECK_THROWS_AS(LocalAlgebra::build(reference::base_presentation(), wrong_count),
                  std::invalid_argument);
}

TEST_CASE("socle override rescales the chosen generator") {
  AlgebraBuildOptions opts;
  opts.socle_override = parse_polynomial("2*x^2", {"x"});
  const AlgebraPtr A = LocalAlgebra::build(testing::univariate_power(3), opts);
  CHECK(to_string(A->socle_generator()) == "2*x^2");

  AlgebraBuildOptions bad;
  bad.socle_override = parse_polynomial("x", {"x"});
  CHECK_THROWS_AS(LocalAlgebra::build(testing::univariate_power(3), bad),
                  std::invalid_argument);
}

TEST_CASE("rejects non-Artinian and malformed input") {
  // zero ideal: dimension grows until the cap
  IdealPresentation zero_ideal{{"x"}, {Polynomial(1)}};
  CHECK_THROWS_AS(LocalAlgebra::build(zero_ideal), NotArtinianError);

  IdealPresentation constant{{"x"},
                             {parse_polynomial("x + 1", {"x"})}};
  CHECK_THROWS_AS(LocalAlgebra::build(constant), std::invalid_argument);

  // y free: the quotient k[x,y]/(x^2) is not finite-dimensional
  IdealPresentation not_artinian{{"x", "y"},
                                 {parse_polynomial("x^2", {"x", "y"})}};
  CHECK_THROWS_AS(LocalAlgebra::build(not_artinian), NotArtinianError);
}

TEST_CASE("local quotient ignores components away from the origin") {
  // k[x]/(x + x^3) is one-dimensional locally: x + x^3 = x(1 + x^2)
  IdealPresentation pres{{"x"}, {parse_polynomial("x + x^3", {"x"})}};
  const AlgebraPtr A = LocalAlgebra::build(pres);
  CHECK(A->dimension() == 1);
  CHECK(A->socle_degree() == 0);
}
