#include <doctest.h>

#include "ag/poly_format.hpp"
#include "ag/polynomial.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

const std::vector<std::string> kXY = {"x1", "x2"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial p2(const std::string& text) { return parse_polynomial(text, kXY); }
Polynomial p3(const std::string& text) { return parse_polynomial(text, kXYZ); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(to_string(make_rational(-8, 6)) == "-4/3");
  CHECK(to_string(rational_from_string("15/2")) == "15/2");
  CHECK(rational_from_string("-3") == Rational(-3));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK(to_string(factorial(4)) == "24");
}

TEST_CASE("addition") {
  CHECK((p2("x1") + p2("-x1")).is_zero());
  CHECK(p2("x1^2") + p2("x2") == p2("x1^2 + x2"));
  // 1/2 + 1/3 = 5/6 by hand
  CHECK(p2("1/2*x1") + p2("1/3*x1") == p2("5/6*x1"));
  CHECK_THROWS_AS(p2("x1") + Polynomial(3), std::invalid_argument);
}

TEST_CASE("multiplication") {
  const Polynomial f = p2("x1^2 + 2*x2 - 1/3");
  CHECK(f * p2("1") == f);
  CHECK(p2("x1 + x2") * p2("x1 - x2") == p2("x1^2 - x2^2"));
  // (1/2 x1 + x2)^2 = 1/4 x1^2 + x1 x2 + x2^2 by hand
  const Polynomial g = p2("1/2*x1 + x2");
  CHECK(g * g == p2("1/4*x1^2 + x1*x2 + x2^2"));
}

TEST_CASE("truncate keeps low degrees") {
  CHECK(truncate(p2("x1^5 + x1^2"), 4) == p2("x1^2"));
  const Polynomial f = p2("1 + x1*x2 + x2^3");
  CHECK(truncate(f, f.degree()) == f);
  // hand degree count: the x1^2 x2^2 term has degree 4 > 3
  CHECK(truncate(p2("1 + x1 + x1^2*x2^2"), 3) == p2("1 + x1"));
  CHECK_THROWS_AS(truncate(f, -1), std::invalid_argument);
}

TEST_CASE("homogeneous components") {
  const Polynomial f = p2("1 + x1 + x1*x2 + 3*x2^2 + x1^3");
  CHECK(homogeneous_component(f, 2) == p2("x1*x2 + 3*x2^2"));
  CHECK(homogeneous_component(f, 7).is_zero());
  CHECK(homogeneous_component(f, 0) == p2("1"));
}

TEST_CASE("apolarity action") {
  const Polynomial g = p2("x1^2*x2^3");
  CHECK(apolarity_apply(p2("1"), g) == g);
  // d/dx1 (x1^2) = 2 x1 by hand
  CHECK(apolarity_apply(p2("x1"), p2("x1^2")) == p2("2*x1"));
  // (d/dx1 d/dx2)(x1^2 x2^3) = 2 x1 * 3 x2^2 = 6 x1 x2^2 by hand
  CHECK(apolarity_apply(p2("x1*x2"), g) == p2("6*x1*x2^2"));
}

TEST_CASE("apolarity pairing values") {
  CHECK(apolarity_pairing(p2("x1"), p2("x2")) == 0);
  // [x1^2 x2, x1^2 x2] = 2! * 1! = 2, confirmed by differentiation
  CHECK(apolarity_pairing(p2("x1^2*x2"), p2("x1^2*x2")) == 2);
  CHECK(apolarity_pairing(p2("1"), p2("1")) == 1);
}

TEST_CASE("apolarity pairing matches the factorial formula") {
  auto& engine = testing::rng();
  for (int trial = 0; trial < 30; ++trial) {
    const Polynomial f = testing::random_polynomial(engine, 3, 4, 6);
    const Polynomial g = testing::random_polynomial(engine, 3, 4, 6);
    Rational expected = 0;
    for (const auto& [m, cf] : f.terms()) {
      const Rational cg = g.coefficient(m);
      if (cg == 0) continue;
      Rational fact = 1;
      for (std::size_t v = 0; v < 3; ++v) fact *= factorial(m.exponent(v));
      expected += cf * cg * fact;
    }
    CHECK(apolarity_pairing(f, g) == expected);
    CHECK(apolarity_pairing(f, g) == apolarity_pairing(g, f));
  }
}

TEST_CASE("apolarity is bilinear and composes multiplicatively") {
  auto& engine = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = testing::random_polynomial(engine, 2, 3, 4);
    const Polynomial g = testing::random_polynomial(engine, 2, 3, 4);
    const Polynomial h = testing::random_polynomial(engine, 2, 5, 6);
    const Rational a = testing::random_rational(engine);
    const Rational b = testing::random_rational(engine);
    CHECK(apolarity_apply(f * a + g * b, h) ==
          apolarity_apply(f, h) * a + apolarity_apply(g, h) * b);
    CHECK(apolarity_apply(f * g, h) == apolarity_apply(f, apolarity_apply(g, h)));
  }
}

TEST_CASE("jacobian generators") {
  // hand differentiation of x^4 + x y^2 + y^3 + x z^2
  const Polynomial f = p3("x^4 + x*y^2 + y^3 + x*z^2");
  const auto J = jacobian_generators(f);
  REQUIRE(J.size() == 3);
  CHECK(J[0] == p3("4*x^3 + y^2 + z^2"));
  CHECK(J[1] == p3("2*x*y + 3*y^2"));
  CHECK(J[2] == p3("2*x*z"));

  const auto Jc = jacobian_generators(p3("7"));
  for (const auto& g : Jc) CHECK(g.is_zero());

  // hand differentiation of the perturbed generator at t = 1
  const auto Jt = jacobian_generators(p3("x^4 + x^5 + x*y^2 + y^3 + x*z^2"));
  CHECK(Jt[0] == p3("4*x^3 + 5*x^4 + y^2 + z^2"));
  CHECK(Jt[1] == p3("2*x*y + 3*y^2"));
  CHECK(Jt[2] == p3("2*x*z"));
}

TEST_CASE("truncated substitution") {
  const std::vector<std::string> zs = {"z1", "z2", "z3"};
  const auto pz = [&](const std::string& text) { return parse_polynomial(text, zs); };
  const std::vector<Polynomial> identity = {pz("z1"), pz("z2"), pz("z3")};
  const Polynomial f = pz("z1^2*z2 + z3^4 + z1^5");
  CHECK(substitute_truncated(f, identity, 4) == truncate(f, 4));

  // the worked substitution at t = 1
  const std::vector<Polynomial> T = {pz("z1"), pz("z2 - 15/16*z3^2 - 15/2*z1^3"),
                                     pz("z3")};
  CHECK(substitute_truncated(pz("z2"), T, 4) == pz("z2 - 15/16*z3^2 - 15/2*z1^3"));
  CHECK(substitute_truncated(pz("z1^4"), T, 4) == pz("z1^4"));

  CHECK_THROWS_AS(substitute_truncated(f, {pz("z1"), pz("z2 + 1"), pz("z3")}, 4),
                  std::invalid_argument);
  CHECK_THROWS_AS(substitute_truncated(f, {pz("z1"), pz("z1"), pz("z3")}, 4),
                  std::invalid_argument);
}

TEST_CASE("substitution identity property") {
  auto& engine = testing::rng();
  for (int trial = 0; trial < 10; ++trial) {
    const Polynomial f = testing::random_polynomial(engine, 3, 3, 6);
    if (f.degree() < 0) continue;
    std::vector<Polynomial> identity;
    for (std::size_t i = 0; i < 3; ++i) identity.push_back(Polynomial::variable(3, i));
    const std::uint32_t nu = static_cast<std::uint32_t>(std::max(1, f.degree()));
    CHECK(substitute_truncated(f, identity, nu) == f);
  }
}

TEST_CASE("parser handles the declared grammar") {
  CHECK(parse_polynomial("", kXY).is_zero());
  CHECK(parse_polynomial("0", kXY).is_zero());
  CHECK(p2("1/2*x1^2*x2").coefficient(Monomial({std::vector<std::uint32_t>{2, 1}})) ==
        make_rational(1, 2));
  CHECK(p2(" - x1 + 2 * x2 ") == p2("2*x2 - x1"));
  CHECK(p3("x^4 + x*y^2 + y^3 + x*z^2").term_count() == 4);
  CHECK_THROWS_AS(parse_polynomial("x1 + q", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x1 +", kXY), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x1", kXY), ParseError);
  try {
    parse_polynomial("x1 + w2", kXY);
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.position == 5);
  }
}

TEST_CASE("canonical printing is graded with highest degree last") {
  const Polynomial f = p2("x1^2 - 3*x2 + 1/2 - x1*x2^2");
  CHECK(to_string(f, kXY) == "1/2 - 3*x2 + x1^2 - x1*x2^2");
  CHECK(to_string(Polynomial(2), kXY) == "0");
  // inside one degree block, earlier-variable-heavy terms come first
  const Polynomial g = p2("x2^2 + x1*x2 + x1^2");
  CHECK(to_string(g, kXY) == "x1^2 + x1*x2 + x2^2");
}

TEST_CASE("parse after print is the identity") {
  auto& engine = testing::rng();
  const auto vars = numbered_variables("x", 4);
  for (int trial = 0; trial < 40; ++trial) {
    const Polynomial f = testing::random_polynomial(engine, 4, 5, 8);
    CHECK(parse_polynomial(to_string(f, vars), vars) == f);
  }
}

TEST_CASE("embed and parameter instantiation") {
  const Polynomial f = p2("x1^2 + 3*x2");
  const Polynomial g = embed(f, 4);
  CHECK(g.arity() == 4);
  CHECK(g.term_count() == 2);
  // substitute t = 5/7 into x1^2 + t*x1 over vars (x1, t)
  const std::vector<std::string> xt = {"x1", "t"};
  const Polynomial h = parse_polynomial("x1^2 + t*x1", xt);
  CHECK(instantiate_last_variable(h, make_rational(5, 7)) ==
        parse_polynomial("x1^2 + 5/7*x1", {"x1"}));
}
