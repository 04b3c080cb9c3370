#pragma once

#include <string>
#include <vector>

#include "ag/inverse_system.hpp"
#include "ag/iso_check.hpp"

namespace ag::reference {

// Bundled verification family: the base algebra
// k[[x,y,z]] / J(x^4 + x*y^2 + y^3 + x*z^2) and its one-parameter
// perturbation with generator x^4 + t*x^5 + x*y^2 + y^3 + x*z^2, both
// taken with the monomial basis x^4, x, x^2, x^3, y, z, y*z, z^2 of the
// maximal ideal. Every expected value below is exact and the suite
// checks them all at a given t.

IdealPresentation base_presentation();
IdealPresentation perturbed_presentation(const Rational& t);  // requires t != 0

std::vector<Monomial> maximal_ideal_basis();

AlgebraPtr build_base();
AlgebraPtr build_perturbed(const Rational& t);

// Projection with kernel basis x, x^2, x^3, y, z, y*z, z^2 and socle
// generator x^4 (the default projection for this basis order).
AdmissibleProjection standard_projection(const AlgebraPtr& algebra);

Polynomial expected_nilpoly_base();                        // 7 variables
Polynomial expected_nilpoly_perturbed(const Rational& t);  // 7 variables

Polynomial expected_inverse_system_base();                        // 3 variables
Polynomial expected_inverse_system_perturbed(const Rational& t);  // 3 variables

// L1 with x_j = y_j except x_3 = y_3 + (15t/2) y_4 and
// x_7 = (15t/16) y_4 + y_7; socle scale 1.
GradedLinearCandidate matching_candidate(const Rational& t);

// T_1 = z_1, T_2 = z_2 - (15t/16) z_3^2 - (15t/2) z_1^3, T_3 = z_3.
std::vector<Polynomial> equivalence_substitution(const Rational& t);

struct SuiteCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Full reproduction suite at one parameter value; throws
// std::invalid_argument for t = 0 (the perturbation needs t in k*).
std::vector<SuiteCheck> run_suite(const Rational& t);

}  // namespace ag::reference
