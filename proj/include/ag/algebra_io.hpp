#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ag/inverse_system.hpp"
#include "ag/iso_check.hpp"

namespace ag {

// Text description of an algebra: a "vars:" header, generator lines
// ("gen:" or "jacobian-of:"), and optional "basis:" / "socle:" lines.
// Polynomials may mention the parameter name "t" unless it is a declared
// variable; in that case a value must be supplied.
struct AlgebraFile {
  IdealPresentation presentation;
  std::vector<Monomial> basis;  // empty when absent
  std::optional<Polynomial> socle;
};

AlgebraFile parse_algebra_file(const std::string& content,
                               const std::optional<Rational>& t_value);
AlgebraFile load_algebra_file(const std::string& path,
                              const std::optional<Rational>& t_value);

AlgebraPtr build_from_file(const AlgebraFile& file, std::uint32_t max_truncation = 32);

// Inverse-system file: "vars:" header plus one "poly:" line.
struct InverseSystemFile {
  std::vector<std::string> variables;
  Polynomial poly;
};
InverseSystemFile parse_inverse_system_file(const std::string& content,
                                            const std::optional<Rational>& t_value);
InverseSystemFile load_inverse_system_file(const std::string& path,
                                           const std::optional<Rational>& t_value);

// Substitution file: "vars:" header plus one "T:" line per component.
struct SubstitutionFile {
  std::vector<std::string> variables;
  std::vector<Polynomial> components;
};
SubstitutionFile parse_substitution_file(const std::string& content,
                                         const std::optional<Rational>& t_value);
SubstitutionFile load_substitution_file(const std::string& path,
                                        const std::optional<Rational>& t_value);

// Candidate JSON: {"L1": [["p/q", ...], ...], "c": "p/q"}.
GradedLinearCandidate parse_candidate_json(const nlohmann::json& j);
GradedLinearCandidate load_candidate_file(const std::string& path);

// Polynomial text with optional parameter substitution: parses over the
// declared variables, allowing "t" as an extra name when a value is given.
Polynomial parse_with_parameter(const std::string& text,
                                const std::vector<std::string>& variables,
                                const std::optional<Rational>& t_value);

std::string algebra_report_text(const LocalAlgebra& algebra);
nlohmann::json algebra_report_json(const LocalAlgebra& algebra);

nlohmann::json nilpoly_json(const NilPolynomial& P, const std::string& prefix);
nlohmann::json inverse_system_json(const InverseSystemCandidate& g,
                                   const std::vector<std::string>& variables);
nlohmann::json equivalence_json(const EquivalenceReport& report);
nlohmann::json matrix_json(const RatMatrix& m);
nlohmann::json criterion_json(const CriterionReport& report);

}  // namespace ag
