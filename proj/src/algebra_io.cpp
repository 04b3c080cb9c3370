#include "ag/algebra_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ag {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string item;
  while (std::getline(stream, item, sep)) {
    const std::string t = trim(item);
    if (!t.empty()) parts.push_back(t);
  }
  return parts;
}

// key/value lines, '#' comments, blank lines skipped
std::vector<std::pair<std::string, std::string>> key_value_lines(
    const std::string& content) {
  std::vector<std::pair<std::string, std::string>> lines;
  std::stringstream stream(content);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto colon = t.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'key: value'");
    lines.emplace_back(trim(t.substr(0, colon)), trim(t.substr(colon + 1)));
  }
  return lines;
}

Monomial monomial_from_text(const std::string& text,
                            const std::vector<std::string>& variables) {
  const Polynomial p = parse_polynomial(text, variables);
  if (p.term_count() != 1 || p.terms().begin()->second != 1)
    throw std::runtime_error("expected a monomial: " + text);
  return p.terms().begin()->first;
}

}  // namespace

Polynomial parse_with_parameter(const std::string& text,
                                const std::vector<std::string>& variables,
                                const std::optional<Rational>& t_value) {
  const bool t_declared =
      std::find(variables.begin(), variables.end(), "t") != variables.end();
  if (t_declared) return parse_polynomial(text, variables);

  std::vector<std::string> extended = variables;
  extended.push_back("t");
  const Polynomial with_t = parse_polynomial(text, extended);
  bool uses_t = false;
  for (const auto& [m, c] : with_t.terms())
    if (m.exponent(variables.size()) > 0) uses_t = true;
  if (uses_t && !t_value)
    throw std::runtime_error("polynomial uses the parameter t; pass --t");
  return instantiate_last_variable(with_t, t_value ? *t_value : Rational(0));
}

AlgebraFile parse_algebra_file(const std::string& content,
                               const std::optional<Rational>& t_value) {
  AlgebraFile file;
  std::vector<std::string>& vars = file.presentation.variables;
  for (const auto& [key, value] : key_value_lines(content)) {
    if (key == "vars") {
      if (!vars.empty()) throw std::runtime_error("duplicate vars line");
      vars = split(value, ',');
      if (vars.empty()) throw std::runtime_error("vars line declares no variables");
      continue;
    }
    if (vars.empty()) throw std::runtime_error("vars line must come first");
    if (key == "gen") {
      file.presentation.generators.push_back(parse_with_parameter(value, vars, t_value));
    } else if (key == "jacobian-of") {
      for (auto& g : jacobian_generators(parse_with_parameter(value, vars, t_value)))
        file.presentation.generators.push_back(std::move(g));
    } else if (key == "basis") {
      for (const auto& item : split(value, ','))
        file.basis.push_back(monomial_from_text(item, vars));
    } else if (key == "socle") {
      file.socle = parse_with_parameter(value, vars, t_value);
    } else {
      throw std::runtime_error("unknown key: " + key);
    }
  }
  if (vars.empty()) throw std::runtime_error("missing vars line");
  if (file.presentation.generators.empty())
    throw std::runtime_error("no generators given");
  return file;
}

AlgebraFile load_algebra_file(const std::string& path,
                              const std::optional<Rational>& t_value) {
  return parse_algebra_file(read_file(path), t_value);
}

AlgebraPtr build_from_file(const AlgebraFile& file, std::uint32_t max_truncation) {
  AlgebraBuildOptions opts;
  opts.basis_override = file.basis;
  opts.socle_override = file.socle;
  opts.max_truncation_degree = max_truncation;
  return LocalAlgebra::build(file.presentation, std::move(opts));
}

InverseSystemFile parse_inverse_system_file(const std::string& content,
                                            const std::optional<Rational>& t_value) {
  InverseSystemFile file;
  bool have_poly = false;
  for (const auto& [key, value] : key_value_lines(content)) {
    if (key == "vars") {
      file.variables = split(value, ',');
      continue;
    }
    if (file.variables.empty()) throw std::runtime_error("vars line must come first");
    if (key == "poly") {
      if (have_poly) throw std::runtime_error("duplicate poly line");
      file.poly = parse_with_parameter(value, file.variables, t_value);
      have_poly = true;
    } else {
      throw std::runtime_error("unknown key: " + key);
    }
  }
  if (file.variables.empty()) throw std::runtime_error("missing vars line");
  if (!have_poly) throw std::runtime_error("missing poly line");
  return file;
}

InverseSystemFile load_inverse_system_file(const std::string& path,
                                           const std::optional<Rational>& t_value) {
  return parse_inverse_system_file(read_file(path), t_value);
}

SubstitutionFile parse_substitution_file(const std::string& content,
                                         const std::optional<Rational>& t_value) {
  SubstitutionFile file;
  for (const auto& [key, value] : key_value_lines(content)) {
    if (key == "vars") {
      file.variables = split(value, ',');
      continue;
    }
    if (file.variables.empty()) throw std::runtime_error("vars line must come first");
    if (key == "T") {
      file.components.push_back(parse_with_parameter(value, file.variables, t_value));
    } else {
      throw std::runtime_error("unknown key: " + key);
    }
  }
  if (file.variables.empty()) throw std::runtime_error("missing vars line");
  if (file.components.size() != file.variables.size())
    throw std::runtime_error("substitution needs one T line per variable");
  return file;
}

SubstitutionFile load_substitution_file(const std::string& path,
                                        const std::optional<Rational>& t_value) {
  return parse_substitution_file(read_file(path), t_value);
}

GradedLinearCandidate parse_candidate_json(const nlohmann::json& j) {
  const auto& rows = j.at("L1");
  const std::size_t n = rows.size();
  RatMatrix L1(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::runtime_error("candidate L1 is not square");
    for (std::size_t k = 0; k < n; ++k)
      L1.at(i, k) = rational_from_string(rows[i][k].get<std::string>());
  }
  Rational c(1);
  if (j.contains("c")) c = rational_from_string(j.at("c").get<std::string>());
  return GradedLinearCandidate{std::move(L1), std::move(c)};
}

GradedLinearCandidate load_candidate_file(const std::string& path) {
  return parse_candidate_json(nlohmann::json::parse(read_file(path)));
}

std::string algebra_report_text(const LocalAlgebra& algebra) {
  std::string hilbert;
  for (std::size_t i = 0; i < algebra.hilbert_function().size(); ++i) {
    if (i) hilbert += ",";
    hilbert += std::to_string(algebra.hilbert_function()[i]);
  }
  std::string basis;
  for (std::size_t i = 0; i < algebra.dimension(); ++i) {
    if (i) basis += ", ";
    basis += algebra.label_string(i);
  }
  std::string out;
  out += "dimension: " + std::to_string(algebra.dimension()) + "\n";
  out += "socle_degree: " + std::to_string(algebra.socle_degree()) + "\n";
  out += "hilbert: " + hilbert + "\n";
  out += "embedding_dimension: " + std::to_string(algebra.embedding_dimension()) + "\n";
  out += std::string("gorenstein: ") + (algebra.is_gorenstein() ? "true" : "false") + "\n";
  out += "basis: " + basis + "\n";
  if (algebra.is_gorenstein())
    out += "socle: " + to_string(algebra.socle_generator()) + "\n";
  return out;
}

nlohmann::json algebra_report_json(const LocalAlgebra& algebra) {
  nlohmann::json j;
  j["dimension"] = algebra.dimension();
  j["socle_degree"] = algebra.socle_degree();
  j["hilbert"] = algebra.hilbert_function();
  j["embedding_dimension"] = algebra.embedding_dimension();
  j["gorenstein"] = algebra.is_gorenstein();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < algebra.dimension(); ++i)
    labels.push_back(algebra.label_string(i));
  j["basis_labels"] = labels;
  return j;
}

nlohmann::json nilpoly_json(const NilPolynomial& P, const std::string& prefix) {
  nlohmann::json j;
  const auto vars = numbered_variables(prefix, P.projection.kernel_dimension());
  j["variables"] = vars;
  std::vector<std::string> basis;
  for (const auto& v : P.projection.kernel_basis()) basis.push_back(to_string(v));
  j["basis_labels"] = basis;
  j["socle_label"] = to_string(P.projection.socle_generator());
  j["polynomial"] = to_string(P.poly, vars);
  return j;
}

nlohmann::json inverse_system_json(const InverseSystemCandidate& g,
                                   const std::vector<std::string>& variables) {
  nlohmann::json j;
  j["variables"] = variables;
  j["polynomial"] = to_string(g.poly, variables);
  j["socle_degree"] = g.socle_degree;
  switch (g.provenance) {
    case InverseSystemProvenance::nil_restriction:
      j["provenance"] = "nil-restriction";
      break;
    case InverseSystemProvenance::generalized:
      j["provenance"] = "generalized";
      break;
    case InverseSystemProvenance::user_supplied:
      j["provenance"] = "user-supplied";
      break;
  }
  return j;
}

nlohmann::json equivalence_json(const EquivalenceReport& report) {
  nlohmann::json j;
  j["holds"] = report.holds;
  j["lhs"] = report.lhs;
  j["rhs"] = report.rhs;
  if (report.first_mismatch_monomial)
    j["first_mismatch_monomial"] = *report.first_mismatch_monomial;
  return j;
}

nlohmann::json matrix_json(const RatMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json criterion_json(const CriterionReport& report) {
  nlohmann::json j;
  j["verdict"] =
      report.isomorphic ? "ISOMORPHIC" : "NOT-MATCHED-BY-SUPPLIED-EVIDENCE";
  if (!report.mismatches.empty()) {
    nlohmann::json ms = nlohmann::json::array();
    for (const auto& m : report.mismatches) {
      ms.push_back({{"invariant", m.invariant},
                    {"source", m.source_value},
                    {"target", m.target_value}});
    }
    j["mismatches"] = std::move(ms);
  }
  j["checked_degrees"] = report.checked_degrees;
  j["oracle_homomorphism"] = report.oracle_homomorphism;
  if (report.witness) {
    nlohmann::json w;
    w["L1"] = matrix_json(report.witness->L1);
    w["c"] = to_string(report.witness->c);
    if (report.extended_map) w["extended_map"] = matrix_json(report.extended_map->matrix);
    j["witness"] = std::move(w);
  }
  if (report.match_report) {
    nlohmann::json degrees = nlohmann::json::array();
    for (const auto& [m, ok] : report.match_report->degrees)
      degrees.push_back({{"degree", m}, {"matched", ok}});
    j["degree_match"] = std::move(degrees);
  }
  return j;
}

}  // namespace ag
