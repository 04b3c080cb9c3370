// agtool: exact computations with local Artinian Gorenstein algebras.
// Exit codes: 0 verified/ok, 1 verified-false or inconclusive, 2 input error.

#include <CLI11.hpp>
#include <iostream>

#include "ag/algebra_io.hpp"
#include "ag/reference_family.hpp"

namespace {

using namespace ag;

struct CommonFlags {
  std::string t_text;
  bool json = false;
  std::string basis_text;
  std::string socle_text;

  std::optional<Rational> t() const {
    if (t_text.empty()) return std::nullopt;
    return rational_from_string(t_text);
  }
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_overrides = true) {
  cmd->add_option("--t", flags.t_text, "exact rational value for the parameter t");
  cmd->add_flag("--json", flags.json, "emit machine-readable JSON");
  if (with_overrides) {
    cmd->add_option("--basis", flags.basis_text,
                    "comma-separated monomial basis of the maximal ideal");
    cmd->add_option("--socle", flags.socle_text, "socle generator override");
  }
}

AlgebraPtr load_algebra(const std::string& path, const CommonFlags& flags) {
  AlgebraFile file = load_algebra_file(path, flags.t());
  if (!flags.basis_text.empty()) {
    file.basis.clear();
    std::stringstream stream(flags.basis_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      const Polynomial p = parse_polynomial(item, file.presentation.variables);
      if (p.term_count() != 1 || p.terms().begin()->second != 1)
        throw std::runtime_error("--basis entries must be monomials");
      file.basis.push_back(p.terms().begin()->first);
    }
  }
  if (!flags.socle_text.empty())
    file.socle = parse_with_parameter(flags.socle_text, file.presentation.variables,
                                      flags.t());
  return build_from_file(file);
}

std::vector<AlgebraElement> parse_element_list(const AlgebraPtr& algebra,
                                               const std::string& text,
                                               const std::optional<Rational>& t) {
  std::vector<AlgebraElement> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const Polynomial p = parse_with_parameter(item, algebra->variables(), t);
    out.push_back(algebra->normal_form(p));
  }
  return out;
}

int cmd_algebra(const std::string& path, const CommonFlags& flags) {
  const AlgebraPtr algebra = load_algebra(path, flags);
  if (flags.json)
    std::cout << algebra_report_json(*algebra).dump(2) << "\n";
  else
    std::cout << algebra_report_text(*algebra);
  return 0;
}

int cmd_nilpoly(const std::string& path, const CommonFlags& flags,
                const std::string& prefix) {
  const AlgebraPtr algebra = load_algebra(path, flags);
  const AdmissibleProjection pi = AdmissibleProjection::make(algebra);
  const NilPolynomial P = nil_polynomial(pi);
  const RatVec residual = blaschke_residual(P);
  std::string residual_text;
  if (is_zero_vector(residual)) {
    residual_text = "0";
  } else {
    for (std::size_t i = 0; i < residual.size(); ++i) {
      if (i) residual_text += ", ";
      residual_text += to_string(residual[i]);
    }
  }
  if (flags.json) {
    nlohmann::json j = nilpoly_json(P, prefix);
    j["blaschke"] = residual_text;
    std::cout << j.dump(2) << "\n";
  } else {
    const auto vars = numbered_variables(prefix, pi.kernel_dimension());
    std::cout << "P = " << to_string(P.poly, vars) << "\n";
    std::cout << "blaschke: " << residual_text << "\n";
  }
  return 0;
}

int cmd_inverse_system(const std::string& path, const CommonFlags& flags,
                       const std::string& restrict_text,
                       const std::string& generators_text,
                       const std::string& out_vars_text) {
  const AlgebraPtr algebra = load_algebra(path, flags);
  const AdmissibleProjection pi = AdmissibleProjection::make(algebra);

  InverseSystemCandidate Q = [&] {
    if (!generators_text.empty()) {
      return generalized_inverse_system(
          algebra, pi.functional(),
          parse_element_list(algebra, generators_text, flags.t()));
    }
    std::string restrict = restrict_text;
    if (restrict.empty()) {
      // default: residues of the presentation variables
      for (std::size_t i = 0; i < algebra->variables().size(); ++i) {
        if (i) restrict += ",";
        restrict += algebra->variables()[i];
      }
    }
    return nil_restriction_inverse_system(
        pi, parse_element_list(algebra, restrict, flags.t()));
  }();

  std::vector<std::string> out_vars;
  if (!out_vars_text.empty()) {
    std::stringstream stream(out_vars_text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      while (!item.empty() && item.front() == ' ') item.erase(item.begin());
      while (!item.empty() && item.back() == ' ') item.pop_back();
      out_vars.push_back(item);
    }
    if (out_vars.size() != Q.poly.arity())
      throw std::runtime_error("--vars must name " + std::to_string(Q.poly.arity()) +
                               " variables");
  } else {
    out_vars = numbered_variables("z", Q.poly.arity());
  }

  if (flags.json)
    std::cout << inverse_system_json(Q, out_vars).dump(2) << "\n";
  else
    std::cout << "Q = " << to_string(Q.poly, out_vars) << "\n";
  return 0;
}

int cmd_verify_inverse(const std::string& algebra_path, const std::string& g_path,
                       const CommonFlags& flags) {
  const AlgebraPtr algebra = load_algebra(algebra_path, flags);
  const InverseSystemFile g_file = load_inverse_system_file(g_path, flags.t());
  if (g_file.variables.size() != algebra->variables().size())
    throw std::runtime_error("inverse-system arity differs from the presentation");
  const InverseSystemCandidate g = make_inverse_system_candidate(g_file.poly);
  const InverseSystemReport report = verify_inverse_system(*algebra, g);
  if (flags.json) {
    nlohmann::json j;
    j["verified"] = report.ok;
    j["span_dimension"] = report.span_dimension;
    j["algebra_dimension"] = report.algebra_dimension;
    j["failures"] = report.failures;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "verified: " << (report.ok ? "true" : "false") << "\n";
    std::cout << "span_dimension: " << report.span_dimension << "\n";
    std::cout << "algebra_dimension: " << report.algebra_dimension << "\n";
    for (const auto& f : report.failures) std::cout << "failure: " << f << "\n";
  }
  return report.ok ? 0 : 1;
}

int cmd_equivalence(const std::string& g1_path, const std::string& g2_path,
                    const std::string& t_path, const std::string& h_text,
                    const CommonFlags& flags) {
  const InverseSystemFile g1_file = load_inverse_system_file(g1_path, flags.t());
  const InverseSystemFile g2_file = load_inverse_system_file(g2_path, flags.t());
  const SubstitutionFile t_file = load_substitution_file(t_path, flags.t());
  if (g1_file.variables.size() != g2_file.variables.size() ||
      t_file.variables.size() != g1_file.variables.size())
    throw std::runtime_error("variable counts do not agree across inputs");

  const InverseSystemCandidate g1 = make_inverse_system_candidate(g1_file.poly);
  const InverseSystemCandidate g2 = make_inverse_system_candidate(g2_file.poly);
  const std::uint32_t nu = std::max(g1.socle_degree, g2.socle_degree);
  const SubstitutionMap T = SubstitutionMap::make(t_file.components, nu);
  const Polynomial h =
      parse_with_parameter(h_text.empty() ? "1" : h_text, g1_file.variables, flags.t());

  const EquivalenceReport report = check_equivalence(g1, g2, T, h);
  if (flags.json) {
    std::cout << equivalence_json(report).dump(2) << "\n";
  } else {
    std::cout << "holds: " << (report.holds ? "true" : "false") << "\n";
    std::cout << "lhs: " << report.lhs << "\n";
    std::cout << "rhs: " << report.rhs << "\n";
    if (report.first_mismatch_monomial)
      std::cout << "first_mismatch: " << *report.first_mismatch_monomial << "\n";
  }
  return report.holds ? 0 : 1;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_pattern(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> pattern;
  std::stringstream stream(text);
  std::string entry;
  while (std::getline(stream, entry, ';')) {
    const auto comma = entry.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("--ansatz entries look like 'row,col;row,col'");
    pattern.emplace_back(std::stoul(entry.substr(0, comma)),
                         std::stoul(entry.substr(comma + 1)));
  }
  return pattern;
}

int cmd_iso(const std::string& source_path, const std::string& target_path,
            const CommonFlags& flags, const std::string& candidate_path,
            const std::string& ansatz_text, const std::string& ansatz_c_text) {
  const AlgebraPtr source = load_algebra(source_path, flags);
  const AlgebraPtr target = load_algebra(target_path, flags);
  const AdmissibleProjection pi = AdmissibleProjection::make(source);
  const AdmissibleProjection pi_tilde = AdmissibleProjection::make(target);

  std::optional<GradedLinearCandidate> candidate;
  if (!candidate_path.empty()) candidate = load_candidate_file(candidate_path);
  if (!ansatz_text.empty()) {
    const Rational c =
        ansatz_c_text.empty() ? Rational(1) : rational_from_string(ansatz_c_text);
    const NilPolynomial P = nil_polynomial(pi);
    const NilPolynomial Pt = nil_polynomial(pi_tilde);
    try {
      candidate = solve_linear_ansatz(P, Pt, parse_pattern(ansatz_text),
                                      RatMatrix::identity(pi.kernel_dimension()), c);
    } catch (const NoSolutionError& e) {
      if (flags.json) {
        nlohmann::json j;
        j["verdict"] = "NOT-MATCHED-BY-SUPPLIED-EVIDENCE";
        j["reason"] = e.what();
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "verdict: NOT-MATCHED-BY-SUPPLIED-EVIDENCE\n"
                  << "reason: " << e.what() << "\n";
      }
      return 1;
    }
  }

  const CriterionReport report = criterion_report(pi, pi_tilde, candidate);
  if (flags.json) {
    std::cout << criterion_json(report).dump(2) << "\n";
  } else {
    std::cout << "verdict: "
              << (report.isomorphic ? "ISOMORPHIC" : "NOT-MATCHED-BY-SUPPLIED-EVIDENCE")
              << "\n";
    for (const auto& m : report.mismatches)
      std::cout << "mismatch: " << m.invariant << " " << m.source_value << " vs "
                << m.target_value << "\n";
    if (report.witness) {
      std::cout << "witness c: " << to_string(report.witness->c) << "\n";
      std::cout << "witness L1:\n";
      const RatMatrix& L = report.witness->L1;
      for (std::size_t i = 0; i < L.rows(); ++i) {
        std::cout << " ";
        for (std::size_t j = 0; j < L.cols(); ++j)
          std::cout << " " << to_string(L.at(i, j));
        std::cout << "\n";
      }
      std::cout << "oracle_homomorphism: "
                << (report.oracle_homomorphism ? "true" : "false") << "\n";
    }
  }
  return report.isomorphic ? 0 : 1;
}

int cmd_paper_suite(const std::string& t_list_text) {
  std::vector<Rational> values;
  std::stringstream stream(t_list_text.empty() ? "1,2,-1/3" : t_list_text);
  std::string item;
  while (std::getline(stream, item, ',')) values.push_back(rational_from_string(item));
  if (values.empty()) throw std::runtime_error("empty t list");
  for (const Rational& t : values)
    if (t == 0) throw std::runtime_error("t must be a nonzero rational (t in k*)");

  bool all_ok = true;
  std::string first_failure;
  for (const Rational& t : values) {
    std::cout << "== t = " << to_string(t) << " ==\n";
    for (const auto& check : reference::run_suite(t)) {
      std::cout << (check.passed ? "  ok   " : "  FAIL ") << check.name;
      if (!check.passed && !check.detail.empty()) std::cout << " [" << check.detail << "]";
      std::cout << "\n";
      if (!check.passed && first_failure.empty())
        first_failure = check.name + " (t = " + to_string(t) + ")";
      all_ok = all_ok && check.passed;
    }
  }
  if (!all_ok) {
    std::cout << "FAILED: " << first_failure << "\n";
    return 1;
  }
  std::cout << "all checks passed\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with local Artinian Gorenstein algebras"};
  app.require_subcommand(1);

  CommonFlags algebra_flags, nilpoly_flags, inv_flags, verify_flags, equiv_flags,
      iso_flags;
  std::string algebra_file, nilpoly_file, nilpoly_prefix = "x";
  std::string inv_file, inv_restrict, inv_generators, inv_vars;
  std::string verify_algebra, verify_g;
  std::string equiv_g1, equiv_g2, equiv_T, equiv_h;
  std::string iso_source, iso_target, iso_candidate, iso_ansatz, iso_ansatz_c;
  std::string suite_t;

  CLI::App* algebra = app.add_subcommand("algebra", "invariants of a presented algebra");
  algebra->add_option("file", algebra_file, "algebra presentation file")->required();
  add_common(algebra, algebra_flags);

  CLI::App* nilpoly =
      app.add_subcommand("nilpoly", "nil-polynomial of the default projection");
  nilpoly->add_option("file", nilpoly_file)->required();
  nilpoly->add_option("--prefix", nilpoly_prefix, "variable prefix (default x)");
  add_common(nilpoly, nilpoly_flags);

  CLI::App* inverse = app.add_subcommand("inverse-system", "Macaulay inverse system");
  inverse->add_option("file", inv_file)->required();
  inverse->add_option("--restrict", inv_restrict,
                      "comma-separated elements spanning a complement to m^2");
  inverse->add_option("--generators", inv_generators,
                      "comma-separated generating elements (generalized form)");
  inverse->add_option("--vars", inv_vars, "output variable names");
  add_common(inverse, inv_flags);

  CLI::App* verify =
      app.add_subcommand("verify-inverse", "check a candidate inverse system");
  verify->add_option("algebra", verify_algebra)->required();
  verify->add_option("candidate", verify_g)->required();
  add_common(verify, verify_flags);

  CLI::App* equivalence = app.add_subcommand(
      "equivalence", "inverse-system equivalence under a substitution");
  equivalence->add_option("g1", equiv_g1)->required();
  equivalence->add_option("g2", equiv_g2)->required();
  equivalence->add_option("T", equiv_T, "substitution file")->required();
  equivalence->add_option("--unit", equiv_h, "unit polynomial h (default 1)");
  add_common(equivalence, equiv_flags, false);

  CLI::App* iso = app.add_subcommand("iso", "isomorphism criterion with witness");
  iso->add_option("source", iso_source)->required();
  iso->add_option("target", iso_target)->required();
  iso->add_option("--candidate", iso_candidate, "candidate JSON file");
  iso->add_option("--ansatz", iso_ansatz, "free entries 'row,col;row,col'");
  iso->add_option("--ansatz-c", iso_ansatz_c, "socle scale of the ansatz (default 1)");
  add_common(iso, iso_flags);

  CLI::App* suite = app.add_subcommand("paper-suite", "built-in reproduction suite");
  suite->add_option("--t", suite_t, "comma-separated t values (default 1,2,-1/3)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (algebra->parsed()) return cmd_algebra(algebra_file, algebra_flags);
    if (nilpoly->parsed()) return cmd_nilpoly(nilpoly_file, nilpoly_flags, nilpoly_prefix);
    if (inverse->parsed())
      return cmd_inverse_system(inv_file, inv_flags, inv_restrict, inv_generators,
                                inv_vars);
    if (verify->parsed())
      return cmd_verify_inverse(verify_algebra, verify_g, verify_flags);
    if (equivalence->parsed())
      return cmd_equivalence(equiv_g1, equiv_g2, equiv_T, equiv_h, equiv_flags);
    if (iso->parsed())
      return cmd_iso(iso_source, iso_target, iso_flags, iso_candidate, iso_ansatz,
                     iso_ansatz_c);
    if (suite->parsed()) return cmd_paper_suite(suite_t);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
