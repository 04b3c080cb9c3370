#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>

#include "ag/algebra_io.hpp"
#include "ag/reference_family.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

const std::string kTool = AGTOOL_PATH;
const std::string kData = TEST_DATA_DIR;

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_tool(const std::string& args) {
  const std::string command = kTool + " " + args + " 2>&1";
  std::array<char, 4096> buffer{};
  std::string output;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buffer.data(), buffer.size(), pipe)) output += buffer.data();
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("algebra files parse with overrides and parameters") {
  const std::string content =
      "# comment\n"
      "vars: x, y, z\n"
      "basis: x^4, x, x^2, x^3, y, z, y*z, z^2\n"
      "jacobian-of: x^4 + t*x^5 + x*y^2 + y^3 + x*z^2\n";
  const AlgebraFile file = parse_algebra_file(content, Rational(1));
  CHECK(file.presentation.generators.size() == 3);
  CHECK(file.basis.size() == 8);
  const AlgebraPtr A = build_from_file(file);
  CHECK(A->dimension() == 9);

  // the parameter requires a value
  CHECK_THROWS(parse_algebra_file(content, std::nullopt));
  // unless t is a declared variable
  const AlgebraFile tfile =
      parse_algebra_file("vars: t\ngen: t^2\n", std::nullopt);
  CHECK(build_from_file(tfile)->dimension() == 2);

  CHECK_THROWS(parse_algebra_file("gen: x\n", std::nullopt));
  CHECK_THROWS(parse_algebra_file("vars: x\nnonsense: 1\n", std::nullopt));
  CHECK_THROWS(parse_algebra_file("vars: x\n", std::nullopt));
}

TEST_CASE("candidate json round trip") {
  const GradedLinearCandidate cand = reference::matching_candidate(Rational(1));
  nlohmann::json j;
  j["L1"] = matrix_json(cand.L1);
  j["c"] = to_string(cand.c);
  const GradedLinearCandidate parsed = parse_candidate_json(j);
  CHECK(parsed.L1 == cand.L1);
  CHECK(parsed.c == cand.c);
}

TEST_CASE("report serialization carries the exact strings") {
  const AlgebraPtr A = reference::build_base();
  const nlohmann::json j = algebra_report_json(*A);
  CHECK(j["dimension"] == 9);
  CHECK(j["hilbert"] == nlohmann::json({1, 3, 3, 1, 1}));
  CHECK(j["basis_labels"][1] == "x^4");

  const NilPolynomial P = nil_polynomial(AdmissibleProjection::make(A));
  const nlohmann::json np = nilpoly_json(P, "x");
  CHECK(np["socle_label"] == "x^4");
  CHECK(np["polynomial"] ==
        "x1*x3 + 1/2*x2^2 + 6*x2*x4 - 8/3*x4*x7 - 8/3*x5*x6 + 1/2*x1^2*x2 + "
        "3*x1^2*x4 - 2*x1*x4^2 + 4/9*x4^3 - 4/3*x4*x5^2 + 1/24*x1^4");
}

TEST_CASE("cli: algebra report and exit codes") {
  const RunResult ok = run_tool("algebra " + kData + "/base.alg");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("dimension: 9") != std::string::npos);
  CHECK(ok.output.find("hilbert: 1,3,3,1,1") != std::string::npos);

  const RunResult small = run_tool("algebra " + kData + "/x3.alg");
  CHECK(small.exit_code == 0);
  CHECK(small.output.find("dimension: 3") != std::string::npos);

  const RunResult bad = run_tool("algebra " + kData + "/bad_constant.alg");
  CHECK(bad.exit_code == 2);
  CHECK(bad.output.find("constant term") != std::string::npos);

  const RunResult missing = run_tool("algebra /nonexistent.alg");
  CHECK(missing.exit_code == 2);
}

TEST_CASE("cli: nilpoly prints the canonical polynomial and residual") {
  const RunResult r = run_tool("nilpoly " + kData + "/base.alg");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find(
            "P = x1*x3 + 1/2*x2^2 + 6*x2*x4 - 8/3*x4*x7 - 8/3*x5*x6 + 1/2*x1^2*x2 + "
            "3*x1^2*x4 - 2*x1*x4^2 + 4/9*x4^3 - 4/3*x4*x5^2 + 1/24*x1^4") !=
        std::string::npos);
  CHECK(r.output.find("blaschke: 0") != std::string::npos);

  // non-Gorenstein input is an input error
  const RunResult control = run_tool("nilpoly " + kData + "/control.alg");
  CHECK(control.exit_code == 2);
}

TEST_CASE("cli: inverse systems and verification") {
  const RunResult q0 = run_tool("inverse-system " + kData + "/base.alg");
  CHECK(q0.exit_code == 0);
  CHECK(q0.output.find(
            "Q = 3*z1^2*z2 - 2*z1*z2^2 + 4/9*z2^3 - 4/3*z2*z3^2 + 1/24*z1^4") !=
        std::string::npos);

  const RunResult qt = run_tool("inverse-system " + kData + "/perturbed.alg --t 1");
  CHECK(qt.exit_code == 0);
  CHECK(qt.output.find("Q = 15/2*z1*z2 - 5/2*z2^2 + 3*z1^2*z2") != std::string::npos);

  const RunResult restricted =
      run_tool("inverse-system " + kData + "/base.alg --restrict \"x, y, z\"");
  CHECK(restricted.exit_code == 0);
  CHECK(restricted.output == q0.output);

  const RunResult generalized = run_tool("inverse-system " + kData +
                                         "/x3.alg --generators \"x, x^2\" --vars u,v");
  CHECK(generalized.exit_code == 0);
  CHECK(generalized.output.find("Q = v + 1/2*u^2") != std::string::npos);

  const RunResult verified =
      run_tool("verify-inverse " + kData + "/base.alg " + kData + "/q_base.is");
  CHECK(verified.exit_code == 0);
  CHECK(verified.output.find("verified: true") != std::string::npos);

  // the perturbed candidate against the base algebra must fail (exit 1)
  const RunResult wrong = run_tool("verify-inverse " + kData + "/base.alg " + kData +
                                   "/q_perturbed.is --t 1");
  CHECK(wrong.exit_code == 1);
  CHECK(wrong.output.find("verified: false") != std::string::npos);
}

TEST_CASE("cli: equivalence exit codes") {
  const RunResult good = run_tool("equivalence " + kData + "/q_perturbed.is " + kData +
                                  "/q_base.is " + kData + "/substitution.sub --t 1");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("holds: true") != std::string::npos);

  const RunResult also_good =
      run_tool("equivalence " + kData + "/q_perturbed.is " + kData + "/q_base.is " +
               kData + "/substitution.sub --t 5/7 --json");
  CHECK(also_good.exit_code == 0);

  // identity substitution does not relate the two systems
  const std::string identity_sub = "/tmp/ag_identity.sub";
  {
    FILE* f = fopen(identity_sub.c_str(), "w");
    REQUIRE(f);
    fputs("vars: z1, z2, z3\nT: z1\nT: z2\nT: z3\n", f);
    fclose(f);
  }
  const RunResult bad = run_tool("equivalence " + kData + "/q_perturbed.is " + kData +
                                 "/q_base.is " + identity_sub + " --t 1");
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.find("holds: false") != std::string::npos);

  const RunResult not_unit =
      run_tool("equivalence " + kData + "/q_base.is " + kData + "/q_base.is " +
               identity_sub + " --unit z1");
  CHECK(not_unit.exit_code == 2);
}

TEST_CASE("cli: iso verdicts") {
  const RunResult ansatz = run_tool("iso " + kData + "/perturbed.alg " + kData +
                                    "/base.alg --t 1 --ansatz \"3,4;7,4\"");
  CHECK(ansatz.exit_code == 0);
  CHECK(ansatz.output.find("verdict: ISOMORPHIC") != std::string::npos);
  CHECK(ansatz.output.find("15/2") != std::string::npos);
  CHECK(ansatz.output.find("15/16") != std::string::npos);

  const RunResult candidate = run_tool("iso " + kData + "/perturbed.alg " + kData +
                                       "/base.alg --t 1 --candidate " + kData +
                                       "/candidate_t1.json --json");
  CHECK(candidate.exit_code == 0);
  CHECK(candidate.output.find("\"verdict\": \"ISOMORPHIC\"") != std::string::npos);
  CHECK(candidate.output.find("\"oracle_homomorphism\": true") != std::string::npos);

  // identity evidence is inconclusive
  const RunResult identity =
      run_tool("iso " + kData + "/perturbed.alg " + kData + "/base.alg --t 1");
  CHECK(identity.exit_code == 1);
  CHECK(identity.output.find("NOT-MATCHED-BY-SUPPLIED-EVIDENCE") != std::string::npos);

  // a failing ansatz is inconclusive, with the no-solution reason
  const RunResult no_solution = run_tool("iso " + kData + "/perturbed.alg " + kData +
                                         "/base.alg --t 1 --ansatz \"1,1\"");
  CHECK(no_solution.exit_code == 1);
  CHECK(no_solution.output.find("no solution") != std::string::npos);

  const RunResult mismatch =
      run_tool("iso " + kData + "/base.alg " + kData + "/x3.alg");
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.output.find("mismatch: dimension 9 vs 3") != std::string::npos);
}

TEST_CASE("cli: reproduction suite") {
  const RunResult one = run_tool("paper-suite --t 1");
  CHECK(one.exit_code == 0);
  CHECK(one.output.find("all checks passed") != std::string::npos);

  const RunResult zero = run_tool("paper-suite --t 0");
  CHECK(zero.exit_code == 2);

  const RunResult fraction = run_tool("paper-suite --t 5/7");
  CHECK(fraction.exit_code == 0);
}

TEST_CASE("cli: output determinism") {
  const RunResult a = run_tool("nilpoly " + kData + "/perturbed.alg --t 2 --json");
  const RunResult b = run_tool("nilpoly " + kData + "/perturbed.alg --t 2 --json");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}
