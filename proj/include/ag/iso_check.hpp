#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ag/nilpoly.hpp"

namespace ag {

struct NonlinearAnsatzError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoSolutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Proposed graded equivalence between two nil-polynomials: an invertible
// map L1 between the kernel coordinate spaces and a nonzero socle scale c.
struct GradedLinearCandidate {
  RatMatrix L1;
  Rational c;
};

GradedLinearCandidate identity_candidate(std::size_t n);

struct DegreeMatchReport {
  bool matched = false;
  std::vector<std::pair<std::uint32_t, bool>> degrees;  // (m, matched at m)
};

// Checks c * P^{[m]}(y) = Ptilde^{[m]}(L1 y) exactly for every m from 2 to
// the socle degree; L1 maps the coordinates of P's kernel to those of
// Ptilde's kernel.
DegreeMatchReport verify_graded_match(const NilPolynomial& P, const NilPolynomial& Ptilde,
                                      const GradedLinearCandidate& candidate);

// Linear map between maximal ideals in algebra-basis coordinates.
struct AlgebraMap {
  AlgebraPtr source;
  AlgebraPtr target;
  RatMatrix matrix;  // (dim m) x (dim m)
};

// Block-diagonal extension x + u s -> L1(x) + c u s~ of a verified
// candidate; refuses candidates that do not pass the graded match.
AlgebraMap extend_to_algebra_map(const GradedLinearCandidate& candidate,
                                 const AdmissibleProjection& pi,
                                 const AdmissibleProjection& pi_tilde);

// Independent oracle: map(e_i e_j) = map(e_i) map(e_j) over all
// maximal-ideal basis pairs via structure constants, plus bijectivity.
bool verify_algebra_homomorphism(const AlgebraMap& map);

// Solves the graded matching equations for L1 entries left free by the
// pattern (1-indexed (row, col) positions; all other entries come from
// the base matrix). Only affine-linear coefficient equations are solved:
// if the linear subset is inconsistent the ansatz has no solution; if it
// is consistent but nonlinear equations remain, the ansatz is rejected
// as nonlinear rather than guessed at.
GradedLinearCandidate solve_linear_ansatz(
    const NilPolynomial& P, const NilPolynomial& Ptilde,
    const std::vector<std::pair<std::size_t, std::size_t>>& pattern,
    const RatMatrix& base, const Rational& c);

struct InvariantMismatch {
  std::string invariant;
  std::string source_value;
  std::string target_value;
};

struct CriterionReport {
  bool isomorphic = false;
  std::vector<InvariantMismatch> mismatches;
  std::optional<GradedLinearCandidate> witness;
  std::optional<AlgebraMap> extended_map;
  bool oracle_homomorphism = false;
  std::vector<std::uint32_t> checked_degrees;
  std::optional<DegreeMatchReport> match_report;
};

// Executable criterion: necessary invariants, graded matching of the
// supplied (or identity) candidate, block-diagonal extension, and the
// structure-constant homomorphism oracle. A positive verdict is sound;
// a negative verdict only says the supplied evidence does not match.
CriterionReport criterion_report(const AdmissibleProjection& pi,
                                 const AdmissibleProjection& pi_tilde,
                                 const std::optional<GradedLinearCandidate>& candidate);

}  // namespace ag
