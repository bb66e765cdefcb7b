#ifndef WVA_CLAIMS_HPP
#define WVA_CLAIMS_HPP

// The claim suite: each assertion of the source analysis mapped to a
// numerical experiment with a recorded verdict and CSV evidence.
//
//   C1  discrete even-point samples sum to 1/2, the density integrates to 1
//   C2  weak / optimal-claim / strong shift ordering for the spin scenario
//   C3  the arbitrary-shift family reaches any prescribed shift (affine law)
//   C4  Euler-Lagrange residual: variational probe solves the corrected
//       equation, the probe advertised as optimal does not
//   C5  A_w = +-1 gives shift +-1 for every preparation
//   C6  self-consistency of the mean kernel norm requires zeros of D inside
//       the integration interval
//   C7  the regularized shift of the variational probe approaches the
//       prescribed value as epsilon -> 0
//
// Claims are deterministic: fixed seed + config => bit-identical results.

#include <cstdint>
#include <string>
#include <vector>

#include "wva/quadrature.hpp"

namespace wva {

struct NamedValue {
  std::string name;
  double value = 0.0;
};

// A reference value together with its provenance:
//   "published-value"        quoted directly in the source analysis
//   "closed-form"            evaluated from a printed formula
//   "independent-quadrature" reproduced by brute-force numerics in this suite
//   "definition"             normalization or convention, true by construction
struct ReferenceValue {
  std::string name;
  double value = 0.0;
  std::string provenance;
};

enum class Verdict { pass, fail, indeterminate };

const char* to_string(Verdict verdict);

struct ClaimResult {
  std::string id;
  std::string description;
  std::vector<NamedValue> computed;
  std::vector<ReferenceValue> references;
  double tolerance = 0.0;
  Verdict verdict = Verdict::indeterminate;
  std::vector<std::string> artifacts;  // emitted evidence files
  // Observations recorded without being asserted (sign conventions and the
  // like).
  std::vector<std::string> notes;
};

struct ClaimConfig {
  std::string out_dir = "claims-out";
  std::uint64_t seed = 20240817u;
  QuadratureConfig quad;
};

// Valid ids: C1..C7.  Throws InputError for anything else.  Lower-level
// numerical errors are caught and turned into a fail verdict with the
// diagnostic in notes.
ClaimResult run_claim(const std::string& id, const ClaimConfig& cfg);

// Runs the listed claims (all seven when ids is empty), in id order.
std::vector<ClaimResult> run_claims(const std::vector<std::string>& ids,
                                    const ClaimConfig& cfg);

std::string claims_report_json(const std::vector<ClaimResult>& results,
                               const ClaimConfig& cfg);

}  // namespace wva

#endif  // WVA_CLAIMS_HPP
