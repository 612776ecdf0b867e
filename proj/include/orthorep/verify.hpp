#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthorep/connectivity.hpp"
#include "orthorep/graph.hpp"
#include "orthorep/linalg.hpp"
#include "orthorep/representation.hpp"

namespace orthorep {

// A non-adjacent pair whose vectors fail orthogonality. `value` is the exact
// inner product (exact mode) or the relative inner product |<u,v>|/(|u||v|).
struct OrthogonalityViolation {
  int u = 0;
  int v = 0;
  std::string value;
};

struct OrStatus {
  bool pass = false;
  std::vector<OrthogonalityViolation> violations;
};

struct VerificationReport {
  Mode mode = Mode::Exact;
  double tolerance = 0.0;  // float mode only
  OrStatus or_status;
  GeneralPositionResult gp_status;
  bool gor() const { return or_status.pass && gp_status.ok; }
};

std::string report_to_json(const VerificationReport& report);

// Orthogonality check: every non-adjacent pair must have inner product
// exactly 0 (exact mode) or |<u,v>| <= eps*|u|*|v| (float mode, so zero
// vectors auto-pass). All violations are listed.
OrStatus verify_or(const Graph& g, const Representation& rep, double eps = kDefaultTolerance);

// Orthogonality plus general position.
VerificationReport verify_gor(const Graph& g, const Representation& rep, int dimension,
                              double eps = kDefaultTolerance);

// True iff the D vectors at the index set `subset` are linearly independent.
bool verify_gp_subset(const Representation& rep, const std::vector<int>& subset,
                      double eps = kDefaultTolerance);

// Impossibility certificate: when kappa(g) < n - D, a vertex cut of size
// < n - D witnessing that no construction output can pass verify_gor;
// nullopt when the connectivity hypothesis holds.
std::optional<std::vector<int>> certify_no_gor(const Graph& g, int dimension);

}  // namespace orthorep
