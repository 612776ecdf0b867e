#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"
#include "orthorep/representation.hpp"
#include "orthorep/verify.hpp"

namespace orthorep {

inline constexpr long long kDefaultMagnitude = 1 << 20;
inline constexpr int kDefaultAttempts = 3;

// One integer parameter vector in [-M, M]^D per position: the free inputs of
// the sequential construction.
struct ParameterBundle {
  int n = 0;
  int dimension = 0;
  long long magnitude = kDefaultMagnitude;
  std::uint64_t seed = 0;
  std::vector<std::vector<long long>> w;  // n entries of length D

  bool operator==(const ParameterBundle& o) const {
    return n == o.n && dimension == o.dimension && w == o.w;
  }
};

ParameterBundle sample_parameters(int n, int dimension, long long magnitude, std::uint64_t seed);

// Per-step record of what the construction saw and did.
struct TraceStep {
  int position = 0;
  int vertex = 0;
  std::vector<int> preceding;  // preceding non-neighbors, position order
  bool independent = false;
  std::optional<Rational> gram_det;    // exact mode
  std::optional<double> min_singular;  // float mode, when preceding nonempty
  std::vector<long long> parameter;    // exact mode: the w used
  FloatVector unit_vector;             // float mode: the vector drawn
  bool zero_output = false;            // set iff the emitted vector is zero
};

using ConstructionTrace = std::vector<TraceStep>;

struct Construction {
  Representation rep;
  ConstructionTrace trace;
};

// Sequential construction: position p places the vertex order[p] at the image
// of the parameter vector under the complement map of its preceding
// non-neighbors, reduced to primitive integer form. Always yields an
// orthogonal representation; general position holds for generic parameters.
Construction construct_sequential(const Graph& g, const VertexOrdering& order, int dimension,
                                   const ParameterBundle& params);

// First `steps` positions only; emitted vectors are returned in position
// order. params must cover at least `steps` positions. The full construction
// is the n-step prefix re-indexed by vertex.
struct PrefixConstruction {
  std::vector<RationalVector> emitted;  // by position
  ConstructionTrace trace;
};
PrefixConstruction construct_sequential_prefix(const Graph& g, const VertexOrdering& order,
                                                int dimension, const ParameterBundle& params,
                                                int steps);

// Randomized construction: each position draws a uniform unit vector in the
// orthogonal complement of the span of its preceding non-neighbors (zero
// vector when the complement is trivial). Float-only; reproducible from seed.
Construction construct_unit_sphere(const Graph& g, const VertexOrdering& order, int dimension,
                                   std::uint64_t seed, double eps = kDefaultTolerance);

struct AttemptFailure {
  int attempt = 0;  // 1-based
  ConstructionTrace trace;
  VerificationReport report;
};

struct RetryOutcome {
  std::optional<Construction> success;
  int attempts_used = 0;
  std::vector<AttemptFailure> failures;
  bool ok() const { return success.has_value(); }
};

// Re-draws parameters (exact) or the seed stream (float) until verify_gor
// passes or attempts are exhausted; every failing trace is kept.
RetryOutcome construct_with_retries(const Graph& g, const VertexOrdering& order, int dimension,
                                    Mode mode, int attempts, std::uint64_t seed,
                                    long long magnitude = kDefaultMagnitude,
                                    double eps = kDefaultTolerance);

std::string trace_to_json(const ConstructionTrace& trace);

}  // namespace orthorep
