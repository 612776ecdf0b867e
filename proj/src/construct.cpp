#include "orthorep/construct.hpp"

#include <nlohmann/json.hpp>

#include "orthorep/linalg.hpp"
#include "orthorep/rng.hpp"

namespace orthorep {

using nlohmann::json;

ParameterBundle sample_parameters(int n, int dimension, long long magnitude, std::uint64_t seed) {
  if (n < 1 || dimension < 1) throw std::invalid_argument("sample_parameters: n, D must be >= 1");
  if (magnitude < 1) throw std::invalid_argument("sample_parameters: magnitude must be >= 1");
  ParameterBundle bundle;
  bundle.n = n;
  bundle.dimension = dimension;
  bundle.magnitude = magnitude;
  bundle.seed = seed;
  Rng rng(seed);
  bundle.w.assign(n, std::vector<long long>(dimension));
  for (auto& row : bundle.w)
    for (auto& x : row) x = rng.uniform_int(-magnitude, magnitude);
  return bundle;
}

PrefixConstruction construct_sequential_prefix(const Graph& g, const VertexOrdering& order,
                                                int dimension, const ParameterBundle& params,
                                                int steps) {
  const int n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("ordering size does not match graph");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  if (steps < 0 || steps > n) throw std::invalid_argument("steps out of range");
  if (params.dimension != dimension || static_cast<int>(params.w.size()) < steps)
    throw std::invalid_argument("parameter bundle size mismatch");
  PrefixConstruction out;
  std::vector<RationalVector> by_vertex(n);
  for (int p = 0; p < steps; ++p) {
    if (static_cast<int>(params.w[p].size()) != dimension)
      throw std::invalid_argument("parameter bundle size mismatch");
    TraceStep step;
    step.position = p;
    step.vertex = order.vertex_at(p);
    step.preceding = preceding_non_neighbors(g, order, p);
    step.parameter = params.w[p];
    std::vector<RationalVector> cols;
    cols.reserve(step.preceding.size());
    for (int u : step.preceding) cols.push_back(by_vertex[u]);
    step.independent = rank(cols) == static_cast<int>(cols.size());
    step.gram_det = determinant(gram(cols));
    RationalVector w(dimension);
    for (int i = 0; i < dimension; ++i) w[i] = params.w[p][i];
    RationalVector v = reduce_to_primitive(complement_map(cols, w));
    step.zero_output = is_zero_vector(v);
    by_vertex[step.vertex] = v;
    out.emitted.push_back(std::move(v));
    out.trace.push_back(std::move(step));
  }
  return out;
}

Construction construct_sequential(const Graph& g, const VertexOrdering& order, int dimension,
                                   const ParameterBundle& params) {
  const int n = g.vertex_count();
  if (params.n != n || static_cast<int>(params.w.size()) != n)
    throw std::invalid_argument("parameter bundle size mismatch");
  PrefixConstruction prefix = construct_sequential_prefix(g, order, dimension, params, n);
  std::vector<RationalVector> by_vertex(n);
  for (int p = 0; p < n; ++p) by_vertex[order.vertex_at(p)] = std::move(prefix.emitted[p]);
  return {Representation(dimension, std::move(by_vertex)), std::move(prefix.trace)};
}

Construction construct_unit_sphere(const Graph& g, const VertexOrdering& order, int dimension,
                                   std::uint64_t seed, double eps) {
  const int n = g.vertex_count();
  if (order.size() != n) throw std::invalid_argument("ordering size does not match graph");
  if (dimension < 1) throw std::invalid_argument("dimension must be >= 1");
  Rng rng(seed);
  std::vector<FloatVector> by_vertex(n);
  ConstructionTrace trace;
  for (int p = 0; p < n; ++p) {
    TraceStep step;
    step.position = p;
    step.vertex = order.vertex_at(p);
    step.preceding = preceding_non_neighbors(g, order, p);
    std::vector<FloatVector> cols;
    cols.reserve(step.preceding.size());
    for (int u : step.preceding) cols.push_back(by_vertex[u]);
    if (!cols.empty()) {
      std::vector<double> sv = singular_values(cols, dimension);
      step.min_singular = sv.empty() ? 0.0 : sv.back();
      step.independent = rank(cols, eps) == static_cast<int>(cols.size());
    } else {
      step.independent = true;
    }
    std::vector<FloatVector> basis = orthonormal_complement_basis(cols, dimension, eps);
    FloatVector v(dimension, 0.0);
    if (!basis.empty()) {
      FloatVector coeffs(basis.size());
      double norm2 = 0.0;
      do {
        norm2 = 0.0;
        for (auto& c : coeffs) {
          c = rng.gaussian();
          norm2 += c * c;
        }
      } while (norm2 == 0.0);
      const double inv = 1.0 / std::sqrt(norm2);
      for (size_t b = 0; b < basis.size(); ++b)
        for (int i = 0; i < dimension; ++i) v[i] += coeffs[b] * inv * basis[b][i];
    }
    step.zero_output = is_zero_vector(v);
    step.unit_vector = v;
    by_vertex[step.vertex] = v;
    trace.push_back(std::move(step));
  }
  return {Representation(dimension, std::move(by_vertex)), std::move(trace)};
}

RetryOutcome construct_with_retries(const Graph& g, const VertexOrdering& order, int dimension,
                                    Mode mode, int attempts, std::uint64_t seed,
                                    long long magnitude, double eps) {
  if (attempts < 1) throw std::invalid_argument("construct_with_retries: attempts must be >= 1");
  RetryOutcome outcome;
  for (int attempt = 1; attempt <= attempts; ++attempt) {
    const std::uint64_t attempt_seed = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    Construction built =
        mode == Mode::Exact
            ? construct_sequential(g, order, dimension,
                                 sample_parameters(g.vertex_count(), dimension, magnitude,
                                                   attempt_seed))
            : construct_unit_sphere(g, order, dimension, attempt_seed, eps);
    VerificationReport report = verify_gor(g, built.rep, dimension, eps);
    outcome.attempts_used = attempt;
    if (report.gor()) {
      outcome.success = std::move(built);
      return outcome;
    }
    outcome.failures.push_back({attempt, std::move(built.trace), std::move(report)});
  }
  return outcome;
}

std::string trace_to_json(const ConstructionTrace& trace) {
  json steps = json::array();
  for (const auto& s : trace) {
    json step;
    step["position"] = s.position;
    step["vertex"] = s.vertex;
    step["preceding_non_neighbors"] = s.preceding;
    step["independent"] = s.independent;
    if (s.gram_det) step["gram_det"] = rational_to_string(*s.gram_det);
    if (s.min_singular) step["min_singular"] = *s.min_singular;
    if (!s.parameter.empty()) step["parameter"] = s.parameter;
    if (!s.unit_vector.empty()) step["unit_vector"] = s.unit_vector;
    step["zero_output"] = s.zero_output;
    steps.push_back(std::move(step));
  }
  return steps.dump(2) + "\n";
}

}  // namespace orthorep
