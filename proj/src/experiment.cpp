#include "orthorep/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <mutex>
#include <thread>

#include <nlohmann/json.hpp>

#include "orthorep/linalg.hpp"
#include "orthorep/rng.hpp"
#include "orthorep/verify.hpp"

namespace orthorep {

using nlohmann::json;

OrderingPlan parse_ordering_plan(const std::string& text) {
  OrderingPlan plan;
  if (text == "identity" || text.empty()) return plan;
  if (text.rfind("random:", 0) == 0) {
    plan.kind = OrderingPlan::Kind::Random;
    try {
      plan.count = std::stoi(text.substr(7));
    } catch (const std::exception&) {
      throw ParseError("bad ordering plan: " + text);
    }
    if (plan.count < 1) throw ParseError("random ordering plan needs count >= 1");
    return plan;
  }
  std::string subset_arg;
  if (text.rfind("subset-first:", 0) == 0) subset_arg = text.substr(13);
  if (text.rfind("all-subset-first:", 0) == 0) subset_arg = text.substr(17);
  if (!subset_arg.empty()) {
    plan.kind = OrderingPlan::Kind::SubsetFirst;
    std::istringstream in(subset_arg);
    std::string item;
    while (std::getline(in, item, ','))
      try {
        plan.subset.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParseError("bad ordering plan: " + text);
      }
    if (plan.subset.empty()) throw ParseError("subset-first ordering plan needs vertices");
    return plan;
  }
  throw ParseError("unknown ordering plan: " + text);
}

std::string ordering_plan_to_string(const OrderingPlan& plan) {
  switch (plan.kind) {
    case OrderingPlan::Kind::Identity:
      return "identity";
    case OrderingPlan::Kind::Random:
      return "random:" + std::to_string(plan.count);
    case OrderingPlan::Kind::SubsetFirst: {
      std::string out = "subset-first:";
      for (size_t i = 0; i < plan.subset.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(plan.subset[i]);
      }
      return out;
    }
  }
  return "?";
}

namespace {

std::vector<VertexOrdering> make_orderings(const Graph& g, const OrderingPlan& plan,
                                           std::uint64_t seed) {
  const int n = g.vertex_count();
  switch (plan.kind) {
    case OrderingPlan::Kind::Identity:
      return {VertexOrdering::identity(n)};
    case OrderingPlan::Kind::Random: {
      std::vector<VertexOrdering> out;
      for (int i = 0; i < plan.count; ++i) {
        Rng rng(derive_seed(seed, 0x04dee5u, static_cast<std::uint64_t>(i)));
        out.emplace_back(random_permutation(n, rng));
      }
      return out;
    }
    case OrderingPlan::Kind::SubsetFirst: {
      std::vector<char> in_subset(n, 0);
      for (int v : plan.subset) {
        if (v < 0 || v >= n) throw std::invalid_argument("subset-first: vertex out of range");
        if (in_subset[v]) throw std::invalid_argument("subset-first: repeated vertex");
        in_subset[v] = 1;
      }
      std::vector<int> perm(plan.subset);
      std::sort(perm.begin(), perm.end());
      for (int v = 0; v < n; ++v)
        if (!in_subset[v]) perm.push_back(v);
      return {VertexOrdering(std::move(perm))};
    }
  }
  throw std::logic_error("unreachable");
}

// Worst relative inner product over non-adjacent pairs (0 = perfectly
// orthogonal); float-mode diagnostics only.
double orthogonality_margin(const Graph& g, const Representation& rep) {
  const auto& vecs = rep.approx();
  double worst = 0.0;
  for (int i = 0; i < g.vertex_count(); ++i)
    for (int j = i + 1; j < g.vertex_count(); ++j) {
      if (g.adjacent(i, j)) continue;
      double denom = std::sqrt(dot(vecs[i], vecs[i]) * dot(vecs[j], vecs[j]));
      if (denom == 0.0) continue;
      worst = std::max(worst, std::abs(dot(vecs[i], vecs[j])) / denom);
    }
  return worst;
}

// Worst sigma_min/sigma_max over all D-subsets (1 = perfectly conditioned).
double general_position_margin(const Representation& rep) {
  const auto& vecs = rep.approx();
  const int n = rep.size();
  const int d = rep.dimension();
  std::vector<int> subset(d);
  for (int i = 0; i < d; ++i) subset[i] = i;
  double worst = 1.0;
  while (true) {
    std::vector<FloatVector> cols;
    for (int idx : subset) cols.push_back(vecs[idx]);
    std::vector<double> sv = singular_values(cols, d);
    double ratio = (sv.empty() || sv.front() == 0.0) ? 0.0 : sv.back() / sv.front();
    worst = std::min(worst, ratio);
    int i = d - 1;
    while (i >= 0 && subset[i] == n - d + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < d; ++j) subset[j] = subset[j - 1] + 1;
  }
  return worst;
}

}  // namespace

ExperimentResult run_experiment(const Graph& g, const ExperimentConfig& cfg,
                                const std::string& label) {
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
  if (cfg.dimension < 1 || cfg.dimension > g.vertex_count())
    throw std::invalid_argument("experiment: need 1 <= D <= n");
  ExperimentResult result;
  result.graph_label = label;
  result.n = g.vertex_count();
  result.dimension = cfg.dimension;
  result.mode = cfg.mode;
  result.seed = cfg.seed;
  result.kappa = vertex_connectivity(g).kappa;
  result.no_gor_certificate = certify_no_gor(g, cfg.dimension);

  const std::vector<VertexOrdering> orderings = make_orderings(g, cfg.orderings, cfg.seed);
  for (size_t oi = 0; oi < orderings.size(); ++oi) {
    const VertexOrdering& order = orderings[oi];
    OrderingOutcome outcome;
    outcome.ordering = order.positions();
    const auto started = std::chrono::steady_clock::now();

    auto run_trial = [&](int trial) {
      const std::uint64_t trial_seed =
          derive_seed(cfg.seed, static_cast<std::uint64_t>(oi), static_cast<std::uint64_t>(trial));
      RetryOutcome run = construct_with_retries(g, order, cfg.dimension, cfg.mode, cfg.attempts,
                                                trial_seed, cfg.magnitude, cfg.eps);
      TrialOutcome t;
      t.trial = trial;
      t.attempts_used = run.attempts_used;
      const ConstructionTrace& final_trace =
          run.ok() ? run.success->trace : run.failures.back().trace;
      for (const auto& step : final_trace) t.zero_vector |= step.zero_output;
      if (run.ok()) {
        t.gor = t.or_pass = t.gp_pass = true;
        const Representation& rep = run.success->rep;
        if (cfg.store_representations) {
          RepresentationMeta meta;
          meta.ordering = order.positions();
          meta.seed = trial_seed;
          if (cfg.mode == Mode::Exact) meta.magnitude = cfg.magnitude;
          t.representation_json = representation_to_json(rep, meta);
        }
        if (cfg.mode == Mode::Float) {
          t.or_margin = orthogonality_margin(g, rep);
          t.gp_margin = general_position_margin(rep);
        }
      } else {
        const VerificationReport& report = run.failures.back().report;
        t.or_pass = report.or_status.pass;
        t.gp_pass = report.gp_status.ok;
        t.gor = false;
      }
      return t;
    };

    // Trials are seed-independent, so they run on a small pool; aggregation
    // below walks them in trial order, keeping results schedule-independent.
    outcome.trial_results.resize(cfg.trials);
    const unsigned workers = std::max(1u, std::min(std::thread::hardware_concurrency(),
                                                   static_cast<unsigned>(cfg.trials)));
    if (workers <= 1) {
      for (int trial = 0; trial < cfg.trials; ++trial)
        outcome.trial_results[trial] = run_trial(trial);
    } else {
      std::atomic<int> next{0};
      std::exception_ptr failure;
      std::mutex failure_mutex;
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          try {
            for (int trial = next.fetch_add(1); trial < cfg.trials; trial = next.fetch_add(1))
              outcome.trial_results[trial] = run_trial(trial);
          } catch (...) {
            std::lock_guard<std::mutex> hold(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        });
      for (auto& worker : pool) worker.join();
      if (failure) std::rethrow_exception(failure);
    }

    double or_margin_sum = 0.0, gp_margin_sum = 0.0;
    for (const TrialOutcome& t : outcome.trial_results) {
      outcome.trials += 1;
      outcome.successes += t.gor ? 1 : 0;
      outcome.or_only += (t.or_pass && !t.gp_pass) ? 1 : 0;
      outcome.zero_incidences += t.zero_vector ? 1 : 0;
      or_margin_sum += t.or_margin;
      gp_margin_sum += t.gp_margin;
    }
    if (cfg.mode == Mode::Float && outcome.successes > 0) {
      outcome.mean_or_margin = or_margin_sum / outcome.successes;
      outcome.mean_gp_margin = gp_margin_sum / outcome.successes;
    }
    outcome.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                                started)
                          .count();
    result.total_trials += outcome.trials;
    result.total_successes += outcome.successes;
    result.per_ordering.push_back(std::move(outcome));
  }
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& cfg) {
  if (cfg.model) return run_experiment(generate_graph(*cfg.model, cfg.seed), cfg,
                                       model_to_string(*cfg.model));
  if (!cfg.graph_file) throw std::invalid_argument("experiment: no graph source configured");
  std::ifstream in(*cfg.graph_file);
  if (!in) throw ParseError("cannot open graph file: " + *cfg.graph_file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_experiment(parse_graph(buffer.str(), cfg.file_format), cfg, *cfg.graph_file);
}

std::string experiment_to_json(const ExperimentResult& result, bool canonical) {
  json doc;
  doc["format"] = "orthorep.experiment";
  doc["version"] = 1;
  doc["graph"] = result.graph_label;
  doc["n"] = result.n;
  doc["D"] = result.dimension;
  doc["mode"] = mode_name(result.mode);
  doc["seed"] = result.seed;
  doc["kappa"] = result.kappa;
  if (result.no_gor_certificate) doc["no_gor_cut"] = *result.no_gor_certificate;
  doc["total_trials"] = result.total_trials;
  doc["total_successes"] = result.total_successes;
  json orderings = json::array();
  for (const auto& o : result.per_ordering) {
    json oj;
    oj["ordering"] = o.ordering;
    oj["trials"] = o.trials;
    oj["successes"] = o.successes;
    oj["or_only"] = o.or_only;
    oj["zero_incidences"] = o.zero_incidences;
    if (result.mode == Mode::Float) {
      oj["mean_or_margin"] = o.mean_or_margin;
      oj["mean_gp_margin"] = o.mean_gp_margin;
    }
    if (!canonical) oj["wall_ms"] = o.wall_ms;
    json trials = json::array();
    for (const auto& t : o.trial_results) {
      json tj;
      tj["trial"] = t.trial;
      tj["attempts_used"] = t.attempts_used;
      tj["gor"] = t.gor;
      tj["or_pass"] = t.or_pass;
      tj["gp_pass"] = t.gp_pass;
      tj["zero_vector"] = t.zero_vector;
      if (result.mode == Mode::Float && t.gor) {
        tj["or_margin"] = t.or_margin;
        tj["gp_margin"] = t.gp_margin;
      }
      if (t.representation_json) tj["representation"] = json::parse(*t.representation_json);
      trials.push_back(std::move(tj));
    }
    oj["trials_detail"] = std::move(trials);
    orderings.push_back(std::move(oj));
  }
  doc["orderings"] = std::move(orderings);
  return doc.dump(2) + "\n";
}

}  // namespace orthorep
