// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Everything is seeded and deterministic; tolerances are pinned in code.
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "orthorep/connectivity.hpp"
#include "orthorep/construct.hpp"
#include "orthorep/generators.hpp"
#include "orthorep/ordering.hpp"
#include "orthorep/verify.hpp"

using namespace orthorep;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct NamedGraph {
  std::string label;
  Graph graph;
  int dimension;
};

// The feasible suite: named graphs plus 20 seeded gnp graphs taken at the
// tightest dimension their connectivity allows (kappa = n - D).
std::vector<NamedGraph> sufficiency_suite() {
  std::vector<NamedGraph> suite;
  suite.push_back({"complete:5 D=1", generate_graph(parse_model("complete:5"), 0), 1});
  suite.push_back({"cycle:5 D=3", generate_graph(parse_model("cycle:5"), 0), 3});
  suite.push_back({"petersen D=7", generate_graph(parse_model("petersen"), 0), 7});
  suite.push_back({"complete-minus-matching:8 D=2",
                   generate_graph(parse_model("complete-minus-matching:8"), 0), 2});
  Rng rng(0xACCE551);
  while (suite.size() < 24) {
    int n = 5 + static_cast<int>(rng.uniform_int(0, 4));
    ModelSpec spec{GraphModel::Gnp, n, 0.4 + 0.55 * rng.next_unit()};
    Graph g = generate_graph(spec, rng.next());
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < 1 || kappa > n - 1) continue;
    int d = n - kappa;
    std::ostringstream label;
    label << "gnp:" << n << " D=" << d;
    suite.push_back({label.str(), std::move(g), d});
  }
  return suite;
}

Outcome criterion_sufficiency() {
  const auto started = std::chrono::steady_clock::now();
  std::ostringstream detail;
  int graphs = 0, trials_total = 0, successes = 0, retried = 0;
  for (const auto& item : sufficiency_suite()) {
    ++graphs;
    VertexOrdering order = VertexOrdering::identity(item.graph.vertex_count());
    for (int trial = 0; trial < 100; ++trial) {
      RetryOutcome r = construct_with_retries(item.graph, order, item.dimension, Mode::Exact, 3,
                                              derive_seed(0x5EED01, graphs, trial), 1 << 20);
      ++trials_total;
      if (r.ok()) {
        ++successes;
        if (r.attempts_used > 1) {
          ++retried;
          detail << "  first-attempt failure on " << item.label << " trial " << trial
                 << " (succeeded on attempt " << r.attempts_used << "); failing trace:\n"
                 << trace_to_json(r.failures.front().trace);
        }
      } else {
        detail << "  FAILED all attempts on " << item.label << " trial " << trial << "\n";
      }
    }
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  std::ostringstream head;
  head << successes << "/" << trials_total << " verified GORs over " << graphs << " graphs, "
       << retried << " retried, " << std::fixed << std::setprecision(1) << seconds << "s";
  bool pass = successes == trials_total && trials_total == 2400 && seconds < 60.0;
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_necessity() {
  std::vector<NamedGraph> suite;
  suite.push_back({"star:5 D=3", generate_graph(parse_model("star:5"), 0), 3});
  suite.push_back({"two-disjoint-edges D=3", Graph(4, {{0, 1}, {2, 3}}), 3});
  Rng rng(0xACCE552);
  while (suite.size() < 22) {
    int n = 4 + static_cast<int>(rng.uniform_int(0, 4));
    ModelSpec spec{GraphModel::Gnp, n, 0.1 + 0.5 * rng.next_unit()};
    Graph g = generate_graph(spec, rng.next());
    int kappa = vertex_connectivity(g).kappa;
    if (kappa > n - 2) continue;
    int d = 1 + static_cast<int>(rng.uniform_int(0, n - kappa - 2));  // kappa < n - d
    std::ostringstream label;
    label << "gnp:" << n << " D=" << d << " kappa=" << kappa;
    suite.push_back({label.str(), std::move(g), d});
  }
  std::ostringstream detail;
  bool pass = true;
  int outputs = 0;
  for (const auto& item : suite) {
    const int n = item.graph.vertex_count();
    auto cut = certify_no_gor(item.graph, item.dimension);
    bool cut_ok = cut && static_cast<int>(cut->size()) < n - item.dimension &&
                  item.graph.component_count_without(*cut) > 1;
    if (!cut_ok) {
      pass = false;
      detail << "  bad certificate on " << item.label << "\n";
      continue;
    }
    VertexOrdering order = VertexOrdering::identity(n);
    for (int trial = 0; trial < 50; ++trial) {
      ParameterBundle params =
          sample_parameters(n, item.dimension, 1 << 20, derive_seed(0x5EED02, outputs, trial));
      Construction exact = construct_sequential(item.graph, order, item.dimension, params);
      Construction approx = construct_unit_sphere(item.graph, order, item.dimension,
                                                     derive_seed(0x5EED03, outputs, trial));
      outputs += 2;
      if (verify_gor(item.graph, exact.rep, item.dimension).gor() ||
          verify_gor(item.graph, approx.rep, item.dimension).gor()) {
        pass = false;
        detail << "  a construction on " << item.label << " unexpectedly verified\n";
      }
    }
  }
  std::ostringstream head;
  head << suite.size() << " graphs certified, " << outputs << " construction outputs all failed";
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_edge_swap() {
  Rng rng(0xACCE553);
  int cases = 0, construct_checked = 0;
  std::ostringstream detail;
  bool pass = true;
  while (cases < 1000) {
    int n = 3 + static_cast<int>(rng.uniform_int(0, 5));
    Graph g = oracles::random_gnp(n, 0.2 + 0.7 * rng.next_unit(), rng);
    VertexOrdering order = oracles::random_ordering(n, rng);
    std::vector<int> positions;
    for (int p = 0; p + 1 < n; ++p)
      if (g.adjacent(order.vertex_at(p), order.vertex_at(p + 1))) positions.push_back(p);
    if (positions.empty()) continue;
    int p = positions[rng.uniform_int(0, static_cast<long long>(positions.size()) - 1)];
    ++cases;
    if (edge_swap_invariance(g, order, p).status != SwapStatus::Invariant) {
      pass = false;
      detail << "  signature changed under an edge swap (case " << cases << ")\n";
    }
    int d = 1 + static_cast<int>(rng.uniform_int(0, 3));
    ParameterBundle params = sample_parameters(n, d, 1 << 20, rng.next());
    ParameterBundle swapped = params;
    std::swap(swapped.w[p], swapped.w[p + 1]);
    Construction base = construct_sequential(g, order, d, params);
    Construction other = construct_sequential(g, order.with_swapped(p, p + 1), d, swapped);
    ++construct_checked;
    if (!(base.rep == other.rep)) {
      pass = false;
      detail << "  representations diverged across an edge swap (case " << cases << ")\n";
    }
  }
  std::ostringstream head;
  head << cases << " swap cases invariant, " << construct_checked
       << " paired constructions identical";
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_prefix_paths() {
  Rng rng(0xACCE554);
  int graphs = 0, positions = 0;
  std::ostringstream detail;
  bool pass = true;
  while (graphs < 500) {
    int n = 4 + static_cast<int>(rng.uniform_int(0, 5));
    Graph g = oracles::random_gnp(n, 0.35 + 0.6 * rng.next_unit(), rng);
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < 1 || kappa > n - 1) continue;
    int d = n - kappa;
    ++graphs;
    VertexOrdering order = oracles::random_ordering(n, rng);
    for (int p = std::max(0, d - 1); p + 1 < n; ++p) {
      ++positions;
      if (!path_within_prefix(g, order, p)) {
        pass = false;
        detail << "  missing prefix path on a " << kappa << "-connected graph (n=" << n
               << ", p=" << p << ")\n";
      }
    }
  }
  // contrapositive on unfiltered graphs: a missing path must come with a
  // failed connectivity check
  int unfiltered = 0, missing = 0;
  while (unfiltered < 500) {
    int n = 3 + static_cast<int>(rng.uniform_int(0, 6));
    Graph g = oracles::random_gnp(n, rng.next_unit(), rng);
    int d = 1 + static_cast<int>(rng.uniform_int(0, n - 2));
    VertexOrdering order = oracles::random_ordering(n, rng);
    ++unfiltered;
    for (int p = std::max(0, d - 1); p + 1 < n; ++p) {
      if (!path_within_prefix(g, order, p)) {
        ++missing;
        if (is_k_connected(g, n - d).ok) {
          pass = false;
          detail << "  contrapositive violated: no path at p=" << p
                 << " but the graph checks as " << (n - d) << "-connected\n";
        }
      }
    }
  }
  std::ostringstream head;
  head << positions << " positions on 500 connected graphs all pathed; " << missing
       << " misses on 500 unfiltered graphs, all explained by connectivity";
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_subset_first() {
  Rng rng(0xACCE555);
  int graphs = 0, trials = 0, hits = 0;
  std::ostringstream detail;
  while (graphs < 50) {
    int n = 5 + static_cast<int>(rng.uniform_int(0, 4));
    Graph g = oracles::random_gnp(n, 0.4 + 0.55 * rng.next_unit(), rng);
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < 1 || kappa > n - 1) continue;
    int d = n - kappa;
    ++graphs;
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<int> pool(n);
      for (int v = 0; v < n; ++v) pool[v] = v;
      std::vector<int> subset;
      for (int i = 0; i < d; ++i) {
        int idx = static_cast<int>(rng.uniform_int(0, static_cast<long long>(pool.size()) - 1));
        subset.push_back(pool[idx]);
        pool.erase(pool.begin() + idx);
      }
      std::sort(subset.begin(), subset.end());
      std::vector<int> perm = subset;
      for (int v = 0; v < n; ++v)
        if (std::find(subset.begin(), subset.end(), v) == subset.end()) perm.push_back(v);
      ParameterBundle params = sample_parameters(n, d, 1 << 20, rng.next());
      Construction c = construct_sequential(g, VertexOrdering(perm), d, params);
      ++trials;
      if (verify_gp_subset(c.rep, subset))
        ++hits;
      else
        detail << "  subset missed general position (graph " << graphs << ", rep " << rep << ")\n";
    }
  }
  std::ostringstream head;
  head << hits << "/" << trials << " subset-first constructions in general position";
  return {hits == trials, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_finite_intersection() {
  std::ostringstream detail;
  bool pass = true;
  int graphs = 0, subsets = 0;
  for (const auto& item : sufficiency_suite()) {
    ++graphs;
    RetryOutcome r =
        construct_with_retries(item.graph, VertexOrdering::identity(item.graph.vertex_count()),
                               item.dimension, Mode::Exact, 3, derive_seed(0x5EED06, graphs),
                               1 << 20);
    if (!r.ok()) {
      pass = false;
      detail << "  no success on " << item.label << "\n";
      continue;
    }
    const int n = item.graph.vertex_count();
    std::vector<int> subset(item.dimension);
    for (int i = 0; i < item.dimension; ++i) subset[i] = i;
    while (true) {
      ++subsets;
      if (!verify_gp_subset(r.success->rep, subset)) {
        pass = false;
        detail << "  subset failed on " << item.label << "\n";
      }
      int i = item.dimension - 1;
      while (i >= 0 && subset[i] == n - item.dimension + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < item.dimension; ++j) subset[j] = subset[j - 1] + 1;
    }
    if (!general_position(r.success->rep.exact(), item.dimension).ok) {
      pass = false;
      detail << "  general_position disagreed on " << item.label << "\n";
    }
  }
  std::ostringstream head;
  head << subsets << " subsets across " << graphs << " single successes all independent";
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_exchange() {
  Rng rng(0xACCE557);
  int cases = 0, single = 0, five = 0;
  std::ostringstream detail;
  bool pass = true;
  while (cases < 500) {
    int n = 4 + static_cast<int>(rng.uniform_int(0, 5));
    Graph g = oracles::random_gnp(n, 0.35 + 0.6 * rng.next_unit(), rng);
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < 1 || kappa > n - 1) continue;
    int d = n - kappa;
    if (d - 1 > n - 2) continue;
    VertexOrdering order = oracles::random_ordering(n, rng);
    int p = static_cast<int>(rng.uniform_int(std::max(0, d - 1), n - 2));
    ++cases;
    try {
      auto steps = exchange_sequence(g, order, p, d);  // validates every precondition
      if (steps.size() == 1)
        ++single;
      else if (steps.size() == 5)
        ++five;
      else {
        pass = false;
        detail << "  unexpected step count " << steps.size() << "\n";
      }
      if (!(steps.back().result == order.with_swapped(p, p + 1))) {
        pass = false;
        detail << "  terminal ordering is not the transposition (case " << cases << ")\n";
      }
    } catch (const std::exception& e) {
      pass = false;
      detail << "  exchange failed on a connected instance: " << e.what() << "\n";
    }
  }
  std::ostringstream head;
  head << cases << " instances: " << single << " single-step, " << five << " five-step";
  return {pass, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_mode_agreement() {
  Rng rng(0xACCE558);
  int sampled = 0, agreed = 0;
  std::ostringstream detail;
  while (sampled < 200) {
    int n = 4 + static_cast<int>(rng.uniform_int(0, 4));
    Graph g = oracles::random_gnp(n, 0.35 + 0.6 * rng.next_unit(), rng);
    int kappa = vertex_connectivity(g).kappa;
    if (kappa < 1 || kappa > n - 1) continue;
    int d = n - kappa;
    RetryOutcome r = construct_with_retries(g, oracles::random_ordering(n, rng), d, Mode::Exact,
                                            3, rng.next(), 1 << 20);
    if (!r.ok()) continue;
    ++sampled;
    Representation rounded = round_to_float(r.success->rep);
    VerificationReport fr = verify_gor(g, rounded, d, 1e-9);
    if (fr.gor()) {
      ++agreed;
    } else {
      detail << "  disagreement " << (sampled - agreed) << ": n=" << n << " D=" << d
             << " or_pass=" << fr.or_status.pass << " gp_pass=" << fr.gp_status.ok;
      if (!fr.or_status.pass)
        detail << " worst_pair_margin=" << fr.or_status.violations.front().value;
      if (!fr.gp_status.ok) {
        std::vector<FloatVector> cols;
        for (int i : fr.gp_status.failing_subset) cols.push_back(rounded.approx()[i]);
        auto sv = singular_values(normalized_columns(cols), d);
        detail << " subset_sv_ratio="
               << (sv.empty() || sv.front() == 0 ? 0.0 : sv.back() / sv.front());
      }
      detail << "\n";
    }
  }
  std::ostringstream head;
  head << agreed << "/" << sampled << " float verdicts agree at eps=1e-9";
  return {agreed * 100 >= sampled * 99,
          head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

Outcome criterion_connectivity_oracle() {
  std::ifstream in(std::string(ORTHOREP_TEST_DATA_DIR) + "/corpus_n8.g6");
  if (!in) return {false, "corpus file missing"};
  std::string line;
  int graphs = 0;
  std::ostringstream detail;
  bool pass = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Graph g = parse_graph6(line);
    ++graphs;
    ConnectivityCertificate cert = vertex_connectivity(g);
    int expected = oracles::connectivity_exhaustive(g);
    if (cert.kappa != expected) {
      pass = false;
      detail << "  kappa mismatch on " << line << ": " << cert.kappa << " vs " << expected << "\n";
    }
    if (cert.complete) {
      if (!g.is_complete()) {
        pass = false;
        detail << "  bogus complete marker on " << line << "\n";
      }
    } else if (static_cast<int>(cert.cut.size()) != cert.kappa ||
               g.component_count_without(cert.cut) <= 1) {
      pass = false;
      detail << "  invalid cut witness on " << line << "\n";
    }
  }
  std::ostringstream head;
  head << graphs << " corpus graphs match exhaustive enumeration";
  return {pass && graphs >= 200, head.str() + (detail.str().empty() ? "" : "\n" + detail.str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 sufficiency: feasible suite constructs 100% verified GORs", criterion_sufficiency},
      {"2 necessity: certified graphs never verify", criterion_necessity},
      {"3 edge-swap invariance and paired-construction identity", criterion_edge_swap},
      {"4 prefix paths past the dimension boundary", criterion_prefix_paths},
      {"5 subset-first constructions hit general position", criterion_subset_first},
      {"6 one success satisfies every subset simultaneously", criterion_finite_intersection},
      {"7 exchange rewriting emits 1 or 5 validated steps", criterion_exchange},
      {"8 float verification agrees with exact verdicts (>=99%)", criterion_mode_agreement},
      {"9 connectivity matches exhaustive enumeration on the corpus",
       criterion_connectivity_oracle},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    const auto started = std::chrono::steady_clock::now();
    Outcome outcome = run();
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    all = all && outcome.pass;
    size_t newline = outcome.detail.find('\n');
    std::string head = outcome.detail.substr(0, newline);
    std::cout << (outcome.pass ? "PASS" : "FAIL") << "  criterion " << name << " — " << head
              << " [" << std::fixed << std::setprecision(1) << seconds << "s]\n";
    if (newline != std::string::npos) std::cout << outcome.detail.substr(newline + 1);
  }
  return all ? 0 : 1;
}
