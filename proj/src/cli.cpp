#include "orthorep/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orthorep/connectivity.hpp"
#include "orthorep/construct.hpp"
#include "orthorep/experiment.hpp"
#include "orthorep/generators.hpp"
#include "orthorep/lemmas.hpp"
#include "orthorep/rng.hpp"
#include "orthorep/verify.hpp"

namespace orthorep {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << content;
}

Graph load_graph(const std::string& path, const std::string& format) {
  return parse_graph(read_file(path), parse_format(format));
}

Mode default_mode() {
  if (const char* env = std::getenv("ORTHOREP_MODE")) return parse_mode(env);
  return Mode::Exact;
}

// "identity", "random", or an explicit comma-separated permutation.
VertexOrdering resolve_ordering(const std::string& text, int n, std::uint64_t seed) {
  if (text.empty() || text == "identity") return VertexOrdering::identity(n);
  if (text == "random") {
    Rng rng(derive_seed(seed, 0x04dee5u));
    return VertexOrdering(random_permutation(n, rng));
  }
  std::vector<int> perm;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    try {
      perm.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw ParseError("bad ordering: " + text);
    }
  try {
    return VertexOrdering(std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string cut_to_string(const std::vector<int>& cut) {
  std::string out = "{";
  for (size_t i = 0; i < cut.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(cut[i]);
  }
  return out + "}";
}

// key=value lines, '#' comments, blank lines ignored.
std::map<std::string, std::string> read_key_value_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  std::map<std::string, std::string> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value");
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError(path + ":" + std::to_string(lineno) + ": empty key");
    out[key] = value;
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"orthogonal graph representations: construction, verification, experiments"};
  app.require_subcommand(1);

  std::string in_file, out_file, graph_file, rep_file, format = "edge-list";
  std::string model_text, ordering_text = "identity", orderings_text = "identity";
  std::string mode_text;
  int dimension = 0, trials = 100, attempts = kDefaultAttempts, cases = 200;
  long long magnitude = kDefaultMagnitude;
  std::uint64_t seed = 0;
  double eps = kDefaultTolerance;
  bool canonical = false, no_store = false;

  auto* connectivity = app.add_subcommand("connectivity", "vertex connectivity with witness");
  connectivity->add_option("--in", in_file, "graph file")->required();
  connectivity->add_option("--format", format, "edge-list or graph6");

  auto* gen = app.add_subcommand("gen", "emit a generated graph");
  gen->add_option("--model", model_text, "graph model, e.g. cycle:5 or gnp:10:0.5")->required();
  gen->add_option("--seed", seed, "rng seed");
  gen->add_option("--format", format, "edge-list or graph6");
  gen->add_option("--out", out_file, "output file (default stdout)");

  auto* construct = app.add_subcommand("construct", "build a representation with retries");
  construct->add_option("--graph", graph_file, "graph file")->required();
  construct->add_option("--format", format, "edge-list or graph6");
  construct->add_option("--D", dimension, "ambient dimension")->required();
  construct->add_option("--mode", mode_text, "exact or float (default: ORTHOREP_MODE or exact)");
  construct->add_option("--ordering", ordering_text, "identity, random, or v0,v1,...");
  construct->add_option("--seed", seed, "rng seed");
  construct->add_option("--M", magnitude, "parameter magnitude bound (exact mode)");
  construct->add_option("--attempts", attempts, "retry budget");
  construct->add_option("--eps", eps, "float verification tolerance");
  construct->add_option("--out", out_file, "representation JSON output (default stdout)");

  auto* verify = app.add_subcommand("verify", "verify a representation against a graph");
  verify->add_option("--graph", graph_file, "graph file")->required();
  verify->add_option("--format", format, "edge-list or graph6");
  verify->add_option("--rep", rep_file, "representation JSON")->required();
  int verify_dim = 0;
  verify->add_option("--D", verify_dim, "expected dimension (default: from the document)");
  verify->add_option("--eps", eps, "float verification tolerance");

  auto* experiment = app.add_subcommand("experiment", "seeded construction/verification batches");
  experiment->add_option("--model", model_text, "graph model");
  experiment->add_option("--graph", graph_file, "graph file (alternative to --model)");
  experiment->add_option("--format", format, "edge-list or graph6");
  experiment->add_option("--D", dimension, "ambient dimension (flag or config)");
  experiment->add_option("--mode", mode_text, "exact or float");
  experiment->add_option("--trials", trials, "trials per ordering");
  experiment->add_option("--orderings", orderings_text,
                         "identity, random:K, or subset-first:v1,v2,...");
  experiment->add_option("--M", magnitude, "parameter magnitude bound");
  experiment->add_option("--attempts", attempts, "retry budget per trial");
  experiment->add_option("--seed", seed, "experiment seed");
  experiment->add_option("--eps", eps, "float verification tolerance");
  experiment->add_option("--out", out_file, "result JSON output (default stdout)");
  experiment->add_flag("--canonical", canonical, "omit wall-clock fields for byte-stable output");
  experiment->add_flag("--no-store-reps", no_store, "do not embed representations in the result");
  std::string config_path;
  experiment->add_option("--config", config_path, "key=value config file (flags take precedence)");

  auto* lemmas = app.add_subcommand("lemmas", "ordering combinatorics checks over one graph");
  lemmas->add_option("--model", model_text, "graph model");
  lemmas->add_option("--graph", graph_file, "graph file (alternative to --model)");
  lemmas->add_option("--format", format, "edge-list or graph6");
  lemmas->add_option("--D", dimension, "ambient dimension")->required();
  lemmas->add_option("--seed", seed, "rng seed");
  lemmas->add_option("--cases", cases, "randomized cases per check");
  lemmas->add_option("--out", out_file, "report JSON output (default stdout)");

  // Config values act as defaults, applied before the command line is
  // parsed, so flags always win over the file and the file over built-ins.
  try {
    for (size_t i = 0; i < args.size(); ++i) {
      std::string path;
      if (args[i] == "--config" && i + 1 < args.size())
        path = args[i + 1];
      else if (args[i].rfind("--config=", 0) == 0)
        path = args[i].substr(9);
      else
        continue;
      for (const auto& [key, value] : read_key_value_file(path)) {
        try {
          if (key == "model")
            model_text = value;
          else if (key == "graph")
            graph_file = value;
          else if (key == "format")
            format = value;
          else if (key == "D")
            dimension = std::stoi(value);
          else if (key == "mode")
            mode_text = value;
          else if (key == "trials")
            trials = std::stoi(value);
          else if (key == "orderings")
            orderings_text = value;
          else if (key == "M")
            magnitude = std::stoll(value);
          else if (key == "attempts")
            attempts = std::stoi(value);
          else if (key == "seed")
            seed = std::stoull(value);
          else if (key == "eps")
            eps = std::stod(value);
          else
            throw ParseError("unknown config key: " + key);
        } catch (const std::logic_error&) {
          throw ParseError("bad config value for " + key + ": " + value);
        }
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (connectivity->parsed()) {
      Graph g = load_graph(in_file, format);
      ConnectivityCertificate cert = vertex_connectivity(g);
      std::cout << "kappa=" << cert.kappa << "\n";
      if (cert.complete)
        std::cout << "witness=complete-graph\n";
      else
        std::cout << "cut=" << cut_to_string(cert.cut) << "\n";
      return 0;
    }
    if (gen->parsed()) {
      Graph g = generate_graph(parse_model(model_text), seed);
      std::string text = serialize_graph(g, parse_format(format));
      if (parse_format(format) == GraphFormat::Graph6) text += "\n";
      write_output(out_file, text);
      return 0;
    }
    if (construct->parsed()) {
      Graph g = load_graph(graph_file, format);
      Mode mode = mode_text.empty() ? default_mode() : parse_mode(mode_text);
      VertexOrdering order = resolve_ordering(ordering_text, g.vertex_count(), seed);
      RetryOutcome outcome =
          construct_with_retries(g, order, dimension, mode, attempts, seed, magnitude, eps);
      if (!outcome.ok()) {
        std::cerr << "construction failed after " << outcome.attempts_used << " attempts\n";
        for (const auto& f : outcome.failures) {
          std::cerr << "attempt " << f.attempt << " report:\n" << report_to_json(f.report);
          std::cerr << "attempt " << f.attempt << " trace:\n" << trace_to_json(f.trace);
        }
        return 1;
      }
      RepresentationMeta meta;
      meta.ordering = order.positions();
      meta.seed = seed;
      if (mode == Mode::Exact) meta.magnitude = magnitude;
      write_output(out_file, representation_to_json(outcome.success->rep, meta));
      std::cerr << "verified GOR on attempt " << outcome.attempts_used << "\n";
      return 0;
    }
    if (verify->parsed()) {
      Graph g = load_graph(graph_file, format);
      auto [rep, meta] = representation_from_json(read_file(rep_file));
      if (verify_dim != 0 && verify_dim != rep.dimension())
        throw ParseError("requested D does not match the representation document");
      VerificationReport report = verify_gor(g, rep, rep.dimension(), eps);
      std::cout << report_to_json(report);
      return report.gor() ? 0 : 1;
    }
    if (experiment->parsed()) {
      ExperimentConfig cfg;
      if (!model_text.empty()) cfg.model = parse_model(model_text);
      if (!graph_file.empty()) cfg.graph_file = graph_file;
      if (!cfg.model && !cfg.graph_file) throw ParseError("experiment needs --model or --graph");
      if (dimension < 1) throw ParseError("experiment needs --D >= 1 (flag or config)");
      cfg.file_format = parse_format(format);
      cfg.dimension = dimension;
      cfg.mode = mode_text.empty() ? default_mode() : parse_mode(mode_text);
      cfg.trials = trials;
      cfg.orderings = parse_ordering_plan(orderings_text);
      cfg.magnitude = magnitude;
      cfg.attempts = attempts;
      cfg.seed = seed;
      cfg.eps = eps;
      cfg.store_representations = !no_store;
      ExperimentResult result = run_experiment(cfg);
      write_output(out_file, experiment_to_json(result, canonical));
      return 0;
    }
    if (lemmas->parsed()) {
      if (model_text.empty() && graph_file.empty())
        throw ParseError("lemmas needs --model or --graph");
      Graph g = model_text.empty() ? load_graph(graph_file, format)
                                   : generate_graph(parse_model(model_text), seed);
      LemmasReport report = run_lemma_checks(g, dimension, seed, cases);
      write_output(out_file, lemmas_to_json(report));
      return report.ok() ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace orthorep
