#include "orthorep/generators.hpp"

#include <sstream>

#include "orthorep/rng.hpp"

namespace orthorep {

ModelSpec parse_model(const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ':')) parts.push_back(item);
  if (parts.empty()) throw ParseError("empty graph model");
  auto int_arg = [&](size_t i) {
    if (i >= parts.size()) throw ParseError("model " + parts[0] + ": missing argument");
    try {
      size_t pos;
      int v = std::stoi(parts[i], &pos);
      if (pos != parts[i].size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("model " + parts[0] + ": bad integer '" + parts[i] + "'");
    }
  };
  ModelSpec spec;
  if (parts[0] == "gnp") {
    spec.model = GraphModel::Gnp;
    spec.n = int_arg(1);
    if (parts.size() < 3) throw ParseError("gnp: missing edge probability");
    try {
      size_t pos;
      spec.p = std::stod(parts[2], &pos);
      if (pos != parts[2].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw ParseError("gnp: bad probability '" + parts[2] + "'");
    }
  } else if (parts[0] == "cycle") {
    spec.model = GraphModel::Cycle;
    spec.n = int_arg(1);
  } else if (parts[0] == "complete") {
    spec.model = GraphModel::Complete;
    spec.n = int_arg(1);
  } else if (parts[0] == "complete-minus-matching") {
    spec.model = GraphModel::CompleteMinusMatching;
    spec.n = int_arg(1);
  } else if (parts[0] == "petersen") {
    spec.model = GraphModel::Petersen;
    spec.n = 10;
  } else if (parts[0] == "star") {
    spec.model = GraphModel::Star;
    spec.n = int_arg(1);
  } else {
    throw ParseError("unknown graph model: " + parts[0]);
  }
  return spec;
}

std::string model_to_string(const ModelSpec& spec) {
  std::ostringstream os;
  switch (spec.model) {
    case GraphModel::Gnp:
      os << "gnp:" << spec.n << ":" << spec.p;
      break;
    case GraphModel::Cycle:
      os << "cycle:" << spec.n;
      break;
    case GraphModel::Complete:
      os << "complete:" << spec.n;
      break;
    case GraphModel::CompleteMinusMatching:
      os << "complete-minus-matching:" << spec.n;
      break;
    case GraphModel::Petersen:
      os << "petersen";
      break;
    case GraphModel::Star:
      os << "star:" << spec.n;
      break;
  }
  return os.str();
}

Graph generate_graph(const ModelSpec& spec, std::uint64_t seed) {
  std::vector<std::pair<int, int>> edges;
  switch (spec.model) {
    case GraphModel::Gnp: {
      if (spec.n < 1 || spec.p < 0.0 || spec.p > 1.0)
        throw ParseError("gnp: need n >= 1 and p in [0, 1]");
      Rng rng(seed);
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
          if (rng.next_unit() < spec.p) edges.emplace_back(u, v);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::Cycle: {
      if (spec.n < 3) throw ParseError("cycle: need n >= 3");
      for (int v = 0; v < spec.n; ++v) edges.emplace_back(v, (v + 1) % spec.n);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::Complete: {
      if (spec.n < 1) throw ParseError("complete: need n >= 1");
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::CompleteMinusMatching: {
      if (spec.n < 2 || spec.n % 2 != 0)
        throw ParseError("complete-minus-matching: need even n >= 2");
      for (int u = 0; u < spec.n; ++u)
        for (int v = u + 1; v < spec.n; ++v)
          if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
      return Graph(spec.n, std::move(edges));
    }
    case GraphModel::Petersen: {
      for (int v = 0; v < 5; ++v) {
        edges.emplace_back(v, (v + 1) % 5);          // outer cycle
        edges.emplace_back(5 + v, 5 + (v + 2) % 5);  // inner pentagram
        edges.emplace_back(v, 5 + v);                // spokes
      }
      return Graph(10, std::move(edges));
    }
    case GraphModel::Star: {
      if (spec.n < 1) throw ParseError("star: need n >= 1");
      for (int v = 1; v < spec.n; ++v) edges.emplace_back(0, v);
      return Graph(spec.n, std::move(edges));
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace orthorep
