// Emits the small-graph corpus used by the connectivity acceptance check:
// named families plus a seeded gnp sweep, one graph6 line each, all n <= 8.
#include <iostream>

#include "orthorep/generators.hpp"
#include "orthorep/graph.hpp"

using namespace orthorep;

int main() {
  std::vector<std::string> lines;
  auto emit = [&](const Graph& g) { lines.push_back(to_graph6(g)); };

  for (int n = 1; n <= 8; ++n) emit(generate_graph(parse_model("complete:" + std::to_string(n)), 0));
  for (int n = 3; n <= 8; ++n) emit(generate_graph(parse_model("cycle:" + std::to_string(n)), 0));
  for (int n = 2; n <= 8; ++n) emit(generate_graph(parse_model("star:" + std::to_string(n)), 0));
  for (int n = 2; n <= 8; n += 2)
    emit(generate_graph(parse_model("complete-minus-matching:" + std::to_string(n)), 0));
  for (int n = 2; n <= 8; ++n) {  // paths
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    emit(Graph(n, std::move(edges)));
  }
  for (int n = 1; n <= 8; ++n) emit(Graph(n, {}));  // empty graphs

  std::uint64_t seed = 0;
  for (int n = 4; n <= 8; ++n)
    for (double p : {0.15, 0.3, 0.45, 0.6, 0.75, 0.9})
      for (int rep = 0; rep < 6; ++rep) {
        ModelSpec spec;
        spec.model = GraphModel::Gnp;
        spec.n = n;
        spec.p = p;
        emit(generate_graph(spec, ++seed));
      }

  for (const auto& line : lines) std::cout << line << "\n";
  std::cerr << lines.size() << " graphs\n";
  return 0;
}
