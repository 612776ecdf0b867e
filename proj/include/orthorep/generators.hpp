#pragma once

#include <cstdint>
#include <string>

#include "orthorep/graph.hpp"

namespace orthorep {

enum class GraphModel { Gnp, Cycle, Complete, CompleteMinusMatching, Petersen, Star };

struct ModelSpec {
  GraphModel model = GraphModel::Complete;
  int n = 0;        // unused for petersen
  double p = 0.0;   // gnp only
};

// Model text: "gnp:n:p", "cycle:n", "complete:n", "complete-minus-matching:n",
// "petersen", "star:n".
ModelSpec parse_model(const std::string& text);
std::string model_to_string(const ModelSpec& spec);

Graph generate_graph(const ModelSpec& spec, std::uint64_t seed);

}  // namespace orthorep
