#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orthorep/graph.hpp"

namespace orthorep {

// Raised when two consecutive vertices have no connecting path inside the
// placed prefix, i.e. the connectivity hypothesis fails at that position.
class NoPrefixPath : public std::runtime_error {
 public:
  explicit NoPrefixPath(const std::string& what) : std::runtime_error(what) {}
};

// Vertex -> sorted set of its preceding non-neighbors under an ordering; the
// datum through which an ordering acts on the construction.
using ConstraintSignature = std::vector<std::vector<int>>;

ConstraintSignature constraint_signature(const Graph& g, const VertexOrdering& order);

enum class SwapStatus { Invariant, NotAnEdge, SignatureDiffers };

struct SignatureDifference {
  int vertex = 0;
  std::vector<int> before;
  std::vector<int> after;
};

struct SwapInvariance {
  SwapStatus status = SwapStatus::Invariant;
  std::vector<SignatureDifference> differences;  // nonempty only on SignatureDiffers
};

// Swapping two consecutive positions that hold an edge of G must leave the
// vertex-indexed constraint signature unchanged; SignatureDiffers is a defect
// signal, never expected.
SwapInvariance edge_swap_invariance(const Graph& g, const VertexOrdering& order, int p);

enum class ExchangeTag { EarlyRearrangement, InnerInduction, EdgeBaseCase };

std::string tag_name(ExchangeTag tag);

struct ExchangeStep {
  VertexOrdering result;
  ExchangeTag tag;
  int pos_a = 0;
  int pos_b = 0;
  // InnerInduction only: bound on the interior count of the connecting prefix
  // path, strictly below the bound this sequence was entered with.
  int inner_interior = -1;
};

// Rewrites the transposition of positions (p, p+1) into justified exchanges:
// a single edge-base-case step when the two vertices are adjacent, otherwise
// the five-step sequence walking the first interior vertex of a shortest
// prefix path. Every step's precondition is validated before returning.
std::vector<ExchangeStep> exchange_sequence(const Graph& g, const VertexOrdering& order, int p,
                                            int dimension);

// Re-checks every step of a sequence against its predecessor: swap positions
// match the stated pair, early steps touch only positions <= p, base-case
// steps swap an edge at consecutive positions, inner steps have a prefix path
// within their recorded interior bound. Throws std::logic_error on defect.
void validate_exchange_sequence(const Graph& g, const VertexOrdering& start,
                                const std::vector<ExchangeStep>& steps, int p);

// Given orderings that agree strictly after position p+1 and share their
// first p+2 vertices as a set, permutes the first p+1 entries of each so the
// results differ exactly by the transposition of positions (p, p+1). When the
// entries at p+1 already agree the pair degenerates to two equal orderings.
std::pair<VertexOrdering, VertexOrdering> reduce_to_adjacent_transposition(
    const VertexOrdering& sigma, const VertexOrdering& tau, int p);

std::string exchange_sequence_to_json(const std::vector<ExchangeStep>& steps);

}  // namespace orthorep
