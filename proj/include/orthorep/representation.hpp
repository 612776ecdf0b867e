#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orthorep/rational.hpp"

namespace orthorep {

// One vector in R^D per vertex, over exact rationals or doubles.
class Representation {
 public:
  Representation(int dimension, std::vector<RationalVector> vectors)
      : dimension_(dimension), vectors_(std::move(vectors)) {
    validate();
  }
  Representation(int dimension, std::vector<FloatVector> vectors)
      : dimension_(dimension), vectors_(std::move(vectors)) {
    validate();
  }

  int dimension() const { return dimension_; }
  int size() const;
  Mode mode() const { return vectors_.index() == 0 ? Mode::Exact : Mode::Float; }

  const std::vector<RationalVector>& exact() const;
  const std::vector<FloatVector>& approx() const;

  bool operator==(const Representation& o) const {
    return dimension_ == o.dimension_ && vectors_ == o.vectors_;
  }

 private:
  void validate() const;

  int dimension_;
  std::variant<std::vector<RationalVector>, std::vector<FloatVector>> vectors_;
};

// Exact representation rounded entrywise to doubles.
Representation round_to_float(const Representation& rep);

// Provenance carried alongside a representation in its JSON document.
struct RepresentationMeta {
  std::optional<std::vector<int>> ordering;
  std::optional<std::uint64_t> seed;
  std::optional<long long> magnitude;
};

// Versioned JSON document. Exact vectors serialize as "p/q" strings and
// round-trip bit-exactly.
std::string representation_to_json(const Representation& rep,
                                   const RepresentationMeta& meta = {});
std::pair<Representation, RepresentationMeta> representation_from_json(const std::string& text);

}  // namespace orthorep
