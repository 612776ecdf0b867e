#include "orthorep/representation.hpp"

#include <nlohmann/json.hpp>

#include "orthorep/graph.hpp"

namespace orthorep {

using nlohmann::json;

int Representation::size() const {
  return static_cast<int>(mode() == Mode::Exact ? exact().size() : approx().size());
}

const std::vector<RationalVector>& Representation::exact() const {
  if (mode() != Mode::Exact) throw std::logic_error("representation is not in exact mode");
  return std::get<0>(vectors_);
}

const std::vector<FloatVector>& Representation::approx() const {
  if (mode() != Mode::Float) throw std::logic_error("representation is not in float mode");
  return std::get<1>(vectors_);
}

void Representation::validate() const {
  if (dimension_ < 1) throw std::invalid_argument("representation dimension must be >= 1");
  auto check = [&](const auto& vecs) {
    if (vecs.empty()) throw std::invalid_argument("representation needs at least one vector");
    for (const auto& v : vecs)
      if (static_cast<int>(v.size()) != dimension_)
        throw std::invalid_argument("representation vector has wrong dimension");
  };
  if (vectors_.index() == 0)
    check(std::get<0>(vectors_));
  else
    check(std::get<1>(vectors_));
}

Representation round_to_float(const Representation& rep) {
  std::vector<FloatVector> out;
  out.reserve(rep.exact().size());
  for (const auto& v : rep.exact()) {
    // Divide by the largest |entry| exactly before converting: a positive
    // scalar multiple represents the same direction (orthogonality and
    // independence are scale-invariant) and the doubles stay inside [-1, 1]
    // no matter how large the exact integers have grown.
    Rational scale(0);
    for (const auto& x : v) {
      Rational a = x < 0 ? Rational(-x) : x;
      if (a > scale) scale = a;
    }
    FloatVector f(v.size(), 0.0);
    if (scale != 0)
      for (size_t i = 0; i < v.size(); ++i) f[i] = to_double(v[i] / scale);
    out.push_back(std::move(f));
  }
  return Representation(rep.dimension(), std::move(out));
}

std::string representation_to_json(const Representation& rep, const RepresentationMeta& meta) {
  json doc;
  doc["format"] = "orthorep.representation";
  doc["version"] = 1;
  doc["n"] = rep.size();
  doc["D"] = rep.dimension();
  doc["mode"] = mode_name(rep.mode());
  json vecs = json::array();
  if (rep.mode() == Mode::Exact) {
    for (const auto& v : rep.exact()) {
      json row = json::array();
      for (const auto& x : v) row.push_back(rational_to_string(x));
      vecs.push_back(std::move(row));
    }
  } else {
    for (const auto& v : rep.approx()) vecs.push_back(v);
  }
  doc["vectors"] = std::move(vecs);
  if (meta.ordering) doc["ordering"] = *meta.ordering;
  if (meta.seed) doc["seed"] = *meta.seed;
  if (meta.magnitude) doc["M"] = *meta.magnitude;
  return doc.dump(2) + "\n";
}

std::pair<Representation, RepresentationMeta> representation_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("representation: invalid JSON: ") + e.what());
  }
  try {
    if (doc.at("format") != "orthorep.representation")
      throw ParseError("representation: unknown format tag");
    if (doc.at("version") != 1) throw ParseError("representation: unsupported version");
    const int n = doc.at("n").get<int>();
    const int d = doc.at("D").get<int>();
    const Mode mode = parse_mode(doc.at("mode").get<std::string>());
    const json& vecs = doc.at("vectors");
    if (static_cast<int>(vecs.size()) != n)
      throw ParseError("representation: vector count does not match n");
    RepresentationMeta meta;
    if (doc.contains("ordering")) meta.ordering = doc["ordering"].get<std::vector<int>>();
    if (doc.contains("seed")) meta.seed = doc["seed"].get<std::uint64_t>();
    if (doc.contains("M")) meta.magnitude = doc["M"].get<long long>();
    if (mode == Mode::Exact) {
      std::vector<RationalVector> out;
      for (const auto& row : vecs) {
        RationalVector v;
        for (const auto& x : row) v.push_back(rational_from_string(x.get<std::string>()));
        if (static_cast<int>(v.size()) != d)
          throw ParseError("representation: vector has wrong dimension");
        out.push_back(std::move(v));
      }
      return {Representation(d, std::move(out)), meta};
    }
    std::vector<FloatVector> out;
    for (const auto& row : vecs) {
      FloatVector v = row.get<FloatVector>();
      if (static_cast<int>(v.size()) != d)
        throw ParseError("representation: vector has wrong dimension");
      out.push_back(std::move(v));
    }
    return {Representation(d, std::move(out)), meta};
  } catch (const json::exception& e) {
    throw ParseError(std::string("representation: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("representation: ") + e.what());
  }
}

}  // namespace orthorep
