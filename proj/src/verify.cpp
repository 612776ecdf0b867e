#include "orthorep/verify.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

namespace orthorep {

using nlohmann::json;

OrStatus verify_or(const Graph& g, const Representation& rep, double eps) {
  if (rep.size() != g.vertex_count())
    throw std::invalid_argument("verify_or: representation size does not match graph");
  OrStatus status;
  const int n = g.vertex_count();
  if (rep.mode() == Mode::Exact) {
    const auto& vecs = rep.exact();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j)) continue;
        Rational ip = dot(vecs[i], vecs[j]);
        if (ip != 0) status.violations.push_back({i, j, rational_to_string(ip)});
      }
  } else {
    if (eps <= 0) throw std::invalid_argument("verify_or: tolerance must be positive");
    // |<u,v>| <= eps*|u|*|v| checked on unit directions so that huge or tiny
    // coordinates cannot overflow the comparison; zero vectors auto-pass.
    std::vector<FloatVector> dirs = normalized_columns(rep.approx());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (g.adjacent(i, j)) continue;
        if (is_zero_vector(dirs[i]) || is_zero_vector(dirs[j])) continue;
        double ip = std::abs(dot(dirs[i], dirs[j]));
        if (!(ip <= eps)) {
          std::ostringstream os;
          os << ip;
          status.violations.push_back({i, j, os.str()});
        }
      }
  }
  status.pass = status.violations.empty();
  return status;
}

VerificationReport verify_gor(const Graph& g, const Representation& rep, int dimension,
                              double eps) {
  if (rep.dimension() != dimension)
    throw std::invalid_argument("verify_gor: dimension does not match representation");
  if (g.vertex_count() < dimension)
    throw std::invalid_argument("verify_gor: fewer vertices than dimension");
  VerificationReport report;
  report.mode = rep.mode();
  report.tolerance = rep.mode() == Mode::Float ? eps : 0.0;
  report.or_status = verify_or(g, rep, eps);
  report.gp_status = rep.mode() == Mode::Exact
                         ? general_position(rep.exact(), dimension)
                         : general_position(rep.approx(), dimension, eps);
  return report;
}

bool verify_gp_subset(const Representation& rep, const std::vector<int>& subset, double eps) {
  if (static_cast<int>(subset.size()) != rep.dimension())
    throw std::invalid_argument("verify_gp_subset: subset size must equal dimension");
  for (int v : subset)
    if (v < 0 || v >= rep.size()) throw std::invalid_argument("verify_gp_subset: bad vertex index");
  if (rep.mode() == Mode::Exact) {
    std::vector<RationalVector> cols;
    for (int v : subset) cols.push_back(rep.exact()[v]);
    return rank(cols) == rep.dimension();
  }
  std::vector<FloatVector> cols;
  for (int v : subset) cols.push_back(rep.approx()[v]);
  return rank(normalized_columns(cols), eps) == rep.dimension();
}

std::optional<std::vector<int>> certify_no_gor(const Graph& g, int dimension) {
  const int n = g.vertex_count();
  if (dimension < 1 || dimension > n)
    throw std::invalid_argument("certify_no_gor: dimension must be in 1..n");
  ConnectivityCertificate cert = vertex_connectivity(g);
  if (cert.kappa >= n - dimension) return std::nullopt;
  // kappa < n - D <= n - 1, so the graph is not complete and the witness is a
  // genuine cut (empty when disconnected).
  return cert.cut;
}

std::string report_to_json(const VerificationReport& report) {
  json doc;
  doc["mode"] = mode_name(report.mode);
  if (report.mode == Mode::Float) doc["tolerance"] = report.tolerance;
  doc["or"]["pass"] = report.or_status.pass;
  json viols = json::array();
  for (const auto& v : report.or_status.violations)
    viols.push_back({{"u", v.u}, {"v", v.v}, {"value", v.value}});
  doc["or"]["violations"] = std::move(viols);
  doc["general_position"]["pass"] = report.gp_status.ok;
  if (!report.gp_status.ok)
    doc["general_position"]["first_failing_subset"] = report.gp_status.failing_subset;
  doc["gor"] = report.gor();
  return doc.dump(2) + "\n";
}

}  // namespace orthorep
