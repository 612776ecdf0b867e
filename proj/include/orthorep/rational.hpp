#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace orthorep {

// Exact scalar: arbitrary-precision rational, kept in lowest terms with a
// positive denominator by the GMP backend.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Rational>;
using FloatVector = std::vector<double>;

enum class Mode { Exact, Float };

inline constexpr double kDefaultTolerance = 1e-9;

inline std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "float"; }

inline Mode parse_mode(const std::string& s) {
  if (s == "exact") return Mode::Exact;
  if (s == "float") return Mode::Float;
  throw std::invalid_argument("unknown mode: " + s + " (expected exact or float)");
}

// Canonical text form: "p" for integers, "p/q" otherwise. mpq's stream output
// already matches; keep one function so serialization has a single source.
inline std::string rational_to_string(const Rational& r) { return r.str(); }

inline Rational rational_from_string(const std::string& s) {
  try {
    return Rational(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_zero_vector(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline bool is_zero_vector(const FloatVector& v) {
  for (double x : v)
    if (x != 0.0) return false;
  return true;
}

// Scale a rational vector to its primitive integer form: clear denominators,
// divide by the gcd of the numerators. The direction is preserved (positive
// multiplier), so orthogonality and independence predicates are unaffected.
// The zero vector is returned unchanged.
inline RationalVector reduce_to_primitive(const RationalVector& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  if (is_zero_vector(v)) return v;
  BigInt den_lcm = 1;
  for (const auto& x : v) den_lcm = lcm(den_lcm, BigInt(denominator(x)));
  BigInt num_gcd = 0;
  std::vector<BigInt> ints;
  ints.reserve(v.size());
  for (const auto& x : v) {
    BigInt n = BigInt(numerator(x)) * (den_lcm / BigInt(denominator(x)));
    num_gcd = gcd(num_gcd, n);
    ints.push_back(std::move(n));
  }
  RationalVector out;
  out.reserve(v.size());
  for (auto& n : ints) out.emplace_back(n / num_gcd);
  return out;
}

}  // namespace orthorep
