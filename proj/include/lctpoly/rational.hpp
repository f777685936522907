#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace lctpoly {

// Exact rational scalar, always reduced with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Dense rational vector; the ambient dimension is carried by the owning object.
using RatVec = std::vector<Rational>;

inline Integer numerator_of(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

inline Integer denominator_of(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

inline bool is_integral(const Rational& q) { return denominator_of(q) == 1; }

/** Parses "p", "-p" or "p/q" with q > 0 after sign normalization. */
inline Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  };
  if (text.empty()) bad();
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash);
  std::string den_part = slash == std::string::npos ? "1" : text.substr(slash + 1);
  const auto valid_int = [](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = allow_sign && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid_int(num_part, true) || !valid_int(den_part, false)) bad();
  Integer num(num_part), den(den_part);
  if (den == 0) bad();
  return Rational(num) / Rational(den);
}

/** Formats as "p" when integral, otherwise "p/q". */
inline std::string format_rational(const Rational& q) {
  std::string out = numerator_of(q).str();
  if (!is_integral(q)) out += "/" + denominator_of(q).str();
  return out;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dot: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

inline RatVec vec_add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vec_add: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline RatVec vec_sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("vec_sub: dimension mismatch");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline RatVec vec_scale(const RatVec& a, const Rational& s) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

inline bool is_zero_vec(const RatVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline Rational sq_distance(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("sq_distance: dimension mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

/**
 * Scales a nonzero vector by the unique positive rational that makes every
 * entry integral with overall content one. Zero vectors pass through.
 * The scaling never flips signs, so oriented data (ray directions,
 * inequality normals) keeps its meaning.
 */
inline RatVec primitive(const RatVec& v) {
  Integer lcm_den = 1;
  for (const auto& x : v)
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator_of(x));
  Integer gcd_num = 0;
  for (const auto& x : v)
    gcd_num = boost::multiprecision::gcd(
        gcd_num, Integer(numerator_of(x) * (lcm_den / denominator_of(x))));
  if (gcd_num == 0) return v;
  const Rational scale = Rational(lcm_den) / Rational(gcd_num);
  return vec_scale(v, scale);
}

/** Strict lexicographic order on equal-length vectors. */
inline bool lex_less(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return a.size() < b.size();
}

}  // namespace lctpoly
