#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/polyhedron.hpp"
#include "lctpoly/rational.hpp"

namespace lctpoly {

using Exponent = long long;
using Monomial = std::vector<Exponent>;  // exponent vector

// Unit or zero ideals carry no threshold data and are rejected up front.
struct improper_ideal_error : std::domain_error {
  using std::domain_error::domain_error;
};

inline constexpr Exponent kMaxExponent = 1'000'000'000'000LL;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

/** Drops duplicates and every generator divisible by another generator. */
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < gens.size() && !dominated; ++j)
      dominated = i != j && divides(gens[j], gens[i]);
    if (!dominated) out.push_back(gens[i]);
  }
  return out;
}

/** Monomial ideal with a minimal sorted generator list. */
struct MonomialIdeal {
  int vars = 0;
  std::vector<Monomial> gens;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) =
      default;
};

inline MonomialIdeal make_ideal(int vars, std::vector<Monomial> gens) {
  if (vars < 1) throw std::invalid_argument("ideal needs at least 1 variable");
  if (gens.empty()) throw improper_ideal_error("zero ideal");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != vars)
      throw std::invalid_argument("generator arity mismatch");
    for (const auto e : g)
      if (e < 0 || e > kMaxExponent)
        throw std::invalid_argument("exponent out of range");
  }
  MonomialIdeal a;
  a.vars = vars;
  a.gens = minimalize(std::move(gens));
  for (const auto& g : a.gens)
    if (std::all_of(g.begin(), g.end(), [](Exponent e) { return e == 0; }))
      throw improper_ideal_error("unit ideal");
  return a;
}

/** Order of vanishing: the smallest total degree of a generator. */
inline Exponent ord(const MonomialIdeal& a) {
  Exponent best = -1;
  for (const auto& g : a.gens) {
    const Exponent d = std::accumulate(g.begin(), g.end(), Exponent(0));
    if (best < 0 || d < best) best = d;
  }
  return best;
}

inline MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.vars != b.vars)
    throw std::invalid_argument("product: variable count mismatch");
  std::vector<Monomial> gens;
  for (const auto& g : a.gens)
    for (const auto& h : b.gens) {
      Monomial s(a.vars);
      for (int i = 0; i < a.vars; ++i) s[i] = g[i] + h[i];
      gens.push_back(std::move(s));
    }
  return make_ideal(a.vars, std::move(gens));
}

inline MonomialIdeal power(const MonomialIdeal& a, int k) {
  if (k < 1) throw std::invalid_argument("power: exponent must be >= 1");
  MonomialIdeal out = a;
  for (int i = 1; i < k; ++i) out = product(out, a);
  return out;
}

inline std::vector<Monomial> monomials_of_degree(int vars, Exponent deg) {
  std::vector<Monomial> out;
  Monomial cur(vars, 0);
  const auto rec = [&](auto&& self, int pos, Exponent left) -> void {
    if (pos == vars - 1) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (Exponent e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, deg);
  return out;
}

/** a + m^N: adjoins every monomial of total degree N, then minimalizes. */
inline MonomialIdeal truncate(const MonomialIdeal& a, Exponent n) {
  if (n < 1) throw std::invalid_argument("truncate: degree must be >= 1");
  std::vector<Monomial> gens = a.gens;
  auto extra = monomials_of_degree(a.vars, n);
  gens.insert(gens.end(), extra.begin(), extra.end());
  return make_ideal(a.vars, std::move(gens));
}

using NewtonPolyhedron = VPolyhedron;

/**
 * conv(generator exponents) + R_+^n, described by its vertices; the
 * recession rays are the coordinate directions.
 */
inline NewtonPolyhedron newton_polyhedron(const MonomialIdeal& a) {
  VPolyhedron raw;
  raw.dim = a.vars;
  for (const auto& g : a.gens) {
    RatVec v(a.vars);
    for (int i = 0; i < a.vars; ++i) v[i] = g[i];
    raw.vertices.push_back(std::move(v));
  }
  for (int i = 0; i < a.vars; ++i) {
    RatVec e(a.vars, Rational(0));
    e[i] = 1;
    raw.rays.push_back(std::move(e));
  }
  return *enumerate_vertices(hull(raw));
}

}  // namespace lctpoly
