#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/distance.hpp"
#include "lctpoly/lct.hpp"
#include "lctpoly/monomial.hpp"

namespace lctpoly {

/**
 * Deterministic sequence of LCT-polytopes, materialized lazily and cached.
 * Terms are indexed from 1 up to a fixed prefix length. A family may carry
 * the polytope it is known to converge to; reports fall back to it when no
 * stabilization is visible in the prefix.
 */
class PolytopeSequence {
 public:
  PolytopeSequence(int prefix_length, std::function<LctPolytope(int)> generator,
                   std::optional<HPolyhedron> known_limit = std::nullopt)
      : prefix_(prefix_length),
        known_limit_(std::move(known_limit)),
        gen_(std::move(generator)),
        cache_(static_cast<std::size_t>(prefix_length)) {
    if (prefix_ < 1)
      throw std::invalid_argument("sequence prefix must be >= 1");
  }

  int prefix_length() const { return prefix_; }
  const std::optional<HPolyhedron>& known_limit() const { return known_limit_; }

  const LctPolytope& term(int m) const {
    if (m < 1 || m > prefix_)
      throw std::invalid_argument("sequence index out of prefix");
    const std::size_t i = static_cast<std::size_t>(m - 1);
    if (!cache_[i]) cache_[i] = gen_(m);
    return *cache_[i];
  }

 private:
  int prefix_;
  std::optional<HPolyhedron> known_limit_;
  std::function<LctPolytope(int)> gen_;
  mutable std::vector<std::optional<LctPolytope>> cache_;
};

/** Canonical intersection of the terms from m0 through the prefix end. */
inline HPolyhedron tail_intersection(const PolytopeSequence& seq, int m0) {
  if (m0 < 1 || m0 > seq.prefix_length())
    throw std::invalid_argument("tail_intersection: index out of prefix");
  HPolyhedron acc = seq.term(seq.prefix_length()).poly;
  for (int m = seq.prefix_length() - 1; m >= m0; --m)
    acc = intersection(acc, seq.term(m).poly);
  return acc;
}

struct LimitReport {
  HPolyhedron candidate_limit;
  std::optional<int> m0;
  std::vector<Rational> sq_distance_profile;  // squared distance per term
  bool stationary = false;
};

/**
 * Searches the prefix for an eventually-constant tail. m0 is the first
 * index of the maximal run of canonically equal terms reaching the prefix
 * end; the report is stationary when that run covers at least `window`
 * terms, with Q the repeated term, which then equals every tail
 * intersection from m0 on. Otherwise the report is non-stationary and Q
 * falls back to the family's known limit, or else to the full prefix
 * intersection.
 */
inline LimitReport detect_stationary_limit(const PolytopeSequence& seq,
                                           int window = 5) {
  const int m_end = seq.prefix_length();
  if (window < 1)
    throw std::invalid_argument(
        "detect_stationary_limit: window must be positive");
  if (m_end < window + 1)
    throw std::invalid_argument(
        "detect_stationary_limit: prefix must exceed the window");

  std::vector<HPolyhedron> terms(m_end + 1);
  for (int m = 1; m <= m_end; ++m) terms[m] = seq.term(m).poly;

  int run_start = m_end;
  while (run_start > 1 && terms[run_start - 1] == terms[m_end]) --run_start;

  LimitReport report;
  if (m_end - run_start + 1 >= window) {
    report.stationary = true;
    report.m0 = run_start;
    report.candidate_limit = terms[run_start];
  } else if (seq.known_limit()) {
    report.candidate_limit = *seq.known_limit();
  } else {
    report.candidate_limit = tail_intersection(seq, 1);
  }

  const DistanceGeometry q_geom = prepare_distance(report.candidate_limit);
  for (int m = 1; m <= m_end; ++m)
    report.sq_distance_profile.push_back(
        hausdorff_sq(prepare_distance(terms[m]), q_geom));
  return report;
}

/** Family q -> LCT(a_1 + m^q, ..., a_r + m^q); descends to the polytope of
 *  the tuple itself, which is recorded as the known limit. */
inline PolytopeSequence truncation_family(
    const std::vector<MonomialIdeal>& ideals, int prefix_length) {
  detail::validate_tuple(ideals);
  const HPolyhedron base = lct_polytope_monomial(ideals).poly;
  return PolytopeSequence(
      prefix_length,
      [ideals](int q) {
        std::vector<MonomialIdeal> cut;
        for (const auto& a : ideals) cut.push_back(truncate(a, q));
        return lct_polytope_monomial(cut);
      },
      base);
}

namespace detail {

inline MonomialIdeal extend_ideal(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  for (auto g : a.gens) {
    g.push_back(0);
    gens.push_back(std::move(g));
  }
  return make_ideal(a.vars + 1, std::move(gens));
}

}  // namespace detail

/**
 * Family d -> LCT(b_1, ..., b_r) in one extra variable y, where b_i pulls
 * back a_i and the ideal at `axis` additionally gains y^d. Each term is the
 * prism of the base polytope of thickness 1/d along that axis, so the
 * family strictly descends toward the base polytope without ever reaching
 * it; the base is recorded as the known limit.
 */
inline PolytopeSequence ex11_family(const std::vector<MonomialIdeal>& ideals,
                                    int axis, int prefix_length) {
  detail::validate_tuple(ideals);
  const int r = static_cast<int>(ideals.size());
  if (axis < 0 || axis >= r)
    throw std::invalid_argument("ex11_family: axis out of range");
  const HPolyhedron base = lct_polytope_monomial(ideals).poly;
  return PolytopeSequence(
      prefix_length,
      [ideals, axis](int d) {
        std::vector<MonomialIdeal> extended;
        for (const auto& a : ideals)
          extended.push_back(detail::extend_ideal(a));
        Monomial tail(extended[axis].vars, 0);
        tail.back() = d;
        std::vector<Monomial> gens = extended[axis].gens;
        gens.push_back(std::move(tail));
        extended[axis] = make_ideal(extended[axis].vars, std::move(gens));
        return lct_polytope_monomial(extended);
      },
      base);
}

struct Cor2Report {
  Rational sq_dist;
  Rational bound;  // n^2 r / N^2
  bool ok = false;
};

/**
 * For tuples agreeing modulo m^N, the polytopes lie within Hausdorff
 * distance n sqrt(r) / N of each other; checked on squared values.
 * Tuples violating the agreement precondition are rejected.
 */
inline Cor2Report cor2_check(const std::vector<MonomialIdeal>& a,
                             const std::vector<MonomialIdeal>& b, int n_trunc) {
  detail::validate_tuple(a);
  detail::validate_tuple(b);
  if (a.size() != b.size())
    throw std::invalid_argument("cor2_check: tuple length mismatch");
  if (a.front().vars != b.front().vars)
    throw std::invalid_argument("cor2_check: variable count mismatch");
  if (n_trunc < 1) throw std::invalid_argument("cor2_check: N must be >= 1");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (truncate(a[i], n_trunc) != truncate(b[i], n_trunc))
      throw std::invalid_argument(
          "cor2_check: tuples do not agree modulo m^N");
  const int n = a.front().vars;
  const int r = static_cast<int>(a.size());
  Cor2Report report;
  report.sq_dist = hausdorff_sq(lct_polytope_monomial(a).poly,
                                lct_polytope_monomial(b).poly);
  report.bound = Rational(n) * n * r / (Rational(n_trunc) * n_trunc);
  report.ok = report.sq_dist <= report.bound;
  return report;
}

/** Checks that the whole prefix intersection sits inside the candidate. */
inline bool limit_membership_bound_check(const PolytopeSequence& seq,
                                         const HPolyhedron& q) {
  return subset_of(tail_intersection(seq, 1), q);
}

struct OrderProbeCoordinate {
  Exponent max_ord = 0;
  std::vector<Exponent> ords;
  std::vector<Rational> upper_bounds;  // n / ord per term
  bool flagged = false;
};

struct OrderProbeReport {
  std::vector<OrderProbeCoordinate> coordinates;
};

/**
 * Per coordinate, tracks ord along the sequence and the implied threshold
 * upper bounds n/ord. A coordinate is flagged as a vanishing-threshold
 * candidate when its orders never decrease and strictly grow overall;
 * unbounded order forces the limit onto the coordinate hyperplane.
 */
inline OrderProbeReport order_divergence_probe(
    const std::vector<std::vector<MonomialIdeal>>& sequences) {
  OrderProbeReport report;
  for (const auto& seq : sequences) {
    if (seq.empty())
      throw std::invalid_argument("order_divergence_probe: empty sequence");
    OrderProbeCoordinate coord;
    bool nondecreasing = true;
    for (const auto& a : seq) {
      const Exponent o = ord(a);
      if (!coord.ords.empty() && o < coord.ords.back()) nondecreasing = false;
      coord.ords.push_back(o);
      coord.upper_bounds.push_back(Rational(a.vars) / o);
      coord.max_ord = std::max(coord.max_ord, o);
    }
    coord.flagged = nondecreasing && coord.ords.back() > coord.ords.front();
    report.coordinates.push_back(std::move(coord));
  }
  return report;
}

}  // namespace lctpoly
