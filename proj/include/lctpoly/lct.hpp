#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/distance.hpp"
#include "lctpoly/monomial.hpp"
#include "lctpoly/polyhedron.hpp"
#include "lctpoly/rational.hpp"
#include "lctpoly/simplex.hpp"

namespace lctpoly {

/**
 * Numerical data of a log resolution of a tuple of ideals: for divisor j,
 * kappa[j] is its log discrepancy minus one and alpha[j][i] the vanishing
 * order of the i-th ideal along it. through_x lists the divisors whose
 * image passes through the chosen base point.
 */
struct ResolutionData {
  int ideals = 0;
  std::vector<Rational> kappa;
  std::vector<std::vector<Exponent>> alpha;
  std::vector<int> through_x;
};

enum class LctSource { Monomial, Principal, Resolution };

/** Canonical H-form of an LCT-polytope plus how it was produced. */
struct LctPolytope {
  HPolyhedron poly;
  LctSource source = LctSource::Monomial;

  friend bool operator==(const LctPolytope& a, const LctPolytope& b) {
    return a.poly == b.poly;
  }
};

namespace detail {

inline void validate_tuple(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty())
    throw std::invalid_argument("tuple of ideals must be nonempty");
  for (const auto& a : ideals)
    if (a.vars != ideals.front().vars)
      throw std::invalid_argument("tuple mixes variable counts");
}

}  // namespace detail

/**
 * Decides whether the weight vector lambda lies in the LCT-polytope:
 * feasibility of convex weights mu_{i,k} >= 0 with sum_k mu_{i,k} = 1 and
 * sum_i lambda_i sum_k mu_{i,k} g_{i,k} <= (1,...,1) componentwise. A zero
 * weight simply removes its term, matching the convention that a zero
 * multiple of a Newton polyhedron is the whole orthant.
 */
inline bool membership_oracle(const std::vector<MonomialIdeal>& ideals,
                              const RatVec& lambda) {
  detail::validate_tuple(ideals);
  const int r = static_cast<int>(ideals.size());
  const int n = ideals.front().vars;
  if (static_cast<int>(lambda.size()) != r)
    throw std::invalid_argument("membership_oracle: weight arity mismatch");
  for (const auto& l : lambda)
    if (l < 0)
      throw std::invalid_argument("membership_oracle: weights must be >= 0");

  LPProblem lp;
  std::vector<int> base(r);
  for (int i = 0; i < r; ++i) {
    base[i] = lp.nvars;
    lp.nvars += static_cast<int>(ideals[i].gens.size());
  }
  lp.nonneg.assign(lp.nvars, true);
  for (int i = 0; i < r; ++i) {
    LPRow row;
    row.coeffs.assign(lp.nvars, Rational(0));
    for (std::size_t k = 0; k < ideals[i].gens.size(); ++k)
      row.coeffs[base[i] + static_cast<int>(k)] = 1;
    row.rhs = 1;
    row.equality = true;
    lp.rows.push_back(std::move(row));
  }
  for (int j = 0; j < n; ++j) {
    LPRow row;
    row.coeffs.assign(lp.nvars, Rational(0));
    for (int i = 0; i < r; ++i)
      for (std::size_t k = 0; k < ideals[i].gens.size(); ++k)
        row.coeffs[base[i] + static_cast<int>(k)] =
            lambda[i] * ideals[i].gens[k][j];
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  return lp_feasible(lp).status == LPStatus::Optimal;
}

/**
 * LCT-polytope of a tuple of monomial ideals. The membership condition
 * "(1,...,1) lies in sum_i lambda_i P_i" is linear in lambda along every
 * fixed support direction, and it is enough to test the rays of the normal
 * fan of the unit-weight Minkowski sum, since that fan refines the fan of
 * each summand. Those rays are the facet normals of the sum; coordinate
 * directions are added for safety and deduplicated.
 */
inline LctPolytope lct_polytope_monomial(
    const std::vector<MonomialIdeal>& ideals) {
  detail::validate_tuple(ideals);
  const int r = static_cast<int>(ideals.size());
  const int n = ideals.front().vars;

  std::vector<NewtonPolyhedron> newtons;
  for (const auto& a : ideals) newtons.push_back(newton_polyhedron(a));
  VPolyhedron sum = newtons.front();
  for (std::size_t i = 1; i < newtons.size(); ++i)
    sum = minkowski_sum(sum, newtons[i]);

  std::vector<RatVec> directions;
  for (const auto& h : hull(sum).halfspaces) {
    RatVec w = vec_scale(h.normal, Rational(-1));
    for (const auto& c : w)
      if (c < 0)
        throw std::logic_error("facet normal of a Newton sum left the orthant");
    directions.push_back(std::move(w));
  }
  for (int j = 0; j < n; ++j) {
    RatVec e(n, Rational(0));
    e[j] = 1;
    directions.push_back(std::move(e));
  }
  std::sort(directions.begin(), directions.end(), lex_less);
  directions.erase(std::unique(directions.begin(), directions.end()),
                   directions.end());

  RatVec ones(n, Rational(1));
  std::vector<HalfSpace> rows;
  for (const auto& w : directions) {
    HalfSpace h;
    h.normal.resize(r);
    for (int i = 0; i < r; ++i) h.normal[i] = support_min(newtons[i], w);
    h.offset = dot(w, ones);
    if (is_zero_vec(h.normal)) continue;
    rows.push_back(std::move(h));
  }
  LctPolytope out;
  out.source = LctSource::Monomial;
  out.poly = canonicalize(make_hpoly(r, std::move(rows), true));
  return out;
}

/** Principal case: one monomial x^{q_i} per ideal gives the exact H-form
 *  { lambda >= 0 : sum_i q_{i,j} lambda_i <= 1 for every j }. */
inline LctPolytope lct_polytope_principal(int vars,
                                          const std::vector<Monomial>& mons) {
  if (mons.empty())
    throw std::invalid_argument("tuple of monomials must be nonempty");
  const int r = static_cast<int>(mons.size());
  for (const auto& q : mons) {
    if (static_cast<int>(q.size()) != vars)
      throw std::invalid_argument("monomial arity mismatch");
    if (std::all_of(q.begin(), q.end(), [](Exponent e) { return e == 0; }))
      throw improper_ideal_error("unit ideal");
    for (const auto e : q)
      if (e < 0 || e > kMaxExponent)
        throw std::invalid_argument("exponent out of range");
  }
  std::vector<HalfSpace> rows;
  for (int j = 0; j < vars; ++j) {
    HalfSpace h;
    h.normal.resize(r);
    for (int i = 0; i < r; ++i) h.normal[i] = mons[i][j];
    h.offset = 1;
    if (is_zero_vec(h.normal)) continue;
    rows.push_back(std::move(h));
  }
  LctPolytope out;
  out.source = LctSource::Principal;
  out.poly = canonicalize(make_hpoly(r, std::move(rows), true));
  return out;
}

/**
 * LCT-polytope from resolution data: one inequality
 * sum_i alpha[j][i] lambda_i <= kappa[j] + 1 per divisor, restricted to
 * divisors through the base point when local is set. Rejects data whose
 * polytope would be unbounded (some ideal invisible to every applicable
 * divisor).
 */
inline LctPolytope lct_polytope_from_resolution(const ResolutionData& data,
                                                bool local = true) {
  const int r = data.ideals;
  if (r < 1) throw std::invalid_argument("resolution data needs ideals >= 1");
  const int n_div = static_cast<int>(data.alpha.size());
  if (n_div < 1 || static_cast<int>(data.kappa.size()) != n_div)
    throw std::invalid_argument("resolution data size mismatch");
  for (const auto& k : data.kappa)
    if (k < 0) throw std::invalid_argument("negative discrepancy");
  for (const auto& row : data.alpha) {
    if (static_cast<int>(row.size()) != r)
      throw std::invalid_argument("alpha row arity mismatch");
    for (const auto a : row)
      if (a < 0) throw std::invalid_argument("negative vanishing order");
  }
  std::vector<int> use;
  if (local) {
    for (const int j : data.through_x) {
      if (j < 0 || j >= n_div)
        throw std::invalid_argument("through_x index out of range");
      use.push_back(j);
    }
    std::sort(use.begin(), use.end());
    use.erase(std::unique(use.begin(), use.end()), use.end());
  } else {
    use.resize(n_div);
    for (int j = 0; j < n_div; ++j) use[j] = j;
  }
  for (int i = 0; i < r; ++i) {
    bool seen = false;
    for (const int j : use) seen = seen || data.alpha[j][i] > 0;
    if (!seen)
      throw std::invalid_argument(
          "resolution data leaves a weight direction unbounded");
  }
  std::vector<HalfSpace> rows;
  for (const int j : use) {
    HalfSpace h;
    h.normal.resize(r);
    for (int i = 0; i < r; ++i) h.normal[i] = data.alpha[j][i];
    h.offset = data.kappa[j] + 1;
    if (is_zero_vec(h.normal)) continue;
    rows.push_back(std::move(h));
  }
  LctPolytope out;
  out.source = LctSource::Resolution;
  out.poly = canonicalize(make_hpoly(r, std::move(rows), true));
  return out;
}

/**
 * Log canonical threshold of one ideal: the right endpoint of its segment
 * polytope, found by one exact LP. Substituting nu_k = c mu_k turns
 * "(1,...,1) in c P_a" into max sum_k nu_k subject to nu >= 0 and
 * sum_k nu_k g_k <= (1,...,1).
 */
inline Rational lct_threshold(const MonomialIdeal& a) {
  LPProblem lp;
  lp.nvars = static_cast<int>(a.gens.size());
  lp.nonneg.assign(lp.nvars, true);
  for (int j = 0; j < a.vars; ++j) {
    LPRow row;
    row.coeffs.resize(lp.nvars);
    for (int k = 0; k < lp.nvars; ++k) row.coeffs[k] = a.gens[k][j];
    row.rhs = 1;
    lp.rows.push_back(std::move(row));
  }
  const LPResult r = lp_maximize(lp, RatVec(lp.nvars, Rational(1)));
  if (r.status != LPStatus::Optimal)
    throw std::logic_error("threshold LP must have a bounded optimum");
  return r.value;
}

struct OrderBounds {
  Exponent order = 0;
  Rational threshold;
  Rational lower;  // 1/ord
  Rational upper;  // n/ord
  bool ok = false;
};

/** Checks 1/ord(a) <= lct(a) <= n/ord(a). */
inline OrderBounds order_bounds_check(const MonomialIdeal& a) {
  OrderBounds out;
  out.order = ord(a);
  out.threshold = lct_threshold(a);
  out.lower = Rational(1) / out.order;
  out.upper = Rational(a.vars) / out.order;
  out.ok = out.lower <= out.threshold && out.threshold <= out.upper;
  return out;
}

/** Image of P under lambda_i -> lambda_i / m_i, the polytope of the tuple
 *  of m_i-th powers. */
inline HPolyhedron power_rescale(const HPolyhedron& p,
                                 const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != p.dim)
    throw std::invalid_argument("power_rescale: arity mismatch");
  for (const int k : m)
    if (k < 1) throw std::invalid_argument("power_rescale: powers must be >= 1");
  std::vector<HalfSpace> rows;
  for (const auto& h : p.explicit_halfspaces()) {
    HalfSpace out = h;
    for (int i = 0; i < p.dim; ++i) out.normal[i] *= m[i];
    rows.push_back(std::move(out));
  }
  return canonicalize(make_hpoly(p.dim, std::move(rows)));
}

struct ContainmentBounds {
  HPolyhedron inner;  // simplex on the per-ideal thresholds
  HPolyhedron outer;  // box of per-ideal thresholds
  bool inner_contained = false;
  bool outer_contains = false;
};

inline ContainmentBounds containment_bounds(
    const std::vector<MonomialIdeal>& ideals) {
  detail::validate_tuple(ideals);
  const int r = static_cast<int>(ideals.size());
  RatVec thresholds(r);
  for (int i = 0; i < r; ++i) thresholds[i] = lct_threshold(ideals[i]);

  std::vector<HalfSpace> simplex_rows;
  {
    HalfSpace h;
    h.normal.resize(r);
    for (int i = 0; i < r; ++i) h.normal[i] = Rational(1) / thresholds[i];
    h.offset = 1;
    simplex_rows.push_back(std::move(h));
  }
  std::vector<HalfSpace> box_rows;
  for (int i = 0; i < r; ++i) {
    HalfSpace h;
    h.normal.assign(r, Rational(0));
    h.normal[i] = 1;
    h.offset = thresholds[i];
    box_rows.push_back(std::move(h));
  }
  ContainmentBounds out;
  out.inner = canonicalize(make_hpoly(r, std::move(simplex_rows), true));
  out.outer = canonicalize(make_hpoly(r, std::move(box_rows), true));
  const HPolyhedron p = lct_polytope_monomial(ideals).poly;
  out.inner_contained = subset_of(out.inner, p);
  out.outer_contains = subset_of(p, out.outer);
  return out;
}

/**
 * Checks closure under pushing coordinates to zero. For a convex polytope
 * in the nonnegative orthant this is equivalent to full down-closedness:
 * zeroing distributes over convex combinations, and scaling one coordinate
 * is a convex combination of the point and its zeroed image.
 */
inline bool is_down_closed(const HPolyhedron& p) {
  const auto gens = enumerate_vertices(p);
  if (!gens) return true;
  if (!gens->rays.empty())
    throw std::invalid_argument("is_down_closed: polytope is unbounded");
  for (const auto& v : gens->vertices)
    for (int i = 0; i < p.dim; ++i) {
      RatVec w = v;
      w[i] = 0;
      if (!p.contains(w)) return false;
    }
  return true;
}

/** Minkowski sum with the segment [0, 1/d] along one coordinate axis. */
inline HPolyhedron prism_extend(const HPolyhedron& p, int axis, int d) {
  if (axis < 0 || axis >= p.dim)
    throw std::invalid_argument("prism_extend: axis out of range");
  if (d < 1) throw std::invalid_argument("prism_extend: d must be >= 1");
  const auto gens = enumerate_vertices(p);
  if (!gens) throw std::invalid_argument("prism_extend: polytope is empty");
  if (!gens->rays.empty())
    throw std::invalid_argument("prism_extend: polytope is unbounded");
  VPolyhedron raw;
  raw.dim = p.dim;
  for (const auto& v : gens->vertices) {
    raw.vertices.push_back(v);
    RatVec shifted = v;
    shifted[axis] += Rational(1) / d;
    raw.vertices.push_back(std::move(shifted));
  }
  return hull(raw);
}

}  // namespace lctpoly
