#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "lctpoly/dd.hpp"
#include "lctpoly/linalg.hpp"
#include "lctpoly/polyhedron.hpp"
#include "lctpoly/rational.hpp"
#include "lctpoly/simplex.hpp"

namespace lctpoly {

namespace detail {

inline LPProblem relaxed_lp(int dim, const std::vector<HalfSpace>& rows) {
  LPProblem lp;
  lp.nvars = dim;
  lp.nonneg.assign(dim, false);
  for (const auto& h : rows) lp.rows.push_back(LPRow{h.normal, h.offset, false});
  return lp;
}

}  // namespace detail

inline bool is_empty(const HPolyhedron& p) {
  return lp_feasible(detail::relaxed_lp(p.dim, p.explicit_halfspaces()))
             .status == LPStatus::Infeasible;
}

/**
 * Canonical H-form. The output depends only on the set described:
 * implicit equalities become opposing halfspace pairs spanning the affine
 * hull (reduced row echelon basis), the remaining inequalities are reduced
 * to canonical representatives modulo that basis, redundant rows are
 * removed by exact LP, and everything is primitive, deduplicated and
 * sorted. Empty sets map to a fixed two-row sentinel. The nonnegativity
 * flag is consumed; canonical forms always list it explicitly.
 */
inline HPolyhedron canonicalize(const HPolyhedron& p) {
  std::vector<HalfSpace> rows;
  for (const auto& h : p.explicit_halfspaces()) {
    if (is_zero_vec(h.normal)) {
      if (h.offset < 0) return canonical_empty(p.dim);
      continue;
    }
    rows.push_back(normalized(h));
  }
  std::sort(rows.begin(), rows.end(), halfspace_less);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  if (lp_feasible(detail::relaxed_lp(p.dim, rows)).status ==
      LPStatus::Infeasible)
    return canonical_empty(p.dim);

  std::vector<RatVec> eq_rows;
  std::vector<HalfSpace> inequalities;
  for (const auto& h : rows) {
    const LPResult r = lp_maximize(detail::relaxed_lp(p.dim, rows),
                                   vec_scale(h.normal, Rational(-1)));
    const bool implicit_eq =
        r.status == LPStatus::Optimal && -r.value == h.offset;
    if (implicit_eq) {
      RatVec joint = h.normal;
      joint.push_back(h.offset);
      eq_rows.push_back(std::move(joint));
    } else {
      inequalities.push_back(h);
    }
  }

  const Rref basis = rref(eq_rows);
  std::vector<HalfSpace> out;
  for (const auto& row : basis.rows) {
    RatVec joint = primitive(row);
    HalfSpace h;
    h.offset = joint.back();
    joint.pop_back();
    h.normal = std::move(joint);
    out.push_back(HalfSpace{vec_scale(h.normal, Rational(-1)), -h.offset});
    out.push_back(std::move(h));
  }

  std::vector<HalfSpace> candidates;
  for (const auto& h : inequalities) {
    RatVec joint = h.normal;
    joint.push_back(h.offset);
    joint = reduce_mod(basis, std::move(joint));
    HalfSpace red;
    red.offset = joint.back();
    joint.pop_back();
    red.normal = std::move(joint);
    if (is_zero_vec(red.normal)) continue;
    candidates.push_back(normalized(red));
  }
  std::sort(candidates.begin(), candidates.end(), halfspace_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());

  std::vector<bool> kept(candidates.size(), true);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    std::vector<HalfSpace> others = out;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (j != i && kept[j]) others.push_back(candidates[j]);
    const LPResult r =
        lp_maximize(detail::relaxed_lp(p.dim, others), candidates[i].normal);
    if (r.status == LPStatus::Optimal && r.value <= candidates[i].offset)
      kept[i] = false;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (kept[i]) out.push_back(candidates[i]);

  std::sort(out.begin(), out.end(), halfspace_less);
  HPolyhedron result;
  result.dim = p.dim;
  result.halfspaces = std::move(out);
  return result;
}

/**
 * Minimal generator description. Returns nullopt for the empty set and
 * throws for polyhedra containing a line, which have no vertex at all.
 */
inline std::optional<VPolyhedron> enumerate_vertices(const HPolyhedron& p) {
  std::vector<RatVec> cone_rows;
  for (const auto& h : p.explicit_halfspaces()) {
    RatVec row;
    row.reserve(p.dim + 1);
    row.push_back(h.offset);
    for (const auto& c : h.normal) row.push_back(-c);
    cone_rows.push_back(std::move(row));
  }
  {
    RatVec e0(p.dim + 1, Rational(0));
    e0[0] = 1;
    cone_rows.push_back(std::move(e0));
  }
  const ConeDescription cone = dd_cone(p.dim + 1, cone_rows);

  VPolyhedron out;
  out.dim = p.dim;
  for (const auto& ray : cone.rays) {
    if (ray[0] > 0) {
      RatVec v(ray.begin() + 1, ray.end());
      out.vertices.push_back(vec_scale(v, Rational(1) / ray[0]));
    } else {
      out.rays.emplace_back(ray.begin() + 1, ray.end());
    }
  }
  if (out.vertices.empty()) return std::nullopt;
  if (!cone.lineality.empty())
    throw std::invalid_argument(
        "enumerate_vertices: polyhedron contains a line");
  std::sort(out.vertices.begin(), out.vertices.end(), lex_less);
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  return out;
}

/**
 * Facet description of conv(vertices) + cone(rays), computed on the dual
 * side: valid inequalities <n,x> <= c correspond to the cone of vectors
 * (c, -n) nonnegative against every homogenized generator, and its extreme
 * rays are the facets. The raw list is funneled through canonicalize so
 * both conversion directions share one canonical convention.
 */
inline HPolyhedron hull(const VPolyhedron& v) {
  if (v.vertices.empty())
    throw std::invalid_argument("hull: at least one point required");
  std::vector<RatVec> rows;
  for (const auto& p : v.vertices) {
    RatVec row;
    row.reserve(v.dim + 1);
    row.push_back(Rational(1));
    row.insert(row.end(), p.begin(), p.end());
    rows.push_back(std::move(row));
  }
  for (const auto& r : v.rays) {
    RatVec row;
    row.reserve(v.dim + 1);
    row.push_back(Rational(0));
    row.insert(row.end(), r.begin(), r.end());
    rows.push_back(std::move(row));
  }
  const ConeDescription dual = dd_cone(v.dim + 1, rows);

  std::vector<HalfSpace> halfspaces;
  const auto to_halfspace = [&](const RatVec& y) {
    HalfSpace h;
    h.offset = y[0];
    h.normal.assign(y.begin() + 1, y.end());
    for (auto& c : h.normal) c = -c;
    return h;
  };
  for (const auto& y : dual.rays) {
    HalfSpace h = to_halfspace(y);
    if (is_zero_vec(h.normal)) continue;
    halfspaces.push_back(std::move(h));
  }
  for (const auto& l : dual.lineality) {
    HalfSpace h = to_halfspace(l);
    halfspaces.push_back(HalfSpace{vec_scale(h.normal, Rational(-1)), -h.offset});
    halfspaces.push_back(std::move(h));
  }
  return canonicalize(make_hpoly(v.dim, std::move(halfspaces)));
}

inline bool canonically_equal(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim) return false;
  return canonicalize(a) == canonicalize(b);
}

/** Canonicalized intersection. */
inline HPolyhedron intersection(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("intersection: dimension mismatch");
  std::vector<HalfSpace> rows = a.explicit_halfspaces();
  const std::vector<HalfSpace> more = b.explicit_halfspaces();
  rows.insert(rows.end(), more.begin(), more.end());
  return canonicalize(make_hpoly(a.dim, std::move(rows)));
}

/** Decides P subset of Q through the generator description of P. */
inline bool subset_of(const HPolyhedron& p, const HPolyhedron& q) {
  if (p.dim != q.dim)
    throw std::invalid_argument("subset_of: dimension mismatch");
  const auto gens = enumerate_vertices(p);
  if (!gens) return true;
  const std::vector<HalfSpace> rows = q.explicit_halfspaces();
  for (const auto& v : gens->vertices)
    for (const auto& h : rows)
      if (!h.satisfied_by(v)) return false;
  for (const auto& r : gens->rays)
    for (const auto& h : rows)
      if (dot(h.normal, r) > 0) return false;
  return true;
}

inline bool is_bounded(const HPolyhedron& p) {
  const auto gens = enumerate_vertices(p);
  return !gens || gens->rays.empty();
}

}  // namespace lctpoly
