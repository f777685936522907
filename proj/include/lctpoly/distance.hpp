#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/linalg.hpp"
#include "lctpoly/polyhedron.hpp"
#include "lctpoly/rational.hpp"

namespace lctpoly {

/**
 * min { <w, y> : y in P } for componentwise nonnegative w. Finite because
 * every recession ray must pay nonnegatively against w; rays that do not are
 * rejected as an unbounded-support error.
 */
inline Rational support_min(const VPolyhedron& p, const RatVec& w) {
  if (static_cast<int>(w.size()) != p.dim)
    throw std::invalid_argument("support_min: dimension mismatch");
  for (const auto& c : w)
    if (c < 0)
      throw std::invalid_argument("support_min: direction must be nonnegative");
  if (p.vertices.empty())
    throw std::invalid_argument("support_min: empty polyhedron");
  for (const auto& r : p.rays)
    if (dot(w, r) < 0)
      throw std::invalid_argument("support_min: unbounded in direction");
  Rational best = dot(w, p.vertices.front());
  for (const auto& v : p.vertices) best = std::min(best, dot(w, v));
  return best;
}

/** Minkowski sum with a minimal output description. */
inline VPolyhedron minkowski_sum(const VPolyhedron& a, const VPolyhedron& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  if (a.vertices.empty() || b.vertices.empty())
    throw std::invalid_argument("minkowski_sum: empty summand");
  VPolyhedron raw;
  raw.dim = a.dim;
  for (const auto& u : a.vertices)
    for (const auto& v : b.vertices) raw.vertices.push_back(vec_add(u, v));
  raw.rays = a.rays;
  raw.rays.insert(raw.rays.end(), b.rays.begin(), b.rays.end());
  for (auto& r : raw.rays) r = primitive(r);
  std::sort(raw.rays.begin(), raw.rays.end(), lex_less);
  raw.rays.erase(std::unique(raw.rays.begin(), raw.rays.end()), raw.rays.end());
  const auto minimal = enumerate_vertices(hull(raw));
  return *minimal;
}

/**
 * Bounded polytope prepared for repeated distance queries: canonical facet
 * list, vertex list, and every nonempty face as a set of vertex indices
 * (faces are intersections of facet incidence sets).
 */
struct DistanceGeometry {
  HPolyhedron h;
  VPolyhedron v;
  std::vector<std::vector<int>> faces;
};

inline DistanceGeometry prepare_distance(const HPolyhedron& p) {
  DistanceGeometry g;
  g.h = canonicalize(p);
  const auto gens = enumerate_vertices(g.h);
  if (!gens)
    throw std::invalid_argument("distance: polytope is empty");
  if (!gens->rays.empty())
    throw std::invalid_argument("distance: polytope is unbounded");
  g.v = *gens;

  const int n = static_cast<int>(g.v.vertices.size());
  std::vector<std::vector<int>> facet_sets;
  for (const auto& h : g.h.halfspaces) {
    std::vector<int> tight;
    for (int i = 0; i < n; ++i)
      if (h.evaluate(g.v.vertices[i]) == h.offset) tight.push_back(i);
    facet_sets.push_back(std::move(tight));
  }

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> work;
  std::vector<int> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  seen.insert(all);
  work.push_back(all);
  while (!work.empty()) {
    const std::vector<int> face = std::move(work.back());
    work.pop_back();
    for (const auto& fs : facet_sets) {
      std::vector<int> meet;
      std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(),
                            std::back_inserter(meet));
      if (meet.empty()) continue;
      if (seen.insert(meet).second) work.push_back(meet);
    }
  }
  g.faces.assign(seen.begin(), seen.end());
  return g;
}

/**
 * Exact squared Euclidean distance from x to a bounded polytope. The
 * nearest point lies in the relative interior of some face and is then the
 * orthogonal projection onto that face's affine hull, so projecting onto
 * every face hull, keeping projections that land inside the polytope, and
 * taking the minimum is exact. Vertices always land inside, so a candidate
 * exists.
 */
inline Rational point_polytope_sqdist(const RatVec& x,
                                      const DistanceGeometry& g) {
  if (static_cast<int>(x.size()) != g.h.dim)
    throw std::invalid_argument("point_polytope_sqdist: dimension mismatch");
  if (g.h.contains(x)) return Rational(0);

  bool have = false;
  Rational best = 0;
  for (const auto& face : g.faces) {
    const RatVec& v0 = g.v.vertices[face[0]];
    RatVec y;
    if (face.size() == 1) {
      y = v0;
    } else {
      std::vector<RatVec> dirs;
      for (std::size_t k = 1; k < face.size(); ++k)
        dirs.push_back(vec_sub(g.v.vertices[face[k]], v0));
      const RatVec rel = vec_sub(x, v0);
      std::vector<RatVec> gram(dirs.size(), RatVec(dirs.size()));
      RatVec rhs(dirs.size());
      for (std::size_t i = 0; i < dirs.size(); ++i) {
        for (std::size_t j = 0; j < dirs.size(); ++j)
          gram[i][j] = dot(dirs[i], dirs[j]);
        rhs[i] = dot(dirs[i], rel);
      }
      const auto mu = solve_linear(std::move(gram), std::move(rhs));
      y = v0;
      for (std::size_t i = 0; i < dirs.size(); ++i)
        y = vec_add(y, vec_scale(dirs[i], (*mu)[i]));
      if (!g.h.contains(y)) continue;
    }
    const Rational d = sq_distance(x, y);
    if (!have || d < best) {
      best = d;
      have = true;
    }
  }
  return best;
}

inline Rational point_polytope_sqdist(const RatVec& x, const HPolyhedron& p) {
  return point_polytope_sqdist(x, prepare_distance(p));
}

/**
 * Squared Hausdorff distance between bounded nonempty polytopes. The
 * distance function to a convex set is convex, so each directed maximum is
 * attained at a vertex.
 */
inline Rational hausdorff_sq(const DistanceGeometry& a,
                             const DistanceGeometry& b) {
  Rational best = 0;
  for (const auto& v : a.v.vertices)
    best = std::max(best, point_polytope_sqdist(v, b));
  for (const auto& v : b.v.vertices)
    best = std::max(best, point_polytope_sqdist(v, a));
  return best;
}

inline Rational hausdorff_sq(const HPolyhedron& a, const HPolyhedron& b) {
  if (a.dim != b.dim)
    throw std::invalid_argument("hausdorff_sq: dimension mismatch");
  return hausdorff_sq(prepare_distance(a), prepare_distance(b));
}

/**
 * Square-root-free check of sqrt(a2) <= sqrt(b2) + sqrt(c2) for
 * nonnegative squared lengths.
 */
inline bool triangle_sq_ok(const Rational& a2, const Rational& b2,
                           const Rational& c2) {
  const Rational gap = a2 - b2 - c2;
  if (gap <= 0) return true;
  return gap * gap <= 4 * b2 * c2;
}

}  // namespace lctpoly
