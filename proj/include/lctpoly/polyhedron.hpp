#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "lctpoly/rational.hpp"

namespace lctpoly {

/**
 * Closed halfspace { x : <normal, x> <= offset }.
 *
 * Canonical form has integral entries with content one, obtained by scaling
 * with a positive rational only; the inequality orientation fixes the sign.
 */
struct HalfSpace {
  RatVec normal;
  Rational offset;

  Rational evaluate(const RatVec& x) const { return dot(normal, x); }
  bool satisfied_by(const RatVec& x) const { return evaluate(x) <= offset; }

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) = default;
};

inline HalfSpace normalized(const HalfSpace& h) {
  if (is_zero_vec(h.normal))
    throw std::invalid_argument("halfspace normal must be nonzero");
  RatVec joint = h.normal;
  joint.push_back(h.offset);
  joint = primitive(joint);
  HalfSpace out;
  out.offset = joint.back();
  joint.pop_back();
  out.normal = std::move(joint);
  return out;
}

inline bool halfspace_less(const HalfSpace& a, const HalfSpace& b) {
  if (a.normal != b.normal) return lex_less(a.normal, b.normal);
  return a.offset < b.offset;
}

/**
 * Intersection of finitely many halfspaces in R^dim.
 *
 * includes_nonnegativity marks the implicit constraints x_i >= 0; they are
 * expanded to explicit rows by explicit_halfspaces() and consumed by
 * canonicalization, whose output always has the flag cleared.
 */
struct HPolyhedron {
  int dim = 0;
  std::vector<HalfSpace> halfspaces;
  bool includes_nonnegativity = false;

  std::vector<HalfSpace> explicit_halfspaces() const {
    std::vector<HalfSpace> rows = halfspaces;
    if (includes_nonnegativity) {
      for (int i = 0; i < dim; ++i) {
        HalfSpace h;
        h.normal.assign(dim, Rational(0));
        h.normal[i] = -1;
        h.offset = 0;
        rows.push_back(std::move(h));
      }
    }
    return rows;
  }

  bool contains(const RatVec& x) const {
    if (static_cast<int>(x.size()) != dim)
      throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& h : halfspaces)
      if (!h.satisfied_by(x)) return false;
    if (includes_nonnegativity)
      for (const auto& c : x)
        if (c < 0) return false;
    return true;
  }

  friend bool operator==(const HPolyhedron& a, const HPolyhedron& b) = default;
};

inline HPolyhedron make_hpoly(int dim, std::vector<HalfSpace> rows,
                              bool nonneg = false) {
  if (dim < 1) throw std::invalid_argument("polyhedron dimension must be >= 1");
  for (const auto& h : rows)
    if (static_cast<int>(h.normal.size()) != dim)
      throw std::invalid_argument("halfspace dimension mismatch");
  HPolyhedron p;
  p.dim = dim;
  p.halfspaces = std::move(rows);
  p.includes_nonnegativity = nonneg;
  return p;
}

inline HalfSpace halfspace(RatVec normal, Rational offset) {
  return HalfSpace{std::move(normal), std::move(offset)};
}

/** Fixed canonical representation of the empty set in R^dim. */
inline HPolyhedron canonical_empty(int dim) {
  RatVec pos(dim, Rational(0)), neg(dim, Rational(0));
  pos[0] = 1;
  neg[0] = -1;
  HPolyhedron p;
  p.dim = dim;
  p.halfspaces = {halfspace(neg, Rational(0)), halfspace(pos, Rational(-1))};
  std::sort(p.halfspaces.begin(), p.halfspaces.end(), halfspace_less);
  return p;
}

/**
 * Generator description: convex hull of vertices plus cone of rays.
 * Minimal descriptions keep vertices sorted and rays primitive and sorted.
 */
struct VPolyhedron {
  int dim = 0;
  std::vector<RatVec> vertices;
  std::vector<RatVec> rays;

  friend bool operator==(const VPolyhedron& a, const VPolyhedron& b) = default;
};

inline VPolyhedron make_vpoly(int dim, std::vector<RatVec> vertices,
                              std::vector<RatVec> rays = {}) {
  if (dim < 1) throw std::invalid_argument("polyhedron dimension must be >= 1");
  for (const auto& v : vertices)
    if (static_cast<int>(v.size()) != dim)
      throw std::invalid_argument("vertex dimension mismatch");
  for (const auto& r : rays)
    if (static_cast<int>(r.size()) != dim || is_zero_vec(r))
      throw std::invalid_argument("ray must be nonzero and match dimension");
  VPolyhedron v;
  v.dim = dim;
  v.vertices = std::move(vertices);
  v.rays = std::move(rays);
  return v;
}

}  // namespace lctpoly
