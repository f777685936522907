#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "lctpoly/linalg.hpp"
#include "lctpoly/rational.hpp"

namespace lctpoly {

/*
 * Double description method for rational polyhedral cones.
 *
 * dd_cone computes a minimal generator description of
 *     C = { x in R^dim : <row, x> >= 0 for every row }
 * as a lineality space plus extreme rays modulo that space. Constraints are
 * inserted one at a time. While the lineality space meets the new hyperplane
 * we shrink it by one dimension; once every lineality vector is tight, rays
 * on the violating side are replaced by combinations with adjacent rays on
 * the feasible side. Adjacency uses the combinatorial test on sets of tight
 * constraints, which keeps the ray list minimal at every step.
 *
 * Output is canonical for the cone as a set: the lineality basis is in
 * reduced row echelon form, rays are reduced modulo it, and everything is
 * primitive and sorted.
 */
struct ConeDescription {
  std::vector<RatVec> lineality;
  std::vector<RatVec> rays;
};

namespace detail {

inline std::vector<std::size_t> tight_set(const std::vector<RatVec>& processed,
                                          const RatVec& ray) {
  std::vector<std::size_t> z;
  for (std::size_t j = 0; j < processed.size(); ++j)
    if (dot(processed[j], ray) == 0) z.push_back(j);
  return z;
}

inline bool subset_of(const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace detail

inline ConeDescription dd_cone(int dim, const std::vector<RatVec>& rows) {
  std::vector<RatVec> lin;
  for (int i = 0; i < dim; ++i) {
    RatVec e(dim, Rational(0));
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<RatVec> rays;
  std::vector<RatVec> processed;

  for (const RatVec& a : rows) {
    if (is_zero_vec(a)) continue;

    std::size_t pivot = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        pivot = i;
        break;
      }

    if (pivot < lin.size()) {
      RatVec l0 = lin[pivot];
      Rational val0 = dot(a, l0);
      if (val0 < 0) {
        l0 = vec_scale(l0, Rational(-1));
        val0 = -val0;
      }
      std::vector<RatVec> next_lin;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == pivot) continue;
        const Rational v = dot(a, lin[i]);
        next_lin.push_back(primitive(vec_sub(lin[i], vec_scale(l0, v / val0))));
      }
      std::vector<RatVec> next_rays;
      for (const auto& r : rays) {
        const Rational v = dot(a, r);
        next_rays.push_back(primitive(vec_sub(r, vec_scale(l0, v / val0))));
      }
      next_rays.push_back(primitive(l0));
      lin = std::move(next_lin);
      rays = std::move(next_rays);
      processed.push_back(a);
      continue;
    }

    std::vector<std::size_t> plus, zero, minus;
    std::vector<Rational> vals(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      vals[i] = dot(a, rays[i]);
      if (vals[i] > 0)
        plus.push_back(i);
      else if (vals[i] < 0)
        minus.push_back(i);
      else
        zero.push_back(i);
    }
    if (minus.empty()) {
      processed.push_back(a);
      continue;
    }

    std::vector<std::vector<std::size_t>> tight(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i)
      tight[i] = detail::tight_set(processed, rays[i]);

    std::vector<RatVec> next_rays;
    for (std::size_t i : plus) next_rays.push_back(rays[i]);
    for (std::size_t i : zero) next_rays.push_back(rays[i]);
    for (std::size_t p : plus) {
      for (std::size_t m : minus) {
        std::vector<std::size_t> common;
        std::set_intersection(tight[p].begin(), tight[p].end(),
                              tight[m].begin(), tight[m].end(),
                              std::back_inserter(common));
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
          if (k == p || k == m) continue;
          if (detail::subset_of(common, tight[k])) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        RatVec combo = primitive(vec_sub(vec_scale(rays[m], vals[p]),
                                         vec_scale(rays[p], vals[m])));
        if (is_zero_vec(combo)) continue;
        if (std::find(next_rays.begin(), next_rays.end(), combo) ==
            next_rays.end())
          next_rays.push_back(std::move(combo));
      }
    }
    rays = std::move(next_rays);
    processed.push_back(a);
  }

  ConeDescription out;
  const Rref basis = rref(lin);
  for (const auto& row : basis.rows) out.lineality.push_back(primitive(row));
  for (auto& r : rays) {
    RatVec red = primitive(reduce_mod(basis, r));
    if (!is_zero_vec(red)) out.rays.push_back(std::move(red));
  }
  std::sort(out.rays.begin(), out.rays.end(), lex_less);
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

}  // namespace lctpoly
