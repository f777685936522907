#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/distance.hpp"
#include "lctpoly/lct.hpp"
#include "lctpoly/monomial.hpp"
#include "lctpoly/sequence.hpp"
#include "lctpoly/simplex.hpp"

namespace lctpoly {

struct VerifyFailure {
  int instance = 0;
  std::string message;
};

struct VerifyReport {
  std::string suite;
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<VerifyFailure> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

/** Deterministic per-instance generator; bounds are inclusive. */
class SuiteRng {
 public:
  explicit SuiteRng(std::uint64_t s) : eng_(s) {}

  long long draw(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 eng_;
};

inline MonomialIdeal random_ideal(SuiteRng& rng, int vars, int max_gens,
                                  Exponent max_exp) {
  const int count = static_cast<int>(rng.draw(1, max_gens));
  std::vector<Monomial> gens;
  for (int g = 0; g < count; ++g) {
    Monomial m(vars);
    for (auto& e : m) e = rng.draw(0, max_exp);
    if (std::all_of(m.begin(), m.end(), [](Exponent e) { return e == 0; }))
      m[rng.draw(0, vars - 1)] = rng.draw(1, max_exp);
    gens.push_back(std::move(m));
  }
  return make_ideal(vars, std::move(gens));
}

inline std::vector<MonomialIdeal> random_tuple(SuiteRng& rng) {
  const int vars = static_cast<int>(rng.draw(1, 3));
  const int r = static_cast<int>(rng.draw(1, 3));
  std::vector<MonomialIdeal> tuple;
  for (int i = 0; i < r; ++i) tuple.push_back(random_ideal(rng, vars, 4, 5));
  return tuple;
}

inline std::string format_point(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_rational(v[i]);
  }
  return out + ")";
}

inline std::string format_ideal(const MonomialIdeal& a) {
  std::string out = "[";
  for (std::size_t g = 0; g < a.gens.size(); ++g) {
    if (g) out += ",";
    out += "[";
    for (std::size_t j = 0; j < a.gens[g].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(a.gens[g][j]);
    }
    out += "]";
  }
  return out + "]";
}

inline std::string format_tuple(const std::vector<MonomialIdeal>& tuple) {
  std::string out = "vars=" + std::to_string(tuple.front().vars) + " ideals=[";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ",";
    out += format_ideal(tuple[i]);
  }
  return out + "]";
}

/** Membership oracle vs H-rep on the full quarter-integer grid of [0,n]^r. */
inline std::optional<std::string> oracle_instance(SuiteRng& rng) {
  const auto tuple = random_tuple(rng);
  const HPolyhedron h = lct_polytope_monomial(tuple).poly;
  const int n = tuple.front().vars;
  const int r = static_cast<int>(tuple.size());
  const int top = 4 * n;
  std::vector<int> grid(r, 0);
  while (true) {
    RatVec lambda(r);
    for (int i = 0; i < r; ++i) lambda[i] = Rational(grid[i]) / 4;
    const bool via_h = h.contains(lambda);
    const bool via_lp = membership_oracle(tuple, lambda);
    if (via_h != via_lp)
      return format_tuple(tuple) + " lambda=" + format_point(lambda) +
             " h-rep says " + (via_h ? "inside" : "outside") +
             ", oracle says " + (via_lp ? "inside" : "outside");
    int i = 0;
    for (; i < r; ++i) {
      if (++grid[i] <= top) break;
      grid[i] = 0;
    }
    if (i == r) break;
  }
  return std::nullopt;
}

/** Origin membership, down-closedness, simplex/box containment bounds,
 *  power rescaling coherence, monotonicity under dropping generators. */
inline std::optional<std::string> prop1_instance(SuiteRng& rng) {
  const auto tuple = random_tuple(rng);
  const HPolyhedron h = lct_polytope_monomial(tuple).poly;
  const int r = static_cast<int>(tuple.size());
  const std::string tag = format_tuple(tuple);

  const RatVec origin(r, Rational(0));
  if (!h.contains(origin) || !membership_oracle(tuple, origin))
    return tag + ": origin not a member";
  if (!is_down_closed(h)) return tag + ": polytope is not down-closed";

  const ContainmentBounds cb = containment_bounds(tuple);
  if (!cb.inner_contained) return tag + ": threshold simplex not contained";
  if (!cb.outer_contains) return tag + ": threshold box does not contain";

  std::vector<int> powers(r);
  std::vector<MonomialIdeal> powered;
  for (int i = 0; i < r; ++i) {
    powers[i] = static_cast<int>(rng.draw(1, 3));
    powered.push_back(power(tuple[i], powers[i]));
  }
  if (!(lct_polytope_monomial(powered).poly == power_rescale(h, powers)))
    return tag + ": power rescaling mismatch";

  std::vector<MonomialIdeal> sub;
  for (const auto& a : tuple) {
    std::vector<Monomial> kept;
    for (const auto& g : a.gens)
      if (rng.draw(0, 1)) kept.push_back(g);
    if (kept.empty())
      kept.push_back(a.gens[rng.draw(0, a.gens.size() - 1)]);
    sub.push_back(make_ideal(a.vars, std::move(kept)));
  }
  if (!subset_of(lct_polytope_monomial(sub).poly, h))
    return tag + ": sub-ideal tuple " + format_tuple(sub) +
           " escapes the polytope";
  return std::nullopt;
}

/** Threshold bounds 1/ord <= lct <= n/ord plus divergence-probe sanity. */
inline std::optional<std::string> order_instance(SuiteRng& rng) {
  const int vars = static_cast<int>(rng.draw(1, 3));
  const MonomialIdeal a = random_ideal(rng, vars, 4, 5);
  const std::string tag = "vars=" + std::to_string(vars) + " " +
                          format_ideal(a);

  const OrderBounds ob = order_bounds_check(a);
  if (!ob.ok)
    return tag + ": lct " + format_rational(ob.threshold) +
           " escapes [" + format_rational(ob.lower) + "," +
           format_rational(ob.upper) + "]";

  const std::vector<MonomialIdeal> constant{a, a, a};
  const std::vector<MonomialIdeal> powered{a, power(a, 2), power(a, 3)};
  const OrderProbeReport probe = order_divergence_probe({constant, powered});
  if (probe.coordinates[0].flagged)
    return tag + ": constant sequence flagged as divergent";
  if (!probe.coordinates[1].flagged)
    return tag + ": power sequence not flagged as divergent";
  const Exponent o = ord(a);
  if (probe.coordinates[1].ords != std::vector<Exponent>{o, 2 * o, 3 * o})
    return tag + ": ord is not additive under powers";
  return std::nullopt;
}

/** Distance bound for pairs agreeing modulo m^N, in both orders. */
inline std::optional<std::string> cor2_instance(SuiteRng& rng) {
  const auto a = random_tuple(rng);
  const int n = a.front().vars;
  const int n_trunc = static_cast<int>(rng.draw(2, 6));
  auto b = a;
  for (auto& ideal : b) {
    std::vector<Monomial> gens = ideal.gens;
    const int extra = static_cast<int>(rng.draw(1, 2));
    for (int t = 0; t < extra; ++t) {
      Monomial m(n);
      Exponent total = 0;
      for (auto& e : m) {
        e = rng.draw(0, 5);
        total += e;
      }
      if (total < n_trunc) m[rng.draw(0, n - 1)] += n_trunc - total;
      gens.push_back(std::move(m));
    }
    ideal = make_ideal(n, std::move(gens));
  }
  const std::string tag =
      format_tuple(a) + " vs " + format_tuple(b) + " N=" +
      std::to_string(n_trunc);
  const Cor2Report forward = cor2_check(a, b, n_trunc);
  if (!forward.ok)
    return tag + ": sq distance " + format_rational(forward.sq_dist) +
           " exceeds bound " + format_rational(forward.bound);
  const Cor2Report backward = cor2_check(b, a, n_trunc);
  if (!backward.ok) return tag + ": bound fails with arguments swapped";
  return std::nullopt;
}

/** Prism coherence, non-stationarity, and the exact 1/d^2 profile of the
 *  one-extra-variable descending families. */
inline std::optional<std::string> ex11_instance(SuiteRng& rng) {
  const int vars = static_cast<int>(rng.draw(1, 2));
  const int r = static_cast<int>(rng.draw(1, 2));
  std::vector<MonomialIdeal> tuple;
  for (int i = 0; i < r; ++i) tuple.push_back(random_ideal(rng, vars, 3, 3));
  const int axis = static_cast<int>(rng.draw(0, r - 1));
  const std::string tag = format_tuple(tuple) + " axis=" +
                          std::to_string(axis);

  const int prefix = 6;
  const PolytopeSequence seq = ex11_family(tuple, axis, prefix);
  const HPolyhedron base = lct_polytope_monomial(tuple).poly;
  for (int d = 1; d <= prefix; ++d)
    if (!(seq.term(d).poly == prism_extend(base, axis, d)))
      return tag + ": term " + std::to_string(d) + " is not the 1/" +
             std::to_string(d) + " prism of the base";

  const LimitReport report = detect_stationary_limit(seq, 5);
  if (report.stationary) return tag + ": descending family marked stationary";
  if (!(report.candidate_limit == base))
    return tag + ": candidate limit is not the base polytope";
  for (int d = 1; d <= prefix; ++d)
    if (report.sq_distance_profile[d - 1] != Rational(1) / (d * d))
      return tag + ": sq distance at d=" + std::to_string(d) +
             " is " + format_rational(report.sq_distance_profile[d - 1]) +
             ", expected 1/" + std::to_string(d * d);

  if (limit_membership_bound_check(seq, base))
    return tag + ": finite prefix intersection reported inside the base";
  if (!limit_membership_bound_check(seq, tail_intersection(seq, 1)))
    return tag + ": prefix intersection not inside itself";
  return std::nullopt;
}

/** Geometry kernel: canonical idempotence, H/V round trips, LP vs vertex
 *  maxima, support additivity, Hausdorff metric axioms. */
inline std::optional<std::string> geom_instance(SuiteRng& rng) {
  const int dim = static_cast<int>(rng.draw(1, 3));

  auto random_hpoly = [&]() {
    std::vector<HalfSpace> rows;
    for (int i = 0; i < dim; ++i) {
      RatVec normal(dim, Rational(0));
      normal[i] = 1;
      rows.push_back(halfspace(normal, Rational(rng.draw(1, 3))));
    }
    const int extra = static_cast<int>(rng.draw(0, 2));
    for (int k = 0; k < extra; ++k) {
      RatVec normal(dim);
      for (auto& c : normal) c = Rational(rng.draw(-3, 3));
      if (is_zero_vec(normal)) normal[0] = 1;
      rows.push_back(halfspace(normal, Rational(rng.draw(-2, 6))));
    }
    return make_hpoly(dim, std::move(rows), true);
  };

  const HPolyhedron p = random_hpoly();
  const HPolyhedron c = canonicalize(p);
  if (!(canonicalize(c) == c)) return "canonicalize is not idempotent";

  const auto gens = enumerate_vertices(c);
  if (!gens) {
    if (!is_empty(p)) return "vertex enumeration lost a nonempty polytope";
    if (!(c == canonical_empty(dim)))
      return "empty polytope not in the canonical empty form";
    return std::nullopt;
  }
  if (!gens->rays.empty()) return "box-capped polytope produced rays";
  for (const auto& v : gens->vertices)
    if (!c.contains(v)) return "enumerated vertex escapes its halfspaces";
  if (!(hull(*gens) == c)) return "hull/vertex round trip drifted";

  RatVec objective(dim);
  for (auto& x : objective) x = Rational(rng.draw(-3, 3));
  LPProblem lp;
  lp.nvars = dim;
  lp.nonneg.assign(dim, false);
  for (const auto& h : c.explicit_halfspaces()) {
    LPRow row;
    row.coeffs = h.normal;
    row.rhs = h.offset;
    lp.rows.push_back(std::move(row));
  }
  const LPResult lpr = lp_maximize(lp, objective);
  if (lpr.status != LPStatus::Optimal)
    return "LP over a nonempty polytope did not report an optimum";
  Rational vertex_best = dot(objective, gens->vertices.front());
  for (const auto& v : gens->vertices)
    vertex_best = std::max(vertex_best, dot(objective, v));
  if (lpr.value != vertex_best)
    return "LP optimum " + format_rational(lpr.value) +
           " disagrees with vertex maximum " + format_rational(vertex_best);

  auto random_points = [&]() {
    VPolyhedron out;
    out.dim = dim;
    const int count = static_cast<int>(rng.draw(1, 4));
    for (int k = 0; k < count; ++k) {
      RatVec v(dim);
      for (auto& x : v) x = Rational(rng.draw(0, 8)) / 2;
      out.vertices.push_back(std::move(v));
    }
    return out;
  };
  const VPolyhedron a = random_points();
  const VPolyhedron b = random_points();
  const VPolyhedron sum = minkowski_sum(a, b);
  RatVec w(dim);
  for (auto& x : w) x = Rational(rng.draw(0, 3));
  if (support_min(sum, w) != support_min(a, w) + support_min(b, w))
    return "support function not additive under Minkowski sum";

  const HPolyhedron ha = hull(a);
  const HPolyhedron hb = hull(b);
  const HPolyhedron hc = hull(random_points());
  const Rational dab = hausdorff_sq(ha, hb);
  if (hausdorff_sq(ha, ha) != 0) return "nonzero self distance";
  if (dab != hausdorff_sq(hb, ha)) return "asymmetric Hausdorff distance";
  if ((dab == 0) != (ha == hb))
    return "distance zero does not match canonical equality";
  if (!triangle_sq_ok(hausdorff_sq(ha, hc), dab, hausdorff_sq(hb, hc)))
    return "triangle inequality violated";

  RatVec probe(dim);
  for (auto& x : probe) x = Rational(rng.draw(-2, 5));
  const Rational d2 = point_polytope_sqdist(probe, ha);
  if ((d2 == 0) != ha.contains(probe))
    return "point distance zero does not match membership";
  for (const auto& v : a.vertices)
    if (d2 > sq_distance(probe, v))
      return "point distance exceeds a vertex distance";
  return std::nullopt;
}

inline int verify_thread_cap() {
  int cap = static_cast<int>(std::thread::hardware_concurrency());
  if (cap < 1) cap = 1;
  if (const char* env = std::getenv("LCTPOLY_THREADS")) {
    try {
      cap = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return cap;
}

}  // namespace detail

/**
 * Runs one named randomized property suite. Instance i draws everything
 * from a generator seeded with seed^i, so reports are reproducible and
 * independent of the fan-out width; LCTPOLY_THREADS caps the fan-out.
 * Suites: prop1, order, cor2, ex11, oracle, geom.
 */
inline VerifyReport run_suite(const std::string& suite, std::uint64_t seed,
                              int count) {
  using InstanceFn = std::optional<std::string> (*)(detail::SuiteRng&);
  InstanceFn fn = nullptr;
  if (suite == "prop1") fn = detail::prop1_instance;
  else if (suite == "order") fn = detail::order_instance;
  else if (suite == "cor2") fn = detail::cor2_instance;
  else if (suite == "ex11") fn = detail::ex11_instance;
  else if (suite == "oracle") fn = detail::oracle_instance;
  else if (suite == "geom") fn = detail::geom_instance;
  else throw std::invalid_argument("unknown verify suite: " + suite);
  if (count < 1) throw std::invalid_argument("verify count must be >= 1");

  VerifyReport report{suite, seed, count, {}};
  std::vector<std::optional<std::string>> slots(count);
  const int threads = std::min(detail::verify_thread_cap(), count);
  const auto work = [&](int t) {
    for (int i = t; i < count; i += threads) {
      detail::SuiteRng rng(seed ^ static_cast<std::uint64_t>(i));
      try {
        slots[i] = fn(rng);
      } catch (const std::exception& e) {
        slots[i] = std::string("exception: ") + e.what();
      }
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::future<void>> workers;
    for (int t = 1; t < threads; ++t)
      workers.push_back(std::async(std::launch::async, work, t));
    work(0);
    for (auto& f : workers) f.get();
  }
  for (int i = 0; i < count; ++i)
    if (slots[i]) report.failures.push_back({i, *slots[i]});
  return report;
}

}  // namespace lctpoly
