#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lctpoly/convert.hpp"
#include "lctpoly/distance.hpp"
#include "lctpoly/lct.hpp"
#include "lctpoly/monomial.hpp"
#include "lctpoly/sequence.hpp"
#include "lctpoly/simplex.hpp"
#include "lctpoly/verify.hpp"

namespace {

using namespace lctpoly;

using Check = std::function<std::optional<std::string>()>;

HalfSpace row(std::initializer_list<long long> normal, long long offset) {
  RatVec n;
  for (const auto x : normal) n.emplace_back(x);
  return halfspace(std::move(n), Rational(offset));
}

HPolyhedron segment(const Rational& right) {
  return canonicalize(make_hpoly(1, {halfspace({1}, right)}, true));
}

std::vector<RatVec> vertices_of(const HPolyhedron& p) {
  const auto gens = enumerate_vertices(p);
  if (!gens) return {};
  return gens->vertices;
}

std::optional<std::string> suite_check(const std::string& suite,
                                       std::uint64_t seed, int count) {
  const VerifyReport report = run_suite(suite, seed, count);
  if (report.ok()) return std::nullopt;
  std::ostringstream os;
  os << report.failures.size() << " of " << count
     << " instances failed; first: instance "
     << report.failures.front().instance << ": "
     << report.failures.front().message;
  return os.str();
}

std::optional<std::string> tangent_pair_fixture() {
  ResolutionData d;
  d.ideals = 2;
  d.kappa = {1, 2, 0, 0};
  d.alpha = {{1, 1}, {2, 2}, {1, 0}, {0, 1}};
  d.through_x = {0, 1, 2, 3};
  const HPolyhedron p = lct_polytope_from_resolution(d).poly;
  const HPolyhedron expected = canonicalize(make_hpoly(
      2, {row({1, 0}, 1), row({0, 1}, 1), row({2, 2}, 3)}, true));
  if (!(p == expected))
    return "canonical form differs from {l1 <= 1, l2 <= 1, l1 + l2 <= 3/2}";
  const std::vector<RatVec> corners{
      {0, 0}, {0, 1}, {Rational(1) / 2, 1}, {1, 0}, {1, Rational(1) / 2}};
  if (vertices_of(p) != corners) return "unexpected vertex list";
  return std::nullopt;
}

std::optional<std::string> cusp_pair_fixture() {
  ResolutionData d;
  d.ideals = 2;
  d.kappa = {1, 2, 3, 6, 0, 2, 3, 6, 0};
  d.alpha = {{2, 2}, {4, 2}, {5, 2}, {10, 4}, {1, 0},
             {2, 4}, {2, 5}, {4, 10}, {0, 1}};
  d.through_x = {0, 1, 2, 3, 4, 5, 6, 7, 8};
  const HPolyhedron p = lct_polytope_from_resolution(d).poly;
  const HPolyhedron expected = canonicalize(make_hpoly(
      2,
      {row({1, 0}, 1), row({0, 1}, 1), row({10, 4}, 7), row({4, 10}, 7)},
      true));
  if (!(p == expected))
    return "canonical form differs from the square cut by 10l1+4l2 <= 7 and "
           "4l1+10l2 <= 7";
  if (p.halfspaces.size() != 4) return "expected exactly four facets";

  LPProblem lp;
  lp.nvars = 2;
  lp.nonneg = {false, false};
  for (const auto& h : p.halfspaces) lp.rows.push_back({h.normal, h.offset});
  const LPResult max1 = lp_maximize(lp, {1, 0});
  if (max1.status != LPStatus::Optimal || max1.value != Rational(7) / 10)
    return "max l1 over the polytope is not 7/10";
  return std::nullopt;
}

std::optional<std::string> coordinate_pair_fixture() {
  const std::vector<MonomialIdeal> axes{make_ideal(2, {{1, 0}}),
                                        make_ideal(2, {{0, 1}})};
  const HPolyhedron p = lct_polytope_monomial(axes).poly;
  const HPolyhedron square = canonicalize(
      make_hpoly(2, {row({1, 0}, 1), row({0, 1}, 1)}, true));
  if (!(p == square)) return "polytope is not the unit square";
  const std::vector<RatVec> corners{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  if (vertices_of(p) != corners) return "unexpected vertex list";
  if (!membership_oracle(axes, {1, 1})) return "(1,1) should be a member";
  if (membership_oracle(axes, {1, Rational(5) / 4}))
    return "(1,5/4) should not be a member";
  return std::nullopt;
}

std::optional<std::string> threshold_closed_forms() {
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 5; ++d) {
      const MonomialIdeal a = make_ideal(n, monomials_of_degree(n, d));
      const Rational expected = Rational(n) / d;
      if (lct_threshold(a) != expected) {
        std::ostringstream os;
        os << "lct of the degree-" << d << " power of the maximal ideal in "
           << n << " vars is not " << n << "/" << d;
        return os.str();
      }
      Rational endpoint = 0;
      for (const auto& v : vertices_of(lct_polytope_monomial({a}).poly))
        endpoint = std::max(endpoint, v[0]);
      if (endpoint != expected)
        return "segment endpoint disagrees with the threshold";
    }
  }
  for (int m = 2; m <= 6; ++m) {
    const MonomialIdeal a = make_ideal(2, {{2, 0}, {0, m}});
    if (lct_threshold(a) != Rational(1) / 2 + Rational(1) / m) {
      std::ostringstream os;
      os << "lct(x^2, y^" << m << ") is not 1/2 + 1/" << m;
      return os.str();
    }
  }
  return std::nullopt;
}

std::optional<std::string> truncation_limits() {
  const MonomialIdeal cusp = make_ideal(2, {{2, 0}, {0, 3}});
  PolytopeSequence fixture = truncation_family({cusp}, 8);
  if (fixture.term(1).poly != segment(2) ||
      fixture.term(2).poly != segment(1))
    return "early cusp truncations are wrong";
  for (int q = 3; q <= 8; ++q)
    if (fixture.term(q).poly != segment(Rational(5) / 6))
      return "cusp truncations fail to stabilize at [0, 5/6]";
  const LimitReport fixture_report = detect_stationary_limit(fixture, 5);
  if (!fixture_report.stationary || fixture_report.m0 != 3 ||
      fixture_report.candidate_limit != segment(Rational(5) / 6))
    return "cusp stationary report is wrong";

  PolytopeSequence open = truncation_family({make_ideal(2, {{2, 0}})}, 8);
  if (open.term(1).poly != segment(2))
    return "first term of the open family is wrong";
  for (int q = 2; q <= 8; ++q)
    if (open.term(q).poly != segment(Rational(1) / 2 + Rational(1) / q))
      return "open family misses the closed form [0, 1/2 + 1/q]";
  if (detect_stationary_limit(open, 5).stationary)
    return "strictly descending family misreported as stationary";

  detail::SuiteRng rng(886);
  for (int t = 0; t < 8; ++t) {
    const int vars = static_cast<int>(rng.draw(1, 3));
    const int r = static_cast<int>(rng.draw(1, 2));
    std::vector<MonomialIdeal> tuple;
    for (int i = 0; i < r; ++i) {
      std::vector<Monomial> gens;
      for (int v = 0; v < vars; ++v) {
        Monomial pure(vars, 0);
        pure[v] = rng.draw(1, 3);
        gens.push_back(std::move(pure));
      }
      const int extra = static_cast<int>(rng.draw(0, 2));
      for (int g = 0; g < extra; ++g) {
        Monomial m(vars);
        for (auto& e : m) e = rng.draw(0, 3);
        if (std::all_of(m.begin(), m.end(),
                        [](Exponent e) { return e == 0; }))
          m[0] = 1;
        gens.push_back(std::move(m));
      }
      tuple.push_back(make_ideal(vars, std::move(gens)));
    }
    Exponent max_degree = 0;
    for (const auto& a : tuple)
      for (const auto& g : a.gens) {
        Exponent total = 0;
        for (const auto e : g) total += e;
        max_degree = std::max(max_degree, total);
      }
    const int prefix = static_cast<int>(max_degree) + 6;
    const HPolyhedron base = lct_polytope_monomial(tuple).poly;
    PolytopeSequence seq = truncation_family(tuple, prefix);
    for (int q = 1; q <= prefix; ++q) {
      if (q < prefix && !subset_of(seq.term(q + 1).poly, seq.term(q).poly))
        return "chain fails to descend for " + detail::format_tuple(tuple);
      if (!subset_of(base, seq.term(q).poly))
        return "term drops below the limit for " + detail::format_tuple(tuple);
      if (q > max_degree && seq.term(q).poly != base)
        return "no stabilization past the generator degree for " +
               detail::format_tuple(tuple);
    }
    const LimitReport report = detect_stationary_limit(seq, 5);
    if (!report.stationary || report.candidate_limit != base)
      return "stationary report misses the limit for " +
             detail::format_tuple(tuple);
  }
  return std::nullopt;
}

struct Criterion {
  int number;
  std::string name;
  long long budget_ms;
  Check run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "resolution fixture, tangent line pair", 1000, tangent_pair_fixture},
      {2, "resolution fixture, pair of higher cusps", 1000,
       cusp_pair_fixture},
      {3, "monomial fixture, coordinate hyperplanes", 1000,
       coordinate_pair_fixture},
      {4, "threshold closed forms", 1000, threshold_closed_forms},
      {5, "membership oracle suite", 60000,
       [] { return suite_check("oracle", 101, 100); }},
      {6, "structure suite (prop1)", 60000,
       [] { return suite_check("prop1", 102, 50); }},
      {7, "perturbation bound suite (cor2)", 60000,
       [] { return suite_check("cor2", 103, 50); }},
      {8, "truncation limits", 60000, truncation_limits},
      {9, "prism family suite (ex11)", 60000,
       [] { return suite_check("ex11", 104, 25); }},
      {10, "geometry kernel suite (geom)", 60000,
       [] { return suite_check("geom", 105, 200); }},
  };

  int passed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::optional<std::string> error;
    try {
      error = c.run();
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    if (!error && elapsed > c.budget_ms) {
      std::ostringstream os;
      os << "time budget exceeded (" << elapsed << " ms > " << c.budget_ms
         << " ms)";
      error = os.str();
    }
    std::cout << (error ? "[FAIL]" : "[PASS]") << " criterion " << c.number
              << ": " << c.name << " (" << elapsed << " ms)";
    if (error) std::cout << " " << *error;
    std::cout << "\n";
    if (!error) ++passed;
  }
  std::cout << "acceptance: " << passed << "/" << criteria.size()
            << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
