#pragma once

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lctpoly/convert.hpp"
#include "lctpoly/lct.hpp"
#include "lctpoly/monomial.hpp"
#include "lctpoly/sequence.hpp"
#include "lctpoly/verify.hpp"

namespace lctpoly {

using json = nlohmann::ordered_json;

/** Parsed input file: exactly one of the three payloads is populated. */
struct InputFile {
  std::optional<int> vars;
  std::optional<std::vector<MonomialIdeal>> ideals;
  std::optional<ResolutionData> resolution;
  std::optional<HPolyhedron> polytope;
};

namespace detail {

inline void check_keys(const json& j, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!j.is_object())
    throw std::invalid_argument(where + " must be a JSON object");
  for (const auto& item : j.items())
    if (!allowed.count(item.key()))
      throw std::invalid_argument("unknown field \"" + item.key() + "\" in " +
                                  where);
}

inline const json& require_key(const json& j, const std::string& key,
                               const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end())
    throw std::invalid_argument(where + " is missing field \"" + key + "\"");
  return *it;
}

inline Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + ": " + e.what());
    }
  }
  throw std::invalid_argument(where +
                              " must be an integer or a \"p/q\" string");
}

inline long long int_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw std::invalid_argument(where + " must be an integer");
  return j.get<long long>();
}

/** Integers inside the int64 window stay JSON numbers; anything wider or
 *  fractional becomes a "p/q" string. */
inline json rational_json(const Rational& q) {
  if (is_integral(q)) {
    const Integer num = numerator_of(q);
    if (num >= std::numeric_limits<long long>::min() &&
        num <= std::numeric_limits<long long>::max())
      return json(num.convert_to<long long>());
  }
  return json(format_rational(q));
}

inline json vector_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

inline double approx_of(const Rational& q) { return q.convert_to<double>(); }

inline json approx_vector_json(const RatVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(approx_of(x));
  return out;
}

inline std::vector<MonomialIdeal> parse_ideals(const json& j, int vars) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("\"ideals\" must be a nonempty array");
  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "ideals[" + std::to_string(i) + "]";
    check_keys(j[i], {"monomials"}, where);
    const json& mons = require_key(j[i], "monomials", where);
    if (!mons.is_array())
      throw std::invalid_argument(where + ".monomials must be an array");
    std::vector<Monomial> gens;
    for (const auto& mj : mons) {
      if (!mj.is_array())
        throw std::invalid_argument(where +
                                    ": each monomial is an exponent array");
      Monomial m;
      for (const auto& e : mj)
        m.push_back(int_from_json(e, where + ": exponent"));
      gens.push_back(std::move(m));
    }
    out.push_back(make_ideal(vars, std::move(gens)));
  }
  return out;
}

inline ResolutionData parse_resolution(const json& j) {
  check_keys(j, {"ideals", "kappa", "alpha", "through_x"}, "resolution");
  ResolutionData data;
  data.ideals = static_cast<int>(
      int_from_json(require_key(j, "ideals", "resolution"), "ideals"));
  const json& kappa = require_key(j, "kappa", "resolution");
  if (!kappa.is_array())
    throw std::invalid_argument("resolution.kappa must be an array");
  for (const auto& k : kappa)
    data.kappa.push_back(rational_from_json(k, "resolution.kappa"));
  const json& alpha = require_key(j, "alpha", "resolution");
  if (!alpha.is_array())
    throw std::invalid_argument("resolution.alpha must be an array");
  for (const auto& row : alpha) {
    if (!row.is_array())
      throw std::invalid_argument(
          "resolution.alpha rows are per-divisor arrays");
    std::vector<Exponent> orders;
    for (const auto& a : row)
      orders.push_back(int_from_json(a, "resolution.alpha"));
    data.alpha.push_back(std::move(orders));
  }
  const json& through = require_key(j, "through_x", "resolution");
  if (!through.is_array())
    throw std::invalid_argument("resolution.through_x must be an array");
  for (const auto& t : through)
    data.through_x.push_back(
        static_cast<int>(int_from_json(t, "resolution.through_x")));
  return data;
}

inline HPolyhedron parse_polytope(const json& j) {
  check_keys(j, {"dim", "inequalities", "vertices", "rays", "provenance"},
             "polytope");
  const int dim =
      static_cast<int>(int_from_json(require_key(j, "dim", "polytope"), "dim"));
  const json& ineqs = require_key(j, "inequalities", "polytope");
  if (!ineqs.is_array())
    throw std::invalid_argument("polytope.inequalities must be an array");
  std::vector<HalfSpace> rows;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    const std::string where = "inequalities[" + std::to_string(i) + "]";
    check_keys(ineqs[i], {"normal", "offset", "offset_approx"}, where);
    const json& normal = require_key(ineqs[i], "normal", where);
    if (!normal.is_array())
      throw std::invalid_argument(where + ".normal must be an array");
    HalfSpace h;
    for (const auto& c : normal)
      h.normal.push_back(rational_from_json(c, where + ".normal"));
    h.offset = rational_from_json(require_key(ineqs[i], "offset", where),
                                  where + ".offset");
    rows.push_back(std::move(h));
  }
  // vertices/rays/provenance on input are round-trip passengers; the
  // H-description alone defines the set.
  return make_hpoly(dim, std::move(rows));
}

}  // namespace detail

/** Strict parse of a versioned input object holding exactly one payload. */
inline InputFile parse_input(const json& j) {
  detail::check_keys(j, {"format", "vars", "ideals", "resolution", "polytope"},
                     "input");
  if (detail::int_from_json(detail::require_key(j, "format", "input"),
                            "format") != 1)
    throw std::invalid_argument("unsupported input format version");
  InputFile in;
  if (j.contains("vars"))
    in.vars = static_cast<int>(detail::int_from_json(j["vars"], "vars"));
  const int payloads = static_cast<int>(j.contains("ideals")) +
                       static_cast<int>(j.contains("resolution")) +
                       static_cast<int>(j.contains("polytope"));
  if (payloads != 1)
    throw std::invalid_argument(
        "input must carry exactly one of ideals, resolution, polytope");
  if (j.contains("ideals")) {
    if (!in.vars)
      throw std::invalid_argument("ideal input requires \"vars\"");
    in.ideals = detail::parse_ideals(j["ideals"], *in.vars);
  } else if (j.contains("resolution")) {
    in.resolution = detail::parse_resolution(j["resolution"]);
  } else {
    in.polytope = detail::parse_polytope(j["polytope"]);
  }
  return in;
}

inline InputFile load_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read input file: " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return parse_input(j);
}

/** Canonical polytope with enumerated vertices as a versioned object. */
inline json polytope_json(const HPolyhedron& poly,
                          const std::string& provenance, bool approx = false) {
  json body;
  body["dim"] = poly.dim;
  json ineqs = json::array();
  for (const auto& h : poly.halfspaces) {
    json row;
    row["normal"] = detail::vector_json(h.normal);
    row["offset"] = detail::rational_json(h.offset);
    if (approx) row["offset_approx"] = detail::approx_of(h.offset);
    ineqs.push_back(std::move(row));
  }
  body["inequalities"] = std::move(ineqs);
  json vertices = json::array();
  json rays = json::array();
  if (const auto gens = enumerate_vertices(poly)) {
    for (const auto& v : gens->vertices)
      vertices.push_back(detail::vector_json(v));
    for (const auto& r : gens->rays) rays.push_back(detail::vector_json(r));
  }
  body["vertices"] = std::move(vertices);
  if (!rays.empty()) body["rays"] = std::move(rays);
  if (approx) {
    json av = json::array();
    if (const auto gens = enumerate_vertices(poly))
      for (const auto& v : gens->vertices)
        av.push_back(detail::approx_vector_json(v));
    body["vertices_approx"] = std::move(av);
  }
  body["provenance"] = provenance;
  json out;
  out["format"] = 1;
  out["polytope"] = std::move(body);
  return out;
}

inline std::string provenance_of(LctSource source) {
  switch (source) {
    case LctSource::Monomial: return "monomial";
    case LctSource::Principal: return "principal";
    case LctSource::Resolution: return "resolution";
  }
  return "unknown";
}

inline json threshold_json(const Rational& value, bool approx = false) {
  json out;
  out["format"] = 1;
  out["lct"] = detail::rational_json(value);
  if (approx) out["lct_approx"] = detail::approx_of(value);
  return out;
}

inline json distance_json(const Rational& sq, bool approx = false) {
  json out;
  out["format"] = 1;
  out["sq_hausdorff"] = detail::rational_json(sq);
  if (approx) out["sq_hausdorff_approx"] = detail::approx_of(sq);
  return out;
}

inline json limit_report_json(const PolytopeSequence& seq,
                              const LimitReport& report, bool approx = false) {
  json body;
  body["prefix_length"] = seq.prefix_length();
  json terms = json::array();
  for (int m = 1; m <= seq.prefix_length(); ++m) {
    const HPolyhedron& p = seq.term(m).poly;
    json t;
    t["m"] = m;
    t["num_inequalities"] = p.halfspaces.size();
    json vertices = json::array();
    if (const auto gens = enumerate_vertices(p))
      for (const auto& v : gens->vertices)
        vertices.push_back(detail::vector_json(v));
    t["vertices"] = std::move(vertices);
    terms.push_back(std::move(t));
  }
  body["terms"] = std::move(terms);
  body["stationary"] = report.stationary;
  if (report.m0) body["m0"] = *report.m0;
  else body["m0"] = nullptr;
  json profile = json::array();
  for (const auto& d : report.sq_distance_profile)
    profile.push_back(detail::rational_json(d));
  body["sq_distance_profile"] = std::move(profile);
  if (approx) {
    json ap = json::array();
    for (const auto& d : report.sq_distance_profile)
      ap.push_back(detail::approx_of(d));
    body["sq_distance_profile_approx"] = std::move(ap);
  }
  body["candidate"] =
      polytope_json(report.candidate_limit, "limit-candidate", approx)
          .at("polytope");
  json out;
  out["format"] = 1;
  out["limit_report"] = std::move(body);
  return out;
}

inline json verify_report_json(const VerifyReport& report) {
  json body;
  body["suite"] = report.suite;
  body["seed"] = report.seed;
  body["count"] = report.count;
  body["ok"] = report.ok();
  json failures = json::array();
  for (const auto& f : report.failures) {
    json row;
    row["instance"] = f.instance;
    row["message"] = f.message;
    failures.push_back(std::move(row));
  }
  body["failures"] = std::move(failures);
  json out;
  out["format"] = 1;
  out["verify"] = std::move(body);
  return out;
}

}  // namespace lctpoly
