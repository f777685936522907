#include <cstdint>
#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "lctpoly/convert.hpp"
#include "lctpoly/distance.hpp"
#include "lctpoly/json_io.hpp"
#include "lctpoly/lct.hpp"
#include "lctpoly/monomial.hpp"
#include "lctpoly/sequence.hpp"
#include "lctpoly/verify.hpp"

namespace {

struct CommonFlags {
  std::string output = "json";
  bool approx = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--output", flags.output, "Output format (json or text)")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--approx", flags.approx,
                "Append clearly marked decimal approximations");
}

/** Loads any input variant and reduces it to a canonical polytope. */
std::pair<lctpoly::HPolyhedron, std::string> load_polytope(
    const std::string& path, bool local) {
  const lctpoly::InputFile in = lctpoly::load_input(path);
  if (in.ideals)
    return {lctpoly::lct_polytope_monomial(*in.ideals).poly, "monomial"};
  if (in.resolution)
    return {lctpoly::lct_polytope_from_resolution(*in.resolution, local).poly,
            "resolution"};
  return {lctpoly::canonicalize(*in.polytope), "polytope"};
}

std::string text_vector(const lctpoly::RatVec& v, bool approx) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += lctpoly::format_rational(v[i]);
  }
  out += ")";
  if (approx) {
    std::ostringstream os;
    os << " ~= (";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) os << ",";
      os << v[i].convert_to<double>();
    }
    os << ")";
    out += os.str();
  }
  return out;
}

void print_polytope_text(std::ostream& os, const lctpoly::HPolyhedron& poly,
                         const std::string& provenance, bool approx) {
  os << "polytope dim=" << poly.dim << " provenance=" << provenance << "\n";
  for (const auto& h : poly.halfspaces) {
    os << "ineq:";
    for (const auto& c : h.normal) os << " " << lctpoly::format_rational(c);
    os << " <= " << lctpoly::format_rational(h.offset) << "\n";
  }
  if (const auto gens = lctpoly::enumerate_vertices(poly)) {
    for (const auto& v : gens->vertices)
      os << "vertex: " << text_vector(v, approx) << "\n";
    for (const auto& r : gens->rays)
      os << "ray: " << text_vector(r, false) << "\n";
  } else {
    os << "empty\n";
  }
}

int run_compute(const std::string& path, bool local,
                const CommonFlags& flags) {
  const auto [poly, provenance] = load_polytope(path, local);
  if (flags.output == "json")
    std::cout << lctpoly::polytope_json(poly, provenance, flags.approx).dump(2)
              << "\n";
  else
    print_polytope_text(std::cout, poly, provenance, flags.approx);
  return 0;
}

int run_lct(const std::string& path, int coordinate, const CommonFlags& flags) {
  const lctpoly::InputFile in = lctpoly::load_input(path);
  if (!in.ideals)
    throw std::invalid_argument("lct requires an ideal input file");
  const auto& ideals = *in.ideals;
  std::size_t index = 0;
  if (coordinate != 0) {
    if (coordinate < 1 || coordinate > static_cast<int>(ideals.size()))
      throw std::invalid_argument("--coordinate out of range");
    index = static_cast<std::size_t>(coordinate - 1);
  } else if (ideals.size() > 1) {
    throw std::invalid_argument("multi-ideal input requires --coordinate");
  }
  const lctpoly::Rational value = lctpoly::lct_threshold(ideals[index]);
  if (flags.output == "json") {
    std::cout << lctpoly::threshold_json(value, flags.approx).dump(2) << "\n";
  } else {
    std::cout << lctpoly::format_rational(value);
    if (flags.approx) std::cout << " ~= " << value.convert_to<double>();
    std::cout << "\n";
  }
  return 0;
}

int run_distance(const std::string& path_a, const std::string& path_b,
                 const CommonFlags& flags) {
  const auto a = load_polytope(path_a, true);
  const auto b = load_polytope(path_b, true);
  const lctpoly::Rational sq = lctpoly::hausdorff_sq(a.first, b.first);
  if (flags.output == "json") {
    std::cout << lctpoly::distance_json(sq, flags.approx).dump(2) << "\n";
  } else {
    std::cout << lctpoly::format_rational(sq);
    if (flags.approx) std::cout << " ~= " << sq.convert_to<double>();
    std::cout << "\n";
  }
  return 0;
}

int run_sequence(const std::string& path, const std::string& mode, int prefix,
                 int window, int axis, const CommonFlags& flags) {
  const lctpoly::InputFile in = lctpoly::load_input(path);
  if (!in.ideals)
    throw std::invalid_argument("sequence requires an ideal input file");
  std::optional<lctpoly::PolytopeSequence> seq;
  if (mode == "truncate") {
    seq.emplace(lctpoly::truncation_family(*in.ideals, prefix));
  } else {
    if (axis < 1 || axis > static_cast<int>(in.ideals->size()))
      throw std::invalid_argument("--axis out of range");
    seq.emplace(lctpoly::ex11_family(*in.ideals, axis - 1, prefix));
  }
  const lctpoly::LimitReport report =
      lctpoly::detect_stationary_limit(*seq, window);
  if (flags.output == "json") {
    std::cout << lctpoly::limit_report_json(*seq, report, flags.approx).dump(2)
              << "\n";
    return 0;
  }
  std::cout << "prefix=" << seq->prefix_length() << " stationary="
            << (report.stationary ? "yes" : "no");
  if (report.m0) std::cout << " m0=" << *report.m0;
  std::cout << "\n";
  for (int m = 1; m <= seq->prefix_length(); ++m) {
    const auto& p = seq->term(m).poly;
    std::cout << "term " << m << ": " << p.halfspaces.size()
              << " inequalities, vertices:";
    if (const auto gens = lctpoly::enumerate_vertices(p))
      for (const auto& v : gens->vertices)
        std::cout << " " << text_vector(v, false);
    std::cout << "\n";
  }
  std::cout << "sq-distance profile:";
  for (const auto& d : report.sq_distance_profile) {
    std::cout << " " << lctpoly::format_rational(d);
    if (flags.approx) std::cout << "(~=" << d.convert_to<double>() << ")";
  }
  std::cout << "\n";
  print_polytope_text(std::cout, report.candidate_limit, "limit-candidate",
                      flags.approx);
  return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int count,
               const CommonFlags& flags) {
  const lctpoly::VerifyReport report = lctpoly::run_suite(suite, seed, count);
  if (flags.output == "json") {
    std::cout << lctpoly::verify_report_json(report).dump(2) << "\n";
  } else {
    std::cout << "suite=" << report.suite << " seed=" << report.seed
              << " count=" << report.count << " "
              << (report.ok() ? "ok" : "FAIL") << "\n";
    for (const auto& f : report.failures)
      std::cout << "instance " << f.instance << ": " << f.message << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for LCT-polytopes of monomial ideal tuples"};
  app.require_subcommand(1);

  std::string compute_input;
  bool global_locus = false;
  CommonFlags compute_flags;
  CLI::App* compute = app.add_subcommand(
      "compute", "Compute the canonical LCT-polytope of an input file");
  compute->add_option("input", compute_input, "Input JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  compute->add_flag(
      "--global,!--local", global_locus,
      "Use all resolution divisors instead of only those through the point");
  add_common(compute, compute_flags);

  std::string lct_input;
  int coordinate = 0;
  CommonFlags lct_flags;
  CLI::App* lct = app.add_subcommand(
      "lct", "Print the log canonical threshold of one ideal");
  lct->add_option("input", lct_input, "Input JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  lct->add_option("--coordinate", coordinate,
                  "1-based ideal index for multi-ideal inputs");
  add_common(lct, lct_flags);

  std::string dist_a, dist_b;
  CommonFlags dist_flags;
  CLI::App* distance = app.add_subcommand(
      "distance", "Squared Hausdorff distance between two polytopes");
  distance->add_option("inputA", dist_a, "First input JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  distance->add_option("inputB", dist_b, "Second input JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  add_common(distance, dist_flags);

  std::string seq_input, seq_mode;
  int seq_prefix = 8, seq_window = 5, seq_axis = 1;
  CommonFlags seq_flags;
  CLI::App* sequence = app.add_subcommand(
      "sequence", "Materialize a polytope family and report its limit");
  sequence->add_option("input", seq_input, "Input JSON file (ideal variant)")
      ->required()
      ->check(CLI::ExistingFile);
  sequence->add_option("--mode", seq_mode, "Family kind")
      ->required()
      ->check(CLI::IsMember({"truncate", "ex11"}));
  sequence->add_option("--prefix", seq_prefix, "Number of terms (default 8)");
  sequence->add_option("--window", seq_window,
                       "Stabilization window (default 5)");
  sequence->add_option("--axis", seq_axis,
                       "1-based coordinate receiving y^d in ex11 mode");
  add_common(sequence, seq_flags);

  std::string suite;
  std::uint64_t seed = 0;
  int count = 50;
  CommonFlags verify_flags;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a randomized property suite with deterministic seeding");
  verify->add_option("--suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(
          {"prop1", "order", "cor2", "ex11", "oracle", "geom"}));
  verify->add_option("--seed", seed, "Base seed, echoed in the report");
  verify->add_option("--count", count, "Number of instances (default 50)");
  add_common(verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (compute->parsed())
      return run_compute(compute_input, !global_locus, compute_flags);
    if (lct->parsed()) return run_lct(lct_input, coordinate, lct_flags);
    if (distance->parsed()) return run_distance(dist_a, dist_b, dist_flags);
    if (sequence->parsed())
      return run_sequence(seq_input, seq_mode, seq_prefix, seq_window,
                          seq_axis, seq_flags);
    if (verify->parsed()) return run_verify(suite, seed, count, verify_flags);
  } catch (const lctpoly::improper_ideal_error& e) {
    std::cerr << "error: improper ideal: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
