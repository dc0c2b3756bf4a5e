/* arithwidth: exact lattice/arithmetic width toolkit for rational polytopes.
 * Exit codes: 0 ok, 1 malformed input or invocation, 2 enumeration cap
 * exceeded, 3 precondition violation (zero direction, bad range, ...). */

#include "aw/arithmetic_range.hpp"
#include "aw/dilation.hpp"
#include "aw/json_io.hpp"
#include "aw/lattice_points.hpp"
#include "aw/polytope.hpp"
#include "aw/semigroup.hpp"
#include "aw/width_min.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

aw::RationalPolytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw aw::FormatError("cannot read '" + path + "'");
  aw::Json doc;
  try {
    doc = aw::Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw aw::FormatError(std::string("bad JSON: ") + e.what());
  }
  return aw::polytope_from_json(doc);
}

// unparseable flag text is malformed input (exit 1), not a precondition
aw::Int flag_int(const std::string& text, const char* flag) {
  try {
    return aw::int_from_string(text);
  } catch (const std::invalid_argument& e) {
    throw aw::FormatError(std::string(flag) + ": " + e.what());
  }
}

aw::EnumerationLimits limits_from(const std::string& cap_text) {
  aw::EnumerationLimits limits;
  if (!cap_text.empty()) {
    const aw::Int cap = flag_int(cap_text, "--cap");
    if (cap < 1) throw std::invalid_argument("--cap must be positive");
    limits.max_candidates = cap;
  }
  return limits;
}

void emit(const aw::Json& doc) { std::cout << doc.dump(2) << "\n"; }

struct SeriesArgs {
  std::string file;
  std::string what;
  std::string dir_text;
  std::string cap_text;
  std::string format = "json";
  long from = 1;
  long to = 1;
};

void run_series(const SeriesArgs& args) {
  const aw::RationalPolytope p = load_polytope(args.file);
  const aw::EnumerationLimits limits = limits_from(args.cap_text);
  const bool needs_dir = args.what == "aw" || args.what == "gaps" || args.what == "igap";
  if (needs_dir && args.dir_text.empty())
    throw aw::FormatError("--what " + args.what + " requires --dir");
  if (!needs_dir && !args.dir_text.empty())
    throw aw::FormatError("--what " + args.what + " does not take --dir");
  const bool csv = args.format == "csv";

  if (args.what == "aw") {
    const aw::IntVec c = aw::parse_direction(args.dir_text, p.dim());
    const aw::DilationSeries s = aw::aw_series(p, c, args.from, args.to, limits);
    if (csv) {
      std::cout << "n,value\n";
      for (const aw::SeriesSample& sm : s.samples)
        std::cout << sm.n << "," << sm.value.get_str() << "\n";
      return;
    }
    aw::Json doc = aw::series_samples_to_json(s);
    try {
      doc["model"] = aw::quasilinear_to_json(aw::fit_quasilinear(s));
    } catch (const std::invalid_argument&) {
      doc["model"] = nullptr;  // range too short for the fit
    }
    try {
      doc["recurrence"] =
          aw::recurrence_to_json(aw::verify_recurrence(p, c, args.from, args.to, limits));
    } catch (const std::invalid_argument&) {
      doc["recurrence"] = nullptr;  // range shorter than one period
    }
    emit(doc);
  } else if (args.what == "awmin") {
    const aw::AwMinSeries a = aw::aw_min_series(p, args.from, args.to, limits);
    if (csv) {
      std::cout << "n,value\n";
      for (const aw::SeriesSample& sm : a.series.samples)
        std::cout << sm.n << "," << sm.value.get_str() << "\n";
      return;
    }
    emit(aw::aw_min_to_json(a));
  } else if (args.what == "gaps") {
    const aw::IntVec c = aw::parse_direction(args.dir_text, p.dim());
    const aw::GapCountSeries g = aw::gap_count_series(p, c, args.from, args.to, limits);
    if (csv) {
      std::cout << "n,count\n";
      for (const aw::GapCountSample& sm : g.samples) {
        std::cout << sm.n << ",";
        if (sm.defined) std::cout << sm.count.get_str();
        std::cout << "\n";
      }
      return;
    }
    emit(aw::gap_series_to_json(g));
  } else if (args.what == "igap") {
    const aw::IntVec c = aw::parse_direction(args.dir_text, p.dim());
    const aw::GapPeriodicityReport g =
        aw::integrality_gap_periodicity(p, c, args.from, args.to, limits);
    if (csv) {
      std::cout << "n,upper,lower\n";
      for (const aw::GapPeriodicitySample& sm : g.samples) {
        std::cout << sm.n << ",";
        if (sm.defined)
          std::cout << aw::rat_to_string(sm.upper) << "," << aw::rat_to_string(sm.lower);
        else
          std::cout << ",";
        std::cout << "\n";
      }
      return;
    }
    emit(aw::gap_periodicity_to_json(g));
  } else {  // mindirs
    if (csv) throw aw::FormatError("--what mindirs has no CSV form");
    emit(aw::direction_series_to_json(
        aw::optimal_direction_series(p, args.from, args.to, limits)));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic/lattice width of rational polytopes"};
  app.require_subcommand(1);

  std::string file, dir_text, cap_text, bound_text = "10", gens_text, n_text;
  bool list_factorizations = false;
  bool dump_polytope = false;
  SeriesArgs series_args;

  CLI::App* points = app.add_subcommand("points", "lattice points of the polytope");
  points->add_option("file", file, "polytope JSON file")->required();
  points->add_option("--cap", cap_text, "candidate cap for enumeration");

  CLI::App* ar = app.add_subcommand("ar", "arithmetic range along a direction");
  ar->add_option("file", file)->required();
  ar->add_option("--dir", dir_text, "integer direction, e.g. 1,0")->required();
  ar->add_option("--cap", cap_text);

  CLI::App* awc = app.add_subcommand("aw", "arithmetic width (minimized without --dir)");
  awc->add_option("file", file)->required();
  awc->add_option("--dir", dir_text);
  awc->add_option("--cap", cap_text);

  CLI::App* lw = app.add_subcommand("lw", "lattice width (bounded search without --dir)");
  lw->add_option("file", file)->required();
  lw->add_option("--dir", dir_text);
  lw->add_option("--bound", bound_text, "max-norm bound for the search (default 10)");

  CLI::App* series = app.add_subcommand("series", "dilation series n*P for n in [from,to]");
  series->add_option("file", series_args.file)->required();
  series->add_option("--what", series_args.what, "aw | awmin | gaps | igap | mindirs")
      ->required()
      ->check(CLI::IsMember({"aw", "awmin", "gaps", "igap", "mindirs"}));
  series->add_option("--dir", series_args.dir_text);
  series->add_option("--from", series_args.from)->required();
  series->add_option("--to", series_args.to)->required();
  series->add_option("--cap", series_args.cap_text);
  series->add_option("--format", series_args.format)->check(CLI::IsMember({"json", "csv"}));

  CLI::App* sg = app.add_subcommand("semigroup", "length set of n in a numerical semigroup");
  sg->add_option("--gens", gens_text, "generators, e.g. 22,79,91,190")->required();
  sg->add_option("--n", n_text, "element to factor")->required();
  sg->add_flag("--list-factorizations", list_factorizations);
  sg->add_flag("--polytope", dump_polytope, "emit the factorization polytope instead");

  CLI::App* diverge = app.add_subcommand("diverge", "compare aw and lw minimizers");
  diverge->add_option("file", file)->required();
  diverge->add_option("--bound", bound_text);
  diverge->add_option("--cap", cap_text);

  try {
    app.parse(argc, argv);

    if (points->parsed()) {
      const aw::RationalPolytope p = load_polytope(file);
      emit(aw::points_report(p, aw::enumerate_lattice_points(p, limits_from(cap_text))));
    } else if (ar->parsed()) {
      const aw::RationalPolytope p = load_polytope(file);
      const aw::IntVec c = aw::parse_direction(dir_text, p.dim());
      emit(aw::range_report(aw::arithmetic_range(p, c, limits_from(cap_text))));
    } else if (awc->parsed()) {
      const aw::RationalPolytope p = load_polytope(file);
      const aw::EnumerationLimits limits = limits_from(cap_text);
      if (dir_text.empty()) {
        emit(aw::width_result_to_json(aw::arithmetic_width(p, limits), false));
      } else {
        const aw::IntVec c = aw::parse_direction(dir_text, p.dim());
        aw::Json doc;
        doc["direction"] = aw::json_int_vec(aw::canonical_direction(c));
        doc["value"] = aw::json_int(aw::arithmetic_width_dir(p, c, limits));
        emit(doc);
      }
    } else if (lw->parsed()) {
      const aw::RationalPolytope p = load_polytope(file);
      if (dir_text.empty()) {
        const aw::Int bound = flag_int(bound_text, "--bound");
        aw::Json doc = aw::width_result_to_json(aw::lattice_width_bounded(p, bound), true);
        doc["bound"] = aw::json_int(bound);
        emit(doc);
      } else {
        const aw::IntVec c = aw::parse_direction(dir_text, p.dim());
        aw::Json doc;
        doc["direction"] = aw::json_int_vec(c);  // width of the direction as given
        doc["value"] = aw::json_rat(aw::lattice_width_dir(p, c));
        emit(doc);
      }
    } else if (series->parsed()) {
      run_series(series_args);
    } else if (sg->parsed()) {
      std::vector<aw::Int> gens;
      try {
        gens = aw::parse_int_list(gens_text);
      } catch (const std::invalid_argument& e) {
        throw aw::FormatError(std::string("--gens: ") + e.what());
      }
      const aw::NumericalSemigroup s = aw::make_semigroup(std::move(gens));
      if (dump_polytope) {
        emit(aw::polytope_to_json(aw::semigroup_polytope(s)));
      } else {
        const aw::Int n = flag_int(n_text, "--n");
        const std::vector<aw::IntVec> facts = aw::factorizations(s, n);
        emit(aw::semigroup_report(s, n, facts, aw::length_set(s, n), list_factorizations));
      }
    } else if (diverge->parsed()) {
      const aw::RationalPolytope p = load_polytope(file);
      emit(aw::divergence_to_json(aw::divergence_report(
          p, flag_int(bound_text, "--bound"), limits_from(cap_text))));
    }
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // --help is fine; bad invocations are malformed input
  } catch (const aw::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const aw::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
