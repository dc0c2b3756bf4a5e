#pragma once

/* JSON readers/writers for the CLI surface.  Documents are ordered_json so
 * field order (and therefore byte output) is deterministic.  Scalars:
 * rationals serialize as canonical "p/q" strings ("p" when q == 1),
 * integers as JSON numbers when they fit 64 bits and as strings otherwise. */

#include "aw/arithmetic_range.hpp"
#include "aw/dilation.hpp"
#include "aw/polytope.hpp"
#include "aw/semigroup.hpp"
#include "aw/width_min.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace aw {

using Json = nlohmann::ordered_json;

// malformed document or flag syntax: distinct from std::invalid_argument so
// the CLI can separate "bad input" from "violated precondition"
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json json_int(const Int& z);
Json json_rat(const Rat& q);
Json json_int_vec(const IntVec& v);
Json json_int_vecs(const std::vector<IntVec>& vs);

// {"vertices": [["0", "1/2"], ...]}; FormatError on any shape problem
RationalPolytope polytope_from_json(const Json& doc);
Json polytope_to_json(const RationalPolytope& p);

// "1,0,-2" -> (1, 0, -2); FormatError on bad syntax
IntVec parse_direction(const std::string& text, std::size_t expected_dim);
std::vector<Int> parse_int_list(const std::string& text);

Json points_report(const RationalPolytope& p, const std::vector<IntVec>& pts);
Json range_report(const ArithmeticRange& ar);
Json almost_ap_to_json(const AlmostAp& ap);
Json width_result_to_json(const WidthResult& w, bool rational_value);
Json divergence_to_json(const DivergenceReport& rep);
Json series_samples_to_json(const DilationSeries& s);
Json quasilinear_to_json(const QuasilinearModel& m);
Json recurrence_to_json(const RecurrenceReport& r);
Json gap_series_to_json(const GapCountSeries& g);
Json gap_periodicity_to_json(const GapPeriodicityReport& g);
Json direction_series_to_json(const OptimalDirectionSeries& o);
Json aw_min_to_json(const AwMinSeries& a);
Json semigroup_report(const NumericalSemigroup& s, const Int& n,
                      const std::vector<IntVec>& factorizations,
                      const std::vector<Int>& lengths, bool list_factorizations);

}  // namespace aw
