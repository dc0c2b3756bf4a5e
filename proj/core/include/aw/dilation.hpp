#pragma once

/* Dilation asymptotics: arithmetic-width series of n*P, eventual
 * quasilinear growth with period D (the denominator of P), the fixed-
 * direction recurrence aw(n+D) = aw(n) + D*(max-min)/lambda, gap-count
 * periodicity, integrality gaps, and the per-residue stabilization of
 * optimal directions. */

#include "aw/arithmetic_range.hpp"
#include "aw/lattice_points.hpp"
#include "aw/polytope.hpp"
#include "aw/width_min.hpp"

#include <vector>

namespace aw {

struct SeriesSample {
  long n = 0;
  Int value = 0;
  // aff(nP) meets Z^d; when false the dilate has no lattice points and the
  // recorded value is 0 (the true width of an empty set)
  bool aff_has_lattice_point = true;
};

struct DilationSeries {
  IntVec direction;  // canonical; empty when the series minimizes over directions
  long from = 0;
  long to = 0;
  Int period = 1;  // D: denominator of P
  std::vector<SeriesSample> samples;
};

struct ClassModel {
  long residue = 0;
  long onset = 0;  // least sampled n in the class with exact linearity through the end
  Rat slope;
  Rat intercept;  // value(n) == slope * n + intercept for sampled n >= onset
};

struct QuasilinearModel {
  Int period = 1;
  std::vector<ClassModel> classes;  // residues 0..D-1
};

struct RecurrenceReport {
  IntVec direction;  // canonical
  Int period = 1;
  Int increment = 0;  // D * (max - min) / lambda
  bool onset_found = false;
  long onset = 0;  // least n with the identity holding at every checked n' >= n
  long checked_through = 0;            // greatest n with n + D inside the range
  std::vector<long> violations;        // checked n where the identity fails
  std::vector<long> skipped;           // n excluded: aff(nP) misses Z^d
};

struct GapCountSample {
  long n = 0;
  bool defined = false;  // nP has lattice points
  Int count = 0;         // gaps in the almost-AP decomposition of the range
};

struct GapCountSeries {
  IntVec direction;
  Int period = 1;
  std::vector<GapCountSample> samples;
  bool onset_found = false;
  long onset = 0;  // least n from which (defined, count) is D-periodic to the end
};

// both gaps are >= 0: upper = max over P minus max over lattice points,
// lower = min over lattice points minus min over P
struct IntegralityGaps {
  Rat upper;
  Rat lower;
};

struct GapPeriodicityClass {
  long residue = 0;
  bool onset_found = false;  // stabilized tail has >= 2 samples
  long onset = 0;
  bool defined = false;  // stabilized state: dilates in this class have lattice points
  Rat upper;
  Rat lower;
};

struct GapPeriodicitySample {
  long n = 0;
  bool defined = false;
  Rat upper;
  Rat lower;
};

struct GapPeriodicityReport {
  IntVec direction;  // as given (integrality gaps are not direction-canonicalized)
  Int period = 1;
  std::vector<GapPeriodicitySample> samples;
  std::vector<GapPeriodicityClass> classes;
};

struct DirectionSample {
  long n = 0;
  Int value = 0;
  std::vector<IntVec> minimizers;
  bool convention = false;  // true when the dilate had <= 1 lattice point
};

struct DirectionClass {
  long residue = 0;
  bool onset_found = false;  // stabilized tail has >= 2 samples
  long onset = 0;
  std::vector<IntVec> directions;  // stabilized minimizer set
};

struct OptimalDirectionSeries {
  Int period = 1;
  std::vector<DirectionSample> samples;
  std::vector<DirectionClass> classes;
};

struct SlopeCheck {
  long residue = 0;
  Rat model_slope;
  bool checked = false;  // false when the class stabilized on a convention sample
  bool matches = false;  // every stabilized direction has (max-min)/lambda == slope
};

struct AwMinSeries {
  DilationSeries series;  // minimized width per dilate
  QuasilinearModel model;
  std::vector<DirectionClass> direction_classes;
  std::vector<SlopeCheck> slope_checks;
};

// fixed-direction width of n*P for n in [from, to]; requires 1 <= from <= to
DilationSeries aw_series(const RationalPolytope& p, const IntVec& c, long from,
                         long to, const EnumerationLimits& limits = {});

// exact per-residue linear fit; requires the range to span >= 3 periods and
// every residue class to hold >= 2 samples
QuasilinearModel fit_quasilinear(const DilationSeries& series);

// checks aw(n+D) == aw(n) + D*(max-min)/lambda on every sampled pair;
// requires at least one checkable pair (to - from >= D)
RecurrenceReport verify_recurrence(const RationalPolytope& p, const IntVec& c,
                                   long from, long to,
                                   const EnumerationLimits& limits = {});

GapCountSeries gap_count_series(const RationalPolytope& p, const IntVec& c,
                                long from, long to,
                                const EnumerationLimits& limits = {});

// requires at least one lattice point in p
IntegralityGaps integrality_gaps(const RationalPolytope& p, const IntVec& c,
                                 const EnumerationLimits& limits = {});

GapPeriodicityReport integrality_gap_periodicity(const RationalPolytope& p,
                                                 const IntVec& c, long from,
                                                 long to,
                                                 const EnumerationLimits& limits = {});

OptimalDirectionSeries optimal_direction_series(const RationalPolytope& p,
                                                long from, long to,
                                                const EnumerationLimits& limits = {});

// minimized-width series with its quasilinear fit and the slope cross-check
// against (max-min)/lambda of the stabilized optimal directions
AwMinSeries aw_min_series(const RationalPolytope& p, long from, long to,
                          const EnumerationLimits& limits = {});

}  // namespace aw
