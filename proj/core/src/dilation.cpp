#include "aw/dilation.hpp"

#include <stdexcept>
#include <string>

namespace aw {

namespace {

void check_range(long from, long to) {
  if (from < 1 || to < from)
    throw std::invalid_argument("dilation series: need 1 <= from <= to");
}

long period_as_long(const Int& d) {
  if (!d.fits_slong_p())
    throw std::invalid_argument("dilation series: period does not fit a machine word");
  return d.get_si();
}

long residue_of(long n, long d) { return n % d; }  // n >= 1, d >= 1

// least index j such that key(j') == key(end-1) for all j' >= j
template <typename Key>
std::size_t stabilization_index(const std::vector<Key>& keys) {
  std::size_t j = keys.size() - 1;
  while (j > 0 && keys[j - 1] == keys.back()) --j;
  return j;
}

}  // namespace

DilationSeries aw_series(const RationalPolytope& p, const IntVec& c, long from,
                         long to, const EnumerationLimits& limits) {
  check_range(from, to);
  DilationSeries s;
  s.direction = canonical_direction(c);
  s.from = from;
  s.to = to;
  s.period = p.denominator();
  s.samples.reserve(static_cast<std::size_t>(to - from + 1));
  for (long n = from; n <= to; ++n) {
    const RationalPolytope q = dilate(p, Int(n));
    SeriesSample sample;
    sample.n = n;
    sample.aff_has_lattice_point = q.affine_lattice().has_lattice_point;
    sample.value = sample.aff_has_lattice_point
                       ? arithmetic_width_dir(q, s.direction, limits)
                       : Int(0);
    s.samples.push_back(std::move(sample));
  }
  return s;
}

QuasilinearModel fit_quasilinear(const DilationSeries& series) {
  const long d = period_as_long(series.period);
  if (series.samples.empty())
    throw std::invalid_argument("fit_quasilinear: empty series");
  if (series.to - series.from + 1 < 3 * d)
    throw std::invalid_argument("fit_quasilinear: range shorter than 3 periods");

  QuasilinearModel model;
  model.period = series.period;
  for (long r = 0; r < d; ++r) {
    std::vector<const SeriesSample*> cls;
    for (const SeriesSample& s : series.samples)
      if (residue_of(s.n, d) == r) cls.push_back(&s);
    if (cls.size() < 2)
      throw std::invalid_argument("fit_quasilinear: residue class " +
                                  std::to_string(r) + " has fewer than 2 samples");
    std::vector<Int> deltas;
    for (std::size_t i = 1; i < cls.size(); ++i)
      deltas.push_back(cls[i]->value - cls[i - 1]->value);
    const std::size_t j = stabilization_index(deltas);

    ClassModel cm;
    cm.residue = r;
    cm.onset = cls[j]->n;
    cm.slope = make_rat(deltas.back(), Int(d));
    cm.intercept = Rat(cls[j]->value) - cm.slope * cls[j]->n;
    // exact linearity through the end is forced by the constant deltas
    for (std::size_t i = j; i < cls.size(); ++i)
      if (Rat(cls[i]->value) != cm.slope * cls[i]->n + cm.intercept)
        throw std::logic_error("fit_quasilinear: fit lost exactness");
    model.classes.push_back(std::move(cm));
  }
  return model;
}

RecurrenceReport verify_recurrence(const RationalPolytope& p, const IntVec& c,
                                   long from, long to,
                                   const EnumerationLimits& limits) {
  check_range(from, to);
  RecurrenceReport rep;
  rep.direction = canonical_direction(c);
  rep.period = p.denominator();
  const long d = period_as_long(rep.period);
  if (to - from < d)
    throw std::invalid_argument("verify_recurrence: range shorter than one period");

  const DilationSeries series = aw_series(p, rep.direction, from, to, limits);

  // lambda is dilation-invariant, so take it from any dilate whose affine
  // hull meets the lattice; the support width scales linearly from P itself
  Int lambda = 1;
  bool have_lambda = false;
  for (const SeriesSample& s : series.samples) {
    if (!s.aff_has_lattice_point) continue;
    lambda = step_size(dilate(p, Int(s.n)), rep.direction).lambda;
    have_lambda = true;
    break;
  }
  if (have_lambda) {
    const auto [lo_supp, hi_supp] = support(p, rep.direction);
    const Rat inc = Rat(rep.period) * (hi_supp - lo_supp) / lambda;
    if (inc.get_den() != 1)
      throw std::logic_error("verify_recurrence: increment is not an integer");
    rep.increment = inc.get_num();
  }

  rep.checked_through = to - d;
  const auto sample_at = [&](long n) -> const SeriesSample& {
    return series.samples[static_cast<std::size_t>(n - from)];
  };
  for (long n = from; n <= to - d; ++n) {
    const SeriesSample& a = sample_at(n);
    const SeriesSample& b = sample_at(n + d);
    if (!a.aff_has_lattice_point) {
      rep.skipped.push_back(n);
      if (b.aff_has_lattice_point)
        throw std::logic_error("verify_recurrence: affine-hull flag not periodic");
      continue;
    }
    if (b.value != a.value + rep.increment) rep.violations.push_back(n);
  }
  const long candidate = rep.violations.empty() ? from : rep.violations.back() + 1;
  rep.onset = candidate;
  rep.onset_found = false;
  if (have_lambda)
    for (long n = candidate; n <= to - d; ++n)
      if (sample_at(n).aff_has_lattice_point) {
        rep.onset_found = true;  // at least one clean checked pair from onset on
        break;
      }
  return rep;
}

GapCountSeries gap_count_series(const RationalPolytope& p, const IntVec& c,
                                long from, long to,
                                const EnumerationLimits& limits) {
  check_range(from, to);
  GapCountSeries gs;
  gs.direction = canonical_direction(c);
  gs.period = p.denominator();
  const long d = period_as_long(gs.period);

  for (long n = from; n <= to; ++n) {
    const RationalPolytope q = dilate(p, Int(n));
    GapCountSample sample;
    sample.n = n;
    const ArithmeticRange ar = arithmetic_range(q, gs.direction, limits);
    sample.defined = !ar.values.empty();
    if (sample.defined) {
      const AlmostAp ap = decompose_almost_ap(ar.values);
      sample.count = Int(ap.gaps_left.size() + ap.gaps_right.size());
    }
    gs.samples.push_back(std::move(sample));
  }

  long last_violation = from - 1;
  for (long n = from; n <= to - d; ++n) {
    const GapCountSample& a = gs.samples[static_cast<std::size_t>(n - from)];
    const GapCountSample& b = gs.samples[static_cast<std::size_t>(n + d - from)];
    if (a.defined != b.defined || (a.defined && a.count != b.count))
      last_violation = n;
  }
  gs.onset = last_violation + 1;
  gs.onset_found = (to - d >= gs.onset);  // at least one clean pair survives
  if (to - from < d) gs.onset_found = false;
  return gs;
}

IntegralityGaps integrality_gaps(const RationalPolytope& p, const IntVec& c,
                                 const EnumerationLimits& limits) {
  const std::vector<IntVec> pts = enumerate_lattice_points(p, limits);
  if (pts.empty())
    throw std::invalid_argument("integrality_gaps: no lattice points");
  // the direction is used exactly as given here
  Int lo_val, hi_val;
  bool first = true;
  for (const IntVec& z : pts) {
    const Int v = dot(c, z);
    if (first) {
      lo_val = hi_val = v;
      first = false;
    } else {
      if (v < lo_val) lo_val = v;
      if (v > hi_val) hi_val = v;
    }
  }
  const auto [lo_supp, hi_supp] = support(p, c);
  return {hi_supp - hi_val, Rat(lo_val) - lo_supp};
}

GapPeriodicityReport integrality_gap_periodicity(const RationalPolytope& p,
                                                 const IntVec& c, long from,
                                                 long to,
                                                 const EnumerationLimits& limits) {
  check_range(from, to);
  GapPeriodicityReport rep;
  rep.direction = c;
  rep.period = p.denominator();
  const long d = period_as_long(rep.period);

  for (long n = from; n <= to; ++n) {
    const RationalPolytope q = dilate(p, Int(n));
    GapPeriodicitySample sample;
    sample.n = n;
    if (count_lattice_points(q, limits) > 0) {
      sample.defined = true;
      const IntegralityGaps g = integrality_gaps(q, c, limits);
      sample.upper = g.upper;
      sample.lower = g.lower;
    }
    rep.samples.push_back(std::move(sample));
  }

  for (long r = 0; r < d; ++r) {
    std::vector<const GapPeriodicitySample*> cls;
    for (const GapPeriodicitySample& s : rep.samples)
      if (residue_of(s.n, d) == r) cls.push_back(&s);
    if (cls.empty()) continue;  // range shorter than one period
    GapPeriodicityClass gc;
    gc.residue = r;
    std::vector<std::tuple<bool, Rat, Rat>> keys;
    keys.reserve(cls.size());
    for (const auto* s : cls) keys.emplace_back(s->defined, s->upper, s->lower);
    const std::size_t j = stabilization_index(keys);
    gc.onset = cls[j]->n;
    gc.onset_found = (cls.size() - j >= 2);
    gc.defined = cls.back()->defined;
    gc.upper = cls.back()->upper;
    gc.lower = cls.back()->lower;
    rep.classes.push_back(std::move(gc));
  }
  return rep;
}

OptimalDirectionSeries optimal_direction_series(const RationalPolytope& p,
                                                long from, long to,
                                                const EnumerationLimits& limits) {
  check_range(from, to);
  OptimalDirectionSeries os;
  os.period = p.denominator();
  const long d = period_as_long(os.period);

  for (long n = from; n <= to; ++n) {
    const WidthResult w = arithmetic_width(dilate(p, Int(n)), limits);
    DirectionSample sample;
    sample.n = n;
    sample.value = w.value.get_num();  // arithmetic width is integral
    sample.minimizers = w.minimizers;
    sample.convention = (w.method == WidthMethod::Convention);
    os.samples.push_back(std::move(sample));
  }

  for (long r = 0; r < d; ++r) {
    std::vector<const DirectionSample*> cls;
    for (const DirectionSample& s : os.samples)
      if (residue_of(s.n, d) == r) cls.push_back(&s);
    if (cls.empty()) continue;
    DirectionClass dc;
    dc.residue = r;
    std::vector<std::vector<IntVec>> keys;
    keys.reserve(cls.size());
    for (const auto* s : cls) keys.push_back(s->minimizers);
    const std::size_t j = stabilization_index(keys);
    dc.onset = cls[j]->n;
    dc.onset_found = (cls.size() - j >= 2);
    dc.directions = cls.back()->minimizers;
    os.classes.push_back(std::move(dc));
  }
  return os;
}

AwMinSeries aw_min_series(const RationalPolytope& p, long from, long to,
                          const EnumerationLimits& limits) {
  check_range(from, to);
  AwMinSeries out;
  const OptimalDirectionSeries os = optimal_direction_series(p, from, to, limits);

  out.series.direction.clear();  // minimized over directions
  out.series.from = from;
  out.series.to = to;
  out.series.period = p.denominator();
  for (const DirectionSample& s : os.samples) {
    SeriesSample sample;
    sample.n = s.n;
    sample.value = s.value;
    sample.aff_has_lattice_point =
        dilate(p, Int(s.n)).affine_lattice().has_lattice_point;
    out.series.samples.push_back(std::move(sample));
  }
  out.direction_classes = os.classes;
  out.model = fit_quasilinear(out.series);

  // cross-check: each stabilized optimal direction grows with slope
  // (max - min)/lambda, which must match the fitted class slope
  for (const ClassModel& cm : out.model.classes) {
    SlopeCheck check;
    check.residue = cm.residue;
    check.model_slope = cm.slope;
    const DirectionClass* dc = nullptr;
    for (const DirectionClass& cand : out.direction_classes)
      if (cand.residue == cm.residue) dc = &cand;
    if (dc != nullptr) {
      // ignore classes that stabilized on a convention sample
      bool convention_tail = false;
      for (const DirectionSample& s : os.samples)
        if (residue_of(s.n, period_as_long(out.series.period)) == cm.residue &&
            s.n >= dc->onset && s.convention)
          convention_tail = true;
      if (!convention_tail) {
        check.checked = true;
        check.matches = true;
        for (const IntVec& dir : dc->directions) {
          // lambda from a dilate that certainly has a lattice point
          Int lambda = 1;
          for (const DirectionSample& s : os.samples)
            if (s.value > 0) {
              lambda = step_size(dilate(p, Int(s.n)), dir).lambda;
              break;
            }
          const auto [lo_supp, hi_supp] = support(p, dir);
          if (Rat(hi_supp - lo_supp) / lambda != check.model_slope) check.matches = false;
        }
      }
    }
    out.slope_checks.push_back(std::move(check));
  }
  return out;
}

}  // namespace aw
