#include "aw/json_io.hpp"

namespace aw {

Json json_int(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(z.get_str());
}

Json json_rat(const Rat& q) { return Json(rat_to_string(q)); }

Json json_int_vec(const IntVec& v) {
  Json arr = Json::array();
  for (const Int& e : v) arr.push_back(json_int(e));
  return arr;
}

Json json_int_vecs(const std::vector<IntVec>& vs) {
  Json arr = Json::array();
  for (const IntVec& v : vs) arr.push_back(json_int_vec(v));
  return arr;
}

RationalPolytope polytope_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("vertices"))
    throw FormatError("polytope document must be an object with \"vertices\"");
  const Json& verts = doc["vertices"];
  if (!verts.is_array() || verts.empty())
    throw FormatError("\"vertices\" must be a nonempty array");
  std::vector<RatVec> pts;
  pts.reserve(verts.size());
  std::size_t d = 0;
  for (const Json& row : verts) {
    if (!row.is_array() || row.empty())
      throw FormatError("each vertex must be a nonempty array");
    if (d == 0) d = row.size();
    if (row.size() != d) throw FormatError("vertex rows have unequal lengths");
    RatVec v;
    v.reserve(d);
    for (const Json& cell : row) {
      try {
        if (cell.is_number_integer())
          v.emplace_back(Int(cell.get<long>()));
        else if (cell.is_string())
          v.push_back(rat_from_string(cell.get<std::string>()));
        else
          throw FormatError("vertex coordinates must be integers or \"p/q\" strings");
      } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
      }
    }
    pts.push_back(std::move(v));
  }
  return make_polytope(std::move(pts));
}

Json polytope_to_json(const RationalPolytope& p) {
  Json verts = Json::array();
  for (const RatVec& v : p.generating_points()) {
    Json row = Json::array();
    for (const Rat& q : v) row.push_back(rat_to_string(q));
    verts.push_back(std::move(row));
  }
  return Json{{"vertices", std::move(verts)}};
}

IntVec parse_direction(const std::string& text, std::size_t expected_dim) {
  std::vector<Int> parts;
  try {
    parts = parse_int_list(text);
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (parts.size() != expected_dim)
    throw std::invalid_argument("direction has length " + std::to_string(parts.size()) +
                                ", expected " + std::to_string(expected_dim));
  return parts;
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::size_t start = 0;
  if (text.empty()) throw std::invalid_argument("empty integer list");
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma - start);
    out.push_back(int_from_string(tok));  // throws invalid_argument on junk
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Json points_report(const RationalPolytope& p, const std::vector<IntVec>& pts) {
  Json doc;
  doc["dimension"] = p.dim();
  doc["count"] = pts.size();
  doc["points"] = json_int_vecs(pts);
  return doc;
}

Json almost_ap_to_json(const AlmostAp& ap) {
  Json doc;
  doc["min"] = json_int(ap.m);
  doc["max"] = json_int(ap.max);
  doc["step"] = json_int(ap.step);
  Json gl = Json::array(), gr = Json::array();
  for (const Int& g : ap.gaps_left) gl.push_back(json_int(g));
  for (const Int& g : ap.gaps_right) gr.push_back(json_int(g));
  doc["gaps_left"] = std::move(gl);
  doc["gaps_right"] = std::move(gr);
  doc["t"] = json_int(ap.t);
  doc["t_prime"] = json_int(ap.t_prime);
  return doc;
}

Json range_report(const ArithmeticRange& ar) {
  Json doc;
  doc["direction"] = json_int_vec(ar.direction);
  Json vals = Json::array();
  for (const Int& v : ar.values) vals.push_back(json_int(v));
  doc["values"] = std::move(vals);
  doc["width"] = ar.values.size();
  if (ar.values.empty())
    doc["almost_ap"] = nullptr;
  else
    doc["almost_ap"] = almost_ap_to_json(decompose_almost_ap(ar.values));
  return doc;
}

namespace {

const char* method_name(WidthMethod m) {
  switch (m) {
    case WidthMethod::TestSet: return "test_set";
    case WidthMethod::Convention: return "convention";
    case WidthMethod::BoundedEnumeration: return "bounded_enumeration";
  }
  return "?";
}

}  // namespace

Json width_result_to_json(const WidthResult& w, bool rational_value) {
  Json doc;
  if (rational_value)
    doc["value"] = json_rat(w.value);
  else
    doc["value"] = json_int(w.value.get_num());  // integral by construction
  doc["minimizers"] = json_int_vecs(w.minimizers);
  doc["method"] = method_name(w.method);
  return doc;
}

Json divergence_to_json(const DivergenceReport& rep) {
  Json doc;
  doc["arithmetic"] = width_result_to_json(rep.arithmetic, false);
  doc["lattice"] = width_result_to_json(rep.lattice, true);
  switch (rep.relation) {
    case MinimizerRelation::Equal: doc["relation"] = "equal"; break;
    case MinimizerRelation::Overlapping: doc["relation"] = "overlapping"; break;
    case MinimizerRelation::Disjoint: doc["relation"] = "disjoint"; break;
  }
  doc["notes"] = rep.notes;
  return doc;
}

Json series_samples_to_json(const DilationSeries& s) {
  Json doc;
  doc["direction"] = s.direction.empty() ? Json(nullptr) : json_int_vec(s.direction);
  doc["from"] = s.from;
  doc["to"] = s.to;
  doc["period"] = json_int(s.period);
  Json samples = Json::array();
  for (const SeriesSample& sm : s.samples) {
    Json row;
    row["n"] = sm.n;
    row["value"] = json_int(sm.value);
    row["aff_has_lattice_point"] = sm.aff_has_lattice_point;
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  return doc;
}

Json quasilinear_to_json(const QuasilinearModel& m) {
  Json doc;
  doc["period"] = json_int(m.period);
  Json classes = Json::array();
  for (const ClassModel& c : m.classes) {
    Json row;
    row["residue"] = c.residue;
    row["onset"] = c.onset;
    row["slope"] = json_rat(c.slope);
    row["intercept"] = json_rat(c.intercept);
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

Json recurrence_to_json(const RecurrenceReport& r) {
  Json doc;
  doc["direction"] = json_int_vec(r.direction);
  doc["period"] = json_int(r.period);
  doc["increment"] = json_int(r.increment);
  doc["onset_found"] = r.onset_found;
  doc["onset"] = r.onset;
  doc["checked_through"] = r.checked_through;
  doc["violations"] = r.violations;
  doc["skipped"] = r.skipped;
  return doc;
}

Json gap_series_to_json(const GapCountSeries& g) {
  Json doc;
  doc["direction"] = json_int_vec(g.direction);
  doc["period"] = json_int(g.period);
  Json samples = Json::array();
  for (const GapCountSample& s : g.samples) {
    Json row;
    row["n"] = s.n;
    row["defined"] = s.defined;
    if (s.defined) row["count"] = json_int(s.count);
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  doc["onset_found"] = g.onset_found;
  doc["onset"] = g.onset;
  return doc;
}

Json gap_periodicity_to_json(const GapPeriodicityReport& g) {
  Json doc;
  doc["direction"] = json_int_vec(g.direction);
  doc["period"] = json_int(g.period);
  Json samples = Json::array();
  for (const GapPeriodicitySample& s : g.samples) {
    Json row;
    row["n"] = s.n;
    row["defined"] = s.defined;
    if (s.defined) {
      row["upper"] = json_rat(s.upper);
      row["lower"] = json_rat(s.lower);
    }
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  Json classes = Json::array();
  for (const GapPeriodicityClass& c : g.classes) {
    Json row;
    row["residue"] = c.residue;
    row["onset_found"] = c.onset_found;
    row["onset"] = c.onset;
    row["defined"] = c.defined;
    if (c.defined) {
      row["upper"] = json_rat(c.upper);
      row["lower"] = json_rat(c.lower);
    }
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

Json direction_series_to_json(const OptimalDirectionSeries& o) {
  Json doc;
  doc["period"] = json_int(o.period);
  Json samples = Json::array();
  for (const DirectionSample& s : o.samples) {
    Json row;
    row["n"] = s.n;
    row["value"] = json_int(s.value);
    row["minimizers"] = json_int_vecs(s.minimizers);
    row["convention"] = s.convention;
    samples.push_back(std::move(row));
  }
  doc["samples"] = std::move(samples);
  Json classes = Json::array();
  for (const DirectionClass& c : o.classes) {
    Json row;
    row["residue"] = c.residue;
    row["onset_found"] = c.onset_found;
    row["onset"] = c.onset;
    row["directions"] = json_int_vecs(c.directions);
    classes.push_back(std::move(row));
  }
  doc["classes"] = std::move(classes);
  return doc;
}

Json aw_min_to_json(const AwMinSeries& a) {
  Json doc;
  doc["series"] = series_samples_to_json(a.series);
  doc["model"] = quasilinear_to_json(a.model);
  Json classes = Json::array();
  for (const DirectionClass& c : a.direction_classes) {
    Json row;
    row["residue"] = c.residue;
    row["onset_found"] = c.onset_found;
    row["onset"] = c.onset;
    row["directions"] = json_int_vecs(c.directions);
    classes.push_back(std::move(row));
  }
  doc["direction_classes"] = std::move(classes);
  Json checks = Json::array();
  for (const SlopeCheck& c : a.slope_checks) {
    Json row;
    row["residue"] = c.residue;
    row["slope"] = json_rat(c.model_slope);
    row["checked"] = c.checked;
    row["matches"] = c.matches;
    checks.push_back(std::move(row));
  }
  doc["slope_checks"] = std::move(checks);
  return doc;
}

Json semigroup_report(const NumericalSemigroup& s, const Int& n,
                      const std::vector<IntVec>& factorizations,
                      const std::vector<Int>& lengths, bool list_factorizations) {
  Json doc;
  Json gens = Json::array();
  for (const Int& g : s.generators) gens.push_back(json_int(g));
  doc["generators"] = std::move(gens);
  doc["n"] = json_int(n);
  doc["factorization_count"] = factorizations.size();
  if (list_factorizations) doc["factorizations"] = json_int_vecs(factorizations);
  Json ls = Json::array();
  for (const Int& l : lengths) ls.push_back(json_int(l));
  doc["lengths"] = std::move(ls);
  doc["almost_ap"] = lengths.empty() ? Json(nullptr)
                                     : almost_ap_to_json(decompose_almost_ap(lengths));
  return doc;
}

}  // namespace aw
