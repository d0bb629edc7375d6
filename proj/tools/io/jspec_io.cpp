#include "jspec_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace jspec::io {

namespace {

std::string where_index(std::string_view where, std::size_t k) {
  std::ostringstream os;
  os << where << '[' << k << ']';
  return os.str();
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("IOError", "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("IOError", "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw InputError("IOError", "write failed for " + path.string());
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << source << ": byte " << e.byte << ": " << e.what();
    throw ParseError(os.str());
  }
}

cplx complex_from(const json& v, std::string_view where) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  throw ParseError(std::string(where) + ": expected [re, im] or a number");
}

json complex_to(cplx z) { return json::array({z.real(), z.imag()}); }

std::vector<cplx> complex_list(const json& v, std::string_view where) {
  if (!v.is_array()) throw ParseError(std::string(where) + ": expected an array");
  std::vector<cplx> out;
  out.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out.push_back(complex_from(v[k], where_index(where, k)));
  return out;
}

json complex_list_to(std::span<const cplx> values) {
  json arr = json::array();
  for (cplx z : values) arr.push_back(complex_to(z));
  return arr;
}

PeriodicOperator operator_from(const json& doc) {
  if (!doc.is_object()) throw ParseError("operator: expected a JSON object");
  for (const char* key : {"n", "a", "b", "c"})
    if (!doc.contains(key)) throw ParseError(std::string("operator: missing key \"") + key + "\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw ParseError("operator: \"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
  auto a = complex_list(doc["a"], "operator.a");
  auto b = complex_list(doc["b"], "operator.b");
  auto c = complex_list(doc["c"], "operator.c");
  for (auto [name, len] : {std::pair{"a", a.size()}, {"b", b.size()}, {"c", c.size()}})
    if (len != n) {
      std::ostringstream os;
      os << "operator." << name << ": expected " << n << " entries, got " << len;
      throw ParseError(os.str());
    }
  return PeriodicOperator(std::move(a), std::move(b), std::move(c));
}

json operator_to(const PeriodicOperator& op) {
  json out;
  out["n"] = op.period();
  out["a"] = complex_list_to(op.a);
  out["b"] = complex_list_to(op.b);
  out["c"] = complex_list_to(op.c);
  return out;
}

Polynomial target_from(const json& doc, int degree) {
  if (!doc.is_object() || !doc.contains("coeffs")) throw ParseError("target: expected {\"coeffs\": [...]}");
  auto c = complex_list(doc["coeffs"], "target.coeffs");
  if (c.empty()) throw ParseError("target.coeffs: empty");
  if (degree >= 0) {
    const auto n = static_cast<std::size_t>(degree);
    if (c.size() == n) {
      c.push_back(1.0);
    } else if (c.size() != n + 1 || c.back() != cplx{1.0}) {
      std::ostringstream os;
      os << "target.coeffs: expected " << n << " coefficients or " << n + 1 << " ending in 1";
      throw ParseError(os.str());
    }
  } else if (c.back() != cplx{1.0}) {
    c.push_back(1.0);
  }
  Polynomial p(std::move(c));
  if (p.degree() < 1) throw ParseError("target: degree must be at least 1");
  return p;
}

std::vector<cplx> sequence_from(const json& doc, std::string_view key) {
  if (doc.is_array()) return complex_list(doc, key);
  if (doc.is_object() && doc.contains(std::string(key))) return complex_list(doc[std::string(key)], key);
  throw ParseError("expected a list or an object with key \"" + std::string(key) + "\"");
}

json polynomial_to(const Polynomial& p) {
  return complex_list_to(std::vector<cplx>(p.coeffs().begin(), p.coeffs().end()));
}

json curve_to(const BoundaryCurve& curve) {
  json out;
  out["kind"] = std::string(to_string(curve.kind));
  out["ra"] = curve.ra;
  out["rc"] = curve.rc;
  out["phi"] = curve.phi;
  if (curve.near_degenerate) out["warning"] = "near-degenerate ellipse: |ra - rc| within 10x tolerance";
  return out;
}

json discriminant_to(const Discriminant& disc) {
  json out;
  out["degree"] = disc.degree();
  out["p"] = polynomial_to(disc.p);
  out["a_prod"] = complex_to(disc.a_prod);
  out["c_prod"] = complex_to(disc.c_prod);
  out["curve"] = curve_to(disc.curve);
  out["degenerate"] = disc.degenerate();
  return out;
}

json stationary_to(const StationaryPoint& s) {
  json out;
  out["lambda"] = complex_to(s.lambda);
  out["order"] = s.order;
  out["image"] = complex_to(s.image);
  out["location"] = std::string(to_string(s.location));
  out["offset"] = s.offset;
  out["borderline"] = s.borderline;
  return out;
}

json structure_to(const StructureReport& rep) {
  json out;
  out["kind"] = std::string(to_string(rep.kind));
  out["degenerate"] = rep.degenerate;
  out["sum_tau"] = rep.sum_tau;
  out["petal_count"] = rep.petal_count;
  out["bouquet_count"] = rep.bouquet_count;
  out["decomposition_unique"] = rep.decomposition_unique;
  json flowers = json::array();
  for (const auto& f : rep.flowers) {
    json item;
    item["center"] = complex_to(f.center);
    item["petals"] = f.petals;
    flowers.push_back(item);
  }
  out["flowers"] = flowers;
  json st = json::array();
  for (const auto& s : rep.stationary) st.push_back(stationary_to(s));
  out["stationary"] = st;
  if (rep.degenerate) out["point_spectrum"] = complex_list_to(rep.point_spectrum);
  if (rep.near_degenerate_curve) out["warning"] = "near-degenerate ellipse; counts may flip";
  return out;
}

json criteria_to(const CriteriaReport& rep, const IntervalResult* interval) {
  json out;
  out["is_real"] = rep.is_real;
  json w;
  w["stationary"] = rep.witness.stationary;
  w["signed_values"] = complex_list_to(rep.witness.signed_values);
  w["R"] = rep.witness.r;
  out["witness"] = w;
  if (interval) {
    out["interval"] = interval->interval
                          ? json::array({interval->interval->first, interval->interval->second})
                          : json(nullptr);
    out["interval_max_deviation"] = interval->max_deviation;
    if (!interval->reason.empty()) out["interval_reason"] = interval->reason;
  }
  if (rep.line) {
    json l;
    l["c0"] = complex_to(rep.line->c0);
    l["phi"] = rep.line->phi;
    l["alternatives"] = rep.line->alternatives;
    out["line"] = l;
  }
  if (rep.segment) {
    out["segment"] = json::array({complex_to(rep.segment->first), complex_to(rep.segment->second)});
  }
  out["failures"] = rep.failures;
  return out;
}

json trace_summary_to(const SpectrumTrace& st) {
  const auto& tr = st.trace;
  json out;
  out["kind"] = std::string(to_string(tr.kind));
  out["bands"] = tr.bands.size();
  out["samples"] = tr.sample_count();
  out["bisections"] = tr.bisections;
  out["attempts"] = st.attempts;
  out["max_residual"] = tr.max_residual;
  out["clockwise"] = tr.clockwise;
  out["monodromy"] = tr.monodromy;
  out["petals"] = tr.petals;
  out["bouquets"] = tr.bouquets;
  json cross;
  cross["cycles"] = tr.petals.size();
  cross["petal_count"] = st.structure.petal_count;
  cross["components"] = tr.bouquets.size();
  cross["bouquet_count"] = st.structure.bouquet_count;
  cross["cycles_match"] = tr.kind == CurveKind::Segment ||
                          static_cast<int>(tr.petals.size()) == st.structure.petal_count;
  cross["components_match"] = static_cast<int>(tr.bouquets.size()) == st.structure.bouquet_count;
  json checks = json::array();
  bool all = true;
  for (const auto& c : st.checks) {
    json item;
    item["petal"] = c.petal;
    item["cycle_length"] = c.cycle_length;
    item["winding_bands"] = c.winding_bands;
    item["enclosed_stationary"] = c.enclosed;
    item["interior_point"] = complex_to(c.interior_point);
    item["consistent"] = c.consistent();
    all = all && c.consistent();
    checks.push_back(item);
  }
  cross["winding_consistent"] = all;
  cross["petals"] = checks;
  out["cross_check"] = cross;
  json centers = json::array();
  for (const auto& f : tr.flower_centers) {
    json item;
    item["center"] = complex_to(f.lambda);
    item["order"] = f.order;
    item["members"] = f.members;
    centers.push_back(item);
  }
  out["flower_centers"] = centers;
  return out;
}

json error_to(const std::exception& e) {
  json err;
  if (const auto* je = dynamic_cast<const Error*>(&e)) {
    err["kind"] = je->kind();
  } else {
    err["kind"] = "InternalError";
  }
  err["message"] = e.what();
  if (const auto* ta = dynamic_cast<const TraceAmbiguous*>(&e)) {
    err["theta_lo"] = ta->theta_lo();
    err["theta_hi"] = ta->theta_hi();
  }
  json out;
  out["error"] = err;
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace jspec::io
