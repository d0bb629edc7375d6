#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "jspec/criteria.hpp"
#include "jspec/errors.hpp"
#include "jspec/periodic_operator.hpp"
#include "jspec/structure.hpp"
#include "jspec/trace.hpp"

namespace jspec::io {

using json = nlohmann::ordered_json;

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// FNV-1a 64-bit, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Throws ParseError with the byte position on malformed text.
json parse_json(std::string_view text, std::string_view source);

/// [re, im] or a bare real number.
cplx complex_from(const json& v, std::string_view where);
json complex_to(cplx z);

std::vector<cplx> complex_list(const json& v, std::string_view where);
json complex_list_to(std::span<const cplx> values);

/// {"n": N, "a": [...], "b": [...], "c": [...]}; unknown keys are ignored.
PeriodicOperator operator_from(const json& doc);
json operator_to(const PeriodicOperator& op);

/// {"coeffs": [...]} ascending. With `degree` >= 0, N coefficients mean the
/// leading 1 was omitted; N+1 must end in 1. With `degree` < 0 a trailing 1 is
/// taken as explicit and anything else gets a leading 1 appended.
Polynomial target_from(const json& doc, int degree = -1);

/// A bare list or an object holding the list under `key`.
std::vector<cplx> sequence_from(const json& doc, std::string_view key);

json polynomial_to(const Polynomial& p);
json curve_to(const BoundaryCurve& curve);
json discriminant_to(const Discriminant& disc);
json stationary_to(const StationaryPoint& s);
json structure_to(const StructureReport& rep);
json criteria_to(const CriteriaReport& rep, const IntervalResult* interval);
json trace_summary_to(const SpectrumTrace& st);

json error_to(const std::exception& e);

/// Two-space indented, shortest round-trip floats, trailing newline.
std::string dump(const json& doc);

}  // namespace jspec::io
