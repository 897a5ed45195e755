#pragma once

#include <json.hpp>

#include "dynzeta/sequence_transforms.hpp"
#include "dynzeta/series.hpp"
#include "dynzeta/spectral.hpp"
#include "dynzeta/zeta_algebra.hpp"

namespace dynzeta {

/// Insertion-ordered JSON so emitted documents are reproducible.
using json = nlohmann::ordered_json;

// All numeric VALUES (coefficients, exponents, sequence entries) are
// serialized as decimal strings so 64-bit JSON consumers cannot corrupt
// them; structural sizes (order, dim, indices) stay plain numbers.
// Readers additionally accept JSON integers and ["num","den"] pairs.

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

/// {"order": N, "coeffs": ["c0", ...]}; integer coefficients are written
/// bare, fractional ones as ["num","den"]. Readers accept both forms plus
/// plain integers, and pad missing trailing coefficients with zeros.
json series_to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const json& j);
MonicSeries monic_from_json(const json& j);

/// {"exponents": {"1": "-1", ...}, "max_index": N}
json exponents_to_json(const FactorExponents& f);
FactorExponents exponents_from_json(const json& j);

/// Bare array of value strings; readers accept integers and strings.
json sequence_to_json(const std::vector<Rational>& values);
std::vector<Rational> sequence_from_json(const json& j);

/// {"dim": d, "rows": [["p/q", ...], ...]}; "dim" is emitted for square
/// matrices and checked against the row shape when present on input.
json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const json& j);

/// {"orbits": [{"m": 2, "a": 1, "b": 0}, ...]} and/or
/// {"linearizations": [{"period": 2, "matrix": {...}}, ...]}.
OrbitTable orbit_table_from_json(const json& j);

/// {"pass": bool, "first_violation": {"k": k, "value": "num/den"} | null}
json dold_verdict_to_json(const DoldVerdict& v);

json commutativity_report_to_json(const CommutativityReport& r);

}  // namespace dynzeta
