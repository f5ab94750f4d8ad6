#pragma once

#include <string>

#include "json.hpp"
#include "qv/series.hpp"
#include "qv/theta.hpp"

namespace qv {

/// Wire formats. Exact values only: rationals as "p/q" strings, cyclotomic
/// numbers in their reduced canonical representation.
nlohmann::ordered_json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json series_to_json(const MultiSeries& s);
nlohmann::ordered_json qseries_to_json(const QSeries& s);

/// CSV rows "exponent,coefficient", exponents and coefficients as rational
/// strings. Throws if a coefficient is not rational.
std::string qseries_to_csv(const QSeries& s);

std::string pretty_series(const MultiSeries& s);
std::string pretty_qseries(const QSeries& s);

}  // namespace qv
