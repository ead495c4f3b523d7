#pragma once

#include <string>

#include "umbral/poly.hpp"
#include "umbral/series.hpp"

namespace umbral {

// Polynomial literal: JSON array of rational strings, constant term first,
// e.g. ["1/4","0","-3/2","1"].
Poly poly_from_json(const std::string& literal);
std::string poly_to_json(const Poly& p);

// Series literal: {"coeffs": ["1","-1/2","0","1/4"], "trunc": 3} with
// EGF-convention coefficients.
EgfSeries series_from_json(const std::string& literal);
std::string series_to_json(const EgfSeries& f);

}  // namespace umbral
