#pragma once

#include "ddt/dtengine.hpp"
#include "ddt/fqoracle.hpp"
#include "ddt/mckay.hpp"

#include <json.hpp>

#include <string>

namespace ddt {

using Json = nlohmann::ordered_json;

// Canonical text form: terms c*x^k joined by '+', descending exponent,
// negative or fractional coefficients parenthesized, unit coefficients
// dropped. Examples: "x^4+3*x^2", "(-1)*x^1", "x^2+(-1)".
std::string to_string(const LaurentPoly& p);

// "num" if the denominator is 1, otherwise "(num)/(den)" with the numerator
// parenthesized only when it has several terms.
std::string to_string(const Scalar& s);

std::string to_string(const DimVector& d, char sep = ' ');

Json series_to_json(const Series& s);
Json omega_table_to_json(const std::vector<OmegaEntry>& table);
Json roots_to_json(const std::vector<std::pair<DimVector, RootClass>>& roots);
Json rootsystem_to_json(const RootSystemD& rs);
Json mckay_to_json(const McKayQuiver& q);
Json check_report_to_json(const CheckReport& r);

} // namespace ddt
