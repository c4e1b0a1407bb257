#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace schaefer {

// Satisfaction fractions, distances and bounds are exact rationals; no
// floating point anywhere in results or reports.
using Fraction = boost::rational<std::int64_t>;

// Renders as "numerator/denominator", e.g. "1/2", "0/1", "1/1".
std::string to_string(const Fraction& f);

// Accepts "3/4" as well as bare integers like "1".
Fraction parse_fraction(const std::string& text);

}  // namespace schaefer
