#pragma once

// Conventions for machine-readable output: every number is a decimal string,
// intervals are [lo, hi] pairs rounded outward, exact rationals are "num/den".

#include "latgrowth/interval.hpp"

#include "json.hpp"

#include <string>

namespace latgrowth {

inline constexpr int kJsonDigits = 20;

nlohmann::ordered_json interval_json(RealInterval const& x, int digits = kJsonDigits);
std::string rational_string(mpq_class const& q);
std::string integer_string(mpz_class const& z);
/// Shortest round-trip text of a double, as a string.
std::string real_string(double v);

} // namespace latgrowth
