#pragma once

#include "latgrowth/polynomial.hpp"

#include <vector>

namespace latgrowth {

/// Complete factorization of a monic integer polynomial into monic
/// irreducible factors (with multiplicity), by modular factorization,
/// Hensel lifting and factor recombination.
std::vector<Polynomial> factor_monic(Polynomial const& f);

/// True when the monic polynomial f (degree >= 1) is irreducible over Q.
bool is_irreducible(Polynomial const& f);

/// Monic gcd over Q of two integer polynomials, returned with integer
/// coefficients when both inputs are monic.
Polynomial monic_gcd(Polynomial const& a, Polynomial const& b);

} // namespace latgrowth
