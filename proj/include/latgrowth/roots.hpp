#pragma once

// Certified isolation of all complex roots of a squarefree monic integer
// polynomial.
//
// Approximations come from the Aberth-Ehrlich iteration (long double, then
// MPFR).  Certification uses the Gerschgorin discs of the Weierstrass
// companion matrix: with W_i = f(z_i) / prod_{j != i} (z_i - z_j), every
// connected component of the union of discs |z - z_i| <= n |W_i| holds as
// many roots as discs.  When the discs are pairwise disjoint each holds
// exactly one root; a disc centred on the real axis then holds a real root.

#include "latgrowth/interval.hpp"
#include "latgrowth/polynomial.hpp"

#include <vector>

namespace latgrowth {

struct RootEnclosures {
    /// Real roots in decreasing order.
    std::vector<RealInterval> real;
    /// One representative of each conjugate pair, with positive imaginary
    /// part; ordered by decreasing real part.
    std::vector<ComplexBox> complex;
    Precision precision = kDefaultPrecision;
};

/// Enclosures at working precision `prec`, doubled up to `max_prec` until
/// the inclusion discs separate.  Throws PrecisionExhausted otherwise.
RootEnclosures isolate_roots(Polynomial const& f, Precision prec,
                             Precision max_prec = Precision(1) << 14);

/// Recomputes at `prec` and intersects with `previous`, so the result is
/// nested inside it.
RootEnclosures refine_roots(Polynomial const& f, RootEnclosures const& previous, Precision prec);

} // namespace latgrowth
