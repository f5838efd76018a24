#pragma once

// Covolumes of principal arithmetic subgroups: orders of the finite groups
// of Lie type, local factors, prime splitting, truncated Euler products with
// certified tails, and the resulting covolume enclosures.

#include "latgrowth/interval.hpp"
#include "latgrowth/lie.hpp"
#include "latgrowth/numfield.hpp"
#include "latgrowth/pisot_tower.hpp"

#include "json.hpp"

#include <optional>
#include <vector>

namespace latgrowth::prasad {

using lie::LieTypeData;
using numfield::NumberField;

/// q^dim * prod_i (1 + s_i q^-(m_i + 1)) for a prime power q >= 2 and signs
/// s_i in {-1, +1}; throws NonIntegralOrder if the value is not an integer.
mpz_class finite_group_order(LieTypeData const& type, mpz_class const& q, std::vector<int> const& signs);
/// All signs -1: the split group.
std::vector<int> split_signs(LieTypeData const& type);

/// q^dim / finite_group_order = 1 / prod_i (1 + s_i q^-(m_i + 1)).
mpq_class local_factor(LieTypeData const& type, mpz_class const& q, std::vector<int> const& signs);

struct PrimeSplitting {
    unsigned long p = 0;
    /// Residue degrees f_v (ascending); empty when ramified.
    std::vector<int> residue_degrees;
    /// True when p divides disc(Z[theta]); such primes are bracketed.
    bool ramified = false;
    /// p divides disc(Z[theta]) but may be unramified in k: the splitting
    /// cannot be read off the defining polynomial.
    bool index_obstruction = false;
};

PrimeSplitting prime_splitting(NumberField const& k, unsigned long p);

/// Primes <= n, ascending.
std::vector<unsigned long> primes_up_to(unsigned long n);

/// Enclosure of prod_i zeta_k(s_i) (all s_i >= 2) from the exact Euler
/// product over p <= prime_bound and a certified tail.  The truncated part is
/// an exact rational assembled in a fixed order, so the result does not
/// depend on `threads`.
RealInterval zeta_product(NumberField const& k, std::vector<int> const& exponents, unsigned long prime_bound,
                          int threads = 1, Precision prec = kDefaultPrecision);

RealInterval dedekind_zeta_partial(NumberField const& k, int s, unsigned long prime_bound, int threads = 1,
                                   Precision prec = kDefaultPrecision);

/// prod_v e_v for the split form: prod_i zeta_k(m_i + 1).
RealInterval euler_product_E(NumberField const& k, LieTypeData const& type, unsigned long prime_bound,
                             int threads = 1, Precision prec = kDefaultPrecision);

struct CovolumeResult {
    RealInterval value;
    /// D_k^(dim/2).
    RealInterval disc_factor;
    /// (D_l / D_k^[l:k])^(s/2); [1, 1] for inner forms.
    RealInterval extension_factor;
    /// (prod_i m_i! / (2 pi)^(m_i + 1))^d.
    RealInterval arch_factor;
    RealInterval euler_factor;
    /// [1, p0^(d dim)] with a distinguished place over p0, else [1, 1].
    RealInterval lambda_bound;
    unsigned long prime_bound_used = 0;
    std::optional<unsigned long> p0;
};

/// Covolume of a principal arithmetic subgroup of a group of the given type
/// over k.  Outer forms (s > 0) need the quadratic extension l = k[sqrt(alpha)];
/// their Euler factor is bracketed by [1/E, E] with E the split product.
CovolumeResult covolume(NumberField const& k, std::optional<pisot::QuadraticExtensionData> const& ext,
                        LieTypeData const& type, std::optional<unsigned long> p0, unsigned long prime_bound,
                        int threads = 1);

/// Covolume bound for a field known only through its degree and root
/// discriminant: D = rd^d and E in [1, prod_i min(zeta(m_i+1), zeta(2))^d].
/// c0_prime bounds D_{l/k}^(1/d) for outer forms.
CovolumeResult synthetic_covolume(pisot::SyntheticField const& field, LieTypeData const& type,
                                  std::optional<unsigned long> p0, std::optional<RealInterval> const& c0_prime,
                                  unsigned long prime_bound, int threads = 1,
                                  Precision prec = kDefaultPrecision);

/// c1 = c0^(dim/2) c0'^(s/2) prod_i m_i!/(2 pi)^(m_i+1) p0^dim (pi^2/6)^r.
RealInterval covolume_upper_c1(RealInterval const& c0, RealInterval const& c0_prime, LieTypeData const& type,
                               unsigned long p0);

/// Upper endpoints compared with a relative slack of 2^-(prec - 8), enough
/// to absorb the rounding of the two evaluation orders.
bool upper_within(RealInterval const& value, RealInterval const& bound);

nlohmann::ordered_json to_json(CovolumeResult const& r);

} // namespace latgrowth::prasad
