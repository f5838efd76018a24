#pragma once

// Subgroup-growth calculators.
//
// Exact counts (Gaussian binomials, subgroups of elementary abelian groups),
// the parameterized index/rank/composition bounds, and the assembly of the
// lower and upper growth constants.  Logarithms are base 2 throughout.

#include "latgrowth/interval.hpp"
#include "latgrowth/lie.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latgrowth::counting {

/// Constants that are proved to exist but never made explicit.  Every report
/// echoes them together with the list of fields left at their defaults.
struct BoundParams {
    double C = 1;
    double C1 = 1;
    double C2 = 1;
    double c4 = 1;
    double f1 = 1;
    int s_embed = 2;

    /// Names of fields that were not supplied explicitly.
    std::vector<std::string> defaulted{"C", "C1", "C2", "c4", "f1", "s_embed"};

    /// C, C2, f1 and s_embed must be positive; C1 and c4 may be zero.
    void validate() const;
};

/// Reads {C, C1, C2, c4, f1, s_embed}; values may be numbers or decimal
/// strings.  Missing keys keep the values of `base`.
BoundParams bound_params_from_json(nlohmann::json const& j, BoundParams base = {});
nlohmann::ordered_json to_json(BoundParams const& p);

/// Number of j-dimensional subspaces of F_p^n.
mpz_class gaussian_binomial(unsigned long n, unsigned long j, unsigned long p);
/// Number of subgroups of (Z/p)^d.
mpz_class subgroup_count_elem_abelian(unsigned long p, unsigned long d);

/// snN * snQ * n^rkQ
mpz_class sn_composition_bound(mpz_class const& snN, mpz_class const& snQ, unsigned long n, unsigned long rkQ);
/// n^(nu(n) + r + 1), nu = number of distinct prime divisors.
mpz_class sn_rank_bound(unsigned long n, unsigned long r);
/// 2 s^2 f, a strict upper bound for the rank of GL_s(F_{p^f}).
mpz_class rank_bound_gl(unsigned long s, unsigned long f);
/// Distinct prime divisors of n by trial division (n <= 10^12).
int distinct_prime_count(unsigned long n);

/// ceil(n x^C (prod q)^dimG)
mpz_class conjugate_count_bound(unsigned long n, unsigned long x, BoundParams const& params,
                                std::vector<unsigned long> const& q_list, unsigned long dimG);
/// ceil(x^C n)
mpz_class level_index_bound(unsigned long n, unsigned long x, BoundParams const& params);

/// ceil(factor * x^e), exact whenever the exponent has a small denominator.
mpz_class ceil_times_power(mpz_class const& factor, unsigned long x, double e);

struct GrowthRow {
    long degree = 0;
    RealInterval log2_covolume_bound;           ///< d log c1
    std::optional<RealInterval> covolume_bound; ///< c1^d when representable
    long subgroup_exponent = 0;                 ///< [d^2/4]
    long index_exponent = 0;                    ///< c3^d = p'^index_exponent
    long conjugacy_discount = 0;                ///< ceil(c4 d)
    long net_count_exponent = 0;
    RealInterval log2_x; ///< d log(c1 c3): the x at which the row applies
    bool flagged = false;
};

struct GrowthReport {
    std::string type_name;
    int dim = 0;
    unsigned long p_prime = 0;
    double c4 = 0;
    RealInterval c1;
    RealInterval log2_c1;
    RealInterval log2_c3;
    std::vector<GrowthRow> rows;
    /// c2 = p'^c2_exponent
    mpq_class c2_exponent;
    RealInterval c2;
    RealInterval a;
    RealInterval gamma;
};

/// Raises EmptyReport when every row has a non-positive net exponent.
GrowthReport lower_growth_assemble(RealInterval const& c1, lie::LieTypeData const& type, unsigned long p_prime,
                                   double c4, std::vector<long> const& degrees);

nlohmann::ordered_json to_json(GrowthReport const& r);
std::string to_csv(GrowthReport const& r);

struct ResidueEntry {
    unsigned long p = 0;
    unsigned long f = 0;
};

/// Exponent chain for s_x(Lambda) <= x^B.
struct UpperBreakdown {
    unsigned long x = 0;
    int nu = 0;
    mpz_class rank_T;    ///< sum 2 s^2 f over the residue data
    mpz_class e_Q;       ///< nu + rank_T + 1
    mpz_class rank_T1;   ///< 2 s^2 [f1 log x]
    RealInterval e_N;    ///< f1 + nu + rank_T1 + 1
    RealInterval e_Lambda; ///< e_N + e_Q + rank_T
    RealInterval e_norm; ///< (C2^2 + C2) log x
    RealInterval B;
    RealInterval B_over_log2x;
};

/// Raises ResidueBudgetExceeded when prod p^f > x^C1.
UpperBreakdown upper_growth_assemble(unsigned long x, BoundParams const& params,
                                     std::vector<ResidueEntry> const& residue_data,
                                     Precision prec = kDefaultPrecision);

nlohmann::ordered_json to_json(UpperBreakdown const& u);

} // namespace latgrowth::counting
