#include "latgrowth/counting.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/json_util.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace latgrowth::counting {

namespace {

mpz_class upow(unsigned long base, unsigned long e)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

mpz_class zpow(mpz_class const& base, unsigned long e)
{
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

mpz_class ceil_of(BigFloat const& v)
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDU);
    return z;
}

mpz_class floor_of(BigFloat const& v)
{
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), v.get(), MPFR_RNDD);
    return z;
}

RealInterval real(double v, Precision prec)
{
    return RealInterval::from_rational(mpq_class(v), prec);
}

RealInterval log2_of(RealInterval const& v)
{
    return log(v) / log(RealInterval::from_long(2, v.precision()));
}

double read_number(nlohmann::json const& v, char const* key)
{
    if (v.is_number())
        return v.get<double>();
    if (v.is_string()) {
        auto const& s = v.get_ref<std::string const&>();
        std::size_t used = 0;
        double d = 0;
        try {
            d = std::stod(s, &used);
        } catch (std::exception const&) {
            used = 0;
        }
        if (used == s.size() && used > 0)
            return d;
    }
    throw Error(ErrorKind::InvalidArgument, fmt::format("BoundParams.{} must be a number", key));
}

} // namespace

void BoundParams::validate() const
{
    auto positive = [](double v, char const* name) {
        if (!(v > 0) || !std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, fmt::format("{} must be positive", name));
    };
    auto non_negative = [](double v, char const* name) {
        if (!(v >= 0) || !std::isfinite(v))
            throw Error(ErrorKind::InvalidArgument, fmt::format("{} must be non-negative", name));
    };
    positive(C, "C");
    non_negative(C1, "C1");
    positive(C2, "C2");
    non_negative(c4, "c4");
    positive(f1, "f1");
    if (s_embed < 1)
        throw Error(ErrorKind::InvalidArgument, "s_embed must be a positive integer");
}

BoundParams bound_params_from_json(nlohmann::json const& j, BoundParams base)
{
    if (!j.is_object())
        throw Error(ErrorKind::InvalidArgument, "BoundParams must be a JSON object");
    auto take = [&](char const* key, double& slot) {
        if (!j.contains(key))
            return;
        slot = read_number(j.at(key), key);
        std::erase(base.defaulted, std::string(key));
    };
    take("C", base.C);
    take("C1", base.C1);
    take("C2", base.C2);
    take("c4", base.c4);
    take("f1", base.f1);
    if (j.contains("s_embed")) {
        double s = read_number(j.at("s_embed"), "s_embed");
        if (s != std::floor(s) || s < 1 || s > 1e6)
            throw Error(ErrorKind::InvalidArgument, "s_embed must be a positive integer");
        base.s_embed = static_cast<int>(s);
        std::erase(base.defaulted, std::string("s_embed"));
    }
    for (auto const& [key, value] : j.items()) {
        static constexpr char const* known[] = {"C", "C1", "C2", "c4", "f1", "s_embed"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            throw Error(ErrorKind::InvalidArgument, fmt::format("unknown BoundParams key '{}'", key));
    }
    base.validate();
    return base;
}

nlohmann::ordered_json to_json(BoundParams const& p)
{
    nlohmann::ordered_json j;
    j["C"] = real_string(p.C);
    j["C1"] = real_string(p.C1);
    j["C2"] = real_string(p.C2);
    j["c4"] = real_string(p.c4);
    j["f1"] = real_string(p.f1);
    j["s_embed"] = std::to_string(p.s_embed);
    j["defaulted"] = p.defaulted;
    return j;
}

mpz_class gaussian_binomial(unsigned long n, unsigned long j, unsigned long p)
{
    if (j > n)
        throw Error(ErrorKind::InvalidArgument, "gaussian_binomial needs j <= n");
    if (p < 2)
        throw Error(ErrorKind::InvalidArgument, "gaussian_binomial needs p >= 2");
    mpz_class num = 1, den = 1;
    for (unsigned long i = 0; i < j; ++i) {
        num *= upow(p, n - i) - 1;
        den *= upow(p, j - i) - 1;
    }
    return num / den;
}

mpz_class subgroup_count_elem_abelian(unsigned long p, unsigned long d)
{
    mpz_class total = 0;
    for (unsigned long j = 0; j <= d; ++j)
        total += gaussian_binomial(d, j, p);
    return total;
}

mpz_class sn_composition_bound(mpz_class const& snN, mpz_class const& snQ, unsigned long n, unsigned long rkQ)
{
    if (snN < 1 || snQ < 1 || n < 1)
        throw Error(ErrorKind::InvalidArgument, "composition bound needs positive arguments");
    return snN * snQ * upow(n, rkQ);
}

int distinct_prime_count(unsigned long n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "nu(n) needs n >= 1");
    if (n > 1000000000000ul)
        throw Error(ErrorKind::InvalidArgument, "nu(n) is limited to n <= 10^12");
    int count = 0;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        ++count;
        while (n % p == 0)
            n /= p;
    }
    if (n > 1)
        ++count;
    return count;
}

mpz_class sn_rank_bound(unsigned long n, unsigned long r)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "sn_rank_bound needs n >= 1");
    return upow(n, static_cast<unsigned long>(distinct_prime_count(n)) + r + 1);
}

mpz_class rank_bound_gl(unsigned long s, unsigned long f)
{
    if (s < 1 || f < 1)
        throw Error(ErrorKind::InvalidArgument, "rank_bound_gl needs s, f >= 1");
    return mpz_class(2) * s * s * f;
}

mpz_class ceil_times_power(mpz_class const& factor, unsigned long x, double e)
{
    if (x < 1 || factor < 0 || !(e >= 0) || !std::isfinite(e))
        throw Error(ErrorKind::InvalidArgument, "ceil_times_power needs x >= 1, factor >= 0, e >= 0");
    if (x == 1 || e == 0 || factor == 0)
        return factor;

    // e = a/b exactly.  ceil(factor x^(a/b)) is the least m with
    // m^b >= factor^b x^a, which an integer root settles.
    mpq_class q(e);
    q.canonicalize();
    mpz_class a = q.get_num(), b = q.get_den();
    double bits = std::log2(static_cast<double>(x)) * a.get_d()
                  + static_cast<double>(mpz_sizeinbase(factor.get_mpz_t(), 2)) * b.get_d();
    if (b <= 4096 && bits < (1 << 24)) {
        unsigned long bu = b.get_ui();
        mpz_class v = zpow(factor, bu) * upow(x, a.get_ui());
        mpz_class m;
        int exact = mpz_root(m.get_mpz_t(), v.get_mpz_t(), bu);
        return exact ? m : m + 1;
    }

    for (Precision prec = 128; prec <= 16384; prec *= 2) {
        RealInterval v = RealInterval::from_integer(factor, prec)
                         * pow(RealInterval::from_long(static_cast<long>(x), prec), real(e, prec));
        mpz_class lo = ceil_of(v.lower()), hi = ceil_of(v.upper());
        if (lo == hi)
            return lo;
    }
    throw Error(ErrorKind::PrecisionExhausted, "ceiling of a real power could not be certified");
}

mpz_class conjugate_count_bound(unsigned long n, unsigned long x, BoundParams const& params,
                                std::vector<unsigned long> const& q_list, unsigned long dimG)
{
    if (n < 1 || x < 1)
        throw Error(ErrorKind::InvalidArgument, "conjugate_count_bound needs n, x >= 1");
    if (q_list.empty())
        throw Error(ErrorKind::InvalidArgument, "conjugate_count_bound needs a nonempty list of residue orders");
    mpz_class prod = 1;
    for (unsigned long q : q_list) {
        if (q < 2)
            throw Error(ErrorKind::InvalidArgument, "residue field orders are at least 2");
        prod *= q;
    }
    return ceil_times_power(mpz_class(n) * zpow(prod, dimG), x, params.C);
}

mpz_class level_index_bound(unsigned long n, unsigned long x, BoundParams const& params)
{
    if (n < 1 || x < 1)
        throw Error(ErrorKind::InvalidArgument, "level_index_bound needs n, x >= 1");
    return ceil_times_power(mpz_class(n), x, params.C);
}

GrowthReport lower_growth_assemble(RealInterval const& c1, lie::LieTypeData const& type, unsigned long p_prime,
                                   double c4, std::vector<long> const& degrees)
{
    if (p_prime < 2)
        throw Error(ErrorKind::InvalidArgument, "p' must be a prime");
    for (unsigned long t = 2; t * t <= p_prime; ++t)
        if (p_prime % t == 0)
            throw Error(ErrorKind::InvalidArgument, fmt::format("p' = {} is not prime", p_prime));
    if (!(c4 >= 0) || !std::isfinite(c4))
        throw Error(ErrorKind::InvalidArgument, "c4 must be non-negative");
    if (!c1.certainly_positive())
        throw Error(ErrorKind::InvalidArgument, "c1 must be positive");
    if (degrees.empty())
        throw Error(ErrorKind::InvalidArgument, "no degrees supplied");
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (degrees[i] < 1 || degrees[i] > (1l << 30))
            throw Error(ErrorKind::InvalidArgument, "degrees must lie in [1, 2^30]");
        if (i > 0 && degrees[i] <= degrees[i - 1])
            throw Error(ErrorKind::InvalidArgument, "degrees must be strictly increasing");
    }

    Precision prec = c1.precision();
    GrowthReport r;
    r.type_name = type.name();
    r.dim = type.dim;
    r.p_prime = p_prime;
    r.c4 = c4;
    r.c1 = c1;
    r.log2_c1 = log2_of(c1);
    RealInterval log2_p = log2_of(RealInterval::from_long(static_cast<long>(p_prime), prec));
    r.log2_c3 = log2_p * RealInterval::from_long(type.dim, prec);
    RealInterval log2_c1c3 = r.log2_c1 + r.log2_c3;
    if (!log2_c1c3.certainly_positive())
        throw Error(ErrorKind::InvalidArgument, "c1 c3 must exceed 1");

    mpq_class c4q(c4);
    std::optional<mpq_class> min_ratio;
    for (long d : degrees) {
        GrowthRow row;
        row.degree = d;
        RealInterval dd = RealInterval::from_long(d, prec);
        row.log2_covolume_bound = dd * r.log2_c1;
        if (row.log2_covolume_bound.upper_double() < 1e8)
            row.covolume_bound = pow(c1, static_cast<unsigned long>(d));
        row.subgroup_exponent = d * d / 4;
        row.index_exponent = static_cast<long>(type.dim) * d;
        mpz_class disc = c4q.get_num() * d;
        mpz_cdiv_q(disc.get_mpz_t(), disc.get_mpz_t(), c4q.get_den().get_mpz_t());
        if (!disc.fits_slong_p())
            throw Error(ErrorKind::InvalidArgument, "c4 d does not fit the row exponent");
        row.conjugacy_discount = disc.get_si();
        row.net_count_exponent = row.subgroup_exponent - row.conjugacy_discount;
        row.log2_x = dd * log2_c1c3;
        row.flagged = row.net_count_exponent <= 0;
        if (!row.flagged) {
            mpq_class ratio(row.net_count_exponent, mpz_class(d) * d);
            ratio.canonicalize();
            if (!min_ratio || ratio < *min_ratio)
                min_ratio = ratio;
        }
        r.rows.push_back(std::move(row));
    }
    if (!min_ratio)
        throw Error(ErrorKind::EmptyReport, "the conjugacy discount leaves no row with a positive count");

    r.c2_exponent = *min_ratio;
    r.c2 = pow(RealInterval::from_long(static_cast<long>(p_prime), prec), r.c2_exponent);
    RealInterval log2_c2 = RealInterval::from_rational(r.c2_exponent, prec) * log2_p;
    r.a = log2_c2 / sqr(log2_c1c3);
    r.gamma = lie::gamma_H(type.coxeter, prec);
    return r;
}

nlohmann::ordered_json to_json(GrowthReport const& r)
{
    nlohmann::ordered_json j;
    j["type"] = r.type_name;
    j["dim"] = std::to_string(r.dim);
    j["p_prime"] = std::to_string(r.p_prime);
    j["c4"] = real_string(r.c4);
    j["c1"] = interval_json(r.c1);
    j["log2_c1"] = interval_json(r.log2_c1);
    j["log2_c3"] = interval_json(r.log2_c3);
    auto rows = nlohmann::ordered_json::array();
    for (auto const& row : r.rows) {
        nlohmann::ordered_json o;
        o["degree"] = std::to_string(row.degree);
        o["log2_covolume_bound"] = interval_json(row.log2_covolume_bound);
        o["covolume_bound"] = row.covolume_bound ? interval_json(*row.covolume_bound) : nlohmann::ordered_json();
        o["subgroup_exponent"] = std::to_string(row.subgroup_exponent);
        o["index_bound"] = fmt::format("{}^{}", r.p_prime, row.index_exponent);
        o["conjugacy_discount"] = std::to_string(row.conjugacy_discount);
        o["net_count_exponent"] = std::to_string(row.net_count_exponent);
        o["log2_x"] = interval_json(row.log2_x);
        o["flagged"] = row.flagged;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    j["c2_exponent"] = rational_string(r.c2_exponent);
    j["c2"] = interval_json(r.c2);
    j["a"] = interval_json(r.a);
    j["gamma"] = interval_json(r.gamma);
    return j;
}

std::string to_csv(GrowthReport const& r)
{
    std::string out = "degree,log2_covolume_bound_lo,log2_covolume_bound_hi,subgroup_exponent,index_bound,"
                      "conjugacy_discount,net_count_exponent,log2_x_lo,log2_x_hi,flagged\n";
    for (auto const& row : r.rows) {
        auto [clo, chi] = row.log2_covolume_bound.to_decimal(kJsonDigits);
        auto [xlo, xhi] = row.log2_x.to_decimal(kJsonDigits);
        out += fmt::format("{},{},{},{},{}^{},{},{},{},{},{}\n", row.degree, clo, chi, row.subgroup_exponent,
                           r.p_prime, row.index_exponent, row.conjugacy_discount, row.net_count_exponent, xlo, xhi,
                           row.flagged ? "true" : "false");
    }
    return out;
}

UpperBreakdown upper_growth_assemble(unsigned long x, BoundParams const& params,
                                     std::vector<ResidueEntry> const& residue_data, Precision prec)
{
    params.validate();
    if (x < 2)
        throw Error(ErrorKind::InvalidArgument, "x must be at least 2");

    UpperBreakdown u;
    u.x = x;
    unsigned long s = static_cast<unsigned long>(params.s_embed);
    RealInterval log2x = log2_of(RealInterval::from_long(static_cast<long>(x), prec));

    mpz_class prod = 1;
    u.rank_T = 0;
    for (auto const& [p, f] : residue_data) {
        if (p < 2 || f < 1)
            throw Error(ErrorKind::InvalidArgument, "residue data needs p >= 2 and f >= 1");
        prod *= upow(p, f);
        u.rank_T += rank_bound_gl(s, f);
    }
    if (prod > 1) {
        // prod <= x^(a/b)  iff  prod^b <= x^a
        mpq_class c1q(params.C1);
        c1q.canonicalize();
        mpz_class a = c1q.get_num(), b = c1q.get_den();
        double bits = std::log2(static_cast<double>(x)) * a.get_d()
                      + static_cast<double>(mpz_sizeinbase(prod.get_mpz_t(), 2)) * b.get_d();
        bool within;
        if (b <= 4096 && bits < (1 << 24)) {
            within = zpow(prod, b.get_ui()) <= upow(x, a.get_ui());
        } else {
            RealInterval lhs = log2_of(RealInterval::from_integer(prod, prec));
            RealInterval rhs = real(params.C1, prec) * log2x;
            if (lhs.certainly_le(rhs))
                within = true;
            else if (rhs.certainly_less(lhs))
                within = false;
            else
                throw Error(ErrorKind::PrecisionExhausted, "residue budget comparison is undecided");
        }
        if (!within)
            throw Error(ErrorKind::ResidueBudgetExceeded,
                        fmt::format("prod p^f = {} exceeds x^C1 with x = {}, C1 = {}", prod.get_str(), x,
                                    real_string(params.C1)));
    }

    u.nu = distinct_prime_count(x);
    u.e_Q = mpz_class(u.nu) + u.rank_T + 1;

    // [f1 log x]: a straddling enclosure takes the larger floor.
    RealInterval f1_log = real(params.f1, prec) * log2x;
    u.rank_T1 = mpz_class(2) * s * s * floor_of(f1_log.upper());

    RealInterval one = RealInterval::from_long(1, prec);
    u.e_N = real(params.f1, prec) + RealInterval::from_long(u.nu, prec) + RealInterval::from_integer(u.rank_T1, prec)
            + one;
    u.e_Lambda = u.e_N + RealInterval::from_integer(u.e_Q + u.rank_T, prec);
    RealInterval c2 = real(params.C2, prec);
    u.e_norm = (sqr(c2) + c2) * log2x;
    u.B = u.e_Lambda + u.e_norm;
    u.B_over_log2x = u.B / log2x;
    return u;
}

nlohmann::ordered_json to_json(UpperBreakdown const& u)
{
    nlohmann::ordered_json j;
    j["x"] = std::to_string(u.x);
    j["nu"] = std::to_string(u.nu);
    j["rank_T"] = integer_string(u.rank_T);
    j["e_Q"] = integer_string(u.e_Q);
    j["rank_T1"] = integer_string(u.rank_T1);
    j["e_N"] = interval_json(u.e_N);
    j["e_Lambda"] = interval_json(u.e_Lambda);
    j["e_norm"] = interval_json(u.e_norm);
    j["B"] = interval_json(u.B);
    j["B_over_log2x"] = interval_json(u.B_over_log2x);
    return j;
}

} // namespace latgrowth::counting
