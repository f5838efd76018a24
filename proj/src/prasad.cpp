#include "latgrowth/prasad.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/json_util.hpp"
#include "latgrowth/modp.hpp"

#include <algorithm>
#include <exception>
#include <thread>

namespace latgrowth::prasad {

namespace {

bool is_prime_power(mpz_class const& q)
{
    if (q < 2)
        return false;
    std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
    for (unsigned long k = 1; k <= bits; ++k) {
        mpz_class r;
        if (mpz_root(r.get_mpz_t(), q.get_mpz_t(), k) != 0 && mpz_probab_prime_p(r.get_mpz_t(), 30) > 0)
            return true;
    }
    return false;
}

void check_signs(LieTypeData const& type, std::vector<int> const& signs)
{
    if (static_cast<int>(signs.size()) != type.rank)
        throw Error(ErrorKind::InvalidArgument, "sign vector length must equal the rank " + std::to_string(type.rank));
    for (int s : signs)
        if (s != 1 && s != -1)
            throw Error(ErrorKind::InvalidArgument, "signs must be +1 or -1");
}

mpq_class order_ratio(LieTypeData const& type, mpz_class const& q, std::vector<int> const& signs)
{
    if (!is_prime_power(q))
        throw Error(ErrorKind::InvalidArgument, q.get_str() + " is not a prime power");
    check_signs(type, signs);
    mpq_class ratio = 1;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        mpz_class qm;
        mpz_pow_ui(qm.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(type.exponents[i] + 1));
        ratio *= mpq_class(qm + signs[i], qm);
    }
    ratio.canonicalize();
    return ratio;
}

mpz_class product_tree(std::vector<mpz_class>& v, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 0)
        return 1;
    if (hi - lo == 1)
        return v[lo];
    if (hi - lo == 2)
        return v[lo] * v[lo + 1];
    std::size_t mid = lo + (hi - lo) / 2;
    return product_tree(v, lo, mid) * product_tree(v, mid, hi);
}

mpz_class product_tree(std::vector<mpz_class>& v)
{
    return product_tree(v, 0, v.size());
}

RealInterval ratio_interval(mpz_class const& num, mpz_class const& den, Precision prec)
{
    return RealInterval::from_integer(num, prec) / RealInterval::from_integer(den, prec);
}

RealInterval one(Precision prec)
{
    return RealInterval::from_long(1, prec);
}

} // namespace

mpz_class finite_group_order(LieTypeData const& type, mpz_class const& q, std::vector<int> const& signs)
{
    mpq_class ratio = order_ratio(type, q, signs);
    mpz_class qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(type.dim));
    mpq_class order = mpq_class(qd) * ratio;
    order.canonicalize();
    if (order.get_den() != 1)
        throw Error(ErrorKind::NonIntegralOrder, "order formula is not integral for " + type.name() + " at q = "
                                                     + q.get_str() + "; the sign vector does not fit the type");
    return order.get_num();
}

std::vector<int> split_signs(LieTypeData const& type)
{
    return std::vector<int>(static_cast<std::size_t>(type.rank), -1);
}

mpq_class local_factor(LieTypeData const& type, mpz_class const& q, std::vector<int> const& signs)
{
    finite_group_order(type, q, signs);
    mpq_class e = 1 / order_ratio(type, q, signs);
    e.canonicalize();
    return e;
}

PrimeSplitting prime_splitting(NumberField const& k, unsigned long p)
{
    if (p < 2 || mpz_probab_prime_p(mpz_class(p).get_mpz_t(), 30) == 0)
        throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
    PrimeSplitting s;
    s.p = p;
    mpz_class const& order_disc = k.order_disc();
    if (mpz_divisible_ui_p(order_disc.get_mpz_t(), p)) {
        s.ramified = true;
        if (k.disc_is_known()) {
            s.index_obstruction = !mpz_divisible_ui_p(k.disc().get_mpz_t(), p);
        } else {
            mpz_class p2 = mpz_class(p) * p;
            s.index_obstruction = mpz_divisible_p(order_disc.get_mpz_t(), p2.get_mpz_t()) != 0;
        }
        return s;
    }
    if (k.degree() == 1) {
        s.residue_degrees = {1};
        return s;
    }
    modp::Field F(p);
    s.residue_degrees = F.factor_degrees(F.reduce(k.min_poly()));
    return s;
}

std::vector<unsigned long> primes_up_to(unsigned long n)
{
    std::vector<unsigned long> out;
    if (n < 2)
        return out;
    std::vector<bool> composite(n + 1);
    for (unsigned long i = 2; i <= n; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (unsigned long j = i * i; j <= n; j += i)
            composite[j] = true;
    }
    return out;
}

RealInterval zeta_product(NumberField const& k, std::vector<int> const& exponents, unsigned long prime_bound,
                          int threads, Precision prec)
{
    if (exponents.empty())
        return one(prec);
    for (int s : exponents)
        if (s < 2)
            throw Error(ErrorKind::InvalidArgument, "zeta exponents must be >= 2");
    if (prime_bound < 2)
        throw Error(ErrorKind::InvalidArgument, "prime bound must be >= 2");
    threads = std::max(threads, 1);

    std::vector<unsigned long> primes = primes_up_to(prime_bound);
    constexpr std::size_t chunk_size = 1024;
    std::size_t chunks = (primes.size() + chunk_size - 1) / chunk_size;
    std::vector<mpz_class> chunk_num(chunks), chunk_den(chunks);
    std::vector<std::vector<PrimeSplitting>> ramified(chunks);

    auto work = [&](std::size_t c) {
        std::vector<mpz_class> num, den;
        std::size_t end = std::min(primes.size(), (c + 1) * chunk_size);
        for (std::size_t i = c * chunk_size; i < end; ++i) {
            PrimeSplitting sp = prime_splitting(k, primes[i]);
            if (sp.ramified) {
                ramified[c].push_back(sp);
                continue;
            }
            for (int f : sp.residue_degrees) {
                mpz_class q;
                mpz_ui_pow_ui(q.get_mpz_t(), primes[i], static_cast<unsigned long>(f));
                for (int s : exponents) {
                    mpz_class qs;
                    mpz_pow_ui(qs.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(s));
                    den.push_back(qs - 1);
                    num.push_back(std::move(qs));
                }
            }
        }
        chunk_num[c] = product_tree(num);
        chunk_den[c] = product_tree(den);
    };

    if (threads == 1 || chunks <= 1) {
        for (std::size_t c = 0; c < chunks; ++c)
            work(c);
    } else {
        std::vector<std::thread> pool;
        auto n = std::min(static_cast<std::size_t>(threads), chunks);
        std::vector<std::exception_ptr> failures(n);
        for (std::size_t w = 0; w < n; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t c = w; c < chunks; c += n)
                        work(c);
                } catch (...) {
                    failures[w] = std::current_exception();
                }
            });
        for (auto& t : pool)
            t.join();
        for (auto const& f : failures)
            if (f)
                std::rethrow_exception(f);
    }
    mpz_class num = product_tree(chunk_num);
    mpz_class den = product_tree(chunk_den);

    // Ramified primes: factor 1 below, (1 - p^-s)^-d above.
    std::vector<mpz_class> rnum, rden;
    for (auto const& list : ramified)
        for (auto const& sp : list)
            for (int s : exponents) {
                mpz_class ps;
                mpz_ui_pow_ui(ps.get_mpz_t(), sp.p, static_cast<unsigned long>(s));
                for (int i = 0; i < k.degree(); ++i) {
                    rnum.push_back(ps);
                    rden.push_back(ps - 1);
                }
            }
    mpz_class ram_num = product_tree(rnum), ram_den = product_tree(rden);

    // Tail over p > B: log prod (1 - p^-s)^-d <= 2d sum_{n > B} n^-s
    // <= 2d B^(1-s) / (s - 1).
    mpq_class tail_log = 0;
    for (int s : exponents) {
        mpz_class bs;
        mpz_ui_pow_ui(bs.get_mpz_t(), prime_bound, static_cast<unsigned long>(s - 1));
        tail_log += mpq_class(2 * k.degree(), 1) / (mpq_class(s - 1) * bs);
    }
    tail_log.canonicalize();
    RealInterval tail = exp(RealInterval::from_rational(tail_log, prec));

    RealInterval lower = ratio_interval(num, den, prec);
    RealInterval upper = ratio_interval(num * ram_num, den * ram_den, prec) * tail;
    RealInterval result(prec);
    mpfr_set(result.lower().get(), lower.lower().get(), MPFR_RNDD);
    mpfr_set(result.upper().get(), upper.upper().get(), MPFR_RNDU);
    return result;
}

RealInterval dedekind_zeta_partial(NumberField const& k, int s, unsigned long prime_bound, int threads, Precision prec)
{
    return zeta_product(k, {s}, prime_bound, threads, prec);
}

RealInterval euler_product_E(NumberField const& k, LieTypeData const& type, unsigned long prime_bound, int threads,
                             Precision prec)
{
    std::vector<int> s;
    for (int m : type.exponents)
        s.push_back(m + 1);
    return zeta_product(k, s, prime_bound, threads, prec);
}

namespace {

// prod_i m_i! / (2 pi)^(m_i + 1)
RealInterval archimedean_base(LieTypeData const& type, Precision prec)
{
    RealInterval two_pi = RealInterval::from_long(2, prec) * RealInterval::pi(prec);
    RealInterval a = one(prec);
    for (int m : type.exponents)
        a *= factorial(static_cast<unsigned long>(m), prec) / pow(two_pi, static_cast<unsigned long>(m + 1));
    return a;
}

RealInterval lambda_interval(std::optional<unsigned long> p0, int d, int dim, Precision prec)
{
    if (!p0)
        return one(prec);
    if (*p0 < 2 || mpz_probab_prime_p(mpz_class(*p0).get_mpz_t(), 30) == 0)
        throw Error(ErrorKind::InvalidArgument, "p0 = " + std::to_string(*p0) + " is not prime");
    mpz_class top;
    mpz_ui_pow_ui(top.get_mpz_t(), *p0, static_cast<unsigned long>(d) * static_cast<unsigned long>(dim));
    return hull(one(prec), RealInterval::from_integer(top, prec));
}

void assemble(CovolumeResult& r)
{
    r.value = r.disc_factor * r.extension_factor * r.arch_factor * r.euler_factor * r.lambda_bound;
}

} // namespace

CovolumeResult covolume(NumberField const& k, std::optional<pisot::QuadraticExtensionData> const& ext,
                        LieTypeData const& type, std::optional<unsigned long> p0, unsigned long prime_bound,
                        int threads)
{
    Precision prec = k.precision();
    int d = k.degree();
    CovolumeResult r;
    r.prime_bound_used = prime_bound;
    r.p0 = p0;
    r.disc_factor = pow(RealInterval::from_integer(k.abs_disc(), prec), mpq_class(type.dim, 2));
    if (type.s_param == 0) {
        r.extension_factor = one(prec);
    } else {
        if (!ext)
            throw Error(ErrorKind::InvalidArgument,
                        "outer form " + type.name() + " needs the quadratic extension l/k");
        if (!(ext->base->min_poly() == k.min_poly()))
            throw Error(ErrorKind::InvalidArgument, "extension data belongs to a different base field");
        mpz_class D = k.abs_disc();
        mpz_class rel = ext->disc_bound / (D * D);
        r.extension_factor = hull(one(prec), pow(RealInterval::from_integer(rel, prec), mpq_class(type.s_param, 2)));
    }
    r.arch_factor = pow(archimedean_base(type, prec), static_cast<unsigned long>(d));
    r.euler_factor = euler_product_E(k, type, prime_bound, threads, prec);
    if (type.s_param > 0) {
        // Twisted local factors 1/(1 + q^-(m+1)) lie between 1/zeta_v and 1,
        // so the split product E brackets them from both sides.
        RealInterval upper = r.euler_factor;
        mpfr_set(upper.lower().get(), upper.upper().get(), MPFR_RNDU);
        r.euler_factor = hull(one(prec) / upper, upper);
    }
    r.lambda_bound = lambda_interval(p0, d, type.dim, prec);
    assemble(r);
    return r;
}

CovolumeResult synthetic_covolume(pisot::SyntheticField const& field, LieTypeData const& type,
                                  std::optional<unsigned long> p0, std::optional<RealInterval> const& c0_prime,
                                  unsigned long prime_bound, int threads, Precision prec)
{
    int d = field.degree;
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "synthetic field needs a positive degree");
    CovolumeResult r;
    r.prime_bound_used = prime_bound;
    r.p0 = p0;
    RealInterval const& rd = field.rd_bound;
    r.disc_factor = pow(rd, mpq_class(static_cast<long>(d) * type.dim, 2));
    if (type.s_param == 0) {
        r.extension_factor = one(prec);
    } else {
        if (!c0_prime)
            throw Error(ErrorKind::InvalidArgument, "outer form " + type.name() + " needs a bound c0' on D_{l/k}^(1/d)");
        r.extension_factor =
            hull(one(prec), pow(*c0_prime, mpq_class(static_cast<long>(d) * type.s_param, 2)));
    }
    r.arch_factor = pow(archimedean_base(type, prec), static_cast<unsigned long>(d));

    // zeta_k(s) <= zeta(s)^d and zeta(s) <= zeta(2) = pi^2/6.
    auto Q = numfield::field_from_polynomial(Polynomial{0, 1}, prec);
    RealInterval pi = RealInterval::pi(prec);
    RealInterval zeta2 = sqr(pi) / RealInterval::from_long(6, prec);
    RealInterval top = one(prec);
    for (int m : type.exponents) {
        RealInterval z = dedekind_zeta_partial(Q, m + 1, std::min<unsigned long>(prime_bound, 100000), threads, prec);
        top *= pow(min(z, zeta2), static_cast<unsigned long>(d));
    }
    r.euler_factor = hull(one(prec), top);
    r.lambda_bound = lambda_interval(p0, d, type.dim, prec);
    assemble(r);
    return r;
}

RealInterval covolume_upper_c1(RealInterval const& c0, RealInterval const& c0_prime, LieTypeData const& type,
                               unsigned long p0)
{
    Precision prec = c0.precision();
    if (!one(prec).certainly_le(c0) || !one(prec).certainly_le(c0_prime))
        throw Error(ErrorKind::InvalidArgument, "c0 and c0' must be >= 1");
    if (p0 < 2 || mpz_probab_prime_p(mpz_class(p0).get_mpz_t(), 30) == 0)
        throw Error(ErrorKind::InvalidArgument, "p0 = " + std::to_string(p0) + " is not prime");
    RealInterval pi = RealInterval::pi(prec);
    RealInterval zeta2 = sqr(pi) / RealInterval::from_long(6, prec);
    mpz_class p0_dim;
    mpz_ui_pow_ui(p0_dim.get_mpz_t(), p0, static_cast<unsigned long>(type.dim));
    RealInterval c1 = pow(c0, mpq_class(type.dim, 2));
    if (type.s_param > 0)
        c1 *= pow(c0_prime, mpq_class(type.s_param, 2));
    c1 *= archimedean_base(type, prec);
    c1 *= RealInterval::from_integer(p0_dim, prec);
    c1 *= pow(zeta2, static_cast<unsigned long>(type.rank));
    return c1;
}

bool upper_within(RealInterval const& value, RealInterval const& bound)
{
    Precision prec = std::min(value.precision(), bound.precision());
    BigFloat slack(bound.precision() + 16);
    mpfr_set_ui_2exp(slack.get(), 1, -(prec - 8), MPFR_RNDU);
    mpfr_add_ui(slack.get(), slack.get(), 1, MPFR_RNDU);
    mpfr_mul(slack.get(), slack.get(), bound.upper().get(), MPFR_RNDU);
    return mpfr_lessequal_p(value.upper().get(), slack.get()) != 0;
}

nlohmann::ordered_json to_json(CovolumeResult const& r)
{
    nlohmann::ordered_json j;
    j["value"] = interval_json(r.value);
    j["disc_factor"] = interval_json(r.disc_factor);
    j["extension_factor"] = interval_json(r.extension_factor);
    j["arch_factor"] = interval_json(r.arch_factor);
    j["euler_factor"] = interval_json(r.euler_factor);
    j["lambda_bound"] = interval_json(r.lambda_bound);
    j["prime_bound_used"] = std::to_string(r.prime_bound_used);
    j["p0"] = r.p0 ? nlohmann::ordered_json(std::to_string(*r.p0)) : nlohmann::ordered_json(nullptr);
    return j;
}

} // namespace latgrowth::prasad
