#include "latgrowth/factor.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/modp.hpp"

#include <algorithm>
#include <set>

namespace latgrowth {

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

ZPoly zreduce(ZPoly f, mpz_class const& m)
{
    for (auto& c : f)
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    ztrim(f);
    return f;
}

ZPoly zadd(ZPoly const& a, ZPoly const& b, mpz_class const& m)
{
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] += b[i];
    return zreduce(std::move(c), m);
}

ZPoly zsub(ZPoly const& a, ZPoly const& b, mpz_class const& m)
{
    ZPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] -= b[i];
    return zreduce(std::move(c), m);
}

ZPoly zmul(ZPoly const& a, ZPoly const& b, mpz_class const& m)
{
    if (a.empty() || b.empty())
        return {};
    ZPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return zreduce(std::move(c), m);
}

// Division by a monic polynomial modulo m.
void zdivrem(ZPoly const& a, ZPoly const& b, mpz_class const& m, ZPoly& q, ZPoly& r)
{
    r = zreduce(a, m);
    int db = static_cast<int>(b.size()) - 1;
    q.assign(std::max(0, static_cast<int>(r.size()) - 1 - db + 1), 0);
    while (static_cast<int>(r.size()) - 1 >= db) {
        int shift = static_cast<int>(r.size()) - 1 - db;
        mpz_class c = r.back();
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + i] -= c * b[i];
        r = zreduce(std::move(r), m);
    }
    ztrim(q);
}

ZPoly from_word(modp::PolyP const& f)
{
    ZPoly z;
    for (auto c : f)
        z.emplace_back(static_cast<unsigned long>(c));
    return z;
}

// One quadratic Hensel step: f = g h (mod m), s g + t h = 1 (mod m), g and h
// monic; on return the same relations hold modulo m^2.
void hensel_step(ZPoly const& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, mpz_class const& m)
{
    mpz_class m2 = m * m;
    ZPoly e = zsub(f, zmul(g, h, m2), m2);
    ZPoly q, r;
    zdivrem(zmul(s, e, m2), h, m2, q, r);
    ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
    ZPoly h2 = zadd(h, r, m2);
    ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{1}, m2);
    ZPoly c, d;
    zdivrem(zmul(s, b, m2), h2, m2, c, d);
    s = zsub(s, d, m2);
    t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
    g = std::move(g2);
    h = std::move(h2);
}

mpz_class coefficient_bound(Polynomial const& f)
{
    mpz_class sumsq = 0;
    for (auto const& c : f.coefficients())
        sumsq += c * c;
    mpz_class norm;
    mpz_sqrt(norm.get_mpz_t(), sumsq.get_mpz_t());
    norm += 1;
    mpz_class two_d;
    mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
    return two_d * norm;
}

Polynomial symmetric(ZPoly const& g, mpz_class const& m)
{
    mpz_class half = m / 2;
    std::vector<mpz_class> c(g.begin(), g.end());
    for (auto& x : c)
        if (x > half)
            x -= m;
    return Polynomial(std::move(c));
}

bool divides(Polynomial const& g, Polynomial const& f, Polynomial* quotient)
{
    QPoly r = rem(to_qpoly(f), to_qpoly(g));
    if (!r.empty())
        return false;
    if (quotient) {
        QPoly q = divexact(to_qpoly(f), to_qpoly(g));
        std::vector<mpz_class> c;
        for (auto& x : q) {
            x.canonicalize();
            if (x.get_den() != 1)
                return false;
            c.push_back(x.get_num());
        }
        *quotient = Polynomial(std::move(c));
    }
    return true;
}

std::vector<unsigned long> const& small_primes()
{
    static std::vector<unsigned long> const primes = [] {
        std::vector<unsigned long> ps;
        for (unsigned long n = 2; ps.size() < 60; ++n) {
            bool prime = true;
            for (unsigned long d = 2; d * d <= n; ++d)
                if (n % d == 0) {
                    prime = false;
                    break;
                }
            if (prime)
                ps.push_back(n);
        }
        return ps;
    }();
    return primes;
}

// f monic, squarefree over Q, degree >= 2.
std::vector<Polynomial> factor_squarefree(Polynomial const& f)
{
    int d = f.degree();
    if (d <= 1)
        return {f};

    // Possible degrees of a rational factor, intersected over several primes.
    std::set<int> feasible;
    for (int i = 0; i <= d; ++i)
        feasible.insert(i);
    unsigned long best_p = 0;
    std::vector<modp::PolyP> best_factors;
    int good_primes = 0;
    for (unsigned long p : small_primes()) {
        modp::Field F(p);
        modp::PolyP fp = F.reduce(f);
        if (!F.is_squarefree(fp))
            continue;
        auto factors = F.factor_squarefree(fp);
        if (factors.size() == 1)
            return {f};
        std::set<int> sums{0};
        for (auto const& g : factors) {
            std::set<int> next = sums;
            for (int s : sums)
                next.insert(s + modp::degree(g));
            sums = std::move(next);
        }
        std::set<int> meet;
        std::set_intersection(feasible.begin(), feasible.end(), sums.begin(), sums.end(),
                              std::inserter(meet, meet.begin()));
        feasible = std::move(meet);
        if (feasible.size() <= 2)
            return {f};
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (++good_primes >= 6)
            break;
    }
    if (best_p == 0)
        throw Error(ErrorKind::InvalidArgument, "no good prime found for factorization of " + f.to_string());

    // Lift every local factor g_i against f / g_i.
    mpz_class target = 2 * coefficient_bound(f) + 1;
    modp::Field F(best_p);
    modp::PolyP fp = F.reduce(f);
    ZPoly fz(f.coefficients().begin(), f.coefficients().end());
    std::vector<ZPoly> lifted;
    mpz_class modulus;
    for (auto const& gi : best_factors) {
        modp::PolyP hi, rr;
        F.divmod(fp, gi, hi, rr);
        modp::PolyP s, t;
        F.xgcd(gi, hi, s, t);
        ZPoly g = from_word(gi), h = from_word(hi), sz = from_word(s), tz = from_word(t);
        mpz_class m = best_p;
        while (m < target) {
            hensel_step(fz, g, h, sz, tz, m);
            m *= m;
        }
        modulus = m;
        lifted.push_back(std::move(g));
    }

    std::vector<Polynomial> found;
    Polynomial rest = f;
    std::vector<ZPoly> local = lifted;
    std::size_t size = 1;
    while (2 * size <= local.size()) {
        bool hit = false;
        std::vector<int> pick(size);
        for (std::size_t i = 0; i < size; ++i)
            pick[i] = static_cast<int>(i);
        for (;;) {
            ZPoly prod{1};
            for (int i : pick)
                prod = zmul(prod, local[i], modulus);
            Polynomial cand = symmetric(prod, modulus);
            Polynomial quotient;
            if (divides(cand, rest, &quotient)) {
                found.push_back(cand);
                rest = quotient;
                std::vector<ZPoly> remaining;
                for (std::size_t i = 0; i < local.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), static_cast<int>(i)) == pick.end())
                        remaining.push_back(local[i]);
                local = std::move(remaining);
                hit = true;
                break;
            }
            // next combination
            int k = static_cast<int>(size) - 1;
            while (k >= 0 && pick[k] == static_cast<int>(local.size() - size) + k)
                --k;
            if (k < 0)
                break;
            ++pick[k];
            for (std::size_t j = k + 1; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
        if (!hit)
            ++size;
    }
    if (rest.degree() > 0)
        found.push_back(rest);
    return found;
}

} // namespace

Polynomial monic_gcd(Polynomial const& a, Polynomial const& b)
{
    QPoly x = to_qpoly(a), y = to_qpoly(b);
    trim(x);
    trim(y);
    while (!y.empty()) {
        QPoly r = rem(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty())
        return {};
    mpq_class lead = x.back();
    std::vector<mpz_class> c;
    for (auto& v : x) {
        mpq_class q = v / lead;
        q.canonicalize();
        if (q.get_den() != 1)
            throw Error(ErrorKind::InvalidArgument, "gcd of monic integer polynomials is not integral");
        c.push_back(q.get_num());
    }
    return Polynomial(std::move(c));
}

std::vector<Polynomial> factor_monic(Polynomial const& f)
{
    if (!f.is_monic())
        throw Error(ErrorKind::InvalidArgument, "factor_monic requires a monic polynomial");
    if (f.degree() <= 1)
        return f.degree() == 1 ? std::vector<Polynomial>{f} : std::vector<Polynomial>{};
    Polynomial g = monic_gcd(f, f.derivative());
    if (g.degree() > 0) {
        Polynomial q;
        divides(g, f, &q);
        auto a = factor_monic(g);
        auto b = factor_monic(q);
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end(), [](Polynomial const& x, Polynomial const& y) {
            if (x.degree() != y.degree())
                return x.degree() < y.degree();
            return x.to_string() < y.to_string();
        });
        return a;
    }
    auto factors = factor_squarefree(f);
    std::sort(factors.begin(), factors.end(), [](Polynomial const& x, Polynomial const& y) {
        if (x.degree() != y.degree())
            return x.degree() < y.degree();
        return x.to_string() < y.to_string();
    });
    return factors;
}

bool is_irreducible(Polynomial const& f)
{
    if (f.degree() < 1)
        return false;
    return factor_monic(f).size() == 1;
}

} // namespace latgrowth
