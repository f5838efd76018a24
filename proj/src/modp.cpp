#include "latgrowth/modp.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>

namespace latgrowth::modp {

namespace {

void trim(PolyP& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

} // namespace

Field::Field(Word p) : p_(p)
{
    if (p < 2 || p >= (Word(1) << 62))
        throw Error(ErrorKind::InvalidArgument, "modulus out of range");
}

Word Field::pow(Word a, Word e) const
{
    Word r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1)
            r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

Word Field::inv(Word a) const
{
    if (a % p_ == 0)
        throw Error(ErrorKind::InvalidArgument, "inverse of zero mod p");
    return pow(a, p_ - 2);
}

PolyP Field::reduce(Polynomial const& f) const
{
    PolyP r;
    r.reserve(f.coefficients().size());
    mpz_class t;
    for (auto const& c : f.coefficients()) {
        mpz_fdiv_r_ui(t.get_mpz_t(), c.get_mpz_t(), p_);
        r.push_back(t.get_ui());
    }
    trim(r);
    return r;
}

PolyP Field::add(PolyP const& a, PolyP const& b) const
{
    PolyP c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = add(c[i], b[i]);
    trim(c);
    return c;
}

PolyP Field::sub(PolyP const& a, PolyP const& b) const
{
    PolyP c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        c[i] = sub(c[i], b[i]);
    trim(c);
    return c;
}

PolyP Field::mul(PolyP const& a, PolyP const& b) const
{
    if (a.empty() || b.empty())
        return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = add(c[i + j], mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

PolyP Field::scale(PolyP const& a, Word c) const
{
    PolyP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = mul(a[i], c);
    trim(r);
    return r;
}

void Field::divmod(PolyP const& a, PolyP const& b, PolyP& q, PolyP& r) const
{
    if (b.empty())
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero mod p");
    r = a;
    trim(r);
    int db = degree(b);
    q.assign(std::max(0, degree(r) - db + 1), 0);
    Word lead_inv = inv(b.back());
    while (degree(r) >= db) {
        int shift = degree(r) - db;
        Word c = mul(r.back(), lead_inv);
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            r[shift + i] = sub(r[shift + i], mul(c, b[i]));
        trim(r);
    }
    trim(q);
}

PolyP Field::rem(PolyP const& a, PolyP const& b) const
{
    PolyP q, r;
    divmod(a, b, q, r);
    return r;
}

PolyP Field::monic(PolyP const& a) const
{
    if (a.empty())
        return a;
    return scale(a, inv(a.back()));
}

PolyP Field::gcd(PolyP a, PolyP b) const
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyP r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

PolyP Field::xgcd(PolyP const& a, PolyP const& b, PolyP& s, PolyP& t) const
{
    PolyP r0 = a, r1 = b;
    trim(r0);
    trim(r1);
    PolyP s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        PolyP q, r;
        divmod(r0, r1, q, r);
        PolyP s2 = sub(s0, mul(q, s1));
        PolyP t2 = sub(t0, mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.empty()) {
        s = {};
        t = {};
        return {};
    }
    Word li = inv(r0.back());
    s = scale(s0, li);
    t = scale(t0, li);
    return scale(r0, li);
}

PolyP Field::derivative(PolyP const& a) const
{
    PolyP d;
    for (std::size_t i = 1; i < a.size(); ++i)
        d.push_back(mul(a[i], static_cast<Word>(i % p_)));
    trim(d);
    return d;
}

PolyP Field::powmod(PolyP const& base, mpz_class const& e, PolyP const& m) const
{
    PolyP result = rem(PolyP{1}, m);
    PolyP b = rem(base, m);
    std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0)
        return result;
    for (std::size_t i = bits; i-- > 0;) {
        result = rem(mul(result, result), m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = rem(mul(result, b), m);
    }
    return result;
}

bool Field::is_squarefree(PolyP const& f) const
{
    if (degree(f) <= 0)
        return true;
    PolyP d = derivative(f);
    if (d.empty())
        return false;
    return degree(gcd(f, d)) == 0;
}

std::vector<std::pair<int, PolyP>> Field::distinct_degree(PolyP const& f0) const
{
    std::vector<std::pair<int, PolyP>> out;
    PolyP f = monic(f0);
    PolyP x{0, 1};
    PolyP h = rem(x, f);
    mpz_class p(static_cast<unsigned long>(p_));
    for (int i = 1; 2 * i <= degree(f); ++i) {
        h = powmod(h, p, f);
        PolyP g = gcd(sub(h, x), f);
        if (degree(g) > 0) {
            out.emplace_back(i, g);
            PolyP q, r;
            divmod(f, g, q, r);
            f = monic(q);
            h = rem(h, f);
        }
    }
    if (degree(f) > 0)
        out.emplace_back(degree(f), f);
    return out;
}

std::vector<PolyP> Field::equal_degree(PolyP const& g0, int deg, std::mt19937_64& rng) const
{
    PolyP g = monic(g0);
    int n = degree(g);
    if (n == deg)
        return {g};
    std::uniform_int_distribution<Word> coef(0, p_ - 1);
    mpz_class exponent;
    if (p_ != 2) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), p_, static_cast<unsigned long>(deg));
        exponent = (exponent - 1) / 2;
    }
    for (;;) {
        PolyP a(n);
        for (auto& c : a)
            c = coef(rng);
        trim(a);
        if (degree(a) < 1)
            continue;
        PolyP b;
        if (p_ == 2) {
            PolyP cur = a;
            b = a;
            for (int i = 1; i < deg; ++i) {
                cur = rem(mul(cur, cur), g);
                b = add(b, cur);
            }
        } else {
            b = sub(powmod(a, exponent, g), PolyP{1});
        }
        PolyP d = gcd(b, g);
        if (degree(d) > 0 && degree(d) < n) {
            PolyP q, r;
            divmod(g, d, q, r);
            auto left = equal_degree(d, deg, rng);
            auto right = equal_degree(q, deg, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

std::vector<PolyP> Field::factor_squarefree(PolyP const& f) const
{
    std::mt19937_64 rng(0x5eed0000ULL + p_);
    std::vector<PolyP> factors;
    for (auto const& [deg, g] : distinct_degree(f)) {
        auto part = equal_degree(g, deg, rng);
        factors.insert(factors.end(), part.begin(), part.end());
    }
    std::sort(factors.begin(), factors.end(), [](PolyP const& a, PolyP const& b) {
        if (a.size() != b.size())
            return a.size() < b.size();
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return factors;
}

std::vector<int> Field::factor_degrees(PolyP const& f) const
{
    std::vector<int> degs;
    for (auto const& [deg, g] : distinct_degree(f))
        for (int k = 0; k < degree(g) / deg; ++k)
            degs.push_back(deg);
    return degs;
}

} // namespace latgrowth::modp
