#include "latgrowth/polynomial.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace latgrowth {

Polynomial::Polynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    normalize();
}

Polynomial::Polynomial(std::initializer_list<long> coeffs)
{
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    normalize();
}

void Polynomial::normalize()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

Polynomial Polynomial::parse(std::string const& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw Error(ErrorKind::InvalidArgument, "empty polynomial");

    std::vector<mpz_class> coeffs;
    auto fail = [&](std::string const& why) {
        throw Error(ErrorKind::InvalidArgument, "cannot parse polynomial '" + text + "': " + why);
    };
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;

        mpz_class coef = 1;
        bool have_digits = false;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (i > start) {
            coef = mpz_class(s.substr(start, i - start));
            have_digits = true;
        }
        unsigned long exponent = 0;
        if (i < s.size() && s[i] == '*') {
            if (!have_digits)
                fail("dangling '*'");
            ++i;
        }
        if (i < s.size() && s[i] == 'x') {
            ++i;
            exponent = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (i == estart)
                    fail("missing exponent");
                exponent = std::stoul(s.substr(estart, i - estart));
            }
        } else if (!have_digits) {
            fail("expected a coefficient or 'x'");
        }
        if (exponent > 100000)
            fail("exponent too large");
        if (coeffs.size() <= exponent)
            coeffs.resize(exponent + 1);
        coeffs[exponent] += sign * coef;
    }
    return Polynomial(std::move(coeffs));
}

mpz_class Polynomial::operator()(mpz_class const& x) const
{
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

mpq_class Polynomial::operator()(mpq_class const& x) const
{
    mpq_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::derivative() const
{
    std::vector<mpz_class> d;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(d));
}

mpz_class Polynomial::height() const
{
    mpz_class h = 0;
    for (auto const& c : coeffs_)
        h = std::max(h, mpz_class(abs(c)));
    return h;
}

std::string Polynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        mpz_class const& c = coeffs_[i];
        if (c == 0)
            continue;
        mpz_class a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (i == 0 || a != 1)
            os << a.get_str();
        if (i >= 1)
            os << (i == 0 || a != 1 ? "*x" : "x");
        if (i >= 2)
            os << "^" << i;
    }
    return os.str();
}

Polynomial operator+(Polynomial const& a, Polynomial const& b)
{
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(Polynomial const& a, Polynomial const& b)
{
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator*(Polynomial const& a, Polynomial const& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

QPoly to_qpoly(Polynomial const& f)
{
    QPoly q;
    q.reserve(f.coefficients().size());
    for (auto const& c : f.coefficients())
        q.emplace_back(c);
    return q;
}

void trim(QPoly& f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

int degree(QPoly const& f)
{
    return static_cast<int>(f.size()) - 1;
}

QPoly mul(QPoly const& a, QPoly const& b)
{
    if (a.empty() || b.empty())
        return {};
    QPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

namespace {

// Quotient and remainder over Q; b must be trimmed and nonzero.
void divmod(QPoly a, QPoly const& b, QPoly* quot, QPoly* remainder)
{
    trim(a);
    int db = degree(b);
    if (db < 0)
        throw Error(ErrorKind::InvalidArgument, "polynomial division by zero");
    QPoly q(std::max(0, degree(a) - db + 1));
    mpq_class const& lb = b.back();
    while (degree(a) >= db) {
        int shift = degree(a) - db;
        mpq_class c = a.back() / lb;
        q[shift] = c;
        for (int i = 0; i <= db; ++i)
            a[shift + i] -= c * b[i];
        a.pop_back();
        trim(a);
    }
    if (quot) {
        trim(q);
        *quot = std::move(q);
    }
    if (remainder)
        *remainder = std::move(a);
}

} // namespace

QPoly rem(QPoly const& a, QPoly const& b)
{
    QPoly r;
    QPoly bb = b;
    trim(bb);
    divmod(a, bb, nullptr, &r);
    return r;
}

QPoly divexact(QPoly const& a, QPoly const& b)
{
    QPoly q, r;
    QPoly bb = b;
    trim(bb);
    divmod(a, bb, &q, &r);
    if (!r.empty())
        throw Error(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

QPoly mulmod(QPoly const& a, QPoly const& b, QPoly const& f)
{
    return rem(mul(a, b), f);
}

mpq_class resultant(QPoly a, QPoly b)
{
    trim(a);
    trim(b);
    if (a.empty() || b.empty())
        return 0;
    mpq_class acc = 1;
    for (;;) {
        int m = degree(a);
        int n = degree(b);
        if (n == 0) {
            mpq_class p = 1;
            for (int i = 0; i < m; ++i)
                p *= b[0];
            return acc * p;
        }
        if (m == 0) {
            mpq_class p = 1;
            for (int i = 0; i < n; ++i)
                p *= a[0];
            return acc * p;
        }
        QPoly r = rem(a, b);
        if (r.empty())
            return 0;
        int k = degree(r);
        // Res(a, b) = (-1)^(mn) lc(b)^(m-k) Res(b, r)
        if ((m * n) % 2 == 1)
            acc = -acc;
        for (int i = 0; i < m - k; ++i)
            acc *= b.back();
        a = std::move(b);
        b = std::move(r);
    }
}

mpz_class resultant(Polynomial const& f, Polynomial const& g)
{
    mpq_class r = resultant(to_qpoly(f), to_qpoly(g));
    r.canonicalize();
    if (r.get_den() != 1)
        throw Error(ErrorKind::InvalidArgument, "non-integral resultant of integer polynomials");
    return r.get_num();
}

mpz_class discriminant(Polynomial const& f)
{
    int d = f.degree();
    if (d < 1)
        throw Error(ErrorKind::InvalidArgument, "discriminant of a constant polynomial");
    if (d == 1)
        return 1;
    mpz_class r = resultant(f, f.derivative());
    mpz_class disc = r / f.leading();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1)
        disc = -disc;
    return disc;
}

int count_real_roots(Polynomial const& f)
{
    if (f.degree() < 1)
        return 0;
    std::vector<QPoly> seq;
    seq.push_back(to_qpoly(f));
    seq.push_back(to_qpoly(f.derivative()));
    while (degree(seq.back()) > 0) {
        QPoly r = rem(seq[seq.size() - 2], seq.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c = -c;
        seq.push_back(std::move(r));
    }
    // Sign changes at -inf and +inf; a nonconstant last element is the gcd,
    // which divides every member and does not change the count.
    auto changes = [&](bool at_plus) {
        int count = 0;
        int prev = 0;
        for (auto const& p : seq) {
            int s = sgn(p.back());
            if (!at_plus && degree(p) % 2 == 1)
                s = -s;
            if (s == 0)
                continue;
            if (prev != 0 && s != prev)
                ++count;
            prev = s;
        }
        return count;
    };
    return changes(false) - changes(true);
}

} // namespace latgrowth
