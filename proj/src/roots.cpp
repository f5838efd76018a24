#include "latgrowth/roots.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

namespace latgrowth {

namespace {

using CLD = std::complex<long double>;

std::vector<CLD> aberth_long_double(Polynomial const& f)
{
    int n = f.degree();
    std::vector<long double> a(n + 1);
    for (int i = 0; i <= n; ++i)
        a[i] = f[i].get_d();
    long double bound = 0;
    for (int i = 0; i < n; ++i)
        bound = std::max(bound, std::fabs(a[i]));
    long double radius = std::min<long double>(1 + bound, 1e6L);
    std::vector<CLD> z(n);
    long double const two_pi = 6.283185307179586476925286766559L;
    for (int k = 0; k < n; ++k)
        z[k] = std::polar(radius * 0.5L + 0.25L, two_pi * k / n + 0.4L);

    for (int iter = 0; iter < 2000; ++iter) {
        long double worst = 0;
        for (int k = 0; k < n; ++k) {
            CLD p = a[n], dp = 0;
            for (int i = n - 1; i >= 0; --i) {
                dp = dp * z[k] + p;
                p = p * z[k] + a[i];
            }
            if (p == CLD(0))
                continue;
            CLD ratio = p / dp;
            CLD s = 0;
            for (int j = 0; j < n; ++j)
                if (j != k)
                    s += CLD(1) / (z[k] - z[j]);
            CLD w = ratio / (CLD(1) - ratio * s);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                continue;
            z[k] -= w;
            worst = std::max(worst, std::abs(w) / std::max<long double>(1, std::abs(z[k])));
        }
        if (worst < 1e-17L)
            break;
    }
    return z;
}

// Minimal MPFR complex number for the refinement stage (round-to-nearest).
struct MpC {
    BigFloat re, im;
    explicit MpC(Precision prec) : re(prec), im(prec) {}
};

void set_ld(MpC& z, CLD v)
{
    mpfr_set_ld(z.re.get(), v.real(), MPFR_RNDN);
    mpfr_set_ld(z.im.get(), v.imag(), MPFR_RNDN);
}

void c_mul(MpC& out, MpC const& a, MpC const& b, Precision prec)
{
    BigFloat t1(prec), t2(prec), re(prec), im(prec);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(im.get(), t1.get(), t2.get(), MPFR_RNDN);
    out.re = std::move(re);
    out.im = std::move(im);
}

void c_div(MpC& out, MpC const& a, MpC const& b, Precision prec)
{
    BigFloat den(prec), t1(prec), t2(prec), re(prec), im(prec);
    mpfr_sqr(t1.get(), b.re.get(), MPFR_RNDN);
    mpfr_sqr(t2.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(den.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.im.get(), b.im.get(), MPFR_RNDN);
    mpfr_add(re.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(re.get(), re.get(), den.get(), MPFR_RNDN);
    mpfr_mul(t1.get(), a.im.get(), b.re.get(), MPFR_RNDN);
    mpfr_mul(t2.get(), a.re.get(), b.im.get(), MPFR_RNDN);
    mpfr_sub(im.get(), t1.get(), t2.get(), MPFR_RNDN);
    mpfr_div(im.get(), im.get(), den.get(), MPFR_RNDN);
    out.re = std::move(re);
    out.im = std::move(im);
}

void c_add(MpC& out, MpC const& a, MpC const& b)
{
    mpfr_add(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_add(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

void c_sub(MpC& out, MpC const& a, MpC const& b)
{
    mpfr_sub(out.re.get(), a.re.get(), b.re.get(), MPFR_RNDN);
    mpfr_sub(out.im.get(), a.im.get(), b.im.get(), MPFR_RNDN);
}

double c_abs(MpC const& a)
{
    return std::hypot(a.re.to_double(), a.im.to_double());
}

void aberth_mpfr(Polynomial const& f, std::vector<MpC>& z, Precision prec)
{
    int n = f.degree();
    std::vector<BigFloat> a;
    for (int i = 0; i <= n; ++i) {
        BigFloat c(prec);
        mpfr_set_z(c.get(), f[i].get_mpz_t(), MPFR_RNDN);
        a.push_back(std::move(c));
    }
    double tol = std::ldexp(1.0, -static_cast<int>(std::min<Precision>(prec, 1000)) + 8);
    MpC p(prec), dp(prec), tmp(prec), s(prec), w(prec), one(prec), diff(prec), inv(prec);
    mpfr_set_ui(one.re.get(), 1, MPFR_RNDN);
    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0;
        for (int k = 0; k < n; ++k) {
            mpfr_set(p.re.get(), a[n].get(), MPFR_RNDN);
            mpfr_set_zero(p.im.get(), 1);
            mpfr_set_zero(dp.re.get(), 1);
            mpfr_set_zero(dp.im.get(), 1);
            for (int i = n - 1; i >= 0; --i) {
                c_mul(tmp, dp, z[k], prec);
                c_add(dp, tmp, p);
                c_mul(tmp, p, z[k], prec);
                mpfr_add(p.re.get(), tmp.re.get(), a[i].get(), MPFR_RNDN);
                mpfr_set(p.im.get(), tmp.im.get(), MPFR_RNDN);
            }
            if (mpfr_zero_p(p.re.get()) && mpfr_zero_p(p.im.get()))
                continue;
            if (mpfr_zero_p(dp.re.get()) && mpfr_zero_p(dp.im.get()))
                continue;
            MpC ratio(prec);
            c_div(ratio, p, dp, prec);
            mpfr_set_zero(s.re.get(), 1);
            mpfr_set_zero(s.im.get(), 1);
            for (int j = 0; j < n; ++j) {
                if (j == k)
                    continue;
                c_sub(diff, z[k], z[j]);
                if (mpfr_zero_p(diff.re.get()) && mpfr_zero_p(diff.im.get()))
                    continue;
                c_div(inv, one, diff, prec);
                c_add(s, s, inv);
            }
            c_mul(tmp, ratio, s, prec);
            c_sub(tmp, one, tmp);
            if (mpfr_zero_p(tmp.re.get()) && mpfr_zero_p(tmp.im.get()))
                continue;
            c_div(w, ratio, tmp, prec);
            c_sub(z[k], z[k], w);
            worst = std::max(worst, c_abs(w) / std::max(1.0, c_abs(z[k])));
        }
        if (worst < tol)
            break;
    }
}

RealInterval point(BigFloat const& x, Precision prec)
{
    RealInterval r(prec);
    mpfr_set(r.lower().get(), x.get(), MPFR_RNDD);
    mpfr_set(r.upper().get(), x.get(), MPFR_RNDU);
    return r;
}

RealInterval widen(BigFloat const& c, RealInterval const& radius, Precision prec)
{
    RealInterval r(prec);
    mpfr_sub(r.lower().get(), c.get(), radius.upper().get(), MPFR_RNDD);
    mpfr_add(r.upper().get(), c.get(), radius.upper().get(), MPFR_RNDU);
    return r;
}

struct Attempt {
    bool ok = false;
    RootEnclosures result;
};

Attempt attempt(Polynomial const& f, int real_count, std::vector<CLD> const& start, Precision prec)
{
    int n = f.degree();
    int pairs = (n - real_count) / 2;

    // Classify the long double approximations.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return std::fabs(start[x].imag()) < std::fabs(start[y].imag());
    });
    std::vector<CLD> reals, uppers;
    for (int i = 0; i < real_count; ++i)
        reals.emplace_back(start[order[i]].real(), 0);
    std::vector<CLD> rest;
    for (int i = real_count; i < n; ++i)
        rest.push_back(start[order[i]]);
    std::sort(rest.begin(), rest.end(), [](CLD x, CLD y) { return x.imag() > y.imag(); });
    for (int i = 0; i < pairs; ++i)
        uppers.emplace_back(rest[i].real(), std::fabs(rest[i].imag()));

    std::vector<MpC> z;
    for (auto const& r : reals) {
        z.emplace_back(prec);
        set_ld(z.back(), r);
    }
    for (auto const& u : uppers) {
        z.emplace_back(prec);
        set_ld(z.back(), u);
    }
    for (auto const& u : uppers) {
        z.emplace_back(prec);
        set_ld(z.back(), std::conj(u));
    }
    aberth_mpfr(f, z, prec);
    // Restore exact conjugation symmetry.
    for (int i = 0; i < real_count; ++i)
        mpfr_set_zero(z[i].im.get(), 1);
    for (int i = 0; i < pairs; ++i) {
        MpC& up = z[real_count + i];
        if (mpfr_sgn(up.im.get()) < 0)
            mpfr_neg(up.im.get(), up.im.get(), MPFR_RNDN);
        MpC& lo = z[real_count + pairs + i];
        mpfr_set(lo.re.get(), up.re.get(), MPFR_RNDN);
        mpfr_neg(lo.im.get(), up.im.get(), MPFR_RNDN);
    }

    // Certification.
    std::vector<ComplexBox> centers;
    for (auto const& c : z)
        centers.emplace_back(point(c.re, prec), point(c.im, prec));
    std::vector<RealInterval> radius;
    RealInterval degree_iv = RealInterval::from_long(n, prec);
    for (int i = 0; i < n; ++i) {
        ComplexBox val(RealInterval::from_integer(f[n], prec), RealInterval(prec));
        for (int k = n - 1; k >= 0; --k)
            val = val * centers[i] + ComplexBox(RealInterval::from_integer(f[k], prec), RealInterval(prec));
        ComplexBox den(RealInterval::from_long(1, prec), RealInterval(prec));
        for (int j = 0; j < n; ++j)
            if (j != i)
                den = den * (centers[i] - centers[j]);
        RealInterval den_abs = abs(den);
        if (!den_abs.certainly_positive())
            return {};
        radius.push_back(degree_iv * abs(val) / den_abs);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            RealInterval dist = abs(centers[i] - centers[j]);
            if (!(radius[i] + radius[j]).certainly_less(dist))
                return {};
        }
    }

    Attempt out;
    out.ok = true;
    out.result.precision = prec;
    for (int i = 0; i < real_count; ++i)
        out.result.real.push_back(widen(z[i].re, radius[i], prec));
    for (int i = 0; i < pairs; ++i) {
        int k = real_count + i;
        out.result.complex.emplace_back(widen(z[k].re, radius[k], prec), widen(z[k].im, radius[k], prec));
    }
    std::sort(out.result.real.begin(), out.result.real.end(), [](RealInterval const& a, RealInterval const& b) {
        return mpfr_greater_p(a.lower().get(), b.lower().get()) != 0;
    });
    std::sort(out.result.complex.begin(), out.result.complex.end(), [](ComplexBox const& a, ComplexBox const& b) {
        int c = mpfr_cmp(a.re.lower().get(), b.re.lower().get());
        if (c != 0)
            return c > 0;
        return mpfr_greater_p(a.im.lower().get(), b.im.lower().get()) != 0;
    });
    return out;
}

} // namespace

RootEnclosures isolate_roots(Polynomial const& f, Precision prec, Precision max_prec)
{
    if (f.degree() < 1 || !f.is_monic())
        throw Error(ErrorKind::InvalidArgument, "root isolation requires a monic nonconstant polynomial");
    int n = f.degree();
    int real_count = count_real_roots(f);
    if (n == 1) {
        RootEnclosures r;
        r.precision = prec;
        r.real.push_back(RealInterval::from_integer(-f[0], prec));
        return r;
    }
    std::vector<CLD> start = aberth_long_double(f);
    for (Precision p = std::max<Precision>(prec, 64); p <= max_prec; p *= 2) {
        Attempt a = attempt(f, real_count, start, p);
        if (a.ok) {
            if (p != prec) {
                // Round the endpoints outward to the requested precision.
                auto shrink = [prec](RealInterval const& x) {
                    RealInterval y(prec);
                    mpfr_set(y.lower().get(), x.lower().get(), MPFR_RNDD);
                    mpfr_set(y.upper().get(), x.upper().get(), MPFR_RNDU);
                    return y;
                };
                for (auto& r : a.result.real)
                    r = shrink(r);
                for (auto& c : a.result.complex)
                    c = ComplexBox(shrink(c.re), shrink(c.im));
                a.result.precision = prec;
            }
            return a.result;
        }
    }
    throw Error(ErrorKind::PrecisionExhausted,
                "root enclosures of " + f.to_string() + " did not separate at " + std::to_string(max_prec) + " bits");
}

RootEnclosures refine_roots(Polynomial const& f, RootEnclosures const& previous, Precision prec)
{
    RootEnclosures fresh = isolate_roots(f, prec, std::max<Precision>(prec * 4, Precision(1) << 14));
    if (fresh.real.size() != previous.real.size() || fresh.complex.size() != previous.complex.size())
        throw Error(ErrorKind::InvalidArgument, "root structure changed under refinement");
    for (std::size_t i = 0; i < fresh.real.size(); ++i)
        fresh.real[i] = intersect(fresh.real[i], previous.real[i]);
    for (std::size_t i = 0; i < fresh.complex.size(); ++i)
        fresh.complex[i] = intersect(fresh.complex[i], previous.complex[i]);
    return fresh;
}

} // namespace latgrowth
