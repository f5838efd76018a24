#include "latgrowth/interval.hpp"

#include "latgrowth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace latgrowth {

BigFloat::BigFloat(Precision prec)
{
    mpfr_init2(value_, prec);
    mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(BigFloat const& other)
{
    mpfr_init2(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept
{
    mpfr_init2(value_, MPFR_PREC_MIN);
    mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(BigFloat const& other)
{
    if (this != &other) {
        mpfr_set_prec(value_, other.precision());
        mpfr_set(value_, other.value_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept
{
    mpfr_swap(value_, other.value_);
    return *this;
}

BigFloat::~BigFloat()
{
    mpfr_clear(value_);
}

namespace {

Precision join(RealInterval const& a, RealInterval const& b)
{
    return std::max(a.precision(), b.precision());
}

void check_nan(RealInterval const& x)
{
    if (mpfr_nan_p(x.lower().get()) || mpfr_nan_p(x.upper().get()))
        throw Error(ErrorKind::InvalidArgument, "interval operation produced NaN");
}

} // namespace

RealInterval::RealInterval(Precision prec) : lo_(prec), hi_(prec) {}

RealInterval RealInterval::from_integer(mpz_class const& z, Precision prec)
{
    RealInterval r(prec);
    mpfr_set_z(r.lo_.get(), z.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_.get(), z.get_mpz_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_rational(mpq_class const& q, Precision prec)
{
    RealInterval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_long(long v, Precision prec)
{
    RealInterval r(prec);
    mpfr_set_si(r.lo_.get(), v, MPFR_RNDD);
    mpfr_set_si(r.hi_.get(), v, MPFR_RNDU);
    return r;
}

RealInterval RealInterval::hull(mpq_class const& lo, mpq_class const& hi, Precision prec)
{
    if (lo > hi)
        throw Error(ErrorKind::InvalidArgument, "interval hull with lo > hi");
    RealInterval r(prec);
    mpfr_set_q(r.lo_.get(), lo.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), hi.get_mpq_t(), MPFR_RNDU);
    return r;
}

RealInterval RealInterval::from_decimal(std::string const& lo, std::string const& hi, Precision prec)
{
    RealInterval r(prec);
    if (mpfr_set_str(r.lo_.get(), lo.c_str(), 10, MPFR_RNDD) != 0
        || mpfr_set_str(r.hi_.get(), hi.c_str(), 10, MPFR_RNDU) != 0)
        throw Error(ErrorKind::InvalidArgument, "malformed decimal interval [" + lo + ", " + hi + "]");
    if (mpfr_greater_p(r.lo_.get(), r.hi_.get()))
        throw Error(ErrorKind::InvalidArgument, "decimal interval with lo > hi");
    return r;
}

RealInterval RealInterval::pi(Precision prec)
{
    RealInterval r(prec);
    mpfr_const_pi(r.lo_.get(), MPFR_RNDD);
    mpfr_const_pi(r.hi_.get(), MPFR_RNDU);
    return r;
}

Precision RealInterval::precision() const noexcept
{
    return std::max(lo_.precision(), hi_.precision());
}

double RealInterval::mid_double() const
{
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), lo_.get(), hi_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m.to_double();
}

double RealInterval::width() const
{
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
}

double RealInterval::relative_width() const
{
    if (contains_zero())
        return std::numeric_limits<double>::infinity();
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    BigFloat m(precision());
    if (mpfr_sgn(lo_.get()) > 0)
        mpfr_set(m.get(), lo_.get(), MPFR_RNDD);
    else
        mpfr_neg(m.get(), hi_.get(), MPFR_RNDD);
    mpfr_div(w.get(), w.get(), m.get(), MPFR_RNDU);
    return w.to_double(MPFR_RNDU);
}

bool RealInterval::contains(mpq_class const& q) const
{
    return mpfr_cmp_q(lo_.get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.get(), q.get_mpq_t()) >= 0;
}

bool RealInterval::contains(RealInterval const& other) const
{
    return mpfr_lessequal_p(lo_.get(), other.lo_.get()) && mpfr_greaterequal_p(hi_.get(), other.hi_.get());
}

bool RealInterval::contains_zero() const
{
    return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool RealInterval::overlaps(RealInterval const& other) const
{
    return mpfr_lessequal_p(lo_.get(), other.hi_.get()) && mpfr_lessequal_p(other.lo_.get(), hi_.get());
}

bool RealInterval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
bool RealInterval::certainly_negative() const { return mpfr_sgn(hi_.get()) < 0; }

bool RealInterval::certainly_less(RealInterval const& other) const
{
    return mpfr_less_p(hi_.get(), other.lo_.get());
}

bool RealInterval::certainly_le(RealInterval const& other) const
{
    return mpfr_lessequal_p(hi_.get(), other.lo_.get());
}

RealInterval& RealInterval::operator+=(RealInterval const& rhs)
{
    RealInterval r(join(*this, rhs));
    mpfr_add(r.lo_.get(), lo_.get(), rhs.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), hi_.get(), rhs.hi_.get(), MPFR_RNDU);
    *this = std::move(r);
    return *this;
}

RealInterval& RealInterval::operator-=(RealInterval const& rhs)
{
    RealInterval r(join(*this, rhs));
    mpfr_sub(r.lo_.get(), lo_.get(), rhs.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), hi_.get(), rhs.lo_.get(), MPFR_RNDU);
    *this = std::move(r);
    return *this;
}

RealInterval& RealInterval::operator*=(RealInterval const& rhs)
{
    Precision prec = join(*this, rhs);
    RealInterval r(prec);
    BigFloat t(prec);
    mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr b[2] = {rhs.lo_.get(), rhs.hi_.get()};
    mpfr_set_inf(r.lo_.get(), 1);
    mpfr_set_inf(r.hi_.get(), -1);
    for (auto x : a) {
        for (auto y : b) {
            mpfr_mul(t.get(), x, y, MPFR_RNDD);
            mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x, y, MPFR_RNDU);
            mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
        }
    }
    *this = std::move(r);
    check_nan(*this);
    return *this;
}

RealInterval& RealInterval::operator/=(RealInterval const& rhs)
{
    if (rhs.contains_zero())
        throw Error(ErrorKind::InvalidArgument, "interval division by an interval containing zero");
    Precision prec = join(*this, rhs);
    RealInterval r(prec);
    BigFloat t(prec);
    mpfr_srcptr a[2] = {lo_.get(), hi_.get()};
    mpfr_srcptr b[2] = {rhs.lo_.get(), rhs.hi_.get()};
    mpfr_set_inf(r.lo_.get(), 1);
    mpfr_set_inf(r.hi_.get(), -1);
    for (auto x : a) {
        for (auto y : b) {
            mpfr_div(t.get(), x, y, MPFR_RNDD);
            mpfr_min(r.lo_.get(), r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_div(t.get(), x, y, MPFR_RNDU);
            mpfr_max(r.hi_.get(), r.hi_.get(), t.get(), MPFR_RNDU);
        }
    }
    *this = std::move(r);
    return *this;
}

std::pair<std::string, std::string> RealInterval::to_decimal(int digits) const
{
    auto render = [digits](mpfr_srcptr x, bool down) {
        char* buf = nullptr;
        if (down)
            mpfr_asprintf(&buf, "%.*RDg", digits, x);
        else
            mpfr_asprintf(&buf, "%.*RUg", digits, x);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    };
    return {render(lo_.get(), true), render(hi_.get(), false)};
}

RealInterval operator+(RealInterval lhs, RealInterval const& rhs) { return lhs += rhs; }
RealInterval operator-(RealInterval lhs, RealInterval const& rhs) { return lhs -= rhs; }
RealInterval operator*(RealInterval lhs, RealInterval const& rhs) { return lhs *= rhs; }
RealInterval operator/(RealInterval lhs, RealInterval const& rhs) { return lhs /= rhs; }

RealInterval operator-(RealInterval const& x)
{
    RealInterval r(x.precision());
    mpfr_neg(r.lower().get(), x.upper().get(), MPFR_RNDD);
    mpfr_neg(r.upper().get(), x.lower().get(), MPFR_RNDU);
    return r;
}

RealInterval abs(RealInterval const& x)
{
    if (mpfr_sgn(x.lower().get()) >= 0)
        return x;
    if (mpfr_sgn(x.upper().get()) <= 0)
        return -x;
    RealInterval r(x.precision());
    mpfr_set_zero(r.lower().get(), 1);
    mpfr_neg(r.upper().get(), x.lower().get(), MPFR_RNDU);
    mpfr_max(r.upper().get(), r.upper().get(), x.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval sqr(RealInterval const& x)
{
    return pow(x, 2);
}

RealInterval sqrt(RealInterval const& x)
{
    if (mpfr_sgn(x.lower().get()) < 0)
        throw Error(ErrorKind::InvalidArgument, "sqrt of an interval with negative part");
    RealInterval r(x.precision());
    mpfr_sqrt(r.lower().get(), x.lower().get(), MPFR_RNDD);
    mpfr_sqrt(r.upper().get(), x.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval log(RealInterval const& x)
{
    if (!x.certainly_positive())
        throw Error(ErrorKind::InvalidArgument, "log of an interval not certainly positive");
    RealInterval r(x.precision());
    mpfr_log(r.lower().get(), x.lower().get(), MPFR_RNDD);
    mpfr_log(r.upper().get(), x.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval exp(RealInterval const& x)
{
    RealInterval r(x.precision());
    mpfr_exp(r.lower().get(), x.lower().get(), MPFR_RNDD);
    mpfr_exp(r.upper().get(), x.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval pow(RealInterval const& x, unsigned long n)
{
    Precision prec = x.precision();
    RealInterval r(prec);
    if (n == 0) {
        mpfr_set_ui(r.lower().get(), 1, MPFR_RNDN);
        mpfr_set_ui(r.upper().get(), 1, MPFR_RNDN);
        return r;
    }
    bool odd = (n % 2) == 1;
    if (mpfr_sgn(x.lower().get()) >= 0 || odd) {
        mpfr_pow_ui(r.lower().get(), x.lower().get(), n, MPFR_RNDD);
        mpfr_pow_ui(r.upper().get(), x.upper().get(), n, MPFR_RNDU);
        return r;
    }
    if (mpfr_sgn(x.upper().get()) <= 0) {
        mpfr_pow_ui(r.lower().get(), x.upper().get(), n, MPFR_RNDD);
        mpfr_pow_ui(r.upper().get(), x.lower().get(), n, MPFR_RNDU);
        return r;
    }
    RealInterval a = abs(x);
    mpfr_set_zero(r.lower().get(), 1);
    mpfr_pow_ui(r.upper().get(), a.upper().get(), n, MPFR_RNDU);
    return r;
}

RealInterval root(RealInterval const& x, unsigned long n)
{
    if (n == 0)
        throw Error(ErrorKind::InvalidArgument, "zeroth root");
    if (mpfr_sgn(x.lower().get()) < 0)
        throw Error(ErrorKind::InvalidArgument, "root of an interval with negative part");
    RealInterval r(x.precision());
    mpfr_rootn_ui(r.lower().get(), x.lower().get(), n, MPFR_RNDD);
    mpfr_rootn_ui(r.upper().get(), x.upper().get(), n, MPFR_RNDU);
    return r;
}

RealInterval pow(RealInterval const& x, RealInterval const& y)
{
    return exp(y * log(x));
}

RealInterval pow(RealInterval const& x, mpq_class const& e)
{
    mpq_class q(e);
    q.canonicalize();
    if (q == 0)
        return RealInterval::from_long(1, x.precision());
    bool negative = q < 0;
    if (negative)
        q = -q;
    if (!q.get_num().fits_ulong_p() || !q.get_den().fits_ulong_p())
        return pow(x, RealInterval::from_rational(e, x.precision()));
    RealInterval r = pow(root(x, q.get_den().get_ui()), q.get_num().get_ui());
    if (negative)
        r = RealInterval::from_long(1, x.precision()) / r;
    return r;
}

RealInterval hull(RealInterval const& a, RealInterval const& b)
{
    RealInterval r(join(a, b));
    mpfr_min(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
    mpfr_max(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval intersect(RealInterval const& a, RealInterval const& b)
{
    if (!a.overlaps(b))
        throw Error(ErrorKind::InvalidArgument, "intersection of disjoint intervals");
    RealInterval r(join(a, b));
    mpfr_max(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
    mpfr_min(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval min(RealInterval const& a, RealInterval const& b)
{
    RealInterval r(join(a, b));
    mpfr_min(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
    mpfr_min(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval max(RealInterval const& a, RealInterval const& b)
{
    RealInterval r(join(a, b));
    mpfr_max(r.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
    mpfr_max(r.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
    return r;
}

RealInterval factorial(unsigned long n, Precision prec)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return RealInterval::from_integer(f, prec);
}

ComplexBox operator+(ComplexBox const& a, ComplexBox const& b)
{
    return {a.re + b.re, a.im + b.im};
}

ComplexBox operator-(ComplexBox const& a, ComplexBox const& b)
{
    return {a.re - b.re, a.im - b.im};
}

ComplexBox operator*(ComplexBox const& a, ComplexBox const& b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexBox operator/(ComplexBox const& a, ComplexBox const& b)
{
    RealInterval den = sqr(b.re) + sqr(b.im);
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

RealInterval abs(ComplexBox const& z)
{
    return sqrt(sqr(z.re) + sqr(z.im));
}

ComplexBox intersect(ComplexBox const& a, ComplexBox const& b)
{
    return {intersect(a.re, b.re), intersect(a.im, b.im)};
}

} // namespace latgrowth
