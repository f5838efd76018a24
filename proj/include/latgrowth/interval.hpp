#pragma once

// Certified real and complex interval arithmetic on top of MPFR.
//
// Endpoints are binary floating-point numbers (dyadic rationals).  Every
// operation rounds the lower endpoint toward -inf and the upper endpoint
// toward +inf, so the result always encloses the exact value of the
// operation applied to any points of the operands.

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <utility>

namespace latgrowth {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 128;

/// Owning wrapper around an mpfr_t.
class BigFloat {
  public:
    explicit BigFloat(Precision prec = kDefaultPrecision);
    BigFloat(BigFloat const& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(BigFloat const& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    mpfr_ptr get() noexcept { return value_; }
    mpfr_srcptr get() const noexcept { return value_; }
    Precision precision() const noexcept { return mpfr_get_prec(value_); }

    double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }

  private:
    mpfr_t value_;
};

class RealInterval {
  public:
    explicit RealInterval(Precision prec = kDefaultPrecision);

    static RealInterval from_integer(mpz_class const& z, Precision prec = kDefaultPrecision);
    static RealInterval from_rational(mpq_class const& q, Precision prec = kDefaultPrecision);
    static RealInterval from_long(long v, Precision prec = kDefaultPrecision);
    /// Hull of two rationals (lo <= hi required).
    static RealInterval hull(mpq_class const& lo, mpq_class const& hi,
                             Precision prec = kDefaultPrecision);
    /// Enclosure of the decimal numbers [lo, hi]; each string is rounded outward.
    static RealInterval from_decimal(std::string const& lo, std::string const& hi,
                                     Precision prec = kDefaultPrecision);
    static RealInterval pi(Precision prec = kDefaultPrecision);

    Precision precision() const noexcept;

    BigFloat const& lower() const noexcept { return lo_; }
    BigFloat const& upper() const noexcept { return hi_; }
    BigFloat& lower() noexcept { return lo_; }
    BigFloat& upper() noexcept { return hi_; }

    double lower_double() const { return lo_.to_double(MPFR_RNDD); }
    double upper_double() const { return hi_.to_double(MPFR_RNDU); }
    double mid_double() const;
    /// Upper bound on hi - lo.
    double width() const;
    /// Upper bound on (hi - lo) / |lo|; infinite when the interval touches zero.
    double relative_width() const;

    bool contains(mpq_class const& q) const;
    bool contains(RealInterval const& other) const;
    bool contains_zero() const;
    bool overlaps(RealInterval const& other) const;

    bool certainly_positive() const;
    bool certainly_negative() const;
    /// Every point of *this is strictly less than every point of other.
    bool certainly_less(RealInterval const& other) const;
    bool certainly_le(RealInterval const& other) const;

    RealInterval& operator+=(RealInterval const& rhs);
    RealInterval& operator-=(RealInterval const& rhs);
    RealInterval& operator*=(RealInterval const& rhs);
    RealInterval& operator/=(RealInterval const& rhs);

    /// Decimal rendering with `digits` significant digits, lower rounded down
    /// and upper rounded up.
    std::pair<std::string, std::string> to_decimal(int digits = 20) const;

  private:
    BigFloat lo_;
    BigFloat hi_;
};

RealInterval operator+(RealInterval lhs, RealInterval const& rhs);
RealInterval operator-(RealInterval lhs, RealInterval const& rhs);
RealInterval operator*(RealInterval lhs, RealInterval const& rhs);
RealInterval operator/(RealInterval lhs, RealInterval const& rhs);
RealInterval operator-(RealInterval const& x);

RealInterval abs(RealInterval const& x);
RealInterval sqr(RealInterval const& x);
RealInterval sqrt(RealInterval const& x);
RealInterval log(RealInterval const& x);
RealInterval exp(RealInterval const& x);
/// x^n for integer n >= 0.
RealInterval pow(RealInterval const& x, unsigned long n);
/// x^(1/n), x >= 0.
RealInterval root(RealInterval const& x, unsigned long n);
/// x^y for x > 0, via exp(y log x).
RealInterval pow(RealInterval const& x, RealInterval const& y);
/// x^(p/q) for x > 0 and a rational exponent.
RealInterval pow(RealInterval const& x, mpq_class const& e);
RealInterval hull(RealInterval const& a, RealInterval const& b);
/// Intersection; throws if the intervals are disjoint.
RealInterval intersect(RealInterval const& a, RealInterval const& b);
RealInterval min(RealInterval const& a, RealInterval const& b);
RealInterval max(RealInterval const& a, RealInterval const& b);
/// n! as an exact-point interval.
RealInterval factorial(unsigned long n, Precision prec);

struct ComplexBox {
    RealInterval re;
    RealInterval im;

    explicit ComplexBox(Precision prec = kDefaultPrecision) : re(prec), im(prec) {}
    ComplexBox(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im.contains_zero() && im.width() == 0.0; }
    bool contains(ComplexBox const& other) const
    {
        return re.contains(other.re) && im.contains(other.im);
    }
};

ComplexBox operator+(ComplexBox const& a, ComplexBox const& b);
ComplexBox operator-(ComplexBox const& a, ComplexBox const& b);
ComplexBox operator*(ComplexBox const& a, ComplexBox const& b);
ComplexBox operator/(ComplexBox const& a, ComplexBox const& b);
/// Enclosure of |z|.
RealInterval abs(ComplexBox const& z);
ComplexBox intersect(ComplexBox const& a, ComplexBox const& b);

} // namespace latgrowth
