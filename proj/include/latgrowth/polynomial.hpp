#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace latgrowth {

/// Dense univariate polynomial with integer coefficients, constant term first.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> coeffs);
    Polynomial(std::initializer_list<long> coeffs);

    /// Parses expressions such as "x^3 - x - 1" or "2*x^2+3x+1".
    static Polynomial parse(std::string const& text);

    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
    mpz_class const& leading() const { return coeffs_.back(); }
    mpz_class const& operator[](std::size_t i) const { return coeffs_[i]; }
    std::vector<mpz_class> const& coefficients() const noexcept { return coeffs_; }

    mpz_class operator()(mpz_class const& x) const;
    mpq_class operator()(mpq_class const& x) const;

    Polynomial derivative() const;
    /// Largest absolute value of a coefficient.
    mpz_class height() const;

    std::string to_string() const;

    friend bool operator==(Polynomial const& a, Polynomial const& b) { return a.coeffs_ == b.coeffs_; }
    friend Polynomial operator+(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator-(Polynomial const& a, Polynomial const& b);
    friend Polynomial operator*(Polynomial const& a, Polynomial const& b);

  private:
    void normalize();

    std::vector<mpz_class> coeffs_;
};

/// Polynomials over the rationals; same layout as Polynomial, not normalized
/// unless stated.
using QPoly = std::vector<mpq_class>;

QPoly to_qpoly(Polynomial const& f);
void trim(QPoly& f);
int degree(QPoly const& f);
QPoly mul(QPoly const& a, QPoly const& b);
/// Remainder of a by b (b nonzero) over the rationals.
QPoly rem(QPoly const& a, QPoly const& b);
QPoly divexact(QPoly const& a, QPoly const& b);
/// a mod f, for monic-or-not nonzero f.
QPoly mulmod(QPoly const& a, QPoly const& b, QPoly const& f);

/// Resultant of two nonzero rational polynomials, by the Euclidean remainder
/// sequence.
mpq_class resultant(QPoly a, QPoly b);
mpz_class resultant(Polynomial const& f, Polynomial const& g);

/// disc(f) = (-1)^(d(d-1)/2) Res(f, f') / lc(f); 1 for degree 1.
mpz_class discriminant(Polynomial const& f);

/// Number of distinct real roots (Sturm's theorem).
int count_real_roots(Polynomial const& f);

} // namespace latgrowth
