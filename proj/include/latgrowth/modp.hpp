#pragma once

// Polynomial arithmetic over the prime field F_p (p < 2^62), with
// distinct-degree and equal-degree (Cantor-Zassenhaus) factorization.

#include "latgrowth/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace latgrowth::modp {

using Word = std::uint64_t;
/// Coefficients in [0, p), constant term first, no trailing zeros.
using PolyP = std::vector<Word>;

class Field {
  public:
    explicit Field(Word p);

    Word prime() const noexcept { return p_; }

    Word add(Word a, Word b) const { Word s = a + b; return s >= p_ ? s - p_ : s; }
    Word sub(Word a, Word b) const { return a >= b ? a - b : a + p_ - b; }
    Word mul(Word a, Word b) const
    {
        return static_cast<Word>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Word pow(Word a, Word e) const;
    Word inv(Word a) const;

    PolyP reduce(Polynomial const& f) const;
    PolyP add(PolyP const& a, PolyP const& b) const;
    PolyP sub(PolyP const& a, PolyP const& b) const;
    PolyP mul(PolyP const& a, PolyP const& b) const;
    PolyP scale(PolyP const& a, Word c) const;
    /// Quotient and remainder; b must be nonzero.
    void divmod(PolyP const& a, PolyP const& b, PolyP& q, PolyP& r) const;
    PolyP rem(PolyP const& a, PolyP const& b) const;
    PolyP monic(PolyP const& a) const;
    /// Monic gcd (zero if both inputs are zero).
    PolyP gcd(PolyP a, PolyP b) const;
    /// Returns monic g = gcd(a, b) and s, t with s a + t b = g.
    PolyP xgcd(PolyP const& a, PolyP const& b, PolyP& s, PolyP& t) const;
    PolyP derivative(PolyP const& a) const;
    /// base^e mod m, with e an arbitrary-size exponent.
    PolyP powmod(PolyP const& base, mpz_class const& e, PolyP const& m) const;

    bool is_squarefree(PolyP const& f) const;
    /// For monic squarefree f: pairs (degree, product of all irreducible
    /// factors of that degree), ascending by degree.
    std::vector<std::pair<int, PolyP>> distinct_degree(PolyP const& f) const;
    /// Splits a monic squarefree g whose irreducible factors all have degree
    /// `deg` into those factors.
    std::vector<PolyP> equal_degree(PolyP const& g, int deg, std::mt19937_64& rng) const;
    /// Monic irreducible factors of a monic squarefree f, sorted.
    std::vector<PolyP> factor_squarefree(PolyP const& f) const;
    /// Degrees of the irreducible factors of a monic squarefree f (ascending).
    std::vector<int> factor_degrees(PolyP const& f) const;

  private:
    Word p_;
};

inline int degree(PolyP const& f) { return static_cast<int>(f.size()) - 1; }

} // namespace latgrowth::modp
