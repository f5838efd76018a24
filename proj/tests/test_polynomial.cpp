#include "doctest.h"
#include "oracles.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/factor.hpp"
#include "latgrowth/modp.hpp"
#include "latgrowth/polynomial.hpp"

#include <random>

using namespace latgrowth;

namespace {

Polynomial random_poly(std::mt19937_64& rng, int deg, long bound, bool monic)
{
    std::uniform_int_distribution<long> coeff(-bound, bound);
    std::vector<mpz_class> c(static_cast<std::size_t>(deg + 1));
    for (auto& x : c)
        x = coeff(rng);
    if (monic)
        c.back() = 1;
    while (c.back() == 0)
        c.back() = coeff(rng);
    return Polynomial(c);
}

} // namespace

TEST_CASE("parse and print")
{
    Polynomial f = Polynomial::parse("x^3 - x - 1");
    CHECK(f == Polynomial({-1, -1, 0, 1}));
    CHECK(Polynomial::parse("2*x^2+3x+1") == Polynomial({1, 3, 2}));
    CHECK(Polynomial::parse("x") == Polynomial({0, 1}));
    CHECK(Polynomial::parse("-x^2 + 5") == Polynomial({5, 0, -1}));
    CHECK(Polynomial::parse(f.to_string()) == f);
    CHECK_THROWS_AS(Polynomial::parse("x^^2"), Error);
    CHECK_THROWS_AS(Polynomial::parse("y+1"), Error);
}

TEST_CASE("arithmetic")
{
    Polynomial a{1, 1}, b{-1, 1};
    CHECK(a * b == Polynomial({-1, 0, 1}));
    CHECK(a + b == Polynomial({0, 2}));
    CHECK((a - a).is_zero());
    CHECK(Polynomial({-1, 0, 1})(mpz_class(3)) == 8);
    CHECK(Polynomial({0, 0, 3}).derivative() == Polynomial({0, 6}));
}

TEST_CASE("discriminants of small polynomials")
{
    CHECK(discriminant(Polynomial::parse("x^2-5")) == 20);
    CHECK(discriminant(Polynomial::parse("x^2+1")) == -4);
    CHECK(discriminant(Polynomial::parse("x^3-x-1")) == -23);
    CHECK(discriminant(Polynomial::parse("x^2-x-1")) == 5);
    CHECK(discriminant(Polynomial::parse("x-7")) == 1);
}

TEST_CASE("resultant and discriminant agree with the Sylvester determinant")
{
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> deg(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial f = random_poly(rng, deg(rng), 20, false);
        Polynomial g = random_poly(rng, deg(rng), 20, false);
        CHECK(resultant(f, g) == oracle::sylvester_resultant(f.coefficients(), g.coefficients()));
        Polynomial h = random_poly(rng, deg(rng) + 1, 20, false);
        CHECK(discriminant(h) == oracle::sylvester_discriminant(h.coefficients()));
    }
}

TEST_CASE("Sturm count of real roots")
{
    CHECK(count_real_roots(Polynomial::parse("x^2-5")) == 2);
    CHECK(count_real_roots(Polynomial::parse("x^2+1")) == 0);
    CHECK(count_real_roots(Polynomial::parse("x^3-x-1")) == 1);
    CHECK(count_real_roots(Polynomial::parse("x^4-10x^2+1")) == 4);
    // (x-1)(x-2)(x-3)(x^2+1)
    CHECK(count_real_roots(Polynomial({-6, 11, -6, 1}) * Polynomial({1, 0, 1})) == 3);
}

TEST_CASE("factorisation modulo p")
{
    modp::Field f11(11);
    auto degs = f11.factor_degrees(f11.reduce(Polynomial::parse("x^2-5")));
    CHECK(degs == std::vector<int>{1, 1});
    modp::Field f3(3);
    CHECK(f3.factor_degrees(f3.reduce(Polynomial::parse("x^2-5"))) == std::vector<int>{2});
    modp::Field f2(2);
    // x^4 + x + 1 is irreducible over F_2; x^4 + 1 = (x+1)^4 is not squarefree.
    CHECK(f2.factor_degrees(f2.reduce(Polynomial::parse("x^4+x+1"))) == std::vector<int>{4});
    CHECK_FALSE(f2.is_squarefree(f2.reduce(Polynomial::parse("x^4+1"))));
    // x^5 - x over F_5 splits into linear factors.
    modp::Field f5(5);
    CHECK(f5.factor_degrees(f5.reduce(Polynomial::parse("x^5-x"))) == std::vector<int>(5, 1));
}

TEST_CASE("factorisation modulo p multiplies back")
{
    std::mt19937_64 rng(7);
    for (modp::Word p : {2ull, 3ull, 7ull, 101ull, 1000003ull}) {
        modp::Field F(p);
        for (int trial = 0; trial < 20; ++trial) {
            Polynomial f = random_poly(rng, 1 + trial % 8, 50, true);
            auto fp = F.reduce(f);
            if (!F.is_squarefree(fp))
                continue;
            auto factors = F.factor_squarefree(fp);
            modp::PolyP prod{1};
            int total = 0;
            for (auto const& g : factors) {
                prod = F.mul(prod, g);
                total += modp::degree(g);
                CHECK(F.factor_degrees(g).size() == 1);
            }
            CHECK(prod == fp);
            CHECK(total == f.degree());
        }
    }
}

TEST_CASE("irreducibility over the integers")
{
    CHECK(is_irreducible(Polynomial::parse("x^2-5")));
    CHECK_FALSE(is_irreducible(Polynomial::parse("x^2-1")));
    CHECK(is_irreducible(Polynomial::parse("x^4-10x^2+1")));
    // Swinnerton-Dyer style: reducible modulo every prime, irreducible over Z.
    CHECK(is_irreducible(Polynomial::parse("x^4+1")));
    CHECK_FALSE(is_irreducible(Polynomial::parse("x^4+4")));
    CHECK_FALSE(is_irreducible(Polynomial::parse("x^6-1")));
    CHECK(is_irreducible(Polynomial::parse("x^5-x-1")));
}

TEST_CASE("factor_monic reconstructs random products")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial a = random_poly(rng, 1 + trial % 3, 9, true);
        Polynomial b = random_poly(rng, 1 + (trial / 3) % 4, 9, true);
        Polynomial f = a * b;
        auto factors = factor_monic(f);
        Polynomial prod{1};
        for (auto const& g : factors) {
            CHECK(is_irreducible(g));
            prod = prod * g;
        }
        CHECK(prod == f);
        CHECK_FALSE(is_irreducible(f));
    }
}
