#include "doctest.h"
#include "oracles.hpp"

#include "latgrowth/errors.hpp"
#include "latgrowth/prasad.hpp"

#include <cmath>

using namespace latgrowth;
using namespace latgrowth::prasad;
using lie::Family;
using lie::root_system;
using numfield::field_from_polynomial;

TEST_CASE("finite group orders match enumeration")
{
    auto a1 = root_system(Family::A, 1);
    for (int q : {2, 3, 4, 5})
        CHECK(finite_group_order(a1, q, split_signs(a1)) == oracle::sl2_order_bruteforce(q));
    auto c2 = root_system(Family::C, 2);
    CHECK(finite_group_order(c2, 2, split_signs(c2)) == oracle::sp4_f2_order_bruteforce());
    CHECK(oracle::sp4_f2_order_bruteforce() == 720);
}

TEST_CASE("group orders are below q^dim for split types")
{
    for (auto const& t : lie::all_types(8))
        for (int q : {2, 3, 4, 5, 7, 8, 9}) {
            mpz_class qd;
            mpz_ui_pow_ui(qd.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(t.dim));
            CHECK(finite_group_order(t, q, split_signs(t)) < qd);
        }
}

TEST_CASE("order formula rejects bad input")
{
    auto a1 = root_system(Family::A, 1);
    CHECK_THROWS_AS(finite_group_order(a1, 6, {-1}), Error);
    CHECK_THROWS_AS(finite_group_order(a1, 2, {-1, -1}), Error);
    CHECK_THROWS_AS(finite_group_order(a1, 2, {0}), Error);
    // SU3(F_2) has order 2^8 (1 - 1/4)(1 + 1/8) = 216.
    auto a2 = root_system(Family::A, 2);
    CHECK(finite_group_order(a2, 2, {-1, 1}) == 216);
}

TEST_CASE("local factors")
{
    auto a1 = root_system(Family::A, 1);
    CHECK(local_factor(a1, 2, {-1}) == mpq_class(4, 3));
    auto c2 = root_system(Family::C, 2);
    CHECK(local_factor(c2, 2, split_signs(c2)) == mpq_class(64, 45));
    // Decreasing to 1 as q grows.
    mpq_class prev = local_factor(a1, 2, {-1});
    for (int q : {3, 4, 5, 7, 8, 9, 11, 13, 16, 17}) {
        mpq_class e = local_factor(a1, q, {-1});
        CHECK(e < prev);
        CHECK(e > 1);
        prev = e;
    }
    // e_v in (1, (1 - 1/4)^-r] for split types.
    for (auto const& t : lie::all_types(8)) {
        mpq_class cap = 1;
        for (int i = 0; i < t.rank; ++i)
            cap *= mpq_class(4, 3);
        for (int q : {2, 3, 5}) {
            mpq_class e = local_factor(t, q, split_signs(t));
            CHECK(e > 1);
            CHECK(e <= cap);
        }
    }
}

TEST_CASE("prime splitting")
{
    auto k = field_from_polynomial(Polynomial::parse("x^2-5"));
    CHECK(prime_splitting(k, 11).residue_degrees == std::vector<int>{1, 1});
    CHECK(prime_splitting(k, 3).residue_degrees == std::vector<int>{2});
    CHECK(prime_splitting(k, 5).ramified);
    // 2 divides disc(Z[sqrt5]) = 20 but not disc(k) = 5.
    auto k5 = field_from_polynomial(Polynomial::parse("x^2-5"), 128, mpz_class(5));
    auto s2 = prime_splitting(k5, 2);
    CHECK(s2.ramified);
    CHECK(s2.index_obstruction);
    CHECK_FALSE(prime_splitting(k5, 5).index_obstruction);
    // Unknown discriminant: 2^2 | 20 makes 2 suspicious, 5 || 20 is genuinely ramified.
    CHECK(prime_splitting(k, 2).index_obstruction);
    CHECK_FALSE(prime_splitting(k, 5).index_obstruction);

    auto cubic = field_from_polynomial(Polynomial::parse("x^3-x-1"));
    for (unsigned long p : primes_up_to(200)) {
        auto s = prime_splitting(cubic, p);
        if (s.ramified) {
            CHECK(p == 23);
            continue;
        }
        int sum = 0;
        for (int f : s.residue_degrees)
            sum += f;
        CHECK(sum == 3);
    }
    CHECK_THROWS_AS(prime_splitting(k, 9), Error);
}

TEST_CASE("sieve")
{
    CHECK(primes_up_to(30) == std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1000000).size() == 78498);
}

TEST_CASE("zeta of Q at 2 against the Basel series")
{
    auto Q = field_from_polynomial(Polynomial{0, 1});
    for (unsigned long B : {1000ul, 10000ul, 100000ul}) {
        RealInterval z = dedekind_zeta_partial(Q, 2, B);
        CHECK(z.lower_double() <= M_PI * M_PI / 6);
        CHECK(z.upper_double() >= M_PI * M_PI / 6);
        auto [lo, hi] = oracle::basel_bracket(200000);
        CHECK(z.overlaps(RealInterval::from_decimal(std::to_string(lo), std::to_string(hi))));
    }
}

TEST_CASE("zeta intervals nest and tighten")
{
    auto k = field_from_polynomial(Polynomial::parse("x^2-x-1"));
    RealInterval prev = dedekind_zeta_partial(k, 2, 100);
    for (unsigned long B : {1000ul, 10000ul, 50000ul}) {
        RealInterval z = dedekind_zeta_partial(k, 2, B);
        CHECK(prev.contains(z));
        CHECK(z.width() < prev.width());
        prev = z;
    }
    // zeta_k(2) <= zeta(2)^2
    double z2 = M_PI * M_PI / 6;
    CHECK(prev.upper_double() <= z2 * z2 + 1e-9);
    // Monotone decreasing in s, tending to 1.
    RealInterval z3 = dedekind_zeta_partial(k, 3, 10000);
    RealInterval z8 = dedekind_zeta_partial(k, 8, 10000);
    CHECK(z3.certainly_less(prev));
    CHECK(z8.certainly_less(z3));
    CHECK(z8.upper_double() < 1.01);
}

TEST_CASE("Euler products are independent of the thread count")
{
    auto k = field_from_polynomial(Polynomial::parse("x^3-x-1"));
    auto b2 = root_system(Family::B, 2);
    RealInterval one = euler_product_E(k, b2, 30000, 1);
    RealInterval eight = euler_product_E(k, b2, 30000, 8);
    CHECK(mpfr_equal_p(one.lower().get(), eight.lower().get()));
    CHECK(mpfr_equal_p(one.upper().get(), eight.upper().get()));
    CHECK(one.to_decimal(30) == eight.to_decimal(30));
}

TEST_CASE("Euler product for A1 over Q is zeta(2)")
{
    auto Q = field_from_polynomial(Polynomial{0, 1});
    auto a1 = root_system(Family::A, 1);
    RealInterval e = euler_product_E(Q, a1, 100000);
    CHECK(e.lower_double() <= M_PI * M_PI / 6);
    CHECK(e.upper_double() >= M_PI * M_PI / 6);
    // Bounded by prod zeta(m_i + 1)^d.
    auto e8 = root_system(Family::E, 8);
    RealInterval big = euler_product_E(Q, e8, 10000);
    CHECK(big.upper_double() < 1.7);
    CHECK(big.lower_double() > 1.0);
}

TEST_CASE("covolume of SL2 over Q")
{
    auto Q = field_from_polynomial(Polynomial{0, 1});
    auto a1 = root_system(Family::A, 1);
    auto r = covolume(Q, std::nullopt, a1, std::nullopt, 1000000);
    CHECK(r.value.contains(mpq_class(1, 24)));
    CHECK(r.value.width() < 1e-6);
    RealInterval prod = r.disc_factor * r.extension_factor * r.arch_factor * r.euler_factor * r.lambda_bound;
    CHECK(prod.contains(r.value));
    CHECK(r.value.certainly_positive());

    // Scaling the discriminant scales the value by D^(3/2).
    auto k = field_from_polynomial(Polynomial::parse("x^2-x-1"));
    auto rk = covolume(k, std::nullopt, a1, std::nullopt, 10000);
    CHECK(rk.disc_factor.contains(RealInterval::from_decimal("11.180339887498948", "11.180339887498949")) == false);
    CHECK(std::abs(rk.disc_factor.mid_double() - std::pow(5.0, 1.5)) < 1e-9);

    auto with_p0 = covolume(Q, std::nullopt, a1, 2ul, 10000);
    CHECK(with_p0.lambda_bound.lower_double() == 1.0);
    CHECK(with_p0.lambda_bound.upper_double() == 8.0);
}

TEST_CASE("outer forms use the extension factor")
{
    auto k = numfield::make_field(Polynomial::parse("x^2-x-1"));
    auto outer = lie::parse_type("2A2");
    CHECK_THROWS_AS(covolume(*k, std::nullopt, outer, std::nullopt, 1000), Error);
    auto alpha = numfield::FieldElement::one(k) - numfield::FieldElement::generator(k);
    auto ext = pisot::quadratic_extension(k, alpha, pisot::field_delta(*k));
    auto r = covolume(*k, ext, outer, std::nullopt, 1000);
    // D_{l/k} <= 2^4 |N(alpha)| = 16, s = 5.
    CHECK(r.extension_factor.lower_double() == 1.0);
    CHECK(std::abs(r.extension_factor.upper_double() - std::pow(16.0, 2.5)) < 1e-6);
    // Twisted local factors may push the Euler product below 1.
    CHECK(r.euler_factor.lower_double() < 1);
    CHECK(r.euler_factor.upper_double() > 1);
    CHECK(std::abs(r.euler_factor.lower_double() * r.euler_factor.upper_double() - 1) < 1e-12);
}

TEST_CASE("c1 constant")
{
    auto a1 = root_system(Family::A, 1);
    RealInterval c0 = RealInterval::from_decimal("1058.565", "1058.566");
    RealInterval c1 = covolume_upper_c1(c0, RealInterval::from_long(1), a1, 2);
    double expect = std::pow(1058.565, 1.5) * 8 * (M_PI * M_PI / 6) / (4 * M_PI * M_PI);
    CHECK(std::abs(c1.lower_double() / expect - 1) < 1e-9);
    CHECK(std::abs(c1.mid_double() - 1.148e4) < 10);
    RealInterval c1_3 = covolume_upper_c1(c0, RealInterval::from_long(1), a1, 3);
    CHECK(std::abs(c1_3.mid_double() / c1.mid_double() - 3.375) < 1e-9);
}

TEST_CASE("synthetic tower fields stay below c1^d")
{
    auto m = pisot::lookup_tower(pisot::tower_catalog(), "martinet")[0];
    auto a1 = root_system(Family::A, 1);
    RealInterval c1 = covolume_upper_c1(m.rd_constant(), RealInterval::from_long(1), a1, 2);
    for (int level = 0; level < 3; ++level) {
        auto f = pisot::tower_level_field(m, level);
        auto r = synthetic_covolume(f, a1, 2ul, std::nullopt, 10000);
        RealInterval bound = pow(c1, static_cast<unsigned long>(f.degree));
        CHECK(upper_within(r.value, bound));
        CHECK(r.value.certainly_positive());
    }
}

TEST_CASE("JSON breakdown")
{
    auto Q = field_from_polynomial(Polynomial{0, 1});
    auto r = covolume(Q, std::nullopt, root_system(Family::A, 1), std::nullopt, 1000);
    auto j = to_json(r);
    CHECK(j["value"].is_array());
    CHECK(j["value"][0].is_string());
    CHECK(j["prime_bound_used"] == "1000");
    CHECK(j["p0"].is_null());
}
