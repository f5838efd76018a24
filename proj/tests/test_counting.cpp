#include "doctest.h"
#include "oracles.hpp"

#include "latgrowth/counting.hpp"
#include "latgrowth/errors.hpp"

#include <cmath>

using namespace latgrowth;
using namespace latgrowth::counting;

namespace {

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (Error const& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::Io;
}

BoundParams with_C(double C)
{
    BoundParams p;
    p.C = C;
    return p;
}

} // namespace

TEST_CASE("Gaussian binomials")
{
    CHECK(gaussian_binomial(4, 2, 2) == 35);
    CHECK(gaussian_binomial(3, 1, 3) == 13);
    CHECK(gaussian_binomial(7, 0, 5) == 1);
    for (int p : {2, 3, 5, 7})
        for (int n = 0; n <= 7; ++n)
            for (int j = 0; j <= n; ++j) {
                auto g = gaussian_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(j),
                                           static_cast<unsigned long>(p));
                CHECK(g == oracle::count_j_subspaces(p, n, j));
                CHECK(g == gaussian_binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(n - j),
                                             static_cast<unsigned long>(p)));
            }
    CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), Error);
}

TEST_CASE("subgroups of elementary abelian groups match enumeration")
{
    CHECK(subgroup_count_elem_abelian(2, 3) == 16);
    CHECK(subgroup_count_elem_abelian(2, 4) == 67);
    CHECK(subgroup_count_elem_abelian(5, 1) == 2);
    for (int p : {2, 3})
        for (int d = 1; d <= 4; ++d)
            CHECK(subgroup_count_elem_abelian(static_cast<unsigned long>(p), static_cast<unsigned long>(d))
                  == oracle::count_subspaces_bruteforce(p, d));
}

TEST_CASE("subgroup counts dominate p^[d^2/4]")
{
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul})
        for (unsigned long d = 1; d <= 8; ++d) {
            mpz_class bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), p, d * d / 4);
            CHECK(subgroup_count_elem_abelian(p, d) >= bound);
        }
}

TEST_CASE("composition, rank and GL rank bounds")
{
    CHECK(sn_composition_bound(1, 1, 7, 0) == 1);
    CHECK(sn_composition_bound(5, 3, 10, 2) == 1500);
    CHECK(sn_rank_bound(1, 0) == 1);
    CHECK(sn_rank_bound(12, 3) == 2985984);
    CHECK(sn_rank_bound(13, 0) == 169);
    CHECK(rank_bound_gl(2, 1) == 8);
    CHECK(rank_bound_gl(2, 3) == 24);
    for (unsigned long s = 1; s <= 5; ++s)
        for (unsigned long f = 1; f <= 5; ++f)
            CHECK(rank_bound_gl(s, 2 * f) == 2 * rank_bound_gl(s, f));
    CHECK(distinct_prime_count(1) == 0);
    CHECK(distinct_prime_count(2 * 3 * 5 * 7 * 11 * 13) == 6);
    CHECK(distinct_prime_count(1024) == 1);
    CHECK(distinct_prime_count(999999000001ul) == 1); // prime
}

TEST_CASE("bounds are monotone in every argument")
{
    for (unsigned long a = 1; a <= 6; ++a)
        for (unsigned long b = 1; b <= 6; ++b)
            for (unsigned long n = 1; n <= 6; ++n)
                for (unsigned long r = 0; r <= 3; ++r) {
                    auto base = sn_composition_bound(a, b, n, r);
                    CHECK(sn_composition_bound(a + 1, b, n, r) >= base);
                    CHECK(sn_composition_bound(a, b + 1, n, r) >= base);
                    CHECK(sn_composition_bound(a, b, n + 1, r) >= base);
                    CHECK(sn_composition_bound(a, b, n, r + 1) >= base);
                }
    for (unsigned long n = 1; n <= 40; ++n)
        for (unsigned long r = 0; r <= 3; ++r)
            CHECK(sn_rank_bound(n, r + 1) >= sn_rank_bound(n, r));
    for (double C : {0.5, 1.0, 1.5, 2.0})
        for (unsigned long n = 1; n <= 8; ++n)
            for (unsigned long x = 1; x <= 8; ++x) {
                auto base = level_index_bound(n, x, with_C(C));
                CHECK(level_index_bound(n + 1, x, with_C(C)) >= base);
                CHECK(level_index_bound(n, x + 1, with_C(C)) >= base);
                CHECK(level_index_bound(n, x, with_C(C + 0.25)) >= base);
                auto cc = conjugate_count_bound(n, x, with_C(C), {2, 3}, 3);
                CHECK(conjugate_count_bound(n, x, with_C(C), {2, 4}, 3) >= cc);
                CHECK(conjugate_count_bound(n, x, with_C(C), {2, 3}, 4) >= cc);
            }
}

TEST_CASE("conjugate count and level bounds")
{
    CHECK(conjugate_count_bound(10, 100, with_C(1), {2, 3}, 3) == 216000);
    CHECK(conjugate_count_bound(10, 1, with_C(3.7), {2, 3}, 3) == 2160);
    CHECK(conjugate_count_bound(1, 100, with_C(1), {5}, 1) == 500);
    CHECK(level_index_bound(6, 10, with_C(2)) == 600);
    CHECK(level_index_bound(6, 1, with_C(2)) == 6);
    // Exact roots: 4^(1/2) = 2, 2^(1/2) = 1.414...
    CHECK(level_index_bound(3, 4, with_C(0.5)) == 6);
    CHECK(level_index_bound(1, 2, with_C(0.5)) == 2);
    CHECK(level_index_bound(10, 2, with_C(0.5)) == 15);
    // An exponent without a small denominator goes through intervals.
    CHECK(level_index_bound(1, 10, with_C(0.1)) == 2);
    CHECK(level_index_bound(1000, 10, with_C(0.1)) == static_cast<long>(std::ceil(1000 * std::pow(10.0, 0.1))));
    CHECK_THROWS_AS(conjugate_count_bound(1, 1, with_C(1), {}, 3), Error);
}

TEST_CASE("BoundParams from JSON")
{
    auto p = bound_params_from_json(nlohmann::json::parse(R"({"C": 2, "C1": "0.5", "s_embed": 3})"));
    CHECK(p.C == 2);
    CHECK(p.C1 == 0.5);
    CHECK(p.s_embed == 3);
    CHECK(p.defaulted == std::vector<std::string>{"C2", "c4", "f1"});
    CHECK(to_json(p)["C1"] == "0.5");
    CHECK(kind_of([] { bound_params_from_json(nlohmann::json::parse(R"({"C": -1})")); })
          == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { bound_params_from_json(nlohmann::json::parse(R"({"s_embed": 1.5})")); })
          == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { bound_params_from_json(nlohmann::json::parse(R"({"bogus": 1})")); })
          == ErrorKind::InvalidArgument);
    CHECK(bound_params_from_json(nlohmann::json::parse(R"({"C1": 0, "c4": 0})")).C1 == 0);
}

TEST_CASE("lower growth assembly")
{
    auto a1 = lie::root_system(lie::Family::A, 1);
    RealInterval c1 = RealInterval::from_decimal("11480.1", "11480.2");
    auto r = lower_growth_assemble(c1, a1, 3, 0, {20, 40, 80});
    CHECK(r.c2_exponent == mpq_class(1, 4));
    double expect = 0.25 * std::log2(3.0) / std::pow(std::log2(11480.15) + 3 * std::log2(3.0), 2);
    CHECK(std::abs(r.a.mid_double() / expect - 1) < 1e-5);
    CHECK(r.a.certainly_positive());
    CHECK(std::abs(r.c2.mid_double() - std::pow(3.0, 0.25)) < 1e-12);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].subgroup_exponent == 100);
    CHECK(r.rows[0].index_exponent == 60);
    CHECK(r.rows[2].net_count_exponent == 1600);

    // Appending larger degrees does not move a when c4 = 0.
    auto more = lower_growth_assemble(c1, a1, 3, 0, {20, 40, 80, 160, 320});
    CHECK(more.a.to_decimal(30) == r.a.to_decimal(30));

    // a decreases as c1 grows.
    auto bigger = lower_growth_assemble(RealInterval::from_decimal("20000", "20000"), a1, 3, 0, {20, 40, 80});
    CHECK(bigger.a.certainly_less(r.a));

    // A positive c4 drops early rows and shrinks c2.
    auto disc = lower_growth_assemble(c1, a1, 3, 6, {20, 40, 80});
    CHECK(disc.rows[0].net_count_exponent == -20);
    CHECK(disc.rows[0].flagged);
    CHECK_FALSE(disc.rows[1].flagged);
    CHECK(disc.c2_exponent == mpq_class(1, 10)); // (400 - 240) / 1600

    CHECK(kind_of([&] { lower_growth_assemble(c1, a1, 3, 1000, {20, 40, 80}); }) == ErrorKind::EmptyReport);
    CHECK(kind_of([&] { lower_growth_assemble(c1, a1, 4, 0, {20}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([&] { lower_growth_assemble(c1, a1, 3, 0, {40, 20}); }) == ErrorKind::InvalidArgument);

    auto j = to_json(r);
    CHECK(j["rows"][0]["index_bound"] == "3^60");
    CHECK(j["c2_exponent"] == "1/4");
    auto csv = to_csv(r);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
}

TEST_CASE("upper growth assembly")
{
    BoundParams p;
    auto u = upper_growth_assemble(100, p, {{2, 1}, {3, 1}});
    CHECK(u.rank_T == 16);
    CHECK(u.nu == 2);
    CHECK(u.e_Q == 19);
    CHECK(u.rank_T1 == 48);
    CHECK(std::abs(u.e_N.mid_double() - 52) < 1e-12);
    CHECK(std::abs(u.e_Lambda.mid_double() - 87) < 1e-12);
    CHECK(std::abs(u.e_norm.mid_double() - 2 * std::log2(100.0)) < 1e-12);
    CHECK(std::abs(u.B.mid_double() - (87 + 2 * std::log2(100.0))) < 1e-12);

    auto empty = upper_growth_assemble(100, p, {});
    CHECK(empty.rank_T == 0);
    CHECK(empty.e_Q == 3);

    // B / log x stays bounded along the worst-case residue data.
    double prev_ratio = 0;
    for (unsigned long x = 100; x <= 1000000; x *= 10) {
        unsigned long f = static_cast<unsigned long>(std::floor(std::log2(static_cast<double>(x))));
        auto w = upper_growth_assemble(x, p, {{2, f}});
        double ratio = w.B_over_log2x.upper_double();
        CHECK(ratio < 40);
        CHECK(ratio > 0);
        prev_ratio = std::max(prev_ratio, ratio);
    }
    CHECK(prev_ratio < 40);

    CHECK(kind_of([&] { upper_growth_assemble(100, p, {{2, 7}}); }) == ErrorKind::ResidueBudgetExceeded);
    BoundParams zero = p;
    zero.C1 = 0;
    CHECK_NOTHROW(upper_growth_assemble(100, zero, {}));
    CHECK(kind_of([&] { upper_growth_assemble(100, zero, {{2, 1}}); }) == ErrorKind::ResidueBudgetExceeded);
    // Boundary: 2^6 = 64 <= 64^1.
    CHECK_NOTHROW(upper_growth_assemble(64, p, {{2, 6}}));
    BoundParams half = p;
    half.C1 = 0.5;
    CHECK_NOTHROW(upper_growth_assemble(64, half, {{2, 3}}));
    CHECK(kind_of([&] { upper_growth_assemble(64, half, {{2, 4}}); }) == ErrorKind::ResidueBudgetExceeded);
}
