#include <doctest.h>

#include <multisym/errors.hpp>
#include <multisym/operators.hpp>
#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>

#include "oracles.hpp"

using namespace msym;

namespace
{

int derived_sign(std::uint32_t p, std::uint32_t i)
{
    return (p - 1 - i) % 2 == 0 ? 1 : -1;
}

int alternating_sign(std::uint32_t, std::uint32_t i)
{
    return i % 2 == 0 ? 1 : -1;
}

int no_sign(std::uint32_t, std::uint32_t)
{
    return 1;
}

} // namespace

TEST_SUITE("operators")
{
    TEST_CASE("integer Newton identity")
    {
        for (std::uint32_t p : {2u, 3u, 5u}) {
            CHECK(check_newton_tilde(p));
            CHECK(oracle::newton_by_evaluation(p, derived_sign, 50));
        }
        // The alternating sign is right for odd p but off by a global sign at p = 2.
        CHECK(check_newton_tilde(3, NewtonSign::alternating));
        CHECK(!check_newton_tilde(2, NewtonSign::alternating));
        CHECK(!oracle::newton_by_evaluation(2, alternating_sign, 50));
        // Dropping the signs is wrong for every odd p.
        CHECK(!check_newton_tilde(3, NewtonSign::none));
        CHECK(!oracle::newton_by_evaluation(3, no_sign, 50));
    }

    TEST_CASE("newton rewrite")
    {
        // p = 3: M(3) = E_1 M(2) - E_2 M(1) + E_3 M(0).
        const auto terms = newton_rewrite({3}, 0, 3, 1);
        REQUIRE(terms.size() == 3);
        CHECK(terms[1].generator == ExpTuple{2});
        CHECK(terms[1].power_sum == ExpTuple{1});
        CHECK(terms[1].coeff == 2);
        CHECK(terms[2].coeff == 1);

        const auto unsigned_terms = newton_terms({3}, 0, 3, NewtonSign::none);
        CHECK(!newton_identity_holds(unsigned_terms, {3}, 3, 1));
        CHECK(newton_identity_holds(newton_terms({2}, 0, 2, NewtonSign::none), {2}, 2, 1));

        // The worked example: M(3,3) through M(3,2), M(3,1), M(3) at column 2.
        const auto example = newton_rewrite({3, 3}, 1, 3, 2);
        CHECK(example[0].power_sum == ExpTuple{3});
        CHECK(example[1].power_sum == ExpTuple{3, 1});
        CHECK(example[2].power_sum == ExpTuple{3, 2});

        CHECK_THROWS_AS(newton_rewrite({2}, 0, 3, 1), std::invalid_argument);
        for (std::uint32_t p : {2u, 3u}) {
            const auto suite = suite_newton(p, 8);
            CHECK_MESSAGE(suite.ok(), suite.first_failure);
        }
    }

    TEST_CASE("single column expansion")
    {
        const auto m1 = power_to_elementary_one_column(1, 0, 3);
        CHECK(m1 == ElementaryExpr::generator(3, {1}));
        const auto m2 = power_to_elementary_one_column(2, 0, 2);
        CHECK(m2 == ElementaryExpr::generator(2, {1}) * ElementaryExpr::generator(2, {1}));
        for (std::uint32_t p : {2u, 3u, 5u}) {
            for (std::uint64_t m = 1; m <= 8; ++m) {
                CHECK(power_to_elementary_one_column(m, 0, p).expand(1) == power_sum({static_cast<std::uint32_t>(m)}, p, 1));
            }
        }
        CHECK(power_to_elementary_one_column(3, 1, 3).expand(2) == power_sum({0, 3}, 3, 2));
    }

    TEST_CASE("polarization examples")
    {
        const auto f = power_sum({2, 1}, 3, 2);
        CHECK(polarize(f, {0, 1, 0}) == f);
        CHECK(polarize(power_sum({5}, 3, 2), {0, 1, 2}) == power_sum({3, 2}, 3, 2));
        CHECK(polarize(power_sum({4}, 3, 2), {0, 1, 1}) == power_sum({3, 1}, 3, 2));
        CHECK(polarize(power_sum({6}, 3, 2), {0, 1, 3}) == power_sum({3, 3}, 3, 2).scaled(2));
        CHECK(polarize(power_sum({6}, 3, 2), {0, 1, 1}).is_zero());
        CHECK_THROWS_AS(polarize(f, {0, 2, 1}), std::invalid_argument);
        CHECK_THROWS_AS(polarize(f, {1, 1, 1}), std::invalid_argument);
    }

    TEST_CASE("generator closed form and Leibniz rule")
    {
        CHECK(validate_polarization_closed_form(2, 3));
        CHECK(validate_polarization_closed_form(3, 3));
        CHECK(validate_polarization_closed_form(5, 2));
        const auto [c, moved] = polarize_generator({2, 1}, {0, 1, 1}, 3);
        CHECK(c == 2);
        CHECK(moved == ExpTuple{1, 2});
        CHECK(polarize_generator({1}, {0, 1, 2}, 3).first == 0);

        const auto expr = ElementaryExpr::generator(3, {2}) * ElementaryExpr::generator(3, {1, 1});
        const PolarizationOp op{0, 1, 2};
        CHECK(polarize_expr(expr, op).expand(2) == polarize(expr.expand(2), op));

        Rng rng(3);
        for (std::uint32_t p : {2u, 3u}) {
            const auto suite = suite_polarization(rng, p, 25);
            CHECK_MESSAGE(suite.ok(), suite.first_failure);
        }
    }

    TEST_CASE("flattening")
    {
        const auto five = flatten_tuple({5}, 0, 3);
        CHECK(five.target == ExpTuple{3, 2});
        CHECK(!five.shifted);
        CHECK(flatten_tuple({4}, 0, 3).target == ExpTuple{3, 1});
        CHECK(flatten_tuple({1}, 0, 3).target == ExpTuple{0, 1});
        const auto shifted = flatten_tuple({4, 2}, 0, 3);
        CHECK(shifted.shifted);
        CHECK(shifted.target == ExpTuple{3, 1, 2});
        CHECK(realize_flatten(shifted, 3, 3) == power_sum({3, 1, 2}, 3, 3));
        CHECK_THROWS_AS(flatten_tuple({3}, 0, 3), std::invalid_argument);
        for (std::uint32_t p : {2u, 3u}) {
            const auto suite = suite_flatten(p, 8);
            CHECK_MESSAGE(suite.ok(), suite.first_failure);
        }
    }

    TEST_CASE("frobenius splitting")
    {
        CHECK(frobenius_split(power_sum({3, 6}, 3, 2)) == power_sum({1, 2}, 3, 2));
        CHECK(frobenius_split(elementary({3}, 3, 1)).is_zero());
        CHECK(frobenius_split(elementary({2}, 2, 1)).is_zero());
        const auto m1 = power_sum({1}, 2, 1);
        CHECK(frobenius_split(m1 * m1 * elementary({2}, 2, 1)).is_zero());
        CHECK_THROWS_AS(frobenius_split(Poly::variable(Shape::ring(2, 1), 0, 0)), std::invalid_argument);
        Rng rng(11);
        for (std::uint32_t p : {2u, 3u}) {
            const auto suite = suite_frobenius_split(rng, p, 3, 8, 40);
            CHECK_MESSAGE(suite.ok(), suite.first_failure);
        }
    }
}
