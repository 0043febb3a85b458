#include <doctest.h>

#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>

#include "oracles.hpp"

using namespace msym;

namespace
{

Poly var(const Shape &s, std::size_t r, std::size_t c)
{
    return Poly::variable(s, r, c);
}

} // namespace

TEST_SUITE("multisym")
{
    TEST_CASE("orbit sums")
    {
        const auto shape = Shape::ring(3, 4);
        Monomial fixed(3, 4);
        for (std::size_t r = 0; r < 3; ++r) {
            fixed.set(r, 0, 1);
        }
        CHECK(orbit_sum(shape, fixed).size() == 1);

        Monomial m(3, 4);
        m.set(0, 0, 3);
        m.set(0, 1, 2);
        auto row = [&](std::size_t r) { return pow(var(shape, r, 0), 3) * pow(var(shape, r, 1), 2); };
        CHECK(orbit_sum(shape, m) == row(0) + row(1) + row(2));

        Monomial two(3, 4);
        two.set(0, 3, 1);
        two.set(1, 3, 1);
        const auto expected =
            var(shape, 0, 3) * var(shape, 1, 3) + var(shape, 0, 3) * var(shape, 2, 3) + var(shape, 1, 3) * var(shape, 2, 3);
        CHECK(orbit_sum(shape, two) == expected);
        CHECK(elementary(ExpTuple::unit(3, 2), 3, 4) == expected);
    }

    TEST_CASE("power sums")
    {
        CHECK(power_sum({}, 3, 2).is_zero());
        const auto shape = Shape::ring(3, 2);
        CHECK(power_sum(ExpTuple::unit(1, 4), 3, 2)
              == pow(var(shape, 0, 1), 4) + pow(var(shape, 1, 1), 4) + pow(var(shape, 2, 1), 4));
        CHECK(power_sum({3, 3}, 3, 2) == oracle::power_sum_by_rows({3, 3}, 3, 2));
        CHECK_THROWS_AS(power_sum({1, 1, 1}, 3, 2), std::invalid_argument);
        for (std::uint32_t p : {2u, 3u}) {
            for (std::uint64_t d = 0; d <= 4; ++d) {
                for (const auto &a : tuples_of_degree(d, 3)) {
                    CHECK(power_sum(a, p, 3) == oracle::power_sum_by_rows(a, p, 3));
                }
            }
        }
    }

    TEST_CASE("elementary multisymmetric polynomials")
    {
        const auto shape = Shape::ring(2, 2);
        CHECK(elementary({1, 1}, 2, 2) == var(shape, 0, 0) * var(shape, 1, 1) + var(shape, 1, 0) * var(shape, 0, 1));
        const auto s3 = Shape::ring(3, 1);
        CHECK(elementary({3}, 3, 1) == var(s3, 0, 0) * var(s3, 1, 0) * var(s3, 2, 0));
        CHECK_THROWS_AS(elementary({2, 2}, 3, 2), std::invalid_argument);
        for (std::uint32_t p : {2u, 3u}) {
            for (std::size_t n = 1; n <= 3; ++n) {
                for (std::uint64_t d = 1; d <= p; ++d) {
                    for (const auto &a : tuples_of_degree(d, n)) {
                        CHECK(elementary(a, p, n) == oracle::elementary_by_extraction(a, p, n));
                    }
                }
            }
        }
    }

    TEST_CASE("gamma and shuffle")
    {
        const auto row = single_row_shape(3, 2);
        const auto x1 = Poly::variable(row, 0, 0);
        const auto x2 = Poly::variable(row, 0, 1);
        CHECK(gamma(2, Poly::one(row)).body() == Poly::one(Shape{row.field, 2, 2}));
        const auto g = gamma(2, x1);
        CHECK(g.body() == var(g.body().shape(), 0, 0) * var(g.body().shape(), 1, 0));
        CHECK(gamma(2, x1 + x2) == gamma(2, x1) + shuffle(gamma(1, x1), gamma(1, x2)) + gamma(2, x2));
        CHECK(shuffle(gamma(1, x1), gamma(1, x1)) == gamma(2, x1).scaled(2));
        CHECK(shuffle(gamma(1, x1), gamma(1, x1)).body().size() == 1);
        CHECK_THROWS(gamma(-1, x1));

        const auto row2 = single_row_shape(2, 1);
        CHECK(shuffle(gamma(1, Poly::variable(row2, 0, 0)), gamma(1, Poly::variable(row2, 0, 0))).body().is_zero());

        // gamma^1(x^alpha) x gamma^{p-1}(1) is the power sum.
        Monomial m(1, 2);
        m.set(0, 0, 2);
        m.set(0, 1, 1);
        const auto s = shuffle(gamma(1, Poly::monomial(row, m)), gamma(2, Poly::one(row)));
        CHECK(s.body() == power_sum({2, 1}, 3, 2));
        CHECK(spread_over_rows(Poly::monomial(row, m), 3) == power_sum({2, 1}, 3, 2));
    }

    TEST_CASE("gamma identities on random samples")
    {
        Rng rng(99);
        for (std::uint32_t p : {2u, 3u}) {
            const auto result = suite_gamma_identities(rng, p, 3, 30);
            CHECK_MESSAGE(result.ok(), result.first_failure);
            const auto algebra = suite_shuffle_algebra(rng, p, 20);
            CHECK_MESSAGE(algebra.ok(), algebra.first_failure);
        }
    }

    TEST_CASE("invariance")
    {
        const auto shape = Shape::ring(3, 2);
        CHECK(is_invariant(power_sum({2, 1}, 3, 2)));
        CHECK(!is_invariant(var(shape, 0, 0)));
        CHECK(is_invariant(elementary({1, 1}, 3, 2) + elementary({2}, 3, 2)));
        CHECK_THROWS_AS(SymTensor(var(shape, 0, 0)), std::invalid_argument);
    }
}
