#include <doctest.h>

#include <random>

#include <multisym/field.hpp>
#include <multisym/poly.hpp>
#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>

#include "oracles.hpp"

using namespace msym;

TEST_SUITE("core-poly")
{
    TEST_CASE("field arithmetic")
    {
        PrimeField F(7);
        CHECK(F.add(5, 4) == 2);
        CHECK(F.sub(2, 5) == 4);
        CHECK(F.mul(F.inv(3), 3) == 1);
        CHECK(F.from_int(-1) == 6);
        CHECK(F.binomial(10, 3) == 120 % 7);
        CHECK_THROWS_AS(F.inv(0), std::domain_error);
        CHECK_THROWS(PrimeField(4));
        CHECK_THROWS(PrimeField(67));
        PrimeField G(3);
        CHECK(G.binomial(5, 2) == 1);
        CHECK(G.binomial(6, 3) == 2);
        CHECK(G.binomial(6, 2) == 0);
    }

    TEST_CASE("exponent tuples")
    {
        const ExpTuple a{3, 0, 2, 0, 0};
        CHECK(a.length() == 3);
        CHECK(a.degree() == 5);
        CHECK(a[7] == 0);
        CHECK(a.to_string() == "(3,0,2)");
        CHECK(ExpTuple{}.to_string() == "(0)");
        CHECK(ExpTuple::parse(" ( 1 , 2 ) ") == ExpTuple{1, 2});
        CHECK(ExpTuple::parse("4") == ExpTuple{4});
        CHECK(ExpTuple::parse("()").is_zero());
        CHECK_THROWS(ExpTuple::parse("(1,x)"));
        CHECK_THROWS_AS(ExpTuple{1} - ExpTuple{2}, std::domain_error);
        CHECK(tuples_of_degree(2, 2) == std::vector<ExpTuple>{ExpTuple{0, 2}, ExpTuple{1, 1}, ExpTuple{2}});
    }

    TEST_CASE("additive identity and cancellation")
    {
        const auto shape = Shape::ring(3, 2);
        const auto x = Poly::variable(shape, 0, 0);
        CHECK(x + Poly(shape) == x);
        CHECK((x + x.scaled(2)).is_zero());
    }

    TEST_CASE("M(1,1) + E(1,1) at p=2 is the four-term polynomial")
    {
        const auto shape = Shape::ring(2, 2);
        auto v = [&](std::size_t r, std::size_t c) { return Poly::variable(shape, r, c); };
        const auto expected = v(0, 0) * v(0, 1) + v(1, 0) * v(1, 1) + v(0, 0) * v(1, 1) + v(0, 1) * v(1, 0);
        CHECK(power_sum({1, 1}, 2, 2) + elementary({1, 1}, 2, 2) == expected);
        CHECK(expected.size() == 4);
    }

    TEST_CASE("products against hand expansions")
    {
        const auto shape = Shape::ring(2, 2);
        CHECK(power_sum({1}, 2, 2) * power_sum({1}, 2, 2) == power_sum({2}, 2, 2));
        const auto e11 = elementary({1, 1}, 2, 2);
        CHECK(power_sum({2}, 2, 2) * power_sum({0, 2}, 2, 2) == power_sum({2, 2}, 2, 2) + e11 * e11);
        const auto f = power_sum({1, 1}, 2, 2);
        CHECK(f * Poly::one(shape) == f);
    }

    TEST_CASE("mul agrees with the double-loop oracle")
    {
        Rng rng(17);
        for (std::uint32_t p : {2u, 3u, 5u}) {
            for (int k = 0; k < 60; ++k) {
                const auto shape = Shape::ring(p, 1 + k % 3);
                const auto f = random_poly(rng, shape, 50, 4);
                const auto g = random_poly(rng, shape, 50, 4);
                REQUIRE(f * g == oracle::naive_mul(f, g));
            }
        }
    }

    TEST_CASE("ring axioms and frobenius")
    {
        Rng rng(5);
        for (std::uint32_t p : {2u, 3u}) {
            for (int k = 0; k < 40; ++k) {
                const auto shape = Shape::ring(p, 2);
                const auto f = random_poly(rng, shape, 6, 3);
                const auto g = random_poly(rng, shape, 6, 3);
                const auto h = random_poly(rng, shape, 6, 3);
                CHECK(f * g == g * f);
                CHECK((f * g) * h == f * (g * h));
                CHECK(f * (g + h) == f * g + f * h);
                CHECK(frobenius(f * g) == frobenius(f) * frobenius(g));
                CHECK(frobenius(f + g) == frobenius(f) + frobenius(g));
                CHECK(frobenius(f) == pow(f, p));
            }
        }
        CHECK(frobenius(Poly(Shape::ring(3, 1))).is_zero());
        CHECK(frobenius(power_sum({1, 2}, 3, 2)) == power_sum({3, 6}, 3, 2));
    }

    TEST_CASE("homogeneity and multigrading")
    {
        const auto f = power_sum({2, 1}, 3, 2) + power_sum({1, 2}, 3, 2);
        CHECK(f.homogeneous_degree() == 3u);
        CHECK(!f.multidegree());
        const auto parts = f.multigraded_components();
        REQUIRE(parts.size() == 2);
        CHECK(parts[0].first == ExpTuple{1, 2});
        CHECK(parts[1].second == power_sum({2, 1}, 3, 2));
        CHECK(!(f + Poly::one(f.shape())).homogeneous_degree());
    }

    TEST_CASE("serialization")
    {
        const auto shape = Shape::ring(3, 2);
        const auto f = power_sum({1, 1}, 3, 2).scaled(2) + Poly::variable(shape, 2, 1);
        CHECK(Poly::from_json(shape, f.to_json()) == f);
        CHECK(Poly::variable(shape, 0, 1).to_string() == "1 * x[1,2]^1");
        CHECK(Poly(shape).to_string() == "0");
        const auto j = Poly::variable(shape, 1, 0).to_json();
        CHECK(j[0]["exponents"][0] == nlohmann::json::array({2, 1, 1}));
    }

    TEST_CASE("shape mismatches are rejected")
    {
        CHECK_THROWS_AS(power_sum({1}, 2, 1) + power_sum({1}, 3, 1), std::invalid_argument);
        CHECK_THROWS_AS(power_sum({1}, 2, 1) * power_sum({1}, 2, 2), std::invalid_argument);
    }
}
