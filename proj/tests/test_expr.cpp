#include <doctest.h>

#include <multisym/expr.hpp>
#include <multisym/operators.hpp>
#include <multisym/selftest.hpp>
#include <multisym/symmetric.hpp>

using namespace msym;

TEST_SUITE("expr")
{
    TEST_CASE("evaluation")
    {
        const auto m11 = evaluate("M(1,1)", 3, 2);
        CHECK(m11 == power_sum({1, 1}, 3, 2));
        CHECK(m11.size() == 3);
        CHECK(evaluate("M((1,1))", 3, 2) == m11);
        CHECK(evaluate("psi(M(2,2))", 2, 2) == power_sum({1, 1}, 2, 2));
        CHECK(evaluate("polarize(M(5),1,2,2)", 3, 2) == power_sum({3, 2}, 3, 2));
        CHECK(evaluate("Ep(2)", 3, 2) == elementary({0, 3}, 3, 2));
        CHECK(evaluate("frobenius(E(1,1))", 2, 2) == frobenius(elementary({1, 1}, 2, 2)));
        CHECK(evaluate("2*x[1,1]^2 - x[3,2] + 4", 3, 2).to_string() == "2 * x[1,1]^2 + 2 * x[3,2]^1 + 1");
        CHECK(evaluate("(M(1)+M(0,1))^2", 2, 2) == power_sum({2}, 2, 2) + power_sum({0, 2}, 2, 2));
        CHECK(evaluate("-M(1)", 3, 1) == power_sum({1}, 3, 1).scaled(2));
    }

    TEST_CASE("errors carry positions")
    {
        try {
            evaluate("M(1,1) + ", 3, 2);
            FAIL("expected a parse error");
        } catch (const ParseError &e) {
            CHECK(e.position() == 9);
        }
        try {
            evaluate("M(1,1) $ 2", 3, 2);
            FAIL("expected a parse error");
        } catch (const ParseError &e) {
            CHECK(e.position() == 7);
        }
        CHECK_THROWS_AS(evaluate("foo(1)", 3, 2), ParseError);
        CHECK_THROWS_AS(evaluate("x[0,1]", 3, 2), ParseError);
        CHECK_THROWS_AS(evaluate("x[4,1]", 3, 2), ParseError);
        CHECK_THROWS_AS(evaluate("M(1,1,1)", 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(evaluate("E(2,2)", 3, 2), std::invalid_argument);
        CHECK_THROWS_AS(evaluate("psi(x[1,1])", 3, 2), std::invalid_argument);
    }

    TEST_CASE("recognition")
    {
        CHECK(recognize(evaluate("polarize(M(5),1,2,2)", 3, 2)) == "M(3,2)");
        CHECK(recognize(evaluate("psi(M(2,2))", 2, 2)) == "M(1,1)");
        CHECK(recognize(evaluate("2*E(1,1)", 3, 2)) == "2*E(1,1)");
        CHECK(recognize(evaluate("polarize(M(6),1,2,3)", 3, 2)) == "2*M(3,3)");
        CHECK(recognize(evaluate("M(1)-M(1)", 3, 2)) == "0");
        CHECK(!recognize(evaluate("M(1)*M(1)", 3, 2)));
        CHECK(!recognize(evaluate("x[1,1]", 3, 2)));
    }
}
