#include "doctest.h"
#include "factoromata/algebra.hpp"

using namespace factoromata;

namespace {

BigRat rat(long long n, long long d = 1) { return BigRat(n, d); }

BigInt p2(int e) { return BigInt(1) << e; }

}  // namespace

TEST_CASE("solve_exact: identity and a dense system") {
    RatMatrix id = {{rat(1), rat(0)}, {rat(0), rat(1)}};
    RatVector b = {rat(3), rat(-5, 2)};
    CHECK(solve_exact(id, b) == b);

    RatMatrix a = {{rat(2), rat(1)}, {rat(1), rat(3)}};
    RatVector x = solve_exact(a, {rat(5), rat(10)});
    CHECK(x == RatVector{rat(1), rat(3)});
}

TEST_CASE("solve_exact rejects singular and non-square input") {
    RatMatrix sing = {{rat(1), rat(2)}, {rat(2), rat(4)}};
    CHECK_THROWS_AS(solve_exact(sing, {rat(1), rat(1)}), AlgebraError);
    RatMatrix rect = {{rat(1), rat(2)}};
    CHECK_THROWS_AS(solve_exact(rect, {rat(1)}), AlgebraError);
}

TEST_CASE("the power-of-two interpolation systems") {
    // Rows evaluate c1*2^k + c2 + c3*2^{k/2} at k = 3, 27, 51.
    RatMatrix a = {{BigRat(p2(3)), rat(1), rat(1)},
                   {BigRat(p2(27)), rat(1), BigRat(p2(12))},
                   {BigRat(p2(51)), rat(1), BigRat(p2(24))}};
    RatVector x1 = solve_exact(
        a, {rat(0), rat(16773120), BigRat(BigInt(281474959933440))});
    CHECK(x1 == RatVector{rat(1, 8), rat(0), rat(-1)});

    RatVector x2 = solve_exact(
        a, {rat(3), rat(50327553), BigRat(BigInt(844424913354753))});
    CHECK(x2 == RatVector{rat(3, 8), rat(1), rat(-1)});
}

TEST_CASE("bareiss elimination stays integral") {
    IntMatrix m = {{BigInt(2), BigInt(1), BigInt(1)},
                   {BigInt(4), BigInt(3), BigInt(3)},
                   {BigInt(8), BigInt(7), BigInt(9)}};
    IntMatrix u = bareiss_eliminate(m);
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) CHECK(u[i][j] == 0);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(u[i][i] != 0);

    IntMatrix sing = {{BigInt(1), BigInt(2)}, {BigInt(2), BigInt(4)}};
    IntMatrix us = bareiss_eliminate(sing);
    CHECK(us[1][1] == 0);
}

TEST_CASE("polynomial arithmetic") {
    IntPolynomial x_minus_1 = make_poly({-1, 1});
    IntPolynomial x_minus_2 = make_poly({-2, 1});
    IntPolynomial prod = poly_mul(x_minus_1, x_minus_2);
    CHECK(prod.c == std::vector<BigInt>{2, -3, 1});
    CHECK(prod.degree() == 2);

    CHECK(poly_sub(prod, prod).is_zero());
    CHECK(make_poly({0, 0, 0}).is_zero());
    CHECK(make_poly({5, 0, 0}).degree() == 0);

    CHECK(poly_divides(x_minus_1, prod));
    CHECK(poly_divides(x_minus_2, prod));
    CHECK_FALSE(poly_divides(make_poly({-3, 1}), prod));
    // Rational divisibility: 2x - 2 divides x^2 - 3x + 2.
    CHECK(poly_divides(make_poly({-2, 2}), prod));
    CHECK_THROWS_AS(poly_divides(IntPolynomial{}, prod), AlgebraError);
}

TEST_CASE("minimal polynomials of small matrices") {
    RatMatrix nilpotent = {{rat(0), rat(1)}, {rat(0), rat(0)}};
    CHECK(minimal_polynomial(nilpotent).c == std::vector<BigInt>{0, 0, 1});

    RatMatrix identity = {{rat(1), rat(0)}, {rat(0), rat(1)}};
    CHECK(minimal_polynomial(identity).c == std::vector<BigInt>{-1, 1});

    RatMatrix diag12 = {{rat(1), rat(0)}, {rat(0), rat(2)}};
    CHECK(minimal_polynomial(diag12).c == std::vector<BigInt>{2, -3, 1});

    // Non-integer eigenvalue: minpoly of [[1/2]] is 2x - 1 after clearing.
    RatMatrix half = {{rat(1, 2)}};
    IntPolynomial p = minimal_polynomial(half);
    CHECK(p.c == std::vector<BigInt>{-1, 2});
}

TEST_CASE("recurrence_check") {
    auto pow2 = [](unsigned k) { return BigInt(1) << k; };
    CHECK(recurrence_check(pow2, make_poly({-2, 1}), 40).ok());
    PropertyReport bad = recurrence_check(pow2, make_poly({-3, 1}), 40);
    CHECK_FALSE(bad.ok());
    CHECK(bad.violations.size() == bad.cases);

    // Fibonacci: x^2 - x - 1.
    auto fib = [](unsigned k) {
        BigInt a = 0, b = 1;
        for (unsigned i = 0; i < k; ++i) {
            BigInt t = a + b;
            a = b;
            b = t;
        }
        return a;
    };
    CHECK(recurrence_check(fib, make_poly({-1, -1, 1}), 50).ok());
}

TEST_CASE("rational span") {
    RationalSpan span;
    CHECK(span.insert({rat(1), rat(0), rat(0)}));
    CHECK(span.insert({rat(1), rat(1), rat(0)}));
    CHECK_FALSE(span.insert({rat(3), rat(2), rat(0)}));
    CHECK(span.size() == 2);

    RatVector coords = span.express({rat(3), rat(2), rat(0)});
    CHECK(coords == RatVector{rat(1), rat(2)});
    CHECK_THROWS_AS(span.express({rat(0), rat(0), rat(1)}), AlgebraError);
    CHECK(span.generator(1) == RatVector{rat(1), rat(1), rat(0)});
}
