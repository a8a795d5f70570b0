#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "orbcc/laurent.hpp"

#include <random>

using namespace orbcc;

namespace {

ExponentVector ev(std::vector<int> x, std::vector<int> y) {
    return ExponentVector(std::move(x), std::move(y));
}

LaurentPolynomial random_poly(std::mt19937_64 &rng, int n, int terms) {
    LaurentPolynomial p(n);
    for (int t = 0; t < terms; ++t) {
        ExponentVector e(n);
        for (int i = 0; i < n; ++i) {
            e.x[i] = (int)(rng() % 5) - 2;
            e.y[i] = (int)(rng() % 3);
        }
        p.add_term(e, Coeff((long long)(rng() % 9) - 4));
    }
    return p;
}

} // namespace

TEST_CASE("monomial basics") {
    CHECK(LaurentPolynomial::constant(3, 1).canonical_text() == "1");
    CHECK(LaurentPolynomial::constant(3, 0).canonical_text() == "0");
    CHECK(LaurentPolynomial::monomial(0, ev({1, 0, 0}, {0, 0, 0})).is_zero());

    // the chi = 2 row of the first worked table, as a single term
    auto p = LaurentPolynomial::monomial(2, ev({1, 0, -1}, {0, 1, 0}));
    CHECK(p.canonical_text() == "2*x1*x3^-1*y2");
}

TEST_CASE("add and mul") {
    int n = 3;
    auto x1 = LaurentPolynomial::monomial(1, ev({1, 0, 0}, {0, 0, 0}));
    CHECK((x1 + x1).canonical_text() == "2*x1");

    auto a = LaurentPolynomial::monomial(1, ev({0, -2, 1}, {0, 0, 0}));
    auto b = LaurentPolynomial::monomial(1, ev({1, 0, -1}, {0, 1, 0}));
    CHECK((a * b).canonical_text() == "x1*x2^-2*y2");

    auto zero = (x1 - x1);
    CHECK(zero.is_zero());
    CHECK(zero.canonical_text() == "0");

    LaurentPolynomial other(2);
    CHECK_THROWS((void)(x1 + other));
    (void)n;
}

TEST_CASE("canonical text formatting rules") {
    auto t = LaurentPolynomial::monomial(2, ev({1, -2, 0}, {0, 1, 0}));
    CHECK(t.canonical_text() == "2*x1*x2^-2*y2");
    auto neg = LaurentPolynomial::monomial(-1, ev({1, 0, 0}, {0, 0, 0}));
    CHECK(neg.canonical_text() == "-x1");
    auto sum = t + neg;
    CHECK(sum.canonical_text() == "-x1 + 2*x1*x2^-2*y2");
}

TEST_CASE("parser round trip") {
    std::mt19937_64 rng(20240817);
    for (int i = 0; i < 200; ++i) {
        auto p = random_poly(rng, 3, (int)(rng() % 6));
        auto q = parse_polynomial(p.canonical_text(), 3);
        CHECK(p == q);
    }
    CHECK_THROWS(parse_polynomial("x0", 3));
    CHECK_THROWS(parse_polynomial("z1", 3));
    CHECK_THROWS(parse_polynomial("", 3));
    CHECK_THROWS(parse_polynomial("y1^-1", 3));
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 60; ++i) {
        auto a = random_poly(rng, 2, 3);
        auto b = random_poly(rng, 2, 3);
        auto c = random_poly(rng, 2, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("mul preserves nonnegative y exponents") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 50; ++i) {
        auto a = random_poly(rng, 2, 3);
        auto b = random_poly(rng, 2, 3);
        for (const auto &[e, coeff] : (a * b).terms()) {
            (void)coeff;
            for (int y : e.y)
                CHECK(y >= 0);
        }
    }
}

TEST_CASE("six-term table assembly") {
    // rows of the first worked chi table: (e, chi, x^{Ce} y^e)
    const int n = 3;
    struct Row {
        std::vector<int> x;
        std::vector<int> y;
        int chi;
    };
    std::vector<Row> rows = {
        {{0, 0, 0}, {0, 0, 0}, 1},  {{1, 0, -1}, {0, 1, 0}, 2}, {{2, 0, -2}, {0, 2, 0}, 1},
        {{1, 1, -1}, {0, 1, 1}, 1}, {{2, 1, -2}, {0, 2, 1}, 1}, {{2, 2, -2}, {0, 2, 2}, 1}};
    LaurentPolynomial sum(n);
    for (const auto &r : rows)
        sum = sum + LaurentPolynomial::monomial(r.chi, ev(r.x, r.y));
    auto shifted = sum * LaurentPolynomial::monomial(1, ev({0, -2, 1}, {0, 0, 0}));
    CHECK(shifted.term_count() == 6);
    std::multiset<long long> coeffs;
    for (const auto &[e, c] : shifted.terms()) {
        (void)e;
        coeffs.insert((long long)c);
    }
    CHECK(coeffs == std::multiset<long long>({1, 2, 1, 1, 1, 1}));
}
