#include "divisors.hpp"
#include "excol/polynomial.hpp"
#include "excol/rational.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

using namespace excol;

namespace {

// Falling-factorial binomial computed with plain integer arithmetic, used as
// an oracle independent of the GMP-backed implementation.
Rational naive_binomial(long m, long k) {
    Rational num(1);
    for (long i = 0; i < k; ++i) num *= Rational(m - i);
    Rational den(1);
    for (long i = 2; i <= k; ++i) den *= Rational(i);
    return num / den;
}

}  // namespace

TEST_CASE("rational normalizes and prints") {
    Rational r(Integer(6), Integer(-4));
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(r.fraction() == "-3/2");
    CHECK(Rational(5).str() == "5");
    CHECK(Rational(5).fraction() == "5/1");
    CHECK(Rational::parse("-10/4") == Rational(Integer(-5), Integer(2)));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS(Rational(Integer(1), Integer(0)));
    CHECK_THROWS_AS(Rational(Integer(1), Integer(2)).to_integer(), std::domain_error);
}

TEST_CASE("rational arithmetic and ordering") {
    Rational a(Integer(1), Integer(3)), b(Integer(1), Integer(6));
    CHECK(a + b == Rational(Integer(1), Integer(2)));
    CHECK(a - b == b);
    CHECK(a * b == Rational(Integer(1), Integer(18)));
    CHECK(a / b == Rational(2));
    CHECK(b < a);
    CHECK((-a).sign() == -1);
    CHECK((-a).abs() == a);
    CHECK(Rational(Integer(-2), Integer(3)).pow(3) == Rational(Integer(-8), Integer(27)));
    CHECK_THROWS(a / Rational(0));
}

TEST_CASE("binomial examples") {
    CHECK(binomial(Integer(3), 2) == Rational(3));
    for (long n = 0; n < 6; ++n) CHECK(binomial(Integer(n), 0) == Rational(1));
    CHECK(binomial(Integer(-1), 2) == Rational(1));
    CHECK(binomial(Integer(2), 5) == Rational(0));
    CHECK_THROWS_AS(binomial(Integer(3), -1), std::invalid_argument);
    for (long m = -12; m <= 12; ++m)
        for (long k = 0; k <= 8; ++k) CHECK(binomial(Integer(m), k) == naive_binomial(m, k));
}

TEST_CASE("factorial grows past 64 bits exactly") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(25) == Integer("15511210043330985984000000"));
}

TEST_CASE("poly_from_roots examples") {
    std::vector<Rational> zero{0};
    auto id = poly_from_roots(Rational(1), zero);
    CHECK(id.coefficients() == std::vector<Rational>{0, 1});

    std::vector<Rational> p3{-1, -2, -3};
    auto p = poly_from_roots(Rational(Integer(1), Integer(6)), p3);
    for (long a = -10; a <= 10; ++a) CHECK(p(Rational(a)) == binomial(Integer(a + 3), 3));

    std::vector<Rational> q4{-1, -2, -3, -2};
    auto q = poly_from_roots(Rational(Integer(2), Integer(24)), q4);
    CHECK(q(Rational(0)) == Rational(1));

    CHECK_THROWS_AS(poly_from_roots(Rational(0), q4), std::invalid_argument);
}

TEST_CASE("projective polynomial equals binomial for n <= 12") {
    for (int n = 1; n <= 12; ++n) {
        std::vector<Rational> roots;
        for (int i = 1; i <= n; ++i) roots.emplace_back(-i);
        auto p = poly_from_roots(Rational(Integer(1), factorial(static_cast<unsigned long>(n))), roots);
        for (long a = -20; a <= 20; ++a) CHECK(p(Rational(a)) == naive_binomial(a + n, n));
    }
}

TEST_CASE("rational_roots examples") {
    RationalPolynomial p{2, 3, 1};  // (a+1)(a+2)
    CHECK(rational_roots(p) == std::vector<Rational>{-2, -1});

    std::vector<Rational> q3{-1, -2, Rational(Integer(-3), Integer(2))};
    auto q = poly_from_roots(Rational(Integer(1), Integer(3)), q3);
    CHECK(q(Rational(0)) == Rational(1));
    CHECK(rational_roots(q) == std::vector<Rational>{-2, Rational(Integer(-3), Integer(2)), -1});

    CHECK(rational_roots(RationalPolynomial{1, 0, 1}).empty());
    CHECK_THROWS_AS(rational_roots(RationalPolynomial{}), std::invalid_argument);
}

TEST_CASE("rational_roots inverts poly_from_roots on random multisets") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> num(-30, 30), den(1, 6), size(1, 7);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rational> roots;
        int m = size(rng);
        for (int i = 0; i < m; ++i) roots.emplace_back(Integer(num(rng)), Integer(den(rng)));
        int l = num(rng);
        Rational leading(Integer(l == 0 ? 1 : l), Integer(den(rng)));
        auto p = poly_from_roots(leading, roots);
        std::sort(roots.begin(), roots.end());
        CHECK(rational_roots(p) == roots);
    }
}

TEST_CASE("rational_roots with large constant term") {
    // (a - 1000003)(a + 999983)(3a - 2): both primes exceed the trial-division range.
    std::vector<Rational> roots{Rational(1000003), Rational(-999983), Rational(Integer(2), Integer(3))};
    auto p = poly_from_roots(Rational(3), roots);
    std::sort(roots.begin(), roots.end());
    CHECK(rational_roots(p) == roots);
}

TEST_CASE("factorization and divisors") {
    auto f = detail::factorize(Integer(360));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<Integer, unsigned>{2, 3});
    CHECK(f[1] == std::pair<Integer, unsigned>{3, 2});
    CHECK(f[2] == std::pair<Integer, unsigned>{5, 1});
    auto d = detail::positive_divisors(Integer(-12));
    CHECK(d == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    Integer semiprime = Integer(1000003) * Integer(1000033);
    auto g = detail::factorize(semiprime);
    REQUIRE(g.size() == 2);
    CHECK(g[0].first == 1000003);
    CHECK(g[1].first == 1000033);
    for (long n = 1; n <= 500; ++n) {
        std::vector<Integer> naive;
        for (long k = 1; k <= n; ++k)
            if (n % k == 0) naive.emplace_back(k);
        CHECK(detail::positive_divisors(Integer(n)) == naive);
    }
}
