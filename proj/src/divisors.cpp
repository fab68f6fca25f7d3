#include "divisors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace excol::detail {
namespace {

constexpr unsigned long kTrialLimit = 100000;

// Pollard-Brent; n must be odd, composite and free of factors below kTrialLimit.
Integer find_factor(const Integer& n) {
    for (unsigned long c = 1;; ++c) {
        auto step = [&](const Integer& x) -> Integer {
            Integer y = x * x + c;
            mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
            return y;
        };
        Integer x = 2, y = 2, g = 1;
        while (g == 1) {
            x = step(x);
            y = step(step(y));
            Integer diff = x - y;
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) return g;
    }
}

void split(const Integer& n, std::map<Integer, unsigned>& out) {
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
        ++out[n];
        return;
    }
    Integer f = find_factor(n);
    split(f, out);
    split(Integer(n / f), out);
}

}  // namespace

std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factorize: zero");
    Integer rest = abs(n);
    std::map<Integer, unsigned> found;
    for (unsigned long p = 2; p <= kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            ++found[Integer(p)];
            rest /= p;
        }
    }
    split(rest, found);
    return {found.begin(), found.end()};
}

std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divisors{1};
    for (const auto& [prime, exponent] : factorize(n)) {
        std::size_t count = divisors.size();
        Integer power = 1;
        for (unsigned e = 1; e <= exponent; ++e) {
            power *= prime;
            for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
        }
    }
    std::sort(divisors.begin(), divisors.end());
    return divisors;
}

}  // namespace excol::detail
