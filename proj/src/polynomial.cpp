#include "excol/polynomial.hpp"

#include "divisors.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace excol {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
    trim();
}

void RationalPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rational{};
}

Rational RationalPolynomial::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational RationalPolynomial::operator()(const Rational& a) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coefficient(i) + rhs.coefficient(i);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = lhs.coefficient(i) - rhs.coefficient(i);
    return RationalPolynomial(std::move(out));
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    return RationalPolynomial(std::move(out));
}

std::string RationalPolynomial::str(const std::string& variable) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        Rational magnitude = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = magnitude == Rational(1);
        if (i == 0 || !unit) out << (magnitude.is_integer() ? magnitude.str() : "(" + magnitude.str() + ")");
        if (i > 0) {
            if (!unit) out << "*";
            out << variable;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RationalPolynomial poly_from_roots(const Rational& leading, std::span<const Rational> roots) {
    if (leading.is_zero()) throw std::invalid_argument("poly_from_roots: zero leading coefficient");
    RationalPolynomial p{leading};
    for (const auto& r : roots) p = p * RationalPolynomial{-r, Rational(1)};
    return p;
}

namespace {

using IntegerPoly = std::vector<Integer>;  // index = power

// q^deg * p(num/den), computed without leaving the integers.
Integer homogeneous_value(const IntegerPoly& c, const Integer& num, const Integer& den) {
    Integer acc = c.back();
    Integer den_power = 1;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        den_power *= den;
        acc = acc * num + c[i] * den_power;
    }
    return acc;
}

// Exact division by (den*x - num); the root num/den is known to be a root.
IntegerPoly deflate(const IntegerPoly& c, const Integer& num, const Integer& den) {
    std::size_t n = c.size() - 1;
    IntegerPoly b(n);
    b[n - 1] = c[n] / den;
    for (std::size_t i = n - 1; i >= 1; --i) b[i - 1] = (c[i] + num * b[i]) / den;
    return b;
}

std::optional<Rational> find_root(const IntegerPoly& c) {
    auto numerators = detail::positive_divisors(c.front());
    auto denominators = detail::positive_divisors(c.back());
    for (const auto& den : denominators) {
        for (const auto& magnitude : numerators) {
            Integer g;
            mpz_gcd(g.get_mpz_t(), magnitude.get_mpz_t(), den.get_mpz_t());
            if (g != 1) continue;
            for (int s : {1, -1}) {
                Integer num = s * magnitude;
                if (homogeneous_value(c, num, den) == 0) return Rational(num, den);
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<Rational> rational_roots(const RationalPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");

    Integer common = 1;
    for (const auto& c : p.coefficients()) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.denominator().get_mpz_t());
    IntegerPoly c;
    Integer content = 0;
    for (const auto& coeff : p.coefficients()) {
        c.push_back((coeff * Rational(common)).to_integer());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.back().get_mpz_t());
    }
    for (auto& x : c) x /= content;

    std::vector<Rational> roots;
    while (c.size() > 1 && c.front() == 0) {
        roots.emplace_back(0);
        c.erase(c.begin());
    }
    while (c.size() > 1) {
        auto root = find_root(c);
        if (!root) break;
        c = deflate(c, root->numerator(), root->denominator());
        roots.push_back(*root);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace excol
