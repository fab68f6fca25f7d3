#pragma once

#include "excol/rational.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace excol {

/// Univariate polynomial with exact rational coefficients.
/// coefficients()[i] is the coefficient of a^i; the zero polynomial has no
/// coefficients, otherwise the last coefficient is nonzero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);
    RationalPolynomial(std::initializer_list<Rational> coefficients);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of a^power (zero beyond the degree).
    Rational coefficient(std::size_t power) const;
    Rational leading() const;

    Rational operator()(const Rational& a) const;

    friend RationalPolynomial operator+(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator-(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs);
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    std::string str(const std::string& variable = "a") const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// leading * prod (a - r) over the root multiset, expanded.
/// Throws std::invalid_argument if leading is zero.
RationalPolynomial poly_from_roots(const Rational& leading, std::span<const Rational> roots);

/// Every rational root with multiplicity, ascending. Uses the rational-root
/// theorem on the primitive integer form and deflates each root found.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<Rational> rational_roots(const RationalPolynomial& p);

}  // namespace excol
