#pragma once

// Exact integers and rationals. Everything downstream is built on these;
// there is no floating point anywhere in the library.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace excol {

using Integer = mpz_class;

/// A rational number kept in lowest terms with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}  // NOLINT: implicit by design of the numeric tower
    Rational(int value) : q_(value) {}   // NOLINT
    Rational(const Integer& value) : q_(value) {}  // NOLINT
    Rational(const Integer& num, const Integer& den);

    /// Parses "p", "-p" or "p/q".
    static Rational parse(const std::string& text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_integer() const { return q_.get_den() == 1; }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }

    /// Requires is_integer().
    Integer to_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.q_ == rhs.q_; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    Rational abs() const;
    Rational pow(unsigned exponent) const;

    /// "3", "-3/2": compact form for human output.
    std::string str() const;
    /// Always "p/q" (an integer prints as "p/1"); used in structured output.
    std::string fraction() const;

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& out, const Rational& value);

/// Generalized binomial coefficient m(m-1)...(m-k+1)/k! for any integer m.
/// Throws std::invalid_argument for negative k.
Rational binomial(const Integer& m, long k);

Integer factorial(unsigned long n);

}  // namespace excol
