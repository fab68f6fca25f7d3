#include "excol/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace excol {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    } catch (const std::domain_error&) {
        throw std::invalid_argument("zero denominator in '" + text + "'");
    }
}

Integer Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    return q_.get_num();
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.q_, rhs.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
}

Rational Rational::pow(unsigned exponent) const {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), exponent);
    return Rational(num, den);
}

std::string Rational::str() const { return q_.get_str(); }

std::string Rational::fraction() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.str(); }

Rational binomial(const Integer& m, long k) {
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    Integer num = 1;
    for (long i = 0; i < k; ++i) num *= m - i;
    return Rational(num, factorial(static_cast<unsigned long>(k)));
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace excol
