#ifndef HYPCOUNT_SERIES_HPP
#define HYPCOUNT_SERIES_HPP

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hypcount
{

using rational = mpq_class;
using integer = mpz_class;

// Truncated power series in one variable q with exact rational coefficients.
//
// Coefficient i is the coefficient of q^(i/denom); coefficients are stored
// for i = 0..order inclusive and everything above order is unknown (not zero).
// Binary operations first bring both operands to the least common denom and
// then truncate to the smaller of the two orders.
class series
{
public:
    series() : series(0) {}
    explicit series(int order, int denom = 1);
    explicit series(std::vector<rational> coeffs, int denom = 1);

    static series zero(int order, int denom = 1)
    {
        return series(order, denom);
    }
    static series one(int order, int denom = 1)
    {
        return constant(rational(1), order, denom);
    }
    static series constant(const rational &c, int order, int denom = 1);
    // c * q^(exp/denom), truncated at order.
    static series monomial(const rational &c, int exp, int order, int denom = 1);

    int order() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    int denom() const
    {
        return m_denom;
    }

    const rational &operator[](int i) const
    {
        return m_coeffs[static_cast<std::size_t>(i)];
    }
    rational &operator[](int i)
    {
        return m_coeffs[static_cast<std::size_t>(i)];
    }
    // Coefficient at numerator index i, or zero above the stored order.
    rational coeff(int i) const;

    std::span<const rational> coeffs() const
    {
        return m_coeffs;
    }

    bool is_zero() const;
    // Lowest index with a nonzero coefficient, or -1 for the zero series.
    int valuation() const;

    // Same series written over a multiple of the current denom.
    series rescaled(int new_denom) const;
    // Inverse of rescaled(): fails with domain_error if some nonzero exponent
    // is not representable over new_denom.
    series reduced(int new_denom) const;
    series truncated(int new_order) const;

private:
    std::vector<rational> m_coeffs;
    int m_denom;
};

// Bring a and b to a common (order, denom) pair.
std::pair<series, series> common_form(const series &a, const series &b);

series add(const series &a, const series &b);
series sub(const series &a, const series &b);
series negate(const series &a);
series scale(const series &a, const rational &c);

// Cauchy product. mul() runs the parallel integer-convolution kernel;
// mul_serial() is the plain rational double loop kept as the reference.
series mul(const series &a, const series &b);
series mul_serial(const series &a, const series &b);

series invert(const series &a);
series pow(const series &a, long k);

// q -> q^m.
series compose_monomial(const series &a, int m);
// Keeps every m-th coefficient: b_n = a_{mn}. Caller is responsible for the
// other coefficients being zero when that matters.
series decimate(const series &a, int m);

// q d/dq; requires denom 1.
series qderiv(const series &a);
// d/dq; requires denom 1 and order >= 1, result has order - 1.
series deriv(const series &a);

// Formal composition outer(inner) where outer is given by its coefficient
// sequence (outer[n] multiplies x^n). inner must have zero constant term.
series substitute(const series &outer, const series &inner);
series substitute(const std::function<rational(int)> &outer, const series &inner);

// Taylor coefficients of sin(x).
rational sin_coefficient(int n);

bool operator==(const series &a, const series &b);
inline series operator+(const series &a, const series &b)
{
    return add(a, b);
}
inline series operator-(const series &a, const series &b)
{
    return sub(a, b);
}
inline series operator-(const series &a)
{
    return negate(a);
}
inline series operator*(const series &a, const series &b)
{
    return mul(a, b);
}
inline series operator*(const rational &c, const series &a)
{
    return scale(a, c);
}

// "p/q" with the denominator elided when it is 1.
std::string to_string(const rational &r);
rational parse_rational(const std::string &s);

// Human-readable rendering, e.g. "q + 3q² + 4q³"; exponents over denom > 1
// are written as q^(n/d).
std::string to_text(const series &s, const std::string &var = "q");
std::ostream &operator<<(std::ostream &os, const series &s);

} // namespace hypcount

#endif
