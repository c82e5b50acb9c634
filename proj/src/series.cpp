#include <hypcount/series.hpp>

#include <algorithm>
#include <cassert>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include <hypcount/errors.hpp>

namespace hypcount
{

series::series(int order, int denom) : m_denom(denom)
{
    if (order < 0) {
        throw domain_error("series order must be nonnegative");
    }
    if (denom < 1) {
        throw domain_error("series denom must be positive");
    }
    m_coeffs.resize(static_cast<std::size_t>(order) + 1);
}

series::series(std::vector<rational> coeffs, int denom) : m_coeffs(std::move(coeffs)), m_denom(denom)
{
    if (m_coeffs.empty()) {
        throw domain_error("series needs at least one coefficient");
    }
    if (denom < 1) {
        throw domain_error("series denom must be positive");
    }
}

series series::constant(const rational &c, int order, int denom)
{
    series s(order, denom);
    s[0] = c;
    return s;
}

series series::monomial(const rational &c, int exp, int order, int denom)
{
    series s(order, denom);
    if (exp < 0) {
        throw domain_error("negative exponent in monomial");
    }
    if (exp <= order) {
        s[exp] = c;
    }
    return s;
}

rational series::coeff(int i) const
{
    if (i < 0 || i > order()) {
        return rational(0);
    }
    return (*this)[i];
}

bool series::is_zero() const
{
    return valuation() < 0;
}

int series::valuation() const
{
    for (int i = 0; i <= order(); ++i) {
        if (sgn((*this)[i]) != 0) {
            return i;
        }
    }
    return -1;
}

series series::rescaled(int new_denom) const
{
    if (new_denom % m_denom != 0) {
        throw domain_error("rescale target must be a multiple of the current denom");
    }
    const int f = new_denom / m_denom;
    if (f == 1) {
        return *this;
    }
    series r(order() * f, new_denom);
    for (int i = 0; i <= order(); ++i) {
        r[i * f] = (*this)[i];
    }
    return r;
}

series series::reduced(int new_denom) const
{
    if (new_denom < 1 || m_denom % new_denom != 0) {
        throw domain_error("reduce target must divide the current denom");
    }
    const int f = m_denom / new_denom;
    series r(order() / f, new_denom);
    for (int i = 0; i <= order(); ++i) {
        if (i % f == 0) {
            if (i / f <= r.order()) {
                r[i / f] = (*this)[i];
            }
        } else if (sgn((*this)[i]) != 0) {
            throw domain_error("series has exponents not representable over the requested denom");
        }
    }
    return r;
}

series series::truncated(int new_order) const
{
    if (new_order > order()) {
        throw domain_error("cannot extend a truncated series");
    }
    return series(std::vector<rational>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1), m_denom);
}

std::pair<series, series> common_form(const series &a, const series &b)
{
    const int d = std::lcm(a.denom(), b.denom());
    series ra = a.rescaled(d);
    series rb = b.rescaled(d);
    const int n = std::min(ra.order(), rb.order());
    if (ra.order() != n) {
        ra = ra.truncated(n);
    }
    if (rb.order() != n) {
        rb = rb.truncated(n);
    }
    return {std::move(ra), std::move(rb)};
}

series add(const series &a, const series &b)
{
    auto [x, y] = common_form(a, b);
    for (int i = 0; i <= x.order(); ++i) {
        x[i] += y[i];
    }
    return x;
}

series sub(const series &a, const series &b)
{
    auto [x, y] = common_form(a, b);
    for (int i = 0; i <= x.order(); ++i) {
        x[i] -= y[i];
    }
    return x;
}

series negate(const series &a)
{
    series r = a;
    for (int i = 0; i <= r.order(); ++i) {
        r[i] = -r[i];
    }
    return r;
}

series scale(const series &a, const rational &c)
{
    series r = a;
    for (int i = 0; i <= r.order(); ++i) {
        r[i] *= c;
    }
    return r;
}

namespace
{

// Integer numerators over a single common denominator.
struct integral_form {
    std::vector<integer> num;
    std::vector<int> support;
    integer den{1};
};

integral_form integerize(const series &s)
{
    integral_form f;
    for (int i = 0; i <= s.order(); ++i) {
        if (sgn(s[i]) != 0) {
            mpz_lcm(f.den.get_mpz_t(), f.den.get_mpz_t(), s[i].get_den_mpz_t());
        }
    }
    f.num.resize(static_cast<std::size_t>(s.order()) + 1);
    for (int i = 0; i <= s.order(); ++i) {
        if (sgn(s[i]) != 0) {
            f.num[i] = s[i].get_num() * (f.den / s[i].get_den());
            f.support.push_back(i);
        }
    }
    return f;
}

} // namespace

series mul(const series &a, const series &b)
{
    auto [x, y] = common_form(a, b);
    const int n = x.order();
    const integral_form fx = integerize(x);
    const integral_form fy = integerize(y);
    const integer den = fx.den * fy.den;

    // Iterate over the sparser operand.
    const bool swap = fx.support.size() > fy.support.size();
    const integral_form &sparse = swap ? fy : fx;
    const integral_form &dense = swap ? fx : fy;

    series r(n, x.denom());
#pragma omp parallel for schedule(dynamic, 4) if (n >= 48)
    for (int k = 0; k <= n; ++k) {
        integer acc;
        for (int i : sparse.support) {
            if (i > k) {
                break;
            }
            const integer &d = dense.num[static_cast<std::size_t>(k - i)];
            if (sgn(d) != 0) {
                mpz_addmul(acc.get_mpz_t(), sparse.num[static_cast<std::size_t>(i)].get_mpz_t(), d.get_mpz_t());
            }
        }
        if (sgn(acc) != 0) {
            r[k] = rational(acc, den);
            r[k].canonicalize();
        }
    }
    return r;
}

series mul_serial(const series &a, const series &b)
{
    auto [x, y] = common_form(a, b);
    const int n = x.order();
    series r(n, x.denom());
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            r[i + j] += x[i] * y[j];
        }
    }
    return r;
}

series invert(const series &a)
{
    if (sgn(a[0]) == 0) {
        throw zero_constant_term();
    }
    const int n = a.order();
    const rational inv0 = 1 / a[0];
    series r(n, a.denom());
    r[0] = inv0;
    for (int k = 1; k <= n; ++k) {
        rational acc;
        for (int i = 1; i <= k; ++i) {
            if (sgn(a[i]) != 0) {
                acc += a[i] * r[k - i];
            }
        }
        r[k] = -acc * inv0;
    }
    return r;
}

series pow(const series &a, long k)
{
    if (k < 0) {
        return pow(invert(a), -k);
    }
    series result = series::one(a.order(), a.denom());
    series base = a;
    while (k > 0) {
        if (k & 1) {
            result = mul(result, base);
        }
        k >>= 1;
        if (k > 0) {
            base = mul(base, base);
        }
    }
    return result;
}

series compose_monomial(const series &a, int m)
{
    if (m < 1) {
        throw domain_error("compose_monomial needs a positive exponent");
    }
    series r(a.order(), a.denom());
    for (int i = 0; i * m <= a.order(); ++i) {
        r[i * m] = a[i];
    }
    return r;
}

series decimate(const series &a, int m)
{
    if (m < 1) {
        throw domain_error("decimate needs a positive step");
    }
    series r(a.order() / m, a.denom());
    for (int i = 0; i <= r.order(); ++i) {
        r[i] = a[i * m];
    }
    return r;
}

series qderiv(const series &a)
{
    if (a.denom() != 1) {
        throw fractional_exponent();
    }
    series r = a;
    for (int i = 0; i <= r.order(); ++i) {
        r[i] *= i;
    }
    return r;
}

series deriv(const series &a)
{
    if (a.denom() != 1) {
        throw fractional_exponent();
    }
    if (a.order() < 1) {
        throw domain_error("derivative of an order-0 series is undetermined");
    }
    series r(a.order() - 1);
    for (int i = 0; i <= r.order(); ++i) {
        r[i] = a[i + 1] * (i + 1);
    }
    return r;
}

series substitute(const std::function<rational(int)> &outer, const series &inner)
{
    if (sgn(inner[0]) != 0) {
        throw nonzero_constant_term();
    }
    const int v = inner.valuation();
    series result = series::constant(outer(0), inner.order(), inner.denom());
    if (v < 0) {
        return result;
    }
    // inner^n starts at index n*v, so n <= order/v suffices.
    series power = inner;
    for (int n = 1; n * v <= inner.order(); ++n) {
        const rational c = outer(n);
        if (sgn(c) != 0) {
            result = add(result, scale(power, c));
        }
        if ((n + 1) * v <= inner.order()) {
            power = mul(power, inner);
        }
    }
    return result;
}

series substitute(const series &outer, const series &inner)
{
    if (sgn(inner[0]) != 0) {
        throw nonzero_constant_term();
    }
    const int v = inner.valuation();
    series r = substitute([&outer](int n) { return outer.coeff(n); }, inner);
    // Terms x^n with n > outer.order() are unknown; they start at index n*v.
    if (v > 0) {
        const long valid = static_cast<long>(outer.order() + 1) * v - 1;
        if (valid < r.order()) {
            r = r.truncated(static_cast<int>(valid));
        }
    }
    return r;
}

rational sin_coefficient(int n)
{
    if (n < 0 || n % 2 == 0) {
        return rational(0);
    }
    integer f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    rational r(1, 1);
    r /= rational(f);
    return ((n - 1) / 2) % 2 == 0 ? r : rational(-r);
}

bool operator==(const series &a, const series &b)
{
    auto [x, y] = common_form(a, b);
    for (int i = 0; i <= x.order(); ++i) {
        if (x[i] != y[i]) {
            return false;
        }
    }
    return true;
}

std::string to_string(const rational &r)
{
    rational c = r;
    c.canonicalize();
    return c.get_str();
}

rational parse_rational(const std::string &s)
{
    rational r;
    if (r.set_str(s, 10) != 0 || sgn(r.get_den()) == 0) {
        throw error("malformed rational '" + s + "'");
    }
    r.canonicalize();
    return r;
}

namespace
{

std::string superscript(int n)
{
    static const char *digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
    std::string out;
    for (char ch : std::to_string(n)) {
        out += digits[ch - '0'];
    }
    return out;
}

std::string power_text(const std::string &var, int num, int den)
{
    const int g = std::gcd(num, den);
    num /= g;
    den /= g;
    if (den != 1) {
        return var + "^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
    }
    if (num == 1) {
        return var;
    }
    return var + superscript(num);
}

} // namespace

std::string to_text(const series &s, const std::string &var)
{
    std::string out;
    for (int i = 0; i <= s.order(); ++i) {
        const rational &c = s[i];
        if (sgn(c) == 0) {
            continue;
        }
        const rational mag = abs(c);
        if (out.empty()) {
            out += sgn(c) < 0 ? "-" : "";
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        if (i == 0) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1) {
            out += mag.get_den() == 1 ? to_string(mag) : "(" + to_string(mag) + ")";
        }
        out += power_text(var, i, s.denom());
    }
    return out.empty() ? "0" : out;
}

std::ostream &operator<<(std::ostream &os, const series &s)
{
    return os << to_text(s);
}

} // namespace hypcount
