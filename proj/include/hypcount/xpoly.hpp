#ifndef HYPCOUNT_XPOLY_HPP
#define HYPCOUNT_XPOLY_HPP

#include <vector>

#include <hypcount/series.hpp>

namespace hypcount
{

// Polynomial in a formal variable x whose coefficients are series in q.
// Every coefficient shares one (order, denom).
class xpoly
{
public:
    xpoly(int xdeg, int order, int denom = 1);
    explicit xpoly(std::vector<series> coeffs);

    int xdeg() const
    {
        return static_cast<int>(m_coeffs.size()) - 1;
    }
    int order() const
    {
        return m_coeffs.front().order();
    }
    int denom() const
    {
        return m_coeffs.front().denom();
    }

    const series &operator[](int i) const
    {
        return m_coeffs[static_cast<std::size_t>(i)];
    }
    series &operator[](int i)
    {
        return m_coeffs[static_cast<std::size_t>(i)];
    }
    // Coefficient of x^i, the zero series above xdeg().
    series coeff(int i) const;

    // Highest i with a nonzero coefficient, or -1.
    int degree() const;

private:
    std::vector<series> m_coeffs;
};

xpoly add(const xpoly &a, const xpoly &b);
xpoly scale(const xpoly &a, const series &c);
// Product with x-degree truncated at max_xdeg.
xpoly mul(const xpoly &a, const xpoly &b, int max_xdeg);

// Coefficient-wise equality of every x-power up to the larger degree, each
// compared at the common truncation order.
bool operator==(const xpoly &a, const xpoly &b);

} // namespace hypcount

#endif
