#include <hypcount/xpoly.hpp>

#include <algorithm>
#include <utility>

#include <hypcount/errors.hpp>

namespace hypcount
{

xpoly::xpoly(int xdeg, int order, int denom)
{
    if (xdeg < 0) {
        throw domain_error("x-degree must be nonnegative");
    }
    m_coeffs.assign(static_cast<std::size_t>(xdeg) + 1, series(order, denom));
}

xpoly::xpoly(std::vector<series> coeffs) : m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw domain_error("xpoly needs at least one coefficient");
    }
    for (const auto &c : m_coeffs) {
        if (c.order() != m_coeffs.front().order() || c.denom() != m_coeffs.front().denom()) {
            throw domain_error("xpoly coefficients must share order and denom");
        }
    }
}

series xpoly::coeff(int i) const
{
    if (i < 0 || i > xdeg()) {
        return series(order(), denom());
    }
    return (*this)[i];
}

int xpoly::degree() const
{
    for (int i = xdeg(); i >= 0; --i) {
        if (!(*this)[i].is_zero()) {
            return i;
        }
    }
    return -1;
}

xpoly add(const xpoly &a, const xpoly &b)
{
    const int n = std::max(a.xdeg(), b.xdeg());
    std::vector<series> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        out.push_back(add(a.coeff(i), b.coeff(i)));
    }
    return xpoly(std::move(out));
}

xpoly scale(const xpoly &a, const series &c)
{
    std::vector<series> out;
    for (int i = 0; i <= a.xdeg(); ++i) {
        out.push_back(mul(a[i], c));
    }
    return xpoly(std::move(out));
}

xpoly mul(const xpoly &a, const xpoly &b, int max_xdeg)
{
    const int n = std::min(a.xdeg() + b.xdeg(), max_xdeg);
    const auto [za, zb] = common_form(a[0], b[0]);
    std::vector<series> out(static_cast<std::size_t>(n) + 1, series(za.order(), za.denom()));
    for (int i = 0; i <= a.xdeg() && i <= n; ++i) {
        if (a[i].is_zero()) {
            continue;
        }
        for (int j = 0; j <= b.xdeg() && i + j <= n; ++j) {
            if (b[j].is_zero()) {
                continue;
            }
            out[static_cast<std::size_t>(i + j)] = add(out[static_cast<std::size_t>(i + j)], mul(a[i], b[j]));
        }
    }
    return xpoly(std::move(out));
}

bool operator==(const xpoly &a, const xpoly &b)
{
    const int n = std::max(a.xdeg(), b.xdeg());
    for (int i = 0; i <= n; ++i) {
        if (!(a.coeff(i) == b.coeff(i))) {
            return false;
        }
    }
    return true;
}

} // namespace hypcount
