#include <hypcount/trig.hpp>

#include <cmath>
#include <functional>

#include <hypcount/errors.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>

namespace hypcount
{

cheb_poly chebyshev(int n)
{
    if (n < 0) {
        throw domain_error("Chebyshev degree must be nonnegative");
    }
    std::vector<integer> prev{1};
    if (n == 0) {
        return {0, prev};
    }
    std::vector<integer> cur{0, 1};
    for (int m = 2; m <= n; ++m) {
        std::vector<integer> next(static_cast<std::size_t>(m) + 1);
        for (std::size_t j = 0; j < cur.size(); ++j) {
            next[j + 1] += 2 * cur[j];
        }
        for (std::size_t j = 0; j < prev.size(); ++j) {
            next[j] -= prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {n, cur};
}

double evaluate(const cheb_poly &p, double x)
{
    double acc = 0.0;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
        acc = acc * x + it->get_d();
    }
    return acc;
}

std::vector<integer> poly_trim(std::vector<integer> p)
{
    while (p.size() > 1 && sgn(p.back()) == 0) {
        p.pop_back();
    }
    return p;
}

std::vector<integer> poly_compose(const std::vector<integer> &outer, const std::vector<integer> &inner)
{
    std::vector<integer> result{0};
    // Horner in the polynomial ring.
    for (auto it = outer.rbegin(); it != outer.rend(); ++it) {
        std::vector<integer> next(result.size() + inner.size() - 1);
        for (std::size_t i = 0; i < result.size(); ++i) {
            for (std::size_t j = 0; j < inner.size(); ++j) {
                next[i + j] += result[i] * inner[j];
            }
        }
        next[0] += *it;
        result = poly_trim(std::move(next));
    }
    return result;
}

namespace
{

// 2 T_m(x/2) in the monomial basis.
std::vector<rational> doubled_half_chebyshev(int m)
{
    const cheb_poly t = chebyshev(m);
    std::vector<rational> out(t.coeffs.size());
    for (std::size_t j = 0; j < t.coeffs.size(); ++j) {
        integer two_j = 1;
        two_j <<= static_cast<mp_bitcnt_t>(j);
        out[j] = rational(2 * t.coeffs[j], two_j);
        out[j].canonicalize();
    }
    return out;
}

} // namespace

theta_block make_theta_block(theta_kind kind, int order)
{
    if (order < 0) {
        throw domain_error("theta block order must be nonnegative");
    }
    auto exponent = [kind](int n) { return kind == theta_kind::h ? 2 * n * n + 2 * n : 2 * n * n; };
    int nmax = 0;
    while (exponent(nmax + 1) <= order) {
        ++nmax;
    }
    const int xdeg = kind == theta_kind::h ? 2 * nmax + 1 : 2 * nmax;
    xpoly rep(xdeg, order);
    if (kind == theta_kind::g) {
        rep[0][0] += 1;
    }
    for (int n = kind == theta_kind::h ? 0 : 1; n <= nmax; ++n) {
        const auto poly = doubled_half_chebyshev(kind == theta_kind::h ? 2 * n + 1 : 2 * n);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            rep[static_cast<int>(j)][exponent(n)] += poly[j];
        }
    }
    return {kind, std::move(rep), order};
}

xpoly theta_block_in_q(const theta_block &block)
{
    std::vector<series> out;
    for (int i = 0; i <= block.rep.xdeg(); ++i) {
        const series &s = block.rep[i];
        for (int n = 1; n <= s.order(); n += 2) {
            if (sgn(s[n]) != 0) {
                throw domain_error("theta block has an odd power of u");
            }
        }
        out.push_back(decimate(s, 2));
    }
    return xpoly(std::move(out));
}

xpoly andrews_rose_H(int order, int xdeg)
{
    const series prefactor = pow(pochhammer({1, 2, 2}, order), 3);
    xpoly out(xdeg, order);
    for (int k = 0; 2 * k + 1 <= xdeg; ++k) {
        out[2 * k + 1] = mul(prefactor, compose_monomial(macmahon_A_direct(k, order), 2));
    }
    return out;
}

xpoly andrews_rose_G(int order, int xdeg)
{
    const series prefactor = mul(pochhammer({1, 1, 1}, order), invert(pochhammer({-1, 1, 1}, order)));
    xpoly out(xdeg, order);
    for (int k = 0; 2 * k <= xdeg; ++k) {
        out[2 * k] = mul(prefactor, macmahon_C_direct(k, order));
    }
    return out;
}

series two_sin_half(int order)
{
    return scale(substitute(sin_coefficient, series::monomial(rational(1, 2), 1, order)), 2);
}

std::vector<rational> z_series_in_x(const series &f)
{
    const int d = f.order();
    const series x = two_sin_half(d);
    series rest = f;
    series power = series::one(d);
    std::vector<rational> c(static_cast<std::size_t>(d) + 1);
    // x^j = z^j + O(z^{j+2}), so the lowest surviving coefficient of the
    // remainder is the next x-coefficient.
    for (int j = 0; j <= d; ++j) {
        c[static_cast<std::size_t>(j)] = rest[j];
        if (sgn(rest[j]) != 0) {
            rest = sub(rest, scale(power, rest[j]));
        }
        power = mul(power, x);
    }
    return c;
}

namespace
{

int total(const std::vector<int> &k)
{
    int t = 0;
    for (int v : k) {
        if (v < 0) {
            throw domain_error("negative exponent in coefficient index");
        }
        t += v;
    }
    return t;
}

// Calls visit(k) for every k >= base with k - base even and |k| <= max_total.
void for_each_even_shift(const std::vector<int> &base, int max_total,
                         const std::function<void(const std::vector<int> &, const std::vector<int> &)> &visit)
{
    std::vector<int> k = base;
    std::vector<int> shift(base.size(), 0);
    int budget = (max_total - total(base)) / 2;
    if (max_total < total(base)) {
        return;
    }
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int left) {
        if (v == base.size()) {
            visit(k, shift);
            return;
        }
        for (int l = 0; l <= left; ++l) {
            shift[v] = l;
            k[v] = base[v] + 2 * l;
            rec(v + 1, left - l);
        }
        shift[v] = 0;
        k[v] = base[v];
    };
    rec(0, budget);
}

void strip_zeros(exp_coeffs &m)
{
    for (auto it = m.begin(); it != m.end();) {
        it = sgn(it->second) == 0 ? m.erase(it) : std::next(it);
    }
}

} // namespace

exp_coeffs sine_substitute(const exp_coeffs &gw0, int max_total)
{
    const series x = two_sin_half(max_total);
    std::vector<series> xpow{series::one(max_total)};
    exp_coeffs out;
    for (const auto &[k0, value] : gw0) {
        if (sgn(value) == 0) {
            continue;
        }
        // Per-variable factor x(z_v)^{k0_v} / k0_v!.
        std::vector<series> factor;
        for (int e : k0) {
            while (static_cast<int>(xpow.size()) <= e) {
                xpow.push_back(mul(xpow.back(), x));
            }
            factor.push_back(scale(xpow[static_cast<std::size_t>(e)], rational(1) / rational(factorial(e))));
        }
        for_each_even_shift(k0, max_total, [&](const std::vector<int> &k, const std::vector<int> &) {
            rational c = value;
            for (std::size_t v = 0; v < k.size() && sgn(c) != 0; ++v) {
                c *= factor[v][k[v]] * rational(factorial(k[v]));
            }
            out[k] += c;
        });
    }
    strip_zeros(out);
    return out;
}

exp_coeffs sine_substitute_combinatorial(const exp_coeffs &gw0, int max_total)
{
    exp_coeffs out;
    for (const auto &[k0, value] : gw0) {
        if (sgn(value) == 0) {
            continue;
        }
        for_each_even_shift(k0, max_total, [&](const std::vector<int> &k, const std::vector<int> &shift) {
            int l = 0;
            integer ways = 1;
            for (std::size_t v = 0; v < k.size(); ++v) {
                l += shift[v];
                ways *= odd_split_count(k[v], k0[v]);
            }
            rational weight(1);
            for (int i = 0; i < l; ++i) {
                weight *= rational(-1, 4);
            }
            out[k] += value * weight * rational(ways);
        });
    }
    strip_zeros(out);
    return out;
}

bool h_ode_check(const series &h)
{
    if (h.order() < 2) {
        throw domain_error("h_ode_check needs order >= 2");
    }
    const series h1 = deriv(h);
    const series h2 = deriv(h1);
    const series quarter_h = scale(h, rational(1, 4));
    if (!add(h2, quarter_h).is_zero()) {
        return false;
    }
    const series rhs = add(mul(h1, h2), mul(quarter_h, h1));
    return rhs.is_zero();
}

bool h_ode_check(int order)
{
    return h_ode_check(two_sin_half(order));
}

} // namespace hypcount
