#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <hypcount/errors.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/trig.hpp>

#include "support.hpp"

using namespace hypcount;
using test_support::ints;

namespace
{

std::vector<integer> z(std::initializer_list<long> c)
{
    std::vector<integer> out;
    for (long x : c) {
        out.emplace_back(x);
    }
    return out;
}

// 2 - 2 cos z, which is (2 sin(z/2))^2, from the cosine Taylor series.
series two_minus_two_cos(int order)
{
    series s(order);
    for (int n = 2; n <= order; n += 2) {
        s[n] = rational((n / 2) % 2 == 1 ? 2 : -2) / rational(factorial(n));
    }
    return s;
}

exp_coeffs single(std::vector<int> k, rational v)
{
    return exp_coeffs{{std::move(k), std::move(v)}};
}

} // namespace

TEST_CASE("Chebyshev polynomials")
{
    CHECK(chebyshev(0).coeffs == z({1}));
    CHECK(chebyshev(1).coeffs == z({0, 1}));
    CHECK(chebyshev(2).coeffs == z({-1, 0, 2}));
    CHECK(chebyshev(3).coeffs == z({0, -3, 0, 4}));
    CHECK_THROWS_AS(chebyshev(-1), domain_error);
    for (int n = 1; n <= 20; ++n) {
        const cheb_poly t = chebyshev(n);
        CHECK(t.coeffs.back() == integer(1) << (n - 1));
        CHECK(evaluate(t, 1.0) == doctest::Approx(1.0));
        // T_n = 2x T_{n-1} - T_{n-2}
        if (n >= 2) {
            std::vector<integer> rhs(static_cast<std::size_t>(n) + 1);
            const auto &a = chebyshev(n - 1).coeffs;
            const auto &b = chebyshev(n - 2).coeffs;
            for (std::size_t j = 0; j < a.size(); ++j) {
                rhs[j + 1] += 2 * a[j];
            }
            for (std::size_t j = 0; j < b.size(); ++j) {
                rhs[j] -= b[j];
            }
            CHECK(t.coeffs == rhs);
        }
    }
}

TEST_CASE("Chebyshev numeric spot checks")
{
    CHECK(std::abs(evaluate(chebyshev(5), std::sin(0.3)) - std::sin(1.5)) < 1e-12);
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> theta(-std::numbers::pi, std::numbers::pi);
    for (int t = 0; t < 20; ++t) {
        const double th = theta(rng);
        for (int n = 0; n <= 6; ++n) {
            const double sign = n % 2 == 0 ? 1.0 : -1.0;
            CHECK(std::abs(evaluate(chebyshev(2 * n + 1), std::sin(th)) - sign * std::sin((2 * n + 1) * th)) < 1e-10);
        }
    }
}

TEST_CASE("T_n(1 - 2x^2) = (-1)^n T_2n(x)")
{
    for (int n = 0; n <= 12; ++n) {
        auto rhs = chebyshev(2 * n).coeffs;
        if (n % 2 != 0) {
            for (auto &c : rhs) {
                c = -c;
            }
        }
        CHECK(poly_trim(poly_compose(chebyshev(n).coeffs, z({1, 0, -2}))) == poly_trim(rhs));
    }
    CHECK(poly_trim(z({1, 2, 0, 0})) == z({1, 2}));
    CHECK(poly_trim(z({0, 0})) == z({0}));
}

TEST_CASE("theta blocks")
{
    const theta_block h = make_theta_block(theta_kind::h, 16);
    const theta_block g = make_theta_block(theta_kind::g, 16);
    CHECK(h.rep.coeff(1)[0] == 1);
    CHECK(g.rep.coeff(0)[0] == 1);
    CHECK(g.rep.coeff(2)[2] == 1);
    CHECK(g.rep.coeff(0)[2] == -2);
    // x coefficient of h: (q^2;q^2)^3 in u^4 = q^2, i.e. 1 - 3u^4 + 5u^12.
    CHECK(h.rep.coeff(1) == ints({1, 0, 0, 0, -3, 0, 0, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0}));

    for (int i = 0; i <= h.rep.xdeg(); i += 2) {
        CHECK(h.rep.coeff(i).is_zero());
    }
    for (int i = 1; i <= g.rep.xdeg(); i += 2) {
        CHECK(g.rep.coeff(i).is_zero());
    }
    CHECK_THROWS_AS(make_theta_block(theta_kind::h, -1), domain_error);

    // Only u^{2n^2+2n} <= order survive: order 3 keeps n = 0 alone.
    CHECK(make_theta_block(theta_kind::h, 3).rep.degree() == 1);
    CHECK(make_theta_block(theta_kind::g, 1).rep.degree() == 0);
}

TEST_CASE("Andrews-Rose expansions equal the theta blocks")
{
    const int order = 32;
    const int xdeg = 13;
    const xpoly h = theta_block_in_q(make_theta_block(theta_kind::h, 2 * order));
    const xpoly g = theta_block_in_q(make_theta_block(theta_kind::g, 2 * order));
    const xpoly hh = andrews_rose_H(order, xdeg);
    const xpoly gg = andrews_rose_G(order, xdeg);
    CHECK(h.order() == order);
    for (int i = 0; i <= xdeg; ++i) {
        CAPTURE(i);
        CHECK(h.coeff(i) == hh.coeff(i));
        CHECK(g.coeff(i) == gg.coeff(i));
    }
    CHECK(hh.coeff(1) == pochhammer({1, 2, 2}, order) * pochhammer({1, 2, 2}, order) * pochhammer({1, 2, 2}, order));
}

TEST_CASE("sine substitution helpers")
{
    const series x = two_sin_half(7);
    CHECK(x[1] == 1);
    CHECK(x[3] == rational(-1, 24));
    CHECK(x[5] == rational(1, 1920));
    CHECK(mul(x, x) == two_minus_two_cos(7));

    const auto c = z_series_in_x(two_minus_two_cos(8));
    REQUIRE(c.size() == 9);
    for (std::size_t j = 0; j < c.size(); ++j) {
        CHECK(c[j] == (j == 2 ? 1 : 0));
    }
}

TEST_CASE("sine substitution: examples")
{
    // A lone degree-1 monomial gains a cube with weight -1/4.
    const exp_coeffs gw = sine_substitute(single({1}, rational(1)), 5);
    CHECK(gw.at({1}) == 1);
    CHECK(gw.at({3}) == rational(-1, 4));
    CHECK(gw.at({5}) == rational(1, 16));
    CHECK(sine_substitute_combinatorial(single({1}, rational(1)), 5) == gw);

    // No room for shifts: the coefficient passes through unchanged.
    const std::vector<int> k{1, 1, 0, 1};
    const exp_coeffs low = sine_substitute(single(k, rational(7, 3)), 3);
    CHECK(low.size() == 1);
    CHECK(low.at(k) == rational(7, 3));

    CHECK(sine_substitute(exp_coeffs{}, 6).empty());
    CHECK(sine_substitute(single({2}, rational(0)), 6).empty());
}

TEST_CASE("property: two routes through the sine substitution")
{
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> var(0, 15);
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    for (int t = 0; t < 25; ++t) {
        exp_coeffs gw0;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> k(16, 0);
            const int d = deg(rng);
            for (int j = 0; j < d; ++j) {
                ++k[static_cast<std::size_t>(var(rng))];
            }
            rational r(num(rng), den(rng));
            r.canonicalize();
            gw0[k] += r;
        }
        REQUIRE(sine_substitute(gw0, 6) == sine_substitute_combinatorial(gw0, 6));
    }
}

TEST_CASE("h = 2 sin(q/2) differential identities")
{
    CHECK(h_ode_check(16));
    CHECK(h_ode_check(2));
    CHECK_THROWS_AS(h_ode_check(1), domain_error);

    series perturbed = two_sin_half(16);
    perturbed[3] += rational(1, 1000);
    CHECK_FALSE(h_ode_check(perturbed));
}
