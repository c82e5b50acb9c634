#include <doctest.h>

#include <cstdlib>
#include <set>

#include <hypcount/errors.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>

#include "support.hpp"

using namespace hypcount;
using test_support::ints;

namespace
{

// The nested sums by brute force: every strictly increasing tuple of indices
// m_1 < ... < m_k, each factor expanded as sum_j j q^{j e(m)}.
series brute_macmahon(int k, int order, bool odd)
{
    series total(order);
    std::vector<int> m;
    auto factor = [&](int idx) {
        const int e = odd ? 2 * idx - 1 : idx;
        series f(order);
        for (int j = 1; j * e <= order; ++j) {
            f[j * e] = j;
        }
        return f;
    };
    auto rec = [&](auto &&self, int start, int left, const series &acc) -> void {
        if (left == 0) {
            total = add(total, acc);
            return;
        }
        for (int idx = start; idx <= order; ++idx) {
            const series next = mul(acc, factor(idx));
            if (next.is_zero()) {
                break;
            }
            self(self, idx + 1, left - 1, next);
        }
    };
    rec(rec, 1, k, series::one(order));
    return total;
}

// Coefficients of prod (1-q^n)^-24 from the Euler transform
// n c_n = 24 sum_{j=1}^n sigma1(j) c_{n-j}, an independent route to q/Delta.
std::vector<integer> colored_partitions(int order)
{
    std::vector<integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    for (int n = 1; n <= order; ++n) {
        integer acc = 0;
        for (int j = 1; j <= n; ++j) {
            acc += 24 * sigma1(j) * c[static_cast<std::size_t>(n - j)];
        }
        c[static_cast<std::size_t>(n)] = acc / n;
    }
    return c;
}

// (q;q) from the pentagonal number theorem.
series pentagonal(int order)
{
    series s(order);
    for (int k = -order; k <= order; ++k) {
        const long e = static_cast<long>(k) * (3 * k - 1) / 2;
        if (e >= 0 && e <= order) {
            s[static_cast<int>(e)] = (k % 2 == 0) ? 1 : -1;
        }
    }
    return s;
}

// Number of (a_1..a_4), all odd integers, with a_1^2 + ... + a_4^2 = 4n:
// the q^n coefficient of theta_2^4.
long odd_four_squares(int n)
{
    long count = 0;
    const int r = 2 * n + 1;
    for (int a = -r; a <= r; a += 2) {
        for (int b = -r; b <= r; b += 2) {
            for (int c = -r; c <= r; c += 2) {
                for (int d = -r; d <= r; d += 2) {
                    if (a * a + b * b + c * c + d * d == 4 * n) {
                        ++count;
                    }
                }
            }
        }
    }
    return count;
}

} // namespace

TEST_CASE("A_k values")
{
    CHECK(macmahon_A_direct(1, 6) == ints({0, 1, 3, 4, 7, 6, 12}));
    CHECK(macmahon_A_direct(2, 5) == ints({0, 0, 0, 1, 3, 9}));
    CHECK(macmahon_A_direct(0, 4) == series::one(4));
    CHECK(macmahon_A_recursive(2, 5) == ints({0, 0, 0, 1, 3, 9}));
    CHECK(macmahon_A_recursive(1, 40) == sigma1_series(40));
    CHECK_THROWS_AS(macmahon_A_recursive(0, 5), domain_error);
    CHECK_THROWS_AS(macmahon_A_direct(-1, 5), domain_error);
}

TEST_CASE("C_k values")
{
    CHECK(macmahon_C_direct(1, 6) == ints({0, 1, 2, 4, 4, 6, 8}));
    CHECK(macmahon_C_direct(2, 6) == ints({0, 0, 0, 0, 1, 2, 4}));
    CHECK(macmahon_C_direct(0, 3) == series::one(3));
    CHECK_THROWS_AS(macmahon_C_recursive(0, 5), domain_error);
}

TEST_CASE("direct sums agree with brute-force tuple enumeration")
{
    for (int k = 1; k <= 3; ++k) {
        CAPTURE(k);
        CHECK(macmahon_A_direct(k, 24) == brute_macmahon(k, 24, false));
        CHECK(macmahon_C_direct(k, 24) == brute_macmahon(k, 24, true));
    }
}

TEST_CASE("direct sums agree with the recursions")
{
    for (int k = 1; k <= 5; ++k) {
        CAPTURE(k);
        CHECK(macmahon_A_direct(k, 64) == macmahon_A_recursive(k, 64));
        CHECK(macmahon_C_direct(k, 64) == macmahon_C_recursive(k, 64));
    }
}

TEST_CASE("A_1 and C_1 as divisor sums to order 128")
{
    const series a1 = sigma1_series(128);
    CHECK(macmahon_A_direct(1, 128) == a1);
    CHECK(macmahon_C_direct(1, 128) == sub(a1, compose_monomial(a1, 2)));
}

TEST_CASE("E and its relatives")
{
    CHECK(series_E(9) == ints({0, 1, 0, 4, 0, 6, 0, 8, 0, 13}));
    CHECK(odd_sigma_series(4) == ints({1, 4, 6, 8, 13}));
    const series e2 = pow(series_E(12), 2);
    CHECK(e2[8] == 64);
    CHECK(e2[10] == 126);
    CHECK(mul(series_E(7), compose_monomial(macmahon_C_direct(1, 7), 2))[7] == 18);
    CHECK(eisenstein_E2(3)[0] == rational(-1, 24));
    CHECK(add(eisenstein_E2(64), series::constant(rational(1, 24), 64)) == sigma1_series(64));
}

TEST_CASE("q/Delta")
{
    CHECK(delta_inv_times_q(3) == ints({1, 24, 324, 3200}));
    const series d = delta_inv_times_q(20);
    const auto oracle = colored_partitions(20);
    CHECK(d[4] == 25650);
    for (int n = 0; n <= 20; ++n) {
        CHECK(d[n] == rational(oracle[static_cast<std::size_t>(n)]));
    }
    CHECK(mul(delta_over_q(20), d) == series::one(20));
}

TEST_CASE("Pochhammer products")
{
    CHECK(pochhammer({1, 1, 1}, 40) == pentagonal(40));
    CHECK(mul(pochhammer({1, 1, 1}, 64), pochhammer({-1, 1, 1}, 64)) == pochhammer({1, 2, 2}, 64));
    CHECK(legendre_product(4) == ints({1, 4, 6, 8, 13}));
    CHECK(legendre_product(64) == odd_sigma_series(64));
    CHECK_THROWS_AS(pochhammer({2, 1, 1}, 4), domain_error);
    CHECK_THROWS_AS(pochhammer({1, 0, 1}, 4), domain_error);
    CHECK_THROWS_AS(pochhammer({1, 1, 0}, 4), domain_error);
}

TEST_CASE("theta_2")
{
    const series t = theta2(3);
    CHECK(t.denom() == 4);
    CHECK(t[1] == 2);
    CHECK(t[9] == 2);
    CHECK(t[4] == 0);
    const series t4 = theta2_fourth(10);
    CHECK(t4.denom() == 1);
    CHECK(t4[1] == 16);
    for (int n = 0; n <= 10; ++n) {
        CHECK(t4[n] == odd_four_squares(n));
    }
    CHECK(scale(theta2_fourth(3), rational(1, 16))[3] == 4);
    CHECK(scale(theta2_fourth(64), rational(1, 16)) == series_E(64));
}

TEST_CASE("Goettsche operator identity")
{
    series weighted(128);
    for (int n = 1; n <= 128; ++n) {
        weighted[n] = static_cast<long>(n) * n * sigma1(n);
    }
    CHECK(qderiv(qderiv(sigma1_series(128))) == weighted);
}

TEST_CASE("named forms")
{
    CHECK(make_named_form("A", 1, 6).value == ints({0, 1, 3, 4, 7, 6, 12}));
    CHECK(make_named_form("A", 2, 6).params == std::vector<int>{2});
    CHECK(make_named_form("delta_inv", 0, 3).params.empty());
    CHECK(make_named_form("theta2_4", 0, 5).value == theta2_fourth(5));
    CHECK_THROWS_AS(make_named_form("B", 0, 4), domain_error);
    CHECK_THROWS_AS(make_named_form("C", -1, 4), domain_error);
    const std::set<std::string> names(named_form_names().begin(), named_form_names().end());
    CHECK(names == std::set<std::string>{"A", "C", "E", "delta_inv", "legendre", "theta2_4", "E2"});
}
