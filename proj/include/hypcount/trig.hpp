#ifndef HYPCOUNT_TRIG_HPP
#define HYPCOUNT_TRIG_HPP

#include <map>
#include <vector>

#include <hypcount/series.hpp>
#include <hypcount/xpoly.hpp>

namespace hypcount
{

// Chebyshev polynomial of the first kind in the monomial basis.
struct cheb_poly {
    int n = 0;
    std::vector<integer> coeffs; // coeffs[j] multiplies x^j
};

// T_0 = 1, T_1 = x, T_n = 2x T_{n-1} - T_{n-2}.
cheb_poly chebyshev(int n);
double evaluate(const cheb_poly &p, double x);

// Integer polynomial helpers, coefficients in ascending degree.
std::vector<integer> poly_compose(const std::vector<integer> &outer, const std::vector<integer> &inner);
std::vector<integer> poly_trim(std::vector<integer> p);

enum class theta_kind { h, g };

// One per-point factor of the orbifold potential, written as a polynomial in
// x = 2 sin(z/2) with coefficients that are series in u:
//   h = 2 sum_{n>=0} T_{2n+1}(x/2) u^{2n^2+2n}
//   g = 1 + 2 sum_{n>=1} T_{2n}(x/2) u^{2n^2}
struct theta_block {
    theta_kind kind;
    xpoly rep;
    int order;
};

// Terms with u-exponent above order are dropped, so n runs while
// 2n^2 <= order, i.e. n <= sqrt(order/2).
theta_block make_theta_block(theta_kind kind, int order);

// Rewrites a block in q = u^2. Its u-exponents are all even; throws
// domain_error otherwise.
xpoly theta_block_in_q(const theta_block &block);

// (q^2;q^2)^3 sum_k A_k(q^2) x^{2k+1} and ((q;q)/(-q;q)) sum_k C_k(q) x^{2k},
// x-degree truncated at xdeg.
xpoly andrews_rose_H(int order, int xdeg);
xpoly andrews_rose_G(int order, int xdeg);

// Coefficients of the z-series f(z) = sum_j c_j x^j with x = 2 sin(z/2).
// Returns c_0..c_{f.order()}, which are exact because x = z + O(z^3).
std::vector<rational> z_series_in_x(const series &f);

// 2 sin(z/2) to order z^order.
series two_sin_half(int order);

// Exponential generating coefficients indexed by per-variable exponents:
// F(x) = sum_k coeff[k] prod_v x_v^{k_v} / k_v!.
using exp_coeffs = std::map<std::vector<int>, rational>;

// Expands F°(2 sin(z_v/2)) as a series in the z_v and reads back the
// exponential coefficients of every monomial of total degree <= max_total.
// Zero coefficients are omitted from the result.
exp_coeffs sine_substitute(const exp_coeffs &gw0, int max_total);

// The same coefficients from the closed sum
//   GW_k = sum_l GW°_{k-2l} (-1/4)^{|l|} prod_v s(k_v, k_v - 2 l_v).
exp_coeffs sine_substitute_combinatorial(const exp_coeffs &gw0, int max_total);

// h(q) = 2 sin(q/2) satisfies h'' + h/4 = 0 and h'h'' + h h'/4 = 0.
bool h_ode_check(int order);
bool h_ode_check(const series &h);

} // namespace hypcount

#endif
