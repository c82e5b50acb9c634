#ifndef HYPCOUNT_QFORMS_HPP
#define HYPCOUNT_QFORMS_HPP

#include <string>
#include <vector>

#include <hypcount/series.hpp>

namespace hypcount
{

// MacMahon's generalized sum-of-divisors series.
//
//   A_k(q) = sum over 0 < m_1 < ... < m_k of  prod_j q^{m_j} / (1 - q^{m_j})^2
//   C_k(q) = sum over 0 < m_1 < ... < m_k of  prod_j q^{2m_j-1} / (1 - q^{2m_j-1})^2
//
// The direct routines evaluate the nested sums; a summand whose index sum
// exceeds the truncation order starts above it and is dropped exactly.
// A_0 = C_0 = 1.
series macmahon_A_direct(int k, int order);
series macmahon_C_direct(int k, int order);

// The same series built from the differential recursions
//   A_k = ((6 A_1 + k(k-1)) A_{k-1} - 2 q A_{k-1}') / ((2k+1) 2k)
//   C_k = ((2 C_1 + (k-1)^2) C_{k-1} - q C_{k-1}') / (2k (2k-1))
// seeded by A_1 = sum sigma1(n) q^n and C_1 = A_1(q) - A_1(q^2).
// k = 0 is rejected with domain_error.
series macmahon_A_recursive(int k, int order);
series macmahon_C_recursive(int k, int order);

// sum_{n>=1} sigma1(n) q^n
series sigma1_series(int order);
// E(q) = sum_{k>=0} sigma1(2k+1) q^{2k+1}
series series_E(int order);
// sum_{k>=0} sigma1(2k+1) q^k
series odd_sigma_series(int order);
// E_2 normalized so that sum sigma1(d) q^d = E_2 + 1/24, i.e. -1/24 + sum sigma1(n) q^n.
series eisenstein_E2(int order);

// prod_{j>=0} (1 - sign * q^{offset + step*j}); offset, step >= 1, sign = +-1.
// (q;q) is {+1, 1, 1}, (-q;q) is {-1, 1, 1}, (q^2;q^2) is {+1, 2, 2}.
struct pochhammer_spec {
    int sign = 1;
    int offset = 1;
    int step = 1;
};
series pochhammer(const pochhammer_spec &spec, int order);

// Delta(q)/q = prod_{k>=1} (1 - q^k)^24
series delta_over_q(int order);
// q/Delta(q), constant term 1.
series delta_inv_times_q(int order);

// ((q;q)(-q;q)^2)^4
series legendre_product(int order);

// theta_2(q) = sum over all integers k of q^{(k+1/2)^2}, stored over denom 4
// up to q^order.
series theta2(int order);
// theta_2(q)^4, which has integral exponents; returned over denom 1.
series theta2_fourth(int order);

// A named series together with its parameters, as exported by the CLI and cache.
struct named_form {
    std::string name;
    std::vector<int> params;
    series value;
};

// Names: A, C (parameter k), E, delta_inv, legendre, theta2_4, E2.
// Unknown names raise domain_error.
named_form make_named_form(const std::string &name, int k, int order);
const std::vector<std::string> &named_form_names();

} // namespace hypcount

#endif
