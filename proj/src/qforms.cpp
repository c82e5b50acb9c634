#include <hypcount/qforms.hpp>

#include <hypcount/errors.hpp>
#include <hypcount/numtheory.hpp>

namespace hypcount
{

namespace
{

// e_k over the family f_m, m = 1, 2, ...: the sum of f_{m_1} ... f_{m_k} over
// strictly increasing index tuples. Each f_m has valuation >= m, so factors
// with m > order never reach the truncation window.
template <typename Factor>
series elementary_sum(int k, int order, int max_index, Factor factor)
{
    if (k < 0) {
        throw domain_error("MacMahon index must be nonnegative");
    }
    std::vector<series> partial(static_cast<std::size_t>(k) + 1, series(order));
    partial[0] = series::one(order);
    for (int m = 1; m <= max_index; ++m) {
        const series f = factor(m);
        if (f.is_zero()) {
            continue;
        }
        for (int j = k; j >= 1; --j) {
            const series &prev = partial[static_cast<std::size_t>(j - 1)];
            if (prev.is_zero()) {
                continue;
            }
            partial[static_cast<std::size_t>(j)] = add(partial[static_cast<std::size_t>(j)], mul(prev, f));
        }
    }
    return partial[static_cast<std::size_t>(k)];
}

// q^e / (1 - q^e)^2 = sum_{j>=1} j q^{je}
series divisor_kernel(int e, int order)
{
    series f(order);
    for (int j = 1; j * e <= order; ++j) {
        f[j * e] = j;
    }
    return f;
}

} // namespace

series macmahon_A_direct(int k, int order)
{
    return elementary_sum(k, order, order, [order](int m) { return divisor_kernel(m, order); });
}

series macmahon_C_direct(int k, int order)
{
    return elementary_sum(k, order, order, [order](int m) { return divisor_kernel(2 * m - 1, order); });
}

series sigma1_series(int order)
{
    series s(order);
    for (int n = 1; n <= order; ++n) {
        s[n] = sigma1(n);
    }
    return s;
}

series macmahon_A_recursive(int k, int order)
{
    if (k < 1) {
        throw domain_error("the A_k recursion starts at k = 1");
    }
    const series a1 = sigma1_series(order);
    series a = a1;
    for (int j = 2; j <= k; ++j) {
        const series lin = add(scale(a1, 6), series::constant(rational(j * (j - 1)), order));
        const series num = sub(mul(lin, a), scale(qderiv(a), 2));
        a = scale(num, rational(1, (2 * j + 1) * 2 * j));
    }
    return a;
}

series macmahon_C_recursive(int k, int order)
{
    if (k < 1) {
        throw domain_error("the C_k recursion starts at k = 1");
    }
    const series a1 = sigma1_series(order);
    const series c1 = sub(a1, compose_monomial(a1, 2));
    series c = c1;
    for (int j = 2; j <= k; ++j) {
        const series lin = add(scale(c1, 2), series::constant(rational((j - 1) * (j - 1)), order));
        const series num = sub(mul(lin, c), qderiv(c));
        c = scale(num, rational(1, 2 * j * (2 * j - 1)));
    }
    return c;
}

series series_E(int order)
{
    series s(order);
    for (int n = 1; n <= order; n += 2) {
        s[n] = sigma1(n);
    }
    return s;
}

series odd_sigma_series(int order)
{
    series s(order);
    for (int k = 0; k <= order; ++k) {
        s[k] = sigma1(2 * k + 1);
    }
    return s;
}

series eisenstein_E2(int order)
{
    series s = sigma1_series(order);
    s[0] = rational(-1, 24);
    return s;
}

series pochhammer(const pochhammer_spec &spec, int order)
{
    if (spec.offset < 1 || spec.step < 1 || (spec.sign != 1 && spec.sign != -1)) {
        throw domain_error("pochhammer needs offset, step >= 1 and sign = +-1");
    }
    series r = series::one(order);
    // Multiply in place by (1 - sign q^e), top coefficient first.
    for (int e = spec.offset; e <= order; e += spec.step) {
        for (int n = order; n >= e; --n) {
            if (spec.sign > 0) {
                r[n] -= r[n - e];
            } else {
                r[n] += r[n - e];
            }
        }
    }
    return r;
}

series delta_over_q(int order)
{
    return pow(pochhammer({1, 1, 1}, order), 24);
}

series delta_inv_times_q(int order)
{
    return invert(delta_over_q(order));
}

series legendre_product(int order)
{
    const series qq = pochhammer({1, 1, 1}, order);
    const series mq = pochhammer({-1, 1, 1}, order);
    return pow(mul(qq, mul(mq, mq)), 4);
}

series theta2(int order)
{
    // Over denom 4 the exponent (k+1/2)^2 is (2k+1)^2; k and -1-k give the
    // same term, hence the factor 2 on the k >= 0 half.
    series t(4 * order, 4);
    for (int k = 0; (2 * k + 1) * (2 * k + 1) <= 4 * order; ++k) {
        t[(2 * k + 1) * (2 * k + 1)] = 2;
    }
    return t;
}

series theta2_fourth(int order)
{
    return pow(theta2(order), 4).reduced(1);
}

const std::vector<std::string> &named_form_names()
{
    static const std::vector<std::string> names = {"A", "C", "E", "delta_inv", "legendre", "theta2_4", "E2"};
    return names;
}

named_form make_named_form(const std::string &name, int k, int order)
{
    if (name == "A" || name == "C") {
        if (k < 0) {
            throw domain_error("form " + name + " needs k >= 0");
        }
        return {name, {k}, name == "A" ? macmahon_A_direct(k, order) : macmahon_C_direct(k, order)};
    }
    if (name == "E") {
        return {name, {}, series_E(order)};
    }
    if (name == "delta_inv") {
        return {name, {}, delta_inv_times_q(order)};
    }
    if (name == "legendre") {
        return {name, {}, legendre_product(order)};
    }
    if (name == "theta2_4") {
        return {name, {}, theta2_fourth(order)};
    }
    if (name == "E2") {
        return {name, {}, eisenstein_E2(order)};
    }
    throw domain_error("unknown form '" + name + "'");
}

} // namespace hypcount
