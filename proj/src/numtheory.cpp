#include <hypcount/numtheory.hpp>

#include <mutex>
#include <vector>

#include <hypcount/errors.hpp>

namespace hypcount
{

namespace
{

constexpr std::int64_t sieve_limit = 1'000'000;

const std::vector<std::int64_t> &sigma_sieve()
{
    static std::vector<std::int64_t> table;
    static std::once_flag once;
    std::call_once(once, [] {
        table.assign(sieve_limit + 1, 0);
        for (std::int64_t d = 1; d <= sieve_limit; ++d) {
            for (std::int64_t m = d; m <= sieve_limit; m += d) {
                table[static_cast<std::size_t>(m)] += d;
            }
        }
    });
    return table;
}

} // namespace

std::int64_t sigma1_trial(std::int64_t n)
{
    if (n < 1) {
        throw domain_error("sigma1 is defined for n >= 1");
    }
    std::int64_t s = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            s += d;
            if (d != n / d) {
                s += n / d;
            }
        }
    }
    return s;
}

std::int64_t sigma1(std::int64_t n)
{
    if (n < 1) {
        throw domain_error("sigma1 is defined for n >= 1");
    }
    if (n <= sieve_limit) {
        return sigma_sieve()[static_cast<std::size_t>(n)];
    }
    return sigma1_trial(n);
}

bool sigma1_lemma_check(std::int64_t n)
{
    if (n < 1) {
        throw domain_error("sigma1_lemma_check is defined for n >= 1");
    }
    if (n % 4 == 2) {
        return sigma1(n) == 3 * sigma1(n / 2);
    }
    if (n % 4 == 0) {
        return sigma1(n) == 3 * sigma1(n / 2) - 2 * sigma1(n / 4);
    }
    return true;
}

integer binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

integer factorial(int n)
{
    if (n < 0) {
        throw domain_error("factorial of a negative number");
    }
    integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

integer odd_split_count(int k, int l)
{
    if (k < 0 || l < 0 || l > k || (k - l) % 2 != 0) {
        return 0;
    }
    // table[j][m] = ways to split j labelled points into m odd blocks. The block
    // holding the first point has odd size a, its other members chosen from j-1.
    std::vector<std::vector<integer>> table(static_cast<std::size_t>(k) + 1,
                                            std::vector<integer>(static_cast<std::size_t>(l) + 1));
    table[0][0] = 1;
    for (int j = 1; j <= k; ++j) {
        for (int m = 1; m <= l && m <= j; ++m) {
            integer acc;
            for (int a = 1; a <= j; a += 2) {
                const integer &rest = table[static_cast<std::size_t>(j - a)][static_cast<std::size_t>(m - 1)];
                if (sgn(rest) != 0) {
                    acc += binomial(j - 1, a - 1) * rest;
                }
            }
            table[static_cast<std::size_t>(j)][static_cast<std::size_t>(m)] = acc;
        }
    }
    return table[static_cast<std::size_t>(k)][static_cast<std::size_t>(l)];
}

} // namespace hypcount
