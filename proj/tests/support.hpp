#ifndef HYPCOUNT_TESTS_SUPPORT_HPP
#define HYPCOUNT_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include <hypcount/series.hpp>

namespace test_support
{

using hypcount::rational;
using hypcount::series;

// Series from integer coefficients, order = size - 1.
inline series ints(std::initializer_list<long> c, int denom = 1)
{
    std::vector<rational> v;
    for (long x : c) {
        v.emplace_back(x);
    }
    return series(std::move(v), denom);
}

inline series random_series(std::mt19937_64 &rng, int order, int lo = -9, int hi = 9, int max_den = 5)
{
    std::uniform_int_distribution<int> num(lo, hi);
    std::uniform_int_distribution<int> den(1, max_den);
    series s(order);
    for (int i = 0; i <= order; ++i) {
        rational r(num(rng), den(rng));
        r.canonicalize();
        s[i] = r;
    }
    return s;
}

} // namespace test_support

#endif
