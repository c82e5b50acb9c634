#ifndef HYPCOUNT_NUMTHEORY_HPP
#define HYPCOUNT_NUMTHEORY_HPP

#include <cstdint>

#include <hypcount/series.hpp>

namespace hypcount
{

// Sum of the positive divisors of n. Values up to 10^6 come from a sieve
// built once on first use; larger arguments fall back to trial division.
std::int64_t sigma1(std::int64_t n);

// Reference implementation by trial division, no cache.
std::int64_t sigma1_trial(std::int64_t n);

// sigma1(n) = 3 sigma1(n/2) for n = 2 mod 4 and
// sigma1(n) = 3 sigma1(n/2) - 2 sigma1(n/4) for n = 0 mod 4.
// Vacuously true for odd n.
bool sigma1_lemma_check(std::int64_t n);

// Number of ways to split k labelled points into l unordered blocks of odd
// size. Zero unless l <= k and k = l mod 2.
integer odd_split_count(int k, int l);

integer binomial(int n, int k);
integer factorial(int n);

} // namespace hypcount

#endif
