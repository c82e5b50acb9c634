#include <hypcount/kummer.hpp>

#include <algorithm>
#include <functional>
#include <mutex>

#include <hypcount/errors.hpp>
#include <hypcount/trig.hpp>

namespace hypcount
{

subset subset::of(std::initializer_list<int> indices)
{
    subset s;
    for (int i : indices) {
        if (i < 0 || i >= num_points) {
            throw domain_error("point index out of range");
        }
        s.mask = static_cast<std::uint16_t>(s.mask | (1U << i));
    }
    return s;
}

subset subset::translated(point t) const
{
    subset out;
    for (int i = 0; i < num_points; ++i) {
        if ((mask >> i) & 1U) {
            out.mask = static_cast<std::uint16_t>(out.mask | (1U << (i ^ t.index)));
        }
    }
    return out;
}

std::vector<int> subset::indices() const
{
    std::vector<int> out;
    for (int i = 0; i < num_points; ++i) {
        if ((mask >> i) & 1U) {
            out.push_back(i);
        }
    }
    return out;
}

subset epsilon0()
{
    return subset::of({0, 4, 8, 12});
}

subset epsilon1()
{
    return subset::of({1, 2, 3, 4, 8, 12});
}

bool is_affine_plane(subset s, int k)
{
    if (k < 0 || k > 4) {
        throw domain_error("affine plane dimension must be in 0..4");
    }
    if (s.size() != (1 << k)) {
        return false;
    }
    const auto pts = s.indices();
    for (int x : pts) {
        for (int y : pts) {
            for (int z : pts) {
                if (!s.contains(point{static_cast<std::uint8_t>(x ^ y ^ z)})) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<subset> affine_planes(int k)
{
    std::vector<subset> out;
    for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
        const subset s{static_cast<std::uint16_t>(m)};
        if (s.size() == (1 << k) && is_affine_plane(s, k)) {
            out.push_back(s);
        }
    }
    return out;
}

bool in_pi3(subset s)
{
    // f(x) + f(y) + f(z) + f(x+y+z) = 0 for all x, y, z; taking z = 0 gives an
    // equivalent condition (f + f(0) is then additive).
    const int f0 = s.contains(point{0}) ? 1 : 0;
    for (int x = 0; x < num_points; ++x) {
        const int fx = (s.mask >> x) & 1;
        for (int y = x + 1; y < num_points; ++y) {
            const int fy = (s.mask >> y) & 1;
            const int fxy = (s.mask >> (x ^ y)) & 1;
            if ((fx ^ fy ^ fxy ^ f0) != 0) {
                return false;
            }
        }
    }
    return true;
}

namespace
{

// Reduces v against an echelon basis indexed by leading bit.
std::uint16_t reduce(std::uint16_t v, const std::array<std::uint16_t, num_points> &pivots)
{
    for (int bit = num_points - 1; bit >= 0; --bit) {
        if (((v >> bit) & 1U) && pivots[static_cast<std::size_t>(bit)] != 0) {
            v = static_cast<std::uint16_t>(v ^ pivots[static_cast<std::size_t>(bit)]);
        }
    }
    return v;
}

} // namespace

plane_group::plane_group(int k)
{
    for (subset gen : affine_planes(k)) {
        const std::uint16_t v = reduce(gen.mask, m_pivots);
        if (v != 0) {
            m_pivots[static_cast<std::size_t>(std::bit_width(v) - 1)] = v;
            m_basis.push_back(v);
        }
    }
}

bool plane_group::contains(subset s) const
{
    return reduce(s.mask, m_pivots) == 0;
}

std::vector<subset> plane_group::elements() const
{
    std::vector<subset> out;
    out.reserve(size());
    for (std::size_t code = 0; code < size(); ++code) {
        std::uint16_t v = 0;
        for (std::size_t i = 0; i < m_basis.size(); ++i) {
            if ((code >> i) & 1U) {
                v ^= m_basis[i];
            }
        }
        out.push_back(subset{v});
    }
    std::sort(out.begin(), out.end(), [](subset a, subset b) { return a.mask < b.mask; });
    return out;
}

half_lattice_vec half_lattice_vec::hat(subset s)
{
    half_lattice_vec w;
    for (int i = 0; i < num_points; ++i) {
        w.a[static_cast<std::size_t>(i)] = s.contains(point{static_cast<std::uint8_t>(i)}) ? 1 : 0;
    }
    return w;
}

half_lattice_vec half_lattice_vec::basis(point v)
{
    half_lattice_vec w;
    w.a[v.index] = 2;
    return w;
}

subset half_lattice_vec::reduction() const
{
    subset s;
    for (int i = 0; i < num_points; ++i) {
        if (a[static_cast<std::size_t>(i)] % 2 != 0) {
            s.mask = static_cast<std::uint16_t>(s.mask | (1U << i));
        }
    }
    return s;
}

bool kummer_member(const half_lattice_vec &w)
{
    return in_pi3(w.reduction());
}

rational pairing(const half_lattice_vec &w1, const half_lattice_vec &w2)
{
    long dot = 0;
    for (std::size_t i = 0; i < num_points; ++i) {
        dot += static_cast<long>(w1.a[i]) * w2.a[i];
    }
    rational r(-dot, 2);
    r.canonicalize();
    return r;
}

std::string to_string(coset c)
{
    switch (c) {
    case coset::even:
        return "even";
    case coset::odd:
        return "odd";
    case coset::none:
        break;
    }
    return "none";
}

namespace
{

// Cross-checks run once before the first admissibility query: the affine
// indicator test agrees with the generated group, and the two cosets differ.
void startup_check()
{
    static std::once_flag once;
    std::call_once(once, [] {
        const plane_group pi3(3);
        std::size_t hits = 0;
        for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
            const subset s{static_cast<std::uint16_t>(m)};
            const bool a = in_pi3(s);
            if (a) {
                ++hits;
            }
            if (a != pi3.contains(s)) {
                throw error("affine indicator test disagrees with the generated 3-plane group");
            }
        }
        if (hits != 32) {
            throw error("the 3-plane group should have 32 elements");
        }
        if (in_pi3(epsilon0() + epsilon1())) {
            throw error("admissibility cosets coincide");
        }
    });
}

} // namespace

coset admissible(subset p)
{
    startup_check();
    if (in_pi3(p + epsilon0())) {
        return coset::even;
    }
    if (in_pi3(p + epsilon1())) {
        return coset::odd;
    }
    return coset::none;
}

int config::total() const
{
    int t = 0;
    for (int v : k) {
        t += v;
    }
    return t;
}

subset config::odd_support() const
{
    subset s;
    for (int i = 0; i < num_points; ++i) {
        if (k[static_cast<std::size_t>(i)] % 2 != 0) {
            s.mask = static_cast<std::uint16_t>(s.mask | (1U << i));
        }
    }
    return s;
}

config config::translated(point t) const
{
    config out;
    for (int v = 0; v < num_points; ++v) {
        out.k[static_cast<std::size_t>(v)] = k[static_cast<std::size_t>(v ^ t.index)];
    }
    return out;
}

std::vector<int> config::multiset() const
{
    std::vector<int> out;
    for (int v = 0; v < num_points; ++v) {
        out.insert(out.end(), static_cast<std::size_t>(k[static_cast<std::size_t>(v)]), v);
    }
    return out;
}

config canonical(const config &k)
{
    config best = k;
    std::vector<int> best_key = k.multiset();
    for (std::uint8_t t = 1; t < num_points; ++t) {
        config c = k.translated(point{t});
        std::vector<int> key = c.multiset();
        if (key < best_key) {
            best = c;
            best_key = std::move(key);
        }
    }
    return best;
}

namespace
{

const std::vector<subset> &admissible_supports()
{
    static const std::vector<subset> supports = [] {
        std::vector<subset> out;
        for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
            const subset s{static_cast<std::uint16_t>(m)};
            if (admissible(s) != coset::none) {
                out.push_back(s);
            }
        }
        return out;
    }();
    return supports;
}

// All k = 1_P + 2m with |m| = pairs.
void distribute_pairs(subset p, int pairs, std::vector<config> &out)
{
    config base;
    for (int v = 0; v < num_points; ++v) {
        base.k[static_cast<std::size_t>(v)] = p.contains(point{static_cast<std::uint8_t>(v)}) ? 1 : 0;
    }
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == num_points - 1) {
            base.k[static_cast<std::size_t>(v)] += 2 * left;
            out.push_back(base);
            base.k[static_cast<std::size_t>(v)] -= 2 * left;
            return;
        }
        for (int m = 0; m <= left; ++m) {
            base.k[static_cast<std::size_t>(v)] += 2 * m;
            rec(v + 1, left - m);
            base.k[static_cast<std::size_t>(v)] -= 2 * m;
        }
    };
    rec(0, pairs);
}

} // namespace

std::vector<config> admissible_configs(int degree)
{
    if (degree < 0) {
        throw domain_error("configuration degree must be nonnegative");
    }
    const auto &supports = admissible_supports();
    std::vector<std::vector<config>> per_support(supports.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < supports.size(); ++i) {
        const int size = supports[i].size();
        if (size <= degree && (degree - size) % 2 == 0) {
            distribute_pairs(supports[i], (degree - size) / 2, per_support[i]);
        }
    }
    std::vector<std::pair<std::vector<int>, config>> keyed;
    for (auto &bucket : per_support) {
        for (auto &c : bucket) {
            keyed.emplace_back(c.multiset(), c);
        }
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto &a, const auto &b) { return a.first < b.first; });
    std::vector<config> out;
    out.reserve(keyed.size());
    for (auto &kv : keyed) {
        out.push_back(kv.second);
    }
    return out;
}

std::vector<config> admissible_configs_serial(int degree)
{
    if (degree < 0) {
        throw domain_error("configuration degree must be nonnegative");
    }
    std::vector<config> out;
    config k;
    std::function<void(int, int)> rec = [&](int v, int left) {
        if (v == num_points - 1) {
            k.k[static_cast<std::size_t>(v)] = left;
            if (admissible(k.odd_support()) != coset::none) {
                out.push_back(k);
            }
            return;
        }
        for (int m = 0; m <= left; ++m) {
            k.k[static_cast<std::size_t>(v)] = m;
            rec(v + 1, left - m);
        }
    };
    rec(0, degree);
    std::sort(out.begin(), out.end(), [](const config &a, const config &b) { return a.multiset() < b.multiset(); });
    return out;
}

orbit_table translation_orbits(int degree)
{
    if (degree < 4 || degree % 2 != 0) {
        throw domain_error("orbit enumeration needs an even degree >= 4");
    }
    const std::vector<config> all = admissible_configs(degree);
    std::vector<int> orbit_size(all.size(), 0);
#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (canonical(all[i]) == all[i]) {
            std::vector<config> seen;
            for (std::uint8_t t = 0; t < num_points; ++t) {
                config c = all[i].translated(point{t});
                if (std::find(seen.begin(), seen.end(), c) == seen.end()) {
                    seen.push_back(c);
                }
            }
            orbit_size[i] = static_cast<int>(seen.size());
        }
    }
    orbit_table table;
    table.degree = degree;
    table.admissible_count = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (orbit_size[i] > 0) {
            table.orbits.push_back({all[i], orbit_size[i], admissible(all[i].odd_support())});
        }
    }
    return table;
}

namespace
{

// (i alpha)^n / n! split into real and imaginary parts.
void add_exponential(series &re, series &im, const rational &alpha, const rational &weight)
{
    rational term = weight; // weight * alpha^n / n!
    for (int n = 0; n <= re.order(); ++n) {
        if (n > 0) {
            term *= alpha;
            term /= n;
        }
        // i^n cycles 1, i, -1, -i.
        switch (n % 4) {
        case 0:
            re[n] += term;
            break;
        case 1:
            im[n] += term;
            break;
        case 2:
            re[n] -= term;
            break;
        default:
            im[n] -= term;
            break;
        }
    }
}

// The lattice theta sum of one point, converted to a polynomial in x.
xpoly lattice_factor(bool odd_block, int bound, int order)
{
    const int zdeg = 2 * bound + 1;
    std::vector<series> re(static_cast<std::size_t>(order) + 1, series(zdeg));
    std::vector<series> im(static_cast<std::size_t>(order) + 1, series(zdeg));
    for (int k = -bound; k <= bound; ++k) {
        const int e = odd_block ? 2 * k * k + 2 * k : 2 * k * k;
        if (e > order) {
            continue;
        }
        const rational sign = (k % 2 == 0) ? 1 : -1;
        const rational alpha = odd_block ? rational(2 * k + 1, 2) : rational(k);
        add_exponential(re[static_cast<std::size_t>(e)], im[static_cast<std::size_t>(e)], alpha, sign);
    }
    xpoly out(zdeg, order);
    for (int e = 0; e <= order; ++e) {
        // The odd block sums to i*h, the even block to the real g.
        const series &kept = odd_block ? im[static_cast<std::size_t>(e)] : re[static_cast<std::size_t>(e)];
        const series &vanishing = odd_block ? re[static_cast<std::size_t>(e)] : im[static_cast<std::size_t>(e)];
        if (!vanishing.is_zero()) {
            throw error("lattice theta sum has an unpaired term; bound too small for order");
        }
        const auto xs = z_series_in_x(kept);
        for (int j = 0; j <= zdeg; ++j) {
            out[j][e] = xs[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

} // namespace

series lattice_oracle::monomial_coefficient(const config &k) const
{
    series acc = series::one(factors.front().order());
    for (int v = 0; v < num_points; ++v) {
        acc = mul(acc, factors[static_cast<std::size_t>(v)].coeff(k.k[static_cast<std::size_t>(v)]));
        if (acc.is_zero()) {
            break;
        }
    }
    return acc;
}

lattice_oracle lattice_sum_oracle(subset eta, coset parity, int bound, int order)
{
    if (!in_pi3(eta)) {
        throw domain_error("eta must lie in the 3-plane group");
    }
    if (parity == coset::none) {
        throw domain_error("lattice oracle needs the even or odd coset");
    }
    if (bound < 1 || 2L * bound * bound <= order) {
        throw bound_too_small("lattice sum bound must satisfy 2 bound^2 > order");
    }
    lattice_oracle out;
    out.h_points = eta + (parity == coset::even ? epsilon0() : epsilon1());
    const xpoly h = lattice_factor(true, bound, order);
    const xpoly g = lattice_factor(false, bound, order);
    for (int v = 0; v < num_points; ++v) {
        out.factors.push_back(out.h_points.contains(point{static_cast<std::uint8_t>(v)}) ? h : g);
    }
    return out;
}

} // namespace hypcount
