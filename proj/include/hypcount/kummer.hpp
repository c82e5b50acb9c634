#ifndef HYPCOUNT_KUMMER_HPP
#define HYPCOUNT_KUMMER_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <hypcount/series.hpp>
#include <hypcount/xpoly.hpp>

namespace hypcount
{

// A 2-torsion point of the abelian surface, an element of F_2^4. The label
// index is 4c + r where c (two bits) is the column and r (two bits) the row
// of the E_0 ... E_15 grid; the group law is XOR of the index.
struct point {
    std::uint8_t index = 0;

    constexpr int column() const
    {
        return index >> 2;
    }
    constexpr int row() const
    {
        return index & 3;
    }
    friend constexpr point operator+(point a, point b)
    {
        return point{static_cast<std::uint8_t>(a.index ^ b.index)};
    }
    friend constexpr bool operator==(point, point) = default;
};

inline constexpr int num_points = 16;

// A subset of the 16 points; addition is symmetric difference.
struct subset {
    std::uint16_t mask = 0;

    static subset of(std::initializer_list<int> indices);

    constexpr bool contains(point p) const
    {
        return (mask >> p.index) & 1U;
    }
    constexpr int size() const
    {
        return std::popcount(mask);
    }
    constexpr bool empty() const
    {
        return mask == 0;
    }
    // {v + t : v in S}
    subset translated(point t) const;
    std::vector<int> indices() const;

    friend constexpr subset operator+(subset a, subset b)
    {
        return subset{static_cast<std::uint16_t>(a.mask ^ b.mask)};
    }
    friend constexpr subset operator&(subset a, subset b)
    {
        return subset{static_cast<std::uint16_t>(a.mask & b.mask)};
    }
    friend constexpr bool operator==(subset, subset) = default;
};

inline constexpr subset full_set{0xFFFF};

// E_0, E_4, E_8, E_12: the bottom row of the grid.
subset epsilon0();
// E_1, E_2, E_3, E_4, E_8, E_12.
subset epsilon1();

// True iff |S| = 2^k and x + y + z is in S for all x, y, z in S.
bool is_affine_plane(subset s, int k);
// Every affine k-plane, in increasing mask order.
std::vector<subset> affine_planes(int k);

// Membership in the group generated by affine 3-planes: the indicator of S
// is an affine functional on F_2^4.
bool in_pi3(subset s);

// The subgroup of the power set generated (under symmetric difference) by all
// affine k-planes, built from an F_2 basis of the generators.
class plane_group
{
public:
    explicit plane_group(int k);

    int dimension() const
    {
        return static_cast<int>(m_basis.size());
    }
    std::size_t size() const
    {
        return std::size_t{1} << m_basis.size();
    }
    bool contains(subset s) const;
    std::vector<subset> elements() const;

private:
    std::vector<std::uint16_t> m_basis;
    // m_pivots[b] is the basis vector with leading bit b, or 0.
    std::array<std::uint16_t, num_points> m_pivots{};
};

// w = sum_v (a_v / 2) E_v
struct half_lattice_vec {
    std::array<int, num_points> a{};

    // w_S = (1/2) sum_{v in S} E_v
    static half_lattice_vec hat(subset s);
    // E_v itself, numerator 2.
    static half_lattice_vec basis(point v);

    // {v : a_v odd}
    subset reduction() const;
};

bool kummer_member(const half_lattice_vec &w);

// <w1, w2> with <E_u, E_v> = -2 delta_uv, i.e. -1/2 sum a_v b_v.
rational pairing(const half_lattice_vec &w1, const half_lattice_vec &w2);

enum class coset { even, odd, none };
std::string to_string(coset c);

// even iff P + epsilon0 is in Pi_3, odd iff P + epsilon1 is.
coset admissible(subset p);

// Multiplicity profile k : A[2] -> Z_{>=0}.
struct config {
    std::array<int, num_points> k{};

    int total() const;
    subset odd_support() const;
    // (t.k)(v) = k(v + t)
    config translated(point t) const;
    // The point labels with multiplicity, ascending: the orbit ordering key.
    std::vector<int> multiset() const;

    friend bool operator==(const config &, const config &) = default;
};

struct orbit {
    config rep;
    int size = 0;
    coset parity = coset::none;
};

struct orbit_table {
    int degree = 0;
    std::vector<orbit> orbits;
    // Number of admissible configurations of this degree, before grouping.
    std::size_t admissible_count = 0;
};

// Canonical representative of the translation orbit of k: the translate with
// the lexicographically least multiset encoding.
config canonical(const config &k);

// Every admissible configuration of the given total, in increasing multiset
// order. The enumeration is split by odd support.
std::vector<config> admissible_configs(int degree);
// Serial reference: walks every composition of degree into 16 parts and keeps
// those with admissible odd support. Same output as admissible_configs.
std::vector<config> admissible_configs_serial(int degree);

// Translation orbits of admissible configurations of the given total, sorted
// by representative. degree must be even and >= 4.
orbit_table translation_orbits(int degree);

// Per-point truncated lattice theta sums, expressed as polynomials in
// x = 2 sin(z/2). Points of eta + epsilon_i carry
//   sum_{|k|<=bound} (-1)^k u^{2k^2+2k} e^{i(k+1/2)z}  (which equals i * h)
// and the others carry
//   sum_{|k|<=bound} (-1)^k u^{2k^2} e^{ikz}          (which equals g).
// The factors stored are h and g respectively.
struct lattice_oracle {
    subset h_points;
    std::vector<xpoly> factors; // one per point, by label index

    // Coefficient of prod_v x_v^{k_v} in the product of all factors.
    series monomial_coefficient(const config &k) const;
};

// Requires eta in Pi_3 and 2 bound^2 > order (bound_too_small otherwise).
lattice_oracle lattice_sum_oracle(subset eta, coset parity, int bound, int order);

} // namespace hypcount

#endif
