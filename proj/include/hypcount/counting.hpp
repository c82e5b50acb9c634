#ifndef HYPCOUNT_COUNTING_HPP
#define HYPCOUNT_COUNTING_HPP

#include <compare>
#include <string>
#include <vector>

#include <hypcount/kummer.hpp>
#include <hypcount/series.hpp>

namespace hypcount
{

// The named factors of a configuration's counting series:
// E(u)^e_power * prod A_a(u^4) * prod C_c(u^2), indices 0 omitted.
struct shape {
    int e_power = 0;
    std::vector<int> a_indices; // ascending
    std::vector<int> c_indices; // ascending

    // e.g. "E(u)C_1(u^2)", "A_1(u^4)C_1(u^2)", "C_1(u^2)^2", "1".
    std::string label() const;

    friend auto operator<=>(const shape &, const shape &) = default;
};

// Requires an admissible configuration; domain_error otherwise.
shape shape_of(const config &k);

struct count_series {
    config k;
    coset parity = coset::none;
    series value; // coefficient of u^{h-1} is N_{k,h}
};

// E(u)^{|S|/2-2} prod_{v in S} A_{(k_v-1)/2}(u^4) prod_{v not in S} C_{k_v/2}(u^2)
// with S the odd support of k; the zero series when S is not admissible.
// |k| must be even and >= 4.
count_series f_gk(const config &k, int order);

// The same coefficient read off the orbifold potential sum_{eta in Pi_3} F_eta:
// for each eta and each coset, u^{|eta+eps_i|/2-2} u^2/Delta(u^2) times the
// product over points of the x^{k_v} coefficient of the h or g theta block.
// No A_k, C_k or E series are involved.
series f_gk_via_potential(const config &k, int order);

struct orbit_entry {
    config rep;
    int orbit_size = 0;
    coset parity = coset::none;
    shape form;
    series value;
};

struct count_report {
    int genus = 0;
    int order = 0;
    std::vector<orbit_entry> orbits;
    series total; // sum over orbit representatives
};

// Counting series of genus g curves up to translation: one term per
// translation orbit of admissible configurations of total 2g+2.
count_report genus_total(int g, int order);

// Orbits grouped by shape: one row per shape with its multiplicity, sorted
// by the valuation of the series and then by label.
struct shape_row {
    shape form;
    int multiplicity = 0;
    series value;
};
std::vector<shape_row> shape_rows(const count_report &report);

// -1 + sum_v k_v^2 / 2; domain_error for an inadmissible configuration.
int min_arith_genus(const config &k);

// Largest genus of a smooth curve: all k_v <= 1, so |k| is the size of an
// admissible odd support.
int smooth_genus_bound();

// E + 3 A_1(u^2) - 2 A_1(u^4) = A_1(u) and (q d/dq)^2 A_1 = sum n^2 sigma1(n) q^n,
// together with the sigma1 lemmas, up to order.
bool gottsche_reconcile(int order);

} // namespace hypcount

#endif
