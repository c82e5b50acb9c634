#include <hypcount/counting.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include <hypcount/errors.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/trig.hpp>

namespace hypcount
{

namespace
{

// Memo for the factor series; entries are immutable once inserted.
class factor_cache
{
public:
    // kind: 'A' for A_k(u^4), 'C' for C_k(u^2), 'E' for E(u)^k.
    series get(char kind, int k, int order)
    {
        const auto key = std::make_tuple(kind, k, order);
        {
            std::lock_guard lock(m_mutex);
            if (auto it = m_entries.find(key); it != m_entries.end()) {
                return it->second;
            }
        }
        series value = compute(kind, k, order);
        std::lock_guard lock(m_mutex);
        return m_entries.emplace(key, std::move(value)).first->second;
    }

private:
    static series compute(char kind, int k, int order)
    {
        switch (kind) {
        case 'A':
            return compose_monomial(macmahon_A_direct(k, order), 4);
        case 'C':
            return compose_monomial(macmahon_C_direct(k, order), 2);
        default:
            return pow(series_E(order), k);
        }
    }

    std::mutex m_mutex;
    std::map<std::tuple<char, int, int>, series> m_entries;
};

factor_cache &factors()
{
    static factor_cache cache;
    return cache;
}

void check_degree(const config &k)
{
    const int t = k.total();
    if (t % 2 != 0) {
        throw domain_error("configuration total must be even");
    }
    if (t < 4) {
        throw domain_error("configuration total must be at least 4");
    }
    for (int v : k.k) {
        if (v < 0) {
            throw domain_error("configuration entries must be nonnegative");
        }
    }
}

int e_exponent(subset s)
{
    const int e = s.size() / 2 - 2;
    if (s.size() % 2 != 0 || e < 0) {
        throw domain_error("odd support of size " + std::to_string(s.size()) + " gives a non-integral E exponent");
    }
    return e;
}

std::string factor_text(const std::string &base, int power)
{
    return power == 1 ? base : base + "^" + std::to_string(power);
}

} // namespace

std::string shape::label() const
{
    std::string out;
    if (e_power > 0) {
        out += factor_text("E(u)", e_power);
    }
    auto grouped = [&out](const std::vector<int> &idx, const std::string &letter, const std::string &arg) {
        for (std::size_t i = 0; i < idx.size();) {
            std::size_t j = i;
            while (j < idx.size() && idx[j] == idx[i]) {
                ++j;
            }
            out += factor_text(letter + "_" + std::to_string(idx[i]) + "(" + arg + ")", static_cast<int>(j - i));
            i = j;
        }
    };
    grouped(a_indices, "A", "u^4");
    grouped(c_indices, "C", "u^2");
    return out.empty() ? "1" : out;
}

shape shape_of(const config &k)
{
    const subset s = k.odd_support();
    if (admissible(s) == coset::none) {
        throw domain_error("configuration is not admissible");
    }
    shape out;
    out.e_power = e_exponent(s);
    for (int v = 0; v < num_points; ++v) {
        const int kv = k.k[static_cast<std::size_t>(v)];
        if (kv % 2 != 0) {
            if (kv >= 3) {
                out.a_indices.push_back((kv - 1) / 2);
            }
        } else if (kv >= 2) {
            out.c_indices.push_back(kv / 2);
        }
    }
    std::sort(out.a_indices.begin(), out.a_indices.end());
    std::sort(out.c_indices.begin(), out.c_indices.end());
    return out;
}

count_series f_gk(const config &k, int order)
{
    check_degree(k);
    const subset s = k.odd_support();
    count_series out{k, admissible(s), series(order)};
    if (out.parity == coset::none) {
        return out;
    }
    const shape sh = shape_of(k);
    series value = factors().get('E', sh.e_power, order);
    for (int a : sh.a_indices) {
        value = mul(value, factors().get('A', a, order));
    }
    for (int c : sh.c_indices) {
        value = mul(value, factors().get('C', c, order));
    }
    out.value = std::move(value);
    return out;
}

namespace
{

struct potential_context {
    theta_block h;
    theta_block g;
    series prefactor; // u^2 / Delta(u^2)
    std::vector<subset> pi3;
};

const potential_context &potential(int order)
{
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<potential_context>> contexts;
    std::lock_guard lock(mutex);
    auto &slot = contexts[order];
    if (!slot) {
        slot = std::make_unique<potential_context>(potential_context{
            make_theta_block(theta_kind::h, order), make_theta_block(theta_kind::g, order),
            compose_monomial(delta_inv_times_q(order), 2), plane_group(3).elements()});
    }
    return *slot;
}

} // namespace

series f_gk_via_potential(const config &k, int order)
{
    check_degree(k);
    const potential_context &ctx = potential(order);
    series total(order);
    for (subset eta : ctx.pi3) {
        for (subset eps : {epsilon0(), epsilon1()}) {
            const subset h_points = eta + eps;
            series term = ctx.prefactor;
            for (int v = 0; v < num_points && !term.is_zero(); ++v) {
                const point p{static_cast<std::uint8_t>(v)};
                const theta_block &block = h_points.contains(p) ? ctx.h : ctx.g;
                term = mul(term, block.rep.coeff(k.k[static_cast<std::size_t>(v)]));
            }
            if (term.is_zero()) {
                continue;
            }
            const int shift = h_points.size() / 2 - 2;
            if (h_points.size() % 2 != 0 || shift < 0) {
                throw domain_error("potential term with a negative or fractional u shift");
            }
            total = add(total, mul(term, series::monomial(rational(1), shift, order)));
        }
    }
    return total;
}

count_report genus_total(int g, int order)
{
    if (g < 1) {
        throw domain_error("genus must be at least 1");
    }
    const orbit_table table = translation_orbits(2 * g + 2);
    count_report report;
    report.genus = g;
    report.order = order;
    report.orbits.resize(table.orbits.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < table.orbits.size(); ++i) {
        const orbit &o = table.orbits[i];
        report.orbits[i] = {o.rep, o.size, o.parity, shape_of(o.rep), f_gk(o.rep, order).value};
    }
    report.total = series(order);
    for (const auto &entry : report.orbits) {
        report.total = add(report.total, entry.value);
    }
    return report;
}

std::vector<shape_row> shape_rows(const count_report &report)
{
    std::vector<shape_row> rows;
    for (const auto &entry : report.orbits) {
        auto it = std::find_if(rows.begin(), rows.end(), [&](const shape_row &r) { return r.form == entry.form; });
        if (it == rows.end()) {
            rows.push_back({entry.form, 1, entry.value});
        } else {
            ++it->multiplicity;
        }
    }
    std::sort(rows.begin(), rows.end(), [](const shape_row &a, const shape_row &b) {
        const int va = a.value.valuation();
        const int vb = b.value.valuation();
        if (va != vb) {
            // Zero series (valuation -1) last.
            if (va < 0 || vb < 0) {
                return vb < 0 && va >= 0;
            }
            return va < vb;
        }
        return a.form.label() < b.form.label();
    });
    return rows;
}

int min_arith_genus(const config &k)
{
    if (admissible(k.odd_support()) == coset::none) {
        throw domain_error("configuration is not admissible");
    }
    int sq = 0;
    for (int v : k.k) {
        sq += v * v;
    }
    // sum k_v^2 has the parity of |k|, which is even for admissible k.
    if (sq % 2 != 0) {
        throw domain_error("configuration total must be even");
    }
    return sq / 2 - 1;
}

int smooth_genus_bound()
{
    int best = -1;
    for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
        const subset s{static_cast<std::uint16_t>(m)};
        if (s.size() >= 4 && s.size() % 2 == 0 && s.size() > best && admissible(s) != coset::none) {
            best = s.size();
        }
    }
    return best / 2 - 1;
}

bool gottsche_reconcile(int order)
{
    const series a1 = sigma1_series(order);
    const series lhs = add(series_E(order), sub(scale(compose_monomial(a1, 2), 3), scale(compose_monomial(a1, 4), 2)));
    if (!(lhs == a1)) {
        return false;
    }
    for (int n = 1; n <= order; ++n) {
        if (!sigma1_lemma_check(n)) {
            return false;
        }
    }
    series weighted(order);
    for (int n = 1; n <= order; ++n) {
        weighted[n] = static_cast<long>(n) * n * sigma1(n);
    }
    return qderiv(qderiv(a1)) == weighted;
}

} // namespace hypcount
