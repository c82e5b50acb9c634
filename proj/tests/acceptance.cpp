// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

#include <hypcount/counting.hpp>
#include <hypcount/kummer.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/trig.hpp>
#include <hypcount/verify.hpp>

#include "cli.hpp"

using namespace hypcount;
using json = nlohmann::ordered_json;

namespace
{

// All comparisons are exact; these are the only tolerances.
constexpr double table_time_limit_s = 5.0;
constexpr double macmahon_time_limit_s = 10.0;

struct outcome {
    bool ok = true;
    std::string detail;
};

outcome pass()
{
    return {};
}

outcome fail(std::string d)
{
    return {false, std::move(d)};
}

outcome from_mismatch(const std::string &d)
{
    return d.empty() ? pass() : fail(d);
}

json golden(const std::string &file)
{
    std::ifstream in(std::string(HYPCOUNT_TEST_GOLDEN_DIR) + "/" + file);
    if (!in) {
        throw std::runtime_error("cannot open golden file " + file);
    }
    return json::parse(in);
}

// Splits the text table into label -> cells, using the header to find the
// right edge of each column. Empty cells read as 0.
std::map<std::string, std::vector<long>> parse_table(const std::string &text, std::vector<int> &columns)
{
    std::istringstream in(text);
    std::string header;
    std::getline(in, header);
    const std::size_t bar = header.find('|');
    std::vector<std::size_t> ends;
    for (std::size_t i = bar + 1; i < header.size(); ++i) {
        if (header[i] == 'q') {
            std::size_t j = i + 2;
            while (j < header.size() && header[j] != ' ') {
                ++j;
            }
            columns.push_back(std::stoi(header.substr(i + 2, j - i - 2)));
            ends.push_back(j);
            i = j;
        }
    }
    std::map<std::string, std::vector<long>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const std::size_t b = line.find('|');
        if (b == std::string::npos) {
            continue;
        }
        std::string label = line.substr(0, b);
        label.erase(label.find_last_not_of(' ') + 1);
        std::vector<long> cells;
        std::size_t start = b + 1;
        for (std::size_t e : ends) {
            const std::string cell = e <= line.size() ? line.substr(start, e - start)
                                                      : (start < line.size() ? line.substr(start) : "");
            const auto p = cell.find_first_not_of(' ');
            cells.push_back(p == std::string::npos ? 0 : std::stol(cell.substr(p)));
            start = e;
        }
        rows[label] = cells;
    }
    return rows;
}

outcome table_reproduction()
{
    std::ostringstream out, err;
    const int code = cli::run({"genus", "--g", "3", "--order", "12", "--table"}, out, err);
    if (code != 0) {
        return fail("genus command exited " + std::to_string(code) + ": " + err.str());
    }
    std::vector<int> columns;
    const auto rows = parse_table(out.str(), columns);
    const json table = golden("table1.json");
    const auto want_cols = table.at("columns").get<std::vector<int>>();
    if (columns != want_cols) {
        return fail("table columns differ from q^2..q^12");
    }
    std::vector<json> wanted(table.at("rows").begin(), table.at("rows").end());
    wanted.push_back(table.at("total"));
    std::string detail;
    for (const auto &row : wanted) {
        const std::string label = row.at("label").get<std::string>();
        const auto want = row.at("coeffs").get<std::vector<long>>();
        auto it = rows.find(label);
        if (it == rows.end()) {
            return fail("row '" + label + "' missing");
        }
        for (std::size_t i = 0; i < want.size(); ++i) {
            if (it->second[i] != want[i]) {
                detail += (detail.empty() ? "" : "; ") + ("row '" + label + "' at q^" + std::to_string(columns[i]) +
                                                          ": expected " + std::to_string(want[i]) + ", got " +
                                                          std::to_string(it->second[i]));
            }
        }
    }
    std::vector<std::string> extra;
    for (const auto &[label, cells] : rows) {
        bool listed = label == table.at("total").at("label").get<std::string>();
        for (const auto &row : table.at("rows")) {
            listed = listed || row.at("label") == label;
        }
        if (!listed) {
            extra.push_back(label);
        }
    }
    if (!detail.empty()) {
        for (const auto &e : extra) {
            detail += "; unlisted shape row '" + e + "' present";
        }
        return fail(detail);
    }
    return pass();
}

outcome yau_zaslow()
{
    const json g = golden("yau_zaslow.json");
    const auto c = g.at("coeffs").get<std::vector<long>>();
    series want(static_cast<int>(c.size()) - 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
        want[static_cast<int>(i)] = c[i];
    }
    return from_mismatch(first_mismatch("q/Delta", want, delta_inv_times_q(want.order())));
}

outcome macmahon_routes()
{
    for (int k = 1; k <= 5; ++k) {
        const std::string ks = std::to_string(k);
        if (auto d = first_mismatch("A_" + ks, macmahon_A_recursive(k, 64), macmahon_A_direct(k, 64)); !d.empty()) {
            return fail(d);
        }
        if (auto d = first_mismatch("C_" + ks, macmahon_C_recursive(k, 64), macmahon_C_direct(k, 64)); !d.empty()) {
            return fail(d);
        }
    }
    return pass();
}

outcome andrews_rose()
{
    const int order = 32;
    const int xdeg = 13;
    const xpoly h = theta_block_in_q(make_theta_block(theta_kind::h, 2 * order));
    const xpoly g = theta_block_in_q(make_theta_block(theta_kind::g, 2 * order));
    const xpoly hh = andrews_rose_H(order, xdeg);
    const xpoly gg = andrews_rose_G(order, xdeg);
    for (int i = 0; i <= xdeg; ++i) {
        const std::string xi = "x^" + std::to_string(i);
        if (auto d = first_mismatch("H, " + xi, h.coeff(i), hh.coeff(i)); !d.empty()) {
            return fail(d);
        }
        if (auto d = first_mismatch("G, " + xi, g.coeff(i), gg.coeff(i)); !d.empty()) {
            return fail(d);
        }
    }
    return pass();
}

outcome product_identities()
{
    const int order = 64;
    const series lhs = mul(pochhammer({1, 1, 1}, order), pochhammer({-1, 1, 1}, order));
    if (auto d = first_mismatch("(q;q)(-q;q)", pochhammer({1, 2, 2}, order), lhs); !d.empty()) {
        return fail(d);
    }
    if (auto d = first_mismatch("Legendre product", odd_sigma_series(order), legendre_product(order)); !d.empty()) {
        return fail(d);
    }
    return from_mismatch(first_mismatch("theta_2^4/16", series_E(order), scale(theta2_fourth(order), rational(1, 16))));
}

outcome genus_two()
{
    const count_report r = genus_total(2, 64);
    std::map<std::string, int> shapes;
    for (const auto &o : r.orbits) {
        ++shapes[o.form.label()];
    }
    const std::map<std::string, int> want{{"E(u)", 1}, {"A_1(u^4)", 1}, {"C_1(u^2)", 3}};
    if (r.orbits.size() != 5 || shapes != want) {
        return fail("expected 5 orbits E(u), A_1(u^4), 3 x C_1(u^2); got " + std::to_string(r.orbits.size()));
    }
    if (auto d = first_mismatch("F_2", sigma1_series(64), r.total, "u"); !d.empty()) {
        return fail(d);
    }
    series weighted(128);
    for (int n = 1; n <= 128; ++n) {
        weighted[n] = static_cast<long>(n) * n * sigma1(n);
    }
    if (auto d = first_mismatch("D^2 A_1", weighted, qderiv(qderiv(macmahon_A_direct(1, 128)))); !d.empty()) {
        return fail(d);
    }
    return gottsche_reconcile(128) ? pass() : fail("operator identity fails to order 128");
}

outcome genus_one()
{
    const count_report r = genus_total(1, 32);
    if (r.orbits.size() != 1 || r.orbits[0].orbit_size != 4) {
        return fail("expected one orbit of size 4, got " + std::to_string(r.orbits.size()) + " orbits");
    }
    return from_mismatch(first_mismatch("F_1", series::one(32), r.total, "u"));
}

outcome two_routes()
{
    std::size_t even = 0, odd = 0;
    for (int d : {4, 6, 8}) {
        for (const config &k : admissible_configs(d)) {
            const count_series f = f_gk(k, 12);
            (f.parity == coset::even ? even : odd) += 1;
            if (auto m = first_mismatch("F_k", f.value, f_gk_via_potential(k, 12), "u"); !m.empty()) {
                return fail(m + " for k = " + json(k.k).dump());
            }
        }
    }
    if (even == 0 || odd == 0) {
        return fail("one coset was never exercised");
    }
    return {true, std::to_string(even) + " even, " + std::to_string(odd) + " odd configurations"};
}

outcome lattice_facts()
{
    const plane_group p3(3);
    if (p3.size() != 32) {
        return fail("|Pi_3| = " + std::to_string(p3.size()));
    }
    int largest = 0;
    for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
        const subset s{static_cast<std::uint16_t>(m)};
        if (in_pi3(s) != p3.contains(s)) {
            return fail("affine test and closure disagree on mask " + std::to_string(m));
        }
        if (admissible(s) != coset::none) {
            largest = std::max(largest, s.size());
        }
    }
    if (largest != 12) {
        return fail("largest admissible support " + std::to_string(largest));
    }
    return smooth_genus_bound() == 5 ? pass() : fail("smooth genus bound " + std::to_string(smooth_genus_bound()));
}

outcome min_genus_law()
{
    for (int d : {4, 6, 8, 10}) {
        for (const config &k : admissible_configs(d)) {
            const int v = f_gk(k, 26).value.valuation();
            if (v < 0 || 1 + v != min_arith_genus(k)) {
                return fail("fails for k = " + json(k.k).dump());
            }
        }
    }
    return pass();
}

outcome sine_substitution()
{
    std::mt19937_64 rng(20260101);
    std::uniform_int_distribution<int> var(0, 15);
    std::uniform_int_distribution<int> deg(1, 6);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    for (int t = 0; t < 25; ++t) {
        exp_coeffs gw0;
        for (int i = 0; i < 4; ++i) {
            std::vector<int> k(16, 0);
            const int d = deg(rng);
            for (int j = 0; j < d; ++j) {
                ++k[static_cast<std::size_t>(var(rng))];
            }
            rational r(num(rng), den(rng));
            r.canonicalize();
            gw0[k] += r;
        }
        if (sine_substitute(gw0, 6) != sine_substitute_combinatorial(gw0, 6)) {
            return fail("trial " + std::to_string(t) + " differs");
        }
    }
    return pass();
}

outcome h_ode()
{
    return h_ode_check(16) ? pass() : fail("h'' + h/4 or h'h'' + h h'/4 nonzero");
}

outcome sigma_lemmas()
{
    for (int n = 1; n <= 10000; ++n) {
        if (!sigma1_lemma_check(n)) {
            return fail("fails at n = " + std::to_string(n));
        }
    }
    return pass();
}

struct criterion {
    std::string name;
    std::function<outcome()> run;
    double time_limit_s = 0; // 0: none
};

} // namespace

int main()
{
    const std::vector<criterion> criteria{
        {"genus-3 table: shape rows and total, q^2..q^12", table_reproduction, table_time_limit_s},
        {"q/Delta prefix 1 + 24q + 324q^2 + 3200q^3", yau_zaslow},
        {"A_k, C_k direct sums equal recursions, k <= 5, order 64", macmahon_routes, macmahon_time_limit_s},
        {"Andrews-Rose H, G equal the theta blocks, order 32, x-degree 13", andrews_rose},
        {"product identities and E = theta_2^4/16, order 64", product_identities},
        {"genus 2: five orbits, total sum sigma1(n) u^n; D^2 A_1 to order 128", genus_two},
        {"genus 1: one orbit of size 4, total 1", genus_one},
        {"two routes to F_k agree for |k| <= 8, order 12", two_routes},
        {"|Pi_3| = 32, affine test on 2^16 subsets, max support 12, bound 5", lattice_facts},
        {"1 + ord_u F_k = -1 + sum k_v^2 / 2 for |k| <= 10", min_genus_law},
        {"sine substitution against the odd-split sum, 25 trials", sine_substitution},
        {"h = 2 sin(q/2) ODEs to order 16", h_ode},
        {"sigma1 lemmas for n <= 10^4", sigma_lemmas},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto &c = criteria[i];
        const auto t0 = std::chrono::steady_clock::now();
        outcome o;
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (o.ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
            o = fail("took " + std::to_string(secs) + " s, limit " + std::to_string(c.time_limit_s) + " s");
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s criterion %zu: %s (%.3f s)%s%s\n", o.ok ? "PASS" : "FAIL", i + 1, c.name.c_str(), secs,
                    o.detail.empty() ? "" : " -- ", o.detail.c_str());
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
