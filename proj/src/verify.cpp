#include <hypcount/verify.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include <hypcount/counting.hpp>
#include <hypcount/errors.hpp>
#include <hypcount/kummer.hpp>
#include <hypcount/numtheory.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/report_io.hpp>
#include <hypcount/trig.hpp>

namespace hypcount
{

std::string first_mismatch(const std::string &label, const series &expected, const series &got, const std::string &var)
{
    const auto [a, b] = common_form(expected, got);
    for (int i = 0; i <= a.order(); ++i) {
        if (a[i] != b[i]) {
            std::string exp = std::to_string(i);
            if (a.denom() != 1) {
                exp = "(" + exp + "/" + std::to_string(a.denom()) + ")";
            }
            return label + " at " + var + "^" + exp + ": expected " + to_string(a[i]) + ", got " + to_string(b[i]);
        }
    }
    return {};
}

namespace
{

using check_fn = std::function<std::string()>;

struct check_def {
    std::string name;
    std::string anchor;
    check_fn run; // returns the failure detail, empty on success
};

// A passing check may still want to say something.
constexpr const char *note_prefix = "note: ";

std::string note(const std::string &text)
{
    return note_prefix + text;
}

std::string compare(const std::string &label, const series &expected, const series &got, const std::string &var = "q")
{
    return first_mismatch(label, expected, got, var);
}

using rng_t = std::mt19937_64;

rational random_rational(rng_t &rng)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

series random_series(rng_t &rng, int order, bool unit = false)
{
    series s(order);
    for (int i = 0; i <= order; ++i) {
        s[i] = random_rational(rng);
    }
    if (unit && sgn(s[0]) == 0) {
        s[0] = 1;
    }
    return s;
}

// ---------------------------------------------------------------- fps

std::vector<check_def> fps_checks(int order)
{
    std::vector<check_def> out;
    out.push_back({"ring axioms on random series", "commutative ring of truncated series", [order] {
                       rng_t rng(101);
                       for (int t = 0; t < 20; ++t) {
                           const series a = random_series(rng, order);
                           const series b = random_series(rng, order);
                           const series c = random_series(rng, order);
                           if (auto d = compare("a*b vs b*a", mul(a, b), mul(b, a)); !d.empty()) {
                               return d;
                           }
                           if (auto d = compare("(a*b)*c vs a*(b*c)", mul(mul(a, b), c), mul(a, mul(b, c))); !d.empty()) {
                               return d;
                           }
                           if (auto d = compare("a*(b+c) vs a*b+a*c", mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
                               !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"parallel product equals serial product", "Cauchy product", [order] {
                       rng_t rng(202);
                       for (int t = 0; t < 20; ++t) {
                           const series a = random_series(rng, order);
                           const series b = random_series(rng, order);
                           if (auto d = compare("mul vs mul_serial", mul_serial(a, b), mul(a, b)); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"a * invert(a) = 1", "series inverse", [order] {
                       rng_t rng(303);
                       for (int t = 0; t < 20; ++t) {
                           const series a = random_series(rng, order, true);
                           if (auto d = compare("a*a^-1", series::one(order), mul(a, invert(a))); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"q d/dq is a derivation", "Leibniz rule", [order] {
                       rng_t rng(404);
                       for (int t = 0; t < 10; ++t) {
                           const series a = random_series(rng, order);
                           const series b = random_series(rng, order);
                           const series lhs = qderiv(mul(a, b));
                           const series rhs = add(mul(qderiv(a), b), mul(a, qderiv(b)));
                           if (auto d = compare("D(ab)", rhs, lhs); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"q -> q^m composes", "monomial substitution", [order] {
                       rng_t rng(505);
                       const series a = random_series(rng, order);
                       return compare("a(q^6)", compose_monomial(a, 6), compose_monomial(compose_monomial(a, 2), 3));
                   }});
    out.push_back({"rescale round trip", "exponent denominators", [order] {
                       rng_t rng(606);
                       const series a = random_series(rng, order);
                       return compare("reduced(rescaled(a, 4), 1)", a, a.rescaled(4).reduced(1));
                   }});
    return out;
}

// ---------------------------------------------------------------- numtheory

// EGF of odd-block splits: sum_k s(k,l) z^k/k! = sinh(z)^l / l!.
series sinh_series(int order)
{
    series s(order);
    for (int n = 1; n <= order; n += 2) {
        s[n] = rational(1) / rational(factorial(n));
    }
    return s;
}

std::vector<check_def> numtheory_checks()
{
    std::vector<check_def> out;
    out.push_back({"sigma1 lemmas for n <= 10^4", "sigma1 at 2 mod 4 and 0 mod 4", [] {
                       for (int n = 1; n <= 10000; ++n) {
                           if (!sigma1_lemma_check(n)) {
                               return "lemma fails at n = " + std::to_string(n);
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"sieve agrees with trial division", "sum of divisors", [] {
                       for (int n = 1; n <= 10000; ++n) {
                           if (sigma1(n) != sigma1_trial(n)) {
                               return "sigma1(" + std::to_string(n) + ") disagrees";
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"sigma1 is multiplicative", "sum of divisors", [] {
                       rng_t rng(707);
                       std::uniform_int_distribution<int> d(1, 3000);
                       for (int t = 0; t < 500;) {
                           const int a = d(rng);
                           const int b = d(rng);
                           if (std::gcd(a, b) != 1) {
                               continue;
                           }
                           ++t;
                           if (sigma1(static_cast<std::int64_t>(a) * b) != sigma1(a) * sigma1(b)) {
                               return "sigma1(" + std::to_string(a) + "*" + std::to_string(b) + ") is not a product";
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"odd splits match sinh(z)^l / l!", "s(k,l) counts", [] {
                       const int top = 12;
                       const series sh = sinh_series(top);
                       series power = series::one(top);
                       for (int l = 1; l <= top; ++l) {
                           power = mul(power, sh);
                           const series egf = scale(power, rational(1) / rational(factorial(l)));
                           series counts(top);
                           for (int k = 0; k <= top; ++k) {
                               counts[k] = rational(odd_split_count(k, l)) / rational(factorial(k));
                           }
                           if (auto d = compare("s(k," + std::to_string(l) + ")/k!", egf, counts, "z"); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    return out;
}

// ---------------------------------------------------------------- qforms

json read_json(const std::filesystem::path &path)
{
    std::ifstream in(path);
    if (!in) {
        throw error("cannot open golden file " + path.string());
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        throw error("malformed golden file " + path.string() + ": " + e.what());
    }
}

std::vector<check_def> qforms_checks(int order, const std::filesystem::path &golden)
{
    std::vector<check_def> out;
    out.push_back({"MacMahon direct sums equal the recursions", "A_k, C_k differential recursions, 1 <= k <= 5",
                   [order] {
                       for (int k = 1; k <= 5; ++k) {
                           const std::string ks = std::to_string(k);
                           if (auto d = compare("A_" + ks, macmahon_A_recursive(k, order), macmahon_A_direct(k, order));
                               !d.empty()) {
                               return d;
                           }
                           if (auto d = compare("C_" + ks, macmahon_C_recursive(k, order), macmahon_C_direct(k, order));
                               !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"A_1 and C_1 are divisor sums", "A_1 = sum sigma1(n) q^n, C_1 = A_1(q) - A_1(q^2)", [order] {
                       const series a1 = sigma1_series(order);
                       if (auto d = compare("A_1", a1, macmahon_A_direct(1, order)); !d.empty()) {
                           return d;
                       }
                       return compare("C_1", sub(a1, compose_monomial(a1, 2)), macmahon_C_direct(1, order));
                   }});
    out.push_back({"(q;q)(-q;q) = (q^2;q^2)", "Pochhammer collapse", [order] {
                       const series lhs = mul(pochhammer({1, 1, 1}, order), pochhammer({-1, 1, 1}, order));
                       return compare("(q;q)(-q;q)", pochhammer({1, 2, 2}, order), lhs);
                   }});
    out.push_back({"Legendre's identity", "((q;q)(-q;q)^2)^4 = sum sigma1(2k+1) q^k", [order] {
                       return compare("Legendre product", odd_sigma_series(order), legendre_product(order));
                   }});
    out.push_back({"E = theta_2^4 / 16", "odd divisor sums as a theta power", [order] {
                       return compare("theta_2^4/16", series_E(order), scale(theta2_fourth(order), rational(1, 16)));
                   }});
    out.push_back({"E_2 + 1/24 = A_1", "Eisenstein normalization", [order] {
                       const series lhs = add(eisenstein_E2(order), series::constant(rational(1, 24), order));
                       return compare("E_2 + 1/24", sigma1_series(order), lhs);
                   }});
    out.push_back({"q/Delta prefix", "Yau-Zaslow counts for rational curves on K3", [golden] {
                       const json j = read_json(golden / "yau_zaslow.json");
                       std::vector<rational> coeffs;
                       for (const auto &c : j.at("coeffs")) {
                           coeffs.emplace_back(c.get<long>());
                       }
                       const series expected(std::move(coeffs));
                       return compare("q/Delta(q)", expected, delta_inv_times_q(expected.order()));
                   }});
    return out;
}

// ---------------------------------------------------------------- trig

std::vector<check_def> trig_checks(int order)
{
    std::vector<check_def> out;
    // Double precision, kept apart from the exact checks.
    out.push_back({"T_2n+1(sin t) = (-1)^n sin((2n+1) t)", "Chebyshev forms of the odd theta block", [] {
                       rng_t rng(808);
                       std::uniform_real_distribution<double> theta(-std::numbers::pi, std::numbers::pi);
                       for (int t = 0; t < 20; ++t) {
                           const double th = theta(rng);
                           for (int n = 0; n <= 6; ++n) {
                               const double sign = n % 2 == 0 ? 1.0 : -1.0;
                               const double lhs = evaluate(chebyshev(2 * n + 1), std::sin(th));
                               const double err = std::abs(lhs - sign * std::sin((2 * n + 1) * th));
                               if (err > 1e-10) {
                                   return "T_" + std::to_string(2 * n + 1) + " off by " + std::to_string(err);
                               }
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"T_n(1 - 2x^2) = (-1)^n T_2n(x)", "Chebyshev composition", [] {
                       const std::vector<integer> inner{1, 0, -2};
                       for (int n = 0; n <= 12; ++n) {
                           const auto lhs = poly_trim(poly_compose(chebyshev(n).coeffs, inner));
                           auto rhs = chebyshev(2 * n).coeffs;
                           if (n % 2 != 0) {
                               for (auto &c : rhs) {
                                   c = -c;
                               }
                           }
                           if (lhs != poly_trim(rhs)) {
                               return "fails at n = " + std::to_string(n);
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"Andrews-Rose H and G equal the theta blocks", "theta-block expansions in A_k and C_k", [order] {
                       const int xdeg = 13;
                       const xpoly h = theta_block_in_q(make_theta_block(theta_kind::h, 2 * order));
                       const xpoly g = theta_block_in_q(make_theta_block(theta_kind::g, 2 * order));
                       const xpoly hh = andrews_rose_H(order, xdeg);
                       const xpoly gg = andrews_rose_G(order, xdeg);
                       for (int i = 0; i <= xdeg; ++i) {
                           const std::string xi = "[x^" + std::to_string(i) + "]";
                           if (auto d = compare("h " + xi, h.coeff(i), hh.coeff(i)); !d.empty()) {
                               return d;
                           }
                           if (auto d = compare("g " + xi, g.coeff(i), gg.coeff(i)); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"sine substitution, two routes", "substitution x = 2 sin(z/2) with odd-split counts", [] {
                       rng_t rng(909);
                       std::uniform_int_distribution<int> var(0, num_points - 1);
                       std::uniform_int_distribution<int> terms(1, 4);
                       std::uniform_int_distribution<int> deg(1, 6);
                       for (int t = 0; t < 25; ++t) {
                           exp_coeffs gw0;
                           const int n = terms(rng);
                           for (int i = 0; i < n; ++i) {
                               std::vector<int> k(num_points, 0);
                               const int d = deg(rng);
                               for (int j = 0; j < d; ++j) {
                                   ++k[static_cast<std::size_t>(var(rng))];
                               }
                               gw0[k] += random_rational(rng);
                           }
                           if (sine_substitute(gw0, 6) != sine_substitute_combinatorial(gw0, 6)) {
                               return "routes disagree on random set " + std::to_string(t);
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"h = 2 sin(q/2) differential identities", "h'' + h/4 = 0 and h'h'' + h h'/4 = 0",
                   [order] { return h_ode_check(std::max(order, 2)) ? std::string() : std::string("identity fails"); }});
    return out;
}

// ---------------------------------------------------------------- kummer

std::vector<check_def> kummer_checks(int order)
{
    std::vector<check_def> out;
    out.push_back({"plane group sizes", "|Pi_4| = 2, |Pi_3| = 32, Pi_4 < Pi_3 < Pi_2", [] {
                       const plane_group p2(2), p3(3), p4(4);
                       if (p4.size() != 2 || p3.size() != 32) {
                           return "sizes " + std::to_string(p4.size()) + ", " + std::to_string(p3.size());
                       }
                       for (subset s : p4.elements()) {
                           if (!p3.contains(s)) {
                               return std::string("Pi_4 not inside Pi_3");
                           }
                       }
                       for (subset s : p3.elements()) {
                           if (!p2.contains(s)) {
                               return std::string("Pi_3 not inside Pi_2");
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"affine-functional test equals plane closure", "membership in the 3-plane group", [] {
                       const plane_group p3(3);
                       for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
                           const subset s{static_cast<std::uint16_t>(m)};
                           if (in_pi3(s) != p3.contains(s)) {
                               return "differs at mask " + std::to_string(m);
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"admissibility cosets", "P + eps_i in Pi_3", [] {
                       int even = 0, odd = 0;
                       for (std::uint32_t m = 0; m <= 0xFFFF; ++m) {
                           const coset c = admissible(subset{static_cast<std::uint16_t>(m)});
                           even += c == coset::even;
                           odd += c == coset::odd;
                       }
                       if (even != 32 || odd != 32) {
                           return "coset sizes " + std::to_string(even) + ", " + std::to_string(odd);
                       }
                       if (in_pi3(epsilon0()) || in_pi3(epsilon1())) {
                           return std::string("an epsilon lies in Pi_3");
                       }
                       return std::string();
                   }});
    out.push_back({"pairing and lattice membership", "<w_1, w_2> = -|eta_1 & eta_2| / 2", [] {
                       const auto e0 = half_lattice_vec::hat(epsilon0());
                       const auto e1 = half_lattice_vec::hat(epsilon1());
                       if (pairing(e0, e1) != rational(-3, 2)) {
                           return "pairing(eps0, eps1) = " + to_string(pairing(e0, e1));
                       }
                       for (subset s : plane_group(3).elements()) {
                           if (!kummer_member(half_lattice_vec::hat(s))) {
                               return "hat of mask " + std::to_string(s.mask) + " not in the lattice";
                           }
                       }
                       if (kummer_member(e0)) {
                           return std::string("hat(eps0) reported in the lattice");
                       }
                       return std::string();
                   }});
    out.push_back({"translation orbits partition the configurations", "counting up to translation", [] {
                       const std::map<int, std::size_t> expected_orbits{{4, 1}, {6, 5}};
                       for (int d : {4, 6, 8}) {
                           const orbit_table t = translation_orbits(d);
                           std::size_t sum = 0;
                           for (const auto &o : t.orbits) {
                               sum += static_cast<std::size_t>(o.size);
                           }
                           if (sum != t.admissible_count) {
                               return "degree " + std::to_string(d) + ": orbit sizes sum to " + std::to_string(sum);
                           }
                           if (auto it = expected_orbits.find(d); it != expected_orbits.end() && it->second != t.orbits.size()) {
                               return "degree " + std::to_string(d) + ": " + std::to_string(t.orbits.size()) + " orbits";
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"truncated lattice sums equal the theta blocks", "per-point factors of the orbifold potential", [order] {
                       const int bound = static_cast<int>(std::sqrt(order / 2.0)) + 1;
                       const lattice_oracle o = lattice_sum_oracle(subset{}, coset::even, bound, order);
                       const theta_block h = make_theta_block(theta_kind::h, order);
                       const theta_block g = make_theta_block(theta_kind::g, order);
                       for (int v = 0; v < num_points; ++v) {
                           const bool is_h = o.h_points.contains(point{static_cast<std::uint8_t>(v)});
                           const xpoly &want = is_h ? h.rep : g.rep;
                           const xpoly &got = o.factors[static_cast<std::size_t>(v)];
                           const int top = std::max(want.xdeg(), got.xdeg());
                           for (int i = 0; i <= top; ++i) {
                               const std::string label = std::string(is_h ? "h" : "g") + " [x^" + std::to_string(i) + "]";
                               if (auto d = compare(label, want.coeff(i), got.coeff(i), "u"); !d.empty()) {
                                   return d;
                               }
                           }
                       }
                       return std::string();
                   }});
    return out;
}

// ---------------------------------------------------------------- counting

series table_row(const json &coeffs, const json &columns, int order)
{
    series s(order);
    for (std::size_t i = 0; i < columns.size(); ++i) {
        s[columns[i].get<int>()] = coeffs.at(i).get<long>();
    }
    return s;
}

std::vector<check_def> counting_checks(int order, const std::filesystem::path &golden)
{
    std::vector<check_def> out;

    const json table = read_json(golden / "table1.json");
    const int table_order = table.at("columns").back().get<int>();
    const auto report = std::make_shared<count_report>(genus_total(table.at("genus").get<int>(), table_order));
    const auto rows = std::make_shared<std::vector<shape_row>>(shape_rows(*report));
    auto find_row = [rows](const std::string &label) -> const shape_row * {
        for (const auto &r : *rows) {
            if (r.form.label() == label) {
                return &r;
            }
        }
        return nullptr;
    };

    out.push_back({"published shape rows", "genus-3 coefficient table, shape rows", [table, table_order, find_row] {
                       for (const auto &row : table.at("rows")) {
                           const std::string label = row.at("label").get<std::string>();
                           const shape_row *r = find_row(label);
                           if (r == nullptr) {
                               return "row '" + label + "' does not occur";
                           }
                           const series want = table_row(row.at("coeffs"), table.at("columns"), table_order);
                           // The table starts at q^2; compare only the displayed columns.
                           series got = r->value;
                           got[0] = 0;
                           got[1] = 0;
                           if (auto d = compare("row '" + label + "'", want, got); !d.empty()) {
                               return d;
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"published shape multiplicities", "genus-3 total as a sum over shapes", [table, find_row] {
                       for (const auto &row : table.at("rows")) {
                           const std::string label = row.at("label").get<std::string>();
                           const shape_row *r = find_row(label);
                           const int want = row.at("multiplicity").get<int>();
                           const int got = r ? r->multiplicity : 0;
                           if (want != got) {
                               return "row '" + label + "': expected multiplicity " + std::to_string(want) + ", got " +
                                      std::to_string(got);
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"published total is its weighted row sum", "genus-3 total row", [table, table_order, find_row] {
                       series sum(table_order);
                       for (const auto &row : table.at("rows")) {
                           const shape_row *r = find_row(row.at("label").get<std::string>());
                           if (r) {
                               sum = add(sum, scale(r->value, rational(row.at("multiplicity").get<int>())));
                           }
                       }
                       const json &total = table.at("total");
                       const series want = table_row(total.at("coeffs"), table.at("columns"), table_order);
                       sum[0] = 0;
                       sum[1] = 0;
                       return compare("row '" + total.at("label").get<std::string>() + "'", want, sum);
                   }});
    out.push_back({"enumerated total against the published total", "genus-3 total row",
                   [table, table_order, rows, report] {
                       std::set<std::string> listed;
                       for (const auto &row : table.at("rows")) {
                           listed.insert(row.at("label").get<std::string>());
                       }
                       series extra(table_order);
                       std::string names;
                       for (const auto &r : *rows) {
                           if (!listed.count(r.form.label())) {
                               extra = add(extra, scale(r.value, rational(r.multiplicity)));
                               names += (names.empty() ? "" : ", ") + std::to_string(r.multiplicity) + " x " + r.form.label();
                           }
                       }
                       const json &total = table.at("total");
                       const series want = table_row(total.at("coeffs"), table.at("columns"), table_order);
                       series got = sub(report->total, extra);
                       got[0] = 0;
                       got[1] = 0;
                       if (auto d = compare("row '" + total.at("label").get<std::string>() + "' less unlisted shapes", want, got);
                           !d.empty()) {
                           return d;
                       }
                       if (names.empty()) {
                           return std::string();
                       }
                       return note("the enumeration also yields " + names +
                                   ", absent from the published table; the published total equals the enumerated total "
                                   "minus these");
                   }});
    out.push_back({"genus 1: one orbit of size 4, total 1", "the single genus-1 class", [order] {
                       const count_report r = genus_total(1, order);
                       if (r.orbits.size() != 1 || r.orbits[0].orbit_size != 4) {
                           return std::string("unexpected orbit structure");
                       }
                       return compare("F_1", series::one(order), r.total, "u");
                   }});
    out.push_back({"genus 2: five orbits, total sum sigma1(n) u^n", "E + 3 A_1(u^2) - 2 A_1(u^4) = A_1", [order] {
                       const count_report r = genus_total(2, order);
                       std::map<std::string, int> mult;
                       for (const auto &e : r.orbits) {
                           ++mult[e.form.label()];
                       }
                       const std::map<std::string, int> want{{"E(u)", 1}, {"A_1(u^4)", 1}, {"C_1(u^2)", 3}};
                       if (mult != want) {
                           return std::string("unexpected genus-2 shapes");
                       }
                       return compare("F_2", sigma1_series(order), r.total, "u");
                   }});
    out.push_back({"D^2 A_1 and the genus-2 reconciliation", "sum n^2 sigma1(n) u^n = D^2 A_1",
                   [order] { return gottsche_reconcile(2 * order) ? std::string() : std::string("identity fails"); }});
    out.push_back({"two routes to F_{g,k}", "closed form against the assembled potential, |k| <= 8", [] {
                       const int ord = 12;
                       for (int d : {4, 6, 8}) {
                           for (const config &k : admissible_configs(d)) {
                               const std::string label = "F_k, k = " + json(k.k).dump();
                               if (auto diff = compare(label, f_gk(k, ord).value, f_gk_via_potential(k, ord), "u");
                                   !diff.empty()) {
                                   return diff;
                               }
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"minimal arithmetic genus", "1 + ord_u F_{g,k} = -1 + sum k(v)^2 / 2, |k| <= 10", [] {
                       const int ord = 26;
                       for (int d : {4, 6, 8, 10}) {
                           for (const config &k : admissible_configs(d)) {
                               const int v = f_gk(k, ord).value.valuation();
                               if (v < 0 || 1 + v != min_arith_genus(k)) {
                                   return "fails for k = " + json(k.k).dump();
                               }
                           }
                       }
                       return std::string();
                   }});
    out.push_back({"smooth genus bound", "no smooth hyperelliptic curves of genus above 5", [] {
                       const int b = smooth_genus_bound();
                       return b == 5 ? std::string() : "bound is " + std::to_string(b);
                   }});
    return out;
}

std::vector<check_def> suite_checks(const std::string &suite, int order, const std::filesystem::path &golden)
{
    if (suite == "fps") {
        return fps_checks(order);
    }
    if (suite == "numtheory") {
        return numtheory_checks();
    }
    if (suite == "qforms") {
        return qforms_checks(order, golden);
    }
    if (suite == "trig") {
        return trig_checks(order);
    }
    if (suite == "kummer") {
        return kummer_checks(order);
    }
    if (suite == "counting") {
        return counting_checks(order, golden);
    }
    throw domain_error("unknown verify suite '" + suite + "'");
}

} // namespace

const std::vector<std::string> &verify_suites()
{
    static const std::vector<std::string> names{"fps", "numtheory", "qforms", "trig", "kummer", "counting"};
    return names;
}

std::vector<check_result> run_verify(const std::string &suite, int order, const std::filesystem::path &golden_dir)
{
    if (order < 1) {
        throw domain_error("verify order must be positive");
    }
    const std::vector<std::string> suites = suite == "all" ? verify_suites() : std::vector<std::string>{suite};
    std::vector<std::vector<check_def>> defs;
    for (const auto &s : suites) {
        defs.push_back(suite_checks(s, order, golden_dir));
    }
    std::vector<std::pair<std::string, const check_def *>> flat;
    for (std::size_t i = 0; i < suites.size(); ++i) {
        for (const auto &d : defs[i]) {
            flat.emplace_back(suites[i], &d);
        }
    }
    std::vector<check_result> results(flat.size());
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < flat.size(); ++i) {
        const auto &[name, def] = flat[i];
        check_result r{name, def->name, def->anchor, false, {}};
        try {
            r.detail = def->run();
            r.ok = r.detail.empty() || r.detail.rfind(note_prefix, 0) == 0;
        } catch (const std::exception &e) {
            r.detail = std::string("exception: ") + e.what();
        }
        results[i] = std::move(r);
    }
    return results;
}

} // namespace hypcount
