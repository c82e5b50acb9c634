#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include <hypcount/counting.hpp>
#include <hypcount/errors.hpp>
#include <hypcount/kummer.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/report_io.hpp>
#include <hypcount/verify.hpp>

#ifndef HYPCOUNT_GOLDEN_DIR
#define HYPCOUNT_GOLDEN_DIR "tests/golden"
#endif

namespace hypcount::cli
{

namespace fs = std::filesystem;

namespace
{

constexpr int default_order = 32;
constexpr int max_genus = 6;

// Thrown for bad flag values that CLI11 cannot catch on its own.
struct usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct output_opts {
    std::string format = "text";
    std::string out;
};

void add_output_flags(CLI::App *cmd, output_opts &o)
{
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", o.out, "Write to this file instead of stdout");
}

CLI::Option *add_order_flag(CLI::App *cmd, int &order)
{
    return cmd->add_option("--order", order, "Truncation order")
        ->envname("HYPCOUNT_ORDER")
        ->check(CLI::NonNegativeNumber);
}

void emit(const output_opts &o, const std::string &text, std::ostream &out)
{
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f || !(f << text) || !f.flush()) {
        throw error("cannot write " + o.out);
    }
}

std::string exponent_text(int i, int denom)
{
    return denom == 1 ? std::to_string(i) : std::to_string(i) + "/" + std::to_string(denom);
}

std::string series_csv(const series &s)
{
    std::string text = "exponent,coefficient\n";
    for (int i = 0; i <= s.order(); ++i) {
        text += exponent_text(i, s.denom()) + "," + to_string(s[i]) + "\n";
    }
    return text;
}

// ------------------------------------------------------------------ series

struct series_args {
    std::string name;
    int k = 1;
    int order = default_order;
    output_opts o;
};

int cmd_series(const series_args &a, std::ostream &out)
{
    const named_form f = make_named_form(a.name, a.k, a.order);
    if (a.o.format == "json") {
        emit(a.o, dump(to_json(f)), out);
    } else if (a.o.format == "csv") {
        emit(a.o, series_csv(f.value), out);
    } else {
        emit(a.o, to_text(f.value, "q") + "\n", out);
    }
    return ok;
}

// ------------------------------------------------------------------ fgk

struct fgk_args {
    std::vector<int> k;
    int order = default_order;
    output_opts o;
};

int cmd_fgk(const fgk_args &a, std::ostream &out)
{
    config k;
    std::copy(a.k.begin(), a.k.end(), k.k.begin());
    const count_series c = f_gk(k, a.order);
    const bool live = c.parity != coset::none;

    // N_{k,h} is the coefficient of u^n with n = h - 1.
    struct count {
        int h, n;
        std::string value;
    };
    std::vector<count> counts;
    for (int n = 0; n <= c.value.order(); ++n) {
        if (sgn(c.value[n]) != 0) {
            counts.push_back({n + 1, n, to_string(c.value[n])});
        }
    }

    if (a.o.format == "json") {
        json j;
        j["k"] = a.k;
        j["coset"] = to_string(c.parity);
        j["shape"] = live ? json(shape_of(k).label()) : json(nullptr);
        j["min_arith_genus"] = live ? json(min_arith_genus(k)) : json(nullptr);
        j["order"] = a.order;
        j["series"] = to_json(c.value).at("coeffs");
        json rows = json::array();
        for (const auto &e : counts) {
            rows.push_back({{"h", e.h}, {"n", e.n}, {"N", e.value}});
        }
        j["counts"] = std::move(rows);
        emit(a.o, dump(j), out);
    } else if (a.o.format == "csv") {
        std::string text = "h,n,N\n";
        for (const auto &e : counts) {
            text += std::to_string(e.h) + "," + std::to_string(e.n) + "," + e.value + "\n";
        }
        emit(a.o, text, out);
    } else {
        std::ostringstream os;
        os << "coset: " << to_string(c.parity) << "\n";
        if (live) {
            os << "shape: " << shape_of(k).label() << "\n";
            os << "minimal arithmetic genus: " << min_arith_genus(k) << "\n";
        }
        os << "F(u) = " << to_text(c.value, "u") << "\n";
        if (!counts.empty()) {
            os << "arithmetic genus h, exponent n = h - 1, count N_{k,h}:\n";
            for (const auto &e : counts) {
                os << "  h=" << e.h << " n=" << e.n << " N=" << e.value << "\n";
            }
        }
        emit(a.o, os.str(), out);
    }
    return ok;
}

// ------------------------------------------------------------------ genus

struct genus_args {
    int g = 0;
    int order = default_order;
    bool table = false;
    output_opts o;
};

void check_genus(int g)
{
    if (g < 1 || g > max_genus) {
        throw usage("--g must lie in 1.." + std::to_string(max_genus));
    }
}

int cmd_genus(const genus_args &a, std::ostream &out)
{
    check_genus(a.g);
    const count_report r = genus_total(a.g, a.order);
    const int v = r.total.valuation();
    const int first = std::min({2, a.order, v < 0 ? 2 : v});

    if (a.o.format == "json" && !a.table) {
        emit(a.o, dump(to_json(r)), out);
    } else if (a.o.format == "csv") {
        emit(a.o, table_csv(r, first, a.order), out);
    } else if (a.table) {
        emit(a.o, table_text(r, first, a.order), out);
    } else {
        std::ostringstream os;
        os << "genus " << a.g << ", order " << a.order << ", " << r.orbits.size() << " orbits\n";
        for (const auto &e : r.orbits) {
            os << "  " << json(e.rep.k).dump() << " size " << e.orbit_size << " " << to_string(e.parity) << " "
               << e.form.label() << "\n";
        }
        os << "total: " << to_text(r.total, "u") << "\n";
        emit(a.o, os.str(), out);
    }
    return ok;
}

// ------------------------------------------------------------------ orbits

struct orbits_args {
    int g = 0;
    output_opts o;
};

int cmd_orbits(const orbits_args &a, std::ostream &out)
{
    check_genus(a.g);
    const orbit_table t = translation_orbits(2 * a.g + 2);
    if (a.o.format == "json") {
        emit(a.o, dump(to_json(t)), out);
        return ok;
    }
    const bool csv = a.o.format == "csv";
    std::ostringstream os;
    if (csv) {
        os << "rep,orbit_size,coset,shape\n";
    } else {
        os << "degree " << t.degree << ": " << t.orbits.size() << " orbits of " << t.admissible_count
           << " admissible configurations\n";
    }
    for (const auto &o : t.orbits) {
        std::string rep;
        for (int v : o.rep.k) {
            rep += (rep.empty() ? "" : " ") + std::to_string(v);
        }
        if (csv) {
            os << rep << "," << o.size << "," << to_string(o.parity) << "," << shape_of(o.rep).label() << "\n";
        } else {
            os << "  [" << rep << "] size " << o.size << " " << to_string(o.parity) << " " << shape_of(o.rep).label()
               << "\n";
        }
    }
    emit(a.o, os.str(), out);
    return ok;
}

// ------------------------------------------------------------------ verify

struct verify_args {
    std::string suite = "all";
    int order = default_order;
    std::string dir = HYPCOUNT_GOLDEN_DIR;
};

int cmd_verify(const verify_args &a, std::ostream &out)
{
    const auto results = run_verify(a.suite, a.order, a.dir);
    int failed = 0;
    for (const auto &r : results) {
        out << (r.ok ? "PASS " : "FAIL ") << "[" << r.suite << "] " << r.name << " (" << r.anchor << ")\n";
        if (!r.detail.empty()) {
            out << "     " << r.detail << "\n";
        }
        failed += !r.ok;
    }
    out << results.size() << " checks, " << failed << " failed\n";
    return failed == 0 ? ok : verification_failed;
}

// ------------------------------------------------------------------ cache

struct cache_args {
    std::string action;
    std::string dir;
    int order = default_order;
};

struct cache_entry {
    std::string name;
    int k;
};

std::vector<cache_entry> cache_entries()
{
    std::vector<cache_entry> out;
    for (const char *name : {"A", "C"}) {
        for (int k = 0; k <= 5; ++k) {
            out.push_back({name, k});
        }
    }
    for (const char *name : {"E", "delta_inv", "legendre", "theta2_4", "E2"}) {
        out.push_back({name, 0});
    }
    return out;
}

std::string read_file(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in) {
        throw error("cannot read " + p.string());
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_cache(const cache_args &a, std::ostream &out)
{
    if (a.dir.empty()) {
        throw usage("cache needs --dir or HYPCOUNT_CACHE_DIR");
    }
    const fs::path dir(a.dir);
    std::error_code ec;

    if (a.action == "clear") {
        if (!fs::exists(dir, ec)) {
            out << "nothing to clear\n";
            return ok;
        }
        static const std::regex pattern(R"((A|C|E|delta_inv|legendre|theta2_4|E2)(_k\d+)?_o\d+\.json)");
        int removed = 0;
        for (const auto &entry : fs::directory_iterator(dir)) {
            if (entry.is_regular_file() && std::regex_match(entry.path().filename().string(), pattern)) {
                if (!fs::remove(entry.path(), ec) || ec) {
                    throw error("cannot remove " + entry.path().string());
                }
                ++removed;
            }
        }
        out << "removed " << removed << " files\n";
        return ok;
    }

    if (a.action == "write") {
        fs::create_directories(dir, ec);
        if (ec) {
            throw error("cannot create " + dir.string() + ": " + ec.message());
        }
        int written = 0;
        for (const auto &e : cache_entries()) {
            const named_form f = make_named_form(e.name, e.k, a.order);
            emit({"json", (dir / cache_file_name(f.name, f.params, a.order)).string()}, dump(to_json(f)), out);
            ++written;
        }
        out << "wrote " << written << " files to " << dir.string() << "\n";
        return ok;
    }

    // check
    if (!fs::is_directory(dir, ec)) {
        throw error("cache directory " + dir.string() + " does not exist");
    }
    int bad = 0;
    for (const auto &e : cache_entries()) {
        const named_form f = make_named_form(e.name, e.k, a.order);
        const std::string file = cache_file_name(f.name, f.params, a.order);
        const fs::path path = dir / file;
        if (!fs::exists(path, ec)) {
            out << "MISSING " << file << "\n";
            ++bad;
            continue;
        }
        const std::string expected = dump(to_json(f));
        const std::string stored = read_file(path);
        if (stored == expected) {
            continue;
        }
        ++bad;
        std::string why = "bytes differ";
        try {
            const std::string d = first_mismatch(f.name, f.value, named_form_from_json(json::parse(stored)).value);
            if (!d.empty()) {
                why = d;
            }
        } catch (const std::exception &) {
            why = "not a valid series file";
        }
        out << "MISMATCH " << file << ": " << why << "\n";
    }
    out << cache_entries().size() << " files checked, " << bad << " bad\n";
    return bad == 0 ? ok : verification_failed;
}

} // namespace

std::string cache_file_name(const std::string &name, const std::vector<int> &params, int order)
{
    std::string out = name;
    for (int p : params) {
        out += "_k" + std::to_string(p);
    }
    return out + "_o" + std::to_string(order) + ".json";
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Counting series for hyperelliptic curves on abelian surfaces", "hypcount"};
    app.require_subcommand(1);

    series_args sa;
    auto *series_cmd = app.add_subcommand("series", "Print a named q-series");
    series_cmd->add_option("--name", sa.name, "Form name")->required()->check(CLI::IsMember(named_form_names()));
    series_cmd->add_option("--k", sa.k, "Index for A and C")->check(CLI::NonNegativeNumber);
    add_order_flag(series_cmd, sa.order);
    add_output_flags(series_cmd, sa.o);

    fgk_args fa;
    auto *fgk_cmd = app.add_subcommand("fgk", "Counting series of one configuration");
    fgk_cmd->add_option("--k", fa.k, "Sixteen multiplicities, comma separated")
        ->required()
        ->delimiter(',')
        ->expected(num_points)
        ->check(CLI::NonNegativeNumber);
    add_order_flag(fgk_cmd, fa.order);
    add_output_flags(fgk_cmd, fa.o);

    genus_args ga;
    auto *genus_cmd = app.add_subcommand("genus", "Counting series summed over translation orbits");
    genus_cmd->add_option("--g", ga.g, "Geometric genus")->required();
    add_order_flag(genus_cmd, ga.order);
    genus_cmd->add_flag("--table", ga.table, "Tabulate by shape");
    add_output_flags(genus_cmd, ga.o);

    orbits_args oa;
    auto *orbits_cmd = app.add_subcommand("orbits", "Translation orbits of admissible configurations");
    orbits_cmd->add_option("--g", oa.g, "Geometric genus")->required();
    add_output_flags(orbits_cmd, oa.o);

    verify_args va;
    auto *verify_cmd = app.add_subcommand("verify", "Run identity and golden-file checks");
    std::vector<std::string> suites = verify_suites();
    suites.push_back("all");
    verify_cmd->add_option("--suite", va.suite, "Suite to run")->check(CLI::IsMember(suites));
    add_order_flag(verify_cmd, va.order);
    verify_cmd->add_option("--dir", va.dir, "Golden file directory");

    cache_args ca;
    auto *cache_cmd = app.add_subcommand("cache", "Write, check or clear cached series files");
    cache_cmd->add_option("action", ca.action, "write, check or clear")
        ->required()
        ->check(CLI::IsMember({"write", "check", "clear"}));
    cache_cmd->add_option("--dir", ca.dir, "Cache directory")->envname("HYPCOUNT_CACHE_DIR");
    add_order_flag(cache_cmd, ca.order);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*series_cmd) {
            return cmd_series(sa, out);
        }
        if (*fgk_cmd) {
            return cmd_fgk(fa, out);
        }
        if (*genus_cmd) {
            return cmd_genus(ga, out);
        }
        if (*orbits_cmd) {
            return cmd_orbits(oa, out);
        }
        if (*verify_cmd) {
            return cmd_verify(va, out);
        }
        return cmd_cache(ca, out);
    } catch (const usage &e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const hypcount::error &e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace hypcount::cli
