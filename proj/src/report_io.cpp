#include <hypcount/report_io.hpp>

#include <algorithm>
#include <sstream>

#include <hypcount/errors.hpp>

namespace hypcount
{

json to_json(const series &s)
{
    json coeffs = json::array();
    for (const auto &c : s.coeffs()) {
        coeffs.push_back(to_string(c));
    }
    json j;
    j["denom"] = s.denom();
    j["order"] = s.order();
    j["coeffs"] = std::move(coeffs);
    return j;
}

series series_from_json(const json &j)
{
    try {
        const int denom = j.at("denom").get<int>();
        const int order = j.at("order").get<int>();
        const auto &coeffs = j.at("coeffs");
        if (!coeffs.is_array() || static_cast<int>(coeffs.size()) != order + 1) {
            throw error("series JSON: coeffs must have order + 1 entries");
        }
        std::vector<rational> values;
        values.reserve(coeffs.size());
        for (const auto &c : coeffs) {
            values.push_back(parse_rational(c.get<std::string>()));
        }
        return series(std::move(values), denom);
    } catch (const json::exception &e) {
        throw error(std::string("series JSON: ") + e.what());
    }
}

json to_json(const named_form &f)
{
    json j;
    j["name"] = f.name;
    j["params"] = f.params;
    const json body = to_json(f.value);
    for (const auto &[key, value] : body.items()) {
        j[key] = value;
    }
    return j;
}

named_form named_form_from_json(const json &j)
{
    try {
        return {j.at("name").get<std::string>(), j.at("params").get<std::vector<int>>(), series_from_json(j)};
    } catch (const json::exception &e) {
        throw error(std::string("named form JSON: ") + e.what());
    }
}

namespace
{

json rep_json(const config &k)
{
    return json(std::vector<int>(k.k.begin(), k.k.end()));
}

json coeff_list(const series &s)
{
    json out = json::array();
    for (const auto &c : s.coeffs()) {
        out.push_back(to_string(c));
    }
    return out;
}

} // namespace

json to_json(const orbit_table &t)
{
    json out = json::array();
    for (const auto &o : t.orbits) {
        json e;
        e["rep"] = rep_json(o.rep);
        e["orbit_size"] = o.size;
        e["coset"] = to_string(o.parity);
        e["shape"] = shape_of(o.rep).label();
        out.push_back(std::move(e));
    }
    return out;
}

json to_json(const count_report &r)
{
    json orbits = json::array();
    for (const auto &o : r.orbits) {
        json e;
        e["rep"] = rep_json(o.rep);
        e["orbit_size"] = o.orbit_size;
        e["coset"] = to_string(o.parity);
        e["shape"] = o.form.label();
        e["series"] = coeff_list(o.value);
        orbits.push_back(std::move(e));
    }
    json j;
    j["genus"] = r.genus;
    j["order"] = r.order;
    j["orbits"] = std::move(orbits);
    j["total"] = coeff_list(r.total);
    return j;
}

namespace
{

struct table_cells {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

table_cells build_table(const count_report &r, int first, int last)
{
    if (first < 0 || last > r.order || first > last) {
        throw domain_error("table columns must lie within the report order");
    }
    table_cells t;
    t.header.push_back("");
    for (int n = first; n <= last; ++n) {
        t.header.push_back("q^" + std::to_string(n));
    }
    auto row = [&](const std::string &label, const series &s) {
        std::vector<std::string> cells{label};
        for (int n = first; n <= last; ++n) {
            cells.push_back(sgn(s[n]) == 0 ? "" : to_string(s[n]));
        }
        t.rows.push_back(std::move(cells));
    };
    for (const auto &sr : shape_rows(r)) {
        row(sr.form.label(), sr.value);
    }
    row("F_" + std::to_string(r.genus) + "(u)", r.total);
    return t;
}

} // namespace

std::string table_csv(const count_report &r, int first, int last)
{
    const table_cells t = build_table(r, first, last);
    std::ostringstream os;
    auto line = [&os](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            os << (i ? "," : "") << cells[i];
        }
        os << '\n';
    };
    line(t.header);
    for (const auto &r2 : t.rows) {
        line(r2);
    }
    return os.str();
}

std::string table_text(const count_report &r, int first, int last)
{
    const table_cells t = build_table(r, first, last);
    std::vector<std::size_t> width(t.header.size(), 0);
    auto measure = [&width](const std::vector<std::string> &cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            width[i] = std::max(width[i], cells[i].size());
        }
    };
    measure(t.header);
    for (const auto &r2 : t.rows) {
        measure(r2);
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string> &cells) {
        std::string out;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const std::string &c = cells[i];
            if (i == 0) {
                out += c + std::string(width[i] - c.size(), ' ') + " |";
            } else {
                out += " " + std::string(width[i] - c.size(), ' ') + c;
            }
        }
        while (!out.empty() && out.back() == ' ') {
            out.pop_back();
        }
        os << out << '\n';
    };
    line(t.header);
    for (const auto &r2 : t.rows) {
        line(r2);
    }
    return os.str();
}

std::string dump(const json &j)
{
    return j.dump(2) + "\n";
}

} // namespace hypcount
