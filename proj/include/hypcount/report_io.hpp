#ifndef HYPCOUNT_REPORT_IO_HPP
#define HYPCOUNT_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include <hypcount/counting.hpp>
#include <hypcount/kummer.hpp>
#include <hypcount/qforms.hpp>
#include <hypcount/series.hpp>

namespace hypcount
{

using json = nlohmann::ordered_json;

// {"denom": d, "order": N, "coeffs": ["p/q", ...]}
json to_json(const series &s);
series series_from_json(const json &j);

// The series object with "name" and "params" in front.
json to_json(const named_form &f);
named_form named_form_from_json(const json &j);

// [{"rep": [k_0..k_15], "orbit_size": m, "coset": "even|odd", "shape": "..."}]
json to_json(const orbit_table &t);

// {"genus": g, "order": N, "orbits": [...], "total": [coeffs]}
json to_json(const count_report &r);

// Table of shape rows against exponents first..last: header row of exponents,
// one row per shape (label, coefficients), then the total. Zero cells are
// left empty.
std::string table_csv(const count_report &r, int first, int last);
std::string table_text(const count_report &r, int first, int last);

// Serialized form used for files and stdout: two-space indent, trailing newline.
std::string dump(const json &j);

} // namespace hypcount

#endif
