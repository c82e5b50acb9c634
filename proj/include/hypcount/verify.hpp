#ifndef HYPCOUNT_VERIFY_HPP
#define HYPCOUNT_VERIFY_HPP

#include <filesystem>
#include <string>
#include <vector>

#include <hypcount/series.hpp>

namespace hypcount
{

struct check_result {
    std::string suite;
    std::string name;
    std::string anchor; // the identity or table the check exercises
    bool ok = false;
    std::string detail; // first mismatch on failure, an optional note on success
};

// Suites in run order: fps, numtheory, qforms, trig, kummer, counting.
const std::vector<std::string> &verify_suites();

// Runs one suite ("all" runs every suite). Golden files are read from
// golden_dir; a missing or malformed golden file raises hypcount::error.
std::vector<check_result> run_verify(const std::string &suite, int order, const std::filesystem::path &golden_dir);

// "<label> at q^n: expected a, got b" for the first differing coefficient,
// or an empty string when the two agree on their common range.
std::string first_mismatch(const std::string &label, const series &expected, const series &got,
                           const std::string &var = "q");

} // namespace hypcount

#endif
