#pragma once

#include <string>
#include <vector>

#include "zmlp/io.hpp"

namespace zmlp::cli {

// Outcome of comparing freshly computed data with a stored fixture.
struct Comparison {
    std::string what;
    bool ok = true;
    std::string detail;  // expected vs actual on mismatch
};

struct GoldenReport {
    std::vector<Comparison> items;
    bool ok() const;
    void add(std::string what, bool ok, std::string detail = {});
    Json to_json() const;
};

std::string golden_path(const std::string& dir, const std::string& file);

// Rows of the named-family fixture for (a, b), as (family, pair text).
std::vector<std::pair<std::string, std::string>> golden_table1_rows(const Json& table1, Int a, Int b);

}  // namespace zmlp::cli
