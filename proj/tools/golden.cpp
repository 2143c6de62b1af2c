#include "golden.hpp"

#include <algorithm>

namespace zmlp::cli {

bool GoldenReport::ok() const {
    return std::all_of(items.begin(), items.end(), [](const Comparison& c) { return c.ok; });
}

void GoldenReport::add(std::string what, bool ok, std::string detail) {
    items.push_back({std::move(what), ok, std::move(detail)});
}

Json GoldenReport::to_json() const {
    Json arr = Json::array();
    for (const auto& c : items) {
        Json j{{"check", c.what}, {"ok", c.ok}};
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
    }
    return Json{{"ok", ok()}, {"checks", arr}};
}

std::string golden_path(const std::string& dir, const std::string& file) {
    if (dir.empty()) return file;
    return dir.back() == '/' ? dir + file : dir + "/" + file;
}

std::vector<std::pair<std::string, std::string>> golden_table1_rows(const Json& table1, Int a, Int b) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& row : table1.at("rows"))
        if (row.at("a").get<Int>() == a && row.at("b").get<Int>() == b)
            out.emplace_back(row.at("family").get<std::string>(), row.at("pair").get<std::string>());
    return out;
}

}  // namespace zmlp::cli
