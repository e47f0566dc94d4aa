#include "harnack/report.hpp"

#include <cmath>

#include "json.hpp"

namespace harnack {

namespace {

nlohmann::json number_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

CheckReport CheckReport::upper_bound(std::string name, double lhs, double rhs, double tolerance,
                                     bool log_space) {
    CheckReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.log_space = log_space;
    r.margin = rhs - lhs;
    r.tolerance = tolerance;
    r.details["tolerance"] = tolerance;
    r.settle();
    return r;
}

CheckReport CheckReport::lower_bound(std::string name, double lhs, double rhs, double tolerance,
                                     bool log_space) {
    CheckReport r = upper_bound(std::move(name), lhs, rhs, tolerance, log_space);
    r.margin = lhs - rhs;
    r.settle();
    return r;
}

std::string CheckReport::to_json() const {
    nlohmann::ordered_json j;
    j["name"] = name;
    j["passed"] = passed;
    const char* suffix = log_space ? "_log" : "";
    if (lhs) j[std::string("lhs") + suffix] = number_or_null(*lhs);
    if (rhs) j[std::string("rhs") + suffix] = number_or_null(*rhs);
    j["margin"] = number_or_null(margin);
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (const auto& [k, v] : details) d[k] = number_or_null(v);
    for (const auto& [k, v] : notes) d[k] = v;
    j["details"] = d;
    return j.dump();
}

}  // namespace harnack
