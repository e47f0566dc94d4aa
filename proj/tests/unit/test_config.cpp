#include <doctest.h>

#include "harnack/config.hpp"
#include "harnack/errors.hpp"

using namespace harnack;

namespace {

std::string key_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const ConfigError& e) {
        return e.key();
    }
    return "";
}

}  // namespace

TEST_SUITE("config") {

TEST_CASE("text format with comments, sections and lists") {
    const auto c = parse_config_text(R"(
# smallest run
params.p = 1.3          # exponent
params.domain = [-5, 5]
params.n_cells = 256
scenario.kind = barenblatt
scenario.t0 = 2
checks = [weak_supersolution, decay_exponent]
check.decay_exponent.rel_tol = 0.01
sweep.rho_over_rhobar = [4, 8]
output_dir = "results dir"
seed = 42
)");
    CHECK(c.params.p == 1.3);
    CHECK(c.params.domain.alpha == -5.0);
    CHECK(c.params.n_cells == 256);
    CHECK(c.scenario.kind == ScenarioKind::barenblatt);
    CHECK(c.scenario.t0 == 2.0);
    CHECK(c.checks == std::vector<std::string>{"weak_supersolution", "decay_exponent"});
    CHECK(c.override_or("decay_exponent", "rel_tol", 1.0) == 0.01);
    CHECK(c.override_or("decay_exponent", "window_lo", 7.0) == 7.0);
    CHECK(c.sweep.rho_over_rhobar == std::vector<double>{4.0, 8.0});
    CHECK(c.p_values() == std::vector<double>{1.3});
    CHECK(c.output_dir == "results dir");
    CHECK(c.seed == 42);
}

TEST_CASE("lossless roundtrip through text and JSON") {
    ExperimentConfig c = default_suite_config();
    c.params.dt = 0.1 + 0.2;  // not exactly representable in short decimal
    c.params.eps_reg = 1e-30;
    c.chain.delta = 1.0 / 3.0;
    c.sweep.M = {1.0, 2.0};
    c.overrides["energy"]["a"] = 0.3;
    c.seed = 123456789;
    const auto text = to_config_text(c);
    CHECK(parse_config_text(text) == c);
    CHECK(to_config_text(parse_config_text(text)) == text);

    {
        std::string json = "{";
        bool first = true;
        for (const auto& [k, v] : to_flat_map(c)) {
            if (!first) json += ",";
            first = false;
            const bool list = !v.empty() && v.front() == '[';
            const bool number = !list && v.find_first_not_of("0123456789+-.e") == std::string::npos;
            if (list) {
                std::string body = v.substr(1, v.size() - 2), out = "[", item;
                std::size_t pos = 0;
                while (pos <= body.size()) {
                    const auto next = body.find(',', pos);
                    item = body.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
                    while (!item.empty() && item.front() == ' ') item.erase(0, 1);
                    const bool num = item.find_first_not_of("0123456789+-.e") == std::string::npos;
                    out += (out.size() > 1 ? "," : "") + (num ? item : "\"" + item + "\"");
                    if (next == std::string::npos) break;
                    pos = next + 1;
                }
                json += "\"" + k + "\":" + out + "]";
            } else {
                json += "\"" + k + "\":" + (number ? v : "\"" + v + "\"");
            }
        }
        json += "}";
        CHECK(parse_config(json) == c);
    }
}

TEST_CASE("nested JSON objects flatten to dotted keys") {
    const auto c = parse_config_json(R"({
        "params": {"p": 1.7, "n_cells": 128},
        "scenario": {"kind": "barenblatt"},
        "checks": ["decay_exponent"],
        "check": {"decay_exponent": {"rel_tol": 0.05}},
        "sweep": {"p": [1.2, 1.8]}
    })");
    CHECK(c.params.p == 1.7);
    CHECK(c.params.n_cells == 128);
    CHECK(c.sweep.p == std::vector<double>{1.2, 1.8});
    CHECK(c.override_or("decay_exponent", "rel_tol", 0.0) == 0.05);
}

TEST_CASE("errors name the offending key") {
    CHECK(key_of("checks = [harnack]\nchain.delta = 1.5\n") == "chain.delta");
    CHECK(key_of("checks = [harnack]\nparams.p = 2.5\n") == "params.p");
    CHECK(key_of("checks = [nonsense]\n") == "checks");
    CHECK(key_of("checks = []\n") == "checks");
    CHECK(key_of("checks = [harnack]\nsweep.p = []\n") == "sweep.p");
    CHECK(key_of("checks = [harnack]\nparams.typo = 1\n") == "params.typo");
    CHECK(key_of("checks = [harnack]\ncheck.harnack.bogus = 1\n") == "check.harnack.bogus");
    CHECK(key_of("checks = [harnack]\nparams.dt = fast\n") == "params.dt");
    CHECK(key_of("checks = [harnack]\nparams.dt = 1\nparams.dt = 2\n") == "params.dt");
    CHECK(key_of("checks = [harnack]\njust words\n") == "line 2");
    CHECK(key_of("{\"checks\": [\"harnack\"], \"chain\": {\"delta\": 1.5}}") == "chain.delta");
    CHECK(key_of("checks = [harnack]\nscenario.kind = custom\n") == "scenario.u0_table");
}

TEST_CASE("every known check is accepted") {
    std::string list;
    for (const auto& c : known_checks()) list += (list.empty() ? "" : ", ") + c;
    CHECK(parse_config_text("checks = [" + list + "]\n").checks.size() == known_checks().size());
}

}
