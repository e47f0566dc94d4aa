#include "harnack/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "harnack/constants.hpp"
#include "harnack/errors.hpp"

namespace harnack {

namespace {

using Flat = std::map<std::string, std::string>;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

double parse_number(const std::string& key, const std::string& text) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (first != last && *first == '+') ++first;
    double v = 0.0;
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc{} || res.ptr != last || !std::isfinite(v)) {
        throw ConfigError(key, key + ": expected a finite number, got '" + text + "'");
    }
    return v;
}

long long parse_integer(const std::string& key, const std::string& text) {
    long long v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ConfigError(key, key + ": expected an integer, got '" + text + "'");
    }
    return v;
}

std::string unquote(const std::string& s) {
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') return s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> parse_list(const std::string& key, const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        throw ConfigError(key, key + ": expected a list [a, b, ...]");
    }
    std::vector<std::string> out;
    const std::string body = trim(std::string_view(text).substr(1, text.size() - 2));
    if (body.empty()) return out;
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = unquote(trim(item));
        if (item.empty()) throw ConfigError(key, key + ": empty list element");
        out.push_back(item);
    }
    return out;
}

std::vector<double> parse_number_list(const std::string& key, const std::string& text) {
    std::vector<double> out;
    for (const auto& s : parse_list(key, text)) out.push_back(parse_number(key, s));
    if (out.empty()) throw ConfigError(key, key + ": list must not be empty");
    return out;
}

template <class T, class F>
std::string join(const std::vector<T>& xs, F&& fmt) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ", ";
        s += fmt(xs[i]);
    }
    return s + "]";
}

std::string kind_name(ScenarioKind k) {
    switch (k) {
        case ScenarioKind::barenblatt: return "barenblatt";
        case ScenarioKind::pinned: return "pinned";
        case ScenarioKind::custom: return "custom";
    }
    return "pinned";
}

ScenarioKind parse_kind(const std::string& key, const std::string& s) {
    if (s == "barenblatt") return ScenarioKind::barenblatt;
    if (s == "pinned") return ScenarioKind::pinned;
    if (s == "custom") return ScenarioKind::custom;
    throw ConfigError(key, key + ": unknown scenario '" + s + "'");
}

/// One schema entry: how to read and write a fixed key.
struct Entry {
    std::string key;
    std::function<void(ExperimentConfig&, const std::string&)> set;
    /// Empty optional: key is omitted from the canonical form.
    std::function<std::optional<std::string>(const ExperimentConfig&)> get;
};

#define HARNACK_NUM(KEY, MEMBER)                                                             \
    Entry {                                                                                  \
        KEY, [](ExperimentConfig& c, const std::string& v) { c.MEMBER = parse_number(KEY, v); }, \
            [](const ExperimentConfig& c) -> std::optional<std::string> {                     \
                return format_number(c.MEMBER);                                              \
            }                                                                                \
    }

const std::vector<Entry>& schema() {
    static const std::vector<Entry> entries = {
        HARNACK_NUM("params.p", params.p),
        {"params.domain",
         [](ExperimentConfig& c, const std::string& v) {
             const auto xs = parse_number_list("params.domain", v);
             if (xs.size() != 2) throw ConfigError("params.domain", "params.domain: need [alpha, beta]");
             c.params.domain = {xs[0], xs[1]};
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return "[" + format_number(c.params.domain.alpha) + ", " +
                    format_number(c.params.domain.beta) + "]";
         }},
        HARNACK_NUM("params.T", params.T),
        HARNACK_NUM("params.tau_pre", params.tau_pre),
        HARNACK_NUM("params.M", params.M),
        HARNACK_NUM("params.y", params.y),
        {"params.n_cells",
         [](ExperimentConfig& c, const std::string& v) {
             const auto n = parse_integer("params.n_cells", v);
             if (n < 1) throw ConfigError("params.n_cells", "params.n_cells: need a positive count");
             c.params.n_cells = static_cast<std::size_t>(n);
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return std::to_string(c.params.n_cells);
         }},
        HARNACK_NUM("params.dt", params.dt),
        HARNACK_NUM("params.eps_reg", params.eps_reg),
        HARNACK_NUM("params.newton_tol", params.newton_tol),
        {"params.newton_max_iter",
         [](ExperimentConfig& c, const std::string& v) {
             c.params.newton_max_iter = static_cast<int>(parse_integer("params.newton_max_iter", v));
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return std::to_string(c.params.newton_max_iter);
         }},
        {"scenario.kind",
         [](ExperimentConfig& c, const std::string& v) {
             c.scenario.kind = parse_kind("scenario.kind", unquote(v));
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return kind_name(c.scenario.kind);
         }},
        HARNACK_NUM("scenario.C", scenario.C),
        HARNACK_NUM("scenario.t0", scenario.t0),
        HARNACK_NUM("scenario.pin_value", scenario.pin_value),
        {"scenario.u0",
         [](ExperimentConfig& c, const std::string& v) { c.scenario.u0 = unquote(v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> { return c.scenario.u0; }},
        {"scenario.u0_table",
         [](ExperimentConfig& c, const std::string& v) { c.scenario.u0_table = unquote(v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             if (c.scenario.u0_table.empty()) return std::nullopt;
             return c.scenario.u0_table;
         }},
        HARNACK_NUM("scenario.domain_halfwidth_rhobar", scenario.domain_halfwidth_rhobar),
        {"checks",
         [](ExperimentConfig& c, const std::string& v) { c.checks = parse_list("checks", v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return join(c.checks, [](const std::string& s) { return s; });
         }},
        HARNACK_NUM("chain.nu", chain.nu),
        HARNACK_NUM("chain.gamma1", chain.gamma1),
        {"chain.delta",
         [](ExperimentConfig& c, const std::string& v) {
             c.chain.delta = parse_number("chain.delta", v);
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             if (!c.chain.delta) return std::nullopt;
             return format_number(*c.chain.delta);
         }},
        HARNACK_NUM("chain.c", chain.c),
        {"sweep.p",
         [](ExperimentConfig& c, const std::string& v) { c.sweep.p = parse_number_list("sweep.p", v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             if (c.sweep.p.empty()) return std::nullopt;
             return join(c.sweep.p, format_number);
         }},
        {"sweep.rho_over_rhobar",
         [](ExperimentConfig& c, const std::string& v) {
             c.sweep.rho_over_rhobar = parse_number_list("sweep.rho_over_rhobar", v);
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return join(c.sweep.rho_over_rhobar, format_number);
         }},
        {"sweep.M",
         [](ExperimentConfig& c, const std::string& v) { c.sweep.M = parse_number_list("sweep.M", v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             if (c.sweep.M.empty()) return std::nullopt;
             return join(c.sweep.M, format_number);
         }},
        {"plots",
         [](ExperimentConfig& c, const std::string& v) { c.plots = parse_list("plots", v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return join(c.plots, [](const std::string& s) { return s; });
         }},
        {"output_dir",
         [](ExperimentConfig& c, const std::string& v) { c.output_dir = unquote(v); },
         [](const ExperimentConfig& c) -> std::optional<std::string> { return c.output_dir; }},
        {"seed",
         [](ExperimentConfig& c, const std::string& v) {
             const auto s = parse_integer("seed", v);
             if (s < 0) throw ConfigError("seed", "seed: need a non-negative integer");
             c.seed = static_cast<std::uint64_t>(s);
         },
         [](const ExperimentConfig& c) -> std::optional<std::string> {
             return std::to_string(c.seed);
         }},
    };
    return entries;
}

#undef HARNACK_NUM

/// Numeric knobs each check accepts under check.<name>.<key>.
const std::map<std::string, std::set<std::string>>& override_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"weak_supersolution", {"tol", "count", "radius_rhobar"}},
        {"energy", {"a", "H", "omega_over_M", "rho_rhobar"}},
        {"log_lemma", {}},
        {"degiorgi", {"rho_rhobar", "delta", "steps"}},
        {"harnack", {"max_abs_slope"}},
        {"transformed_equation", {"tol"}},
        {"hypothesis_transport", {}},
        {"decay_exponent", {"window_lo", "window_hi", "rel_tol"}},
        {"structure", {}},
    };
    return keys;
}

ExperimentConfig from_flat(const Flat& flat) {
    ExperimentConfig c;
    c.checks.clear();
    c.plots.clear();
    const auto& entries = schema();
    for (const auto& [key, value] : flat) {
        if (key.rfind("check.", 0) == 0) {
            const auto dot = key.find('.', 6);
            if (dot == std::string::npos) throw ConfigError(key, key + ": expected check.<name>.<key>");
            const std::string name = key.substr(6, dot - 6);
            const std::string knob = key.substr(dot + 1);
            const auto it = override_keys().find(name);
            if (it == override_keys().end()) throw ConfigError(key, key + ": unknown check '" + name + "'");
            if (!it->second.count(knob)) {
                throw ConfigError(key, key + ": check '" + name + "' has no setting '" + knob + "'");
            }
            c.overrides[name][knob] = parse_number(key, value);
            continue;
        }
        const auto e = std::find_if(entries.begin(), entries.end(),
                                    [&](const Entry& en) { return en.key == key; });
        if (e == entries.end()) throw ConfigError(key, key + ": unknown key");
        e->set(c, value);
    }
    validate(c);
    return c;
}

void flatten_json(const nlohmann::json& j, const std::string& prefix, Flat& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            flatten_json(v, prefix.empty() ? k : prefix + "." + k, out);
        }
        return;
    }
    std::string text;
    if (j.is_array()) {
        text = "[";
        bool first = true;
        for (const auto& el : j) {
            if (!first) text += ", ";
            first = false;
            if (el.is_string()) text += el.get<std::string>();
            else if (el.is_number()) text += el.is_number_float() ? format_number(el.get<double>()) : el.dump();
            else throw ConfigError(prefix, prefix + ": list elements must be numbers or strings");
        }
        text += "]";
    } else if (j.is_string()) {
        text = j.get<std::string>();
    } else if (j.is_number_float()) {
        text = format_number(j.get<double>());
    } else if (j.is_number()) {
        text = j.dump();
    } else {
        throw ConfigError(prefix, prefix + ": unsupported JSON value");
    }
    out[prefix] = text;
}

void rethrow_params(const InvalidInput& e, const std::string& prefix) {
    std::string msg = e.what();
    std::string key = prefix;
    const auto colon = msg.find(':');
    if (colon != std::string::npos && msg.rfind("params.", 0) == 0) key = msg.substr(0, colon);
    throw ConfigError(key, msg);
}

}  // namespace

bool ExperimentConfig::operator==(const ExperimentConfig& o) const {
    const auto& a = params;
    const auto& b = o.params;
    const bool same_params = a.p == b.p && a.domain.alpha == b.domain.alpha &&
                             a.domain.beta == b.domain.beta && a.T == b.T &&
                             a.tau_pre == b.tau_pre && a.M == b.M && a.y == b.y &&
                             a.n_cells == b.n_cells && a.dt == b.dt && a.eps_reg == b.eps_reg &&
                             a.newton_tol == b.newton_tol && a.newton_max_iter == b.newton_max_iter;
    return same_params && scenario == o.scenario && checks == o.checks &&
           overrides == o.overrides && chain == o.chain && sweep == o.sweep && plots == o.plots &&
           output_dir == o.output_dir && seed == o.seed;
}

std::vector<double> ExperimentConfig::p_values() const {
    return sweep.p.empty() ? std::vector<double>{params.p} : sweep.p;
}

std::vector<double> ExperimentConfig::M_values() const {
    return sweep.M.empty() ? std::vector<double>{params.M} : sweep.M;
}

double ExperimentConfig::override_or(const std::string& check, const std::string& key,
                                     double fallback) const {
    const auto it = overrides.find(check);
    if (it == overrides.end()) return fallback;
    const auto jt = it->second.find(key);
    return jt == it->second.end() ? fallback : jt->second;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : override_keys()) out.push_back(k);
        return out;
    }();
    return names;
}

const std::vector<std::string>& known_plots() {
    static const std::vector<std::string> names = {"decay_fit", "sigma_vs_rho", "bad_set_vs_so"};
    return names;
}

ExperimentConfig parse_config_text(std::string_view text) {
    Flat flat;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            if (line[i] == '"') quoted = !quoted;
            if (line[i] == '#' && !quoted) {
                line.resize(i);
                break;
            }
        }
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto eq = body.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("line " + std::to_string(lineno),
                              "line " + std::to_string(lineno) + ": expected key = value");
        }
        const std::string key = trim(std::string_view(body).substr(0, eq));
        const std::string value = trim(std::string_view(body).substr(eq + 1));
        if (key.empty()) {
            throw ConfigError("line " + std::to_string(lineno),
                              "line " + std::to_string(lineno) + ": empty key");
        }
        if (!flat.emplace(key, value).second) throw ConfigError(key, key + ": duplicate key");
    }
    return from_flat(flat);
}

ExperimentConfig parse_config_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError("json", std::string("json: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("json", "json: top level must be an object");
    Flat flat;
    flatten_json(j, "", flat);
    return from_flat(flat);
}

ExperimentConfig parse_config(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') return parse_config_json(text);
    return parse_config_text(text);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config_path", "cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::map<std::string, std::string> to_flat_map(const ExperimentConfig& config) {
    Flat flat;
    for (const auto& e : schema()) {
        if (auto v = e.get(config)) flat[e.key] = *v;
    }
    for (const auto& [name, knobs] : config.overrides) {
        for (const auto& [knob, v] : knobs) flat["check." + name + "." + knob] = format_number(v);
    }
    return flat;
}

std::string to_config_text(const ExperimentConfig& config) {
    const auto flat = to_flat_map(config);
    std::string out;
    for (const auto& e : schema()) {
        const auto it = flat.find(e.key);
        if (it != flat.end()) out += e.key + " = " + it->second + "\n";
    }
    for (const auto& [key, value] : flat) {
        if (key.rfind("check.", 0) == 0) out += key + " = " + value + "\n";
    }
    return out;
}

void validate(const ExperimentConfig& c) {
    try {
        c.params.validate();
    } catch (const InvalidInput& e) {
        rethrow_params(e, "params");
    }
    if (c.checks.empty()) throw ConfigError("checks", "checks: need at least one check");
    for (const auto& name : c.checks) {
        const auto& known = known_checks();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ConfigError("checks", "checks: unknown check '" + name + "'");
        }
    }
    for (const auto& name : c.plots) {
        const auto& known = known_plots();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw ConfigError("plots", "plots: unknown plot '" + name + "'");
        }
    }
    for (double p : c.sweep.p) {
        if (!(p > 1.0 && p < 2.0)) throw ConfigError("sweep.p", "sweep.p: need 1 < p < 2");
    }
    for (double M : c.sweep.M) {
        if (!(M > 0.0)) throw ConfigError("sweep.M", "sweep.M: need M > 0");
    }
    if (c.sweep.rho_over_rhobar.empty()) {
        throw ConfigError("sweep.rho_over_rhobar", "sweep.rho_over_rhobar: list must not be empty");
    }
    for (double r : c.sweep.rho_over_rhobar) {
        if (!(r > 0.0)) throw ConfigError("sweep.rho_over_rhobar", "sweep.rho_over_rhobar: need > 0");
    }
    const auto& ch = c.chain;
    if (!(ch.nu > 0.0 && ch.nu < 1.0)) throw ConfigError("chain.nu", "chain.nu: need 0 < nu < 1");
    if (!(ch.gamma1 > 0.0)) throw ConfigError("chain.gamma1", "chain.gamma1: need gamma1 > 0");
    if (ch.delta && !(*ch.delta > 0.0 && *ch.delta < 1.0)) {
        throw ConfigError("chain.delta", "chain.delta: need 0 < delta < 1");
    }
    if (!(ch.c >= 4.0)) throw ConfigError("chain.c", "chain.c: need c >= 4");
    const auto& s = c.scenario;
    if (!(s.C > 0.0)) throw ConfigError("scenario.C", "scenario.C: need C > 0");
    if (!(s.t0 > 0.0)) throw ConfigError("scenario.t0", "scenario.t0: need t0 > 0");
    if (!(s.pin_value >= 0.0)) throw ConfigError("scenario.pin_value", "scenario.pin_value: need >= 0");
    if (s.u0 != "zero" && s.u0 != "random") {
        throw ConfigError("scenario.u0", "scenario.u0: expected zero or random");
    }
    if (s.kind == ScenarioKind::custom && s.u0_table.empty()) {
        throw ConfigError("scenario.u0_table", "scenario.u0_table: custom scenario needs a table");
    }
    if (!(s.domain_halfwidth_rhobar >= 0.0)) {
        throw ConfigError("scenario.domain_halfwidth_rhobar",
                          "scenario.domain_halfwidth_rhobar: need >= 0");
    }
    if (c.output_dir.empty()) throw ConfigError("output_dir", "output_dir: must not be empty");
    for (const auto& [name, knobs] : c.overrides) {
        for (const auto& [knob, v] : knobs) {
            const std::string key = "check." + name + "." + knob;
            const bool positive_only = knob != "delta";
            if (positive_only ? !(v > 0.0) : !(v >= 0.0 && v < 1.0)) {
                throw ConfigError(key, key + ": out of range");
            }
        }
    }
    if (auto it = c.overrides.find("energy"); it != c.overrides.end()) {
        if (auto a = it->second.find("a"); a != it->second.end() && !(a->second < 1.0)) {
            throw ConfigError("check.energy.a", "check.energy.a: need 0 < a < 1");
        }
    }
}

ExperimentConfig default_suite_config() {
    ExperimentConfig c;
    c.params.n_cells = 4096;
    c.params.dt = 2e-3;
    c.params.eps_reg = 1e-30;
    c.scenario.kind = ScenarioKind::pinned;
    c.scenario.domain_halfwidth_rhobar = 200.0;
    c.checks = {"harnack", "log_lemma", "hypothesis_transport", "weak_supersolution",
                "energy", "decay_exponent", "structure"};
    c.sweep.p = {1.2, 1.5, 1.8};
    c.sweep.rho_over_rhobar = {4.0, 8.0, 16.0};
    c.plots = known_plots();
    c.output_dir = "out";
    return c;
}

}  // namespace harnack
