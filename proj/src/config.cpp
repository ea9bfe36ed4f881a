#include "vnhc/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace vnhc {

double TomlValue::number() const {
    if (is_string || numbers.size() != 1)
        throw ConfigError("expected a numeric value");
    return numbers[0];
}

long TomlValue::integer() const { return static_cast<long>(number()); }

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_string = !in_string;
        if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
}

TomlValue parse_value(const std::string& raw, int lineno) {
    TomlValue v;
    const std::string s = trim(raw);
    if (s.empty()) throw ConfigError("line " + std::to_string(lineno) + ": missing value");

    if (s.front() == '"') {
        if (s.size() < 2 || s.back() != '"')
            throw ConfigError("line " + std::to_string(lineno) + ": unterminated string");
        v.is_string = true;
        v.str = s.substr(1, s.size() - 2);
        return v;
    }
    if (s == "true" || s == "false") {
        v.numbers.push_back(s == "true" ? 1.0 : 0.0);
        return v;
    }
    if (s.front() == '[') {
        if (s.back() != ']')
            throw ConfigError("line " + std::to_string(lineno) + ": unterminated array");
        v.is_array = true;
        std::stringstream ss(s.substr(1, s.size() - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (item.empty()) continue;
            try {
                v.numbers.push_back(std::stod(item));
            } catch (const std::exception&) {
                throw ConfigError("line " + std::to_string(lineno) + ": bad array element '" +
                                  item + "'");
            }
        }
        return v;
    }
    try {
        std::size_t used = 0;
        v.numbers.push_back(std::stod(s, &used));
        if (used != s.size()) throw std::invalid_argument(s);
    } catch (const std::exception&) {
        throw ConfigError("line " + std::to_string(lineno) + ": bad value '" + s + "'");
    }
    return v;
}

}  // namespace

std::map<std::string, TomlValue> parse_toml(const std::string& text) {
    std::map<std::string, TomlValue> kv;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(strip_comment(line));
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": bad section header");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": empty key");
        if (!section.empty()) key = section + "." + key;
        TomlValue value = parse_value(line.substr(eq + 1), lineno);
        value.order = static_cast<int>(kv.size());
        kv[key] = value;
    }
    return kv;
}

std::map<std::string, TomlValue> load_toml(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_toml(ss.str());
}

RunConfig run_config_from_toml(const std::map<std::string, TomlValue>& kv) {
    RunConfig c;
    const auto get = [&](const std::string& key) -> const TomlValue* {
        const auto it = kv.find(key);
        return it == kv.end() ? nullptr : &it->second;
    };

    if (const auto* v = get("model")) c.model = v->str;
    if (const auto* v = get("seed")) c.seed = static_cast<std::uint64_t>(v->integer());

    if (const auto* v = get("params.m")) c.params.m = v->number();
    if (const auto* v = get("params.l")) c.params.l = v->number();
    if (const auto* v = get("params.g")) c.params.g = v->number();
    if (c.params.m <= 0 || c.params.l <= 0 || c.params.g <= 0)
        throw ConfigError("model parameters must be positive");

    const auto vec_of = [&](const std::string& key) -> Vec {
        const auto* v = get(key);
        if (!v) throw ConfigError("missing required key: " + key);
        Vec out(static_cast<int>(v->numbers.size()));
        for (int i = 0; i < out.size(); ++i) out[i] = v->numbers[i];
        return out;
    };
    c.q0 = vec_of("initial.q");
    c.qdot0 = vec_of("initial.qdot");
    if (c.q0.size() != c.qdot0.size())
        throw ConfigError("initial.q and initial.qdot must have equal length");
    if (const auto* v = get("initial.solve"))
        for (const double d : v->numbers) c.solve_indices.push_back(static_cast<int>(d));

    if (const auto* v = get("integrator.h")) c.h = v->number();
    if (const auto* v = get("integrator.steps")) c.steps = static_cast<int>(v->integer());
    if (!(c.h > 0)) throw ConfigError("integrator.h must be positive");
    if (c.steps < 0) throw ConfigError("integrator.steps must be non-negative");

    if (const auto* v = get("derivatives.mode")) c.derivative_mode = v->str;
    if (c.derivative_mode != "analytic" && c.derivative_mode != "fd")
        throw ConfigError("derivatives.mode must be \"analytic\" or \"fd\"");
    if (const auto* v = get("derivatives.h_fd")) c.h_fd = v->number();

    if (const auto* v = get("output.dir")) c.out_dir = v->str;
    return c;
}

RunConfig load_run_config(const std::string& path) {
    return run_config_from_toml(load_toml(path));
}

std::size_t SweepGrid::points() const {
    if (axes.empty()) return 0;
    std::size_t total = 1;
    for (const auto& [name, values] : axes) total *= values.size();
    return total;
}

std::vector<std::pair<std::string, double>> SweepGrid::point(std::size_t i) const {
    std::vector<std::pair<std::string, double>> out;
    for (const auto& [name, values] : axes) {
        out.emplace_back(name, values[i % values.size()]);
        i /= values.size();
    }
    return out;
}

SweepGrid load_sweep_grid(const std::string& path) {
    SweepGrid grid;
    std::vector<std::pair<int, std::pair<std::string, std::vector<double>>>> found;
    for (const auto& [key, value] : load_toml(path)) {
        if (key.rfind("grid.", 0) != 0) continue;
        if (value.numbers.empty())
            throw ConfigError("empty grid axis: " + key);
        found.push_back({value.order, {key.substr(5), value.numbers}});
    }
    // axes enumerate in the order they appear in the file
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [order, axis] : found) grid.axes.push_back(std::move(axis));
    if (grid.axes.empty()) throw ConfigError("sweep grid is empty");
    return grid;
}

ClosedLoopSystem build_model(const RunConfig& config) {
    ClosedLoopSystem cls = models::by_name(config.model, config.params);
    if (config.derivative_mode == "fd") {
        cls.system.metric.derivative = nullptr;
        cls.system.metric.fd_step = config.h_fd;
        cls.system.potential_gradient = nullptr;
        cls.system.fd_step = config.h_fd;
        cls.constraints.jac_q = nullptr;
        cls.constraints.jac_qdot = nullptr;
        cls.constraints.fd_step = config.h_fd;
    }
    return cls;
}

}  // namespace vnhc
