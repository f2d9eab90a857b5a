#include "gbkop/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gbkop/catalog.hpp"

namespace gbkop {

namespace {

const std::pair<Command, const char*> kCommands[] = {
    {Command::Moments, "moments"},        {Command::Converge, "converge"},
    {Command::Rate, "rate"},              {Command::Voronovskaja, "voronovskaja"},
    {Command::Derivative, "derivative"},  {Command::VerifyAll, "verify-all"},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& text, int line) {
    const std::string t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(line, "malformed number '" + t + "'");
    }
    return value;
}

int parse_int(const std::string& text, int line) {
    const std::string t = trim(text);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ConfigError(line, "malformed integer '" + t + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

// Shortest representation that round-trips; matches std::format("{}", v).
std::string canonical_double(double v) {
    std::string best;
    for (int prec = 1; prec <= 17; ++prec) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::from_chars(buf, buf + std::char_traits<char>::length(buf), back);
        if (back == v) {
            best = buf;
            break;
        }
    }
    return best;
}

} // namespace

std::string command_name(Command c) {
    for (const auto& [cmd, name] : kCommands) {
        if (cmd == c) return name;
    }
    return "";
}

Command command_from_name(const std::string& name) {
    for (const auto& [cmd, cname] : kCommands) {
        if (name == cname) return cmd;
    }
    throw std::invalid_argument("unknown command '" + name + "'");
}

bool RunConfig::needs_function() const {
    return command == Command::Converge || command == Command::Rate ||
           command == Command::Voronovskaja || command == Command::Derivative;
}

void RunConfig::validate() const {
    if (!(a >= 0.0)) throw std::invalid_argument("a must be >= 0");
    if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
    if (n_list.empty()) throw std::invalid_argument("n_list must be nonempty");
    for (size_t i = 0; i < n_list.size(); ++i) {
        if (n_list[i] < 1) throw std::invalid_argument("n_list entries must be >= 1");
        if (i > 0 && n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("n_list must be strictly increasing");
        }
    }
    if (points.empty()) throw std::invalid_argument("points must be nonempty");
    for (const auto& [x, y] : points) {
        if (!(x >= 0.0 && y >= 0.0)) {
            throw std::invalid_argument("points must lie in the closed quadrant");
        }
    }
    if (!(grid_step > 0.0) || !(grid_stop > grid_start) || !(grid_start >= 0.0)) {
        throw std::invalid_argument("grid must satisfy 0 <= start < stop, step > 0");
    }
    if (!(shift_resolution > 0.0)) {
        throw std::invalid_argument("shift_resolution must be > 0");
    }
    if (variant != "derivative" && variant != "modulus") {
        throw std::invalid_argument("variant must be 'derivative' or 'modulus'");
    }
    if (needs_function() && function.empty()) {
        throw std::invalid_argument("command '" + command_name(command) +
                                    "' requires a function");
    }
    if (!function.empty()) catalog_function(function); // throws for unknown names
}

RunConfig parse_config(const std::string& text) {
    RunConfig config;
    bool saw_section = false;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    int section_line = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(line_no, "unterminated section");
            if (saw_section) throw ConfigError(line_no, "multiple command sections");
            const std::string name = trim(line.substr(1, line.size() - 2));
            try {
                config.command = command_from_name(name);
            } catch (const std::invalid_argument& e) {
                throw ConfigError(line_no, e.what());
            }
            saw_section = true;
            section_line = line_no;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(line_no, "expected 'key = value'");
        }
        if (!saw_section) {
            throw ConfigError(line_no, "keys must follow a [command] section");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "function") {
            config.function = value;
        } else if (key == "a") {
            config.a = parse_double(value, line_no);
            if (!(config.a >= 0.0)) throw ConfigError(line_no, "a must be >= 0");
        } else if (key == "eps") {
            config.eps = parse_double(value, line_no);
            if (!(config.eps > 0.0)) throw ConfigError(line_no, "eps must be > 0");
        } else if (key == "n_list") {
            config.n_list.clear();
            for (const auto& part : split(value, ',')) {
                config.n_list.push_back(parse_int(part, line_no));
            }
        } else if (key == "points") {
            config.points.clear();
            for (const auto& pair : split(value, ';')) {
                const auto coords = split(pair, ',');
                if (coords.size() != 2) {
                    throw ConfigError(line_no, "points must be 'x,y; x,y; ...'");
                }
                config.points.emplace_back(parse_double(coords[0], line_no),
                                           parse_double(coords[1], line_no));
            }
        } else if (key == "grid") {
            const auto parts = split(value, ':');
            if (parts.size() != 3) {
                throw ConfigError(line_no, "grid must be 'start:step:stop'");
            }
            config.grid_start = parse_double(parts[0], line_no);
            config.grid_step = parse_double(parts[1], line_no);
            config.grid_stop = parse_double(parts[2], line_no);
        } else if (key == "shift_resolution") {
            config.shift_resolution = parse_double(value, line_no);
        } else if (key == "variant") {
            config.variant = value;
        } else if (key == "out") {
            config.out_dir = value;
        } else {
            throw ConfigError(line_no, "unknown key '" + key + "'");
        }
    }
    if (!saw_section) throw ConfigError(line_no, "missing [command] section");
    try {
        config.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(section_line, e.what());
    }
    return config;
}

std::string print_config(const RunConfig& config) {
    std::string out = "[" + command_name(config.command) + "]\n";
    if (!config.function.empty()) out += "function = " + config.function + "\n";
    out += "a = " + canonical_double(config.a) + "\n";
    out += "eps = " + canonical_double(config.eps) + "\n";
    out += "n_list = ";
    for (size_t i = 0; i < config.n_list.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(config.n_list[i]);
    }
    out += "\npoints = ";
    for (size_t i = 0; i < config.points.size(); ++i) {
        if (i) out += "; ";
        out += canonical_double(config.points[i].first) + "," +
               canonical_double(config.points[i].second);
    }
    out += "\ngrid = " + canonical_double(config.grid_start) + ":" +
           canonical_double(config.grid_step) + ":" + canonical_double(config.grid_stop);
    out += "\nshift_resolution = " + canonical_double(config.shift_resolution);
    out += "\nvariant = " + config.variant;
    out += "\nout = " + config.out_dir;
    out += "\n";
    return out;
}

} // namespace gbkop
