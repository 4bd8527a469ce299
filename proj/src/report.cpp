#include "necklace/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "necklace/errors.hpp"

namespace necklace {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string number17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

void Report::echo(const std::string& key, const std::string& value) {
    config.emplace_back(key, value);
}

void Report::add(const std::string& name, double expected, double actual,
                 double tol) {
    CheckRecord c;
    c.name = name;
    c.expected = expected;
    c.actual = actual;
    c.tol = tol;
    c.pass = std::abs(expected - actual) <= tol;
    checks.push_back(c);
}

void Report::add_flag(const std::string& name, bool ok) {
    CheckRecord c;
    c.name = name;
    c.expected = 1.0;
    c.actual = ok ? 1.0 : 0.0;
    c.tol = 0.0;
    c.pass = ok;
    checks.push_back(c);
}

bool Report::verdict() const {
    for (const CheckRecord& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string Report::to_json() const {
    std::ostringstream out;
    out << "{\"command\":\"" << json_escape(command) << "\",\"config\":{";
    for (size_t i = 0; i < config.size(); ++i) {
        if (i) out << ",";
        out << "\"" << json_escape(config[i].first) << "\":\""
            << json_escape(config[i].second) << "\"";
    }
    out << "},\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const CheckRecord& c = checks[i];
        if (i) out << ",";
        out << "{\"name\":\"" << json_escape(c.name) << "\",\"expected\":"
            << number17(c.expected) << ",\"actual\":" << number17(c.actual)
            << ",\"tol\":" << number17(c.tol) << ",\"pass\":"
            << (c.pass ? "true" : "false") << "}";
    }
    out << "],\"verdict\":" << (verdict() ? "true" : "false")
        << ",\"seconds\":" << number17(seconds) << "}";
    return out.str();
}

std::map<std::string, std::string> parse_config_text(const std::string& text) {
    std::map<std::string, std::string> out;
    std::istringstream in(text);
    std::string line;
    auto trim = [](std::string s) {
        size_t a = s.find_first_not_of(" \t\r");
        size_t b = s.find_last_not_of(" \t\r");
        return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    while (std::getline(in, line)) {
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw DegenerateInputError("config line without '=': " + line);
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw DegenerateInputError("cannot read config file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_config_text(buf.str());
}

}  // namespace necklace
