#ifndef NECKLACE_REPORT_HPP
#define NECKLACE_REPORT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace necklace {

struct CheckRecord {
    std::string name;
    double expected = 0.0;
    double actual = 0.0;
    double tol = 0.0;
    bool pass = false;
};

/// Deterministic run report: insertion-ordered config echo and checks, a
/// verdict that is the conjunction of the per-check verdicts, wall time.
struct Report {
    std::string command;
    std::vector<std::pair<std::string, std::string>> config;
    std::vector<CheckRecord> checks;
    double seconds = 0.0;

    void echo(const std::string& key, const std::string& value);
    /// pass iff |expected - actual| <= tol.
    void add(const std::string& name, double expected, double actual,
             double tol);
    /// Boolean check: expected 1, actual 1/0, tol 0.
    void add_flag(const std::string& name, bool ok);

    bool verdict() const;

    /// Ordered keys, numbers with 17 significant digits (round-trip exact):
    /// {command, config, checks: [{name, expected, actual, tol, pass}],
    ///  verdict, seconds}.
    std::string to_json() const;
};

/// Plain key=value configuration document ('#' starts a comment, blank
/// lines ignored).  Later duplicates win.
std::map<std::string, std::string> parse_config_file(const std::string& path);
std::map<std::string, std::string> parse_config_text(const std::string& text);

}  // namespace necklace

#endif
