#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qpolymat/code.hpp"

namespace qpolymat {

/// Parsed code-description file. Format, line oriented with # comments:
/// a header "q n m [k]", then one n x m integer matrix per block of n lines,
/// blocks separated by blank lines. Entries are reduced mod q on load.
struct CodeSpecFile {
    unsigned q;
    int n;
    int m;
    std::optional<int> declared_generators;
    std::vector<std::vector<long long>> generators;  // row-major, n*m each
    std::string label;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

CodeSpecFile parse_code_spec(const std::string& text);
CodeSpecFile load_code_spec(const std::string& path);

RankMetricCode build_code(const CodeSpecFile& spec, long long cap = kDefaultCap);

/// Canonical text form, reparseable by parse_code_spec.
std::string format_code_spec(const RankMetricCode& C, const std::string& label = "");

}  // namespace qpolymat
