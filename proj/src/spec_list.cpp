#include "amls/spec_list.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace amls {

SpecList::SpecList(std::vector<OracleSpec> entries) {
    if (entries.empty())
        throw std::invalid_argument("SpecList: at least one (alpha, c) entry required");
    for (const auto& e : entries) {
        if (!std::isfinite(e.alpha) || !std::isfinite(e.c))
            throw std::invalid_argument("SpecList: alpha and c must be finite");
        if (e.alpha < 1.0 || e.c < 1.0)
            throw std::invalid_argument("SpecList: alpha and c must be >= 1");
    }
    for (const auto& e : entries) {
        if (std::find(entries_.begin(), entries_.end(), e) == entries_.end())
            entries_.push_back(e);
    }
}

SpecList parse_spec_text(const std::string& text) {
    std::vector<OracleSpec> entries;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        for (char& ch : line)
            if (ch == ',' || ch == '\t' || ch == '\r') ch = ' ';
        std::istringstream fields(line);
        double alpha, c;
        if (!(fields >> alpha)) continue; // blank or comment-only line
        std::string trailing;
        if (!(fields >> c) || (fields >> trailing)) {
            throw std::invalid_argument("spec file line " + std::to_string(lineno) +
                                        ": expected exactly two numbers (alpha, c)");
        }
        if (!(alpha >= 1.0) || !(c >= 1.0) || !std::isfinite(alpha) || !std::isfinite(c)) {
            throw std::invalid_argument("spec file line " + std::to_string(lineno) +
                                        ": alpha and c must be finite and >= 1");
        }
        entries.push_back({alpha, c});
    }
    if (entries.empty())
        throw std::invalid_argument("spec file: no (alpha, c) entries found");
    return SpecList(std::move(entries));
}

SpecList load_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spec_text(buf.str());
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

std::string serialize_spec_list(const SpecList& specs) {
    std::string out;
    char buf[80];
    for (const auto& e : specs) {
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", e.alpha, e.c);
        out += buf;
    }
    return out;
}

} // namespace amls
