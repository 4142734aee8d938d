#pragma once

#include <string>
#include <vector>

namespace amls {

/// One available extension oracle: approximation ratio alpha and
/// per-query cost base c. Both must be finite and >= 1.
struct OracleSpec {
    double alpha = 1.0;
    double c = 1.0;

    friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

/// Non-empty ordered list of oracle specs with exact duplicates removed.
class SpecList {
public:
    explicit SpecList(std::vector<OracleSpec> entries);

    static SpecList single(double alpha, double c) { return SpecList({{alpha, c}}); }

    const std::vector<OracleSpec>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    const OracleSpec& operator[](std::size_t i) const { return entries_[i]; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::vector<OracleSpec> entries_;
};

/// Parses the text spec-file format: one "alpha,c" pair per line, comma or
/// whitespace separated, '#' starts a comment, order preserved.
/// Throws std::invalid_argument with a line number on malformed input.
SpecList parse_spec_text(const std::string& text);

/// Loads a spec file from disk. Errors carry the path and line number.
SpecList load_spec_file(const std::string& path);

/// Canonical serialization; parse(serialize(x)) == x.
std::string serialize_spec_list(const SpecList& specs);

} // namespace amls
