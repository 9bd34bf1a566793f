#pragma once

// Published orbit counts, loaded from a line-oriented data file:
//   <table> <n> <k> <s> <count>
// '#' starts a comment line; blank lines are ignored.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace rmclass::cli {

struct OracleEntry {
    std::string table;
    int n = 0;
    int k = -1;
    int s = 0;
    std::string count;  // decimal, verbatim

    friend bool operator==(const OracleEntry&, const OracleEntry&) = default;
};

// Throws ParseError on malformed lines and InvalidParameters on entries that
// violate -1 <= k < s <= n <= 10.
std::vector<OracleEntry> read_oracle(std::istream& in);
std::vector<OracleEntry> load_oracle(const std::filesystem::path& path);

std::filesystem::path default_oracle_path();

// Entries with n <= max_n whose table tag equals `table` (any when empty).
std::vector<OracleEntry> select_entries(const std::vector<OracleEntry>& entries, int max_n,
                                        const std::string& table);

}  // namespace rmclass::cli
