#include "rmclass_cli/oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "rmclass/anf.hpp"
#include "rmclass/errors.hpp"

#ifndef RMCLASS_DEFAULT_ORACLE
#define RMCLASS_DEFAULT_ORACLE "oracle_tables.txt"
#endif

namespace rmclass::cli {

namespace {

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

std::vector<OracleEntry> read_oracle(std::istream& in)
{
    std::vector<OracleEntry> entries;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        OracleEntry e;
        std::string extra;
        if (!(fields >> e.table >> e.n >> e.k >> e.s >> e.count) || (fields >> extra) || !all_digits(e.count))
            throw ParseError("oracle line " + std::to_string(number) + ": expected '<table> <n> <k> <s> <count>'");
        anf::validate_space(e.n, e.s, e.k);
        entries.push_back(std::move(e));
    }
    return entries;
}

std::vector<OracleEntry> load_oracle(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw InvalidParameters("cannot open oracle file " + path.string());
    return read_oracle(in);
}

std::filesystem::path default_oracle_path()
{
    if (const char* env = std::getenv("RMCLASS_ORACLE"))
        return env;
    return RMCLASS_DEFAULT_ORACLE;
}

std::vector<OracleEntry> select_entries(const std::vector<OracleEntry>& entries, int max_n,
                                        const std::string& table)
{
    std::vector<OracleEntry> out;
    for (const auto& e : entries)
        if (e.n <= max_n && (table.empty() || e.table == table))
            out.push_back(e);
    return out;
}

}  // namespace rmclass::cli
