#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "glqv/common.hpp"

namespace glqv::cli {

enum ExitCode { kPass = 0, kVerificationFailed = 2, kInputError = 3, kResourceCap = 4 };

struct RunConfig {
    std::string subcommand;
    int n = 0;
    int max = 0;      // pfun/cyclo upper limit; verify/report --max-n
    std::vector<std::uint64_t> qs;
    std::uint64_t a = 2;
    BigRat eps{1, 10};
    BigRat k{1};
    std::vector<BigRat> eps_grid;
    bool split = false;
    std::uint64_t samples = 0; // 0 means exact
    std::optional<std::uint64_t> seed;
    std::string suite = "all";
    std::string format = "json";
    std::string output;     // empty: stdout
    std::string dump_table; // gl2 only
    unsigned threads = 1;
};

// Rows of named cells. CSV renders string cells verbatim and everything else
// as compact JSON; JSON emits an array of objects with sorted keys.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<nlohmann::json>> rows;
};

std::string to_csv(const Table& t);
nlohmann::json to_json(const Table& t);

// "a/b" with 0 < a/b <= 1. Throws DomainError.
BigRat parse_eps(const std::string& text);

// Dispatches one configured subcommand, writing the artifact to `out`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Argument parsing plus run(); maps exceptions to exit codes.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace glqv::cli
