#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "charpoly/types.hpp"

namespace charpoly {

/// Everything a single CLI invocation needs. Filled by run_cli's argument
/// parser, but public so tests can drive commands without a process spawn.
struct RunConfig {
    std::string command;            // compute | reproduce | bench
    std::string input_path;         // Matrix Market file (compute)
    std::string gallery;            // gallery family (compute)
    std::string experiment;         // reproduce target
    int n = 0;                      // 0 = family default
    int k = 0;                      // 0 = all coefficients
    std::string method = "labudde"; // labudde | eig-summation | leverrier
    bool bounds = true;
    bool oracle = false;
    int oracle_limit = 64;
    std::string format = "csv";     // csv | json
    std::uint64_t seed = 42;
    double nu = 10.0;               // backward-error model constant for stage 1
    double forsythe_nu = 1e-10;
    bool has_forsythe_nu = false;
    double toeplitz_b = 100.0;
    bool has_toeplitz_b = false;
    std::vector<double> companion_coeffs;
    std::vector<int> bench_sizes;
};

void cmd_compute(const RunConfig& cfg, std::ostream& out, std::ostream& err);
void cmd_reproduce(const RunConfig& cfg, std::ostream& out, std::ostream& err);
void cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses argv, dispatches, and maps failures to exit codes:
/// 0 success, 2 usage, 3 structure, 4 numeric range, 5 hypothesis violation.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charpoly
