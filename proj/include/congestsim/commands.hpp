#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "congestsim/scenario.hpp"

namespace congest {

// Command implementations behind the CLI, writing CSV to `out` and
// returning the process exit code:
//   0 success, 1 a requested check failed, 2 configuration error,
//   3 runtime/engine error.
// Configuration and engine errors are thrown (ConfigError / SimError);
// the binary maps them to 2 / 3.

// One row: mode,n,diameter,rounds,bits_total,cut_bits,advice_bytes,outputs_digest.
// trace_path, when set, receives "round from to payload_hex bits" lines.
int cmd_simulate(const Scenario& scenario, std::ostream& out, const std::string& trace_path = "",
                 const std::string& summary_path = "");

struct ReduceOptions {
    std::string family = "toy";
    std::size_t k_min = 2;
    std::size_t k_max = 2;
    std::string algorithm = "four-cycle";
    bool exhaustive = true;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
    int bandwidth = 0;
    std::string transcript_dir;  // optional per-pair transcript dumps
    std::string summary_path;    // optional JSON summary
};

// Sweep rows: k,x0,x1,answer,f,agree,rounds,payload_bits,bound_2bst,bound_ok.
int cmd_reduce(const ReduceOptions& opts, std::ostream& out);

struct SeparateOptions {
    std::string problem;  // size-upper-bound | coloring | identifier-sets
    std::vector<std::size_t> sizes;
    std::uint64_t seed = 1;
};

int cmd_separate(const SeparateOptions& opts, std::ostream& out);

// The seven registry rows as CSV: problem,bound,approximation,source.
int cmd_registry(std::ostream& out);

struct CheckFamilyOptions {
    std::string family = "toy";
    std::size_t n = 0;       // instance size (2k+2 for the toy family)
    bool exhaustive = true;
    std::size_t samples = 0;
    std::uint64_t seed = 1;
};

// Violation rows: check,x0,x1,detail. Exit 1 when any violation is found.
int cmd_check_family(const CheckFamilyOptions& opts, std::ostream& out);

}  // namespace congest
