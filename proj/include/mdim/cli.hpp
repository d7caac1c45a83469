#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace mdim::cli {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;  // parse errors, bad parameters
inline constexpr int exit_input = 3;  // disconnected or too-small input graph

// compute: prints the exact value (integers bare, rationals as p/q), then the
// witness — "witness {i, j, ...}" for dim/edim, one "v=p/q" line per vertex
// with nonzero weight for dimf/edimf.
int cmd_compute(const std::string& input_path, const std::string& what,
                const std::string& dump_lp_path, std::ostream& out,
                std::ostream& err);

struct GenOptions {
    std::string family;
    int n = -1, k = -1, s = -1, t = -1, m = -1;
    std::vector<int> parts;
    std::uint64_t seed = 1;
    std::string out_prefix;
};

// gen: writes "<prefix>.edges" and "<prefix>.names" (pair families write
// "-G"/"-H" or "-H1"/"-H2" variants) and prints the paths written.
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

// verify: runs the reproduction checks, one machine-readable line each;
// returns exit_ok iff all pass.
int cmd_verify(const std::string& filter, std::ostream& out);

}  // namespace mdim::cli
