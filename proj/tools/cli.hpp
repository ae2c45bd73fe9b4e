#pragma once

// kpplan subcommands, callable in-process with explicit output streams.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kp/executor.hpp"
#include "kp/grid.hpp"

namespace kp::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInvariantViolation = 2,
};

int cmd_solve(const std::string& instance_path, const std::string& plan_out, std::ostream& out, std::ostream& err);
int cmd_validate(const std::string& instance_path, const std::string& plan_path, std::ostream& out, std::ostream& err);
int cmd_oracle(const std::string& instance_path, std::size_t cell_limit, std::ostream& out, std::ostream& err);

struct BenchOptions {
    std::uint64_t seed = 0;
    std::size_t reps = 20;
    std::string out;
    bool full_only = false;
};

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err);

int cmd_render(const std::string& instance_path, const std::optional<std::string>& plan_path, bool frames,
               std::ostream& out, std::ostream& err);

/// '#' occupied, '.' empty, one line per row.
std::string render_grid(const BlockSet& b);

/// Initial frame plus one per action: picks mark the cell 'P', knocks mark it
/// with an arrow (^ v < >) and are followed by a frame retrieving the
/// displaced block. Throws std::invalid_argument ("plan/instance mismatch")
/// if the plan does not fit the instance.
std::vector<std::string> render_frames(const BlockSet& b, const Plan& p);

/// Full command line entry point.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kp::cli
