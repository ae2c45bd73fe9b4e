#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "kp/bench.hpp"
#include "kp/oracle.hpp"

namespace kp::cli {

namespace {

class InputFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputFailure("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text))
        throw InputFailure("cannot write " + path);
}

BlockSet load_instance(const std::string& path) {
    try {
        return parse_instance(read_file(path));
    } catch (const ParseError& e) {
        throw InputFailure(path + ": " + e.what());
    }
}

Plan load_plan(const std::string& path) {
    try {
        return parse_plan(read_file(path));
    } catch (const ParseError& e) {
        throw InputFailure(path + ": " + e.what());
    }
}

// Maps exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
    try {
        return body();
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

char arrow(Direction d) {
    switch (d) {
        case Direction::Up: return '^';
        case Direction::Down: return 'v';
        case Direction::Left: return '<';
        case Direction::Right: return '>';
    }
    return '?';
}

std::string render_marked(const BlockSet& b, GridCoord mark, char c) {
    std::string grid = render_grid(b);
    const std::size_t row_len = static_cast<std::size_t>(b.hull().cols) + 1;
    grid[static_cast<std::size_t>(mark.i) * row_len + static_cast<std::size_t>(mark.j)] = c;
    return grid;
}

}  // namespace

std::string render_grid(const BlockSet& b) {
    std::string text = format_instance(b);
    return text.substr(text.find('\n') + 1);
}

std::vector<std::string> render_frames(const BlockSet& b, const Plan& p) {
    if (p.hull != b.hull())
        throw std::invalid_argument("plan/instance mismatch");
    std::vector<std::string> frames;
    frames.push_back("[0] initial\n" + render_grid(b));
    BlockSet g = b;
    std::size_t step_no = 0;
    for (const Action& a : p.actions) {
        if (!g.contains(a.cell))
            throw std::invalid_argument("plan/instance mismatch: " + to_string(a.cell) + " is empty at action " +
                                        std::to_string(step_no));
        if (a.is_knock()) {
            frames.push_back("[" + std::to_string(++step_no) + "] knock " + to_string(a.cell) + " " +
                             arrow(a.direction) + "\n" + render_marked(g, a.cell, arrow(a.direction)));
            g.erase(a.cell);
            frames.push_back("[" + std::to_string(++step_no) + "] retrieve knocked block " + to_string(a.cell) + "\n" +
                             render_grid(g));
        } else {
            frames.push_back("[" + std::to_string(++step_no) + "] pick " + to_string(a.cell) + "\n" +
                             render_marked(g, a.cell, 'P'));
            g.erase(a.cell);
        }
    }
    return frames;
}

int cmd_solve(const std::string& instance_path, const std::string& plan_out, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BlockSet b = load_instance(instance_path);
        const SolveTrace trace = solve_traced(b);
        const ValidationReport report = validate_plan(b, trace.plan);
        if (!report.valid())
            throw InvariantError("solver produced an invalid plan: " + report.reason);
        if (!plan_out.empty())
            write_file(plan_out, format_plan(trace.plan));
        out << "cells=" << b.size() << " faces=" << trace.faces.size() << " knocks=" << trace.plan.knock_count()
            << " actions=" << trace.plan.total_actions() << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_validate(const std::string& instance_path, const std::string& plan_path, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const BlockSet b = load_instance(instance_path);
        const Plan p = load_plan(plan_path);
        const ValidationReport report = validate_plan(b, p);
        if (report.valid()) {
            out << "valid\n";
            return static_cast<int>(kOk);
        }
        out << "invalid: " << report.reason << '\n';
        return static_cast<int>(kInputError);
    });
}

int cmd_oracle(const std::string& instance_path, std::size_t cell_limit, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BlockSet b = load_instance(instance_path);
        out << "min_knocks=" << oracle_min_knocks(b, cell_limit) << '\n';
        return static_cast<int>(kOk);
    });
}

int cmd_bench(const BenchOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        BenchConfig cfg = BenchConfig::reference_table();
        if (opts.full_only)
            cfg.subgraphs.clear();
        cfg.repetitions = opts.reps;
        cfg.seed = opts.seed;
        cfg.output_path = opts.out;
        write_csv(out, run_benchmark(cfg));
        return static_cast<int>(kOk);
    });
}

int cmd_render(const std::string& instance_path, const std::optional<std::string>& plan_path, bool frames,
               std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const BlockSet b = load_instance(instance_path);
        if (!plan_path) {
            out << render_grid(b);
            return static_cast<int>(kOk);
        }
        const Plan p = load_plan(*plan_path);
        if (p.hull != b.hull())
            throw InputFailure("plan/instance mismatch");
        if (!frames) {
            out << render_grid(b) << "plan: " << p.actions.size() << " grid actions, " << p.knock_count()
                << " knocks\n";
            return static_cast<int>(kOk);
        }
        const auto all = render_frames(b, p);
        for (std::size_t k = 0; k < all.size(); ++k)
            out << (k ? "\n" : "") << all[k];
        return static_cast<int>(kOk);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Minimum-knock knock/pick planner for blocks on a grid", "kpplan"};
    app.require_subcommand(1);

    std::string instance;
    std::string plan;
    std::string plan_out;

    auto* solve_cmd = app.add_subcommand("solve", "Compute a minimum-knock plan and print a summary");
    solve_cmd->add_option("instance", instance, "Instance file")->required();
    solve_cmd->add_option("-o,--out", plan_out, "Write the plan to this file");

    auto* validate_cmd = app.add_subcommand("validate", "Replay a plan against an instance");
    validate_cmd->add_option("instance", instance, "Instance file")->required();
    validate_cmd->add_option("plan", plan, "Plan file")->required();

    std::size_t cell_limit = kDefaultOracleCellLimit;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exhaustive minimum knock count for a small instance");
    oracle_cmd->add_option("instance", instance, "Instance file")->required();
    oracle_cmd->add_option("--limit", cell_limit, "Maximum number of occupied cells")->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Run the synthetic benchmark and print CSV");
    bench_cmd->add_option("--seed", bench.seed, "Base seed for random subgraphs")->capture_default_str();
    bench_cmd->add_option("--reps", bench.reps, "Repetitions per row")->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--out", bench.out, "Also write the CSV to this file");
    bench_cmd->add_flag("--full-only", bench.full_only, "Only the full-grid rows");

    std::optional<std::string> render_plan;
    bool frames = false;
    auto* render_cmd = app.add_subcommand("render", "Print an instance, optionally replaying a plan");
    render_cmd->add_option("instance", instance, "Instance file")->required();
    render_cmd->add_option("plan", render_plan, "Plan file");
    render_cmd->add_flag("--frames", frames, "Print one frame per action");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    if (*solve_cmd)
        return cmd_solve(instance, plan_out, out, err);
    if (*validate_cmd)
        return cmd_validate(instance, plan, out, err);
    if (*oracle_cmd)
        return cmd_oracle(instance, cell_limit, out, err);
    if (*bench_cmd)
        return cmd_bench(bench, out, err);
    return cmd_render(instance, render_plan, frames, out, err);
}

}  // namespace kp::cli
