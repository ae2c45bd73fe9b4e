#include "kp/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include "kp/executor.hpp"
#include "kp/random.hpp"

namespace kp {

BlockSet random_subgraph(GridHull hull, std::size_t k, std::uint64_t seed) {
    const std::size_t total = hull.cell_count();
    if (k > total)
        throw std::out_of_range("subgraph size " + std::to_string(k) + " exceeds hull size " + std::to_string(total));
    std::vector<std::size_t> order(total);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    for (std::size_t t = 0; t < k; ++t) {
        const std::size_t pick = t + static_cast<std::size_t>(uniform_below(rng, total - t));
        std::swap(order[t], order[pick]);
    }
    BlockSet b(hull);
    for (std::size_t t = 0; t < k; ++t)
        b.insert(b.coord(order[t]));
    return b;
}

BenchConfig BenchConfig::reference_table() {
    BenchConfig cfg;
    const std::vector<GridHull> grids = {{3, 3}, {5, 5}, {10, 5}, {10, 10}, {20, 10}, {20, 20}};
    const std::vector<std::size_t> sizes = {5, 16, 25, 50, 100, 200};
    cfg.full_grids = grids;
    for (std::size_t r = 0; r < grids.size(); ++r)
        cfg.subgraphs.push_back({grids[r], sizes[r]});
    return cfg;
}

void BenchConfig::validate() const {
    if (repetitions < 1)
        throw std::invalid_argument("repetitions must be >= 1");
    for (const SubgraphSize& s : subgraphs)
        if (s.cells > s.parent.cell_count())
            throw std::invalid_argument("subgraph size " + std::to_string(s.cells) + " exceeds " +
                                        std::to_string(s.parent.rows) + "x" + std::to_string(s.parent.cols));
}

std::uint64_t instance_seed(std::uint64_t base, const SubgraphSize& size, std::size_t rep) {
    std::uint64_t h = mix_seed(base);
    h = mix_seed(h ^ static_cast<std::uint64_t>(size.parent.rows));
    h = mix_seed(h ^ static_cast<std::uint64_t>(size.parent.cols));
    h = mix_seed(h ^ static_cast<std::uint64_t>(size.cells));
    return mix_seed(h ^ static_cast<std::uint64_t>(rep));
}

namespace {

InstanceResult measure(const BlockSet& b) {
    const auto start = std::chrono::steady_clock::now();
    SolveTrace trace = solve_traced(b);
    const auto stop = std::chrono::steady_clock::now();

    const ValidationReport report = validate_plan(b, trace.plan);
    if (!report.valid())
        throw InvariantError("benchmark plan failed validation: " + report.reason);

    InstanceResult r;
    r.cells = b.size();
    r.faces = trace.faces.size();
    r.knocks = trace.plan.knock_count();
    r.solve_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    return r;
}

BenchRow summarize(GridHull grid, std::size_t cells, bool full, std::vector<InstanceResult> instances) {
    BenchRow row;
    row.grid = grid;
    row.cells = cells;
    row.full = full;
    const double n = static_cast<double>(instances.size());
    for (const InstanceResult& r : instances) {
        row.knocks_mean += static_cast<double>(r.knocks) / n;
        row.t_total_ms_mean += r.solve_ms / n;
        row.faces_mean += static_cast<double>(r.faces) / n;
    }
    row.instances = std::move(instances);
    return row;
}

}  // namespace

std::vector<BenchRow> run_benchmark(const BenchConfig& cfg) {
    cfg.validate();
    std::vector<BenchRow> rows;
    for (const GridHull& grid : cfg.full_grids) {
        const BlockSet b = BlockSet::full(grid);
        std::vector<InstanceResult> runs;
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep)
            runs.push_back(measure(b));
        rows.push_back(summarize(grid, b.size(), true, std::move(runs)));
    }
    for (const SubgraphSize& size : cfg.subgraphs) {
        std::vector<InstanceResult> runs;
        for (std::size_t rep = 0; rep < cfg.repetitions; ++rep)
            runs.push_back(measure(random_subgraph(size.parent, size.cells, instance_seed(cfg.seed, size, rep))));
        rows.push_back(summarize(size.parent, size.cells, false, std::move(runs)));
    }
    if (!cfg.output_path.empty()) {
        std::ofstream out(cfg.output_path);
        if (!out)
            throw std::runtime_error("cannot open " + cfg.output_path + " for writing");
        write_csv(out, rows);
        if (!out)
            throw std::runtime_error("failed writing " + cfg.output_path);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<BenchRow>& rows) {
    out << "grid,|V|,knocks_mean,t_total_ms_mean\n";
    char buf[64];
    for (const BenchRow& r : rows) {
        std::snprintf(buf, sizeof buf, "%.4f,%.4f", r.knocks_mean, r.t_total_ms_mean);
        out << r.grid.rows << 'x' << r.grid.cols << ',' << r.cells << ',' << buf << '\n';
    }
}

}  // namespace kp
