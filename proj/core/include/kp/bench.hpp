#pragma once

// Synthetic benchmark: full grids and uniformly thinned subgrids.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "kp/grid.hpp"

namespace kp {

/// Exactly k cells of the hull, a uniform k-subset drawn with std::mt19937_64
/// seeded by `seed` (partial Fisher-Yates, rejection-sampled indices).
/// No connectivity requirement. Throws std::out_of_range unless 0 <= k <= m*n.
BlockSet random_subgraph(GridHull hull, std::size_t k, std::uint64_t seed);

struct SubgraphSize {
    GridHull parent;
    std::size_t cells = 0;
};

struct BenchConfig {
    std::vector<GridHull> full_grids;
    std::vector<SubgraphSize> subgraphs;
    std::size_t repetitions = 20;
    std::uint64_t seed = 0;
    std::string output_path;  // empty: no CSV file

    /// The grid sizes and subgraph sizes of the reference synthetic table.
    static BenchConfig reference_table();

    /// Throws std::invalid_argument on repetitions == 0 or oversize subgraphs.
    void validate() const;
};

struct InstanceResult {
    std::size_t cells = 0;
    std::size_t faces = 0;  // faces of the cleaned instance
    std::size_t knocks = 0;
    double solve_ms = 0.0;
};

struct BenchRow {
    GridHull grid;
    std::size_t cells = 0;
    bool full = false;
    double knocks_mean = 0.0;
    double t_total_ms_mean = 0.0;
    double faces_mean = 0.0;
    std::vector<InstanceResult> instances;
};

/// Seed of repetition `rep` of a subgraph row.
std::uint64_t instance_seed(std::uint64_t base, const SubgraphSize& size, std::size_t rep);

/// One row per full grid and one per subgraph size, each averaged over the
/// repetitions (full-grid repetitions re-solve the same instance). Every plan is validated
/// before it is counted; a failing plan raises InvariantError. Writes the
/// CSV to cfg.output_path when set (std::runtime_error on I/O failure).
std::vector<BenchRow> run_benchmark(const BenchConfig& cfg);

/// Header "grid,|V|,knocks_mean,t_total_ms_mean" then one line per row.
void write_csv(std::ostream& out, const std::vector<BenchRow>& rows);

}  // namespace kp
