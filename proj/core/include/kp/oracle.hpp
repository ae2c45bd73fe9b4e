#pragma once

// Exhaustive ground truth for the minimum knock count on small instances.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kp/grid.hpp"

namespace kp {

/// Occupancy bitmask over hull cells in row-major order.
struct StateKey {
    std::vector<std::uint64_t> words;

    static StateKey of(const BlockSet& b);

    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
    std::size_t operator()(const StateKey& k) const noexcept;
};

inline constexpr std::size_t kDefaultOracleCellLimit = 12;

/// Minimum number of knocks over all complete feasible executions, by
/// memoized search over cleaned states. Cleanup is applied eagerly: picks
/// are free and both pickability and knockability only become easier as
/// cells disappear. Throws std::invalid_argument above cell_limit.
std::size_t oracle_min_knocks(const BlockSet& b, std::size_t cell_limit = kDefaultOracleCellLimit);

struct EnumerationSpec {
    enum class Mode { Exhaustive, Sampled };

    Mode mode = Mode::Exhaustive;
    std::size_t samples = 0;
    std::uint64_t seed = 0;

    static EnumerationSpec exhaustive() { return {}; }
    static EnumerationSpec sampled(std::size_t count, std::uint64_t seed) { return {Mode::Sampled, count, seed}; }
};

struct EquivalenceMismatch {
    BlockSet instance;
    std::size_t oracle_knocks = 0;
    std::size_t cover_size = 0;
    std::size_t plan_knocks = 0;
    std::string detail;
};

struct EquivalenceReport {
    std::size_t checked = 0;
    std::vector<EquivalenceMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Every subset of the hull (Exhaustive, requires <= 20 hull cells) or
/// `samples` uniformly random subsets (each cell kept with probability 1/2).
std::vector<BlockSet> enumerate_instances(GridHull hull, const EnumerationSpec& spec);

/// For each instance: the oracle optimum must equal the optimal cover size of
/// the cleaned instance and the knock count of a plan that validates.
EquivalenceReport certify_equivalence(GridHull hull, const EnumerationSpec& spec,
                                      std::size_t cell_limit = kDefaultOracleCellLimit);

}  // namespace kp
