#include "kp/oracle.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "kp/executor.hpp"
#include "kp/matching.hpp"
#include "kp/random.hpp"

namespace kp {

StateKey StateKey::of(const BlockSet& b) {
    StateKey key;
    key.words.assign((b.hull().cell_count() + 63) / 64, 0);
    for (GridCoord v : b.occupied()) {
        const std::size_t k = b.index(v);
        key.words[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    return key;
}

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t w : k.words) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

class KnockSearch {
public:
    std::size_t min_knocks(const BlockSet& cleaned) {
        if (cleaned.empty())
            return 0;
        const StateKey key = StateKey::of(cleaned);
        if (const auto it = memo_.find(key); it != memo_.end())
            return it->second;

        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (GridCoord v : cleaned.occupied()) {
            if (!is_knockable(cleaned, v))
                continue;
            // Direction does not influence the successor, only feasibility.
            const std::size_t cost = 1 + min_knocks(clean(cleaned.without(v)).cleaned);
            if (cost < best)
                best = cost;
            if (best == 1)
                break;
        }
        if (best == std::numeric_limits<std::size_t>::max())
            throw InvariantError("cleaned state with no knockable cell");
        memo_.emplace(key, best);
        return best;
    }

private:
    std::unordered_map<StateKey, std::size_t, StateKeyHash> memo_;
};

}  // namespace

std::size_t oracle_min_knocks(const BlockSet& b, std::size_t cell_limit) {
    if (b.size() > cell_limit)
        throw std::invalid_argument("instance has " + std::to_string(b.size()) + " cells, oracle limit is " +
                                    std::to_string(cell_limit));
    KnockSearch search;
    return search.min_knocks(clean(b).cleaned);
}

std::vector<BlockSet> enumerate_instances(GridHull hull, const EnumerationSpec& spec) {
    const std::size_t cells = hull.cell_count();
    std::vector<BlockSet> out;
    if (spec.mode == EnumerationSpec::Mode::Exhaustive) {
        if (cells > 20)
            throw std::invalid_argument("exhaustive enumeration limited to 20 hull cells");
        const std::uint64_t total = std::uint64_t{1} << cells;
        out.reserve(total);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            BlockSet b(hull);
            for (std::size_t k = 0; k < cells; ++k)
                if (mask >> k & 1U)
                    b.insert(b.coord(k));
            out.push_back(std::move(b));
        }
        return out;
    }
    Rng rng(spec.seed);
    out.reserve(spec.samples);
    for (std::size_t s = 0; s < spec.samples; ++s) {
        BlockSet b(hull);
        for (std::size_t k = 0; k < cells; ++k)
            if (uniform_below(rng, 2) == 1)
                b.insert(b.coord(k));
        out.push_back(std::move(b));
    }
    return out;
}

EquivalenceReport certify_equivalence(GridHull hull, const EnumerationSpec& spec, std::size_t cell_limit) {
    EquivalenceReport report;
    for (const BlockSet& b : enumerate_instances(hull, spec)) {
        ++report.checked;
        EquivalenceMismatch record{b, 0, 0, 0, {}};
        try {
            record.oracle_knocks = oracle_min_knocks(b, cell_limit);
            record.cover_size = optimal_cover(clean(b).cleaned).size();
            const Plan plan = solve(b);
            record.plan_knocks = plan.knock_count();
            const ValidationReport v = validate_plan(b, plan);
            if (!v.valid())
                record.detail = "plan does not validate: " + v.reason;
        } catch (const std::exception& e) {
            record.detail = e.what();
        }
        if (!record.detail.empty() || record.oracle_knocks != record.cover_size ||
            record.oracle_knocks != record.plan_knocks)
            report.mismatches.push_back(std::move(record));
    }
    return report;
}

}  // namespace kp
