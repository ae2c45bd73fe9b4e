#pragma once

// Turning an optimal cover into an executable knock/pick sequence, and
// replaying sequences against an instance.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kp/gadgets.hpp"
#include "kp/grid.hpp"
#include "kp/matching.hpp"

namespace kp {

struct Action {
    enum class Kind { Pick, Knock };

    Kind kind = Kind::Pick;
    GridCoord cell;
    Direction direction = Direction::Up;  // meaningful for knocks only

    static Action pick(GridCoord v) { return {Kind::Pick, v, Direction::Up}; }
    static Action knock(GridCoord v, Direction d) { return {Kind::Knock, v, d}; }

    bool is_knock() const { return kind == Kind::Knock; }

    friend bool operator==(const Action&, const Action&) = default;
};

std::string to_string(const Action& a);

/// Grid actions in execution order. A knock deletes its cell from the grid;
/// the displaced block is picked up afterwards off-grid, so a complete plan
/// has one grid action per block and costs |V| + knocks actions overall.
struct Plan {
    GridHull hull;
    std::vector<Action> actions;

    std::size_t knock_count() const;
    std::size_t grid_pick_count() const { return actions.size() - knock_count(); }
    /// Picks including the retrieval of every knocked block.
    std::size_t pick_count() const { return actions.size(); }
    std::size_t total_actions() const { return actions.size() + knock_count(); }

    friend bool operator==(const Plan&, const Plan&) = default;
};

class NoFeasibleKnock : public InvariantError {
public:
    using InvariantError::InvariantError;
};

struct KnockChoice {
    Gadget gadget;
    GridCoord cell;
    Direction direction;
};

/// Scans cover gadgets x candidates x directions in lexicographic order for a
/// clear ray. A candidate whose deletion stays inside its own gadget's faces
/// is preferred over one that also breaks a face of another gadget.
/// Throws NoFeasibleKnock when nothing qualifies.
KnockChoice choose_knock(const ExactCover& cover, const BlockSet& b);

/// One knock followed by its cleanup picks.
struct KnockRound {
    KnockChoice choice;
    std::vector<GridCoord> picks;
    std::size_t faces_after = 0;
};

struct SolveTrace {
    Plan plan;
    std::vector<GridCoord> initial_picks;
    BlockSet cleaned;
    std::vector<Face> faces;  // faces of the cleaned instance
    ExactCover cover;         // optimal cover of those faces
    std::vector<KnockRound> rounds;
};

SolveTrace solve_traced(const BlockSet& b);
Plan solve(const BlockSet& b);

struct ValidationReport {
    bool feasible = true;  // no action violated its predicate
    bool emptied = false;
    std::size_t knock_count = 0;
    std::optional<std::size_t> violation_index;
    std::string reason;

    bool valid() const { return feasible && emptied; }
};

ValidationReport validate_plan(const BlockSet& b, const Plan& p);

/// "plan v1 m n knocks=<k>" then one "P i j" / "K i j di dj" line per action.
std::string format_plan(const Plan& p);
Plan parse_plan(std::string_view text);

}  // namespace kp
