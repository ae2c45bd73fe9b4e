#pragma once

// Grid instances: hull, occupied cells, pick/knock predicates and cleanup.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kp {

struct GridHull {
    int rows = 1;
    int cols = 1;

    GridHull() = default;
    GridHull(int m, int n);

    std::size_t cell_count() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }

    friend bool operator==(const GridHull&, const GridHull&) = default;
};

/// Row-major cell coordinate, origin at the hull's minimum corner.
struct GridCoord {
    int i = 0;
    int j = 0;

    friend auto operator<=>(const GridCoord&, const GridCoord&) = default;
};

inline int manhattan(GridCoord a, GridCoord b) {
    return (a.i > b.i ? a.i - b.i : b.i - a.i) + (a.j > b.j ? a.j - b.j : b.j - a.j);
}

enum class Direction : std::uint8_t { Up, Down, Left, Right };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

struct Delta {
    int di;
    int dj;
};

constexpr Delta delta(Direction d) {
    switch (d) {
        case Direction::Up: return {-1, 0};
        case Direction::Down: return {1, 0};
        case Direction::Left: return {0, -1};
        case Direction::Right: return {0, 1};
    }
    return {0, 0};
}

/// Inverse of delta(); nullopt unless (di, dj) is an axis-aligned unit vector.
std::optional<Direction> direction_from_delta(int di, int dj);

constexpr GridCoord step(GridCoord v, Direction d, int t = 1) {
    const Delta s = delta(d);
    return {v.i + t * s.di, v.j + t * s.dj};
}

/// Raised by instance/plan readers; carries the 1-based offending line.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Raised when an internal guarantee of the planner does not hold.
class InvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The problem instance: a set of occupied cells inside a bounded hull.
/// The grid graph is implicit; two occupied cells are adjacent iff they are
/// at L1 distance 1.
class BlockSet {
public:
    BlockSet() = default;
    explicit BlockSet(GridHull hull);
    BlockSet(GridHull hull, const std::vector<GridCoord>& cells);

    static BlockSet full(GridHull hull);

    const GridHull& hull() const { return hull_; }
    bool inside(GridCoord v) const {
        return v.i >= 0 && v.j >= 0 && v.i < hull_.rows && v.j < hull_.cols;
    }
    bool contains(GridCoord v) const { return inside(v) && cells_[index(v)] != 0; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }

    /// Occupied cells in lexicographic (i, j) order.
    std::vector<GridCoord> occupied() const;

    std::size_t index(GridCoord v) const {
        return static_cast<std::size_t>(v.i) * static_cast<std::size_t>(hull_.cols) + static_cast<std::size_t>(v.j);
    }
    GridCoord coord(std::size_t index) const {
        return {static_cast<int>(index / static_cast<std::size_t>(hull_.cols)),
                static_cast<int>(index % static_cast<std::size_t>(hull_.cols))};
    }

    BlockSet without(GridCoord v) const;

    // In-place edits; used by replay loops that own their copy.
    void insert(GridCoord v);
    void erase(GridCoord v);

    friend bool operator==(const BlockSet&, const BlockSet&) = default;

private:
    GridHull hull_;
    std::vector<std::uint8_t> cells_ = std::vector<std::uint8_t>(1, 0);
    std::size_t count_ = 0;
};

BlockSet parse_instance(std::string_view text);
std::string format_instance(const BlockSet& b);

std::vector<GridCoord> neighbors(const BlockSet& b, GridCoord v);

/// Degree <= 1, or degree 2 with both neighbours on one line through v.
bool is_pickable(const BlockSet& b, GridCoord v);

/// Every hull cell strictly beyond v along d is empty. A ray that leaves the
/// hull immediately is clear.
bool is_knockable(const BlockSet& b, GridCoord v, Direction d);

/// True if some direction admits a clear ray.
bool is_knockable(const BlockSet& b, GridCoord v);

struct CleanResult {
    BlockSet cleaned;
    std::vector<GridCoord> picks;
};

/// Repeatedly picks the lexicographically smallest pickable cell until no
/// cell is pickable.
CleanResult clean(const BlockSet& b);

std::string to_string(GridCoord v);
std::string to_string(Direction d);

}  // namespace kp
