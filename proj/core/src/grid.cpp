#include "kp/grid.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace kp {

GridHull::GridHull(int m, int n) : rows(m), cols(n) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("hull dimensions must be >= 1, got " + std::to_string(m) + "x" + std::to_string(n));
}

std::optional<Direction> direction_from_delta(int di, int dj) {
    for (Direction d : kAllDirections) {
        const Delta s = delta(d);
        if (s.di == di && s.dj == dj)
            return d;
    }
    return std::nullopt;
}

BlockSet::BlockSet(GridHull hull) : hull_(hull), cells_(hull.cell_count(), 0) {}

BlockSet::BlockSet(GridHull hull, const std::vector<GridCoord>& cells) : BlockSet(hull) {
    for (GridCoord v : cells) {
        if (!inside(v))
            throw std::invalid_argument("coordinate outside hull: " + to_string(v));
        if (contains(v))
            throw std::invalid_argument("duplicate cell: " + to_string(v));
        insert(v);
    }
}

BlockSet BlockSet::full(GridHull hull) {
    BlockSet b(hull);
    std::fill(b.cells_.begin(), b.cells_.end(), std::uint8_t{1});
    b.count_ = b.cells_.size();
    return b;
}

std::vector<GridCoord> BlockSet::occupied() const {
    std::vector<GridCoord> out;
    out.reserve(count_);
    for (std::size_t k = 0; k < cells_.size(); ++k)
        if (cells_[k])
            out.push_back(coord(k));
    return out;
}

BlockSet BlockSet::without(GridCoord v) const {
    BlockSet copy = *this;
    copy.erase(v);
    return copy;
}

void BlockSet::insert(GridCoord v) {
    if (!inside(v))
        throw std::invalid_argument("coordinate outside hull: " + to_string(v));
    auto& cell = cells_[index(v)];
    if (!cell) {
        cell = 1;
        ++count_;
    }
}

void BlockSet::erase(GridCoord v) {
    if (!contains(v))
        throw std::invalid_argument("cell not occupied: " + to_string(v));
    cells_[index(v)] = 0;
    --count_;
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty())
        return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

void require_occupied(const BlockSet& b, GridCoord v) {
    if (!b.contains(v))
        throw std::invalid_argument("cell not occupied: " + to_string(v));
}

}  // namespace

BlockSet parse_instance(std::string_view text) {
    const auto lines = split_lines(text);
    if (lines.empty())
        throw ParseError(1, "malformed header: empty input");

    const std::string_view header = lines[0];
    const auto space = header.find(' ');
    int m = 0;
    int n = 0;
    if (space == std::string_view::npos || !parse_int(header.substr(0, space), m) ||
        !parse_int(header.substr(space + 1), n))
        throw ParseError(1, "malformed header: expected \"m n\", got \"" + std::string(header) + "\"");
    if (m < 1 || n < 1)
        throw ParseError(1, "malformed header: dimensions must be >= 1");

    BlockSet b{GridHull(m, n)};
    for (std::size_t row = 0; row + 1 < lines.size(); ++row) {
        const std::string_view line = lines[row + 1];
        const std::size_t line_no = row + 2;
        for (std::size_t col = 0; col < line.size(); ++col) {
            const char c = line[col];
            if (c != '#' && c != '.')
                throw ParseError(line_no, std::string("unexpected character '") + c + "'");
            const GridCoord v{static_cast<int>(row), static_cast<int>(col)};
            if (c == '#') {
                if (!b.inside(v))
                    throw ParseError(line_no, "coordinate outside hull: " + to_string(v));
                if (b.contains(v))
                    throw ParseError(line_no, "duplicate cell: " + to_string(v));
                b.insert(v);
            }
        }
        if (row < static_cast<std::size_t>(m) && line.size() != static_cast<std::size_t>(n))
            throw ParseError(line_no, "row has " + std::to_string(line.size()) + " cells, expected " + std::to_string(n));
        if (row >= static_cast<std::size_t>(m) && !line.empty())
            throw ParseError(line_no, "row outside hull");
    }
    const std::size_t data_rows = lines.size() - 1;
    if (data_rows < static_cast<std::size_t>(m))
        throw ParseError(lines.size() + 1, "expected " + std::to_string(m) + " rows, got " + std::to_string(data_rows));
    return b;
}

std::string format_instance(const BlockSet& b) {
    const GridHull& h = b.hull();
    std::string out = std::to_string(h.rows) + " " + std::to_string(h.cols) + "\n";
    out.reserve(out.size() + h.cell_count() + static_cast<std::size_t>(h.rows));
    for (int i = 0; i < h.rows; ++i) {
        for (int j = 0; j < h.cols; ++j)
            out += b.contains({i, j}) ? '#' : '.';
        out += '\n';
    }
    return out;
}

std::vector<GridCoord> neighbors(const BlockSet& b, GridCoord v) {
    require_occupied(b, v);
    std::vector<GridCoord> out;
    for (Direction d : kAllDirections) {
        const GridCoord u = step(v, d);
        if (b.contains(u))
            out.push_back(u);
    }
    return out;
}

namespace {

// Unchecked variant for hot loops; v must be occupied.
bool pickable_unchecked(const BlockSet& b, GridCoord v) {
    const bool up = b.contains(step(v, Direction::Up));
    const bool down = b.contains(step(v, Direction::Down));
    const bool left = b.contains(step(v, Direction::Left));
    const bool right = b.contains(step(v, Direction::Right));
    const int degree = up + down + left + right;
    if (degree <= 1)
        return true;
    if (degree == 2)
        return (up && down) || (left && right);
    return false;
}

}  // namespace

bool is_pickable(const BlockSet& b, GridCoord v) {
    require_occupied(b, v);
    return pickable_unchecked(b, v);
}

bool is_knockable(const BlockSet& b, GridCoord v, Direction d) {
    require_occupied(b, v);
    for (GridCoord u = step(v, d); b.inside(u); u = step(u, d))
        if (b.contains(u))
            return false;
    return true;
}

bool is_knockable(const BlockSet& b, GridCoord v) {
    for (Direction d : kAllDirections)
        if (is_knockable(b, v, d))
            return true;
    return false;
}

CleanResult clean(const BlockSet& b) {
    CleanResult result{b, {}};
    BlockSet& g = result.cleaned;

    // Pickability is monotone under deletion, so taking the smallest member of
    // the pickable frontier matches a full lexicographic rescan per deletion.
    std::set<GridCoord> frontier;
    for (GridCoord v : g.occupied())
        if (pickable_unchecked(g, v))
            frontier.insert(v);

    while (!frontier.empty()) {
        const GridCoord v = *frontier.begin();
        frontier.erase(frontier.begin());
        g.erase(v);
        result.picks.push_back(v);
        for (Direction d : kAllDirections) {
            const GridCoord u = step(v, d);
            if (g.contains(u) && pickable_unchecked(g, u))
                frontier.insert(u);
        }
    }
    return result;
}

std::string to_string(GridCoord v) {
    return "(" + std::to_string(v.i) + "," + std::to_string(v.j) + ")";
}

std::string to_string(Direction d) {
    const Delta s = delta(d);
    return "(" + std::to_string(s.di) + "," + std::to_string(s.dj) + ")";
}

}  // namespace kp
