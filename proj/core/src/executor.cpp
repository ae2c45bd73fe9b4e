#include "kp/executor.hpp"

#include <algorithm>
#include <charconv>

namespace kp {

std::size_t Plan::knock_count() const {
    return static_cast<std::size_t>(std::count_if(actions.begin(), actions.end(), [](const Action& a) { return a.is_knock(); }));
}

std::string to_string(const Action& a) {
    if (a.is_knock()) {
        const Delta s = delta(a.direction);
        return "K " + std::to_string(a.cell.i) + " " + std::to_string(a.cell.j) + " " + std::to_string(s.di) + " " +
               std::to_string(s.dj);
    }
    return "P " + std::to_string(a.cell.i) + " " + std::to_string(a.cell.j);
}

namespace {

// Faces of b that contain v.
std::vector<Face> faces_through(const BlockSet& b, GridCoord v) {
    std::vector<Face> out;
    for (int di = -1; di <= 0; ++di)
        for (int dj = -1; dj <= 0; ++dj) {
            const Face f{{v.i + di, v.j + dj}};
            const auto cells = face_cells(f);
            if (std::all_of(cells.begin(), cells.end(), [&](GridCoord c) { return b.contains(c); }))
                out.push_back(f);
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool stays_inside_gadget(const BlockSet& b, const Gadget& g, GridCoord v) {
    const auto own = gadget_faces(g);
    for (Face f : faces_through(b, v))
        if (std::find(own.begin(), own.end(), f) == own.end())
            return false;
    return true;
}

// Drops the faces destroyed by deleting v from the cover. A two-face gadget
// that keeps one face degrades to the Square on that face.
void repair_cover(ExactCover& cover, GridCoord v) {
    std::vector<Gadget> kept;
    for (const Gadget& g : cover.gadgets) {
        std::vector<Face> alive;
        for (Face f : gadget_faces(g)) {
            const auto cells = face_cells(f);
            if (std::find(cells.begin(), cells.end(), v) == cells.end())
                alive.push_back(f);
        }
        if (alive.size() == gadget_faces(g).size())
            kept.push_back(g);
        else if (alive.size() == 1)
            kept.push_back({GadgetKind::Square, alive.front().anchor});
    }
    cover.gadgets = std::move(kept);
}

std::vector<Face> covered_faces(const ExactCover& cover) {
    std::vector<Face> out;
    for (const Gadget& g : cover.gadgets)
        for (Face f : gadget_faces(g))
            out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

KnockChoice choose_knock(const ExactCover& cover, const BlockSet& b) {
    std::optional<KnockChoice> fallback;
    for (const Gadget& g : cover.gadgets) {
        if (!gadget_present(b, g))
            throw InvariantError("cover gadget " + to_string(g) + " is not fully occupied");
        for (GridCoord v : candidates(g)) {
            for (Direction d : kAllDirections) {
                if (!is_knockable(b, v, d))
                    continue;
                if (stays_inside_gadget(b, g, v))
                    return {g, v, d};
                if (!fallback)
                    fallback = KnockChoice{g, v, d};
            }
        }
    }
    if (fallback)
        return *fallback;
    throw NoFeasibleKnock("no feasible knock among " + std::to_string(cover.size()) + " cover gadgets");
}

SolveTrace solve_traced(const BlockSet& b) {
    SolveTrace trace;
    trace.plan.hull = b.hull();

    auto initial = clean(b);
    trace.initial_picks = initial.picks;
    trace.cleaned = initial.cleaned;
    for (GridCoord v : initial.picks)
        trace.plan.actions.push_back(Action::pick(v));

    trace.faces = enumerate_faces(trace.cleaned);
    const FaceGraph fg = build_face_graph(trace.faces);
    trace.cover = matching_to_cover(fg.faces, max_matching(fg));

    BlockSet g = trace.cleaned;
    ExactCover remaining = trace.cover;
    while (!g.empty()) {
        if (remaining.gadgets.empty())
            throw InvariantError("cleaned instance with " + std::to_string(g.size()) + " cells has no cover gadget left");
        const KnockChoice choice = choose_knock(remaining, g);
        trace.plan.actions.push_back(Action::knock(choice.cell, choice.direction));
        g.erase(choice.cell);
        repair_cover(remaining, choice.cell);

        auto after = clean(g);
        g = std::move(after.cleaned);
        for (GridCoord v : after.picks)
            trace.plan.actions.push_back(Action::pick(v));

        const auto faces_now = enumerate_faces(g);
        if (faces_now != covered_faces(remaining))
            throw InvariantError("remaining faces diverged from the remaining cover after knocking " +
                                 to_string(choice.cell));
        trace.rounds.push_back({choice, std::move(after.picks), faces_now.size()});
    }
    return trace;
}

Plan solve(const BlockSet& b) {
    return solve_traced(b).plan;
}

ValidationReport validate_plan(const BlockSet& b, const Plan& p) {
    ValidationReport report;
    if (p.hull != b.hull()) {
        report.feasible = false;
        report.violation_index = 0;
        report.reason = "plan/instance mismatch";
        return report;
    }
    BlockSet g = b;
    for (std::size_t t = 0; t < p.actions.size(); ++t) {
        const Action& a = p.actions[t];
        std::string reason;
        if (!g.contains(a.cell))
            reason = "cell not occupied";
        else if (a.is_knock() && !is_knockable(g, a.cell, a.direction))
            reason = "ray blocked";
        else if (!a.is_knock() && !is_pickable(g, a.cell))
            reason = "not pickable";
        if (!reason.empty()) {
            report.feasible = false;
            report.violation_index = t;
            report.reason = reason + " at action " + std::to_string(t) + " (" + to_string(a) + ")";
            report.emptied = false;
            return report;
        }
        if (a.is_knock())
            ++report.knock_count;
        g.erase(a.cell);
    }
    report.emptied = g.empty();
    if (!report.emptied)
        report.reason = std::to_string(g.size()) + " cells remain";
    return report;
}

std::string format_plan(const Plan& p) {
    std::string out = "plan v1 " + std::to_string(p.hull.rows) + " " + std::to_string(p.hull.cols) +
                      " knocks=" + std::to_string(p.knock_count()) + "\n";
    for (const Action& a : p.actions) {
        out += to_string(a);
        out += '\n';
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos)
            return out;
        start = pos + 1;
    }
}

template <typename Int>
bool to_int(std::string_view s, Int& out) {
    if (s.empty())
        return false;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Plan parse_plan(std::string_view text) {
    auto lines = split(text, '\n');
    if (!lines.empty() && lines.back().empty())
        lines.pop_back();
    for (auto& line : lines)
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
    if (lines.empty())
        throw ParseError(1, "malformed plan header: empty input");

    const auto head = split(lines[0], ' ');
    int m = 0;
    int n = 0;
    std::size_t declared = 0;
    if (head.size() != 5 || head[0] != "plan" || head[1] != "v1" || !to_int(head[2], m) || !to_int(head[3], n) ||
        !head[4].starts_with("knocks=") || !to_int(head[4].substr(7), declared))
        throw ParseError(1, "malformed plan header: expected \"plan v1 m n knocks=<k>\"");
    if (m < 1 || n < 1)
        throw ParseError(1, "malformed plan header: dimensions must be >= 1");

    Plan p;
    p.hull = GridHull(m, n);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto tok = split(lines[k], ' ');
        const std::size_t line_no = k + 1;
        GridCoord v;
        if (tok.size() == 3 && tok[0] == "P" && to_int(tok[1], v.i) && to_int(tok[2], v.j)) {
            p.actions.push_back(Action::pick(v));
            continue;
        }
        int di = 0;
        int dj = 0;
        if (tok.size() == 5 && tok[0] == "K" && to_int(tok[1], v.i) && to_int(tok[2], v.j) && to_int(tok[3], di) &&
            to_int(tok[4], dj)) {
            const auto d = direction_from_delta(di, dj);
            if (!d)
                throw ParseError(line_no, "knock direction must be an axis-aligned unit vector");
            p.actions.push_back(Action::knock(v, *d));
            continue;
        }
        throw ParseError(line_no, "malformed action \"" + std::string(lines[k]) + "\"");
    }
    if (p.knock_count() != declared)
        throw ParseError(1, "header declares " + std::to_string(declared) + " knocks, plan contains " +
                                std::to_string(p.knock_count()));
    return p;
}

}  // namespace kp
