#include "kp/matching.hpp"

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <tuple>

namespace kp {

namespace blossom {

namespace {

class Matcher {
public:
    Matcher(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(n), adj_(static_cast<std::size_t>(n)), mate_(static_cast<std::size_t>(n), kUnmatched) {
        for (const auto& [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (a == b)
                continue;
            adj_[static_cast<std::size_t>(a)].push_back(b);
            adj_[static_cast<std::size_t>(b)].push_back(a);
        }
    }

    std::vector<int> run() {
        // Greedy seed; augmentation below makes the result maximum regardless.
        for (int v = 0; v < n_; ++v) {
            if (mate(v) != kUnmatched)
                continue;
            for (int to : adj_[idx(v)]) {
                if (mate(to) == kUnmatched) {
                    mate_[idx(v)] = to;
                    mate_[idx(to)] = v;
                    break;
                }
            }
        }
        for (int root = 0; root < n_; ++root) {
            if (mate(root) != kUnmatched)
                continue;
            for (int end = find_augmenting_path(root); end != kUnmatched;) {
                const int prev = parent_[idx(end)];
                const int next = mate(prev);
                mate_[idx(end)] = prev;
                mate_[idx(prev)] = end;
                end = next;
            }
        }
        return mate_;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }
    int mate(int v) const { return mate_[idx(v)]; }

    int lowest_common_base(int a, int b) const {
        std::vector<bool> seen(idx(n_), false);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (mate(a) == kUnmatched)
                break;
            a = parent_[idx(mate(a))];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)])
                return b;
            b = parent_[idx(mate(b))];
        }
    }

    void mark_blossom_path(int v, int b, int child) {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = true;
            in_blossom_[idx(base_[idx(mate(v))])] = true;
            parent_[idx(v)] = child;
            child = mate(v);
            v = parent_[idx(mate(v))];
        }
    }

    int find_augmenting_path(int root) {
        used_.assign(idx(n_), false);
        parent_.assign(idx(n_), kUnmatched);
        base_.resize(idx(n_));
        for (int i = 0; i < n_; ++i)
            base_[idx(i)] = i;

        std::deque<int> queue{root};
        used_[idx(root)] = true;
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int to : adj_[idx(v)]) {
                if (base_[idx(v)] == base_[idx(to)] || mate(v) == to)
                    continue;
                if (to == root || (mate(to) != kUnmatched && parent_[idx(mate(to))] != kUnmatched)) {
                    // Odd cycle: contract it onto its base.
                    const int cur_base = lowest_common_base(v, to);
                    in_blossom_.assign(idx(n_), false);
                    mark_blossom_path(v, cur_base, to);
                    mark_blossom_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i) {
                        if (in_blossom_[idx(base_[idx(i)])]) {
                            base_[idx(i)] = cur_base;
                            if (!used_[idx(i)]) {
                                used_[idx(i)] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if (parent_[idx(to)] == kUnmatched) {
                    parent_[idx(to)] = v;
                    if (mate(to) == kUnmatched)
                        return to;
                    used_[idx(mate(to))] = true;
                    queue.push_back(mate(to));
                }
            }
        }
        return kUnmatched;
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_;
    std::vector<int> parent_;
    std::vector<int> base_;
    std::vector<bool> used_;
    std::vector<bool> in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0)
        throw std::invalid_argument("negative vertex count");
    return Matcher(n, edges).run();
}

}  // namespace blossom

FaceGraph build_face_graph(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    FaceGraph fg;
    fg.faces = std::move(faces);
    const auto& fs = fg.faces;
    auto find = [&](Face f) -> std::optional<std::size_t> {
        const auto it = std::lower_bound(fs.begin(), fs.end(), f);
        if (it == fs.end() || *it != f)
            return std::nullopt;
        return static_cast<std::size_t>(it - fs.begin());
    };
    for (std::size_t a = 0; a < fs.size(); ++a) {
        const GridCoord c = fs[a].anchor;
        for (const Face next : {Face{{c.i, c.j + 1}}, Face{{c.i + 1, c.j}}})
            if (const auto b = find(next))
                fg.pair_edges.emplace_back(a, *b);
    }
    std::sort(fg.pair_edges.begin(), fg.pair_edges.end());
    return fg;
}

Matching max_matching(const FaceGraph& fg) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(fg.pair_edges.size());
    for (const auto& [a, b] : fg.pair_edges)
        edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    const auto mate = blossom::maximum_matching(static_cast<int>(fg.faces.size()), edges);

    Matching m;
    for (std::size_t v = 0; v < mate.size(); ++v) {
        const int u = mate[v];
        if (u != blossom::kUnmatched && v < static_cast<std::size_t>(u))
            m.pairs.emplace_back(fg.faces[v], fg.faces[static_cast<std::size_t>(u)]);
    }
    return m;
}

std::optional<Gadget> gadget_for_pair(Face a, Face b) {
    if (b < a)
        std::swap(a, b);
    const GridCoord p = a.anchor;
    const GridCoord q = b.anchor;
    if (p.i == q.i && q.j == p.j + 1)
        return Gadget{GadgetKind::Horizontal, p};
    if (p.j == q.j && q.i == p.i + 1)
        return Gadget{GadgetKind::Vertical, p};
    return std::nullopt;
}

ExactCover matching_to_cover(const std::vector<Face>& faces, const Matching& m) {
    std::set<Face> universe(faces.begin(), faces.end());
    std::set<Face> matched;
    ExactCover cover;
    for (const auto& [a, b] : m.pairs) {
        const auto g = gadget_for_pair(a, b);
        if (!g)
            throw InvariantError("matched faces " + to_string(a.anchor) + " and " + to_string(b.anchor) +
                                 " do not form a 2x3 or 3x2 gadget");
        for (Face f : {a, b}) {
            if (!universe.contains(f))
                throw InvariantError("matched face " + to_string(f.anchor) + " is not in the face set");
            if (!matched.insert(f).second)
                throw InvariantError("face " + to_string(f.anchor) + " is matched twice");
        }
        cover.gadgets.push_back(*g);
    }
    for (Face f : universe)
        if (!matched.contains(f))
            cover.gadgets.push_back({GadgetKind::Square, f.anchor});
    std::sort(cover.gadgets.begin(), cover.gadgets.end(),
              [](const Gadget& x, const Gadget& y) { return std::tie(x.anchor, x.kind) < std::tie(y.anchor, y.kind); });
    return cover;
}

ExactCover optimal_cover(const BlockSet& cleaned) {
    const auto faces = enumerate_faces(cleaned);
    const FaceGraph fg = build_face_graph(faces);
    return matching_to_cover(fg.faces, max_matching(fg));
}

bool is_exact_cover(const std::vector<Face>& faces, const ExactCover& cover) {
    std::vector<Face> covered;
    for (const Gadget& g : cover.gadgets)
        for (Face f : gadget_faces(g))
            covered.push_back(f);
    std::sort(covered.begin(), covered.end());
    if (std::adjacent_find(covered.begin(), covered.end()) != covered.end())
        return false;
    std::vector<Face> expected = faces;
    std::sort(expected.begin(), expected.end());
    return covered == expected;
}

}  // namespace kp
