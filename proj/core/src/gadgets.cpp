#include "kp/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace kp {

std::vector<GridCoord> face_cells(Face f) {
    const auto [i, j] = f.anchor;
    return {{i, j}, {i, j + 1}, {i + 1, j}, {i + 1, j + 1}};
}

std::vector<Face> enumerate_faces(const BlockSet& b) {
    std::vector<Face> faces;
    const GridHull& h = b.hull();
    for (int i = 0; i + 1 < h.rows; ++i)
        for (int j = 0; j + 1 < h.cols; ++j)
            if (b.contains({i, j}) && b.contains({i, j + 1}) && b.contains({i + 1, j}) &&
                b.contains({i + 1, j + 1}))
                faces.push_back(Face{{i, j}});
    return faces;
}

std::vector<Face> gadget_faces(const Gadget& g) {
    const auto [i, j] = g.anchor;
    switch (g.kind) {
        case GadgetKind::Square: return {Face{{i, j}}};
        case GadgetKind::Horizontal: return {Face{{i, j}}, Face{{i, j + 1}}};
        case GadgetKind::Vertical: return {Face{{i, j}}, Face{{i + 1, j}}};
    }
    return {};
}

std::vector<GridCoord> gadget_cells(const Gadget& g) {
    int rows = 2;
    int cols = 2;
    if (g.kind == GadgetKind::Horizontal)
        cols = 3;
    else if (g.kind == GadgetKind::Vertical)
        rows = 3;
    std::vector<GridCoord> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            cells.push_back({g.anchor.i + r, g.anchor.j + c});
    return cells;
}

std::vector<GridCoord> candidates(const Gadget& g) {
    const auto [i, j] = g.anchor;
    switch (g.kind) {
        case GadgetKind::Square: return gadget_cells(g);
        case GadgetKind::Horizontal: return {{i, j + 1}, {i + 1, j + 1}};
        case GadgetKind::Vertical: return {{i + 1, j}, {i + 1, j + 1}};
    }
    return {};
}

bool gadget_present(const BlockSet& b, const Gadget& g) {
    const auto cells = gadget_cells(g);
    return std::all_of(cells.begin(), cells.end(), [&](GridCoord v) { return b.contains(v); });
}

std::vector<Gadget> enumerate_gadgets(const BlockSet& b) {
    std::vector<Gadget> out;
    const auto faces = enumerate_faces(b);
    for (const Face& f : faces)
        out.push_back({GadgetKind::Square, f.anchor});
    // A two-face gadget is present exactly when both of its faces are.
    for (const Face& f : faces) {
        const Face right{{f.anchor.i, f.anchor.j + 1}};
        if (std::binary_search(faces.begin(), faces.end(), right))
            out.push_back({GadgetKind::Horizontal, f.anchor});
    }
    for (const Face& f : faces) {
        const Face below{{f.anchor.i + 1, f.anchor.j}};
        if (std::binary_search(faces.begin(), faces.end(), below))
            out.push_back({GadgetKind::Vertical, f.anchor});
    }
    return out;
}

bool knock_then_clean_empties(const BlockSet& b, const Gadget& g, GridCoord v) {
    const auto cells = gadget_cells(g);
    if (std::find(cells.begin(), cells.end(), v) == cells.end())
        throw std::invalid_argument(to_string(v) + " is not a cell of " + to_string(g));
    if (!gadget_present(b, g))
        throw std::invalid_argument(to_string(g) + " is not fully occupied");

    BlockSet isolated(b.hull());
    for (GridCoord c : cells)
        if (c != v)
            isolated.insert(c);
    return clean(isolated).cleaned.empty();
}

std::string to_string(GadgetKind k) {
    switch (k) {
        case GadgetKind::Square: return "Square";
        case GadgetKind::Horizontal: return "Horizontal";
        case GadgetKind::Vertical: return "Vertical";
    }
    return "?";
}

std::string to_string(const Gadget& g) {
    return to_string(g.kind) + to_string(g.anchor);
}

}  // namespace kp
