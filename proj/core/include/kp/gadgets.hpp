#pragma once

// Unit faces and the three gadget shapes built from them.

#include <compare>
#include <string>
#include <vector>

#include "kp/grid.hpp"

namespace kp {

/// A fully occupied 2x2 block identified by its minimum cell.
struct Face {
    GridCoord anchor;

    friend auto operator<=>(const Face&, const Face&) = default;
};

/// Cells of the 2x2 block anchored at f, lexicographic order.
std::vector<GridCoord> face_cells(Face f);

enum class GadgetKind { Square, Horizontal, Vertical };

/// Square is 2x2, Horizontal 2x3 (two faces side by side), Vertical 3x2
/// (two faces stacked). The anchor is the lexicographically minimum cell.
struct Gadget {
    GadgetKind kind = GadgetKind::Square;
    GridCoord anchor;

    friend auto operator<=>(const Gadget&, const Gadget&) = default;
};

std::vector<Face> enumerate_faces(const BlockSet& b);

std::vector<Face> gadget_faces(const Gadget& g);
std::vector<GridCoord> gadget_cells(const Gadget& g);

/// Cells whose removal destroys every face of the gadget: all four cells of
/// a square, the shared middle column/row of a two-face gadget.
std::vector<GridCoord> candidates(const Gadget& g);

bool gadget_present(const BlockSet& b, const Gadget& g);

/// Every gadget occurrence fully occupied in b, in (kind, anchor) order.
std::vector<Gadget> enumerate_gadgets(const BlockSet& b);

/// Restricts b to the gadget's cells, deletes v, cleans, and reports whether
/// nothing of the gadget remains.
bool knock_then_clean_empties(const BlockSet& b, const Gadget& g, GridCoord v);

std::string to_string(GadgetKind k);
std::string to_string(const Gadget& g);

}  // namespace kp
