#pragma once

// Geometry of the triangular lattice and a generic edge-label tiling solver.
//
// Lattice points are a*e1 + b*e2 with e1 = (1, 0) and e2 = (1/2, sqrt(3)/2).
// The unit triangle up(a, b) has corners (a, b), (a+1, b), (a, b+1); the unit
// triangle down(a, b) has corners (a+1, b), (a, b+1), (a+1, b+1).
//
// Every puzzle piece is stored as one or two labeled unit triangles. A
// rhombus is two halves whose shared edge carries the internal label
// `rhomb` (or `equiv` for the equivariant piece), so a tiling is exactly a
// consistent labeling of the edges.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace schubert {

struct Point {
    int a = 0;
    int b = 0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class Orient : std::uint8_t { up, down };

struct Cell {
    int a = 0;
    int b = 0;
    Orient orient = Orient::up;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Edge directions: horizontal (E-W), rising ("/", SW-NE), falling ("\", NW-SE).
enum class Dir : std::uint8_t { horizontal, rising, falling };

/// horizontal(a,b) joins (a,b)-(a+1,b); rising(a,b) joins (a,b)-(a,b+1);
/// falling(a,b) joins (a+1,b)-(a,b+1).
struct Edge {
    int a = 0;
    int b = 0;
    Dir dir = Dir::horizontal;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Label : std::uint8_t { zero, one, rhomb, equiv, none };

/// The role a unit triangle plays. ns, swne, nwse are the three ordinary
/// rhombus orientations; equiv is the equivariant piece.
enum class Tile : std::uint8_t { zero, one, ns, equiv, swne, nwse };

inline constexpr std::array<Tile, 6> kTileOrder = {Tile::zero, Tile::one,  Tile::ns,
                                                   Tile::nwse, Tile::swne, Tile::equiv};

char label_char(Label l);
Label label_from_bit(int bit);

/// Sides of a cell. up: {left rising, right falling, bottom horizontal};
/// down: {top horizontal, left falling, right rising}.
std::array<Edge, 3> sides(const Cell& c);

/// Edge labels a tile puts on the sides of a cell, in sides() order.
std::array<Label, 3> tile_labels(Orient orient, Tile tile);

/// The cell sharing the rhombus with c, for rhombus tiles.
Cell rhombus_partner(const Cell& c, Tile tile);

std::array<Point, 3> vertices(const Cell& c);
Cell cell_from_vertices(std::array<Point, 3> pts);
std::array<Point, 2> endpoints(const Edge& e);
Edge edge_from_endpoints(Point p, Point q);

/// A finite set of unit triangles, stored in reading order (top row first,
/// left to right), with its edges indexed.
class Region {
public:
    explicit Region(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }
    bool contains(const Cell& c) const { return cell_index_.count(c) != 0; }
    std::size_t index_of(const Cell& c) const;

    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(const Edge& e) const { return edge_index_.count(e) != 0; }
    std::size_t edge_index(const Edge& e) const;
    /// Edge index of side s of cell i.
    std::size_t side_edge(std::size_t cell, int side) const { return cell_edges_[cell][static_cast<std::size_t>(side)]; }
    /// Boundary edges have exactly one incident cell.
    bool is_boundary(std::size_t edge) const { return incidence_[edge] == 1; }

private:
    std::vector<Cell> cells_;
    std::map<Cell, std::size_t> cell_index_;
    std::vector<Edge> edges_;
    std::map<Edge, std::size_t> edge_index_;
    std::vector<std::array<std::size_t, 3>> cell_edges_;
    std::vector<int> incidence_;
};

/// Constraints for one tiling search.
struct TilingConstraints {
    /// Per edge: a preset label, or Label::none for free edges.
    std::vector<Label> edge_labels;
    /// Labels seen by one side of a cell only, decoupled from the shared edge
    /// (used for gashes). Keyed by (cell index, side).
    std::map<std::pair<std::size_t, int>, Label> side_override;
    bool allow_equivariant = true;
    /// Cells restricted to a single tile.
    std::map<std::size_t, Tile> forced;
};

using TileAssignment = std::vector<Tile>;

/// Visits every tiling of the region consistent with the constraints, by
/// backtracking over cells in reading order with tiles tried in kTileOrder.
void for_each_tiling(const Region& region, const TilingConstraints& constraints,
                     const std::function<void(const TileAssignment&)>& visit);

}  // namespace schubert
