#pragma once

// Puzzles on the size-n triangle (and the MS diamond, which shares the
// Puzzle type under a shape tag).
//
// Board coordinates: the triangle has corners (0,0) bottom-left, (n,0)
// bottom-right and (0,n) apex. Its NW side is the rising edges (0, b), read
// bottom-left to apex; its NE side is the falling edges (i-1, n-i), read
// apex to bottom-right; its S side is the horizontal edges (a, 0), read left
// to right.

#include "schubert/bitstring.hpp"
#include "schubert/gkm.hpp"
#include "schubert/lattice.hpp"
#include "schubert/poly.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace schubert {

enum class Shape : std::uint8_t { triangle, diamond };

/// The cells of the size-n board of the given shape, memoized.
const Region& board_region(Shape shape, int n);

enum class PieceKind : std::uint8_t {
    zero_up,
    zero_down,
    one_up,
    one_down,
    rhombus_ns,
    rhombus_nwse,
    rhombus_swne,
    equivariant,
};

const char* piece_name(PieceKind kind);

/// A placed piece. Rhombi are anchored at their upward half.
struct Piece {
    PieceKind kind;
    Cell anchor;
    friend auto operator<=>(const Piece&, const Piece&) = default;
};

class Puzzle {
public:
    /// Tiles in the board's reading order. Checks that rhombus halves pair up;
    /// edge consistency is left to conflicts().
    Puzzle(Shape shape, int n, TileAssignment tiles);

    Shape shape() const { return shape_; }
    int n() const { return n_; }
    const TileAssignment& tiles() const { return tiles_; }
    const Region& region() const { return board_region(shape_, n_); }

    Tile tile(const Cell& c) const;
    /// Label of an edge as seen from its first incident cell.
    Label label(const Edge& e) const;
    /// Edges whose two incident cells disagree (empty for a genuine puzzle).
    std::vector<Edge> conflicts() const;

    std::vector<Piece> pieces() const;
    bool has_equivariant() const;

    friend auto operator<=>(const Puzzle&, const Puzzle&) = default;

private:
    Shape shape_;
    int n_;
    TileAssignment tiles_;
};

struct Boundary {
    BitString nw;
    BitString ne;
    BitString south;  // left to right
};

/// Boundary of a triangle puzzle.
Boundary boundary(const Puzzle& p);

/// Product over equivariant pieces of y_j - y_i; the piece whose upper half is
/// up(a, b) has i = a+1, j = a+b+1.
Poly puzzle_weight(const Puzzle& p);

struct PuzzleOptions {
    bool ordinary_only = false;
};

/// Every puzzle with boundary (lambda, mu, nu), in search order.
std::vector<Puzzle> enumerate_puzzles(const BitString& lambda, const BitString& mu, const BitString& nu,
                                      PuzzleOptions options = {});

/// Every puzzle with NW side lambda and NE side mu, grouped by the S side.
std::map<BitString, std::vector<Puzzle>> puzzles_by_south(const BitString& lambda, const BitString& mu,
                                                          PuzzleOptions options = {});

/// The product S_lambda S_mu, each entry a sum of puzzle weights.
StructureTable product_via_puzzles(const BitString& lambda, const BitString& mu);

/// Mirror left-right and exchange 0s and 1s.
Puzzle dual_puzzle(const Puzzle& p);

struct EquivariantPiecePresent : std::invalid_argument {
    EquivariantPiecePresent() : std::invalid_argument("equivariant pieces do not survive rotation") {}
};

/// Rotation by 120 degrees clockwise: boundary (lambda, mu, nu) becomes
/// (nu reversed, lambda, mu reversed) in the left-to-right reading of the S side.
Puzzle rotate_puzzle(const Puzzle& p);

struct Scab {
    enum class Side : std::uint8_t { left, right };
    Side side;
    Cell rhombus;   // upward half of the SW-NE rhombus
    Cell triangle;  // the 1-triangle
    Poly weight;
};

struct FluxReport {
    /// Sum over SW-NE rhombi at up(a,b) of y_{a+b+2} - y_{a+b+1}.
    Poly disc_sum;
    int swne_count = 0;
    std::vector<Scab> left_scabs;
    std::vector<Scab> right_scabs;
    /// Right-scab weights minus left-scab weights.
    Poly scab_flux;
};

FluxReport flux_diagnostics(const Puzzle& p);

/// The only puzzle with all three sides lambda, built from the bottom up.
Puzzle unique_diagonal_puzzle(const BitString& lambda);

struct Gash {
    enum class Orientation : std::uint8_t { swne, ew };
    Orientation orientation;
    /// The lowest (swne) or leftmost (ew) edge.
    Edge first;
    int length;
    std::vector<Edge> edges() const;
};

struct GashedPuzzle {
    Puzzle puzzle;
    Gash gash;
    bool left_ext = false;
    bool left_int = false;
    bool right_ext = false;
    bool right_int = false;
    bool in_left() const { return left_ext || left_int; }
    bool in_right() const { return right_ext || right_int; }
};

/// Every gashed puzzle with boundary (lambda, mu, nu), classified.
std::vector<GashedPuzzle> enumerate_gashed(const BitString& lambda, const BitString& mu, const BitString& nu);

/// Sum of puzzle weights for (lambda, mu, nu) by a row-by-row transfer over
/// frontier labels; never builds a puzzle.
Poly count_dp(const BitString& lambda, const BitString& mu, const BitString& nu);

/// count_dp for every S side at once.
std::map<BitString, Poly> count_dp_table(const BitString& lambda, const BitString& mu);

}  // namespace schubert
