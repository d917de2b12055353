#pragma once

// Puzzle files and pictures.
//
// Text form:
//
//     puzzle 1
//     shape triangle
//     n 3
//     0
//     0V1
//     ...
//
// one line per row of unit triangles, top row first, cells left to right.
// Glyphs: 0 and 1 for triangles, V for N-S rhombus halves, E for the
// equivariant piece, R for SW-NE (rising) and F for NW-SE (falling) halves.

#include "schubert/puzzle.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace schubert {

inline constexpr int kPuzzleFormatVersion = 1;

struct PuzzleParseError : std::invalid_argument {
    PuzzleParseError(const std::string& what, int line, int column);
    int line;
    int column;
};

char tile_glyph(Tile t);

std::string to_text(const Puzzle& p);
nlohmann::json to_json(const Puzzle& p);

/// Reads either form; JSON is recognized by a leading '{'.
Puzzle parse_puzzle(std::string_view text);
Puzzle puzzle_from_json(const nlohmann::json& j);

/// Fixed-glyph picture with the boundary strings underneath.
std::string render_ascii(const Puzzle& p);

/// One polygon per piece; equivariant pieces are hatched.
std::string render_svg(const Puzzle& p);

}  // namespace schubert
