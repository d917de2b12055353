#include "schubert/puzzle_io.hpp"

#include "schubert/mspuzzle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace schubert {

PuzzleParseError::PuzzleParseError(const std::string& what, int line_, int column_)
    : std::invalid_argument("line " + std::to_string(line_) + ", column " + std::to_string(column_) + ": " + what),
      line(line_), column(column_)
{
}

char tile_glyph(Tile t)
{
    switch (t) {
    case Tile::zero: return '0';
    case Tile::one: return '1';
    case Tile::ns: return 'V';
    case Tile::equiv: return 'E';
    case Tile::swne: return 'R';
    case Tile::nwse: return 'F';
    }
    return '?';
}

namespace {

std::optional<Tile> tile_from_glyph(char c)
{
    switch (c) {
    case '0': return Tile::zero;
    case '1': return Tile::one;
    case 'V': return Tile::ns;
    case 'E': return Tile::equiv;
    case 'R': return Tile::swne;
    case 'F': return Tile::nwse;
    default: return std::nullopt;
    }
}

const char* shape_name(Shape s) { return s == Shape::triangle ? "triangle" : "diamond"; }

Shape shape_from_name(const std::string& s, int line, int column)
{
    if (s == "triangle") return Shape::triangle;
    if (s == "diamond") return Shape::diamond;
    throw PuzzleParseError("unknown shape '" + s + "'", line, column);
}

// Row sizes of the board, top row first.
std::vector<std::size_t> row_sizes(const Region& r)
{
    std::vector<std::size_t> sizes;
    int current = 0;
    bool first = true;
    for (const Cell& c : r.cells()) {
        if (first || c.b != current) {
            sizes.push_back(0);
            current = c.b;
            first = false;
        }
        ++sizes.back();
    }
    return sizes;
}

std::vector<std::string> rows_of(const Puzzle& p)
{
    std::vector<std::string> rows;
    std::size_t i = 0;
    for (std::size_t len : row_sizes(p.region())) {
        std::string row;
        for (std::size_t j = 0; j < len; ++j) row.push_back(tile_glyph(p.tiles()[i++]));
        rows.push_back(std::move(row));
    }
    return rows;
}

struct Located {
    std::string text;
    int line;
};

// Builds a puzzle from glyph rows, reporting problems at the offending glyph.
Puzzle build(Shape shape, int n, const std::vector<Located>& rows, int end_line)
{
    const Region& region = board_region(shape, n);
    const auto sizes = row_sizes(region);
    if (rows.size() != sizes.size()) {
        const int line = rows.size() > sizes.size() ? rows[sizes.size()].line : end_line;
        throw PuzzleParseError("expected " + std::to_string(sizes.size()) + " rows, found " +
                                   std::to_string(rows.size()),
                               line, 1);
    }
    TileAssignment tiles;
    std::vector<std::pair<int, int>> where;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        for (std::size_t c = 0; c < row.text.size(); ++c) {
            auto t = tile_from_glyph(row.text[c]);
            if (!t) throw PuzzleParseError(std::string("unknown glyph '") + row.text[c] + "'", row.line, int(c) + 1);
            tiles.push_back(*t);
            where.emplace_back(row.line, int(c) + 1);
        }
        if (row.text.size() != sizes[r])
            throw PuzzleParseError("row should have " + std::to_string(sizes[r]) + " cells", row.line,
                                   int(std::min(row.text.size(), sizes[r])) + 1);
    }
    for (std::size_t i = 0; i < tiles.size(); ++i) {
        if (tiles[i] == Tile::zero || tiles[i] == Tile::one) continue;
        const Cell other = rhombus_partner(region.cells()[i], tiles[i]);
        if (!region.contains(other) || tiles[region.index_of(other)] != tiles[i])
            throw PuzzleParseError("rhombus half has no partner", where[i].first, where[i].second);
    }
    Puzzle p(shape, n, std::move(tiles));
    const auto bad = p.conflicts();
    if (!bad.empty()) {
        std::size_t cell = region.size();
        for (std::size_t i = 0; i < region.size() && cell == region.size(); ++i) {
            for (const Edge& e : sides(region.cells()[i])) {
                if (e == bad.front()) {
                    cell = i;
                    break;
                }
            }
        }
        throw PuzzleParseError("pieces disagree on a shared edge", where[cell].first, where[cell].second);
    }
    return p;
}

Puzzle parse_text(std::string_view text)
{
    std::vector<Located> lines;
    {
        int number = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            std::string line(text.substr(start, end - start));
            if (!line.empty() && line.back() == '\r') line.pop_back();
            ++number;
            if (!line.empty()) lines.push_back({line, number});
            if (end == text.size()) break;
            start = end + 1;
        }
    }
    auto header = [&](std::size_t i, const std::string& key) -> std::string {
        if (i >= lines.size()) throw PuzzleParseError("missing '" + key + "' line", lines.empty() ? 1 : lines.back().line + 1, 1);
        const auto& l = lines[i];
        if (l.text.rfind(key + " ", 0) != 0) throw PuzzleParseError("expected '" + key + "'", l.line, 1);
        return l.text.substr(key.size() + 1);
    };
    const std::string version = header(0, "puzzle");
    if (version != std::to_string(kPuzzleFormatVersion))
        throw PuzzleParseError("unsupported puzzle format version " + version, lines[0].line, 8);
    const Shape shape = shape_from_name(header(1, "shape"), lines[1].line, 7);
    const std::string size = header(2, "n");
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(size, &used);
        if (used != size.size() || n < 1) throw std::invalid_argument(size);
    } catch (const std::exception&) {
        throw PuzzleParseError("board size must be a positive integer", lines[2].line, 3);
    }
    const std::vector<Located> rows(lines.begin() + 3, lines.end());
    const int end_line = lines.back().line + 1;
    return build(shape, n, rows, end_line);
}

}  // namespace

std::string to_text(const Puzzle& p)
{
    std::ostringstream out;
    out << "puzzle " << kPuzzleFormatVersion << "\nshape " << shape_name(p.shape()) << "\nn " << p.n() << "\n";
    for (const auto& row : rows_of(p)) out << row << "\n";
    return out.str();
}

nlohmann::json to_json(const Puzzle& p)
{
    return {{"format", "schubert-puzzle"},
            {"version", kPuzzleFormatVersion},
            {"shape", shape_name(p.shape())},
            {"n", p.n()},
            {"rows", rows_of(p)}};
}

Puzzle puzzle_from_json(const nlohmann::json& j)
{
    try {
        if (j.at("format").get<std::string>() != "schubert-puzzle") throw PuzzleParseError("not a puzzle document", 1, 1);
        if (j.at("version").get<int>() != kPuzzleFormatVersion)
            throw PuzzleParseError("unsupported puzzle format version", 1, 1);
        const Shape shape = shape_from_name(j.at("shape").get<std::string>(), 1, 1);
        const int n = j.at("n").get<int>();
        if (n < 1) throw PuzzleParseError("board size must be positive", 1, 1);
        std::vector<Located> rows;
        int line = 1;
        for (const auto& r : j.at("rows")) rows.push_back({r.get<std::string>(), line++});
        return build(shape, n, rows, line);
    } catch (const nlohmann::json::exception& e) {
        throw PuzzleParseError(e.what(), 1, 1);
    }
}

Puzzle parse_puzzle(std::string_view text)
{
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw PuzzleParseError(e.what(), 1, int(e.byte));
        }
        return puzzle_from_json(j);
    }
    return parse_text(text);
}

// ---------------------------------------------------------------- pictures

namespace {

char picture_glyph(Tile t)
{
    switch (t) {
    case Tile::zero: return '0';
    case Tile::one: return '1';
    case Tile::ns: return '|';
    case Tile::equiv: return '#';
    case Tile::swne: return '/';
    case Tile::nwse: return '\\';
    }
    return '?';
}

}  // namespace

std::string render_ascii(const Puzzle& p)
{
    const Region& r = p.region();
    std::ostringstream out;
    int min_col = 0;
    for (const Cell& c : r.cells()) min_col = std::min(min_col, 2 * c.a + c.b + (c.orient == Orient::up ? 1 : 2));
    std::string line;
    int row_b = r.cells().front().b;
    auto flush = [&] {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
        line.clear();
    };
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cell& c = r.cells()[i];
        if (c.b != row_b) {
            flush();
            row_b = c.b;
        }
        const auto col = static_cast<std::size_t>(2 * c.a + c.b + (c.orient == Orient::up ? 1 : 2) - min_col);
        if (line.size() < col + 1) line.resize(col + 1, ' ');
        line[col] = picture_glyph(p.tiles()[i]);
    }
    flush();
    if (p.shape() == Shape::triangle) {
        const Boundary bd = boundary(p);
        out << "NW " << bd.nw << "  NE " << bd.ne << "  S " << bd.south << "\n";
        out << "weight " << to_string(puzzle_weight(p)) << "\n";
    } else {
        const MsBoundary bd = ms_boundary(p);
        out << "SW " << bd.theta << "  NW " << bd.mu << "  SE " << bd.nu << "  NE " << bd.ne << "\n";
        out << "weight " << to_string(ms_weight(p)) << "\n";
    }
    out << "legend: 0 1 triangles, | N-S rhombus, / SW-NE, \\ NW-SE, # equivariant\n";
    return out.str();
}

std::string render_svg(const Puzzle& p)
{
    constexpr double side = 40.0;
    constexpr double margin = 20.0;
    const double h = side * std::sqrt(3.0) / 2.0;
    const int n = p.n();
    const int depth = p.shape() == Shape::triangle ? n : 2 * n;
    auto coord = [&](Point q) {
        return std::pair(margin + (q.a + q.b / 2.0) * side, margin + (n - q.b) * h);
    };
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(2 * margin + n * side) << "\" height=\""
        << fmt(2 * margin + depth * h) << "\">\n";
    out << "<defs><pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
           "<rect width=\"6\" height=\"6\" fill=\"#f2c77c\"/><path d=\"M0,6 L6,0\" stroke=\"#8a5a00\"/>"
           "</pattern></defs>\n";
    for (const Piece& piece : p.pieces()) {
        std::vector<Point> pts;
        const auto first = vertices(piece.anchor);
        pts.assign(first.begin(), first.end());
        const Tile t = p.tile(piece.anchor);
        if (t != Tile::zero && t != Tile::one) {
            for (const Point& q : vertices(rhombus_partner(piece.anchor, t))) {
                if (std::find(pts.begin(), pts.end(), q) == pts.end()) pts.push_back(q);
            }
        }
        double cx = 0, cy = 0;
        std::vector<std::pair<double, double>> xy;
        for (const Point& q : pts) {
            xy.push_back(coord(q));
            cx += xy.back().first;
            cy += xy.back().second;
        }
        cx /= double(xy.size());
        cy /= double(xy.size());
        std::sort(xy.begin(), xy.end(), [&](const auto& u, const auto& v) {
            return std::atan2(u.second - cy, u.first - cx) < std::atan2(v.second - cy, v.first - cx);
        });
        const char* fill = "#d9d9d9";
        if (piece.kind == PieceKind::zero_up || piece.kind == PieceKind::zero_down) fill = "#ffffff";
        if (piece.kind == PieceKind::one_up || piece.kind == PieceKind::one_down) fill = "#4d4d4d";
        if (piece.kind == PieceKind::equivariant) fill = "url(#hatch)";
        out << "<polygon class=\"" << piece_name(piece.kind) << "\" points=\"";
        for (std::size_t i = 0; i < xy.size(); ++i) out << (i ? " " : "") << fmt(xy[i].first) << "," << fmt(xy[i].second);
        out << "\" fill=\"" << fill << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace schubert
