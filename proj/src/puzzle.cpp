#include "schubert/puzzle.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <mutex>
#include <string>
#include <unordered_map>

namespace schubert {

namespace {

std::vector<Cell> triangle_cells(int n)
{
    std::vector<Cell> cells;
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a + b <= n - 1; ++a) cells.push_back({a, b, Orient::up});
        for (int a = 0; a + b <= n - 2; ++a) cells.push_back({a, b, Orient::down});
    }
    return cells;
}

// The downward triangle hanging below the S side, corners (0,0), (n,0), (n,-n).
std::vector<Cell> lower_cells(int n)
{
    std::vector<Cell> cells;
    for (int b = -n; b <= -1; ++b) {
        for (int a = 0; a <= n - 1; ++a) {
            if (a + b >= 0) cells.push_back({a, b, Orient::up});
            if (a + b >= -1) cells.push_back({a, b, Orient::down});
        }
    }
    return cells;
}

bool is_rhombus(Tile t) { return t != Tile::zero && t != Tile::one; }

// (cell, side) pairs that contain the edge.
std::vector<std::pair<Cell, int>> incident(const Edge& e)
{
    switch (e.dir) {
    case Dir::horizontal: return {{Cell{e.a, e.b, Orient::up}, 2}, {Cell{e.a, e.b - 1, Orient::down}, 0}};
    case Dir::rising: return {{Cell{e.a, e.b, Orient::up}, 0}, {Cell{e.a - 1, e.b, Orient::down}, 2}};
    case Dir::falling: return {{Cell{e.a, e.b, Orient::up}, 1}, {Cell{e.a, e.b, Orient::down}, 1}};
    }
    return {};
}

Label complement(Label l)
{
    if (l == Label::zero) return Label::one;
    if (l == Label::one) return Label::zero;
    return l;
}

Tile decode_tile(Orient orient, const std::array<Label, 3>& labels)
{
    for (Tile t : kTileOrder) {
        if (tile_labels(orient, t) == labels) return t;
    }
    throw std::invalid_argument("no puzzle piece has these edge labels");
}

// Rebuilds a puzzle on the same board from a relabeling of its edges.
template <class PointMap>
Puzzle transport(const Puzzle& p, PointMap map, bool swap_bits)
{
    const Region& region = p.region();
    std::map<Edge, Label> moved;
    for (const Edge& e : region.edges()) {
        const auto ends = endpoints(e);
        Label l = p.label(e);
        if (swap_bits) l = complement(l);
        moved[edge_from_endpoints(map(ends[0]), map(ends[1]))] = l;
    }
    TileAssignment tiles;
    tiles.reserve(region.size());
    for (const Cell& c : region.cells()) {
        const auto ss = sides(c);
        std::array<Label, 3> labels{};
        for (std::size_t s = 0; s < 3; ++s) labels[s] = moved.at(ss[s]);
        tiles.push_back(decode_tile(c.orient, labels));
    }
    return Puzzle(p.shape(), p.n(), std::move(tiles));
}

void check_triple(const BitString& lambda, const BitString& mu)
{
    if (lambda.size() != mu.size())
        throw std::invalid_argument("puzzle boundary strings must have the same length");
}

TilingConstraints triangle_constraints(const BitString& lambda, const BitString& mu, const BitString* nu)
{
    const int n = lambda.size();
    const Region& region = board_region(Shape::triangle, n);
    TilingConstraints tc;
    tc.edge_labels.assign(region.edges().size(), Label::none);
    for (int i = 1; i <= n; ++i) {
        tc.edge_labels[region.edge_index({0, i - 1, Dir::rising})] = label_from_bit(lambda.at(i));
        tc.edge_labels[region.edge_index({i - 1, n - i, Dir::falling})] = label_from_bit(mu.at(i));
        if (nu) tc.edge_labels[region.edge_index({i - 1, 0, Dir::horizontal})] = label_from_bit(nu->at(i));
    }
    return tc;
}

BitString read_bits(const Puzzle& p, const std::vector<Edge>& edges)
{
    std::string s;
    for (const Edge& e : edges) {
        const Label l = p.label(e);
        if (l != Label::zero && l != Label::one) throw std::logic_error("boundary edge carries an internal label");
        s.push_back(label_char(l));
    }
    return BitString::parse(s);
}

}  // namespace

const Region& board_region(Shape shape, int n)
{
    static std::mutex mutex;
    static std::map<std::pair<Shape, int>, std::unique_ptr<Region>> boards;
    if (n < 1) throw std::invalid_argument("board size must be positive");
    std::lock_guard lock(mutex);
    auto& slot = boards[{shape, n}];
    if (!slot) {
        std::vector<Cell> cells = triangle_cells(n);
        if (shape == Shape::diamond) {
            auto lower = lower_cells(n);
            cells.insert(cells.end(), lower.begin(), lower.end());
        }
        slot = std::make_unique<Region>(std::move(cells));
    }
    return *slot;
}

const char* piece_name(PieceKind kind)
{
    switch (kind) {
    case PieceKind::zero_up: return "0-triangle-up";
    case PieceKind::zero_down: return "0-triangle-down";
    case PieceKind::one_up: return "1-triangle-up";
    case PieceKind::one_down: return "1-triangle-down";
    case PieceKind::rhombus_ns: return "rhombus-NS";
    case PieceKind::rhombus_nwse: return "rhombus-NWSE";
    case PieceKind::rhombus_swne: return "rhombus-SWNE";
    case PieceKind::equivariant: return "equivariant-rhombus";
    }
    return "?";
}

// ---------------------------------------------------------------- Puzzle

Puzzle::Puzzle(Shape shape, int n, TileAssignment tiles) : shape_(shape), n_(n), tiles_(std::move(tiles))
{
    const Region& r = region();
    if (tiles_.size() != r.size())
        throw std::invalid_argument("puzzle needs " + std::to_string(r.size()) + " cells, got " +
                                    std::to_string(tiles_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (!is_rhombus(tiles_[i])) continue;
        const Cell other = rhombus_partner(r.cells()[i], tiles_[i]);
        if (!r.contains(other) || tiles_[r.index_of(other)] != tiles_[i])
            throw std::invalid_argument("unpaired rhombus half in puzzle");
    }
}

Tile Puzzle::tile(const Cell& c) const { return tiles_[region().index_of(c)]; }

Label Puzzle::label(const Edge& e) const
{
    const Region& r = region();
    for (const auto& [c, side] : incident(e)) {
        if (r.contains(c)) return tile_labels(c.orient, tile(c))[static_cast<std::size_t>(side)];
    }
    throw std::out_of_range("edge is not on the board");
}

std::vector<Edge> Puzzle::conflicts() const
{
    const Region& r = region();
    std::vector<Edge> out;
    for (const Edge& e : r.edges()) {
        std::optional<Label> seen;
        for (const auto& [c, side] : incident(e)) {
            if (!r.contains(c)) continue;
            const Label l = tile_labels(c.orient, tile(c))[static_cast<std::size_t>(side)];
            if (seen && *seen != l) out.push_back(e);
            seen = l;
        }
        if (r.is_boundary(r.edge_index(e)) && seen != Label::zero && seen != Label::one) out.push_back(e);
    }
    return out;
}

std::vector<Piece> Puzzle::pieces() const
{
    const Region& r = region();
    std::vector<Piece> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cell& c = r.cells()[i];
        const bool up = c.orient == Orient::up;
        switch (tiles_[i]) {
        case Tile::zero: out.push_back({up ? PieceKind::zero_up : PieceKind::zero_down, c}); break;
        case Tile::one: out.push_back({up ? PieceKind::one_up : PieceKind::one_down, c}); break;
        case Tile::ns:
            if (up) out.push_back({PieceKind::rhombus_ns, c});
            break;
        case Tile::nwse:
            if (up) out.push_back({PieceKind::rhombus_nwse, c});
            break;
        case Tile::swne:
            if (up) out.push_back({PieceKind::rhombus_swne, c});
            break;
        case Tile::equiv:
            if (up) out.push_back({PieceKind::equivariant, c});
            break;
        }
    }
    return out;
}

bool Puzzle::has_equivariant() const
{
    return std::find(tiles_.begin(), tiles_.end(), Tile::equiv) != tiles_.end();
}

Boundary boundary(const Puzzle& p)
{
    if (p.shape() != Shape::triangle) throw std::invalid_argument("boundary: triangle puzzles only");
    const int n = p.n();
    std::vector<Edge> nw, ne, s;
    for (int i = 1; i <= n; ++i) {
        nw.push_back({0, i - 1, Dir::rising});
        ne.push_back({i - 1, n - i, Dir::falling});
        s.push_back({i - 1, 0, Dir::horizontal});
    }
    return {read_bits(p, nw), read_bits(p, ne), read_bits(p, s)};
}

Poly puzzle_weight(const Puzzle& p)
{
    Poly w(1);
    const Region& r = p.region();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cell& c = r.cells()[i];
        if (c.orient == Orient::up && p.tiles()[i] == Tile::equiv)
            w *= Poly::y(c.a + c.b + 1) - Poly::y(c.a + 1);
    }
    return w;
}

// ---------------------------------------------------------------- enumeration

std::vector<Puzzle> enumerate_puzzles(const BitString& lambda, const BitString& mu, const BitString& nu,
                                      PuzzleOptions options)
{
    check_triple(lambda, mu);
    check_triple(lambda, nu);
    const int n = lambda.size();
    std::vector<Puzzle> out;
    if (n == 0) return out;
    TilingConstraints tc = triangle_constraints(lambda, mu, &nu);
    tc.allow_equivariant = !options.ordinary_only;
    for_each_tiling(board_region(Shape::triangle, n), tc,
                    [&](const TileAssignment& t) { out.emplace_back(Shape::triangle, n, t); });
    return out;
}

std::map<BitString, std::vector<Puzzle>> puzzles_by_south(const BitString& lambda, const BitString& mu,
                                                          PuzzleOptions options)
{
    check_triple(lambda, mu);
    const int n = lambda.size();
    std::map<BitString, std::vector<Puzzle>> out;
    if (n == 0) return out;
    TilingConstraints tc = triangle_constraints(lambda, mu, nullptr);
    tc.allow_equivariant = !options.ordinary_only;
    for_each_tiling(board_region(Shape::triangle, n), tc, [&](const TileAssignment& t) {
        Puzzle p(Shape::triangle, n, t);
        BitString south = boundary(p).south;
        out[south].push_back(std::move(p));
    });
    return out;
}

StructureTable product_via_puzzles(const BitString& lambda, const BitString& mu)
{
    StructureTable table{lambda, mu, {}};
    for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
        Poly sum;
        for (const auto& p : list) sum += puzzle_weight(p);
        if (!sum.is_zero()) table.entries.emplace(nu, std::move(sum));
    }
    return table;
}

// ---------------------------------------------------------------- symmetries

Puzzle dual_puzzle(const Puzzle& p)
{
    if (p.shape() != Shape::triangle) throw std::invalid_argument("dual_puzzle: triangle puzzles only");
    const int n = p.n();
    return transport(p, [n](Point q) { return Point{n - q.a - q.b, q.b}; }, true);
}

Puzzle rotate_puzzle(const Puzzle& p)
{
    if (p.shape() != Shape::triangle) throw std::invalid_argument("rotate_puzzle: triangle puzzles only");
    if (p.has_equivariant()) throw EquivariantPiecePresent();
    const int n = p.n();
    return transport(p, [n](Point q) { return Point{q.b, n - q.a - q.b}; }, false);
}

// ---------------------------------------------------------------- diagnostics

FluxReport flux_diagnostics(const Puzzle& p)
{
    if (p.shape() != Shape::triangle) throw std::invalid_argument("flux_diagnostics: triangle puzzles only");
    FluxReport report;
    const Region& r = p.region();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cell& c = r.cells()[i];
        if (c.orient != Orient::up || p.tiles()[i] != Tile::swne) continue;
        ++report.swne_count;
        report.disc_sum += Poly::y(c.a + c.b + 2) - Poly::y(c.a + c.b + 1);
        const Cell below{c.a, c.b - 1, Orient::down};
        if (r.contains(below) && p.tile(below) == Tile::one) {
            Poly w = Poly::y(c.a + c.b + 1) - Poly::y(c.a + 1);
            report.scab_flux -= w;
            report.left_scabs.push_back({Scab::Side::left, c, below, std::move(w)});
        }
        const Cell above{c.a, c.b + 1, Orient::up};
        if (r.contains(above) && p.tile(above) == Tile::one) {
            Poly w = Poly::y(c.a + c.b + 2) - Poly::y(c.a + 1);
            report.scab_flux += w;
            report.right_scabs.push_back({Scab::Side::right, c, above, std::move(w)});
        }
    }
    return report;
}

Puzzle unique_diagonal_puzzle(const BitString& lambda)
{
    const int n = lambda.size();
    const Region& r = board_region(Shape::triangle, n);
    TileAssignment tiles(r.size(), Tile::zero);
    auto set = [&](const Cell& c, Tile t) { tiles[r.index_of(c)] = t; };
    auto get = [&](const Cell& c) { return tiles[r.index_of(c)]; };
    // Triangles sitting on the S side.
    for (int a = 0; a < n; ++a) set({a, 0, Orient::up}, lambda.at(a + 1) ? Tile::one : Tile::zero);
    // Each trough takes the one diamond whose lower edges match.
    for (int b = 0; b + 1 < n; ++b) {
        for (int a = 0; a + b <= n - 2; ++a) {
            const Label sw = tile_labels(Orient::up, get({a, b, Orient::up}))[1];
            const Label se = tile_labels(Orient::up, get({a + 1, b, Orient::up}))[0];
            Tile t;
            if (sw == se)
                t = sw == Label::one ? Tile::one : Tile::zero;
            else
                t = sw == Label::zero ? Tile::ns : Tile::equiv;
            set({a, b, Orient::down}, t);
            set({a, b + 1, Orient::up}, t);
        }
    }
    Puzzle p(Shape::triangle, n, std::move(tiles));
    if (!p.conflicts().empty()) throw std::logic_error("unique_diagonal_puzzle: construction left a conflict");
    return p;
}

// ---------------------------------------------------------------- gashes

std::vector<Edge> Gash::edges() const
{
    std::vector<Edge> out;
    for (int i = 0; i < length; ++i) {
        if (orientation == Orientation::swne)
            out.push_back({first.a, first.b + i, Dir::rising});
        else
            out.push_back({first.a + i, first.b, Dir::horizontal});
    }
    return out;
}

std::vector<GashedPuzzle> enumerate_gashed(const BitString& lambda, const BitString& mu, const BitString& nu)
{
    check_triple(lambda, mu);
    check_triple(lambda, nu);
    const int n = lambda.size();
    std::vector<GashedPuzzle> out;
    if (n < 2) return out;
    const Region& region = board_region(Shape::triangle, n);
    const TilingConstraints base = triangle_constraints(lambda, mu, &nu);

    auto side = [&](const Cell& c, int s) { return std::pair(region.index_of(c), s); };
    auto run = [&](const TilingConstraints& tc, const Gash& gash, auto classify) {
        for_each_tiling(region, tc, [&](const TileAssignment& t) {
            GashedPuzzle gp{Puzzle(Shape::triangle, n, t), gash};
            classify(gp);
            out.push_back(std::move(gp));
        });
    };

    // SW-NE gashes on rising edges (a, b) and (a, b+1).
    for (int b = 0; b + 2 <= n; ++b) {
        for (int a = 0; a + b <= n - 2; ++a) {
            TilingConstraints tc = base;
            if (a == 0) {
                if (lambda.at(b + 1) != 0 || lambda.at(b + 2) != 1) continue;
            } else {
                tc.side_override[side({a - 1, b, Orient::down}, 2)] = Label::zero;
                tc.side_override[side({a - 1, b + 1, Orient::down}, 2)] = Label::one;
            }
            tc.side_override[side({a, b, Orient::up}, 0)] = Label::one;
            tc.side_override[side({a, b + 1, Orient::up}, 0)] = Label::zero;
            const Gash gash{Gash::Orientation::swne, {a, b, Dir::rising}, 2};
            run(tc, gash, [&](GashedPuzzle& gp) {
                gp.left_ext = a == 0;
                gp.left_int = a > 0 && gp.puzzle.tile({a - 1, b, Orient::down}) == Tile::equiv;
                gp.right_int = gp.puzzle.tile({a, b + 1, Orient::up}) == Tile::equiv;
            });
        }
    }

    // E-W gashes on horizontal edges (a .. a+m-1, b); the inner ones are
    // short diagonals of equivariant pieces.
    for (int b = 0; b < n; ++b) {
        for (int a = 0; a + b <= n - 2; ++a) {
            for (int m = 2; a + m - 1 + b <= n - 1; ++m) {
                if (b == 0 && m > 2) break;
                TilingConstraints tc = base;
                for (int i = 1; i + 1 < m; ++i) tc.edge_labels[region.edge_index({a + i, b, Dir::horizontal})] = Label::equiv;
                tc.side_override[side({a, b, Orient::up}, 2)] = Label::zero;
                tc.side_override[side({a + m - 1, b, Orient::up}, 2)] = Label::one;
                if (b == 0) {
                    if (nu.at(a + 1) != 1 || nu.at(a + m) != 0) continue;
                } else {
                    tc.side_override[side({a, b - 1, Orient::down}, 0)] = Label::one;
                    tc.side_override[side({a + m - 1, b - 1, Orient::down}, 0)] = Label::zero;
                }
                const Gash gash{Gash::Orientation::ew, {a, b, Dir::horizontal}, m};
                run(tc, gash, [&](GashedPuzzle& gp) { gp.right_ext = b == 0; });
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- transfer counting

namespace {

// Weight sums for small boards: y-monomials packed six bits per exponent
// (y_1 lowest) with 64-bit coefficients, converted to Poly once at the end.
class PackedPoly {
public:
    static constexpr int kBits = 6;
    static constexpr int kMaxVars = 64 / kBits;

    static PackedPoly one()
    {
        PackedPoly p;
        p.terms_.emplace_back(0, 1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    PackedPoly& operator+=(const PackedPoly& o)
    {
        std::vector<Term> out;
        out.reserve(terms_.size() + o.terms_.size());
        std::merge(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), std::back_inserter(out), by_monomial);
        terms_ = combine(std::move(out));
        return *this;
    }

    /// Product with y_{last+1} - y_first, the weight of an equivariant piece
    /// spanning places first..last+1.
    PackedPoly times_run(int first, int last) const
    {
        PackedPoly p;
        p.terms_.reserve(2 * terms_.size());
        for (const auto& [m, c] : terms_) {
            p.terms_.emplace_back(bump(m, last + 1), c);
            p.terms_.emplace_back(bump(m, first), -c);
        }
        std::sort(p.terms_.begin(), p.terms_.end(), by_monomial);
        p.terms_ = combine(std::move(p.terms_));
        return p;
    }

    Poly to_poly(int vars) const
    {
        Poly out;
        for (const auto& [m, c] : terms_) {
            std::vector<Monomial::Factor> factors;
            for (int i = vars; i >= 1; --i) {
                const auto e = static_cast<std::uint32_t>((m >> (kBits * (i - 1))) & kMask);
                if (e) factors.emplace_back(Var::y(i), e);
            }
            out += Poly(make_monomial(std::move(factors)), Integer(c));
        }
        return out;
    }

private:
    using Term = std::pair<std::uint64_t, std::int64_t>;
    static constexpr std::uint64_t kMask = (std::uint64_t{1} << kBits) - 1;

    static bool by_monomial(const Term& x, const Term& y) { return x.first < y.first; }

    static std::uint64_t bump(std::uint64_t m, int i)
    {
        const int shift = kBits * (i - 1);
        if (((m >> shift) & kMask) == kMask) throw std::overflow_error("transfer counter: exponent overflow");
        return m + (std::uint64_t{1} << shift);
    }

    // Sums coefficients of equal monomials in a sorted list, dropping zeros.
    static std::vector<Term> combine(std::vector<Term> sorted)
    {
        std::size_t w = 0;
        for (std::size_t r = 0; r < sorted.size(); ++r) {
            if (w > 0 && sorted[w - 1].first == sorted[r].first) {
                if (__builtin_add_overflow(sorted[w - 1].second, sorted[r].second, &sorted[w - 1].second))
                    throw std::overflow_error("transfer counter: coefficient overflow");
                if (sorted[w - 1].second == 0) --w;
            } else {
                sorted[w++] = sorted[r];
            }
        }
        sorted.resize(w);
        return sorted;
    }

    std::vector<Term> terms_;
};

// The general fallback for boards too large to pack.
struct PolyWeight {
    Poly p;
    static PolyWeight one() { return {Poly(1)}; }
    bool is_zero() const { return p.is_zero(); }
    PolyWeight& operator+=(const PolyWeight& o)
    {
        p += o.p;
        return *this;
    }
    PolyWeight times_run(int first, int last) const { return {p * (Poly::y(last + 1) - Poly::y(first))}; }
    Poly to_poly(int) const { return p; }
};

// Frontiers pack two bits per label, first position lowest.
using Packed = std::uint64_t;

Label unpack(Packed f, int i) { return static_cast<Label>((f >> (2 * i)) & 3); }

// Rows from the apex down; the state is the labels on the horizontal edges
// under the row just finished.
template <class W>
std::unordered_map<Packed, W> transfer(const BitString& lambda, const BitString& mu)
{
    const int n = lambda.size();
    const int k = lambda.ones();
    std::unordered_map<Packed, W> rows;
    rows.emplace(0, W::one());
    for (int b = n - 1; b >= 0; --b) {
        const int width = n - b;  // up cells in this row
        std::unordered_map<Packed, W> next;
        for (const auto& [above, weight] : rows) {
            // Partial row: bottoms so far in the high bits, the last slanted
            // edge in the low two.
            std::unordered_map<Packed, W> partial;
            partial.emplace(static_cast<Packed>(label_from_bit(lambda.at(b + 1))), weight);
            for (int a = 0; a < width; ++a) {
                std::unordered_map<Packed, W> after;
                for (const auto& [key, w] : partial) {
                    const Label left = static_cast<Label>(key & 3);
                    for (Tile t : kTileOrder) {
                        const auto l = tile_labels(Orient::up, t);
                        if (l[0] != left) continue;
                        if (b == 0 && (l[2] == Label::rhomb || l[2] == Label::equiv)) continue;
                        const Packed bottoms = (key >> 2) | (static_cast<Packed>(l[2]) << (2 * a));
                        const Packed next_key = (bottoms << 2) | static_cast<Packed>(l[1]);
                        if (t == Tile::equiv) {
                            W nw = w.times_run(a + 1, a + b);
                            auto [it, fresh] = after.try_emplace(next_key, std::move(nw));
                            if (!fresh) it->second += w.times_run(a + 1, a + b);
                        } else {
                            auto [it, fresh] = after.try_emplace(next_key, w);
                            if (!fresh) it->second += w;
                        }
                    }
                }
                partial = std::move(after);
                if (a + 1 == width) break;
                after.clear();
                for (const auto& [key, w] : partial) {
                    const Label left = static_cast<Label>(key & 3);
                    for (Tile t : kTileOrder) {
                        const auto l = tile_labels(Orient::down, t);
                        if (l[0] != unpack(above, a) || l[1] != left) continue;
                        const Packed next_key = (key & ~Packed{3}) | static_cast<Packed>(l[2]);
                        auto [it, fresh] = after.try_emplace(next_key, w);
                        if (!fresh) it->second += w;
                    }
                }
                partial = std::move(after);
            }
            const Packed right = static_cast<Packed>(label_from_bit(mu.at(n - b)));
            for (auto& [key, w] : partial) {
                if ((key & 3) != right || w.is_zero()) continue;
                auto [it, fresh] = next.try_emplace(key >> 2, std::move(w));
                if (!fresh) it->second += w;
            }
        }
        // Labels balance across every piece: counting a 0 or E as "zero-like"
        // and a 1 or R as "one-like" from the left, and 0 or R against 1 or E
        // from the right, what the frontier carries plus what is still to come
        // on the two slanted sides must match the S side. Frontiers failing
        // this cannot be completed.
        int left0 = 0, left1 = 0, right0 = 0, right1 = 0;
        for (int i = 1; i <= b; ++i) (lambda.at(i) ? left1 : left0) += 1;
        for (int i = n - b + 1; i <= n; ++i) (mu.at(i) ? right1 : right0) += 1;
        rows.clear();
        for (auto& [f, w] : next) {
            if (w.is_zero()) continue;
            int count[4] = {0, 0, 0, 0};
            for (int i = 0; i < width; ++i) ++count[static_cast<int>(unpack(f, i))];
            const int zero = count[0], one = count[1], rhomb = count[2], equiv = count[3];
            if (zero + equiv + left0 != n - k || one + rhomb + left1 != k || zero + rhomb + right0 != n - k ||
                one + equiv + right1 != k)
                continue;
            rows.emplace(f, std::move(w));
        }
    }
    return rows;
}

// Sum of weights for every S side, as packed frontier -> polynomial.
std::map<Packed, Poly> transfer_table(const BitString& lambda, const BitString& mu)
{
    const int n = lambda.size();
    if (2 * n + 2 > 64) throw std::invalid_argument("count_dp: board too large");
    std::map<Packed, Poly> out;
    if (n <= PackedPoly::kMaxVars) {
        try {
            for (const auto& [f, w] : transfer<PackedPoly>(lambda, mu)) out.emplace(f, w.to_poly(n));
            return out;
        } catch (const std::overflow_error&) {
            out.clear();
        }
    }
    {
        for (auto& [f, w] : transfer<PolyWeight>(lambda, mu)) out.emplace(f, std::move(w.p));
    }
    return out;
}

}  // namespace

Poly count_dp(const BitString& lambda, const BitString& mu, const BitString& nu)
{
    check_triple(lambda, mu);
    check_triple(lambda, nu);
    Packed want = 0;
    for (int i = 1; i <= nu.size(); ++i) want |= static_cast<Packed>(label_from_bit(nu.at(i))) << (2 * (i - 1));
    const auto rows = transfer_table(lambda, mu);
    auto it = rows.find(want);
    return it == rows.end() ? Poly() : it->second;
}

std::map<BitString, Poly> count_dp_table(const BitString& lambda, const BitString& mu)
{
    check_triple(lambda, mu);
    std::map<BitString, Poly> out;
    for (const auto& [f, w] : transfer_table(lambda, mu)) {
        if (w.is_zero()) continue;
        std::string s;
        for (int i = 0; i < lambda.size(); ++i) s.push_back(label_char(unpack(f, i)));
        out.emplace(BitString::parse(s), w);
    }
    return out;
}

}  // namespace schubert
