#include "schubert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

char label_char(Label l)
{
    switch (l) {
    case Label::zero: return '0';
    case Label::one: return '1';
    case Label::rhomb: return 'R';
    case Label::equiv: return 'E';
    case Label::none: break;
    }
    return '.';
}

Label label_from_bit(int bit) { return bit ? Label::one : Label::zero; }

std::array<Edge, 3> sides(const Cell& c)
{
    if (c.orient == Orient::up)
        return {Edge{c.a, c.b, Dir::rising}, Edge{c.a, c.b, Dir::falling}, Edge{c.a, c.b, Dir::horizontal}};
    return {Edge{c.a, c.b + 1, Dir::horizontal}, Edge{c.a, c.b, Dir::falling}, Edge{c.a + 1, c.b, Dir::rising}};
}

std::array<Label, 3> tile_labels(Orient orient, Tile tile)
{
    using L = Label;
    if (orient == Orient::up) {
        // {left, right, bottom}
        switch (tile) {
        case Tile::zero: return {L::zero, L::zero, L::zero};
        case Tile::one: return {L::one, L::one, L::one};
        case Tile::ns: return {L::one, L::zero, L::rhomb};
        case Tile::equiv: return {L::zero, L::one, L::equiv};
        case Tile::swne: return {L::zero, L::rhomb, L::one};
        case Tile::nwse: return {L::rhomb, L::one, L::zero};
        }
    } else {
        // {top, left, right}
        switch (tile) {
        case Tile::zero: return {L::zero, L::zero, L::zero};
        case Tile::one: return {L::one, L::one, L::one};
        case Tile::ns: return {L::rhomb, L::zero, L::one};
        case Tile::equiv: return {L::equiv, L::one, L::zero};
        case Tile::swne: return {L::one, L::rhomb, L::zero};
        case Tile::nwse: return {L::zero, L::one, L::rhomb};
        }
    }
    throw std::logic_error("tile_labels: bad tile");
}

Cell rhombus_partner(const Cell& c, Tile tile)
{
    const bool up = c.orient == Orient::up;
    switch (tile) {
    case Tile::ns:
    case Tile::equiv: return up ? Cell{c.a, c.b - 1, Orient::down} : Cell{c.a, c.b + 1, Orient::up};
    case Tile::swne: return up ? Cell{c.a, c.b, Orient::down} : Cell{c.a, c.b, Orient::up};
    case Tile::nwse: return up ? Cell{c.a - 1, c.b, Orient::down} : Cell{c.a + 1, c.b, Orient::up};
    default: break;
    }
    throw std::invalid_argument("rhombus_partner: not a rhombus tile");
}

std::array<Point, 3> vertices(const Cell& c)
{
    if (c.orient == Orient::up) return {Point{c.a, c.b}, Point{c.a + 1, c.b}, Point{c.a, c.b + 1}};
    return {Point{c.a + 1, c.b}, Point{c.a, c.b + 1}, Point{c.a + 1, c.b + 1}};
}

Cell cell_from_vertices(std::array<Point, 3> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        return std::pair(p.b, p.a) < std::pair(q.b, q.a);
    });
    if (pts[0].b == pts[1].b) return Cell{pts[0].a, pts[0].b, Orient::up};
    return Cell{pts[0].a - 1, pts[0].b, Orient::down};
}

std::array<Point, 2> endpoints(const Edge& e)
{
    switch (e.dir) {
    case Dir::horizontal: return {Point{e.a, e.b}, Point{e.a + 1, e.b}};
    case Dir::rising: return {Point{e.a, e.b}, Point{e.a, e.b + 1}};
    case Dir::falling: return {Point{e.a + 1, e.b}, Point{e.a, e.b + 1}};
    }
    throw std::logic_error("endpoints: bad direction");
}

Edge edge_from_endpoints(Point p, Point q)
{
    if (std::pair(q.b, q.a) < std::pair(p.b, p.a)) std::swap(p, q);
    const int da = q.a - p.a;
    const int db = q.b - p.b;
    if (da == 1 && db == 0) return Edge{p.a, p.b, Dir::horizontal};
    if (da == 0 && db == 1) return Edge{p.a, p.b, Dir::rising};
    if (da == -1 && db == 1) return Edge{q.a, p.b, Dir::falling};
    throw std::invalid_argument("edge_from_endpoints: points are not adjacent");
}

// ---------------------------------------------------------------- Region

Region::Region(std::vector<Cell> cells) : cells_(std::move(cells))
{
    auto key = [](const Cell& c) {
        const int twice_x = 2 * c.a + c.b + (c.orient == Orient::up ? 1 : 2);
        return std::pair(-c.b, twice_x);
    };
    std::sort(cells_.begin(), cells_.end(), [&](const Cell& x, const Cell& y) { return key(x) < key(y); });
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        cell_index_.emplace(cells_[i], i);
        std::array<std::size_t, 3> ids{};
        const auto ss = sides(cells_[i]);
        for (std::size_t s = 0; s < 3; ++s) {
            auto [it, inserted] = edge_index_.try_emplace(ss[s], edges_.size());
            if (inserted) {
                edges_.push_back(ss[s]);
                incidence_.push_back(0);
            }
            ids[s] = it->second;
            ++incidence_[it->second];
        }
        cell_edges_.push_back(ids);
    }
}

std::size_t Region::index_of(const Cell& c) const
{
    auto it = cell_index_.find(c);
    if (it == cell_index_.end()) throw std::out_of_range("Region: cell outside the region");
    return it->second;
}

std::size_t Region::edge_index(const Edge& e) const
{
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw std::out_of_range("Region: edge outside the region");
    return it->second;
}

// ---------------------------------------------------------------- solver

namespace {

class Search {
public:
    Search(const Region& region, const TilingConstraints& constraints,
           const std::function<void(const TileAssignment&)>& visit)
        : region_(region), constraints_(constraints), visit_(visit), labels_(constraints.edge_labels),
          tiles_(region.size(), Tile::zero)
    {
        if (labels_.size() != region.edges().size())
            throw std::invalid_argument("for_each_tiling: one preset label per edge expected");
        overrides_.resize(region.size());
        for (const auto& [key, label] : constraints.side_override) {
            overrides_[key.first][static_cast<std::size_t>(key.second)] = label;
            has_override_[key.first * 3 + static_cast<std::size_t>(key.second)] = true;
        }
        covered_.assign(region.size(), false);
    }

    void run() { place(0); }

private:
    bool allowed(std::size_t cell, Tile tile) const
    {
        if (tile == Tile::equiv && !constraints_.allow_equivariant) return false;
        auto f = constraints_.forced.find(cell);
        return f == constraints_.forced.end() || f->second == tile;
    }

    // Applies the labels of tile at cell; records set edges for undo.
    bool apply(std::size_t cell, Tile tile, std::vector<std::size_t>& touched)
    {
        const auto labels = tile_labels(region_.cells()[cell].orient, tile);
        for (int s = 0; s < 3; ++s) {
            const Label want = labels[static_cast<std::size_t>(s)];
            if (has_override_.count(cell * 3 + static_cast<std::size_t>(s))) {
                if (overrides_[cell][static_cast<std::size_t>(s)] != want) return false;
                continue;
            }
            const std::size_t e = region_.side_edge(cell, s);
            if (labels_[e] == Label::none) {
                if (region_.is_boundary(e) && want != Label::zero && want != Label::one) return false;
                labels_[e] = want;
                touched.push_back(e);
            } else if (labels_[e] != want) {
                return false;
            }
        }
        return true;
    }

    void place(std::size_t cell)
    {
        while (cell < region_.size() && covered_[cell]) ++cell;
        if (cell == region_.size()) {
            visit_(tiles_);
            return;
        }
        const Cell& c = region_.cells()[cell];
        for (Tile tile : kTileOrder) {
            if (!allowed(cell, tile)) continue;
            std::size_t partner = cell;
            const bool rhombus = tile != Tile::zero && tile != Tile::one;
            if (rhombus) {
                const Cell other = rhombus_partner(c, tile);
                if (!region_.contains(other)) continue;
                partner = region_.index_of(other);
                if (partner < cell || covered_[partner] || !allowed(partner, tile)) continue;
            }
            std::vector<std::size_t> touched;
            bool ok = apply(cell, tile, touched);
            if (ok && rhombus) ok = apply(partner, tile, touched);
            if (ok) {
                tiles_[cell] = tile;
                tiles_[partner] = tile;
                covered_[cell] = true;
                covered_[partner] = true;
                place(cell + 1);
                covered_[cell] = false;
                covered_[partner] = false;
            }
            for (std::size_t e : touched) labels_[e] = Label::none;
        }
    }

    const Region& region_;
    const TilingConstraints& constraints_;
    const std::function<void(const TileAssignment&)>& visit_;
    std::vector<Label> labels_;
    std::vector<std::array<Label, 3>> overrides_;
    std::map<std::size_t, bool> has_override_;
    std::vector<bool> covered_;
    TileAssignment tiles_;
};

}  // namespace

void for_each_tiling(const Region& region, const TilingConstraints& constraints,
                     const std::function<void(const TileAssignment&)>& visit)
{
    Search(region, constraints, visit).run();
}

}  // namespace schubert
