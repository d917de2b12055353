#include "schubert/lattice.hpp"

#include <doctest.h>

#include <algorithm>

using namespace schubert;

TEST_CASE("cell and edge geometry")
{
    const Cell u{2, 1, Orient::up}, d{2, 1, Orient::down};
    CHECK(cell_from_vertices(vertices(u)) == u);
    CHECK(cell_from_vertices(vertices(d)) == d);
    for (const Cell& c : {u, d}) {
        for (const Edge& e : sides(c)) {
            const auto [p, q] = endpoints(e);
            CHECK(edge_from_endpoints(p, q) == e);
            CHECK(edge_from_endpoints(q, p) == e);
        }
    }
    // down(a, b) meets up(a, b), up(a, b+1) and up(a+1, b).
    CHECK(sides(u)[1] == sides(d)[1]);
    CHECK(sides(Cell{2, 2, Orient::up})[2] == sides(d)[0]);
    CHECK(sides(Cell{3, 1, Orient::up})[0] == sides(d)[2]);
}

TEST_CASE("tile labels")
{
    // Triangles carry their label on every side.
    for (Orient o : {Orient::up, Orient::down}) {
        for (Label l : tile_labels(o, Tile::zero)) CHECK(l == Label::zero);
        for (Label l : tile_labels(o, Tile::one)) CHECK(l == Label::one);
    }
    // Each rhombus half has exactly one internal side, and the partner shares it.
    for (Orient o : {Orient::up, Orient::down}) {
        for (Tile t : {Tile::ns, Tile::equiv, Tile::swne, Tile::nwse}) {
            const Cell c{3, 3, o};
            const auto labels = tile_labels(o, t);
            int internal = 0;
            std::size_t side = 0;
            for (std::size_t s = 0; s < 3; ++s) {
                if (labels[s] == Label::rhomb || labels[s] == Label::equiv) {
                    ++internal;
                    side = s;
                }
            }
            CHECK(internal == 1);
            const Cell p = rhombus_partner(c, t);
            CHECK(p.orient != c.orient);
            const auto ps = sides(p);
            CHECK(std::find(ps.begin(), ps.end(), sides(c)[side]) != ps.end());
            CHECK(rhombus_partner(p, t) == c);
        }
    }
}

TEST_CASE("tiling a single triangle with forced boundary")
{
    Region r({Cell{0, 0, Orient::up}});
    CHECK(r.edges().size() == 3);
    for (std::size_t e = 0; e < 3; ++e) CHECK(r.is_boundary(e));

    TilingConstraints free;
    free.edge_labels.assign(3, Label::none);
    int count = 0;
    for_each_tiling(r, free, [&](const TileAssignment&) { ++count; });
    // Only the two triangles fit: a rhombus half would stick out.
    CHECK(count == 2);

    TilingConstraints ones = free;
    ones.edge_labels[r.edge_index(sides(Cell{0, 0, Orient::up})[2])] = Label::one;
    std::vector<TileAssignment> seen;
    for_each_tiling(r, ones, [&](const TileAssignment& t) { seen.push_back(t); });
    CHECK(seen == std::vector<TileAssignment>{{Tile::one}});
}

TEST_CASE("region reading order")
{
    Region r({Cell{0, 0, Orient::up}, Cell{1, 0, Orient::up}, Cell{0, 0, Orient::down}, Cell{0, 1, Orient::up}});
    CHECK(r.cells()[0] == Cell{0, 1, Orient::up});
    CHECK(r.cells()[1] == Cell{0, 0, Orient::up});
    CHECK(r.cells()[2] == Cell{0, 0, Orient::down});
    CHECK(r.cells()[3] == Cell{1, 0, Orient::up});
    CHECK(r.edges().size() == 9);
    std::size_t boundary = 0;
    for (std::size_t e = 0; e < r.edges().size(); ++e) boundary += r.is_boundary(e);
    CHECK(boundary == 6);
}
