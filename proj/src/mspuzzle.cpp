#include "schubert/mspuzzle.hpp"

#include <stdexcept>
#include <string>

namespace schubert {

namespace {

Edge nw_edge(int, int i) { return {0, i - 1, Dir::rising}; }
Edge ne_edge(int n, int i) { return {i - 1, n - i, Dir::falling}; }
// S to W along the falling line a + b = 0.
Edge sw_edge(int n, int i) { return {n - i, i - n - 1, Dir::falling}; }
// S to E along the rising line a = n.
Edge se_edge(int n, int i) { return {n, i - n - 1, Dir::rising}; }

BitString read_side(const Puzzle& p, Edge (*edge)(int, int))
{
    std::string s;
    for (int i = 1; i <= p.n(); ++i) {
        const Label l = p.label(edge(p.n(), i));
        if (l != Label::zero && l != Label::one) throw std::logic_error("boundary edge carries an internal label");
        s.push_back(label_char(l));
    }
    return BitString::parse(s);
}

}  // namespace

MsBoundary ms_boundary(const Puzzle& p)
{
    if (p.shape() != Shape::diamond) throw std::invalid_argument("ms_boundary: diamond puzzles only");
    return {read_side(p, sw_edge), read_side(p, nw_edge), read_side(p, se_edge), read_side(p, ne_edge)};
}

std::vector<Puzzle> enumerate_ms(const BitString& theta, const BitString& mu, const std::optional<BitString>& nu)
{
    const int n = theta.size();
    if (mu.size() != n || (nu && nu->size() != n))
        throw std::invalid_argument("MS boundary strings must have the same length");
    std::vector<Puzzle> out;
    if (n == 0) return out;
    const Region& region = board_region(Shape::diamond, n);
    const BitString id = BitString::identity(n, mu.ones());
    TilingConstraints tc;
    tc.edge_labels.assign(region.edges().size(), Label::none);
    for (int i = 1; i <= n; ++i) {
        tc.edge_labels[region.edge_index(nw_edge(n, i))] = label_from_bit(mu.at(i));
        tc.edge_labels[region.edge_index(ne_edge(n, i))] = label_from_bit(id.at(i));
        tc.edge_labels[region.edge_index(sw_edge(n, i))] = label_from_bit(theta.at(i));
        if (nu) tc.edge_labels[region.edge_index(se_edge(n, i))] = label_from_bit(nu->at(i));
    }
    for_each_tiling(region, tc, [&](const TileAssignment& t) { out.emplace_back(Shape::diamond, n, t); });
    return out;
}

Poly ms_weight(const Puzzle& p)
{
    Poly w(1);
    const Region& r = p.region();
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Cell& c = r.cells()[i];
        if (c.orient == Orient::up && p.tiles()[i] == Tile::equiv)
            w *= Poly::y(c.a + c.b + 1) - Poly::z(p.n() - c.a);
    }
    return w;
}

std::map<BitString, Poly> molev_sagan_constants(const BitString& theta, const BitString& mu)
{
    std::map<BitString, Poly> sums;
    for (const Puzzle& p : enumerate_ms(theta, mu)) sums[ms_boundary(p).nu] += ms_weight(p);
    std::map<BitString, Poly> out;
    for (auto& [nu, w] : sums) {
        if (!w.is_zero()) out.emplace(nu, std::move(w));
    }
    return out;
}

Poly z_to_y(const Poly& p)
{
    return p.map_vars([](Var v) -> std::pair<Var, int> {
        if (v.kind == Var::Kind::z) return {Var::y(v.index), 1};
        return {v, 1};
    });
}

}  // namespace schubert
