#include "schubert/puzzle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace schubert;

namespace {

BitString B(const char* s) { return BitString::parse(s); }
Poly y(int i) { return Poly::y(i); }

// Independent search over labels of the interior edges: every cell must
// read as one of the tile patterns. No rhombus bookkeeping is needed because
// an internal edge label already fixes the tile on both sides.
std::set<TileAssignment> brute_force(const BitString& lambda, const BitString& mu, const BitString& nu)
{
    const int n = lambda.size();
    const Region& r = board_region(Shape::triangle, n);
    std::vector<Label> labels(r.edges().size(), Label::none);
    for (int i = 1; i <= n; ++i) {
        labels[r.edge_index(Edge{0, i - 1, Dir::rising})] = label_from_bit(lambda.at(i));
        labels[r.edge_index(Edge{i - 1, n - i, Dir::falling})] = label_from_bit(mu.at(i));
        labels[r.edge_index(Edge{i - 1, 0, Dir::horizontal})] = label_from_bit(nu.at(i));
    }
    std::vector<std::size_t> free;
    for (std::size_t e = 0; e < labels.size(); ++e)
        if (labels[e] == Label::none) free.push_back(e);

    auto tile_of = [&](std::size_t cell) -> std::optional<Tile> {
        std::array<Label, 3> seen;
        for (int s = 0; s < 3; ++s) {
            seen[static_cast<std::size_t>(s)] = labels[r.side_edge(cell, s)];
            if (seen[static_cast<std::size_t>(s)] == Label::none) return Tile::zero;  // undecided
        }
        for (Tile t : kTileOrder)
            if (tile_labels(r.cells()[cell].orient, t) == seen) return t;
        return std::nullopt;
    };
    auto complete = [&](std::size_t cell) {
        for (int s = 0; s < 3; ++s)
            if (labels[r.side_edge(cell, s)] == Label::none) return false;
        return true;
    };

    std::set<TileAssignment> out;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
        for (std::size_t c = 0; c < r.size(); ++c)
            if (complete(c) && !tile_of(c)) return;
        if (i == free.size()) {
            TileAssignment t;
            for (std::size_t c = 0; c < r.size(); ++c) t.push_back(*tile_of(c));
            out.insert(t);
            return;
        }
        for (Label l : {Label::zero, Label::one, Label::rhomb, Label::equiv}) {
            labels[free[i]] = l;
            go(i + 1);
        }
        labels[free[i]] = Label::none;
    };
    go(0);
    return out;
}

Poly weight_sum(const std::vector<Puzzle>& list)
{
    Poly s;
    for (const auto& p : list) s += puzzle_weight(p);
    return s;
}

bool has_weight(const std::vector<Puzzle>& list, const Poly& w)
{
    for (const auto& p : list)
        if (puzzle_weight(p) == w) return true;
    return false;
}

}  // namespace

TEST_CASE("worked examples")
{
    // Only the ordinary constant vanishes for this boundary.
    CHECK(enumerate_puzzles(B("1010"), B("0110"), B("1100"), {.ordinary_only = true}).empty());
    CHECK(weight_sum(enumerate_puzzles(B("1010"), B("0110"), B("1100"))) == y(4) - y(1));
    CHECK(enumerate_puzzles(B("010101"), B("010101"), B("101010")).size() == 2);

    const auto mixed = enumerate_puzzles(B("0101"), B("1010"), B("1010"));
    CHECK(mixed.size() == 2);
    CHECK(has_weight(mixed, y(3) - y(1)));
    CHECK(has_weight(mixed, y(4) - y(3)));
    CHECK(product_via_puzzles(B("0101"), B("1010")).entries ==
          std::map<BitString, Poly>{{B("1010"), y(4) - y(1)}, {B("1100"), Poly(1)}});

    CHECK(enumerate_puzzles(B("010"), B("100"), B("100")).size() == 1);
    CHECK(product_via_puzzles(B("010"), B("100")).entries == std::map<BitString, Poly>{{B("100"), y(3) - y(1)}});
    const auto two = enumerate_puzzles(B("100"), B("010"), B("100"));
    CHECK(two.size() == 2);
    CHECK(has_weight(two, y(2) - y(1)));
    CHECK(has_weight(two, y(3) - y(2)));

    // The weight (y4 - y1)(y5 - y4) belongs to the mirrored boundary; the
    // captioned one carries its conjugate.
    CHECK(has_weight(enumerate_puzzles(B("101010"), B("010110"), B("110100")), (y(4) - y(1)) * (y(5) - y(4))));
    CHECK(has_weight(enumerate_puzzles(B("100101"), B("101010"), B("110100")), (y(6) - y(3)) * (y(3) - y(2))));

    CHECK(product_via_puzzles(B("0011"), B("0011")).entries == std::map<BitString, Poly>{{B("0011"), Poly(1)}});
}

TEST_CASE("puzzles without equivariant pieces give the ordinary constants")
{
    const auto by_south = puzzles_by_south(B("010101"), B("010101"), {.ordinary_only = true});
    std::map<BitString, std::size_t> counts;
    std::size_t total = 0;
    for (const auto& [nu, list] : by_south) {
        counts[nu] = list.size();
        total += list.size();
        for (const auto& p : list) CHECK_FALSE(p.has_equivariant());
    }
    CHECK(total == 4);
    CHECK(counts == std::map<BitString, std::size_t>{{B("110001"), 1}, {B("101010"), 2}, {B("011100"), 1}});
}

TEST_CASE("enumeration agrees with a brute-force edge search, n <= 4")
{
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& nu : pts) {
                        std::set<TileAssignment> found;
                        for (const auto& p : enumerate_puzzles(lambda, mu, nu)) {
                            CHECK(p.conflicts().empty());
                            found.insert(p.tiles());
                        }
                        CHECK(found == brute_force(lambda, mu, nu));
                    }
                }
            }
        }
    }
}

TEST_CASE("boundaries, vanishing and weights")
{
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    const auto by_south = puzzles_by_south(lambda, mu);
                    for (const auto& [nu, list] : by_south) {
                        CHECK(lattice_leq(lambda, nu));
                        CHECK(lattice_leq(mu, nu));
                        CHECK(list == enumerate_puzzles(lambda, mu, nu));
                        for (const auto& p : list) {
                            const Boundary b = boundary(p);
                            CHECK(b.nw == lambda);
                            CHECK(b.ne == mu);
                            CHECK(b.south == nu);
                            CHECK(is_graham_positive(puzzle_weight(p)));
                        }
                        const auto ordinary = enumerate_puzzles(lambda, mu, nu, {.ordinary_only = true});
                        if (!ordinary.empty()) CHECK(length(nu) == length(lambda) + length(mu));
                        CHECK(Integer(ordinary.size()) == constant_part(weight_sum(list)));
                    }
                }
            }
        }
    }
    // Strings from different n-choose-k admit nothing.
    CHECK(enumerate_puzzles(B("0011"), B("0101"), B("0111")).empty());
}

TEST_CASE("diagonal puzzles")
{
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : all_strings(n, k)) {
                const Puzzle p = unique_diagonal_puzzle(lambda);
                CHECK(enumerate_puzzles(lambda, lambda, lambda) == std::vector<Puzzle>{p});
                CHECK(puzzle_weight(p) == inversion_weight(lambda));
                const FluxReport r = flux_diagnostics(p);
                CHECK(r.swne_count == 0);
                CHECK(r.disc_sum.is_zero());
            }
        }
    }
    CHECK(puzzle_weight(unique_diagonal_puzzle(B("1001"))) == (y(2) - y(1)) * (y(3) - y(1)));
    CHECK(puzzle_weight(unique_diagonal_puzzle(B("000111"))) == Poly(1));
}

TEST_CASE("duality")
{
    const auto mixed = enumerate_puzzles(B("0101"), B("1010"), B("1010"));
    std::vector<Poly> dual_weights;
    for (const auto& p : mixed) {
        const Puzzle q = dual_puzzle(p);
        const Boundary b = boundary(q);
        CHECK(b.nw == B("1010"));
        CHECK(b.ne == B("0101"));
        CHECK(b.south == B("1010"));
        dual_weights.push_back(puzzle_weight(q));
    }
    std::sort(dual_weights.begin(), dual_weights.end(), [](const Poly& a, const Poly& b) { return to_string(a) < to_string(b); });
    CHECK(dual_weights == std::vector<Poly>{y(2) - y(1), y(4) - y(2)});

    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                        for (const auto& p : list) {
                            const Puzzle q = dual_puzzle(p);
                            CHECK(q.conflicts().empty());
                            CHECK(dual_puzzle(q) == p);
                            const Boundary b = boundary(q);
                            CHECK(b.nw == dual(mu));
                            CHECK(b.ne == dual(lambda));
                            CHECK(b.south == dual(nu));
                            CHECK(puzzle_weight(q) == bar(puzzle_weight(p), n));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("rotation")
{
    CHECK_THROWS_AS(rotate_puzzle(enumerate_puzzles(B("010"), B("100"), B("100")).front()), EquivariantPiecePresent);

    for (const auto& p : enumerate_puzzles(B("010101"), B("010101"), B("101010"))) {
        const Puzzle r = rotate_puzzle(p);
        CHECK(r.conflicts().empty());
        const Boundary b = boundary(r);
        CHECK(b.nw == B("010101"));
        CHECK(b.ne == B("010101"));
        CHECK(b.south == B("101010"));
        CHECK(rotate_puzzle(rotate_puzzle(r)) == p);
    }

    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& [nu, list] : puzzles_by_south(lambda, mu, {.ordinary_only = true})) {
                        for (const auto& p : list) {
                            const Puzzle r = rotate_puzzle(p);
                            const Boundary b = boundary(r);
                            CHECK(b.nw == reverse(nu));
                            CHECK(b.ne == lambda);
                            CHECK(b.south == reverse(mu));
                            const auto again = enumerate_puzzles(b.nw, b.ne, b.south, {.ordinary_only = true});
                            CHECK(std::find(again.begin(), again.end(), r) != again.end());
                            CHECK(rotate_puzzle(rotate_puzzle(r)) == p);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("flux through SW-NE rhombi and scabs")
{
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) {
            const auto pts = all_strings(n, k);
            std::map<Var, Poly> ones, index;
            for (int i = 1; i <= n; ++i) {
                ones[Var::y(i)] = Poly(1);
                index[Var::y(i)] = Poly(i);
            }
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                        const Poly expected = divisor_restriction(nu) - divisor_restriction(lambda);
                        for (const auto& p : list) {
                            const FluxReport r = flux_diagnostics(p);
                            CHECK(r.disc_sum == expected);
                            CHECK(r.scab_flux == expected);
                            CHECK(r.swne_count == length(nu) - length(lambda));
                            CHECK(specialize(r.disc_sum, ones).is_zero());
                            CHECK(specialize(r.disc_sum, index) == Poly(length(nu) - length(lambda)));
                            Poly flux;
                            for (const auto& s : r.right_scabs) {
                                CHECK(s.side == Scab::Side::right);
                                flux += s.weight;
                            }
                            for (const auto& s : r.left_scabs) {
                                CHECK(s.side == Scab::Side::left);
                                flux -= s.weight;
                            }
                            CHECK(flux == r.scab_flux);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("gashed puzzles")
{
    for (int n = 2; n <= 4; ++n) {
        for (int k = 1; k < n; ++k) {
            const auto pts = all_strings(n, k);
            std::map<std::pair<BitString, BitString>, StructureTable> c;
            for (const auto& a : pts)
                for (const auto& b : pts) c.emplace(std::pair{a, b}, product_via_puzzles(a, b));
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& nu : pts) {
                        Poly left_ext, left_int, right_ext, right_int;
                        for (const auto& g : enumerate_gashed(lambda, mu, nu)) {
                            const Poly w = puzzle_weight(g.puzzle);
                            CHECK(g.gash.edges().size() == static_cast<std::size_t>(g.gash.length));
                            if (g.left_ext) left_ext += w;
                            if (g.left_int) left_int += w;
                            if (g.right_ext) right_ext += w;
                            if (g.right_int) right_int += w;
                        }
                        Poly up, down;
                        for (const auto& l : covers_up(lambda)) up += c.at({l, mu}).at(nu);
                        for (const auto& v : covers_down(nu)) down += c.at({lambda, mu}).at(v);
                        CHECK(left_ext == up);
                        CHECK(right_ext == down);
                        CHECK(right_int - left_int ==
                              c.at({lambda, mu}).at(nu) * (divisor_restriction(nu) - divisor_restriction(lambda)));
                        CHECK(right_ext + right_int == left_ext + left_int);
                    }
                }
            }
        }
    }
}

TEST_CASE("transfer counter")
{
    CHECK(count_dp(B("1010"), B("0110"), B("1100")) == y(4) - y(1));
    CHECK(count_dp(B("1100"), B("0110"), B("0101")).is_zero());
    CHECK(count_dp(B("1001"), B("1001"), B("1001")) == inversion_weight(B("1001")));
    CHECK(count_dp(B("010101"), B("010101"), B("101010")) == Poly(2));
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    CHECK(count_dp_table(lambda, mu) == product_via_puzzles(lambda, mu).entries);
                    for (const auto& nu : pts)
                        CHECK(count_dp(lambda, mu, nu) == weight_sum(enumerate_puzzles(lambda, mu, nu)));
                }
            }
        }
    }
}

TEST_CASE("transfer counter on boards past the packed range")
{
    for (int n : {11, 12}) {
        const auto pts = all_strings(n, 1);
        for (std::size_t i = 0; i < pts.size(); i += 3) {
            for (std::size_t j = 0; j < pts.size(); j += 4)
                CHECK(count_dp_table(pts[i], pts[j]) == product_via_puzzles(pts[i], pts[j]).entries);
        }
    }
}

TEST_CASE("pieces")
{
    const Puzzle p = unique_diagonal_puzzle(B("0011"));
    std::size_t cells = 0;
    for (const auto& piece : p.pieces()) {
        const bool rhombus = piece.kind == PieceKind::rhombus_ns || piece.kind == PieceKind::rhombus_nwse ||
                             piece.kind == PieceKind::rhombus_swne || piece.kind == PieceKind::equivariant;
        cells += rhombus ? 2 : 1;
    }
    CHECK(cells == p.tiles().size());
    CHECK(p.tiles().size() == 16);
    CHECK_THROWS(Puzzle(Shape::triangle, 1, {Tile::ns}));
}
