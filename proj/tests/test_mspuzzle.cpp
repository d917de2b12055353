#include "schubert/mspuzzle.hpp"

#include <doctest.h>

using namespace schubert;

namespace {

BitString B(const char* s) { return BitString::parse(s); }
Poly P(const char* s) { return parse_poly(s); }

}  // namespace

TEST_CASE("worked examples")
{
    CHECK(molev_sagan_constants(B("10"), B("01")) == std::map<BitString, Poly>{{B("10"), Poly(1)}, {B("01"), P("y1 - z1")}});

    const auto e = molev_sagan_constants(B("0101"), B("0101"));
    CHECK(e == std::map<BitString, Poly>{{B("0101"), P("y3 - z1 + y1 - z2")}, {B("1001"), Poly(1)}, {B("0110"), Poly(1)}});

    const auto all = enumerate_ms(B("0101"), B("0101"));
    CHECK(all.size() == 4);
    std::vector<Poly> equivariant;
    for (const auto& p : all)
        if (p.has_equivariant()) equivariant.push_back(ms_weight(p));
    CHECK(equivariant.size() == 2);
    CHECK(std::find(equivariant.begin(), equivariant.end(), P("y3 - z1")) != equivariant.end());
    CHECK(std::find(equivariant.begin(), equivariant.end(), P("y1 - z2")) != equivariant.end());
}

TEST_CASE("boundary and forced tilings")
{
    for (int n = 1; n <= 4; ++n) {
        for (int k : {0, n}) {
            const BitString s = BitString::identity(n, k);
            const auto list = enumerate_ms(s, s);
            CHECK(list.size() == 1);
            CHECK(ms_weight(list.front()) == Poly(1));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& theta : pts) {
                for (const auto& mu : pts) {
                    for (const auto& p : enumerate_ms(theta, mu)) {
                        CHECK(p.shape() == Shape::diamond);
                        CHECK(p.conflicts().empty());
                        const MsBoundary b = ms_boundary(p);
                        CHECK(b.theta == theta);
                        CHECK(b.mu == mu);
                        CHECK(b.ne == BitString::identity(n, k));
                        CHECK(b.nu.ones() == k);
                        const auto fixed = enumerate_ms(theta, mu, b.nu);
                        CHECK(std::find(fixed.begin(), fixed.end(), p) != fixed.end());
                    }
                }
            }
        }
    }
}

TEST_CASE("specializations, exhaustive to n = 4")
{
    for (int n = 1; n <= 4; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            std::map<Var, Poly> zero;
            for (int i = 1; i <= n; ++i) {
                zero[Var::y(i)] = Poly(0);
                zero[Var::z(i)] = Poly(0);
            }
            for (const auto& theta : pts) {
                for (const auto& mu : pts) {
                    const auto e = molev_sagan_constants(theta, mu);
                    const auto c = structure_constants_gkm(theta, mu);
                    std::map<BitString, Poly> at_diagonal;
                    for (const auto& [nu, v] : e) {
                        Poly s = z_to_y(v);
                        if (!s.is_zero()) at_diagonal.emplace(nu, s);
                        if (length(nu) == length(theta) + length(mu)) {
                            const auto ordinary = enumerate_puzzles(theta, mu, nu, {.ordinary_only = true});
                            CHECK(specialize(v, zero) == Poly(static_cast<int>(ordinary.size())));
                        }
                    }
                    CHECK(at_diagonal == c.entries);
                }
            }
        }
    }
}

TEST_CASE("z to y")
{
    CHECK(z_to_y(P("y3 - z1 + y1 - z2")) == P("y3 - y2"));
    CHECK(z_to_y(P("z4^2")) == P("y4^2"));
}
