#include "schubert/gkm.hpp"

#include <doctest.h>

using namespace schubert;

namespace {

BitString B(const char* s) { return BitString::parse(s); }
Poly P(const char* s) { return parse_poly(s); }
Poly y(int i) { return Poly::y(i); }

}  // namespace

TEST_CASE("GKM conditions")
{
    CHECK(is_class(Class::constant(4, 2, Poly(1))).ok);

    Class linear(4, 2);
    for (const auto& s : all_strings(4, 2)) {
        Poly v;
        for (int i = 1; i <= 4; ++i)
            if (s.at(i)) v += y(i);
        linear.set(s, v);
    }
    CHECK(is_class(linear).ok);

    Class bad(4, 2);
    bad.set(B("0101"), y(1));
    const auto report = is_class(bad);
    CHECK_FALSE(report.ok);
    bool found = false;
    for (const auto& v : report.violations) {
        if (((v.lambda == B("0101") && v.other == B("1001")) || (v.lambda == B("1001") && v.other == B("0101"))) &&
            v.i == 1 && v.j == 2)
            found = true;
    }
    CHECK(found);
}

TEST_CASE("Weyl action and divided differences")
{
    for (const auto& lambda : all_strings(4, 2)) {
        const Class& s = schubert_class(lambda);
        for (int i = 1; i <= 3; ++i) {
            CHECK(si_action(i, si_action(i, s)) == s);
            const Class d = divided_difference(i, s);
            CHECK(is_class(d).ok);
            if (lambda.at(i) > lambda.at(i + 1)) {
                CHECK(d == schubert_class(lambda.swapped(i, i + 1)));
            } else {
                CHECK(d.is_zero());
                CHECK(si_action(i, s) == s);
            }
        }
    }
    const Class one = Class::constant(4, 2, Poly(1));
    CHECK(si_action(2, one) == one);
    CHECK(divided_difference(2, one).is_zero());
}

TEST_CASE("Schubert classes")
{
    CHECK(schubert_class(BitString::identity(4, 2)) == Class::constant(4, 2, Poly(1)));
    const Class& top = schubert_class(BitString::top(4, 2));
    CHECK(top.support() == std::vector<BitString>{B("1100")});
    CHECK(top.at(B("1100")) == inversion_weight(B("1100")));
    CHECK(schubert_class(B("0101")).at(B("1010")) == y(4) - y(1));

    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            for (const auto& lambda : all_strings(n, k)) {
                const Class& s = schubert_class(lambda);
                CHECK(is_class(s).ok);
                CHECK(s.at(lambda) == inversion_weight(lambda));
                for (const auto& mu : all_strings(n, k)) {
                    const Poly& v = s.at(mu);
                    if (!lattice_leq(lambda, mu)) CHECK(v.is_zero());
                    if (!v.is_zero()) {
                        CHECK(v.is_homogeneous());
                        CHECK(v.degree() == length(lambda));
                    }
                }
            }
        }
    }
}

TEST_CASE("divisor class closed form")
{
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k < n; ++k) {
            const Class& dv = schubert_divisor(n, k);
            CHECK(dv == schubert_class(BitString::divisor(n, k)));
            CHECK(dv.at(BitString::identity(n, k)).is_zero());
            for (const auto& s : all_strings(n, k)) CHECK(dv.at(s) == divisor_restriction(s));
        }
    }
    CHECK(divisor_restriction(B("0101")) == y(3) - y(2));
}

TEST_CASE("basis expansion")
{
    CHECK(expand_in_basis(schubert_class(B("0110"))) == std::map<BitString, Poly>{{B("0110"), Poly(1)}});
    CHECK(expand_in_basis(Class(4, 2)).empty());
    const Class prod = schubert_class(B("0101")) * schubert_class(B("1010"));
    CHECK(expand_in_basis(prod) == std::map<BitString, Poly>{{B("1010"), y(4) - y(1)}, {B("1100"), Poly(1)}});

    Class bad(4, 2);
    bad.set(B("0101"), y(1));
    CHECK_THROWS_AS(expand_in_basis(bad), NonzeroRemainder);
}

TEST_CASE("structure constants, worked examples")
{
    CHECK(structure_constants_gkm(B("0011"), B("0110")).entries == std::map<BitString, Poly>{{B("0110"), Poly(1)}});
    CHECK(structure_constants_gkm(B("010"), B("100")).entries == std::map<BitString, Poly>{{B("100"), y(3) - y(1)}});
    const auto sq = structure_constants_gkm(B("0101"), B("0101"));
    CHECK(sq.entries == std::map<BitString, Poly>{{B("0101"), y(3) - y(2)}, {B("1001"), Poly(1)}, {B("0110"), Poly(1)}});
    CHECK(sq.at(B("1100")).is_zero());
    CHECK(forgetful(sq) == std::map<BitString, Integer>{{B("1001"), 1}, {B("0110"), 1}});

    const auto big = structure_constants_gkm(B("010101"), B("010101"));
    CHECK(forgetful(big) == std::map<BitString, Integer>{{B("110001"), 1}, {B("101010"), 2}, {B("011100"), 1}});
}

TEST_CASE("structure constant laws, exhaustive to n = 5")
{
    for (int n = 1; n <= 5; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto pts = all_strings(n, k);
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    const auto t = structure_constants_gkm(lambda, mu);
                    CHECK(t == StructureTable{lambda, mu, structure_constants_gkm(mu, lambda).entries});
                    CHECK(t.at(lambda) == schubert_class(mu).at(lambda));
                    for (const auto& [nu, c] : t.entries) {
                        CHECK(lattice_leq(lambda, nu));
                        CHECK(lattice_leq(mu, nu));
                        CHECK(c.is_homogeneous());
                        CHECK(c.degree() == length(lambda) + length(mu) - length(nu));
                        CHECK(is_graham_positive(c));
                    }
                    for (const auto& [nu, c] : forgetful(t)) CHECK(length(nu) == length(lambda) + length(mu));
                }
            }
        }
    }
}

TEST_CASE("equivariant Pieri and the recurrence")
{
    for (int n = 2; n <= 5; ++n) {
        for (int k = 1; k < n; ++k) {
            const auto pts = all_strings(n, k);
            const BitString dv = BitString::divisor(n, k);
            for (const auto& lambda : pts) {
                std::map<BitString, Poly> expect;
                if (!divisor_restriction(lambda).is_zero()) expect[lambda] = divisor_restriction(lambda);
                for (const auto& up : covers_up(lambda)) expect[up] = Poly(1);
                CHECK(structure_constants_gkm(dv, lambda).entries == expect);
            }
            for (const auto& lambda : pts) {
                for (const auto& mu : pts) {
                    for (const auto& nu : pts) {
                        const Poly lhs = (divisor_restriction(nu) - divisor_restriction(lambda)) *
                                         structure_constants_gkm(lambda, mu).at(nu);
                        Poly rhs;
                        for (const auto& up : covers_up(lambda)) rhs += structure_constants_gkm(up, mu).at(nu);
                        for (const auto& down : covers_down(nu)) rhs -= structure_constants_gkm(lambda, mu).at(down);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("conjugation")
{
    CHECK(bar(y(1), 4) == -y(4));
    CHECK(bar(y(4) - y(1), 4) == y(4) - y(1));
    CHECK(bar(bar(P("y2*y3 - 2*y1"), 5), 5) == P("y2*y3 - 2*y1"));
    CHECK(swap_y(y(1) - y(2), 1) == y(2) - y(1));
}
