#include "schubert/verify.hpp"

#include "schubert/gkm.hpp"
#include "schubert/mspuzzle.hpp"
#include "schubert/puzzle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <thread>

namespace schubert {

namespace {

using Failures = std::vector<SuiteFailure>;
using Case = std::function<std::size_t(Failures&)>;  // returns the number of checks made

std::string table_string(const std::map<BitString, Poly>& entries)
{
    if (entries.empty()) return "{}";
    std::string out;
    for (const auto& [nu, c] : entries) {
        if (!out.empty()) out += " | ";
        out += nu.str() + ": " + to_string(c);
    }
    return out;
}

std::string names(std::initializer_list<const BitString*> strings)
{
    std::string out;
    for (const BitString* s : strings) {
        if (!out.empty()) out += " ";
        out += s->str();
    }
    return out;
}

void expect(Failures& f, bool ok, const std::string& inputs, const std::string& lhs, const std::string& rhs,
            const std::string& note)
{
    if (!ok) f.push_back({inputs, lhs, rhs, note});
}

void expect_eq(Failures& f, const Poly& lhs, const Poly& rhs, const std::string& inputs, const std::string& note)
{
    if (!(lhs == rhs)) f.push_back({inputs, to_string(lhs), to_string(rhs), note});
}

// Runs the cases on worker threads; failures come back in case order.
std::size_t run_cases(const std::vector<Case>& cases, unsigned threads, Failures& failures)
{
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, cases.size())));
    std::vector<Failures> per_case(cases.size());
    std::vector<std::size_t> counts(cases.size(), 0);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            try {
                counts[i] = cases[i](per_case[i]);
            } catch (const std::exception& e) {
                per_case[i].push_back({"case " + std::to_string(i), "exception", e.what(), "case threw"});
                counts[i] = 1;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    std::size_t total = 0;
    for (std::size_t i = 0; i < cases.size(); ++i) {
        total += counts[i];
        failures.insert(failures.end(), per_case[i].begin(), per_case[i].end());
    }
    return total;
}

struct Domain {
    std::vector<BitString> points;
    std::vector<std::pair<BitString, BitString>> pairs;
    std::vector<std::tuple<BitString, BitString, BitString>> triples;
    bool sampled = false;
};

Domain make_domain(int n, int k, const SuiteOptions& options)
{
    Domain d;
    d.points = all_strings(n, k);
    const auto& pts = d.points;
    const std::size_t m = pts.size();
    if (n <= options.exhaustive_max_n) {
        for (const auto& a : pts)
            for (const auto& b : pts) d.pairs.emplace_back(a, b);
        for (const auto& [a, b] : d.pairs)
            for (const auto& c : pts) d.triples.emplace_back(a, b, c);
        return d;
    }
    d.sampled = true;
    std::mt19937_64 rng(options.seed ^ (std::uint64_t(n) << 32) ^ std::uint64_t(k));
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t i = 0; i < options.sample_size; ++i) d.pairs.emplace_back(pts[pick(rng)], pts[pick(rng)]);
    for (std::size_t i = 0; i < options.sample_size; ++i)
        d.triples.emplace_back(pts[pick(rng)], pts[pick(rng)], pts[pick(rng)]);
    return d;
}

// Puzzle-side tables d_{lambda mu}^nu, computed once per pair.
class PuzzleTables {
public:
    const StructureTable& get(const BitString& lambda, const BitString& mu)
    {
        const auto key = std::pair(lambda, mu);
        {
            std::shared_lock lock(mutex_);
            auto it = tables_.find(key);
            if (it != tables_.end()) return it->second;
        }
        StructureTable t = product_via_puzzles(lambda, mu);
        std::unique_lock lock(mutex_);
        return tables_.try_emplace(key, std::move(t)).first->second;
    }

    Poly at(const BitString& lambda, const BitString& mu, const BitString& nu) { return get(lambda, mu).at(nu); }

private:
    std::shared_mutex mutex_;
    std::map<std::pair<BitString, BitString>, StructureTable> tables_;
};

Poly covers_sum_left(PuzzleTables& d, const BitString& lambda, const BitString& mu, const BitString& nu)
{
    Poly s;
    for (const auto& lp : covers_up(lambda)) s += d.at(lp, mu, nu);
    return s;
}

Poly covers_sum_south(PuzzleTables& d, const BitString& lambda, const BitString& mu, const BitString& nu)
{
    Poly s;
    for (const auto& np : covers_down(nu)) s += d.at(lambda, mu, np);
    return s;
}

std::map<BitString, Poly> pieri_rhs(const BitString& lambda)
{
    std::map<BitString, Poly> rhs;
    Poly diag = divisor_restriction(lambda);
    if (!diag.is_zero()) rhs.emplace(lambda, std::move(diag));
    for (const auto& up : covers_up(lambda)) rhs.emplace(up, Poly(1));
    return rhs;
}

// ---------------------------------------------------------------- suites

std::vector<Case> suite_gkm(const Domain& d, int n, int k)
{
    std::vector<Case> cases;
    for (const auto& lambda : d.points) {
        cases.push_back([lambda](Failures& f) -> std::size_t {
            const Class& s = schubert_class(lambda);
            const std::string in = lambda.str();
            const GkmReport report = is_class(s);
            expect(f, report.ok, in, "GKM violations", std::to_string(report.violations.size()), "is_class");
            for (const auto& mu : s.space().points()) {
                const Poly& r = s.at(mu);
                if (r.is_zero()) continue;
                expect(f, lattice_leq(lambda, mu), in + " at " + mu.str(), to_string(r), "0", "support above lambda");
                expect(f, r.is_homogeneous() && r.degree() == length(lambda), in + " at " + mu.str(), to_string(r),
                       "degree " + std::to_string(length(lambda)), "homogeneity");
            }
            expect_eq(f, s.at(lambda), inversion_weight(lambda), in, "normalization at lambda");
            return 1;
        });
    }
    if (k > 0 && k < n) {
        cases.push_back([n, k](Failures& f) -> std::size_t {
            try {
                schubert_divisor(n, k);
            } catch (const std::exception& e) {
                f.push_back({"divisor", "closed form", e.what(), "divisor class"});
            }
            return 1;
        });
    }
    return cases;
}

std::vector<Case> suite_pieri(const Domain& d, int n, int k)
{
    std::vector<Case> cases;
    if (k == 0 || k == n) return cases;
    const BitString dv = BitString::divisor(n, k);
    for (const auto& lambda : d.points) {
        cases.push_back([dv, lambda](Failures& f) -> std::size_t {
            const auto rhs = pieri_rhs(lambda);
            const auto gkm = structure_constants_gkm(dv, lambda).entries;
            const auto puz = product_via_puzzles(dv, lambda).entries;
            expect(f, gkm == rhs, lambda.str(), table_string(gkm), table_string(rhs), "equivariant Pieri, GKM side");
            expect(f, puz == rhs, lambda.str(), table_string(puz), table_string(rhs), "equivariant Pieri, puzzle side");
            return 2;
        });
    }
    return cases;
}

std::vector<Case> suite_c_identities(const Domain& d, const std::shared_ptr<PuzzleTables>& tables)
{
    std::vector<Case> cases;
    for (const auto& lambda : d.points) {
        cases.push_back([tables, lambda](Failures& f) -> std::size_t {
            expect_eq(f, tables->at(lambda, lambda, lambda), inversion_weight(lambda), lambda.str(), "(c1)");
            return 1;
        });
    }
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([tables, lambda, mu](Failures& f) -> std::size_t {
            Poly rhs;
            for (const auto& mp : covers_up(mu)) rhs += tables->at(lambda, mp, lambda);
            const Poly lhs = (divisor_restriction(lambda) - divisor_restriction(mu)) * tables->at(lambda, mu, lambda);
            expect_eq(f, lhs, rhs, names({&lambda, &mu}), "(c2)");
            return 1;
        });
    }
    for (const auto& [lambda, mu, nu] : d.triples) {
        cases.push_back([tables, lambda, mu, nu](Failures& f) -> std::size_t {
            const Poly lhs = (divisor_restriction(nu) - divisor_restriction(lambda)) * tables->at(lambda, mu, nu);
            const Poly rhs = covers_sum_left(*tables, lambda, mu, nu) - covers_sum_south(*tables, lambda, mu, nu);
            expect_eq(f, lhs, rhs, names({&lambda, &mu, &nu}), "(c3)");
            return 1;
        });
    }
    return cases;
}

std::vector<Case> suite_oracle_equality(const Domain& d)
{
    std::vector<Case> cases;
    const std::size_t m = d.points.size();
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu, m](Failures& f) -> std::size_t {
            const auto puz = product_via_puzzles(lambda, mu).entries;
            const auto gkm = structure_constants_gkm(lambda, mu).entries;
            expect(f, puz == gkm, names({&lambda, &mu}), table_string(puz), table_string(gkm), "puzzles vs GKM");
            return m;
        });
    }
    return cases;
}

std::vector<Case> suite_positivity(const Domain& d)
{
    std::vector<Case> cases;
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu](Failures& f) -> std::size_t {
            const auto table = structure_constants_gkm(lambda, mu);
            for (const auto& [nu, c] : table.entries) {
                const std::string in = names({&lambda, &mu, &nu});
                expect(f, is_graham_positive(c), in, to_string(c), "Graham-positive", "positivity");
                expect(f, c.is_homogeneous() && c.degree() == length(lambda) + length(mu) - length(nu), in,
                       to_string(c), "degree l(lambda)+l(mu)-l(nu)", "degree law");
                expect(f, lattice_leq(lambda, nu) && lattice_leq(mu, nu), in, to_string(c), "0", "vanishing");
            }
            expect_eq(f, table.at(lambda), schubert_class(mu).at(lambda), names({&lambda, &mu}), "diagonal law");
            for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                for (const auto& p : list) {
                    const Poly w = puzzle_weight(p);
                    expect(f, is_graham_positive(w), names({&lambda, &mu, &nu}), to_string(w), "Graham-positive",
                           "puzzle weight positivity");
                }
            }
            return std::max<std::size_t>(1, table.entries.size());
        });
    }
    return cases;
}

std::vector<Case> suite_duality(const Domain& d, int n)
{
    std::vector<Case> cases;
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu, n](Failures& f) -> std::size_t {
            const auto direct = structure_constants_gkm(lambda, mu).entries;
            const auto swapped = structure_constants_gkm(dual(mu), dual(lambda)).entries;
            std::map<BitString, Poly> mapped;
            for (const auto& [nu, c] : swapped) mapped.emplace(dual(nu), bar(c, n));
            expect(f, direct == mapped, names({&lambda, &mu}), table_string(direct), table_string(mapped),
                   "c = conjugate of c for the dual strings");
            std::size_t checks = 1;
            for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                for (const auto& p : list) {
                    ++checks;
                    const Puzzle q = dual_puzzle(p);
                    const Boundary b = boundary(q);
                    const std::string in = names({&lambda, &mu, &nu});
                    expect(f, b.nw == dual(mu) && b.ne == dual(lambda) && b.south == dual(nu), in,
                           b.nw.str() + " " + b.ne.str() + " " + b.south.str(), "dual boundary", "dual puzzle");
                    expect_eq(f, puzzle_weight(q), bar(puzzle_weight(p), n), in, "dual puzzle weight");
                    expect(f, dual_puzzle(q) == p, in, "dual twice", "identity", "dual involution");
                }
            }
            return checks;
        });
    }
    return cases;
}

std::vector<Case> suite_flux(const Domain& d)
{
    std::vector<Case> cases;
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu](Failures& f) -> std::size_t {
            std::size_t checks = 0;
            for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                const Poly expected = divisor_restriction(nu) - divisor_restriction(lambda);
                const int dl = length(nu) - length(lambda);
                const std::string in = names({&lambda, &mu, &nu});
                for (const auto& p : list) {
                    ++checks;
                    const FluxReport r = flux_diagnostics(p);
                    expect_eq(f, r.disc_sum, expected, in, "disc sum");
                    expect_eq(f, r.scab_flux, expected, in, "right minus left scab flux");
                    expect(f, r.swne_count == dl, in, std::to_string(r.swne_count), std::to_string(dl), "SW-NE count");
                    std::map<Var, Poly> ones, index;
                    for (int i = 1; i <= lambda.size(); ++i) {
                        ones[Var::y(i)] = Poly(1);
                        index[Var::y(i)] = Poly(i);
                    }
                    expect_eq(f, specialize(r.disc_sum, ones), Poly(0), in, "disc sum at y = 1");
                    expect_eq(f, specialize(r.disc_sum, index), Poly(dl), in, "disc sum at y_i = i");
                }
            }
            return std::max<std::size_t>(1, checks);
        });
    }
    return cases;
}

std::vector<Case> suite_gash(const Domain& d, const std::shared_ptr<PuzzleTables>& tables)
{
    std::vector<Case> cases;
    for (const auto& [lambda, mu, nu] : d.triples) {
        cases.push_back([tables, lambda, mu, nu](Failures& f) -> std::size_t {
            Poly left_ext, left_int, right_ext, right_int;
            for (const auto& g : enumerate_gashed(lambda, mu, nu)) {
                const Poly w = puzzle_weight(g.puzzle);
                if (g.left_ext) left_ext += w;
                if (g.left_int) left_int += w;
                if (g.right_ext) right_ext += w;
                if (g.right_int) right_int += w;
            }
            const std::string in = names({&lambda, &mu, &nu});
            expect_eq(f, left_ext, covers_sum_left(*tables, lambda, mu, nu), in, "(left-ext)");
            expect_eq(f, right_ext, covers_sum_south(*tables, lambda, mu, nu), in, "(right-ext)");
            expect_eq(f, right_int - left_int,
                      tables->at(lambda, mu, nu) * (divisor_restriction(nu) - divisor_restriction(lambda)), in,
                      "(telescope)");
            expect_eq(f, right_ext + right_int, left_ext + left_int, in, "(massage)");
            return 4;
        });
    }
    return cases;
}

std::vector<Case> suite_ordinary(const Domain& d, int n, int k)
{
    std::vector<Case> cases;
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu](Failures& f) -> std::size_t {
            const auto reduced = forgetful(structure_constants_gkm(lambda, mu));
            std::map<BitString, Integer> counted;
            for (const auto& [nu, list] : puzzles_by_south(lambda, mu, {.ordinary_only = true}))
                counted.emplace(nu, Integer(list.size()));
            auto show = [](const std::map<BitString, Integer>& m) {
                std::map<BitString, Poly> p;
                for (const auto& [nu, c] : m) p.emplace(nu, Poly(c));
                return table_string(p);
            };
            expect(f, reduced == counted, names({&lambda, &mu}), show(reduced), show(counted),
                   "y := 0 against equivariant-free puzzles");
            for (const auto& [nu, c] : counted) {
                expect(f, length(nu) == length(lambda) + length(mu), names({&lambda, &mu, &nu}), c.str(), "0",
                       "ordinary constants need l(nu) = l(lambda) + l(mu)");
            }
            return 1;
        });
    }
    if (k > 0 && k < n) {
        const BitString dv = BitString::divisor(n, k);
        for (const auto& lambda : d.points) {
            cases.push_back([dv, lambda](Failures& f) -> std::size_t {
                std::map<BitString, Integer> want;
                for (const auto& up : covers_up(lambda)) want.emplace(up, Integer(1));
                expect(f, forgetful(structure_constants_gkm(dv, lambda)) == want, lambda.str(), "S_dv S_lambda",
                       "sum of covers", "ordinary Pieri");
                return 1;
            });
        }
    }
    return cases;
}

std::vector<Case> suite_ms(const Domain& d)
{
    std::vector<Case> cases;
    for (const auto& [theta, mu] : d.pairs) {
        cases.push_back([theta, mu](Failures& f) -> std::size_t {
            const auto e = molev_sagan_constants(theta, mu);
            std::map<BitString, Poly> at_y;
            for (const auto& [nu, c] : e) {
                Poly v = z_to_y(c);
                if (!v.is_zero()) at_y.emplace(nu, std::move(v));
            }
            const auto c = structure_constants_gkm(theta, mu).entries;
            expect(f, at_y == c, names({&theta, &mu}), table_string(at_y), table_string(c), "e at z := y");
            for (const auto& [nu, value] : e) {
                if (length(nu) != length(theta) + length(mu)) continue;
                const std::size_t ordinary = enumerate_puzzles(theta, mu, nu, {.ordinary_only = true}).size();
                expect_eq(f, Poly(constant_part(value)), Poly(Integer(ordinary)), names({&theta, &mu, &nu}),
                          "e at y = z = 0 against ordinary puzzles");
            }
            return 1;
        });
    }
    return cases;
}

std::vector<Case> suite_dp(const Domain& d)
{
    std::vector<Case> cases;
    const std::size_t m = d.points.size();
    for (const auto& [lambda, mu] : d.pairs) {
        cases.push_back([lambda, mu, m](Failures& f) -> std::size_t {
            std::map<BitString, Poly> enumerated;
            for (const auto& [nu, list] : puzzles_by_south(lambda, mu)) {
                Poly s;
                for (const auto& p : list) s += puzzle_weight(p);
                if (!s.is_zero()) enumerated.emplace(nu, std::move(s));
            }
            std::map<BitString, Poly> dp;
            for (auto& [nu, w] : count_dp_table(lambda, mu)) {
                if (!w.is_zero()) dp.emplace(nu, w);
            }
            expect(f, dp == enumerated, names({&lambda, &mu}), table_string(dp), table_string(enumerated),
                   "count_dp against enumeration");
            for (const auto& [nu, w] : enumerated)
                expect_eq(f, count_dp(lambda, mu, nu), w, names({&lambda, &mu, &nu}), "count_dp single triple");
            return m;
        });
    }
    return cases;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {"gkm",        "pieri",  "c-identities", "oracle-equality",
                                                   "positivity", "duality", "flux",        "gash-identities",
                                                   "ordinary",   "ms",      "dp-equivalence"};
    return names;
}

SuiteReport run_suite(const std::string& name, int n, int k, const SuiteOptions& options)
{
    const auto& known = suite_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) throw UnknownSuite(name);
    if (n < 1 || k < 0 || k > n) throw std::invalid_argument("run_suite: need n >= 1 and 0 <= k <= n");

    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = name;
    report.n = n;
    report.k = k;
    const Domain d = make_domain(n, k, options);
    report.sampled = d.sampled;
    auto tables = std::make_shared<PuzzleTables>();

    std::vector<Case> cases;
    if (name == "gkm") cases = suite_gkm(d, n, k);
    else if (name == "pieri") cases = suite_pieri(d, n, k);
    else if (name == "c-identities") cases = suite_c_identities(d, tables);
    else if (name == "oracle-equality") cases = suite_oracle_equality(d);
    else if (name == "positivity") cases = suite_positivity(d);
    else if (name == "duality") cases = suite_duality(d, n);
    else if (name == "flux") cases = suite_flux(d);
    else if (name == "gash-identities") cases = suite_gash(d, tables);
    else if (name == "ordinary") cases = suite_ordinary(d, n, k);
    else if (name == "ms") cases = suite_ms(d);
    else cases = suite_dp(d);

    report.vacuous = cases.empty();
    report.cases = run_cases(cases, options.threads, report.failures);
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------- fixtures

SuiteReport regression_fixtures()
{
    const auto start = std::chrono::steady_clock::now();
    SuiteReport report;
    report.suite = "fixtures";
    Failures& f = report.failures;
    auto B = [](const char* s) { return BitString::parse(s); };
    auto P = [](const char* s) { return parse_poly(s); };
    auto table = [&](std::initializer_list<std::pair<const char*, const char*>> entries) {
        std::map<BitString, Poly> m;
        for (const auto& [nu, c] : entries) m.emplace(B(nu), P(c));
        return m;
    };
    auto check_table = [&](const std::map<BitString, Poly>& got, const std::map<BitString, Poly>& want,
                           const std::string& what) {
        ++report.cases;
        expect(f, got == want, what, table_string(got), table_string(want), what);
    };
    auto check = [&](bool ok, const std::string& what) {
        ++report.cases;
        expect(f, ok, what, "false", "true", what);
    };
    auto weights = [](const std::vector<Puzzle>& list) {
        std::vector<std::string> w;
        for (const auto& p : list) w.push_back(to_string(puzzle_weight(p)));
        std::sort(w.begin(), w.end());
        return w;
    };

    // strings
    check(dual(B("01100")) == B("11001"), "dual 01100");
    check(reverse(B("01101")) == B("10110"), "reverse 01101");
    {
        const auto a = covers_up(B("101101"));
        const auto b = covers_up(B("110011"));
        check(std::count(a.begin(), a.end(), B("110101")) == 1 && std::count(b.begin(), b.end(), B("110101")) == 1,
              "110101 covers 101101 and 110011");
    }

    // localization side
    check(schubert_class(B("0101")).at(B("1010")) == P("y4 - y1"), "S0101 at 1010");
    check_table(structure_constants_gkm(B("0101"), B("1010")).entries, table({{"1010", "y4 - y1"}, {"1100", "1"}}),
                "GKM 0101 * 1010");
    check_table(structure_constants_gkm(B("010"), B("100")).entries, table({{"100", "y3 - y1"}}), "GKM 010 * 100");
    check_table(structure_constants_gkm(B("0101"), B("0101")).entries,
                table({{"0101", "y3 - y2"}, {"1001", "1"}, {"0110", "1"}}), "GKM 0101 * 0101");

    // (010101)^2 in Gr(3, 6)
    {
        const auto by_south = puzzles_by_south(B("010101"), B("010101"));
        std::size_t ordinary_count = 0;
        for (const auto& [nu, list] : by_south)
            for (const auto& p : list) ordinary_count += !p.has_equivariant();
        check(ordinary_count == 4, "(010101)^2 uses four ordinary puzzles");
        std::map<BitString, Integer> ordinary = forgetful(product_via_puzzles(B("010101"), B("010101")));
        check(ordinary == std::map<BitString, Integer>{{B("110001"), 1}, {B("101010"), 2}, {B("011100"), 1}},
              "(010101)^2 at y = 0");
        check(enumerate_puzzles(B("010101"), B("010101"), B("101010")).size() == 2, "two puzzles for 101010");
    }

    // 0101 * 1010, one coefficient split over two puzzles
    {
        check_table(product_via_puzzles(B("0101"), B("1010")).entries, table({{"1010", "y4 - y1"}, {"1100", "1"}}),
                    "puzzles 0101 * 1010");
        const auto list = enumerate_puzzles(B("0101"), B("1010"), B("1010"));
        check(weights(list) == std::vector<std::string>{"y3 - y1", "y4 - y3"}, "y4 - y1 split over two puzzles");
        std::vector<Puzzle> duals;
        for (const auto& p : list) duals.push_back(dual_puzzle(p));
        check(weights(duals) == std::vector<std::string>{"y2 - y1", "y4 - y2"}, "dual puzzles split y4 - y1");
    }

    // (0101)^2
    {
        const auto by_south = puzzles_by_south(B("0101"), B("0101"));
        std::size_t total = 0;
        for (const auto& [nu, list] : by_south) total += list.size();
        check(total == 3, "(0101)^2 uses three puzzles");
        check_table(product_via_puzzles(B("0101"), B("0101")).entries,
                    table({{"0101", "y3 - y2"}, {"1001", "1"}, {"0110", "1"}}), "puzzles (0101)^2");
    }

    // 010 * 100 and 100 * 010 in Gr(1, 3)
    {
        check(enumerate_puzzles(B("010"), B("100"), B("100")).size() == 1, "010 * 100 by one puzzle");
        check(weights(enumerate_puzzles(B("100"), B("010"), B("100"))) ==
                  std::vector<std::string>{"y2 - y1", "y3 - y2"},
              "100 * 010 by two puzzles");
        check_table(product_via_puzzles(B("100"), B("010")).entries, table({{"100", "y3 - y1"}}), "puzzles 100 * 010");
    }

    // (1010, 0110, 1100): only the ordinary constant vanishes; the equivariant
    // one is y4 - y1, carried by three puzzles, as both oracles agree.
    {
        check(enumerate_puzzles(B("1010"), B("0110"), B("1100"), {.ordinary_only = true}).empty(),
              "no ordinary puzzles for (1010, 0110, 1100)");
        check(weights(enumerate_puzzles(B("1010"), B("0110"), B("1100"))) ==
                  std::vector<std::string>{"y2 - y1", "y3 - y2", "y4 - y3"},
              "(1010, 0110, 1100) by three equivariant puzzles");
        check(structure_constants_gkm(B("1010"), B("0110")).at(B("1100")) == P("y4 - y1"),
              "c_{1010,0110}^{1100} = y4 - y1");
    }

    // A two-piece weight: (y4 - y1)(y5 - y4) arises for the dual boundary,
    // and its conjugate for (100101, 101010, 110100).
    {
        const Poly pictured = (Poly::y(4) - Poly::y(1)) * (Poly::y(5) - Poly::y(4));
        const auto dual_w = weights(enumerate_puzzles(B("101010"), B("010110"), B("110100")));
        check(std::count(dual_w.begin(), dual_w.end(), to_string(pictured)) == 1,
              "puzzle of weight (y4 - y1)(y5 - y4) for (101010, 010110, 110100)");
        const auto w = weights(enumerate_puzzles(B("100101"), B("101010"), B("110100")));
        check(std::count(w.begin(), w.end(), to_string(bar(pictured, 6))) == 1,
              "puzzle of weight (y6 - y3)(y3 - y2) for (100101, 101010, 110100)");
    }

    // diagonal puzzles
    check(puzzle_weight(unique_diagonal_puzzle(B("1001"))) == (Poly::y(2) - Poly::y(1)) * (Poly::y(3) - Poly::y(1)), "diagonal puzzle of 1001");
    check(enumerate_puzzles(B("1001"), B("1001"), B("1001")) == std::vector<Puzzle>{unique_diagonal_puzzle(B("1001"))},
          "1001 diagonal is unique");

    // MS tables for (0101, 0101) and (10, 01)
    {
        check_table(molev_sagan_constants(B("0101"), B("0101")),
                    table({{"0101", "y3 - z1 + y1 - z2"}, {"1001", "1"}, {"0110", "1"}}), "MS (0101, 0101)");
        const auto ms = enumerate_ms(B("0101"), B("0101"));
        check(ms.size() == 4, "four MS-puzzles");
        std::vector<std::string> w;
        for (const auto& p : ms) {
            if (p.has_equivariant()) w.push_back(to_string(ms_weight(p)));
        }
        std::sort(w.begin(), w.end());
        std::vector<std::string> want = {to_string(P("y1 - z2")), to_string(P("y3 - z1"))};
        std::sort(want.begin(), want.end());
        check(w == want, "MS weights y3 - z1 and y1 - z2");
        check_table(molev_sagan_constants(B("10"), B("01")), table({{"10", "1"}, {"01", "y1 - z1"}}), "MS (10, 01)");
    }

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------- reports

nlohmann::json SuiteReport::to_json() const
{
    nlohmann::json j = {{"suite", suite},  {"n", n},           {"k", k},
                        {"cases", cases},  {"sampled", sampled}, {"vacuous", vacuous},
                        {"passed", passed()}, {"seconds", seconds}};
    j["failures"] = nlohmann::json::array();
    for (const auto& fl : failures)
        j["failures"].push_back({{"inputs", fl.inputs}, {"lhs", fl.lhs}, {"rhs", fl.rhs}, {"note", fl.note}});
    return j;
}

std::string SuiteReport::summary() const
{
    std::ostringstream out;
    out << suite;
    if (suite != "fixtures") out << " n=" << n << " k=" << k;
    out << ": " << (passed() ? "PASS" : "FAIL") << " (" << cases << " cases";
    if (sampled) out << ", sampled";
    if (vacuous) out << ", nothing to check";
    out << ", " << failures.size() << " failures";
    char buf[32];
    std::snprintf(buf, sizeof buf, ", %.2f s)", seconds);
    out << buf << "\n";
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i) {
        const auto& fl = failures[i];
        out << "  " << fl.note << " [" << fl.inputs << "]: " << fl.lhs << "  vs  " << fl.rhs << "\n";
    }
    if (failures.size() > 10) out << "  ... " << failures.size() - 10 << " more\n";
    return out.str();
}

}  // namespace schubert
