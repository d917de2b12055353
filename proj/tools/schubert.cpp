// Command-line front end: products, puzzles, pictures, verification suites,
// MS constants, Schubert classes and a small benchmark.

#include "schubert/cache.hpp"
#include "schubert/mspuzzle.hpp"
#include "schubert/puzzle.hpp"
#include "schubert/puzzle_io.hpp"
#include "schubert/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace schubert;

namespace {

constexpr int kUsage = 1;
constexpr int kVerification = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

BitString string_arg(const std::string& text, int n, int k, const char* what)
{
    BitString s;
    try {
        s = BitString::parse(text);
    } catch (const std::exception&) {
        throw UsageError(std::string(what) + ": '" + text + "' is not a 0/1 word");
    }
    if (s.size() != n || s.ones() != k)
        throw UsageError(std::string(what) + ": '" + text + "' is not in " + std::to_string(n) + " choose " +
                         std::to_string(k));
    return s;
}

std::string table_line(const std::map<BitString, Poly>& entries)
{
    if (entries.empty()) return "0";
    std::string out;
    for (const auto& [nu, c] : entries) {
        if (!out.empty()) out += " | ";
        out += nu.str() + ": " + to_string(c);
    }
    return out;
}

nlohmann::json table_json(const std::map<BitString, Poly>& entries)
{
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [nu, c] : entries) j[nu.str()] = to_string(c);
    return j;
}

std::string read_file(const std::string& path)
{
    if (path == "-") {
        std::ostringstream s;
        s << std::cin.rdbuf();
        return s.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Equivariant Schubert calculus on Grassmannians by puzzles and by localization"};
    app.require_subcommand(1);

    int n = 0, k = 0;
    std::string format = "table";
    bool no_cache = false;
    const auto formats = CLI::IsMember({"table", "structured"});

    // multiply
    std::string lambda_s, mu_s, nu_s, engine = "gkm";
    auto* multiply = app.add_subcommand("multiply", "Expand S_lambda S_mu in the Schubert basis");
    multiply->add_option("n", n)->required();
    multiply->add_option("k", k)->required();
    multiply->add_option("lambda", lambda_s)->required();
    multiply->add_option("mu", mu_s)->required();
    multiply->add_option("--engine", engine)->check(CLI::IsMember({"puzzle", "gkm", "both"}));
    multiply->add_option("--format", format)->check(formats);
    multiply->add_flag("--no-cache", no_cache);

    // puzzles
    bool count_only = false, ordinary_only = false;
    std::string render = "none";
    auto* puzzles = app.add_subcommand("puzzles", "List or count the puzzles with a given boundary");
    puzzles->add_option("n", n)->required();
    puzzles->add_option("k", k)->required();
    puzzles->add_option("lambda", lambda_s)->required();
    puzzles->add_option("mu", mu_s)->required();
    puzzles->add_option("nu", nu_s)->required();
    puzzles->add_flag("--count-only", count_only);
    puzzles->add_flag("--ordinary-only", ordinary_only);
    puzzles->add_option("--render", render)->check(CLI::IsMember({"none", "ascii", "svg"}));
    puzzles->add_option("--format", format)->check(formats);

    // render
    std::string file, picture = "ascii";
    auto* render_cmd = app.add_subcommand("render", "Draw a saved puzzle");
    render_cmd->add_option("file", file, "puzzle file, or - for stdin")->required();
    render_cmd->add_option("--format", picture)->check(CLI::IsMember({"ascii", "svg"}));

    // verify
    std::string suite;
    SuiteOptions suite_options;
    auto* verify = app.add_subcommand("verify", "Run a verification suite (or 'fixtures')");
    verify->add_option("suite", suite)->required();
    verify->add_option("n", n);
    verify->add_option("k", k);
    verify->add_option("--exhaustive-max-n", suite_options.exhaustive_max_n);
    verify->add_option("--samples", suite_options.sample_size);
    verify->add_option("--seed", suite_options.seed);
    verify->add_option("--threads", suite_options.threads);
    verify->add_option("--format", format)->check(formats);

    // ms
    std::string theta_s;
    auto* ms = app.add_subcommand("ms", "Mixed constants e_{theta mu}^nu(y, z) by MS-puzzles");
    ms->add_option("n", n)->required();
    ms->add_option("k", k)->required();
    ms->add_option("theta", theta_s)->required();
    ms->add_option("mu", mu_s)->required();
    ms->add_option("--format", format)->check(formats);

    // class
    auto* cls = app.add_subcommand("class", "Print every restriction of S_lambda");
    cls->add_option("n", n)->required();
    cls->add_option("k", k)->required();
    cls->add_option("lambda", lambda_s)->required();
    cls->add_option("--format", format)->check(formats);
    cls->add_flag("--no-cache", no_cache);

    // bench
    int max_n = 6;
    auto* bench = app.add_subcommand("bench", "Time enumeration against the transfer counter");
    bench->add_option("--max-n", max_n)->check(CLI::Range(1, 9));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kUsage;
    }

    const bool structured = format == "structured";
    try {
        auto cache = CacheStore::from_environment();
        const CacheStore* store = no_cache ? nullptr : &cache;

        if (*multiply) {
            const BitString lambda = string_arg(lambda_s, n, k, "lambda");
            const BitString mu = string_arg(mu_s, n, k, "mu");
            std::map<BitString, Poly> by_puzzle, by_gkm;
            if (engine != "gkm") by_puzzle = product_via_puzzles(lambda, mu).entries;
            if (engine != "puzzle") by_gkm = cached_product(lambda, mu, store).entries;
            const bool match = engine != "both" || by_puzzle == by_gkm;
            if (structured) {
                nlohmann::json j = {{"lambda", lambda.str()}, {"mu", mu.str()}};
                if (engine != "gkm") j["puzzle"] = table_json(by_puzzle);
                if (engine != "puzzle") j["gkm"] = table_json(by_gkm);
                if (engine == "both") j["match"] = match;
                std::cout << j.dump(2) << "\n";
            } else if (engine == "both") {
                std::cout << "puzzle: " << table_line(by_puzzle) << "\n";
                std::cout << "gkm:    " << table_line(by_gkm) << "\n";
                std::cout << (match ? "match" : "MISMATCH") << "\n";
            } else {
                std::cout << table_line(engine == "gkm" ? by_gkm : by_puzzle) << "\n";
            }
            return match ? 0 : kVerification;
        }

        if (*puzzles) {
            const BitString lambda = string_arg(lambda_s, n, k, "lambda");
            const BitString mu = string_arg(mu_s, n, k, "mu");
            const BitString nu = string_arg(nu_s, n, k, "nu");
            const auto list = enumerate_puzzles(lambda, mu, nu, {.ordinary_only = ordinary_only});
            if (count_only) {
                if (structured)
                    std::cout << nlohmann::json{{"count", list.size()}}.dump() << "\n";
                else
                    std::cout << list.size() << "\n";
                return 0;
            }
            if (structured) {
                nlohmann::json j = nlohmann::json::array();
                for (const auto& p : list) {
                    auto item = to_json(p);
                    item["weight"] = to_string(puzzle_weight(p));
                    j.push_back(item);
                }
                std::cout << j.dump(2) << "\n";
                return 0;
            }
            Poly total;
            for (std::size_t i = 0; i < list.size(); ++i) {
                const Poly w = puzzle_weight(list[i]);
                total += w;
                std::cout << "# puzzle " << i + 1 << " weight " << to_string(w) << "\n";
                if (render == "ascii")
                    std::cout << render_ascii(list[i]);
                else if (render == "svg")
                    std::cout << render_svg(list[i]);
                else
                    std::cout << to_text(list[i]);
            }
            std::cout << "# " << list.size() << " puzzles, total weight " << to_string(total) << "\n";
            return 0;
        }

        if (*render_cmd) {
            const Puzzle p = parse_puzzle(read_file(file));
            std::cout << (picture == "svg" ? render_svg(p) : render_ascii(p));
            return 0;
        }

        if (*verify) {
            SuiteReport report;
            if (suite == "fixtures") {
                report = regression_fixtures();
            } else {
                if (verify->count("n") == 0 || verify->count("k") == 0) throw UsageError("verify needs n and k");
                report = run_suite(suite, n, k, suite_options);
            }
            if (structured)
                std::cout << report.to_json().dump(2) << "\n";
            else
                std::cout << report.summary();
            return report.passed() ? 0 : kVerification;
        }

        if (*ms) {
            const BitString theta = string_arg(theta_s, n, k, "theta");
            const BitString mu = string_arg(mu_s, n, k, "mu");
            const auto e = molev_sagan_constants(theta, mu);
            if (structured)
                std::cout << table_json(e).dump(2) << "\n";
            else
                std::cout << table_line(e) << "\n";
            return 0;
        }

        if (*cls) {
            const BitString lambda = string_arg(lambda_s, n, k, "lambda");
            const auto classes = cached_classes(n, k, store);
            const auto& values = classes.at(lambda);
            const auto& points = Grassmannian::get(n, k)->points();
            if (structured) {
                nlohmann::json j = nlohmann::json::object();
                for (std::size_t i = 0; i < points.size(); ++i) j[points[i].str()] = to_string(values[i]);
                std::cout << j.dump(2) << "\n";
            } else {
                for (std::size_t i = 0; i < points.size(); ++i)
                    std::cout << points[i] << ": " << to_string(values[i]) << "\n";
            }
            return 0;
        }

        if (*bench) {
            using clock = std::chrono::steady_clock;
            std::printf("%3s %3s %8s %14s %14s %8s\n", "n", "k", "pairs", "enumerate (s)", "count_dp (s)", "speedup");
            for (int bn = 1; bn <= max_n; ++bn) {
                const int bk = bn / 2;
                const auto pts = all_strings(bn, bk);
                double t_enum = 0, t_dp = 0;
                for (const auto& a : pts) {
                    for (const auto& b : pts) {
                        auto t0 = clock::now();
                        const auto tab = product_via_puzzles(a, b);
                        auto t1 = clock::now();
                        const auto dp = count_dp_table(a, b);
                        auto t2 = clock::now();
                        if (dp != tab.entries) throw std::logic_error("transfer counter disagrees for " + a.str() + " " + b.str());
                        t_enum += std::chrono::duration<double>(t1 - t0).count();
                        t_dp += std::chrono::duration<double>(t2 - t1).count();
                    }
                }
                std::printf("%3d %3d %8zu %14.4f %14.4f %7.1fx\n", bn, bk, pts.size() * pts.size(), t_enum, t_dp,
                            t_dp > 0 ? t_enum / t_dp : 0.0);
            }
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PuzzleParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return 0;
}
