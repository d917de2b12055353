#include "schubert/mspuzzle.hpp"
#include "schubert/puzzle_io.hpp"

#include <doctest.h>

#include <string>

using namespace schubert;

namespace {

BitString B(const char* s) { return BitString::parse(s); }

std::size_t count(const std::string& text, const std::string& needle)
{
    std::size_t c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
    return c;
}

std::vector<Puzzle> sample_puzzles()
{
    std::vector<Puzzle> out;
    for (const auto& [nu, list] : puzzles_by_south(B("0101"), B("0101")))
        out.insert(out.end(), list.begin(), list.end());
    for (const auto& p : enumerate_puzzles(B("100101"), B("101010"), B("110100"))) out.push_back(p);
    for (const auto& p : enumerate_ms(B("0101"), B("0101"))) out.push_back(p);
    out.push_back(unique_diagonal_puzzle(B("000")));
    return out;
}

}  // namespace

TEST_CASE("text form")
{
    const Puzzle p = unique_diagonal_puzzle(B("01"));
    const std::string text = to_text(p);
    CHECK(text.rfind("puzzle 1\nshape triangle\nn 2\n", 0) == 0);
    CHECK(parse_puzzle(text) == p);
}

TEST_CASE("round trips")
{
    for (const auto& p : sample_puzzles()) {
        CHECK(parse_puzzle(to_text(p)) == p);
        CHECK(puzzle_from_json(to_json(p)) == p);
        CHECK(parse_puzzle(to_json(p).dump()) == p);
        CHECK(render_ascii(parse_puzzle(to_text(p))) == render_ascii(p));
        CHECK(render_svg(parse_puzzle(to_text(p))) == render_svg(p));
        CHECK(to_json(p)["version"] == kPuzzleFormatVersion);
    }
}

TEST_CASE("parse errors carry positions")
{
    auto error_at = [](const std::string& text, int line, int column) {
        try {
            parse_puzzle(text);
        } catch (const PuzzleParseError& e) {
            CHECK(e.line == line);
            if (column > 0) CHECK(e.column == column);
            return;
        }
        FAIL("no parse error for:\n" << text);
    };
    error_at("puzzle 2\nshape triangle\nn 1\n0\n", 1, 0);
    error_at("puzzle 1\nshape square\nn 1\n0\n", 2, 0);
    error_at("puzzle 1\nshape triangle\nn 2\n0\n0x0\n", 5, 2);
    error_at("puzzle 1\nshape triangle\nn 2\n0\n00\n", 5, 0);
    error_at("puzzle 1\nshape triangle\nn 2\n0\n0V0\n", 5, 0);
    CHECK_THROWS_AS(parse_puzzle("puzzle 1\nshape triangle\nn 2\n0\n"), PuzzleParseError);
    CHECK_THROWS_AS(parse_puzzle("{\"format\": \"schubert-puzzle\", \"version\": 9}"), PuzzleParseError);
    CHECK_THROWS_AS(parse_puzzle("puzzle 1\nshape triangle\nn 2\n1\n010\n"), PuzzleParseError);
}

TEST_CASE("pictures")
{
    for (const auto& p : sample_puzzles()) {
        const std::string svg = render_svg(p);
        CHECK(count(svg, "<polygon") == p.pieces().size());
        const bool equivariant = p.has_equivariant();
        CHECK((count(svg, "class=\"equivariant-rhombus\"") > 0) == equivariant);
        CHECK(render_svg(p) == svg);
        CHECK(render_ascii(p) == render_ascii(p));
    }
    const std::string ascii = render_ascii(unique_diagonal_puzzle(B("000111")));
    CHECK(ascii.find('0') != std::string::npos);
    CHECK(ascii.find('1') != std::string::npos);
}
