#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

using Integer = boost::multiprecision::cpp_int;

/// A polynomial variable: y_i, z_i, or the difference variable d_i = y_{i+1} - y_i.
struct Var {
    enum class Kind : std::uint8_t { d = 0, z = 1, y = 2 };

    Kind kind = Kind::y;
    std::uint16_t index = 1;

    static Var y(int i) { return {Kind::y, static_cast<std::uint16_t>(i)}; }
    static Var z(int i) { return {Kind::z, static_cast<std::uint16_t>(i)}; }
    static Var d(int i) { return {Kind::d, static_cast<std::uint16_t>(i)}; }

    /// Variables with larger rank are more significant in the term order:
    /// y_n > ... > y_1 > z_n > ... > z_1 > d_n > ... > d_1.
    std::uint32_t rank() const { return (static_cast<std::uint32_t>(kind) << 16) | index; }

    std::string name() const;

    friend bool operator==(Var a, Var b) { return a.rank() == b.rank(); }
    friend auto operator<=>(Var a, Var b) { return a.rank() <=> b.rank(); }
};

/// Sparse exponent vector: (variable, exponent) pairs with positive exponents,
/// sorted by decreasing variable rank.
class Monomial {
public:
    using Factor = std::pair<Var, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(Var v, std::uint32_t e = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exponent(Var v) const;
    bool is_one() const { return factors_.empty(); }

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

private:
    std::vector<Factor> factors_;
    std::uint32_t degree_ = 0;

    friend Monomial make_monomial(std::vector<Factor> factors);
};

Monomial make_monomial(std::vector<Monomial::Factor> factors);

/// Graded lexicographic order, largest first: higher total degree first, then
/// the larger exponent of the most significant variable where they differ.
struct GradedLexFirst {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct NonzeroRemainder : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInSubring : std::domain_error {
    using std::domain_error::domain_error;
};

struct PolyParseError : std::invalid_argument {
    PolyParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos)
    {
    }
    std::size_t position;
};

/// Sparse multivariate polynomial with exact integer coefficients. Zero
/// coefficients are never stored; terms iterate in canonical order.
class Poly {
public:
    using Terms = std::map<Monomial, Integer, GradedLexFirst>;

    Poly() = default;
    Poly(int c) : Poly(Integer(c)) {}
    Poly(Integer c);
    Poly(Var v);
    Poly(const Monomial& m, Integer c);

    static Poly y(int i) { return Poly(Var::y(i)); }
    static Poly z(int i) { return Poly(Var::z(i)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Integer constant_term() const;
    std::size_t size() const { return terms_.size(); }

    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    /// True for zero and for polynomials whose terms share one degree.
    bool is_homogeneous() const;
    /// Largest variable index of the given kind that occurs (0 if none).
    int max_index(Var::Kind kind) const;
    bool uses_kind(Var::Kind kind) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    /// Applies a variable renaming with signs, e.g. y_i -> -y_{n+1-i}.
    Poly map_vars(const std::function<std::pair<Var, int>(Var)>& f) const;

private:
    void add_term(const Monomial& m, const Integer& c);

    Terms terms_;
};

/// Returns q with q * d == p, where d is a nonzero constant or a binomial
/// u - v in two distinct variables. Throws NonzeroRemainder if d does not
/// divide p and std::invalid_argument for any other divisor shape.
Poly exact_divide(const Poly& p, const Poly& d);

/// Substitution homomorphism. Variables absent from the assignment are kept.
Poly specialize(const Poly& p, const std::map<Var, Poly>& assignment);

/// Sets every y_i and z_i to zero.
Integer constant_part(const Poly& p);

/// Rewrites a translation-invariant polynomial in y as a polynomial in
/// d_i = y_{i+1} - y_i. Throws NotInSubring otherwise.
Poly difference_coeffs(const Poly& p);

/// Every coefficient of difference_coeffs(p) is nonnegative.
bool is_graham_positive(const Poly& p);

/// Canonical text, e.g. "y4 - y1", "2*y3^2*z1 + 1", "0".
std::string to_string(const Poly& p);
Poly parse_poly(std::string_view text);

/// Structured form: [[coefficient, [[variable, exponent], ...]], ...].
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace schubert
