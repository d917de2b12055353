#include "schubert/poly.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

namespace schubert {

std::string Var::name() const
{
    const char prefix = kind == Kind::y ? 'y' : (kind == Kind::z ? 'z' : 'd');
    return prefix + std::to_string(index);
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(Var v, std::uint32_t e)
{
    if (e > 0) {
        factors_.emplace_back(v, e);
        degree_ = e;
    }
}

Monomial make_monomial(std::vector<Monomial::Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v)
            m.factors_.back().second += e;
        else
            m.factors_.emplace_back(v, e);
        m.degree_ += e;
    }
    return m;
}

std::uint32_t Monomial::exponent(Var v) const
{
    for (const auto& [w, e] : factors_) {
        if (w == v) return e;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first > b->first)) {
            out.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first > a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

bool GradedLexFirst::operator()(const Monomial& a, const Monomial& b) const
{
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    const std::size_t len = std::min(fa.size(), fb.size());
    for (std::size_t i = 0; i < len; ++i) {
        if (fa[i].first != fb[i].first) return fa[i].first > fb[i].first;
        if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
    }
    return fa.size() > fb.size();
}

// ---------------------------------------------------------------- Poly

Poly::Poly(Integer c)
{
    if (c != 0) terms_.emplace(Monomial(), std::move(c));
}

Poly::Poly(Var v) { terms_.emplace(Monomial(v), Integer(1)); }

Poly::Poly(const Monomial& m, Integer c)
{
    if (c != 0) terms_.emplace(m, std::move(c));
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Integer Poly::constant_term() const
{
    auto it = terms_.find(Monomial());
    return it == terms_.end() ? Integer(0) : it->second;
}

int Poly::degree() const
{
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.begin()->first.degree());
}

bool Poly::is_homogeneous() const
{
    if (terms_.empty()) return true;
    return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int Poly::max_index(Var::Kind kind) const
{
    int best = 0;
    for (const auto& [m, c] : terms_) {
        for (const auto& [v, e] : m.factors()) {
            if (v.kind == kind) best = std::max(best, static_cast<int>(v.index));
        }
    }
    return best;
}

bool Poly::uses_kind(Var::Kind kind) const { return max_index(kind) > 0; }

void Poly::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly Poly::operator-() const
{
    Poly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Poly Poly::map_vars(const std::function<std::pair<Var, int>(Var)>& f) const
{
    Poly out;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Factor> factors;
        int sign = 1;
        for (const auto& [v, e] : m.factors()) {
            auto [w, s] = f(v);
            if (s < 0 && e % 2 == 1) sign = -sign;
            factors.emplace_back(w, e);
        }
        out.add_term(make_monomial(std::move(factors)), sign > 0 ? c : Integer(-c));
    }
    return out;
}

// ---------------------------------------------------------------- division

namespace {

/// Splits p by powers of v: result[e] holds the coefficient of v^e.
std::vector<Poly> split_by_power(const Poly& p, Var v)
{
    std::vector<Poly> parts;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> rest;
        std::uint32_t e = 0;
        for (const auto& f : m.factors()) {
            if (f.first == v)
                e = f.second;
            else
                rest.push_back(f);
        }
        if (parts.size() <= e) parts.resize(e + 1);
        parts[e] += Poly(make_monomial(std::move(rest)), c);
    }
    return parts;
}

}  // namespace

Poly exact_divide(const Poly& p, const Poly& d)
{
    if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
    if (d.is_constant()) {
        const Integer c = d.constant_term();
        Poly q;
        for (const auto& [m, a] : p.terms()) {
            if (a % c != 0)
                throw NonzeroRemainder("exact_divide: " + to_string(p) + " not divisible by " +
                                       to_string(d));
            q += Poly(m, a / c);
        }
        return q;
    }

    // d = s * (u - v) for single variables u, v and s = +-1.
    const auto& terms = d.terms();
    if (terms.size() != 2) throw std::invalid_argument("exact_divide: unsupported divisor " + to_string(d));
    auto first = terms.begin();
    auto second = std::next(first);
    const bool linear = first->first.degree() == 1 && first->first.factors().size() == 1 &&
                        second->first.degree() == 1 && second->first.factors().size() == 1;
    const bool opposite = (first->second == 1 && second->second == -1) ||
                          (first->second == -1 && second->second == 1);
    if (!linear || !opposite)
        throw std::invalid_argument("exact_divide: unsupported divisor " + to_string(d));

    const Var u = first->first.factors().front().first;
    const Var v = second->first.factors().front().first;
    const int sign = first->second == 1 ? 1 : -1;

    // Synthetic division by (u - v) treating p as a polynomial in u.
    std::vector<Poly> coeff = split_by_power(p, u);
    if (coeff.empty()) return Poly();
    const std::size_t m = coeff.size() - 1;
    std::vector<Poly> q(m);
    Poly carry;
    for (std::size_t e = m; e >= 1; --e) {
        q[e - 1] = coeff[e] + carry;
        carry = q[e - 1] * Poly(v);
    }
    if (!(coeff[0] + carry).is_zero())
        throw NonzeroRemainder("exact_divide: " + to_string(p) + " not divisible by " + to_string(d));

    Poly out;
    for (std::size_t e = 0; e < m; ++e) out += q[e] * Poly(Monomial(u, static_cast<std::uint32_t>(e)), Integer(1));
    return sign > 0 ? out : -out;
}

// ---------------------------------------------------------------- substitution

Poly specialize(const Poly& p, const std::map<Var, Poly>& assignment)
{
    Poly out;
    std::map<std::pair<Var, std::uint32_t>, Poly> powers;
    for (const auto& [m, c] : p.terms()) {
        Poly term(c);
        std::vector<Monomial::Factor> kept;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                kept.emplace_back(v, e);
                continue;
            }
            auto [pw, fresh] = powers.try_emplace({v, e});
            if (fresh) {
                Poly acc(1);
                for (std::uint32_t i = 0; i < e; ++i) acc *= it->second;
                pw->second = std::move(acc);
            }
            term *= pw->second;
        }
        out += term * Poly(make_monomial(std::move(kept)), Integer(1));
    }
    return out;
}

Integer constant_part(const Poly& p) { return p.constant_term(); }

Poly difference_coeffs(const Poly& p)
{
    if (p.uses_kind(Var::Kind::z) || p.uses_kind(Var::Kind::d))
        throw std::invalid_argument("difference_coeffs: only y variables are allowed");
    const int n = p.max_index(Var::Kind::y);
    std::map<Var, Poly> to_d;
    Poly partial;
    for (int i = 1; i <= n; ++i) {
        to_d[Var::y(i)] = partial;
        partial += Poly(Var::d(i));
    }
    Poly in_d = specialize(p, to_d);

    std::map<Var, Poly> back;
    for (int i = 1; i < std::max(n, 1); ++i) back[Var::d(i)] = Poly::y(i + 1) - Poly::y(i);
    if (!(specialize(in_d, back) == p))
        throw NotInSubring("difference_coeffs: " + to_string(p) + " is not translation invariant");
    return in_d;
}

bool is_graham_positive(const Poly& p)
{
    const Poly d = difference_coeffs(p);
    return std::all_of(d.terms().begin(), d.terms().end(), [](const auto& t) { return t.second > 0; });
}

// ---------------------------------------------------------------- text form

std::string to_string(const Poly& p)
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;
        const Integer a = negative ? Integer(-c) : c;
        if (m.is_one()) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        bool first_factor = true;
        for (const auto& [v, e] : m.factors()) {
            if (!first_factor) os << '*';
            first_factor = false;
            os << v.name();
            if (e > 1) os << '^' << e;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : text_(text) {}

    Poly parse()
    {
        skip_ws();
        if (at_end()) fail("empty polynomial");
        Poly out;
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = peek() == '-';
            ++pos_;
            skip_ws();
        }
        out += signed_term(negative);
        while (true) {
            skip_ws();
            if (at_end()) break;
            const char op = peek();
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            ++pos_;
            skip_ws();
            out += signed_term(op == '-');
        }
        return out;
    }

private:
    Poly signed_term(bool negative)
    {
        Poly t = term();
        return negative ? -t : t;
    }

    Poly term()
    {
        Integer coeff = 1;
        std::vector<Monomial::Factor> factors;
        bool need_factor = true;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = integer();
            skip_ws();
            if (at_end() || peek() != '*') return Poly(coeff);
            ++pos_;
            skip_ws();
        }
        while (need_factor) {
            factors.push_back(factor());
            skip_ws();
            need_factor = !at_end() && peek() == '*';
            if (need_factor) {
                ++pos_;
                skip_ws();
            }
        }
        return Poly(make_monomial(std::move(factors)), coeff);
    }

    Monomial::Factor factor()
    {
        if (at_end()) fail("expected a variable");
        const char c = peek();
        Var::Kind kind;
        if (c == 'y')
            kind = Var::Kind::y;
        else if (c == 'z')
            kind = Var::Kind::z;
        else if (c == 'd')
            kind = Var::Kind::d;
        else
            fail(std::string("unexpected character '") + c + "'");
        ++pos_;
        const Integer idx = integer();
        if (idx < 1 || idx > 65535) fail("variable index out of range");
        std::uint32_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_ws();
            const Integer ex = integer();
            if (ex < 1 || ex > 100000) fail("exponent out of range");
            e = static_cast<std::uint32_t>(ex);
        }
        return {Var{kind, static_cast<std::uint16_t>(idx)}, e};
    }

    Integer integer()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected digits");
        return Integer(std::string(text_.substr(start, pos_ - start)));
    }

    void skip_ws()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    [[noreturn]] void fail(const std::string& msg) const { throw PolyParseError(msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const Poly& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : m.factors()) mono.push_back({v.name(), e});
        out.push_back({c.str(), mono});
    }
    return out;
}

Poly poly_from_json(const nlohmann::json& j)
{
    if (!j.is_array()) throw std::invalid_argument("poly json: expected an array of terms");
    Poly out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("poly json: each term is [coefficient, factors]");
        const Integer c(term[0].get<std::string>());
        std::vector<Monomial::Factor> factors;
        for (const auto& f : term[1]) {
            const std::string name = f.at(0).get<std::string>();
            const Poly v = parse_poly(name);
            if (v.size() != 1 || v.terms().begin()->first.factors().size() != 1)
                throw std::invalid_argument("poly json: bad variable '" + name + "'");
            factors.emplace_back(v.terms().begin()->first.factors().front().first,
                                 f.at(1).get<std::uint32_t>());
        }
        out += Poly(make_monomial(std::move(factors)), c);
    }
    return out;
}

}  // namespace schubert
