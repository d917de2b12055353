#include "schubert/gkm.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace schubert {

// ---------------------------------------------------------------- Grassmannian

Grassmannian::Grassmannian(int n, int k) : n_(n), k_(k), points_(all_strings(n, k))
{
    for (std::size_t i = 0; i < points_.size(); ++i) index_.emplace(points_[i], i);
}

std::shared_ptr<const Grassmannian> Grassmannian::get(int n, int k)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const Grassmannian>> spaces;
    if (n < 0 || k < 0 || k > n) throw std::invalid_argument("Grassmannian: need 0 <= k <= n");
    std::lock_guard lock(mutex);
    auto& slot = spaces[{n, k}];
    if (!slot) slot.reset(new Grassmannian(n, k));
    return slot;
}

std::size_t Grassmannian::index_of(const BitString& s) const
{
    auto it = index_.find(s);
    if (it == index_.end())
        throw std::invalid_argument("string " + s.str() + " is not in " + std::to_string(n_) +
                                    " choose " + std::to_string(k_));
    return it->second;
}

bool Grassmannian::contains(const BitString& s) const { return index_.count(s) != 0; }

// ---------------------------------------------------------------- Class

Class::Class(int n, int k) : space_(Grassmannian::get(n, k)), values_(space_->size()) {}

Class::Class(int n, int k, std::vector<Poly> restrictions)
    : space_(Grassmannian::get(n, k)), values_(std::move(restrictions))
{
    if (values_.size() != space_->size())
        throw std::invalid_argument("Class: expected one restriction per fixed point");
}

Class Class::constant(int n, int k, const Poly& c)
{
    Class out(n, k);
    std::fill(out.values_.begin(), out.values_.end(), c);
    return out;
}

std::vector<BitString> Class::support() const
{
    std::vector<BitString> out;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!values_[i].is_zero()) out.push_back(space_->points()[i]);
    }
    return out;
}

bool Class::is_zero() const
{
    return std::all_of(values_.begin(), values_.end(), [](const Poly& p) { return p.is_zero(); });
}

void Class::check_compatible(const Class& o) const
{
    if (space_ != o.space_) throw std::invalid_argument("Class: mismatched (n, k)");
}

Class& Class::operator+=(const Class& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
}

Class& Class::operator-=(const Class& o)
{
    check_compatible(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
}

Class operator*(const Class& a, const Class& b)
{
    a.check_compatible(b);
    Class out = a;
    for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = a.values_[i] * b.values_[i];
    return out;
}

Class operator*(const Poly& c, const Class& a)
{
    Class out = a;
    for (auto& v : out.values_) v = c * v;
    return out;
}

bool operator==(const Class& a, const Class& b)
{
    return a.space_ == b.space_ && a.values_ == b.values_;
}

// ---------------------------------------------------------------- GKM

GkmReport is_class(const Class& alpha)
{
    GkmReport report;
    const auto& pts = alpha.space().points();
    const int n = alpha.n();
    for (const auto& lambda : pts) {
        for (int i = 1; i <= n; ++i) {
            for (int j = i + 1; j <= n; ++j) {
                // Visit each unordered pair once: lambda carries the 1 at i.
                if (lambda.at(i) != 1 || lambda.at(j) != 0) continue;
                const BitString other = lambda.swapped(i, j);
                const Poly diff = alpha.at(lambda) - alpha.at(other);
                try {
                    exact_divide(diff, Poly::y(i) - Poly::y(j));
                } catch (const NonzeroRemainder&) {
                    report.ok = false;
                    report.violations.push_back({lambda, other, i, j});
                }
            }
        }
    }
    return report;
}

Poly swap_y(const Poly& p, int i)
{
    return p.map_vars([i](Var v) -> std::pair<Var, int> {
        if (v.kind == Var::Kind::y && v.index == i) return {Var::y(i + 1), 1};
        if (v.kind == Var::Kind::y && v.index == i + 1) return {Var::y(i), 1};
        return {v, 1};
    });
}

Poly bar(const Poly& p, int n)
{
    return p.map_vars([n](Var v) -> std::pair<Var, int> {
        if (v.kind != Var::Kind::y) return {v, 1};
        return {Var::y(n + 1 - v.index), -1};
    });
}

Class si_action(int i, const Class& alpha)
{
    if (i < 1 || i >= alpha.n()) throw std::invalid_argument("si_action: need 1 <= i < n");
    Class out(alpha.n(), alpha.k());
    for (const auto& mu : alpha.space().points()) out.set(mu, swap_y(alpha.at(mu.swapped(i, i + 1)), i));
    return out;
}

Class divided_difference(int i, const Class& alpha)
{
    const Class moved = si_action(i, alpha);
    const Poly root = Poly::y(i + 1) - Poly::y(i);
    Class out(alpha.n(), alpha.k());
    for (const auto& mu : alpha.space().points()) out.set(mu, exact_divide(alpha.at(mu) - moved.at(mu), root));
    return out;
}

Poly inversion_weight(const BitString& lambda)
{
    Poly w(1);
    for (const auto& [i, j] : inversions(lambda)) w *= Poly::y(j) - Poly::y(i);
    return w;
}

Poly divisor_restriction(const BitString& lambda)
{
    const int n = lambda.size();
    const BitString id = BitString::identity(n, lambda.ones());
    Poly out;
    for (int j = 1; j <= n; ++j) {
        if (id.at(j)) out += Poly::y(j);
        if (lambda.at(j)) out -= Poly::y(j);
    }
    return out;
}

namespace {

class SchubertMemo {
public:
    const Class& get(const BitString& lambda)
    {
        {
            std::shared_lock lock(mutex_);
            auto it = classes_.find(lambda);
            if (it != classes_.end()) return *it->second;
        }
        Class built = build(lambda);
        std::unique_lock lock(mutex_);
        auto [it, inserted] = classes_.try_emplace(lambda, std::make_unique<Class>(std::move(built)));
        return *it->second;
    }

private:
    Class build(const BitString& lambda)
    {
        const int n = lambda.size();
        const int k = lambda.ones();
        const BitString top = BitString::top(n, k);
        if (lambda == top) {
            Class out(n, k);
            out.set(top, inversion_weight(top));
            return out;
        }
        // Step up to a cover of lambda reached by the leftmost usable descent,
        // then come back down with one divided difference.
        for (int i = 1; i < n; ++i) {
            if (lambda.at(i) == 0 && lambda.at(i + 1) == 1) {
                const BitString above = lambda.swapped(i, i + 1);
                return divided_difference(i, get(above));
            }
        }
        throw std::logic_error("schubert_class: no ascent below the top string");
    }

    std::shared_mutex mutex_;
    std::map<BitString, std::unique_ptr<Class>> classes_;
};

SchubertMemo& memo()
{
    static SchubertMemo instance;
    return instance;
}

}  // namespace

const Class& schubert_class(const BitString& lambda) { return memo().get(lambda); }

const Class& schubert_divisor(int n, int k)
{
    const Class& dv = schubert_class(BitString::divisor(n, k));
    for (const auto& lambda : dv.space().points()) {
        if (!(dv.at(lambda) == divisor_restriction(lambda)))
            throw std::logic_error("schubert_divisor: closed form disagrees at " + lambda.str());
    }
    return dv;
}

// ---------------------------------------------------------------- basis

std::map<BitString, Poly> expand_in_basis(const Class& alpha)
{
    std::map<BitString, Poly> coeffs;
    Class rest = alpha;
    while (true) {
        const auto supp = rest.support();
        if (supp.empty()) break;
        // Minimal element of the support; the lexicographically first one on ties.
        const BitString* pick = nullptr;
        for (const auto& mu : supp) {
            const bool minimal = std::none_of(supp.begin(), supp.end(), [&](const BitString& other) {
                return other != mu && lattice_leq(other, mu);
            });
            if (minimal) {
                pick = &mu;
                break;
            }
        }
        const BitString mu = *pick;
        if (coeffs.count(mu))
            throw NonzeroRemainder("expand_in_basis: support did not move up at " + mu.str());
        Poly y = rest.at(mu);
        for (const auto& [i, j] : inversions(mu)) y = exact_divide(y, Poly::y(j) - Poly::y(i));
        rest -= y * schubert_class(mu);
        coeffs.emplace(mu, std::move(y));
    }
    return coeffs;
}

Poly StructureTable::at(const BitString& nu) const
{
    auto it = entries.find(nu);
    return it == entries.end() ? Poly() : it->second;
}

StructureTable structure_constants_gkm(const BitString& lambda, const BitString& mu)
{
    if (lambda.size() != mu.size() || lambda.ones() != mu.ones())
        throw std::invalid_argument("structure_constants_gkm: strings from different n-choose-k");
    StructureTable table{lambda, mu, {}};
    table.entries = expand_in_basis(schubert_class(lambda) * schubert_class(mu));
    return table;
}

std::map<BitString, Integer> forgetful(const StructureTable& table)
{
    std::map<BitString, Integer> out;
    for (const auto& [nu, c] : table.entries) {
        const Integer v = constant_part(c);
        if (v != 0) out.emplace(nu, v);
    }
    return out;
}

}  // namespace schubert
