#pragma once

#include "schubert/bitstring.hpp"
#include "schubert/poly.hpp"

#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

namespace schubert {

/// The fixed points of Gr(k, C^n): all of n-choose-k, in lexicographic order,
/// with a reverse lookup. Shared between every class over the same (n, k).
class Grassmannian {
public:
    static std::shared_ptr<const Grassmannian> get(int n, int k);

    int n() const { return n_; }
    int k() const { return k_; }
    const std::vector<BitString>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t index_of(const BitString& s) const;
    bool contains(const BitString& s) const;

private:
    Grassmannian(int n, int k);

    int n_;
    int k_;
    std::vector<BitString> points_;
    std::unordered_map<BitString, std::size_t> index_;
};

/// A list of restrictions alpha|_lambda, one polynomial in y per fixed point.
/// Whether the list satisfies the GKM conditions is checked by is_class().
class Class {
public:
    Class(int n, int k);
    Class(int n, int k, std::vector<Poly> restrictions);

    /// The list with every restriction equal to c.
    static Class constant(int n, int k, const Poly& c);

    int n() const { return space_->n(); }
    int k() const { return space_->k(); }
    const Grassmannian& space() const { return *space_; }

    const Poly& at(const BitString& lambda) const { return values_[space_->index_of(lambda)]; }
    void set(const BitString& lambda, Poly value) { values_[space_->index_of(lambda)] = std::move(value); }
    const std::vector<Poly>& restrictions() const { return values_; }

    std::vector<BitString> support() const;
    bool is_zero() const;

    Class& operator+=(const Class& o);
    Class& operator-=(const Class& o);
    friend Class operator+(Class a, const Class& b) { return a += b; }
    friend Class operator-(Class a, const Class& b) { return a -= b; }
    /// Pointwise product (the ring structure).
    friend Class operator*(const Class& a, const Class& b);
    /// H_T(pt)-module action.
    friend Class operator*(const Poly& c, const Class& a);
    friend bool operator==(const Class& a, const Class& b);

private:
    void check_compatible(const Class& o) const;

    std::shared_ptr<const Grassmannian> space_;
    std::vector<Poly> values_;
};

struct GkmViolation {
    BitString lambda;
    BitString other;
    int i;
    int j;
};

struct GkmReport {
    bool ok = true;
    std::vector<GkmViolation> violations;
};

/// Checks that alpha|_lambda - alpha|_lambda' is divisible by y_i - y_j for
/// every pair of fixed points differing exactly in positions i < j.
GkmReport is_class(const Class& alpha);

/// s_i applied to fixed points and variables at once:
/// (s_i . alpha)|_mu = s_i(alpha|_{s_i mu}).
Class si_action(int i, const Class& alpha);

/// (alpha - s_i . alpha) / (y_{i+1} - y_i), restriction by restriction.
Class divided_difference(int i, const Class& alpha);

/// The equivariant Schubert class of lambda. Memoized per (n, k); safe to call
/// from several threads.
const Class& schubert_class(const BitString& lambda);

/// The Schubert divisor class, after checking it against the closed form
/// S_dv|_lambda = sum_j id_j y_j - sum_j lambda_j y_j.
const Class& schubert_divisor(int n, int k);

/// S_dv|_lambda straight from the closed form, without building any class.
Poly divisor_restriction(const BitString& lambda);

/// prod over inversions (i, j) of lambda of (y_j - y_i).
Poly inversion_weight(const BitString& lambda);

/// Coefficients Y_lambda with alpha = sum Y_lambda S_lambda. Throws
/// NonzeroRemainder if alpha is not a class.
std::map<BitString, Poly> expand_in_basis(const Class& alpha);

/// c_{lambda mu}^nu for a fixed pair, keyed by nu. Only nonzero entries are
/// stored.
struct StructureTable {
    BitString lambda;
    BitString mu;
    std::map<BitString, Poly> entries;

    /// The entry for nu, zero when absent.
    Poly at(const BitString& nu) const;
    friend bool operator==(const StructureTable& a, const StructureTable& b) = default;
};

/// S_lambda * S_mu expanded in the Schubert basis.
StructureTable structure_constants_gkm(const BitString& lambda, const BitString& mu);

/// Specializes every y to zero, leaving the ordinary structure constants.
std::map<BitString, Integer> forgetful(const StructureTable& table);

/// The involution y_i -> -y_{n+1-i}.
Poly bar(const Poly& p, int n);

/// Swaps y_i and y_{i+1}.
Poly swap_y(const Poly& p, int i);

}  // namespace schubert
