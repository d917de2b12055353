#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schubert {

/// A 0/1 word of length n with k ones: an element of "n choose k".
///
/// Positions are 1-indexed (`at(1)` is the first letter) so that position i
/// lines up with the equivariant variable y_i. Values compare
/// lexicographically, which gives every container a deterministic order.
class BitString {
public:
    BitString() = default;

    /// Parses a raw word such as "0101". Throws std::invalid_argument on any
    /// character other than '0' and '1'.
    static BitString parse(std::string_view text);

    /// 0^{n-k} 1^k, the inversion-free string.
    static BitString identity(int n, int k);
    /// 0^{n-k-1} 1 0 1^{k-1}, the unique string with one inversion (0 < k < n).
    static BitString divisor(int n, int k);
    /// 1^k 0^{n-k} = w0 . id, the string with k(n-k) inversions.
    static BitString top(int n, int k);

    int size() const { return static_cast<int>(bits_.size()); }
    int ones() const { return ones_; }

    /// Letter at 1-indexed position i, as 0 or 1.
    int at(int i) const { return bits_[static_cast<std::size_t>(i - 1)] == '1' ? 1 : 0; }

    const std::string& str() const { return bits_; }

    /// The string with positions i and j exchanged.
    BitString swapped(int i, int j) const;

    friend bool operator==(const BitString&, const BitString&) = default;
    friend std::strong_ordering operator<=>(const BitString& a, const BitString& b)
    {
        return a.bits_ <=> b.bits_;
    }

private:
    explicit BitString(std::string bits);

    std::string bits_;
    int ones_ = 0;
};

std::ostream& operator<<(std::ostream& os, const BitString& s);

/// Pairs (i, j), i < j, with s_i = 1 and s_j = 0.
std::vector<std::pair<int, int>> inversions(const BitString& s);

/// Number of inversions l(s).
int length(const BitString& s);

/// True iff mu >= lambda: every prefix of mu has at least as many ones as the
/// same prefix of lambda. Throws std::invalid_argument unless both strings
/// lie in the same n-choose-k.
bool lattice_leq(const BitString& lambda, const BitString& mu);

/// Every string covering s: each adjacent "01" replaced by "10".
std::vector<BitString> covers_up(const BitString& s);

/// Every string covered by s: each adjacent "10" replaced by "01".
std::vector<BitString> covers_down(const BitString& s);

/// Reversal and complement; maps n-choose-k to n-choose-(n-k).
BitString dual(const BitString& s);

/// The w0 action: the reversed word.
BitString reverse(const BitString& s);

/// All of n-choose-k in lexicographic order.
std::vector<BitString> all_strings(int n, int k);

}  // namespace schubert

template <>
struct std::hash<schubert::BitString> {
    std::size_t operator()(const schubert::BitString& s) const noexcept
    {
        return std::hash<std::string>{}(s.str());
    }
};
