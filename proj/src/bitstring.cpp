#include "schubert/bitstring.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace schubert {

BitString::BitString(std::string bits) : bits_(std::move(bits))
{
    ones_ = static_cast<int>(std::count(bits_.begin(), bits_.end(), '1'));
}

BitString BitString::parse(std::string_view text)
{
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1') {
            throw std::invalid_argument("bit string '" + std::string(text) +
                                        "': invalid character at position " +
                                        std::to_string(i + 1));
        }
    }
    return BitString(std::string(text));
}

BitString BitString::identity(int n, int k)
{
    if (k < 0 || k > n) throw std::invalid_argument("identity: need 0 <= k <= n");
    return BitString(std::string(static_cast<std::size_t>(n - k), '0') +
                     std::string(static_cast<std::size_t>(k), '1'));
}

BitString BitString::divisor(int n, int k)
{
    if (k <= 0 || k >= n) throw std::invalid_argument("divisor: need 0 < k < n");
    return BitString(std::string(static_cast<std::size_t>(n - k - 1), '0') + "10" +
                     std::string(static_cast<std::size_t>(k - 1), '1'));
}

BitString BitString::top(int n, int k)
{
    if (k < 0 || k > n) throw std::invalid_argument("top: need 0 <= k <= n");
    return BitString(std::string(static_cast<std::size_t>(k), '1') +
                     std::string(static_cast<std::size_t>(n - k), '0'));
}

BitString BitString::swapped(int i, int j) const
{
    std::string b = bits_;
    std::swap(b[static_cast<std::size_t>(i - 1)], b[static_cast<std::size_t>(j - 1)]);
    return BitString(std::move(b));
}

std::ostream& operator<<(std::ostream& os, const BitString& s) { return os << s.str(); }

std::vector<std::pair<int, int>> inversions(const BitString& s)
{
    std::vector<std::pair<int, int>> out;
    const int n = s.size();
    for (int i = 1; i <= n; ++i) {
        if (s.at(i) != 1) continue;
        for (int j = i + 1; j <= n; ++j) {
            if (s.at(j) == 0) out.emplace_back(i, j);
        }
    }
    return out;
}

int length(const BitString& s)
{
    int count = 0;
    int ones_seen = 0;
    for (int i = 1; i <= s.size(); ++i) {
        if (s.at(i) == 1)
            ++ones_seen;
        else
            count += ones_seen;
    }
    return count;
}

bool lattice_leq(const BitString& lambda, const BitString& mu)
{
    if (lambda.size() != mu.size() || lambda.ones() != mu.ones())
        throw std::invalid_argument("lattice_leq: strings " + lambda.str() + " and " + mu.str() +
                                    " are not in the same n-choose-k");
    int a = 0;
    int b = 0;
    for (int i = 1; i <= lambda.size(); ++i) {
        a += lambda.at(i);
        b += mu.at(i);
        if (b < a) return false;
    }
    return true;
}

std::vector<BitString> covers_up(const BitString& s)
{
    std::vector<BitString> out;
    for (int i = 1; i < s.size(); ++i) {
        if (s.at(i) == 0 && s.at(i + 1) == 1) out.push_back(s.swapped(i, i + 1));
    }
    return out;
}

std::vector<BitString> covers_down(const BitString& s)
{
    std::vector<BitString> out;
    for (int i = 1; i < s.size(); ++i) {
        if (s.at(i) == 1 && s.at(i + 1) == 0) out.push_back(s.swapped(i, i + 1));
    }
    return out;
}

BitString dual(const BitString& s)
{
    std::string b(s.str().rbegin(), s.str().rend());
    for (char& c : b) c = (c == '0') ? '1' : '0';
    return BitString::parse(b);
}

BitString reverse(const BitString& s)
{
    return BitString::parse(std::string(s.str().rbegin(), s.str().rend()));
}

std::vector<BitString> all_strings(int n, int k)
{
    if (k < 0 || k > n) throw std::invalid_argument("all_strings: need 0 <= k <= n");
    std::string b = BitString::identity(n, k).str();
    std::vector<BitString> out;
    do {
        out.push_back(BitString::parse(b));
    } while (std::next_permutation(b.begin(), b.end()));
    return out;
}

}  // namespace schubert
