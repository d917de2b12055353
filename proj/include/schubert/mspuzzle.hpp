#pragma once

// MS-puzzles: tilings of the size-n diamond, corners W (0,0), N (0,n),
// E (n,0), S (n,-n). The NW side carries mu (W to N), the SW side theta
// (S to W), the SE side nu (S to E), and the NE side the inversion-free
// string read clockwise (N to E).

#include "schubert/puzzle.hpp"

#include <map>
#include <optional>
#include <vector>

namespace schubert {

struct MsBoundary {
    BitString theta;  // SW
    BitString mu;     // NW
    BitString nu;     // SE
    BitString ne;
};

MsBoundary ms_boundary(const Puzzle& p);

/// Every MS-puzzle with the given SW and NW sides, and SE side nu when
/// given (free otherwise), in search order.
std::vector<Puzzle> enumerate_ms(const BitString& theta, const BitString& mu,
                                 const std::optional<BitString>& nu = std::nullopt);

/// Product over equivariant pieces of y_j - z_i, with i counted from the SE
/// side and j from the SW side: the piece with upper half up(a, b) gets
/// i = n - a, j = a + b + 1.
Poly ms_weight(const Puzzle& p);

/// e_{theta mu}^nu for every nu, nonzero entries only.
std::map<BitString, Poly> molev_sagan_constants(const BitString& theta, const BitString& mu);

/// Every z_i replaced by y_i.
Poly z_to_y(const Poly& p);

}  // namespace schubert
