#pragma once

// On-disk cache of Schubert classes and structure-constant tables, one file
// per (n, k) per kind, each starting with a schema-version header. Files with
// any other header are ignored and later overwritten.

#include "schubert/gkm.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <utility>

namespace schubert {

inline constexpr int kCacheVersion = 1;

class CacheStore {
public:
    explicit CacheStore(std::filesystem::path dir);

    /// SCHUBERT_CACHE_DIR if set, else $XDG_CACHE_HOME/schubert, else
    /// ~/.cache/schubert.
    static CacheStore from_environment();

    const std::filesystem::path& dir() const { return dir_; }

    /// Restrictions of every Schubert class over (n, k), keyed by lambda.
    std::optional<std::map<BitString, std::vector<Poly>>> load_classes(int n, int k) const;
    void store_classes(int n, int k, const std::map<BitString, std::vector<Poly>>& classes) const;

    using Products = std::map<std::pair<BitString, BitString>, StructureTable>;
    Products load_products(int n, int k) const;
    void store_products(int n, int k, const Products& products) const;

    std::filesystem::path classes_file(int n, int k) const;
    std::filesystem::path products_file(int n, int k) const;

private:
    std::filesystem::path dir_;
};

/// Every Schubert class over (n, k), through the cache when one is given.
std::map<BitString, std::vector<Poly>> cached_classes(int n, int k, const CacheStore* cache);

/// structure_constants_gkm through the cache when one is given.
StructureTable cached_product(const BitString& lambda, const BitString& mu, const CacheStore* cache);

}  // namespace schubert
