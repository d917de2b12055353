#include "schubert/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace schubert {

namespace fs = std::filesystem;

namespace {

std::string header(const char* kind, int n, int k)
{
    return "schubert-cache " + std::string(kind) + " v" + std::to_string(kCacheVersion) + " n=" + std::to_string(n) +
           " k=" + std::to_string(k);
}

std::vector<std::string> split(const std::string& line, const std::string& sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t at = line.find(sep, start);
        out.push_back(line.substr(start, at == std::string::npos ? std::string::npos : at - start));
        if (at == std::string::npos) break;
        start = at + sep.size();
    }
    return out;
}

// Write to a sibling file, then rename over the target.
void replace_file(const fs::path& target, const std::string& content)
{
    fs::create_directories(target.parent_path());
    const fs::path tmp = target.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

}  // namespace

CacheStore::CacheStore(fs::path dir) : dir_(std::move(dir)) {}

CacheStore CacheStore::from_environment()
{
    if (const char* d = std::getenv("SCHUBERT_CACHE_DIR"); d && *d) return CacheStore(d);
    if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return CacheStore(fs::path(x) / "schubert");
    if (const char* h = std::getenv("HOME"); h && *h) return CacheStore(fs::path(h) / ".cache" / "schubert");
    return CacheStore(fs::temp_directory_path() / "schubert-cache");
}

fs::path CacheStore::classes_file(int n, int k) const
{
    return dir_ / ("classes-n" + std::to_string(n) + "-k" + std::to_string(k) + ".txt");
}

fs::path CacheStore::products_file(int n, int k) const
{
    return dir_ / ("products-n" + std::to_string(n) + "-k" + std::to_string(k) + ".txt");
}

// Record per lambda: "lambda | r_1 | r_2 | ..." in lexicographic point order.
std::optional<std::map<BitString, std::vector<Poly>>> CacheStore::load_classes(int n, int k) const
{
    std::ifstream in(classes_file(n, k));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != header("classes", n, k)) return std::nullopt;
    std::map<BitString, std::vector<Poly>> out;
    const std::size_t size = Grassmannian::get(n, k)->size();
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto fields = split(line, " | ");
            if (fields.size() != size + 1) return std::nullopt;
            std::vector<Poly> values;
            for (std::size_t i = 1; i < fields.size(); ++i) values.push_back(parse_poly(fields[i]));
            out.emplace(BitString::parse(fields[0]), std::move(values));
        }
    } catch (const std::exception&) {
        return std::nullopt;
    }
    if (out.size() != size) return std::nullopt;
    return out;
}

void CacheStore::store_classes(int n, int k, const std::map<BitString, std::vector<Poly>>& classes) const
{
    std::ostringstream out;
    out << header("classes", n, k) << "\n";
    for (const auto& [lambda, values] : classes) {
        out << lambda;
        for (const auto& v : values) out << " | " << to_string(v);
        out << "\n";
    }
    replace_file(classes_file(n, k), out.str());
}

// Record per pair: "lambda mu | nu: c | nu: c | ...".
CacheStore::Products CacheStore::load_products(int n, int k) const
{
    Products out;
    std::ifstream in(products_file(n, k));
    if (!in) return out;
    std::string line;
    if (!std::getline(in, line) || line != header("products", n, k)) return out;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            auto fields = split(line, " | ");
            auto pair = split(fields[0], " ");
            if (pair.size() != 2) return {};
            StructureTable t{BitString::parse(pair[0]), BitString::parse(pair[1]), {}};
            for (std::size_t i = 1; i < fields.size(); ++i) {
                auto entry = split(fields[i], ": ");
                if (entry.size() != 2) return {};
                t.entries.emplace(BitString::parse(entry[0]), parse_poly(entry[1]));
            }
            out.emplace(std::pair(t.lambda, t.mu), std::move(t));
        }
    } catch (const std::exception&) {
        return {};
    }
    return out;
}

void CacheStore::store_products(int n, int k, const Products& products) const
{
    std::ostringstream out;
    out << header("products", n, k) << "\n";
    for (const auto& [key, t] : products) {
        out << key.first << " " << key.second;
        for (const auto& [nu, c] : t.entries) out << " | " << nu << ": " << to_string(c);
        out << "\n";
    }
    replace_file(products_file(n, k), out.str());
}

std::map<BitString, std::vector<Poly>> cached_classes(int n, int k, const CacheStore* cache)
{
    if (cache) {
        if (auto hit = cache->load_classes(n, k)) return *hit;
    }
    std::map<BitString, std::vector<Poly>> out;
    for (const auto& lambda : all_strings(n, k)) out.emplace(lambda, schubert_class(lambda).restrictions());
    if (cache) cache->store_classes(n, k, out);
    return out;
}

StructureTable cached_product(const BitString& lambda, const BitString& mu, const CacheStore* cache)
{
    if (!cache) return structure_constants_gkm(lambda, mu);
    const int n = lambda.size();
    const int k = lambda.ones();
    auto products = cache->load_products(n, k);
    if (auto it = products.find({lambda, mu}); it != products.end()) return it->second;
    StructureTable t = structure_constants_gkm(lambda, mu);
    products.emplace(std::pair(lambda, mu), t);
    cache->store_products(n, k, products);
    return t;
}

}  // namespace schubert
