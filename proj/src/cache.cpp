#include "gammalab/cache.hpp"

#include "gammalab/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace gammalab {

namespace {

constexpr const char* kEngineVersion = "gammalab-1";

std::uint64_t fnv(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : s) {
        h ^= std::uint64_t(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    return h;
}

BigInt basis_denominator(const NumberField& k) {
    BigInt den = 1;
    for (const auto& row : k.basis)
        for (const auto& v : row) den = lcm(den, BigInt(v.get_den()));
    return den;
}

} // namespace

FieldCache::FieldCache(std::string dir, bool audit) : dir_(std::move(dir)), audit_(audit) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
}

std::string FieldCache::key_for(const IntPoly& f) {
    std::string key = "poly=";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i) key += ",";
        key += f.coeff(i).get_str();
    }
    return key;
}

std::string FieldCache::path_for(const std::string& key) const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv(key));
    return dir_ + "/" + buf + ".json";
}

std::optional<FieldSummary> FieldCache::read_entry(const std::string& key) {
    std::string path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("key").get<std::string>() != key ||
            doc.at("engine").get<std::string>() != kEngineVersion)
            return std::nullopt;  // hash collision or version change: recompute
        FieldSummary v;
        v.degree = doc.at("degree").get<int>();
        v.disc = parse_bigint(doc.at("disc").get<std::string>());
        v.index = parse_bigint(doc.at("index").get<std::string>());
        v.basis_den = parse_bigint(doc.at("basis_den").get<std::string>());
        return v;
    } catch (...) {
        // corrupt entry: delete and recompute
        std::error_code ec;
        if (!std::filesystem::remove(path, ec) || ec)
            throw CacheError("cache: corrupt entry at " + path + " could not be removed");
        ++warnings_;
        std::fprintf(stderr, "warning: removed corrupt cache entry %s\n", path.c_str());
        return std::nullopt;
    }
}

void FieldCache::write_entry(const std::string& key, const FieldSummary& v) {
    nlohmann::ordered_json doc;
    doc["key"] = key;
    doc["degree"] = v.degree;
    doc["disc"] = v.disc.get_str();
    doc["index"] = v.index.get_str();
    doc["basis_den"] = v.basis_den.get_str();
    doc["engine"] = kEngineVersion;
    std::string path = path_for(key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw CacheError("cache: cannot write " + tmp);
        out << doc.dump(2) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheError("cache: atomic rename to " + path + " failed");
}

std::optional<FactoredReal> FieldCache::read_disc_entry(const std::string& key, long degree) {
    std::string path = path_for(key);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        nlohmann::json doc = nlohmann::json::parse(in);
        if (doc.at("key").get<std::string>() != key ||
            doc.at("engine").get<std::string>() != kEngineVersion ||
            doc.at("degree").get<long>() != degree)
            return std::nullopt;
        FactoredReal::Map m;
        for (const auto& [p, e] : doc.at("disc_factors").items())
            m[parse_bigint(p)] = BigRat(parse_bigint(e.get<std::string>()));
        return FactoredReal::from_map(std::move(m));
    } catch (...) {
        std::error_code ec;
        std::string path2 = path_for(key);
        if (!std::filesystem::remove(path2, ec) || ec)
            throw CacheError("cache: corrupt entry at " + path2 + " could not be removed");
        ++warnings_;
        std::fprintf(stderr, "warning: removed corrupt cache entry %s\n", path2.c_str());
        return std::nullopt;
    }
}

void FieldCache::write_disc_entry(const std::string& key, long degree, const FactoredReal& v) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::object();
    for (const auto& [p, e] : v.factors()) {
        if (e.get_den() != 1) return;  // abelian discs have integer exponents
        factors[p.get_str()] = e.get_num().get_str();
    }
    nlohmann::ordered_json doc;
    doc["key"] = key;
    doc["degree"] = degree;
    doc["disc_factors"] = factors;
    doc["engine"] = kEngineVersion;
    std::string path = path_for(key);
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw CacheError("cache: cannot write " + tmp);
        out << doc.dump(2) << "\n";
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CacheError("cache: atomic rename to " + path + " failed");
}

FactoredReal FieldCache::abelian_disc_of(const AbelianField& f, const RunConfig& cfg) {
    std::string key = f.descriptor();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = disc_memo_.find(key);
        if (it != disc_memo_.end()) return it->second;
    }
    bool on_disk = !dir_.empty() && !cfg.no_cache;
    if (on_disk) {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto hit = read_disc_entry(key, f.degree)) {
            if (audit_ && !(abelian_disc(f) == *hit))
                throw CacheError("cache audit: entry for " + key + " differs from recomputation");
            disc_memo_[key] = *hit;
            return *hit;
        }
    }
    FactoredReal v = abelian_disc(f);
    std::lock_guard<std::mutex> lock(mu_);
    disc_memo_[key] = v;
    if (on_disk) write_disc_entry(key, f.degree, v);
    return v;
}

FieldSummary FieldCache::build(const IntPoly& f, const RunConfig& cfg) {
    std::string key = key_for(f);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    bool on_disk = !dir_.empty() && !cfg.no_cache;
    if (on_disk) {
        std::lock_guard<std::mutex> lock(mu_);
        if (auto hit = read_entry(key)) {
            if (audit_) {
                NumberField k = build_field(f, {cfg.degree_cap, true});
                FieldSummary fresh{k.degree, k.disc, k.index, basis_denominator(k)};
                if (fresh.degree != hit->degree || fresh.disc != hit->disc ||
                    fresh.index != hit->index || fresh.basis_den != hit->basis_den)
                    throw CacheError("cache audit: entry for " + key +
                                     " differs from recomputation");
            }
            memo_[key] = *hit;
            return *hit;
        }
    }
    NumberField k = build_field(f, {cfg.degree_cap, true});
    FieldSummary v{k.degree, k.disc, k.index, basis_denominator(k)};
    std::lock_guard<std::mutex> lock(mu_);
    memo_[key] = v;
    if (on_disk) write_entry(key, v);
    return v;
}

} // namespace gammalab
