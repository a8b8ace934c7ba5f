#include "gammalab/config.hpp"

#include "gammalab/errors.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace gammalab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trail");
        return v;
    } catch (...) {
        throw UsageError("config: bad integer for " + key + ": '" + value + "'");
    }
}

BigRat parse_rat(const std::string& key, const std::string& value) {
    try {
        return parse_rational(value);
    } catch (...) {
        throw UsageError("config: bad rational for " + key + ": '" + value + "'");
    }
}

} // namespace

BigRat parse_rational(const std::string& value) {
    // "7", "3/2", "0.25"; no exponent notation
    auto slash = value.find('/');
    if (slash != std::string::npos) {
        BigInt num = parse_bigint(value.substr(0, slash));
        BigInt den = parse_bigint(value.substr(slash + 1));
        return make_rat(num, den);
    }
    auto dot = value.find('.');
    if (dot == std::string::npos) return BigRat(parse_bigint(value));
    std::string digits = value.substr(0, dot) + value.substr(dot + 1);
    BigInt num = parse_bigint(digits);
    BigInt den = ipow(BigInt(10), (unsigned long)(value.size() - dot - 1));
    return make_rat(num, den);
}

namespace {

bool parse_bool(const std::string& key, const std::string& value) {
    if (value == "1" || value == "true" || value == "on") return true;
    if (value == "0" || value == "false" || value == "off") return false;
    throw UsageError("config: bad boolean for " + key + ": '" + value + "'");
}

} // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "degree_cap") cfg.degree_cap = int(parse_long(key, value));
    else if (key == "subgroup_cap") cfg.subgroup_cap = parse_long(key, value);
    else if (key == "subset_cap") cfg.subset_cap = int(parse_long(key, value));
    else if (key == "screen_size") cfg.screen_size = int(parse_long(key, value));
    else if (key == "tol") cfg.tol = parse_rat(key, value);
    else if (key == "cache_dir") cfg.cache_dir = value;
    else if (key == "format") {
        if (value != "text" && value != "json" && value != "csv")
            throw UsageError("config: format must be text, json or csv");
        cfg.format = value;
    } else if (key == "seed") cfg.seed = std::uint64_t(parse_long(key, value));
    else if (key == "threads") cfg.threads = int(parse_long(key, value));
    else if (key == "deterministic") cfg.deterministic = parse_bool(key, value);
    else if (key == "no_cache") cfg.no_cache = parse_bool(key, value);
    else if (key == "cache_audit") cfg.cache_audit = parse_bool(key, value);
    else throw UsageError("config: unknown key '" + key + "'");

    if (cfg.degree_cap < 1 || cfg.subgroup_cap < 1 || cfg.subset_cap < 1 ||
        cfg.screen_size < 1 || cfg.tol <= 0)
        throw UsageError("config: caps and tolerance must be positive");
}

RunConfig load_config(const std::string& file_path,
                      const std::map<std::string, std::string>& overrides) {
    RunConfig cfg;
    static const char* keys[] = {"degree_cap", "subgroup_cap", "subset_cap", "screen_size",
                                 "tol",        "cache_dir",    "format",     "seed",
                                 "threads",    "deterministic", "no_cache",  "cache_audit"};
    for (const char* key : keys) {
        std::string env = "GAMMALAB_";
        for (const char* c = key; *c; ++c) env += char(std::toupper(*c));
        if (const char* v = std::getenv(env.c_str())) apply_config_entry(cfg, key, v);
    }
    if (!file_path.empty()) {
        std::ifstream in(file_path);
        if (!in) throw UsageError("config: cannot open " + file_path);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            line = trim(line);
            if (line.empty()) continue;
            auto eq = line.find('=');
            if (eq == std::string::npos)
                throw UsageError("config: malformed line '" + line + "'");
            apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        }
    }
    for (const auto& [k, v] : overrides) apply_config_entry(cfg, k, v);
    return cfg;
}

std::string RunConfig::digest() const {
    std::ostringstream os;
    os << "degree_cap=" << degree_cap << ";subgroup_cap=" << subgroup_cap
       << ";subset_cap=" << subset_cap << ";screen_size=" << screen_size
       << ";tol=" << tol.get_str() << ";format=" << format << ";seed=" << seed
       << ";deterministic=" << deterministic << ";no_cache=" << no_cache
       << ";cache_audit=" << cache_audit;
    std::uint64_t h = 1469598103934665603ull;
    for (char c : os.str()) {
        h ^= std::uint64_t(static_cast<unsigned char>(c));
        h *= 1099511628211ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

} // namespace gammalab
