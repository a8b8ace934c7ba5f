#ifndef GAMMALAB_CONFIG_HPP
#define GAMMALAB_CONFIG_HPP

#include "gammalab/intmath.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace gammalab {

/* Run configuration. Sources and precedence: command-line flags override the
 * optional key = value config file, which overrides GAMMALAB_* environment
 * variables, which override the defaults.
 */
struct RunConfig {
    int degree_cap = 24;
    long subgroup_cap = 4096;
    int subset_cap = 12;
    int screen_size = 50;
    BigRat tol = make_rat(BigInt(1), ipow(BigInt(10), 10));
    std::string cache_dir;  // empty: no on-disk cache
    std::string format = "text";  // text | json | csv
    std::uint64_t seed = 0;
    int threads = 0;  // 0: available parallelism
    bool deterministic = false;
    bool no_cache = false;
    bool cache_audit = false;

    // stable digest of the effective configuration, for reports
    std::string digest() const;
};

// env -> file -> flags layering; `file_path` may be empty. `overrides` holds
// the flag-level assignments (string form) applied last.
RunConfig load_config(const std::string& file_path,
                      const std::map<std::string, std::string>& overrides);

// parse a single "key = value" assignment into cfg; throws UsageError on
// unknown keys or malformed values
void apply_config_entry(RunConfig& cfg, const std::string& key, const std::string& value);

// "3", "3/2" or "0.25" -> exact rational
BigRat parse_rational(const std::string& text);

} // namespace gammalab

#endif
