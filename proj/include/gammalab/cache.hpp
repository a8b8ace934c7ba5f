#ifndef GAMMALAB_CACHE_HPP
#define GAMMALAB_CACHE_HPP

#include "gammalab/abelian.hpp"
#include "gammalab/config.hpp"
#include "gammalab/intpoly.hpp"
#include "gammalab/numfield.hpp"

#include <mutex>
#include <optional>
#include <string>

namespace gammalab {

// the values a cache entry carries for a built field
struct FieldSummary {
    int degree = 0;
    BigInt disc;       // signed
    BigInt index;      // [O_K : Z[theta]]
    BigInt basis_den;  // lcm of integral-basis denominators
};

/* One JSON document per key in cache_dir, written atomically (temp file +
 * rename). Corrupt entries are deleted and recomputed with a warning; a
 * mismatch in audit mode is a hard error. Thread-safe; values are
 * deterministic, so last-write-wins is sound.
 */
class FieldCache {
  public:
    // empty dir disables the on-disk layer; the in-memory memo stays on
    FieldCache(std::string dir, bool audit);

    FieldSummary build(const IntPoly& monic_irreducible, const RunConfig& cfg);

    // conductor-discriminant value cached under the canonical "m=..;H=.." key
    FactoredReal abelian_disc_of(const AbelianField& f, const RunConfig& cfg);

    int warnings() const { return warnings_; }

    static std::string key_for(const IntPoly& f);

  private:
    std::string dir_;
    bool audit_ = false;
    int warnings_ = 0;
    std::mutex mu_;
    std::map<std::string, FieldSummary> memo_;
    std::map<std::string, FactoredReal> disc_memo_;

    std::optional<FieldSummary> read_entry(const std::string& key);
    void write_entry(const std::string& key, const FieldSummary& v);
    std::optional<FactoredReal> read_disc_entry(const std::string& key, long degree);
    void write_disc_entry(const std::string& key, long degree, const FactoredReal& v);
    std::string path_for(const std::string& key) const;
};

} // namespace gammalab

#endif
