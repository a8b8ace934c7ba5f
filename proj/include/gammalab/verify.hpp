#ifndef GAMMALAB_VERIFY_HPP
#define GAMMALAB_VERIFY_HPP

#include "gammalab/cache.hpp"
#include "gammalab/config.hpp"

#include <string>

namespace gammalab {

struct VerifyResult {
    std::string suite;
    long trials = 0;
    long passed = 0;
    long failed = 0;
    std::string first_counterexample;  // empty when all trials pass
};

/* Seeded property suites. A failed trial is a counterexample to a proved
 * statement, i.e. always a bug; callers map failures to exit code 4.
 *   lemma21: norm divisibility of relative discriminants in composita of
 *            random degree <= 4 fields with coprime polynomial discriminants
 *   prop22:  gamma_M(F) <= gamma_M(M n F) <= gamma'(M/Q) on random abelian pairs
 *   cor23:   no external sample exceeds the internal sup for Galois M/Q
 *   prop31:  scan closed form, bound, and <= 3 verdict on random towers
 * Trials are independently seeded per index, so results do not depend on the
 * thread schedule.
 */
VerifyResult verify_suite(const std::string& suite, long trials, const RunConfig& cfg,
                          FieldCache& cache);

} // namespace gammalab

#endif
