#ifndef GAMMALAB_PARALLEL_HPP
#define GAMMALAB_PARALLEL_HPP

#include <functional>

namespace gammalab {

/* Runs body(0..n-1) across `threads` workers (0 = available parallelism).
 * Work items must be independent; callers write into preassigned slots so
 * results do not depend on the schedule. The first exception is rethrown.
 */
void parallel_for(long n, int threads, const std::function<void(long)>& body);

} // namespace gammalab

#endif
