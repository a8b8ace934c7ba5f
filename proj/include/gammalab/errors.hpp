#ifndef GAMMALAB_ERRORS_HPP
#define GAMMALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gammalab {

// Exit codes used by the CLI. Library code throws; main() maps.
enum class ExitCode : int {
    ok = 0,
    usage = 2,
    cap_exceeded = 3,
    counterexample = 4,
    cache_corrupt = 5,
};

struct Error : std::runtime_error {
    ExitCode code;
    explicit Error(ExitCode c, const std::string& what)
        : std::runtime_error(what), code(c) {}
};

struct UsageError : Error {
    explicit UsageError(const std::string& what) : Error(ExitCode::usage, what) {}
};

// A configured cap (degree, subgroup order, subset count, work budget) was hit.
struct CapError : Error {
    explicit CapError(const std::string& what) : Error(ExitCode::cap_exceeded, what) {}
};

// A property that a theorem guarantees failed to hold: always a bug.
struct CounterexampleError : Error {
    explicit CounterexampleError(const std::string& what)
        : Error(ExitCode::counterexample, what) {}
};

struct CacheError : Error {
    explicit CacheError(const std::string& what) : Error(ExitCode::cache_corrupt, what) {}
};

} // namespace gammalab

#endif
