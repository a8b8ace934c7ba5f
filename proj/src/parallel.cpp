#include "gammalab/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gammalab {

void parallel_for(long n, int threads, const std::function<void(long)>& body) {
    if (n <= 0) return;
    unsigned hw = std::thread::hardware_concurrency();
    long workers = threads > 0 ? threads : (hw ? long(hw) : 1);
    if (workers > n) workers = n;
    if (workers <= 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr first_error;
    std::mutex err_mu;
    auto run = [&] {
        while (true) {
            long i = next.fetch_add(1);
            if (i >= n) return;
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(err_mu);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (long w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace gammalab
