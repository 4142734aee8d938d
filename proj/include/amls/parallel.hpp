#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace amls {

/// Worker budget: AMLS_THREADS when set and positive, hardware concurrency
/// otherwise (0 in the env var also means auto).
inline unsigned thread_budget() {
    if (const char* env = std::getenv("AMLS_THREADS")) {
        const long v = std::atol(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

/// Runs fn(i) for i in [0, count) on a bounded pool. Callers index their
/// own output storage by i, so results stay in request order regardless of
/// scheduling. fn must not throw across threads; wrap and rethrow below.
template <typename Fn>
void parallel_for(long count, Fn&& fn) {
    const unsigned budget = thread_budget();
    if (count <= 1 || budget <= 1) {
        for (long i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<long> cursor{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto worker = [&] {
        for (;;) {
            const long i = cursor.fetch_add(1);
            if (i >= count || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                if (!failed.exchange(true)) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const unsigned workers = static_cast<unsigned>(
        std::min<long>(count, static_cast<long>(budget)));
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (failed.load() && error) std::rethrow_exception(error);
}

} // namespace amls
