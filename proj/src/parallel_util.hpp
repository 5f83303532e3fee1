#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace idb::detail {

// Runs f(i) for i in [0, count) on up to `threads` workers. Work items are
// claimed from an atomic counter; results must be written to per-index slots
// so output order never depends on scheduling. The first exception wins and
// is rethrown after all workers drain.
template <typename F>
void parallel_for_indexed(std::size_t count, int threads, F&& f) {
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) f(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::atomic<bool> abort{false};

    auto worker = [&]() {
        while (!abort.load()) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                f(i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(err_mutex);
                if (!first_error) first_error = std::current_exception();
                abort.store(true);
            }
        }
    };

    std::vector<std::thread> pool;
    const int nthreads = std::min<std::size_t>(threads, count);
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace idb::detail
