#include "nnls/parallel.hpp"

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nnls {

void parallel_for(std::ptrdiff_t count, int workers, const std::function<void(std::ptrdiff_t)>& body) {
    if (count <= 0) return;
    int w = workers > 0 ? workers : static_cast<int>(std::thread::hardware_concurrency());
    w = std::max(1, std::min<int>(w, static_cast<int>(count)));

    if (w == 1) {
        for (std::ptrdiff_t i = 0; i < count; ++i) body(i);
        return;
    }

    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
        const std::ptrdiff_t begin = count * t / w;
        const std::ptrdiff_t end = count * (t + 1) / w;
        pool.emplace_back([&, begin, end] {
            try {
                for (std::ptrdiff_t i = begin; i < end; ++i) body(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nnls
