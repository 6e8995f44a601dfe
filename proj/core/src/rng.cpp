#include "dadc/rng.hpp"

#include <algorithm>

namespace dadc {

std::vector<std::size_t> Rng::sample_indices(std::size_t n, std::size_t count) {
    // Partial Fisher-Yates over an index pool; result sorted so callers see
    // a stable subset independent of draw order.
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i)
        pool[i] = i;
    if (count > n)
        count = n;
    for (std::size_t i = 0; i < count; ++i) {
        std::size_t j = i + static_cast<std::size_t>(bounded(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(count);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace dadc
