#include "tropical/enumerate.hpp"

#include <algorithm>
#include <numeric>

namespace tropical {

std::uint64_t effective_count(std::size_t n, std::int64_t degree, std::uint64_t limit) {
    if (degree < 0 || n == 0) return 0;
    // C(degree + n - 1, n - 1) via C(degree + i, i) for i = 1..n-1; the partial
    // values never decrease, so the first one past `limit` settles it.
    unsigned __int128 value = 1;
    for (std::uint64_t i = 1; i < n; ++i) {
        value = value * (static_cast<std::uint64_t>(degree) + i) / i;
        if (value >= limit) return limit;
    }
    return static_cast<std::uint64_t>(value);
}

bool for_each_effective(std::size_t n, std::int64_t degree, const std::function<bool(const ModelDivisor&)>& visit) {
    if (degree < 0 || n == 0) return true;
    std::vector<std::size_t> picks(static_cast<std::size_t>(degree), 0);
    ModelDivisor d(n);
    d[0] = degree;
    for (;;) {
        if (!visit(d)) return false;
        std::size_t j = picks.size();
        while (j > 0 && picks[j - 1] == n - 1) --j;
        if (j == 0) return true;
        --j;
        const auto value = picks[j] + 1;
        for (std::size_t i = j; i < picks.size(); ++i) {
            d[picks[i]] -= 1;
            picks[i] = value;
            d[value] += 1;
        }
    }
}

ModelDivisor sample_effective(std::size_t n, std::int64_t degree, std::mt19937_64& rng) {
    ModelDivisor d(n);
    if (n == 0 || degree < 0) return d;
    std::vector<std::size_t> slots(static_cast<std::size_t>(degree) + n - 1);
    std::iota(slots.begin(), slots.end(), 0);
    std::vector<std::size_t> bars;
    std::sample(slots.begin(), slots.end(), std::back_inserter(bars), n - 1, rng);
    std::size_t previous = 0;
    for (std::size_t v = 0; v + 1 < n; ++v) {
        d[v] = static_cast<std::int64_t>(bars[v] - previous);
        previous = bars[v] + 1;
    }
    d[n - 1] = static_cast<std::int64_t>(slots.size() - previous);
    return d;
}

} // namespace tropical
