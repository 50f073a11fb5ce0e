#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tropical/model_graph.hpp"

namespace tropical {

// Number of effective divisors of the given degree on n vertices, saturating
// at `limit` so callers can compare against a threshold without overflow.
std::uint64_t effective_count(std::size_t n, std::int64_t degree, std::uint64_t limit = UINT64_MAX);

/// Visits every effective divisor of `degree` on `n` vertices in
/// lexicographic order of the sorted vertex multiset (so 2·v0 comes first).
/// Stops early when the visitor returns false; returns false in that case.
bool for_each_effective(std::size_t n, std::int64_t degree, const std::function<bool(const ModelDivisor&)>& visit);

// Uniform over effective divisors of `degree` on n vertices (stars and bars).
ModelDivisor sample_effective(std::size_t n, std::int64_t degree, std::mt19937_64& rng);

} // namespace tropical
