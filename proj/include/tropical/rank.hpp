#pragma once

#include <cstdint>
#include <optional>
#include <shared_mutex>
#include <string_view>
#include <unordered_map>

#include "tropical/model_graph.hpp"
#include "tropical/reduction.hpp"

namespace tropical {

enum class RankMethod { recursive, brute_force };

std::string_view to_string(RankMethod method);

struct RankResult {
    int rank = -1;
    // Effective divisor of degree rank + 1 whose removal leaves an unwinnable
    // divisor. The zero divisor when rank == -1.
    ModelDivisor obstruction;
    RankMethod method = RankMethod::recursive;
};

/// Baker-Norine rank on one model graph, by the recursion
///   rank(D) = -1 if D is unwinnable, else 1 + min_v rank(D - v),
/// memoized on q-reduced forms so the cache is per divisor class.
///
/// rank() may be called concurrently; the cache takes shared locks for
/// lookups and an exclusive lock for insert-if-absent. Results do not depend
/// on call order or interleaving.
class RankEngine {
public:
    explicit RankEngine(ModelGraph model, Vertex base = kDefaultBase);

    RankEngine(const RankEngine&) = delete;
    RankEngine& operator=(const RankEngine&) = delete;

    const ModelGraph& model() const { return model_; }
    Vertex base() const { return base_; }
    const ModelDivisor& canonical() const { return canonical_; }
    int genus() const { return genus_; }

    RankResult rank(const ModelDivisor& d) const;
    ReducedForm reduce(const ModelDivisor& d) const { return tropical::reduce(model_, d, base_); }

    std::size_t cache_size() const;

private:
    struct Entry {
        int rank;
        ModelDivisor obstruction;
    };

    Entry rank_of_reduced(const ModelDivisor& reduced) const;

    ModelGraph model_;
    Vertex base_;
    ModelDivisor canonical_;
    int genus_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<ModelDivisor, Entry, ModelDivisorHash> cache_;
};

/// Rank straight from the definition: for r = 0, 1, 2, ... test every
/// effective E of degree r on the model vertices (lexicographic order) and
/// stop at the first E with D - E unwinnable. Shares nothing with RankEngine
/// beyond the winnability test. Throws ResourceError when deg D exceeds
/// `degree_cap`.
RankResult rank_oracle(const ModelGraph& model, const ModelDivisor& d, std::int64_t degree_cap = 64,
                       Vertex q = kDefaultBase);

// Requires d effective (PreconditionError otherwise). True iff K - d is winnable.
bool is_special(const RankEngine& engine, const ModelDivisor& d);

} // namespace tropical
