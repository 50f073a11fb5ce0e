#include "tropical/rank.hpp"

#include <limits>
#include <mutex>

#include "tropical/enumerate.hpp"
#include "tropical/errors.hpp"

namespace tropical {

std::string_view to_string(RankMethod method) {
    return method == RankMethod::recursive ? "recursive" : "brute-force";
}

RankEngine::RankEngine(ModelGraph model, Vertex base)
    : model_(std::move(model)), base_(base), canonical_(model_.canonical()), genus_(tropical::genus(model_)) {
    if (base_ >= model_.vertex_count()) throw PreconditionError("base point outside the model");
}

std::size_t RankEngine::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

RankResult RankEngine::rank(const ModelDivisor& d) const {
    model_.check_divisor(d);
    auto entry = rank_of_reduced(tropical::reduce(model_, d, base_).divisor);
    return RankResult{entry.rank, std::move(entry.obstruction), RankMethod::recursive};
}

RankEngine::Entry RankEngine::rank_of_reduced(const ModelDivisor& reduced) const {
    {
        std::shared_lock lock(mutex_);
        if (auto it = cache_.find(reduced); it != cache_.end()) return it->second;
    }

    const auto n = model_.vertex_count();
    Entry entry{-1, model_.zero()};
    if (reduced[base_] >= 0) {
        // A q-reduced D has rank <= D(q): removing D(q) + 1 chips at q leaves
        // it reduced and negative at q.
        if (reduced[base_] == 0) {
            entry = Entry{0, model_.unit(base_)};
        } else {
            int best = std::numeric_limits<int>::max();
            Vertex best_vertex = 0;
            ModelDivisor best_obstruction;
            for (Vertex v = 0; v < n; ++v) {
                ModelDivisor child = reduced;
                child[v] -= 1;
                if (v != base_) child = tropical::reduce(model_, child, base_).divisor;
                auto sub = rank_of_reduced(child);
                if (sub.rank < best) {
                    best = sub.rank;
                    best_vertex = v;
                    best_obstruction = std::move(sub.obstruction);
                    if (best == -1) break;
                }
            }
            best_obstruction[best_vertex] += 1;
            entry = Entry{best + 1, std::move(best_obstruction)};
        }
    }

    std::unique_lock lock(mutex_);
    return cache_.try_emplace(reduced, std::move(entry)).first->second;
}

RankResult rank_oracle(const ModelGraph& model, const ModelDivisor& d, std::int64_t degree_cap, Vertex q) {
    model.check_divisor(d);
    if (d.degree() > degree_cap)
        throw ResourceError("rank oracle: degree " + std::to_string(d.degree()) + " exceeds the enumeration cap " +
                            std::to_string(degree_cap));
    const auto n = model.vertex_count();
    for (std::int64_t r = 0;; ++r) {
        std::optional<ModelDivisor> failure;
        for_each_effective(n, r, [&](const ModelDivisor& e) {
            if (is_winnable(model, d - e, q)) return true;
            failure = e;
            return false;
        });
        if (failure) return RankResult{static_cast<int>(r) - 1, std::move(*failure), RankMethod::brute_force};
    }
}

bool is_special(const RankEngine& engine, const ModelDivisor& d) {
    if (!d.is_effective()) throw PreconditionError("special divisors are effective by definition");
    return engine.rank(engine.canonical() - d).rank >= 0;
}

} // namespace tropical
