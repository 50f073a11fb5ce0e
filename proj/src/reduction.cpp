#include "tropical/reduction.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

std::vector<std::int64_t> normalized(std::vector<std::int64_t> counts) {
    if (counts.empty()) return counts;
    auto low = *std::min_element(counts.begin(), counts.end());
    for (auto& c : counts) c -= low;
    return counts;
}

void check_vertex(const ModelGraph& model, Vertex q) {
    if (q >= model.vertex_count()) throw PreconditionError("base point outside the model");
}

// Fires every vertex flagged in `set` `times` times, updating d and script.
void fire_set(const ModelGraph& model, const std::vector<char>& set, std::int64_t times, ModelDivisor& d,
              std::vector<std::int64_t>& script) {
    for (Vertex u = 0; u < model.vertex_count(); ++u) {
        if (!set[u]) continue;
        script[u] += times;
        for (const auto& nb : model.neighbors(u)) {
            if (set[nb.vertex]) continue;
            d[u] -= times * nb.multiplicity;
            d[nb.vertex] += times * nb.multiplicity;
        }
    }
}

} // namespace

FiringScript::FiringScript(std::vector<std::int64_t> counts) : counts_(normalized(std::move(counts))) {}

FiringScript operator-(const FiringScript& x, const FiringScript& y) {
    if (x.size() != y.size()) throw StructuralError("scripts live on different models");
    std::vector<std::int64_t> diff(x.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = x.counts_[i] - y.counts_[i];
    return FiringScript(std::move(diff));
}

ModelDivisor laplacian_image(const ModelGraph& model, const FiringScript& script) {
    if (script.size() != model.vertex_count()) throw StructuralError("script does not match the model");
    ModelDivisor out(model.vertex_count());
    for (Vertex v = 0; v < model.vertex_count(); ++v) {
        std::int64_t value = model.degree(v) * script[v];
        for (const auto& nb : model.neighbors(v)) value -= nb.multiplicity * script[nb.vertex];
        out[v] = value;
    }
    return out;
}

ModelDivisor apply_script(const ModelGraph& model, const ModelDivisor& d, const FiringScript& script) {
    model.check_divisor(d);
    return d - laplacian_image(model, script);
}

std::vector<Vertex> dhar_unburnt(const ModelGraph& model, const ModelDivisor& d, Vertex q) {
    model.check_divisor(d);
    check_vertex(model, q);
    const auto n = model.vertex_count();
    for (Vertex v = 0; v < n; ++v)
        if (v != q && d[v] < 0) throw PreconditionError("divisor is negative away from the base point");

    std::vector<char> burnt(n, 0);
    std::vector<std::int64_t> exposure(n, 0);
    std::deque<Vertex> queue{q};
    burnt[q] = 1;
    while (!queue.empty()) {
        Vertex b = queue.front();
        queue.pop_front();
        for (const auto& nb : model.neighbors(b)) {
            if (burnt[nb.vertex]) continue;
            exposure[nb.vertex] += nb.multiplicity;
            if (exposure[nb.vertex] > d[nb.vertex]) {
                burnt[nb.vertex] = 1;
                queue.push_back(nb.vertex);
            }
        }
    }
    std::vector<Vertex> unburnt;
    for (Vertex v = 0; v < n; ++v)
        if (!burnt[v]) unburnt.push_back(v);
    return unburnt;
}

bool is_reduced(const ModelGraph& model, const ModelDivisor& d, Vertex q) {
    for (Vertex v = 0; v < d.size(); ++v)
        if (v != q && d[v] < 0) return false;
    return dhar_unburnt(model, d, q).empty();
}

ReducedForm reduce(const ModelGraph& model, const ModelDivisor& input, Vertex q) {
    model.check_divisor(input);
    check_vertex(model, q);
    const auto n = model.vertex_count();
    ModelDivisor d = input;
    std::vector<std::int64_t> script(n, 0);

    // Phase 1: clear debt away from q, outermost BFS layer first. Firing the
    // ball of radius k-1 only feeds layer k, so finished layers stay clear.
    std::vector<std::size_t> dist(n, std::numeric_limits<std::size_t>::max());
    std::vector<std::vector<Vertex>> layers{{q}};
    dist[q] = 0;
    for (std::size_t k = 0; k < layers.size(); ++k) {
        std::vector<Vertex> next;
        for (Vertex u : layers[k])
            for (const auto& nb : model.neighbors(u))
                if (dist[nb.vertex] == std::numeric_limits<std::size_t>::max()) {
                    dist[nb.vertex] = k + 1;
                    next.push_back(nb.vertex);
                }
        if (!next.empty()) layers.push_back(std::move(next));
    }
    for (std::size_t k = layers.size() - 1; k >= 1; --k) {
        std::int64_t times = 0;
        for (Vertex v : layers[k]) {
            if (d[v] >= 0) continue;
            std::int64_t inward = 0;
            for (const auto& nb : model.neighbors(v))
                if (dist[nb.vertex] + 1 == k) inward += nb.multiplicity;
            times = std::max(times, (-d[v] + inward - 1) / inward);
        }
        if (times > 0) {
            std::vector<char> ball(n, 0);
            for (Vertex u = 0; u < n; ++u) ball[u] = dist[u] < k;
            fire_set(model, ball, times, d, script);
        }
    }

    // Phase 2: fire the unburnt set as often as it stays legal, until Dhar's
    // test burns everything.
    for (;;) {
        auto unburnt = dhar_unburnt(model, d, q);
        if (unburnt.empty()) break;
        std::vector<char> set(n, 0);
        for (Vertex v : unburnt) set[v] = 1;
        std::int64_t times = std::numeric_limits<std::int64_t>::max();
        for (Vertex v : unburnt) {
            std::int64_t outward = 0;
            for (const auto& nb : model.neighbors(v))
                if (!set[nb.vertex]) outward += nb.multiplicity;
            if (outward > 0) times = std::min(times, d[v] / outward);
        }
        fire_set(model, set, times, d, script);
    }
    return ReducedForm{q, std::move(d), FiringScript(std::move(script))};
}

bool is_winnable(const ModelGraph& model, const ModelDivisor& d, Vertex q) {
    if (d.degree() < 0) return false;
    return reduce(model, d, q).divisor[q] >= 0;
}

Equivalence is_equivalent(const ModelGraph& model, const ModelDivisor& d, const ModelDivisor& e, Vertex q) {
    model.check_divisor(d);
    model.check_divisor(e);
    Equivalence result;
    result.base = q;
    if (d.degree() != e.degree()) return result;
    auto rd = reduce(model, d, q);
    auto re = reduce(model, e, q);
    if (rd.divisor != re.divisor) return result;
    result.equivalent = true;
    result.certificate = rd.script - re.script;
    return result;
}

PLFunction::PLFunction(std::vector<std::int64_t> values) : values_(normalized(std::move(values))) {}

PLFunction script_to_witness(const FiringScript& script, const ModelGraph& model) {
    if (script.size() != model.vertex_count()) throw StructuralError("script does not match the model");
    return PLFunction(std::vector<std::int64_t>(script.counts().begin(), script.counts().end()));
}

ModelDivisor divisor_of(const PLFunction& f, const ModelGraph& model) {
    if (f.values().size() != model.vertex_count()) throw StructuralError("function does not match the model");
    ModelDivisor out(model.vertex_count());
    for (Vertex v = 0; v < model.vertex_count(); ++v) {
        std::int64_t order = 0;
        for (const auto& nb : model.neighbors(v)) order += nb.multiplicity * f.slope(v, nb.vertex);
        out[v] = order;
    }
    return out;
}

} // namespace tropical
