#include "tropical/model_graph.hpp"

#include <algorithm>
#include <numeric>

#include "tropical/errors.hpp"

namespace tropical {

ModelDivisor ModelDivisor::unit(std::size_t vertex_count, Vertex v) {
    ModelDivisor d(vertex_count);
    d[v] = 1;
    return d;
}

std::int64_t ModelDivisor::degree() const {
    return std::accumulate(coefficients_.begin(), coefficients_.end(), std::int64_t{0});
}

bool ModelDivisor::is_effective() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](auto a) { return a >= 0; });
}

bool ModelDivisor::is_zero() const {
    return std::all_of(coefficients_.begin(), coefficients_.end(), [](auto a) { return a == 0; });
}

std::vector<Vertex> ModelDivisor::support() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < coefficients_.size(); ++v)
        if (coefficients_[v] != 0) out.push_back(v);
    return out;
}

ModelDivisor& ModelDivisor::operator+=(const ModelDivisor& other) {
    if (other.size() != size()) throw StructuralError("divisors live on different models");
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
}

ModelDivisor& ModelDivisor::operator-=(const ModelDivisor& other) {
    if (other.size() != size()) throw StructuralError("divisors live on different models");
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    return *this;
}

ModelDivisor operator*(std::int64_t k, ModelDivisor d) {
    for (auto& a : d.coefficients_) a *= k;
    return d;
}

std::size_t ModelDivisorHash::operator()(const ModelDivisor& d) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (auto a : d.coefficients()) {
        h ^= static_cast<std::size_t>(a) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

DivisorSummary<Vertex> inspect_divisor(const ModelDivisor& d) {
    return {d.degree(), d.support(), d.is_effective()};
}

ModelGraph::ModelGraph(std::shared_ptr<const MetricGraph> source, int resolution,
                       std::span<const MetricDivisor> divisors)
    : source_(std::move(source)), resolution_(resolution) {
    if (resolution < 1) throw PreconditionError("resolution must be at least 1");
    const auto& g = *source_;

    std::int64_t scale = resolution;
    for (const auto& e : g.edges()) scale = std::lcm(scale, e.length.denominator());
    for (const auto& d : divisors) {
        for (const auto& [p, a] : d.entries()) {
            if (!lies_on(g, p)) throw PreconditionError("divisor point does not lie on the graph");
            if (!p.is_vertex()) scale = std::lcm(scale, p.offset().denominator());
        }
    }
    for (const auto& e : g.edges()) {
        if (e.is_loop() && e.length * scale == Rational(1)) {
            scale *= 2;
            break;
        }
    }
    scale_ = scale;

    for (std::size_t v = 0; v < g.vertex_count(); ++v) backmap_.push_back(PointLocation::at_vertex(v));

    std::vector<std::pair<Vertex, Vertex>> unit_edges;
    for (std::size_t ei = 0; ei < g.edge_count(); ++ei) {
        const auto& e = g.edge(ei);
        Rational scaled = e.length * scale;
        auto segments = scaled.numerator();
        Vertex previous = e.a;
        for (std::int64_t k = 1; k < segments; ++k) {
            Vertex next = backmap_.size();
            backmap_.push_back(PointLocation::on_edge(g, ei, Rational(k, scale)));
            unit_edges.emplace_back(previous, next);
            previous = next;
        }
        unit_edges.emplace_back(previous, e.b);
    }

    const std::size_t n = backmap_.size();
    for (Vertex v = 0; v < n; ++v) index_.emplace(backmap_[v], v);

    adjacency_.assign(n, {});
    degree_.assign(n, 0);
    for (auto [u, v] : unit_edges) {
        auto bump = [&](Vertex from, Vertex to) {
            auto& list = adjacency_[from];
            auto it = std::find_if(list.begin(), list.end(), [&](const Neighbor& nb) { return nb.vertex == to; });
            if (it == list.end())
                list.push_back({to, 1});
            else
                ++it->multiplicity;
            ++degree_[from];
        };
        bump(u, v);
        bump(v, u);
    }
    for (auto& list : adjacency_)
        std::sort(list.begin(), list.end(), [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
    edge_count_ = unit_edges.size();
}

int ModelGraph::multiplicity(Vertex u, Vertex v) const {
    for (const auto& nb : adjacency_.at(u))
        if (nb.vertex == v) return nb.multiplicity;
    return 0;
}

std::optional<Vertex> ModelGraph::vertex_at(const PointLocation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

ModelDivisor ModelGraph::push(const MetricDivisor& d) const {
    ModelDivisor out(vertex_count());
    for (const auto& [p, a] : d.entries()) {
        auto v = vertex_at(p);
        if (!v)
            throw PreconditionError("point " + (lies_on(*source_, p) ? point_label(*source_, p) : "?") +
                                    " is not a vertex of the model at scale " + std::to_string(scale_));
        out[*v] += a;
    }
    return out;
}

MetricDivisor ModelGraph::pull(const ModelDivisor& d) const {
    check_divisor(d);
    MetricDivisor out;
    for (Vertex v = 0; v < d.size(); ++v) out.add(backmap_[v], d[v]);
    return out;
}

ModelDivisor ModelGraph::canonical() const { return push(canonical_divisor(*source_)); }

void ModelGraph::check_divisor(const ModelDivisor& d) const {
    if (d.size() != vertex_count())
        throw StructuralError("divisor has " + std::to_string(d.size()) + " coefficients but the model has " +
                              std::to_string(vertex_count()) + " vertices");
}

std::string ModelGraph::vertex_label(Vertex v) const { return point_label(*source_, backmap_.at(v)); }

NormalizedModel normalize_to_model(const MetricGraph& graph, std::span<const MetricDivisor> divisors,
                                   int resolution) {
    NormalizedModel out{ModelGraph(graph, resolution, divisors), {}};
    for (const auto& d : divisors) out.divisors.push_back(out.model.push(d));
    return out;
}

int genus(const ModelGraph& model) {
    return static_cast<int>(model.edge_count()) - static_cast<int>(model.vertex_count()) + 1;
}

} // namespace tropical
