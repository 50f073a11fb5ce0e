#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "tropical/metric_graph.hpp"

namespace tropical {

using Vertex = std::size_t;

/// Integer coefficient per model vertex.
class ModelDivisor {
public:
    ModelDivisor() = default;
    explicit ModelDivisor(std::size_t vertex_count) : coefficients_(vertex_count, 0) {}
    explicit ModelDivisor(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {}

    static ModelDivisor unit(std::size_t vertex_count, Vertex v);

    std::size_t size() const { return coefficients_.size(); }
    std::int64_t operator[](Vertex v) const { return coefficients_[v]; }
    std::int64_t& operator[](Vertex v) { return coefficients_[v]; }
    std::span<const std::int64_t> coefficients() const { return coefficients_; }

    std::int64_t degree() const;
    bool is_effective() const;
    bool is_zero() const;
    std::vector<Vertex> support() const;

    ModelDivisor& operator+=(const ModelDivisor& other);
    ModelDivisor& operator-=(const ModelDivisor& other);
    friend ModelDivisor operator+(ModelDivisor x, const ModelDivisor& y) { return x += y; }
    friend ModelDivisor operator-(ModelDivisor x, const ModelDivisor& y) { return x -= y; }
    friend ModelDivisor operator*(std::int64_t k, ModelDivisor d);
    friend bool operator==(const ModelDivisor&, const ModelDivisor&) = default;
    friend auto operator<=>(const ModelDivisor&, const ModelDivisor&) = default;

private:
    std::vector<std::int64_t> coefficients_;
};

struct ModelDivisorHash {
    std::size_t operator()(const ModelDivisor& d) const noexcept;
};

DivisorSummary<Vertex> inspect_divisor(const ModelDivisor& d);

struct Neighbor {
    Vertex vertex;
    int multiplicity;
};

/// Loop-free unit-length multigraph refining a MetricGraph. Every model
/// vertex maps back to a distinct point of the source graph; the source's
/// own vertices come first, in source order, followed by subdivision points
/// edge by edge in increasing offset.
class ModelGraph {
public:
    // Every support point of `divisors` becomes a model vertex.
    ModelGraph(std::shared_ptr<const MetricGraph> source, int resolution,
               std::span<const MetricDivisor> divisors = {});
    ModelGraph(const MetricGraph& source, int resolution, std::span<const MetricDivisor> divisors = {})
        : ModelGraph(std::make_shared<const MetricGraph>(source), resolution, divisors) {}

    std::size_t vertex_count() const { return backmap_.size(); }
    // Unit edges, counted with multiplicity.
    std::size_t edge_count() const { return edge_count_; }

    std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return degree_[v]; }
    int multiplicity(Vertex u, Vertex v) const;

    const PointLocation& backmap(Vertex v) const { return backmap_.at(v); }
    std::optional<Vertex> vertex_at(const PointLocation& p) const;

    // Uniform multiplier turning every length into an integer number of unit segments.
    std::int64_t scale() const { return scale_; }
    int resolution() const { return resolution_; }
    const MetricGraph& source() const { return *source_; }

    // Throws PreconditionError if a support point is not a model vertex.
    ModelDivisor push(const MetricDivisor& d) const;
    MetricDivisor pull(const ModelDivisor& d) const;

    ModelDivisor zero() const { return ModelDivisor(vertex_count()); }
    ModelDivisor unit(Vertex v) const { return ModelDivisor::unit(vertex_count(), v); }
    ModelDivisor canonical() const;

    // StructuralError unless d has one coefficient per model vertex.
    void check_divisor(const ModelDivisor& d) const;

    std::string vertex_label(Vertex v) const;

private:
    std::shared_ptr<const MetricGraph> source_;
    int resolution_;
    std::int64_t scale_ = 1;
    std::size_t edge_count_ = 0;
    std::vector<PointLocation> backmap_;
    std::map<PointLocation, Vertex> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<int> degree_;
};

struct NormalizedModel {
    ModelGraph model;
    std::vector<ModelDivisor> divisors;
};

/// Builds the unit model whose scale is the lcm of all length and offset
/// denominators and `resolution` (doubled if some loop would otherwise be a
/// single segment), then pushes every divisor onto it.
NormalizedModel normalize_to_model(const MetricGraph& graph, std::span<const MetricDivisor> divisors,
                                   int resolution = 1);

int genus(const ModelGraph& model);

} // namespace tropical
