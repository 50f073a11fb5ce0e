#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tropical/rational.hpp"

namespace tropical {

struct MetricEdge {
    std::string id;
    std::size_t a;
    std::size_t b;
    Rational length;

    bool is_loop() const { return a == b; }
};

/// Compact tropical curve: a finite connected multigraph (loops allowed)
/// with a positive rational length on every edge.
///
/// Instances are immutable and always valid; construction throws
/// StructuralError on disconnected input, duplicate identifiers, dangling
/// endpoints or non-positive lengths.
class MetricGraph {
public:
    MetricGraph(std::vector<std::string> vertices, std::vector<MetricEdge> edges);

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& vertex_name(std::size_t v) const { return vertices_.at(v); }
    std::span<const std::string> vertex_names() const { return vertices_; }
    const MetricEdge& edge(std::size_t e) const { return edges_.at(e); }
    std::span<const MetricEdge> edges() const { return edges_; }

    std::optional<std::size_t> find_vertex(std::string_view name) const;
    std::optional<std::size_t> find_edge(std::string_view id) const;

    // Number of incident half-edges; a loop contributes 2.
    int valence(std::size_t v) const { return valence_.at(v); }

private:
    std::vector<std::string> vertices_;
    std::vector<MetricEdge> edges_;
    std::vector<int> valence_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// Incremental construction by name, used by the parser and the fixture generators.
class GraphBuilder {
public:
    std::size_t add_vertex(std::string name);
    void add_edge(std::string id, std::string_view u, std::string_view v, Rational length);
    bool has_vertex(std::string_view name) const;
    bool has_edge(std::string_view id) const;

    MetricGraph build() const;

private:
    std::vector<std::string> vertices_;
    std::vector<MetricEdge> edges_;
    std::unordered_map<std::string, std::size_t> vertex_index_;
    std::unordered_map<std::string, std::size_t> edge_index_;
};

/// A point of a metric graph in canonical form: either a vertex, or an
/// interior point of an edge at offset 0 < t < length measured from the
/// edge's first endpoint.
class PointLocation {
public:
    static PointLocation at_vertex(std::size_t vertex) { return PointLocation(vertex, Rational(0)); }

    // Canonicalizes: offset 0 and offset == length map to the endpoints.
    // Throws PreconditionError when the offset lies outside [0, length].
    static PointLocation on_edge(const MetricGraph& graph, std::size_t edge, Rational offset);

    bool is_vertex() const { return offset_.numerator() == 0; }
    std::size_t vertex() const;
    std::size_t edge() const;
    const Rational& offset() const { return offset_; }

    friend bool operator==(const PointLocation& x, const PointLocation& y) {
        return x.index_ == y.index_ && x.offset_ == y.offset_;
    }
    // Vertices sort before edge points; edge points by (edge, offset).
    friend bool operator<(const PointLocation& x, const PointLocation& y);

private:
    PointLocation(std::size_t index, Rational offset) : index_(index), offset_(offset) {}

    std::size_t index_;
    Rational offset_;
};

bool lies_on(const MetricGraph& graph, const PointLocation& p);

// "u" for a vertex, "e1@1/2" for an interior edge point.
std::string point_label(const MetricGraph& graph, const PointLocation& p);

template <typename Point>
struct DivisorSummary {
    std::int64_t degree = 0;
    std::vector<Point> support;
    bool effective = true;
};

/// Finitely supported integer combination of points. Zero coefficients are
/// never stored, so the key set is exactly the support.
class MetricDivisor {
public:
    MetricDivisor() = default;

    void add(const PointLocation& p, std::int64_t coefficient);
    std::int64_t coefficient(const PointLocation& p) const;
    const std::map<PointLocation, std::int64_t>& entries() const { return entries_; }

    std::int64_t degree() const;
    bool is_effective() const;
    bool empty() const { return entries_.empty(); }

    MetricDivisor& operator+=(const MetricDivisor& other);
    MetricDivisor& operator-=(const MetricDivisor& other);
    friend MetricDivisor operator+(MetricDivisor x, const MetricDivisor& y) { return x += y; }
    friend MetricDivisor operator-(MetricDivisor x, const MetricDivisor& y) { return x -= y; }
    friend MetricDivisor operator*(std::int64_t k, const MetricDivisor& d);
    friend bool operator==(const MetricDivisor&, const MetricDivisor&) = default;

private:
    std::map<PointLocation, std::int64_t> entries_;
};

DivisorSummary<PointLocation> inspect_divisor(const MetricDivisor& d);

int genus(const MetricGraph& graph);

// Coefficient valence(v) - 2 at every vertex; interior points carry nothing.
MetricDivisor canonical_divisor(const MetricGraph& graph);

} // namespace tropical
