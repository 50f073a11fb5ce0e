#include "tropical/metric_graph.hpp"

#include <charconv>
#include <numeric>

#include "tropical/errors.hpp"

namespace tropical {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

std::optional<std::int64_t> parse_int(std::string_view text) {
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
    return value;
}

} // namespace

std::optional<Rational> parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        auto n = parse_int(text);
        if (!n) return std::nullopt;
        return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d == 0) return std::nullopt;
    return Rational(*n, *d);
}

MetricGraph::MetricGraph(std::vector<std::string> vertices, std::vector<MetricEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), valence_(vertices_.size(), 0) {
    if (vertices_.empty()) throw StructuralError("graph has no vertices");
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        if (!vertex_index_.emplace(vertices_[v], v).second)
            throw StructuralError("duplicate vertex '" + vertices_[v] + "'");
    }
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::size_t components = vertices_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& edge = edges_[e];
        if (!edge_index_.emplace(edge.id, e).second) throw StructuralError("duplicate edge '" + edge.id + "'");
        if (edge.a >= vertices_.size() || edge.b >= vertices_.size())
            throw StructuralError("edge '" + edge.id + "' has an endpoint outside the graph");
        if (edge.length.numerator() <= 0) throw StructuralError("edge '" + edge.id + "' has non-positive length");
        valence_[edge.a] += 1;
        valence_[edge.b] += 1;
        auto ra = find(edge.a);
        auto rb = find(edge.b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    if (components != 1) throw StructuralError("graph is disconnected");
}

std::optional<std::size_t> MetricGraph::find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> MetricGraph::find_edge(std::string_view id) const {
    auto it = edge_index_.find(std::string(id));
    if (it == edge_index_.end()) return std::nullopt;
    return it->second;
}

std::size_t GraphBuilder::add_vertex(std::string name) {
    auto [it, inserted] = vertex_index_.emplace(name, vertices_.size());
    if (!inserted) throw StructuralError("duplicate vertex '" + name + "'");
    vertices_.push_back(std::move(name));
    return it->second;
}

void GraphBuilder::add_edge(std::string id, std::string_view u, std::string_view v, Rational length) {
    auto iu = vertex_index_.find(std::string(u));
    auto iv = vertex_index_.find(std::string(v));
    if (iu == vertex_index_.end()) throw StructuralError("unknown vertex '" + std::string(u) + "'");
    if (iv == vertex_index_.end()) throw StructuralError("unknown vertex '" + std::string(v) + "'");
    if (length.numerator() <= 0) throw StructuralError("edge '" + id + "' has non-positive length");
    if (!edge_index_.emplace(id, edges_.size()).second) throw StructuralError("duplicate edge '" + id + "'");
    edges_.push_back(MetricEdge{std::move(id), iu->second, iv->second, length});
}

bool GraphBuilder::has_vertex(std::string_view name) const { return vertex_index_.contains(std::string(name)); }
bool GraphBuilder::has_edge(std::string_view id) const { return edge_index_.contains(std::string(id)); }

MetricGraph GraphBuilder::build() const { return MetricGraph(vertices_, edges_); }

PointLocation PointLocation::on_edge(const MetricGraph& graph, std::size_t edge, Rational offset) {
    const auto& e = graph.edge(edge);
    if (offset.numerator() < 0 || offset > e.length)
        throw PreconditionError("offset " + to_string(offset) + " outside edge '" + e.id + "' of length " +
                                to_string(e.length));
    if (offset.numerator() == 0) return at_vertex(e.a);
    if (offset == e.length) return at_vertex(e.b);
    return PointLocation(edge, offset);
}

std::size_t PointLocation::vertex() const {
    if (!is_vertex()) throw PreconditionError("point is not a vertex");
    return index_;
}

std::size_t PointLocation::edge() const {
    if (is_vertex()) throw PreconditionError("point is a vertex");
    return index_;
}

bool operator<(const PointLocation& x, const PointLocation& y) {
    if (x.is_vertex() != y.is_vertex()) return x.is_vertex();
    if (x.index_ != y.index_) return x.index_ < y.index_;
    return x.offset_ < y.offset_;
}

bool lies_on(const MetricGraph& graph, const PointLocation& p) {
    if (p.is_vertex()) return p.vertex() < graph.vertex_count();
    return p.edge() < graph.edge_count() && p.offset().numerator() > 0 && p.offset() < graph.edge(p.edge()).length;
}

std::string point_label(const MetricGraph& graph, const PointLocation& p) {
    if (p.is_vertex()) return graph.vertex_name(p.vertex());
    return graph.edge(p.edge()).id + "@" + to_string(p.offset());
}

void MetricDivisor::add(const PointLocation& p, std::int64_t coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = entries_.emplace(p, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) entries_.erase(it);
    }
}

std::int64_t MetricDivisor::coefficient(const PointLocation& p) const {
    auto it = entries_.find(p);
    return it == entries_.end() ? 0 : it->second;
}

std::int64_t MetricDivisor::degree() const {
    std::int64_t total = 0;
    for (const auto& [p, a] : entries_) total += a;
    return total;
}

bool MetricDivisor::is_effective() const {
    for (const auto& [p, a] : entries_)
        if (a < 0) return false;
    return true;
}

MetricDivisor& MetricDivisor::operator+=(const MetricDivisor& other) {
    for (const auto& [p, a] : other.entries_) add(p, a);
    return *this;
}

MetricDivisor& MetricDivisor::operator-=(const MetricDivisor& other) {
    for (const auto& [p, a] : other.entries_) add(p, -a);
    return *this;
}

MetricDivisor operator*(std::int64_t k, const MetricDivisor& d) {
    MetricDivisor out;
    for (const auto& [p, a] : d.entries_) out.add(p, k * a);
    return out;
}

DivisorSummary<PointLocation> inspect_divisor(const MetricDivisor& d) {
    DivisorSummary<PointLocation> summary;
    for (const auto& [p, a] : d.entries()) {
        summary.degree += a;
        summary.support.push_back(p);
        if (a < 0) summary.effective = false;
    }
    return summary;
}

int genus(const MetricGraph& graph) {
    return static_cast<int>(graph.edge_count()) - static_cast<int>(graph.vertex_count()) + 1;
}

MetricDivisor canonical_divisor(const MetricGraph& graph) {
    MetricDivisor k;
    for (std::size_t v = 0; v < graph.vertex_count(); ++v)
        k.add(PointLocation::at_vertex(v), graph.valence(v) - 2);
    return k;
}

} // namespace tropical
