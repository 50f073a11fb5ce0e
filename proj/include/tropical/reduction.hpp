#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tropical/model_graph.hpp"

namespace tropical {

// Lowest-indexed model vertex; every report records the base point it used.
inline constexpr Vertex kDefaultBase = 0;

/// Net number of times each model vertex fires. Firing vertex v sends one
/// chip along every edge at v, so a script s changes a divisor D into
/// D - L s, where L is the graph Laplacian. Stored normalized (minimum
/// entry 0); adding a constant to every entry does not change L s.
class FiringScript {
public:
    FiringScript() = default;
    explicit FiringScript(std::vector<std::int64_t> counts);

    std::size_t size() const { return counts_.size(); }
    std::int64_t operator[](Vertex v) const { return counts_[v]; }
    std::span<const std::int64_t> counts() const { return counts_; }

    friend FiringScript operator-(const FiringScript& x, const FiringScript& y);
    friend bool operator==(const FiringScript&, const FiringScript&) = default;

private:
    std::vector<std::int64_t> counts_;
};

// L s
ModelDivisor laplacian_image(const ModelGraph& model, const FiringScript& script);
// D - L s
ModelDivisor apply_script(const ModelGraph& model, const ModelDivisor& d, const FiringScript& script);

struct ReducedForm {
    Vertex base;
    ModelDivisor divisor;
    FiringScript script; // divisor == apply_script(input, script)
};

/// Dhar's burning test. Returns, in increasing order, the largest set of
/// vertices other than q that can fire together without any of them going
/// negative. Empty iff d is q-reduced. Requires d >= 0 away from q.
std::vector<Vertex> dhar_unburnt(const ModelGraph& model, const ModelDivisor& d, Vertex q);

bool is_reduced(const ModelGraph& model, const ModelDivisor& d, Vertex q);

/// The unique q-reduced divisor equivalent to d, with the firing script that
/// produces it.
ReducedForm reduce(const ModelGraph& model, const ModelDivisor& d, Vertex q = kDefaultBase);

// d is equivalent to an effective divisor.
bool is_winnable(const ModelGraph& model, const ModelDivisor& d, Vertex q = kDefaultBase);

struct Equivalence {
    bool equivalent = false;
    Vertex base = kDefaultBase;
    // When equivalent: e == apply_script(d, *certificate).
    std::optional<FiringScript> certificate;
};

Equivalence is_equivalent(const ModelGraph& model, const ModelDivisor& d, const ModelDivisor& e,
                          Vertex q = kDefaultBase);

/// Piecewise-linear function given by its values at model vertices and
/// extended linearly along each unit edge, so every slope is an integer.
/// Values are normalized to minimum 0.
class PLFunction {
public:
    explicit PLFunction(std::vector<std::int64_t> values);

    std::span<const std::int64_t> values() const { return values_; }
    std::int64_t value(Vertex v) const { return values_[v]; }
    // Slope leaving `from` along a unit edge towards `to`.
    std::int64_t slope(Vertex from, Vertex to) const { return values_[to] - values_[from]; }

private:
    std::vector<std::int64_t> values_;
};

// The function whose divisor is -L s.
PLFunction script_to_witness(const FiringScript& script, const ModelGraph& model);

// Order at each vertex: sum of outgoing slopes, edges counted with multiplicity.
ModelDivisor divisor_of(const PLFunction& f, const ModelGraph& model);

} // namespace tropical
