#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tropical/metric_graph.hpp"

namespace tropical {

enum class LengthMode { unit, random };

/// A named graph family with its parameters:
///   theta | dumbbell | banana:n | flower:k | cycle:n | complete:n | path:n
///   | random:<vertices>,<edges>,<seed>
/// Lengths are 1 by default, or seeded rationals num/den with den <= max_denominator.
struct FixtureSpec {
    std::string family;
    std::vector<std::int64_t> params;
    LengthMode lengths = LengthMode::unit;
    std::int64_t max_denominator = 4;
    std::uint64_t length_seed = 0;
};

// Throws ParameterError on unknown families or malformed parameter lists.
FixtureSpec parse_fixture_spec(std::string_view text);
std::string describe(const FixtureSpec& spec);

// Throws ParameterError for invalid parameters (banana:1, path:0, too few random edges, ...).
MetricGraph generate_fixture(const FixtureSpec& spec);
MetricGraph generate_fixture(std::string_view text);

// Closed-form genus of the family, or nullopt for random graphs.
std::optional<int> family_genus(const FixtureSpec& spec);

} // namespace tropical
