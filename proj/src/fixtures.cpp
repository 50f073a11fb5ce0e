#include "tropical/fixtures.hpp"

#include <charconv>
#include <random>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

struct FamilyInfo {
    std::string_view name;
    std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {"theta", 0}, {"dumbbell", 0}, {"banana", 1}, {"flower", 1},
    {"cycle", 1}, {"complete", 1}, {"path", 1},   {"random", 3},
};

std::string vertex(std::int64_t i) { return "v" + std::to_string(i); }

class EdgeNamer {
public:
    std::string next() { return "e" + std::to_string(++count_); }

private:
    int count_ = 0;
};

} // namespace

FixtureSpec parse_fixture_spec(std::string_view text) {
    FixtureSpec spec;
    auto colon = text.find(':');
    spec.family = std::string(text.substr(0, colon));
    if (colon != std::string_view::npos) {
        auto rest = text.substr(colon + 1);
        while (!rest.empty()) {
            auto comma = rest.find(',');
            auto item = rest.substr(0, comma);
            std::int64_t value = 0;
            auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
            if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
                throw ParameterError("malformed fixture parameter '" + std::string(item) + "' in '" +
                                     std::string(text) + "'");
            spec.params.push_back(value);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
    }
    for (const auto& f : kFamilies) {
        if (f.name != spec.family) continue;
        if (spec.params.size() != f.arity)
            throw ParameterError("fixture '" + spec.family + "' takes " + std::to_string(f.arity) + " parameter(s)");
        return spec;
    }
    throw ParameterError("unknown fixture family '" + spec.family + "'");
}

std::string describe(const FixtureSpec& spec) {
    std::string out = spec.family;
    for (std::size_t i = 0; i < spec.params.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(spec.params[i]);
    if (spec.lengths == LengthMode::random)
        out += " lengths=random(den<=" + std::to_string(spec.max_denominator) + ",seed=" +
               std::to_string(spec.length_seed) + ")";
    return out;
}

std::optional<int> family_genus(const FixtureSpec& spec) {
    const auto& f = spec.family;
    auto p = [&](std::size_t i) { return static_cast<int>(spec.params.at(i)); };
    if (f == "theta" || f == "dumbbell") return 2;
    if (f == "banana") return p(0) - 1;
    if (f == "flower") return p(0);
    if (f == "cycle") return 1;
    if (f == "path") return 0;
    if (f == "complete") return (p(0) - 1) * (p(0) - 2) / 2;
    return std::nullopt;
}

MetricGraph generate_fixture(const FixtureSpec& spec) {
    GraphBuilder b;
    EdgeNamer names;
    std::mt19937_64 length_rng(spec.length_seed);
    if (spec.lengths == LengthMode::random && spec.max_denominator < 1)
        throw ParameterError("max denominator must be positive");
    auto length = [&]() -> Rational {
        if (spec.lengths == LengthMode::unit) return Rational(1);
        std::uniform_int_distribution<std::int64_t> den_dist(1, spec.max_denominator);
        auto den = den_dist(length_rng);
        std::uniform_int_distribution<std::int64_t> num_dist(1, 2 * den);
        return Rational(num_dist(length_rng), den);
    };
    auto edge = [&](std::string_view u, std::string_view v) { b.add_edge(names.next(), u, v, length()); };
    auto need = [&](bool ok, const std::string& why) {
        if (!ok) throw ParameterError(describe(spec) + ": " + why);
    };
    const auto& f = spec.family;

    if (f == "theta" || f == "banana") {
        const auto count = f == "theta" ? 3 : spec.params.at(0);
        need(count >= 2, "banana needs at least 2 edges");
        b.add_vertex("u");
        b.add_vertex("v");
        for (std::int64_t i = 0; i < count; ++i) edge("u", "v");
    } else if (f == "dumbbell") {
        b.add_vertex("a");
        b.add_vertex("b");
        edge("a", "a");
        edge("a", "b");
        edge("b", "b");
    } else if (f == "flower") {
        const auto petals = spec.params.at(0);
        need(petals >= 1, "flower needs at least 1 petal");
        b.add_vertex("c");
        for (std::int64_t i = 0; i < petals; ++i) edge("c", "c");
    } else if (f == "cycle") {
        const auto n = spec.params.at(0);
        need(n >= 1, "cycle needs at least 1 vertex");
        for (std::int64_t i = 0; i < n; ++i) b.add_vertex(vertex(i));
        for (std::int64_t i = 0; i < n; ++i) edge(vertex(i), vertex((i + 1) % n));
    } else if (f == "path") {
        const auto n = spec.params.at(0);
        need(n >= 1, "path needs at least 1 vertex");
        for (std::int64_t i = 0; i < n; ++i) b.add_vertex(vertex(i));
        for (std::int64_t i = 0; i + 1 < n; ++i) edge(vertex(i), vertex(i + 1));
    } else if (f == "complete") {
        const auto n = spec.params.at(0);
        need(n >= 1, "complete graph needs at least 1 vertex");
        for (std::int64_t i = 0; i < n; ++i) b.add_vertex(vertex(i));
        for (std::int64_t i = 0; i < n; ++i)
            for (std::int64_t j = i + 1; j < n; ++j) edge(vertex(i), vertex(j));
    } else if (f == "random") {
        const auto n = spec.params.at(0);
        const auto m = spec.params.at(1);
        need(n >= 1, "random graph needs at least 1 vertex");
        need(m >= n - 1, "random graph needs at least vertices - 1 edges to be connected");
        std::mt19937_64 rng(static_cast<std::uint64_t>(spec.params.at(2)));
        for (std::int64_t i = 0; i < n; ++i) b.add_vertex(vertex(i));
        // Random spanning tree first, then extra edges anywhere (loops and parallels allowed).
        for (std::int64_t i = 1; i < n; ++i) {
            std::uniform_int_distribution<std::int64_t> parent(0, i - 1);
            edge(vertex(parent(rng)), vertex(i));
        }
        std::uniform_int_distribution<std::int64_t> any(0, n - 1);
        for (std::int64_t k = n - 1; k < m; ++k) {
            auto u = any(rng);
            auto v = any(rng);
            edge(vertex(u), vertex(v));
        }
    } else {
        throw ParameterError("unknown fixture family '" + f + "'");
    }
    return b.build();
}

MetricGraph generate_fixture(std::string_view text) { return generate_fixture(parse_fixture_spec(text)); }

} // namespace tropical
