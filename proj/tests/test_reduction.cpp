#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "tropical/errors.hpp"
#include "tropical/fixtures.hpp"
#include "tropical/reduction.hpp"
#include "tropical/text_format.hpp"

using namespace tropical;

namespace {

ModelGraph path_abc() {
    std::istringstream in("vertex a\nvertex b\nvertex c\nedge ab a b 1\nedge bc b c 1\n");
    return ModelGraph(parse_graph(in), 1);
}

ModelDivisor make(std::vector<std::int64_t> c) { return ModelDivisor(std::move(c)); }

// Small models used for the brute-force comparisons.
std::vector<ModelGraph> small_models() {
    std::vector<ModelGraph> out;
    for (const char* name : {"theta", "dumbbell", "flower:3", "banana:3", "banana:4", "complete:4", "cycle:4",
                             "path:3", "random:5,7,2"})
        out.emplace_back(generate_fixture(name), 1);
    out.emplace_back(generate_fixture("theta"), 2);
    return out;
}

FiringScript random_script(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> dist(-3, 3);
    std::vector<std::int64_t> s(n);
    for (auto& x : s) x = dist(rng);
    return FiringScript(s);
}

} // namespace

TEST_CASE("firing scripts are normalized") {
    FiringScript s({3, 5, 4});
    CHECK(std::vector<std::int64_t>(s.counts().begin(), s.counts().end()) == std::vector<std::int64_t>{0, 2, 1});
    CHECK(FiringScript({1, 1, 1}) == FiringScript({0, 0, 0}));
}

TEST_CASE("laplacian image preserves degree") {
    std::mt19937_64 rng(1);
    for (const auto& model : small_models()) {
        for (int i = 0; i < 20; ++i) {
            auto s = random_script(model.vertex_count(), rng);
            CHECK(laplacian_image(model, s).degree() == 0);
        }
    }
}

TEST_CASE("dhar_unburnt") {
    SUBCASE("nothing fires from the zero divisor") {
        ModelGraph theta(generate_fixture("theta"), 1);
        for (Vertex q = 0; q < theta.vertex_count(); ++q) CHECK(dhar_unburnt(theta, theta.zero(), q).empty());
    }
    SUBCASE("cycle of three, D = 2x") {
        ModelGraph cycle(generate_fixture("cycle:3"), 1);
        auto d = 2 * cycle.unit(1);
        CHECK(oracle::max_legal_set(cycle, d, 0) == std::vector<Vertex>{1});
        CHECK(dhar_unburnt(cycle, d, 0) == std::vector<Vertex>{1});
    }
    SUBCASE("path, D = 2c") {
        auto path = path_abc();
        auto d = make({0, 0, 2});
        CHECK(oracle::max_legal_set(path, d, 0) == std::vector<Vertex>{2});
        CHECK(dhar_unburnt(path, d, 0) == std::vector<Vertex>{2});
    }
    SUBCASE("negative away from q") {
        auto path = path_abc();
        CHECK_THROWS_AS(dhar_unburnt(path, make({0, -1, 2}), 0), PreconditionError);
        CHECK_NOTHROW(dhar_unburnt(path, make({-4, 1, 2}), 0));
    }
    SUBCASE("agrees with subset enumeration") {
        std::mt19937_64 rng(2);
        for (const auto& model : small_models()) {
            const auto n = model.vertex_count();
            for (int i = 0; i < 200; ++i) {
                auto d = oracle::random_divisor(n, 0, 3, rng);
                const Vertex q = rng() % n;
                d[q] -= 2;
                CHECK(dhar_unburnt(model, d, q) == oracle::max_legal_set(model, d, q));
            }
        }
    }
}

TEST_CASE("reduce") {
    SUBCASE("path, 2c becomes 2a") {
        auto path = path_abc();
        auto r = reduce(path, make({0, 0, 2}), 0);
        CHECK(r.base == 0);
        CHECK(r.divisor == make({2, 0, 0}));
        CHECK(apply_script(path, make({0, 0, 2}), r.script) == r.divisor);
    }
    SUBCASE("reduced input comes back unchanged with a zero script") {
        auto path = path_abc();
        auto r = reduce(path, make({2, 0, 0}), 0);
        CHECK(r.divisor == make({2, 0, 0}));
        CHECK(r.script == FiringScript({0, 0, 0}));
    }
    SUBCASE("x - y on a 3-cycle is unwinnable") {
        ModelGraph cycle(generate_fixture("cycle:3"), 1);
        auto r = reduce(cycle, cycle.unit(1) - cycle.unit(2), 0);
        CHECK(r.divisor[0] < 0);
        CHECK_FALSE(is_winnable(cycle, cycle.unit(1) - cycle.unit(2)));
    }
    SUBCASE("output is reduced, equivalent and idempotent") {
        std::mt19937_64 rng(3);
        for (const auto& model : small_models()) {
            const auto n = model.vertex_count();
            for (int i = 0; i < 100; ++i) {
                auto d = oracle::random_divisor(n, -3, 3, rng);
                const Vertex q = rng() % n;
                auto r = reduce(model, d, q);
                CHECK(r.base == q);
                CHECK(apply_script(model, d, r.script) == r.divisor);
                CHECK(r.divisor.degree() == d.degree());
                for (Vertex v = 0; v < n; ++v)
                    if (v != q) CHECK(r.divisor[v] >= 0);
                CHECK(oracle::max_legal_set(model, r.divisor, q).empty());
                CHECK(is_reduced(model, r.divisor, q));
                CHECK(reduce(model, r.divisor, q).divisor == r.divisor);
            }
        }
    }
    SUBCASE("class invariance") {
        std::mt19937_64 rng(4);
        for (const auto& model : small_models()) {
            const auto n = model.vertex_count();
            for (int i = 0; i < 100; ++i) {
                auto d = oracle::random_divisor(n, -3, 3, rng);
                auto moved = apply_script(model, d, random_script(n, rng));
                CHECK(reduce(model, moved).divisor == reduce(model, d).divisor);
            }
        }
    }
    SUBCASE("large coefficients") {
        ModelGraph k4(generate_fixture("complete:4"), 3);
        auto d = k4.zero();
        d[k4.vertex_count() - 1] = 500;
        d[1] = -480;
        auto r = reduce(k4, d);
        CHECK(apply_script(k4, d, r.script) == r.divisor);
        CHECK(is_reduced(k4, r.divisor, 0));
    }
}

TEST_CASE("winnability is decided by the reduced value at q") {
    for (const auto& model : small_models()) {
        const auto n = model.vertex_count();
        if (n > 6) continue;
        oracle::PrincipalOracle principal(model);
        oracle::for_each_box(n, -2, 2, [&](const ModelDivisor& d) {
            if (d.degree() < -1 || d.degree() > 4) return;
            const bool expected = principal.winnable(d);
            CHECK(is_winnable(model, d) == expected);
            CHECK((reduce(model, d, n - 1).divisor[n - 1] >= 0) == expected);
        });
    }
}

TEST_CASE("is_equivalent") {
    SUBCASE("reflexive") {
        auto path = path_abc();
        auto d = make({1, -2, 4});
        auto e = is_equivalent(path, d, d);
        CHECK(e.equivalent);
        REQUIRE(e.certificate);
        CHECK(*e.certificate == FiringScript({0, 0, 0}));
    }
    SUBCASE("theta: u and v are not equivalent") {
        ModelGraph theta(generate_fixture("theta"), 1);
        auto e = is_equivalent(theta, theta.unit(0), theta.unit(1));
        CHECK_FALSE(e.equivalent);
        CHECK_FALSE(e.certificate);
    }
    SUBCASE("path: a and c are equivalent") {
        auto path = path_abc();
        auto e = is_equivalent(path, path.unit(0), path.unit(2));
        CHECK(e.equivalent);
        REQUIRE(e.certificate);
        CHECK(apply_script(path, path.unit(0), *e.certificate) == path.unit(2));
    }
    SUBCASE("mismatched sizes") {
        auto path = path_abc();
        CHECK_THROWS_AS(is_equivalent(path, path.zero(), ModelDivisor(5)), StructuralError);
    }
    SUBCASE("matches the principal oracle from two base points") {
        std::mt19937_64 rng(5);
        for (const auto& model : small_models()) {
            const auto n = model.vertex_count();
            oracle::PrincipalOracle principal(model);
            for (int i = 0; i < 150; ++i) {
                auto d = oracle::random_divisor(n, -2, 2, rng);
                // Half the time aim for an equivalent pair.
                auto e = (i % 2) ? apply_script(model, d, random_script(n, rng)) : oracle::random_divisor(n, -2, 2, rng);
                e[0] += d.degree() - e.degree();
                const bool expected = principal.principal(d - e);
                auto at_first = is_equivalent(model, d, e, 0);
                auto at_last = is_equivalent(model, d, e, n - 1);
                CHECK(at_first.equivalent == expected);
                CHECK(at_last.equivalent == expected);
                if (expected) {
                    CHECK(apply_script(model, d, *at_first.certificate) == e);
                    CHECK(*at_first.certificate == *at_last.certificate);
                }
            }
        }
    }
    SUBCASE("transitive") {
        std::mt19937_64 rng(6);
        ModelGraph k4(generate_fixture("complete:4"), 2);
        const auto n = k4.vertex_count();
        for (int i = 0; i < 50; ++i) {
            auto d = oracle::random_divisor(n, -2, 2, rng);
            auto e = apply_script(k4, d, random_script(n, rng));
            auto f = apply_script(k4, e, random_script(n, rng));
            CHECK(is_equivalent(k4, d, e).equivalent);
            CHECK(is_equivalent(k4, e, f).equivalent);
            CHECK(is_equivalent(k4, f, d).equivalent);
        }
    }
}

TEST_CASE("piecewise-linear witnesses") {
    SUBCASE("zero script gives a constant") {
        auto path = path_abc();
        auto f = script_to_witness(FiringScript({0, 0, 0}), path);
        CHECK(divisor_of(f, path).is_zero());
    }
    SUBCASE("path, fire c once") {
        auto path = path_abc();
        auto f = script_to_witness(FiringScript({0, 0, 1}), path);
        CHECK(f.slope(0, 1) == 0);
        CHECK(std::abs(f.slope(1, 2)) == 1);
        CHECK(divisor_of(f, path) == make({0, 1, -1}));
    }
    SUBCASE("min(dist(., u), 1) on the subdivided theta") {
        ModelGraph theta(generate_fixture("theta"), 2);
        REQUIRE(theta.vertex_count() == 5);
        PLFunction f({0, 1, 1, 1, 1});
        CHECK(divisor_of(f, theta) == make({3, 0, -1, -1, -1}));
        CHECK(divisor_of(f, theta) == theta.zero() - laplacian_image(theta, FiringScript({0, 1, 1, 1, 1})));
    }
    SUBCASE("divisor_of(witness) = -L s") {
        std::mt19937_64 rng(7);
        for (const auto& model : small_models()) {
            for (int i = 0; i < 30; ++i) {
                auto s = random_script(model.vertex_count(), rng);
                auto div = divisor_of(script_to_witness(s, model), model);
                CHECK(div == model.zero() - laplacian_image(model, s));
                CHECK(div.degree() == 0);
            }
        }
    }
    SUBCASE("certificate witness is E - D") {
        std::mt19937_64 rng(8);
        for (const auto& model : small_models()) {
            const auto n = model.vertex_count();
            for (int i = 0; i < 30; ++i) {
                auto d = oracle::random_divisor(n, -2, 3, rng);
                auto e = apply_script(model, d, random_script(n, rng));
                auto eq = is_equivalent(model, d, e);
                REQUIRE(eq.certificate);
                CHECK(divisor_of(script_to_witness(*eq.certificate, model), model) == e - d);
            }
        }
    }
}
