#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "tropical/rank.hpp"

namespace tropical {

struct RiemannRochCheck {
    int rank = 0;          // rank(D)
    int residual_rank = 0; // rank(K - D)
    std::int64_t degree = 0;
    int genus = 0;
    bool holds = false;
};

// rank(D) - rank(K - D) == deg D - g + 1
RiemannRochCheck check_riemann_roch(const RankEngine& engine, const ModelDivisor& d);

struct SubadditivityCheck {
    int rank_d = 0;
    int rank_e = 0;
    int rank_sum = 0; // rank(D + E)
    bool holds = false;
};

// rank(D) + rank(E) <= rank(D + E) for effective D, E.
SubadditivityCheck check_subadditivity(const RankEngine& engine, const ModelDivisor& d, const ModelDivisor& e);

/// Degree-2 rank-1 divisors supported on the model vertices. Every divisor
/// found is listed; unique_class records whether they are pairwise equivalent.
struct G12Certificate {
    ModelDivisor representative;
    std::vector<ModelDivisor> all_found;
    bool unique_class = true;
};

// ScopeError when the genus is below 2. nullopt means no g^1_2 is supported
// on this model's vertices, which is a statement about this resolution only.
std::optional<G12Certificate> find_g12(const RankEngine& engine);

// K ~ (g - 1) G for the certificate's representative G. PreconditionError without one.
bool check_canonical_decomposition(const RankEngine& engine, const std::optional<G12Certificate>& g12);

struct ScanOptions {
    std::int64_t degree_cap = std::numeric_limits<std::int64_t>::max();
    // Draws per degree when that degree is too large to enumerate.
    std::size_t sample_budget = 10000;
    std::uint64_t seed = 0;
    std::uint64_t exhaustive_limit = 1'000'000;
    // Total divisors a scan may examine before it stops and reports itself incomplete.
    std::size_t max_evaluations = std::numeric_limits<std::size_t>::max();
    unsigned jobs = 1;
};

enum class Coverage { exhaustive, sampled, truncated, skipped };

std::string_view to_string(Coverage coverage);

struct DegreeCoverage {
    std::int64_t degree = 0;
    std::uint64_t population = 0; // effective divisors of this degree, saturating
    std::size_t examined = 0;
    std::size_t classes = 0;
    Coverage mode = Coverage::exhaustive;
};

struct Degree2g2Check {
    std::size_t examined = 0;
    std::size_t qualifying = 0; // rank >= g - 1
    std::vector<ModelDivisor> failures;
    DegreeCoverage coverage;
    bool holds = true;
};

/// Over effective divisors of degree 2g - 2: every one of rank >= g - 1 has
/// rank exactly g - 1 and is equivalent to K. ScopeError when g < 2.
Degree2g2Check check_prop_degree_2g2(const RankEngine& engine, const ScanOptions& options = {});

// Single-divisor form; vacuously true unless deg D = 2g - 2 and rank >= g - 1.
bool check_prop_degree_2g2(const RankEngine& engine, const ModelDivisor& d);

struct CliffordRecord {
    ModelDivisor representative; // first divisor of the class in enumeration order
    ModelDivisor reduced;
    std::int64_t degree = 0;
    RankResult rank;
    RankResult residual; // rank of K - D
    bool special = false;
    bool equality = false;
    std::optional<bool> multiple_of_g12;
};

struct CliffordScan {
    Vertex base = kDefaultBase;
    std::vector<CliffordRecord> records; // special classes, ordered by (degree, reduced form)
    std::vector<DegreeCoverage> coverage;
    std::size_t violations = 0;          // special classes with 2 rank > degree
    std::size_t characterization_failures = 0;
    std::size_t evaluations = 0;
    std::optional<G12Certificate> g12;
    bool exhaustive = true; // every degree fully enumerated
    bool complete = true;   // no degree cut short by max_evaluations
    bool holds = true;

    std::vector<CliffordRecord> equality_cases() const;
};

/// Clifford's inequality over every class of effective divisors of degree
/// 0..2g-2 that the scan reaches. With a g^1_2 representative G it also
/// checks that each equality case of degree 2r is equivalent to r G and that
/// every r G, 0 <= r <= g - 1, attains equality.
CliffordScan clifford_scan(const RankEngine& engine, const ScanOptions& options,
                           const std::optional<G12Certificate>& g12);

struct LowGenusCheck {
    std::vector<CliffordRecord> interior_equalities; // 0 < deg < 2g - 2
    bool g12_found = false;
    bool holds = true;
    std::vector<std::string> notes;
};

// Requires 2 <= g <= 4 (ScopeError). Any interior equality case forces a g^1_2.
LowGenusCheck check_low_genus_implication(const RankEngine& engine, const CliffordScan& scan,
                                          const std::optional<G12Certificate>& g12);

struct HuntSubject {
    std::string label;
    MetricGraph graph;
};

struct HuntEntry {
    std::string label;
    int genus = 0;
    std::size_t model_vertices = 0;
    std::vector<std::string> vertex_labels;
    std::optional<G12Certificate> g12;
    std::optional<CliffordScan> scan; // only run when no g^1_2 was found
    std::vector<CliffordRecord> candidates;
};

struct HuntReport {
    int resolution = 2;
    std::size_t budget = 0;
    std::size_t evaluations = 0;
    std::vector<HuntEntry> entries;
    bool complete = true;
};

/// Looks for interior Clifford equality cases on graphs of genus >= 5 that
/// carry no g^1_2 at the scan resolution. Anything found is a candidate only.
HuntReport counterexample_search(const std::vector<HuntSubject>& subjects, int resolution, std::size_t budget,
                                 const ScanOptions& options);

} // namespace tropical
