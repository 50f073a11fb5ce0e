#include "tropical/verifiers.hpp"

#include <algorithm>
#include <map>

#include "parallel.hpp"
#include "tropical/enumerate.hpp"
#include "tropical/errors.hpp"

namespace tropical {

namespace {

void require_genus_at_least(const RankEngine& engine, int minimum, const char* what) {
    if (engine.genus() < minimum)
        throw ScopeError(std::string(what) + " needs genus >= " + std::to_string(minimum) + ", got " +
                         std::to_string(engine.genus()));
}

void require_effective(const ModelDivisor& d) {
    if (!d.is_effective()) throw PreconditionError("divisor must be effective");
}

// Seed for one degree's sample stream, so each degree is reproducible on its own.
std::uint64_t degree_seed(std::uint64_t seed, std::int64_t degree) {
    return seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(degree + 1));
}

// Candidates for one degree: the whole population in enumeration order when
// it fits, else seeded uniform draws. Never more than `allowance`.
std::vector<ModelDivisor> gather_candidates(std::size_t n, std::int64_t degree, const ScanOptions& options,
                                            std::size_t allowance, DegreeCoverage& coverage) {
    std::vector<ModelDivisor> out;
    coverage.degree = degree;
    coverage.population = effective_count(n, degree, options.exhaustive_limit + 1);
    if (coverage.population <= options.exhaustive_limit) {
        coverage.mode = coverage.population <= allowance ? Coverage::exhaustive : Coverage::truncated;
        for_each_effective(n, degree, [&](const ModelDivisor& d) {
            if (out.size() >= allowance) return false;
            out.push_back(d);
            return true;
        });
    } else {
        const auto draws = std::min(options.sample_budget, allowance);
        coverage.mode = draws < options.sample_budget ? Coverage::truncated : Coverage::sampled;
        std::mt19937_64 rng(degree_seed(options.seed, degree));
        for (std::size_t i = 0; i < draws; ++i) out.push_back(sample_effective(n, degree, rng));
    }
    coverage.examined = out.size();
    return out;
}

} // namespace

RiemannRochCheck check_riemann_roch(const RankEngine& engine, const ModelDivisor& d) {
    RiemannRochCheck check;
    check.rank = engine.rank(d).rank;
    check.residual_rank = engine.rank(engine.canonical() - d).rank;
    check.degree = d.degree();
    check.genus = engine.genus();
    check.holds = check.rank - check.residual_rank == check.degree - check.genus + 1;
    return check;
}

SubadditivityCheck check_subadditivity(const RankEngine& engine, const ModelDivisor& d, const ModelDivisor& e) {
    require_effective(d);
    require_effective(e);
    SubadditivityCheck check;
    check.rank_d = engine.rank(d).rank;
    check.rank_e = engine.rank(e).rank;
    check.rank_sum = engine.rank(d + e).rank;
    check.holds = check.rank_d + check.rank_e <= check.rank_sum;
    return check;
}

std::optional<G12Certificate> find_g12(const RankEngine& engine) {
    require_genus_at_least(engine, 2, "g^1_2 search");
    const auto& model = engine.model();
    G12Certificate cert;
    for_each_effective(model.vertex_count(), 2, [&](const ModelDivisor& d) {
        if (engine.rank(d).rank == 1) cert.all_found.push_back(d);
        return true;
    });
    if (cert.all_found.empty()) return std::nullopt;
    cert.representative = cert.all_found.front();
    const auto target = engine.reduce(cert.representative).divisor;
    cert.unique_class = std::all_of(cert.all_found.begin(), cert.all_found.end(),
                                    [&](const ModelDivisor& d) { return engine.reduce(d).divisor == target; });
    return cert;
}

bool check_canonical_decomposition(const RankEngine& engine, const std::optional<G12Certificate>& g12) {
    if (!g12) throw PreconditionError("canonical decomposition needs a g^1_2");
    const auto multiple = static_cast<std::int64_t>(engine.genus() - 1) * g12->representative;
    return is_equivalent(engine.model(), engine.canonical(), multiple, engine.base()).equivalent;
}

bool check_prop_degree_2g2(const RankEngine& engine, const ModelDivisor& d) {
    require_genus_at_least(engine, 2, "degree 2g-2 check");
    const int g = engine.genus();
    if (d.degree() != 2 * g - 2) return true;
    const int r = engine.rank(d).rank;
    if (r < g - 1) return true;
    return r == g - 1 && is_equivalent(engine.model(), d, engine.canonical(), engine.base()).equivalent;
}

Degree2g2Check check_prop_degree_2g2(const RankEngine& engine, const ScanOptions& options) {
    require_genus_at_least(engine, 2, "degree 2g-2 check");
    const int g = engine.genus();
    Degree2g2Check check;
    auto candidates = gather_candidates(engine.model().vertex_count(), 2 * g - 2, options, options.max_evaluations,
                                        check.coverage);
    std::vector<int> ranks(candidates.size());
    detail::parallel_for(candidates.size(), options.jobs,
                         [&](std::size_t i) { ranks[i] = engine.rank(candidates[i]).rank; });
    check.examined = candidates.size();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (ranks[i] < g - 1) continue;
        ++check.qualifying;
        if (!check_prop_degree_2g2(engine, candidates[i])) check.failures.push_back(candidates[i]);
    }
    check.holds = check.failures.empty();
    return check;
}

std::string_view to_string(Coverage coverage) {
    switch (coverage) {
    case Coverage::exhaustive: return "exhaustive";
    case Coverage::sampled: return "sampled";
    case Coverage::truncated: return "truncated";
    case Coverage::skipped: return "skipped";
    }
    return "unknown";
}

std::vector<CliffordRecord> CliffordScan::equality_cases() const {
    std::vector<CliffordRecord> out;
    for (const auto& r : records)
        if (r.equality) out.push_back(r);
    return out;
}

CliffordScan clifford_scan(const RankEngine& engine, const ScanOptions& options,
                           const std::optional<G12Certificate>& g12) {
    const auto& model = engine.model();
    const auto n = model.vertex_count();
    const int g = engine.genus();
    const std::int64_t top = std::min<std::int64_t>(2 * g - 2, options.degree_cap);

    CliffordScan scan;
    scan.base = engine.base();
    scan.g12 = g12;
    std::size_t remaining = options.max_evaluations;

    for (std::int64_t degree = 0; degree <= top; ++degree) {
        DegreeCoverage coverage;
        if (remaining == 0) {
            coverage.degree = degree;
            coverage.population = effective_count(n, degree, options.exhaustive_limit + 1);
            coverage.mode = Coverage::skipped;
            scan.coverage.push_back(coverage);
            scan.complete = false;
            scan.exhaustive = false;
            continue;
        }
        auto candidates = gather_candidates(n, degree, options, remaining, coverage);
        remaining -= candidates.size();
        scan.evaluations += candidates.size();
        if (coverage.mode != Coverage::exhaustive) scan.exhaustive = false;
        if (coverage.mode == Coverage::truncated) scan.complete = false;

        std::vector<ModelDivisor> reduced(candidates.size());
        detail::parallel_for(candidates.size(), options.jobs,
                             [&](std::size_t i) { reduced[i] = engine.reduce(candidates[i]).divisor; });
        // First candidate of each class, in candidate order.
        std::map<ModelDivisor, std::size_t> first;
        for (std::size_t i = 0; i < candidates.size(); ++i) first.try_emplace(reduced[i], i);
        std::vector<std::size_t> classes;
        for (const auto& [key, index] : first) classes.push_back(index);
        coverage.classes = classes.size();

        std::vector<CliffordRecord> records(classes.size());
        detail::parallel_for(classes.size(), options.jobs, [&](std::size_t k) {
            const auto& d = candidates[classes[k]];
            auto& rec = records[k];
            rec.representative = d;
            rec.reduced = reduced[classes[k]];
            rec.degree = degree;
            rec.rank = engine.rank(d);
            rec.residual = engine.rank(engine.canonical() - d);
            rec.special = rec.residual.rank >= 0;
            rec.equality = rec.special && 2 * static_cast<std::int64_t>(rec.rank.rank) == degree;
        });
        for (auto& rec : records) {
            if (!rec.special) continue;
            if (2 * static_cast<std::int64_t>(rec.rank.rank) > degree) ++scan.violations;
            scan.records.push_back(std::move(rec));
        }
        scan.coverage.push_back(coverage);
    }

    if (g12) {
        const auto& rep = g12->representative;
        for (auto& rec : scan.records) {
            if (!rec.equality) continue;
            const auto multiple = static_cast<std::int64_t>(rec.rank.rank) * rep;
            rec.multiple_of_g12 = is_equivalent(model, rec.representative, multiple, engine.base()).equivalent;
            if (!*rec.multiple_of_g12) ++scan.characterization_failures;
        }
        // Converse direction, checked directly rather than relying on scan coverage.
        for (int r = 0; r <= g - 1; ++r) {
            const auto multiple = static_cast<std::int64_t>(r) * rep;
            const bool special = engine.rank(engine.canonical() - multiple).rank >= 0;
            if (!special || engine.rank(multiple).rank != r) ++scan.characterization_failures;
        }
    }
    scan.holds = scan.violations == 0 && scan.characterization_failures == 0;
    return scan;
}

LowGenusCheck check_low_genus_implication(const RankEngine& engine, const CliffordScan& scan,
                                          const std::optional<G12Certificate>& g12) {
    const int g = engine.genus();
    if (g < 2 || g > 4) throw ScopeError("low-genus implication covers genus 2..4, got " + std::to_string(g));
    LowGenusCheck check;
    check.g12_found = g12.has_value();
    if (g == 2 && !check.g12_found) {
        check.holds = false;
        check.notes.push_back("genus 2 but K is not a g^1_2 on this model");
    }
    for (const auto& rec : scan.records) {
        if (!rec.equality || rec.degree <= 0 || rec.degree >= 2 * g - 2) continue;
        check.interior_equalities.push_back(rec);
        if (!check.g12_found) {
            check.holds = false;
            check.notes.push_back("interior equality of degree " + std::to_string(rec.degree) + " without a g^1_2");
        }
        if (g == 3 && !(rec.degree == 2 && rec.rank.rank == 1)) {
            check.holds = false;
            check.notes.push_back("genus 3 interior equality is not degree 2, rank 1");
        }
        if (g == 4 && rec.degree == 4) {
            const auto residual = engine.canonical() - rec.representative;
            if (residual.degree() != 2 || rec.residual.rank != 1) {
                check.holds = false;
                check.notes.push_back("genus 4 degree-4 equality whose residual is not a g^1_2");
            }
        }
    }
    return check;
}

HuntReport counterexample_search(const std::vector<HuntSubject>& subjects, int resolution, std::size_t budget,
                                 const ScanOptions& options) {
    for (const auto& s : subjects)
        if (genus(s.graph) < 5)
            throw ScopeError("hunt subject '" + s.label + "' has genus " + std::to_string(genus(s.graph)) +
                             " (needs >= 5)");
    HuntReport report;
    report.resolution = resolution;
    report.budget = budget;
    std::size_t remaining = budget;
    for (const auto& subject : subjects) {
        RankEngine engine(ModelGraph(subject.graph, resolution));
        const auto n = engine.model().vertex_count();
        const auto g12_cost = effective_count(n, 2);
        if (g12_cost > remaining) {
            report.complete = false;
            break;
        }
        remaining -= g12_cost;
        report.evaluations += g12_cost;

        HuntEntry entry;
        entry.label = subject.label;
        entry.genus = engine.genus();
        entry.model_vertices = n;
        for (Vertex v = 0; v < n; ++v) entry.vertex_labels.push_back(engine.model().vertex_label(v));
        entry.g12 = find_g12(engine);
        if (!entry.g12) {
            auto scan_options = options;
            scan_options.max_evaluations = remaining;
            auto scan = clifford_scan(engine, scan_options, std::nullopt);
            remaining -= scan.evaluations;
            report.evaluations += scan.evaluations;
            if (!scan.complete) report.complete = false;
            for (const auto& rec : scan.records)
                if (rec.equality && rec.degree > 0 && rec.degree < 2 * entry.genus - 2) entry.candidates.push_back(rec);
            entry.scan = std::move(scan);
        }
        report.entries.push_back(std::move(entry));
    }
    if (report.entries.size() < subjects.size()) report.complete = false;
    return report;
}

} // namespace tropical
