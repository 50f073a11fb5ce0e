#include "tropical/run.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "tropical/enumerate.hpp"
#include "tropical/errors.hpp"
#include "tropical/fixtures.hpp"
#include "tropical/text_format.hpp"

namespace tropical {

namespace {

struct Check {
    std::string name;
    bool passed;
};

class Report {
public:
    void check(std::string name, bool passed) { checks_.push_back({std::move(name), passed}); }
    bool passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }
    Json checks_json() const {
        Json out = Json::array();
        for (const auto& c : checks_) out.push_back(Json{{"name", c.name}, {"passed", c.passed}});
        return out;
    }

    Json result = Json::object();

private:
    std::vector<Check> checks_;
};

struct GraphSource {
    std::string label;
    MetricGraph graph;
};

FixtureSpec fixture_with_lengths(const std::string& text, const RunConfig& config) {
    auto spec = parse_fixture_spec(text);
    if (config.lengths == "unit") return spec;
    const std::string prefix = "random:";
    if (config.lengths.rfind(prefix, 0) != 0) throw UsageError("--lengths expects unit or random:<max denominator>");
    try {
        spec.max_denominator = std::stoll(config.lengths.substr(prefix.size()));
    } catch (const std::exception&) {
        throw UsageError("--lengths expects unit or random:<max denominator>");
    }
    spec.lengths = LengthMode::random;
    spec.length_seed = config.seed;
    return spec;
}

GraphSource single_graph(const RunConfig& config) {
    if (config.graph_path && !config.fixtures.empty()) throw UsageError("--graph and --fixture are mutually exclusive");
    if (config.fixtures.size() > 1) throw UsageError(config.command + " takes a single --fixture");
    if (config.graph_path) return {*config.graph_path, parse_graph_file(*config.graph_path)};
    if (config.fixtures.empty()) throw UsageError(config.command + " needs --graph or --fixture");
    auto spec = fixture_with_lengths(config.fixtures.front(), config);
    return {describe(spec), generate_fixture(spec)};
}

MetricDivisor resolve_divisor(const std::string& arg, const MetricGraph& graph) {
    if (arg == "K") return canonical_divisor(graph);
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return parse_divisor_file(arg, graph);
    if (arg.find("chip") != std::string::npos) return parse_divisor_text(arg, graph);
    throw UsageError("divisor '" + arg + "' is neither K, a readable file, nor inline chip declarations");
}

Json graph_json(const GraphSource& source) {
    return Json{{"source", source.label},
                {"vertices", source.graph.vertex_count()},
                {"edges", source.graph.edge_count()},
                {"genus", genus(source.graph)}};
}

Json config_json(const RunConfig& config, int resolution) {
    Json out{{"command", config.command}};
    if (config.graph_path) out["graph"] = *config.graph_path;
    out["fixtures"] = config.fixtures;
    out["divisors"] = config.divisors;
    out["resolution"] = resolution;
    if (config.degree_cap) out["degree_cap"] = *config.degree_cap;
    out["budget"] = config.budget;
    out["seed"] = config.seed;
    out["format"] = config.format;
    out["lengths"] = config.lengths;
    if (config.command == "rank") out["method"] = config.method;
    return out;
}

ScanOptions scan_options(const RunConfig& config) {
    ScanOptions options;
    if (config.degree_cap) options.degree_cap = *config.degree_cap;
    options.sample_budget = config.budget;
    options.seed = config.seed;
    options.jobs = config.jobs;
    return options;
}

// Seeded divisors of degree -2..2g, differences of two effective divisors.
std::vector<ModelDivisor> random_divisors(const ModelGraph& model, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int g = genus(model);
    std::uniform_int_distribution<std::int64_t> degree_dist(-2, 2 * g);
    std::uniform_int_distribution<std::int64_t> negative_dist(0, 3);
    std::vector<ModelDivisor> out;
    for (std::size_t i = 0; i < count; ++i) {
        auto degree = degree_dist(rng);
        auto negative = negative_dist(rng);
        out.push_back(sample_effective(model.vertex_count(), degree + negative, rng) -
                      sample_effective(model.vertex_count(), negative, rng));
    }
    return out;
}

struct Context {
    const RunConfig& config;
    GraphSource source;
    std::vector<MetricDivisor> divisors;
    int resolution;
    std::unique_ptr<RankEngine> engine;

    const ModelGraph& model() const { return engine->model(); }
    ModelDivisor pushed(std::size_t i) const { return model().push(divisors[i]); }
};

Context make_context(const RunConfig& config, Report& report) {
    Context ctx{config, single_graph(config), {}, effective_resolution(config), nullptr};
    for (const auto& arg : config.divisors) ctx.divisors.push_back(resolve_divisor(arg, ctx.source.graph));
    ctx.engine = std::make_unique<RankEngine>(ModelGraph(ctx.source.graph, ctx.resolution, ctx.divisors));
    report.result["graph"] = graph_json(ctx.source);
    report.result["model"] = model_json(ctx.model(), ctx.engine->base());
    return ctx;
}

void require_divisors(const Context& ctx, std::size_t minimum) {
    if (ctx.divisors.size() < minimum)
        throw UsageError(ctx.config.command + " needs at least " + std::to_string(minimum) + " --divisor");
}

void cmd_genus(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    const int g = genus(ctx.source.graph);
    report.result["genus"] = g;
    report.check("model genus equals graph genus", genus(ctx.model()) == g);
}

void cmd_canonical(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    auto k = canonical_divisor(ctx.source.graph);
    auto summary = inspect_divisor(k);
    report.result["canonical"] = labelled(ctx.source.graph, k);
    report.result["degree"] = summary.degree;
    report.result["effective"] = summary.effective;
    report.check("deg K = 2g - 2", summary.degree == 2 * genus(ctx.source.graph) - 2);
}

void cmd_reduce(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    require_divisors(ctx, 1);
    Json items = Json::array();
    for (std::size_t i = 0; i < ctx.divisors.size(); ++i) {
        auto d = ctx.pushed(i);
        auto form = ctx.engine->reduce(d);
        items.push_back(Json{{"input", config.divisors[i]},
                             {"certificate", certificate_json(form)},
                             {"reduced_points", labelled(ctx.model(), form.divisor)},
                             {"winnable", form.divisor[form.base] >= 0},
                             {"witness", witness_json(script_to_witness(form.script, ctx.model()))}});
        report.check("reduced form #" + std::to_string(i) + " is q-reduced",
                     is_reduced(ctx.model(), form.divisor, form.base));
        report.check("certificate #" + std::to_string(i) + " reproduces the reduced form",
                     apply_script(ctx.model(), d, form.script) == form.divisor);
    }
    report.result["reductions"] = items;
}

void cmd_rank(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    require_divisors(ctx, 1);
    if (config.method != "recursive" && config.method != "brute-force" && config.method != "both")
        throw UsageError("--method expects recursive, brute-force or both");
    const std::int64_t cap = config.degree_cap.value_or(64);
    Json items = Json::array();
    for (std::size_t i = 0; i < ctx.divisors.size(); ++i) {
        auto d = ctx.pushed(i);
        Json item{{"input", config.divisors[i]}, {"points", labelled(ctx.model(), d)}};
        std::optional<RankResult> recursive, oracle;
        if (config.method != "brute-force") recursive = ctx.engine->rank(d);
        if (config.method != "recursive") oracle = rank_oracle(ctx.model(), d, cap, ctx.engine->base());
        const auto& primary = recursive ? *recursive : *oracle;
        item["report"] = rank_report_json(ctx.model(), d, primary);
        if (recursive && oracle) {
            item["oracle"] = rank_report_json(ctx.model(), d, *oracle);
            report.check("rank #" + std::to_string(i) + " matches the oracle", recursive->rank == oracle->rank);
        }
        if (recursive) {
            auto rr = check_riemann_roch(*ctx.engine, d);
            item["residual_rank"] = rr.residual_rank;
            report.check("Riemann-Roch #" + std::to_string(i), rr.holds);
        }
        items.push_back(item);
    }
    report.result["ranks"] = items;
}

void cmd_equiv(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    if (ctx.divisors.size() != 2) throw UsageError("equiv takes exactly two --divisor");
    auto d = ctx.pushed(0);
    auto e = ctx.pushed(1);
    auto result = is_equivalent(ctx.model(), d, e, ctx.engine->base());
    report.result["equivalent"] = result.equivalent;
    report.result["base"] = result.base;
    if (result.certificate) {
        Json script = Json::array();
        for (auto s : result.certificate->counts()) script.push_back(s);
        auto witness = script_to_witness(*result.certificate, ctx.model());
        report.result["certificate"] = script;
        report.result["witness"] = witness_json(witness);
        report.check("witness divisor equals E - D", divisor_of(witness, ctx.model()) == e - d);
    }
}

void cmd_rr_check(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    std::vector<ModelDivisor> targets;
    for (std::size_t i = 0; i < ctx.divisors.size(); ++i) targets.push_back(ctx.pushed(i));
    if (targets.empty()) targets = random_divisors(ctx.model(), 50, config.seed);
    Json items = Json::array();
    std::size_t failures = 0;
    for (const auto& d : targets) {
        auto rr = check_riemann_roch(*ctx.engine, d);
        if (!rr.holds) ++failures;
        items.push_back(Json{{"divisor", to_json(d)},
                             {"degree", rr.degree},
                             {"rank", rr.rank},
                             {"residual_rank", rr.residual_rank},
                             {"holds", rr.holds}});
    }
    report.result["checked"] = targets.size();
    report.result["failures"] = failures;
    report.result["divisors"] = items;
    report.check("rank(D) - rank(K - D) = deg D - g + 1", failures == 0);
}

std::optional<G12Certificate> g12_section(const Context& ctx, Report& report) {
    auto g12 = find_g12(*ctx.engine);
    report.result["g12"] = g12_json(ctx.model(), g12);
    if (g12) {
        report.check("all degree-2 rank-1 divisors are equivalent", g12->unique_class);
        report.check("K ~ (g - 1) g12", check_canonical_decomposition(*ctx.engine, g12));
    }
    return g12;
}

void cmd_g12(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    g12_section(ctx, report);
}

void cmd_clifford_scan(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    std::optional<G12Certificate> g12;
    if (ctx.engine->genus() >= 2) g12 = g12_section(ctx, report);
    auto scan = clifford_scan(*ctx.engine, scan_options(config), g12);
    report.result["scan"] = clifford_scan_json(ctx.model(), scan);
    report.check("rank <= deg / 2 for every special class", scan.violations == 0);
    if (g12) report.check("equality exactly on multiples of g12", scan.characterization_failures == 0);
}

void cmd_low_genus(const RunConfig& config, Report& report) {
    auto ctx = make_context(config, report);
    const int g = ctx.engine->genus();
    if (g < 2 || g > 4) throw ScopeError("low-genus-check covers genus 2..4, got " + std::to_string(g));
    auto g12 = g12_section(ctx, report);
    auto scan = clifford_scan(*ctx.engine, scan_options(config), g12);
    auto check = check_low_genus_implication(*ctx.engine, scan, g12);
    Json interior = Json::array();
    for (const auto& rec : check.interior_equalities) interior.push_back(clifford_record_json(ctx.model(), rec));
    report.result["scan"] = clifford_scan_json(ctx.model(), scan);
    report.result["interior_equalities"] = interior;
    report.result["notes"] = check.notes;
    report.check("rank <= deg / 2 for every special class", scan.violations == 0);
    report.check("interior equality implies a g12", check.holds);
}

void cmd_hunt(const RunConfig& config, Report& report) {
    std::vector<HuntSubject> subjects;
    if (config.graph_path) subjects.push_back({*config.graph_path, parse_graph_file(*config.graph_path)});
    for (const auto& f : config.fixtures) {
        auto spec = fixture_with_lengths(f, config);
        subjects.push_back({describe(spec), generate_fixture(spec)});
    }
    if (subjects.empty()) throw UsageError("hunt needs --graph or --fixture");
    auto options = scan_options(config);
    auto hunt = counterexample_search(subjects, effective_resolution(config), config.budget, options);
    report.result["hunt"] = hunt_json(hunt);
    std::size_t violations = 0;
    for (const auto& e : hunt.entries)
        if (e.scan) violations += e.scan->violations;
    report.check("rank <= deg / 2 for every special class", violations == 0);
}

} // namespace

const std::vector<std::string>& known_commands() {
    static const std::vector<std::string> commands{"genus", "canonical", "reduce",          "rank", "equiv",
                                                   "rr-check", "clifford-scan", "g12", "low-genus-check", "hunt"};
    return commands;
}

int effective_resolution(const RunConfig& config) {
    if (config.resolution) return *config.resolution;
    static const std::vector<std::string> fine{"g12", "clifford-scan", "low-genus-check", "hunt"};
    return std::find(fine.begin(), fine.end(), config.command) != fine.end() ? 2 : 1;
}

std::optional<RunConfig> parse_command_line(int argc, const char* const* argv, std::ostream& out) {
    RunConfig config;
    CLI::App app{"Divisor theory on metric graphs: ranks, reduced divisors, Riemann-Roch and Clifford checks"};
    app.add_option("command", config.command, "one of: genus canonical reduce rank equiv rr-check clifford-scan g12 "
                                              "low-genus-check hunt")
        ->required();
    app.add_option("--graph", config.graph_path, "graph file");
    app.add_option("--fixture", config.fixtures, "built-in family, e.g. flower:3 (repeatable for hunt)");
    app.add_option("--divisor", config.divisors, "K, a divisor file, or inline 'chip 1 at u; chip 1 at v'");
    app.add_option("--resolution", config.resolution, "model refinement")->check(CLI::PositiveNumber);
    app.add_option("--degree-cap", config.degree_cap, "highest degree scanned / oracle enumeration cap");
    app.add_option("--budget", config.budget, "sample budget per degree; total evaluations for hunt");
    app.add_option("--seed", config.seed, "seed for sampling and random fixtures");
    app.add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--lengths", config.lengths, "unit or random:<max denominator> (seeded by --seed)");
    app.add_option("--method", config.method, "rank method: recursive, brute-force or both");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    const auto& known = known_commands();
    if (std::find(known.begin(), known.end(), config.command) == known.end())
        throw UsageError("unknown command '" + config.command + "'");
    return config;
}

RunOutcome run_command(const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    Report report;
    RunOutcome outcome;
    Json error;
    try {
        if (config.command == "genus") cmd_genus(config, report);
        else if (config.command == "canonical") cmd_canonical(config, report);
        else if (config.command == "reduce") cmd_reduce(config, report);
        else if (config.command == "rank") cmd_rank(config, report);
        else if (config.command == "equiv") cmd_equiv(config, report);
        else if (config.command == "rr-check") cmd_rr_check(config, report);
        else if (config.command == "g12") cmd_g12(config, report);
        else if (config.command == "clifford-scan") cmd_clifford_scan(config, report);
        else if (config.command == "low-genus-check") cmd_low_genus(config, report);
        else if (config.command == "hunt") cmd_hunt(config, report);
        else throw UsageError("unknown command '" + config.command + "'");
        outcome.exit_code = report.passed() ? kExitPass : kExitAssertion;
    } catch (const ResourceError& e) {
        outcome.exit_code = kExitResource;
        error = Json{{"kind", "resource"}, {"message", e.what()}};
    } catch (const ParseError& e) {
        outcome.exit_code = kExitUsage;
        error = Json{{"kind", "parse"}, {"message", e.what()}, {"line", e.line()}, {"column", e.column()}};
    } catch (const Error& e) {
        outcome.exit_code = kExitUsage;
        error = Json{{"kind", "usage"}, {"message", e.what()}};
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    Json& out = outcome.report;
    out["tool"] = "tropdiv";
    out["config"] = config_json(config, effective_resolution(config));
    out["result"] = report.result;
    out["checks"] = report.checks_json();
    if (!error.is_null()) out["error"] = error;
    out["passed"] = outcome.exit_code == kExitPass;
    out["exit_code"] = outcome.exit_code;
    out["runtime"] = Json{{"jobs", config.jobs}, {"timing_ms", elapsed.count()}};
    return outcome;
}

std::string render(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    std::ostringstream text;
    text << report["tool"].get<std::string>() << " " << report["config"]["command"].get<std::string>() << "\n";
    if (report.contains("error")) text << "error: " << report["error"]["message"].get<std::string>() << "\n";
    for (const auto& [key, value] : report["result"].items()) {
        auto dumped = value.dump();
        if (dumped.size() > 160) dumped = dumped.substr(0, 157) + "...";
        text << "  " << key << ": " << dumped << "\n";
    }
    for (const auto& c : report["checks"])
        text << (c["passed"].get<bool>() ? "  [pass] " : "  [FAIL] ") << c["name"].get<std::string>() << "\n";
    text << (report["passed"].get<bool>() ? "PASSED" : "FAILED") << " (exit " << report["exit_code"].get<int>()
         << ")\n";
    return text.str();
}

int run_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::optional<RunConfig> config;
    try {
        config = parse_command_line(argc, argv, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!config) return kExitPass;
    auto outcome = run_command(*config);
    out << render(outcome.report, config->format);
    return outcome.exit_code;
}

} // namespace tropical
