#include "tropical/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "tropical/errors.hpp"

namespace tropical {

namespace {

struct Token {
    std::string text;
    std::size_t column;
};

std::vector<std::vector<Token>> split_statements(const std::string& line) {
    std::vector<std::vector<Token>> statements(1);
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (c == ';') {
            statements.emplace_back();
            ++i;
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#' &&
               line[i] != ';')
            ++i;
        statements.back().push_back({line.substr(start, i - start), start + 1});
    }
    std::erase_if(statements, [](const auto& s) { return s.empty(); });
    return statements;
}

std::optional<std::int64_t> parse_coefficient(const std::string& text) {
    std::string_view view = text;
    if (!view.empty() && view.front() == '+') view.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(view.data(), view.data() + view.size(), value);
    if (view.empty() || ec != std::errc() || ptr != view.data() + view.size()) return std::nullopt;
    return value;
}

} // namespace

MetricGraph parse_graph(std::istream& in, const std::string& source) {
    GraphBuilder builder;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](std::size_t column, const std::string& message) -> void {
        throw ParseError(source, line_no, column, message);
    };
    while (std::getline(in, line)) {
        ++line_no;
        for (const auto& tokens : split_statements(line)) {
            const auto& keyword = tokens[0].text;
            if (keyword == "vertex") {
                if (tokens.size() != 2) fail(tokens[0].column, "expected 'vertex <name>'");
                if (builder.has_vertex(tokens[1].text)) fail(tokens[1].column, "duplicate vertex '" + tokens[1].text + "'");
                builder.add_vertex(tokens[1].text);
            } else if (keyword == "edge") {
                if (tokens.size() != 5) fail(tokens[0].column, "expected 'edge <name> <u> <v> <num>/<den>'");
                if (builder.has_edge(tokens[1].text)) fail(tokens[1].column, "duplicate edge '" + tokens[1].text + "'");
                for (int k : {2, 3})
                    if (!builder.has_vertex(tokens[k].text))
                        fail(tokens[k].column, "unknown vertex '" + tokens[k].text + "'");
                auto length = parse_rational(tokens[4].text);
                if (!length) fail(tokens[4].column, "malformed length '" + tokens[4].text + "'");
                if (length->numerator() <= 0) fail(tokens[4].column, "non-positive length");
                builder.add_edge(tokens[1].text, tokens[2].text, tokens[3].text, *length);
            } else {
                fail(tokens[0].column, "unknown declaration '" + keyword + "'");
            }
        }
    }
    try {
        return builder.build();
    } catch (const StructuralError& e) {
        throw ParseError(source, line_no, 1, e.what());
    }
}

MetricGraph parse_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open graph file '" + path.string() + "'");
    return parse_graph(in, path.string());
}

MetricDivisor parse_divisor(std::istream& in, const MetricGraph& graph, const std::string& source) {
    MetricDivisor d;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](std::size_t column, const std::string& message) -> void {
        throw ParseError(source, line_no, column, message);
    };
    while (std::getline(in, line)) {
        ++line_no;
        for (const auto& tokens : split_statements(line)) {
            if (tokens[0].text != "chip") fail(tokens[0].column, "unknown declaration '" + tokens[0].text + "'");
            if (tokens.size() < 4) fail(tokens[0].column, "incomplete chip declaration");
            auto coefficient = parse_coefficient(tokens[1].text);
            if (!coefficient) fail(tokens[1].column, "malformed coefficient '" + tokens[1].text + "'");
            if (tokens[2].text == "at") {
                if (tokens.size() != 4) fail(tokens[0].column, "expected 'chip <coeff> at <vertex>'");
                auto v = graph.find_vertex(tokens[3].text);
                if (!v) fail(tokens[3].column, "unknown vertex '" + tokens[3].text + "'");
                d.add(PointLocation::at_vertex(*v), *coefficient);
            } else if (tokens[2].text == "on") {
                if (tokens.size() != 5) fail(tokens[0].column, "expected 'chip <coeff> on <edge> <num>/<den>'");
                auto e = graph.find_edge(tokens[3].text);
                if (!e) fail(tokens[3].column, "unknown edge '" + tokens[3].text + "'");
                auto offset = parse_rational(tokens[4].text);
                if (!offset) fail(tokens[4].column, "malformed offset '" + tokens[4].text + "'");
                if (offset->numerator() <= 0 || *offset >= graph.edge(*e).length)
                    fail(tokens[4].column, "offset out of range (0, " + to_string(graph.edge(*e).length) + ")");
                d.add(PointLocation::on_edge(graph, *e, *offset), *coefficient);
            } else {
                fail(tokens[2].column, "expected 'at' or 'on'");
            }
        }
    }
    return d;
}

MetricDivisor parse_divisor_file(const std::filesystem::path& path, const MetricGraph& graph) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open divisor file '" + path.string() + "'");
    return parse_divisor(in, graph, path.string());
}

MetricDivisor parse_divisor_text(const std::string& text, const MetricGraph& graph) {
    std::istringstream in(text);
    return parse_divisor(in, graph, "<inline>");
}

std::string format_graph(const MetricGraph& graph) {
    std::ostringstream out;
    for (const auto& name : graph.vertex_names()) out << "vertex " << name << "\n";
    for (const auto& e : graph.edges())
        out << "edge " << e.id << " " << graph.vertex_name(e.a) << " " << graph.vertex_name(e.b) << " "
            << e.length.numerator() << "/" << e.length.denominator() << "\n";
    return out.str();
}

std::string format_divisor(const MetricGraph& graph, const MetricDivisor& d) {
    std::ostringstream out;
    for (const auto& [p, a] : d.entries()) {
        if (p.is_vertex())
            out << "chip " << a << " at " << graph.vertex_name(p.vertex()) << "\n";
        else
            out << "chip " << a << " on " << graph.edge(p.edge()).id << " " << p.offset().numerator() << "/"
                << p.offset().denominator() << "\n";
    }
    return out.str();
}

} // namespace tropical
