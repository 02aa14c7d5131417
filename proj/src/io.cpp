#include "matchk/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace matchk {

namespace {

// data lines with comments stripped, in order
std::vector<std::vector<std::string>> tokenize(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) lines.push_back(std::move(toks));
    }
    return lines;
}

std::size_t parse_count(const std::string& tok, const char* what) {
    Rational q = parse_rational(tok);
    if (!is_integer(q) || sgn(q) < 0 || !q.get_num().fits_ulong_p())
        throw ParseError(std::string(what) + ": expected a nonnegative integer, got " + tok);
    return q.get_num().get_ui();
}

ParsedInput parse_graph(const std::vector<std::vector<std::string>>& lines) {
    if (lines[0].size() != 2) throw ParseError("graph header must be \"v <count>\"");
    std::size_t vcount = parse_count(lines[0][1], "vertex count");
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& t = lines[i];
        if (t.size() != 4 || t[0] != "e")
            throw ParseError("graph edge lines must be \"e u v w\"");
        std::size_t u = parse_count(t[1], "edge endpoint");
        std::size_t v = parse_count(t[2], "edge endpoint");
        if (u == v) throw ParseError("self-loop edge rejected");
        if (u > v) std::swap(u, v);
        edges.push_back({u, v, parse_rational(t[3])});
    }
    try {
        return {InputKind::Graph, std::nullopt, std::nullopt,
                WeightedGraph(vcount, std::move(edges))};
    } catch (const ArgumentError& e) {
        throw ParseError(e.what());
    }
}

std::vector<Rational> parse_rows(const std::vector<std::vector<std::string>>& lines,
                                 std::size_t rows, std::size_t cols) {
    if (lines.size() != rows + 1)
        throw ParseError("expected " + std::to_string(rows) + " matrix rows, got " +
                         std::to_string(lines.size() - 1));
    std::vector<Rational> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 1; i <= rows; ++i) {
        if (lines[i].size() != cols)
            throw ParseError("row " + std::to_string(i) + " has " +
                             std::to_string(lines[i].size()) + " entries, expected " +
                             std::to_string(cols));
        for (const auto& tok : lines[i]) entries.push_back(parse_rational(tok));
    }
    return entries;
}

}  // namespace

ParsedInput parse_input(std::istream& in) {
    auto lines = tokenize(in);
    if (lines.empty()) throw ParseError("empty input");
    const auto& head = lines[0];
    if (head[0] == "v") return parse_graph(lines);
    try {
        if (head.size() == 1) {
            std::size_t m = parse_count(head[0], "matrix order");
            return {InputKind::Symmetric, std::nullopt,
                    SymZeroDiagMatrix::from_full(m, parse_rows(lines, m, m)), std::nullopt};
        }
        if (head.size() == 2) {
            std::size_t m = parse_count(head[0], "row count");
            std::size_t n = parse_count(head[1], "column count");
            return {InputKind::Bipartite, NonnegMatrix(m, n, parse_rows(lines, m, n)),
                    std::nullopt, std::nullopt};
        }
    } catch (const ArgumentError& e) {
        throw ParseError(e.what());
    }
    throw ParseError("header must be \"m n\", \"m\", or \"v <count>\"");
}

ParsedInput read_input(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open input file: " + path);
    return parse_input(f);
}

void write_matrix(std::ostream& out, const NonnegMatrix& b) {
    out << b.rows() << " " << b.cols() << "\n";
    for (std::size_t i = 0; i < b.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j)
            out << (j ? " " : "") << format_rational(b.at(i, j));
        out << "\n";
    }
}

void write_symmetric(std::ostream& out, const SymZeroDiagMatrix& a) {
    out << a.order() << "\n";
    for (std::size_t i = 0; i < a.order(); ++i) {
        for (std::size_t j = 0; j < a.order(); ++j)
            out << (j ? " " : "") << format_rational(a.at(i, j));
        out << "\n";
    }
}

}  // namespace matchk
