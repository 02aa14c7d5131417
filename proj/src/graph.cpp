#include "matchk/graph.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace matchk {

namespace {

void check_edge(std::size_t u, std::size_t v, std::size_t u_max, std::size_t v_max,
                const Rational& w) {
    if (u < 1 || u > u_max || v < 1 || v > v_max)
        throw ArgumentError("edge endpoint out of range: (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
    if (sgn(w) <= 0) throw ArgumentError("edge weights must be strictly positive");
}

}  // namespace

WeightedGraph::WeightedGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        if (e.u >= e.v)
            throw ArgumentError("edges must satisfy u < v (no self-loops), got (" +
                                std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        check_edge(e.u, e.v, vertex_count_, vertex_count_, e.w);
        if (!seen.insert({e.u, e.v}).second)
            throw ArgumentError("duplicate edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ")");
    }
}

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count,
                               std::vector<BipartiteEdge> edges)
    : left_count_(left_count), right_count_(right_count), edges_(std::move(edges)) {
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        check_edge(e.left, e.right, left_count_, right_count_, e.w);
        if (!seen.insert({e.left, e.right}).second)
            throw ArgumentError("duplicate edge (" + std::to_string(e.left) + "," +
                                std::to_string(e.right) + ")");
    }
}

WeightedGraph BipartiteGraph::as_general() const {
    std::vector<WeightedEdge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) edges.push_back({e.left, left_count_ + e.right, e.w});
    return WeightedGraph(left_count_ + right_count_, std::move(edges));
}

namespace {

struct Adjacency {
    // per vertex (0-based): list of (neighbor, edge index)
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> nbr;

    explicit Adjacency(const WeightedGraph& g) : nbr(g.vertex_count()) {
        for (std::size_t ei = 0; ei < g.edges().size(); ++ei) {
            const auto& e = g.edges()[ei];
            nbr[e.u - 1].push_back({e.v - 1, ei});
            nbr[e.v - 1].push_back({e.u - 1, ei});
        }
    }
};

// Branch on the lowest unmatched vertex: skip it, or match it to each
// unmatched neighbor. Each matching is reached exactly once.
template <typename Leaf>
void matchings_rec(const WeightedGraph& g, const Adjacency& adj, std::size_t v,
                   std::size_t remaining, std::vector<char>& used,
                   std::vector<std::size_t>& chosen, const Leaf& leaf) {
    if (remaining == 0) {
        leaf(chosen);
        return;
    }
    if (v >= g.vertex_count()) return;
    if (g.vertex_count() - v < 2 * remaining) return;  // not enough vertices left
    if (used[v]) {
        matchings_rec(g, adj, v + 1, remaining, used, chosen, leaf);
        return;
    }
    // v stays unmatched
    matchings_rec(g, adj, v + 1, remaining, used, chosen, leaf);
    // v matched to an unmatched neighbor (always of higher index)
    for (const auto& [w, ei] : adj.nbr[v]) {
        if (w < v || used[w]) continue;
        used[v] = used[w] = 1;
        chosen.push_back(ei);
        matchings_rec(g, adj, v + 1, remaining - 1, used, chosen, leaf);
        chosen.pop_back();
        used[v] = used[w] = 0;
    }
}

template <typename Leaf>
void for_each_k_matching(const WeightedGraph& g, std::size_t k, const Leaf& leaf) {
    if (2 * k > g.vertex_count()) return;
    Adjacency adj(g);
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<std::size_t> chosen;
    matchings_rec(g, adj, 0, k, used, chosen, leaf);
}

}  // namespace

Rational count_k_matchings(const WeightedGraph& g, std::size_t k) {
    Rational total(0);
    for_each_k_matching(g, k, [&](const std::vector<std::size_t>&) { total += 1; });
    return total;
}

Rational count_k_matchings(const BipartiteGraph& g, std::size_t k) {
    return count_k_matchings(g.as_general(), k);
}

Rational weighted_matching_sum(const WeightedGraph& g, std::size_t k) {
    Rational total(0);
    for_each_k_matching(g, k, [&](const std::vector<std::size_t>& chosen) {
        Rational prod(1);
        for (std::size_t ei : chosen) prod *= g.edges()[ei].w;
        total += prod;
    });
    return total;
}

Rational weighted_matching_sum(const BipartiteGraph& g, std::size_t k) {
    return weighted_matching_sum(g.as_general(), k);
}

std::vector<std::vector<std::size_t>> enumerate_k_matchings(const WeightedGraph& g,
                                                            std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for_each_k_matching(g, k, [&](const std::vector<std::size_t>& chosen) {
        std::vector<std::size_t> m = chosen;
        std::sort(m.begin(), m.end());
        out.push_back(std::move(m));
    });
    return out;
}

BipartiteGraph graph_from_matrix(const NonnegMatrix& b) {
    std::vector<BipartiteEdge> edges;
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j)
            if (sgn(b.at(i, j)) > 0) edges.push_back({i + 1, j + 1, b.at(i, j)});
    return BipartiteGraph(b.rows(), b.cols(), std::move(edges));
}

NonnegMatrix matrix_from_graph(const BipartiteGraph& g) {
    std::vector<Rational> e(g.left_count() * g.right_count(), Rational(0));
    for (const auto& edge : g.edges())
        e[(edge.left - 1) * g.right_count() + (edge.right - 1)] = edge.w;
    return NonnegMatrix(g.left_count(), g.right_count(), std::move(e));
}

WeightedGraph graph_from_symmetric(const SymZeroDiagMatrix& a) {
    std::vector<WeightedEdge> edges;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i + 1; j < a.order(); ++j)
            if (sgn(a.at(i, j)) > 0) edges.push_back({i + 1, j + 1, a.at(i, j)});
    return WeightedGraph(a.order(), std::move(edges));
}

SymZeroDiagMatrix symmetric_from_graph(const WeightedGraph& g) {
    std::size_t m = g.vertex_count();
    std::vector<Rational> upper(m * (m - (m > 0 ? 1 : 0)) / 2, Rational(0));
    for (const auto& e : g.edges()) {
        std::size_t i = e.u - 1, j = e.v - 1;
        upper[i * m - i * (i + 1) / 2 + (j - i - 1)] = e.w;
    }
    return SymZeroDiagMatrix(m, std::move(upper));
}

SymZeroDiagMatrix bipartite_double_cover(const NonnegMatrix& b) {
    std::size_t m = b.rows(), n = b.cols(), order = m + n;
    std::vector<Rational> full(order * order, Rational(0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            full[i * order + (m + j)] = b.at(i, j);
            full[(m + j) * order + i] = b.at(i, j);
        }
    return SymZeroDiagMatrix::from_full(order, full);
}

}  // namespace matchk
