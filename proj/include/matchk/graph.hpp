#pragma once

#include <vector>

#include "matchk/matrix.hpp"

namespace matchk {

struct WeightedEdge {
    std::size_t u, v;  // 1-based, u < v
    Rational w;        // strictly positive
    bool operator==(const WeightedEdge& o) const = default;
};

// Undirected weighted graph with no self-loops. Isolated vertices are
// allowed (vertex_count may exceed the vertices touched by edges).
class WeightedGraph {
  public:
    WeightedGraph(std::size_t vertex_count, std::vector<WeightedEdge> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }

  private:
    std::size_t vertex_count_;
    std::vector<WeightedEdge> edges_;
};

struct BipartiteEdge {
    std::size_t left, right;  // 1-based within each side
    Rational w;
    bool operator==(const BipartiteEdge& o) const = default;
};

class BipartiteGraph {
  public:
    BipartiteGraph(std::size_t left_count, std::size_t right_count,
                   std::vector<BipartiteEdge> edges);

    std::size_t left_count() const { return left_count_; }
    std::size_t right_count() const { return right_count_; }
    const std::vector<BipartiteEdge>& edges() const { return edges_; }

    // Relabels right vertices to left_count+1..left_count+right_count.
    WeightedGraph as_general() const;

  private:
    std::size_t left_count_, right_count_;
    std::vector<BipartiteEdge> edges_;
};

// Number of k-edge matchings, weights ignored. k=0 -> 1.
Rational count_k_matchings(const WeightedGraph& g, std::size_t k);
Rational count_k_matchings(const BipartiteGraph& g, std::size_t k);

// Sum over k-matchings of the product of edge weights. Equals perm_k of the
// biadjacency matrix for bipartite graphs and haf_k of the adjacency matrix
// in general.
Rational weighted_matching_sum(const WeightedGraph& g, std::size_t k);
Rational weighted_matching_sum(const BipartiteGraph& g, std::size_t k);

// Enumerates all k-matchings as sorted edge-index lists, each exactly once.
std::vector<std::vector<std::size_t>> enumerate_k_matchings(const WeightedGraph& g,
                                                            std::size_t k);

BipartiteGraph graph_from_matrix(const NonnegMatrix& b);
NonnegMatrix matrix_from_graph(const BipartiteGraph& g);
WeightedGraph graph_from_symmetric(const SymZeroDiagMatrix& a);
SymZeroDiagMatrix symmetric_from_graph(const WeightedGraph& g);

// [[0, B], [B^T, 0]] on m+n vertices; its haf_k equals perm_k of B.
SymZeroDiagMatrix bipartite_double_cover(const NonnegMatrix& b);

}  // namespace matchk
