#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cutmatch {

// A potential edge (u, v) with u a left-side id and v a right-side id.
struct Edge {
    int left = 0;
    int right = 0;
    auto operator<=>(const Edge&) const = default;
};

// Bipartite graph with n vertices per side. Left and right ids both run
// 0..n-1. Vectors over all vertices use the convention: left u at index u,
// right v at index n+v.
//
// Optional integer costs (one per edge) and demands (one per vertex, left
// block then right block) turn the graph into a weighted b-matching
// instance.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    explicit BipartiteGraph(int n);
    BipartiteGraph(int n, std::vector<Edge> edges);

    // Ignores duplicates. Costs must be attached at insertion time if the
    // graph is cost-weighted.
    void add_edge(Edge e);
    void add_edge(Edge e, long long cost);
    void set_demands(std::vector<long long> demands);

    int side_size() const { return n_; }
    int vertex_count() const { return 2 * n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_edge(Edge e) const;

    // Right neighbours of a left vertex / left neighbours of a right vertex,
    // sorted ascending.
    const std::vector<int>& neighbors_of_left(int u) const { return adj_left_[u]; }
    const std::vector<int>& neighbors_of_right(int v) const { return adj_right_[v]; }

    bool has_costs() const { return !costs_.empty(); }
    bool has_demands() const { return !demands_.empty(); }
    bool weighted() const { return has_costs() || has_demands(); }

    long long cost(Edge e) const;        // 1 when no costs are set
    long long demand(int vertex) const;  // 1 when no demands are set
    const std::vector<long long>& demands() const { return demands_; }

    // W = max(max |c_e|, max b_v), at least 1. The bound on every number in
    // the instance; the dual box is [0, W+1].
    long long max_magnitude() const;

    int left_index(int u) const { return u; }
    int right_index(int v) const { return n_ + v; }

private:
    int edge_position(Edge e) const;  // index into edges_, -1 if absent

    int n_ = 0;
    std::vector<Edge> edges_;          // sorted lexicographically, unique
    std::vector<long long> costs_;     // parallel to edges_, empty if unset
    std::vector<long long> demands_;   // size 2n, empty if unset
    std::vector<std::vector<int>> adj_left_;
    std::vector<std::vector<int>> adj_right_;
};

// A set of vertex-disjoint edges.
struct Matching {
    std::vector<Edge> pairs;
    int size() const { return static_cast<int>(pairs.size()); }
};

// Checks vertex-disjointness and, when a host graph is given, that every
// pair is one of its edges.
bool is_valid_matching(const Matching& m, int side_size);
bool is_valid_matching(const Matching& m, const BipartiteGraph& g);

// Vertex cover values indexed left block then right block (size 2n).
// Integral covers store whole numbers; fractional covers arbitrary reals.
struct VertexCover {
    std::vector<double> values;
    double total() const;
};

// Maximum-cardinality matching via Hopcroft-Karp. Deterministic: augmenting
// paths follow the sorted adjacency order.
Matching hopcroft_karp(const BipartiteGraph& g);

// Minimum integral vertex cover from a maximum matching (Konig). Throws
// std::invalid_argument if the given matching is invalid or not maximum
// (detected by an augmenting-path search).
VertexCover konig_cover(const BipartiteGraph& g, const Matching& maximum);

// Exact count of perfect matchings by bitmask dynamic programming.
// Throws std::invalid_argument for n above the enumeration cap (12).
long long count_perfect_matchings(const BipartiteGraph& g);

// Membership test for the budget-F cover polytope of g:
//   x_u + x_v >= c_uv on every edge (c = 1 unweighted),
//   sum_v b_v x_v <= F + 1/3 (b = 1 unweighted),
//   0 <= x_v <= hi (hi = 1 unweighted, W+1 weighted).
// Edge and box constraints allow slack 1e-12 (the same threshold the
// separation oracle uses for strict violation); the budget allows 1e-9.
bool verify_fractional_cover(const BipartiteGraph& g, const VertexCover& cover,
                             long long budget);

// Tolerances shared across the solver and the checks above.
inline constexpr double kStrictViolationTol = 1e-12;
inline constexpr double kBudgetTol = 1e-9;

// JSON graph format:
//   {"n": int, "edges": [[l,r],...],
//    "costs": optional [[l,r,c],...], "demands": optional [b_0,...,b_{2n-1}]}
BipartiteGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const BipartiteGraph& g);
BipartiteGraph load_graph(const std::string& path);
void save_graph(const BipartiteGraph& g, const std::string& path);

}  // namespace cutmatch
