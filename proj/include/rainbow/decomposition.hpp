#pragma once

#include "rainbow/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rainbow {

/// Path v_0..v_l whose feet v_0, v_l lie in the current subgraph and whose
/// internal vertices do not.
struct Ear {
    std::vector<Vertex> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()) - 1; }
    auto foot_a() const -> Vertex { return vertices.front(); }
    auto foot_b() const -> Vertex { return vertices.back(); }
    auto internal() const -> std::vector<Vertex> { return {vertices.begin() + 1, vertices.end() - 1}; }
    auto reversed() const -> Ear { return Ear{{vertices.rbegin(), vertices.rend()}}; }

    auto operator<=>(const Ear &) const = default;
};

/// Vertex and edge subset of a host graph; edge flags are indexed like
/// Graph::edges().
struct Subgraph {
    std::vector<bool> has_vertex;
    std::vector<bool> has_edge;
    int vertex_count = 0;
    int edge_count = 0;

    static auto empty(const Graph & g) -> Subgraph;
    static auto of_cycle(const Graph & g, const Cycle & c) -> Subgraph;

    void add_ear(const Graph & g, const Ear & ear);
};

struct EarDecomposition {
    Cycle base;
    std::vector<Ear> ears;
    int t = 0;                     // last 1-based ear index with length >= 2, 0 if none
    std::vector<int> stage_orders; // n_0..n_k

    auto k() const -> int { return static_cast<int>(ears.size()); }
};

struct SearchBudget {
    std::int64_t nodes = 20'000'000;
};

/// Longest ear of `current` in g; among equal lengths, the lexicographically
/// least vertex sequence oriented from its smaller foot. Exhaustive
/// branch-and-bound, so worst-case exponential.
/// Throws NoEar, BudgetExceeded.
auto find_longest_ear(const Graph & g, const Subgraph & current, SearchBudget budget = {}) -> Ear;

/// Even base cycle followed by longest ears until the whole graph is covered.
/// Throws NotTwoConnected, NoEvenCycle, BudgetExceeded.
auto ear_decomposition(const Graph & g, SearchBudget budget = {}) -> EarDecomposition;

/// Checks the nested / nonincreasing / exact-union / even-base invariants and
/// that every prefix is 2-connected. Returns an empty string when valid,
/// otherwise the first violation.
auto validate_decomposition(const Graph & g, const EarDecomposition & d) -> std::string;

/// Graph formed by the base and the first `prefix` ears, with vertices
/// relabelled 0.. in ascending original order.
auto prefix_graph(const Graph & g, const EarDecomposition & d, int prefix) -> Graph;

} // namespace rainbow
