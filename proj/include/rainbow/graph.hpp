#pragma once

#include <compare>
#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rainbow {

using Vertex = int;

/// Unordered vertex pair, always stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge &) const = default;
};

/// Simple undirected graph on the dense vertex ids 0..n-1.
///
/// Immutable once built. Edges are kept sorted and adjacency lists are sorted
/// ascending, which every search in this library relies on for its
/// lexicographic tie-breaking.
class Graph {
public:
    Graph() = default;

    /// Throws Error(LoopEdge | VertexOutOfRange | DuplicateEdge).
    Graph(int n, std::vector<Edge> edges);

    auto order() const noexcept -> int { return n_; }
    auto size() const noexcept -> int { return static_cast<int>(edges_.size()); }
    auto edges() const noexcept -> std::span<const Edge> { return edges_; }
    auto neighbors(Vertex v) const -> std::span<const Vertex> { return adjacency_[v]; }
    auto degree(Vertex v) const -> int { return static_cast<int>(adjacency_[v].size()); }
    auto adjacent(Vertex a, Vertex b) const -> bool;

    /// Index of edge {a,b} in edges(), or -1.
    auto edge_index(Vertex a, Vertex b) const -> int;

    auto operator==(const Graph & other) const -> bool { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Closed vertex sequence v_1..v_m; the edge v_m v_1 is implied.
struct Cycle {
    std::vector<Vertex> vertices;

    auto length() const -> int { return static_cast<int>(vertices.size()); }
    auto operator<=>(const Cycle &) const = default;
};

auto parse_edge_list(std::istream & in) -> Graph;
auto parse_edge_list(std::string_view text) -> Graph;
auto to_edge_list(const Graph & g) -> std::string;

auto is_connected(const Graph & g) -> bool;
auto is_two_connected(const Graph & g) -> bool;

/// Vertex connectivity at least k: more than k vertices and no separator of
/// size < k. Exhaustive over separators, meant for small graphs.
auto is_k_connected(const Graph & g, int k) -> bool;

auto is_valid_cycle(const Graph & g, const Cycle & c) -> bool;

/// Rotates to start at the smallest vertex and picks the direction whose
/// second vertex is smaller.
auto normalize_cycle(Cycle c) -> Cycle;

/// Even cycle obtained from the shortest cycle through vertex 0, closing an
/// odd cycle with an ear when needed. Throws NotTwoConnected or NoEvenCycle.
auto find_even_cycle(const Graph & g) -> Cycle;

auto diameter(const Graph & g) -> int;

// Common families, mostly for tests and fixtures.
auto make_cycle(int n) -> Graph;
auto make_path(int n) -> Graph;
auto make_complete(int n) -> Graph;

} // namespace rainbow
