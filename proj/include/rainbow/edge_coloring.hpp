#pragma once

#include "rainbow/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace rainbow {

/// Edge -> color id map. Well-formed colorings use the ids 1..K.
class EdgeColoring {
public:
    EdgeColoring() = default;

    void set(Edge e, int color) { assignment_[e] = color; }
    auto color_of(Edge e) const -> std::optional<int>;
    auto contains(Edge e) const -> bool { return assignment_.count(e) != 0; }
    auto assignment() const noexcept -> const std::map<Edge, int> & { return assignment_; }
    auto edge_count() const noexcept -> int { return static_cast<int>(assignment_.size()); }

    /// Number of distinct colors in use (K).
    auto color_count() const -> int;
    auto max_color() const -> int;
    /// Colors in use are exactly 1..K.
    auto contiguous() const -> bool;
    /// Sorted vertices touched by a colored edge.
    auto vertices() const -> std::vector<Vertex>;

    auto operator==(const EdgeColoring &) const -> bool = default;

private:
    std::map<Edge, int> assignment_;
};

} // namespace rainbow
