#include "rainbow/edge_coloring.hpp"

#include <algorithm>
#include <set>

namespace rainbow {

auto EdgeColoring::color_of(Edge e) const -> std::optional<int>
{
    auto it = assignment_.find(e);
    if (it == assignment_.end())
        return std::nullopt;
    return it->second;
}

auto EdgeColoring::color_count() const -> int
{
    std::set<int> colors;
    for (const auto & [e, c] : assignment_)
        colors.insert(c);
    return static_cast<int>(colors.size());
}

auto EdgeColoring::max_color() const -> int
{
    int best = 0;
    for (const auto & [e, c] : assignment_)
        best = std::max(best, c);
    return best;
}

auto EdgeColoring::contiguous() const -> bool
{
    std::set<int> colors;
    for (const auto & [e, c] : assignment_)
        colors.insert(c);
    return colors.empty() || (*colors.begin() == 1 && *colors.rbegin() == static_cast<int>(colors.size()));
}

auto EdgeColoring::vertices() const -> std::vector<Vertex>
{
    std::set<Vertex> vs;
    for (const auto & [e, c] : assignment_) {
        vs.insert(e.u);
        vs.insert(e.v);
    }
    return {vs.begin(), vs.end()};
}

} // namespace rainbow
