#include "rainbow/verification.hpp"

#include "rainbow/error.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

namespace rainbow {

namespace {

    constexpr int max_tracked_colors = 24;

    /// Adjacency with each edge's color mapped to a dense bit.
    struct ColoredAdjacency {
        int n = 0;
        int k = 0;
        std::vector<std::vector<std::pair<Vertex, std::uint32_t>>> out;
        std::vector<int> bit_to_color;
    };

    auto build_adjacency(const Graph & g, const EdgeColoring & c) -> ColoredAdjacency
    {
        ColoredAdjacency adj;
        adj.n = g.order();
        adj.out.resize(g.order());

        std::map<int, int> bit_of;
        for (const auto & e : g.edges()) {
            auto color = c.color_of(e);
            if (! color)
                throw Error(ErrorCode::UncoloredEdge, std::to_string(e.u) + " " + std::to_string(e.v));
            bit_of.emplace(*color, 0);
        }
        // The palette K counts every color of the coloring, even colors only
        // carried by edges outside g.
        for (const auto & [e, color] : c.assignment())
            bit_of.emplace(color, 0);
        if (bit_of.size() > max_tracked_colors)
            throw Error(ErrorCode::InfeasibleParameters, "too many colors for the state-space search");
        int next = 0;
        for (auto & [color, bit] : bit_of) {
            bit = next++;
            adj.bit_to_color.push_back(color);
        }
        adj.k = next;

        for (Vertex v = 0; v < g.order(); ++v)
            for (auto w : g.neighbors(v))
                adj.out[v].emplace_back(w, std::uint32_t{1} << bit_of[*c.color_of(Edge(v, w))]);
        return adj;
    }

    /// Breadth-first search over (vertex, used-color set) states from one
    /// source. A shortest rainbow walk is always a path, so the first time a
    /// vertex is reached gives its rainbow distance.
    class RainbowSearch {
    public:
        explicit RainbowSearch(const ColoredAdjacency & adj)
            : adj_(adj), states_(static_cast<std::size_t>(adj.n) << adj.k), parent_(states_, -1)
        {
        }

        /// Rainbow distance from `source` to every vertex (-1 when none).
        auto distances(Vertex source) -> std::vector<int>
        {
            run(source);
            return distance_;
        }

        auto path_to(Vertex source, Vertex target) -> std::vector<Vertex>
        {
            run(source);
            if (distance_[target] < 0)
                return {};
            std::vector<Vertex> path;
            for (auto s = first_state_[target]; s >= 0; s = parent_[s])
                path.push_back(static_cast<Vertex>(s >> adj_.k));
            std::reverse(path.begin(), path.end());
            return path;
        }

    private:
        void run(Vertex source)
        {
            std::fill(parent_.begin(), parent_.end(), -1);
            seen_.assign(states_, false);
            distance_.assign(adj_.n, -1);
            first_state_.assign(adj_.n, -1);

            std::vector<std::int64_t> frontier{static_cast<std::int64_t>(source) << adj_.k};
            seen_[frontier[0]] = true;
            distance_[source] = 0;
            first_state_[source] = frontier[0];
            const std::int64_t mask_bits = (std::int64_t{1} << adj_.k) - 1;

            for (int depth = 1; ! frontier.empty(); ++depth) {
                std::vector<std::int64_t> next;
                for (auto state : frontier) {
                    auto v = static_cast<Vertex>(state >> adj_.k);
                    auto used = static_cast<std::uint32_t>(state & mask_bits);
                    for (const auto & [w, bit] : adj_.out[v]) {
                        if (used & bit)
                            continue;
                        auto to = (static_cast<std::int64_t>(w) << adj_.k) | (used | bit);
                        if (seen_[to])
                            continue;
                        seen_[to] = true;
                        parent_[to] = state;
                        if (distance_[w] < 0) {
                            distance_[w] = depth;
                            first_state_[w] = to;
                        }
                        next.push_back(to);
                    }
                }
                frontier = std::move(next);
            }
        }

        const ColoredAdjacency & adj_;
        std::size_t states_;
        std::vector<std::int64_t> parent_;
        std::vector<bool> seen_;
        std::vector<int> distance_;
        std::vector<std::int64_t> first_state_;
    };

    auto sweep(const Graph & g, const ColoredAdjacency & adj) -> RainbowReport
    {
        RainbowReport report;
        report.color_count = adj.k;
        RainbowSearch search(adj);
        std::vector<int> partners(g.order(), 0);
        for (Vertex u = 0; u < g.order(); ++u) {
            auto dist = search.distances(u);
            for (Vertex v = u + 1; v < g.order(); ++v) {
                if (dist[v] < 0)
                    report.failing_pairs.emplace_back(u, v);
                else if (dist[v] == adj.k) {
                    report.exceptional_pairs.emplace_back(u, v);
                    ++partners[u];
                    ++partners[v];
                }
            }
        }
        report.rainbow_connected = report.failing_pairs.empty();
        report.noncomplete = report.rainbow_connected
                && std::all_of(partners.begin(), partners.end(), [](int p) { return p <= 1; });
        return report;
    }

} // namespace

auto find_rainbow_path(const Graph & g, const EdgeColoring & c, Vertex u, Vertex v, bool /*prefer_noncomplete*/)
        -> std::optional<RainbowWitness>
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorCode::VertexOutOfRange, std::to_string(u) + " " + std::to_string(v));
    auto adj = build_adjacency(g, c);
    RainbowSearch search(adj);
    auto path = search.path_to(u, v);
    if (path.empty())
        return std::nullopt;

    RainbowWitness w;
    w.pair = {u, v};
    w.path = std::move(path);
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i)
        w.used_colors.push_back(*c.color_of(Edge(w.path[i], w.path[i + 1])));
    std::sort(w.used_colors.begin(), w.used_colors.end());
    w.complete = static_cast<int>(w.path.size()) - 1 == adj.k;
    return w;
}

auto is_rainbow_connected(const Graph & g, const EdgeColoring & c) -> RainbowReport
{
    return sweep(g, build_adjacency(g, c));
}

auto is_noncomplete(const Graph & g, const EdgeColoring & c) -> RainbowReport
{
    auto report = is_rainbow_connected(g, c);
    if (! report.rainbow_connected) {
        auto [u, v] = report.failing_pairs.front();
        throw Error(ErrorCode::NotRainbowConnected,
                "no rainbow path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    return report;
}

auto audit_coloring(const EdgeColoring & c) -> RainbowReport
{
    auto vertices = c.vertices();
    std::map<Vertex, Vertex> local;
    for (std::size_t i = 0; i < vertices.size(); ++i)
        local[vertices[i]] = static_cast<Vertex>(i);

    std::vector<Edge> edges;
    EdgeColoring local_coloring;
    for (const auto & [e, color] : c.assignment()) {
        Edge le(local[e.u], local[e.v]);
        edges.push_back(le);
        local_coloring.set(le, color);
    }
    Graph sub(static_cast<int>(vertices.size()), std::move(edges));
    auto report = is_rainbow_connected(sub, local_coloring);
    auto remap = [&](std::vector<VertexPair> & pairs) {
        for (auto & [a, b] : pairs) {
            a = vertices[a];
            b = vertices[b];
        }
    };
    remap(report.exceptional_pairs);
    remap(report.failing_pairs);
    return report;
}

auto witness_is_valid(const Graph & g, const EdgeColoring & c, const RainbowWitness & w) -> bool
{
    if (w.path.empty() || w.path.front() != w.pair.first || w.path.back() != w.pair.second)
        return false;
    std::set<Vertex> seen(w.path.begin(), w.path.end());
    if (seen.size() != w.path.size())
        return false;
    std::vector<int> colors;
    for (std::size_t i = 0; i + 1 < w.path.size(); ++i) {
        auto color = c.color_of(Edge(w.path[i], w.path[i + 1]));
        if (! g.adjacent(w.path[i], w.path[i + 1]) || ! color)
            return false;
        colors.push_back(*color);
    }
    std::sort(colors.begin(), colors.end());
    if (std::adjacent_find(colors.begin(), colors.end()) != colors.end())
        return false;
    return colors == w.used_colors && w.complete == (static_cast<int>(colors.size()) == c.color_count());
}

} // namespace rainbow
