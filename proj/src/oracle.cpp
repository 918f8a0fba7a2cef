#include "rainbow/oracle.hpp"

#include "rainbow/error.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>

namespace rainbow {

namespace {

    class HamiltonSearch {
    public:
        HamiltonSearch(const Graph & g, SearchBudget budget)
            : g_(g), budget_(budget), visited_(g.order(), false), free_degree_(g.order())
        {
            for (Vertex v = 0; v < g.order(); ++v)
                free_degree_[v] = g.degree(v);
        }

        auto run() -> std::optional<Cycle>
        {
            if (g_.order() < 3)
                return std::nullopt;
            for (Vertex v = 0; v < g_.order(); ++v)
                if (g_.degree(v) < 2)
                    return std::nullopt;
            visit(0);
            if (extend(0))
                return normalize_cycle(Cycle{path_});
            return std::nullopt;
        }

    private:
        // free_degree_[w] counts neighbors of w that are unvisited, plus the
        // two path ends that could still connect to it.
        void visit(Vertex v)
        {
            visited_[v] = true;
            path_.push_back(v);
            for (auto w : g_.neighbors(v))
                --free_degree_[w];
        }

        void unvisit(Vertex v)
        {
            for (auto w : g_.neighbors(v))
                ++free_degree_[w];
            path_.pop_back();
            visited_[v] = false;
        }

        auto extend(Vertex end) -> bool
        {
            if (++nodes_ > budget_.nodes)
                throw Error(ErrorCode::BudgetExceeded, "Hamiltonian search exceeded its node budget");
            if (static_cast<int>(path_.size()) == g_.order())
                return g_.adjacent(end, path_.front());

            for (auto w : g_.neighbors(end)) {
                if (visited_[w])
                    continue;
                visit(w);
                if (feasible(w) && extend(w))
                    return true;
                unvisit(w);
            }
            return false;
        }

        // Each unvisited vertex needs two ways in: unvisited neighbors, the
        // new end, or the start vertex.
        auto feasible(Vertex end) const -> bool
        {
            const auto start = path_.front();
            for (Vertex v = 0; v < g_.order(); ++v) {
                if (visited_[v])
                    continue;
                int ways = free_degree_[v];
                if (g_.adjacent(v, end))
                    ++ways;
                if (g_.adjacent(v, start))
                    ++ways;
                if (ways < 2)
                    return false;
            }
            return true;
        }

        const Graph & g_;
        SearchBudget budget_;
        std::vector<bool> visited_;
        std::vector<int> free_degree_;
        std::vector<Vertex> path_;
        std::int64_t nodes_ = 0;
    };

    /// Edges ordered by breadth-first discovery from vertex 0 so that paths
    /// near the root are fully colored early and pruning bites.
    auto bfs_edge_order(const Graph & g) -> std::vector<int>
    {
        std::vector<int> order;
        std::vector<bool> taken(g.size(), false), seen(g.order(), false);
        std::queue<Vertex> queue;
        for (Vertex root = 0; root < g.order(); ++root) {
            if (seen[root])
                continue;
            seen[root] = true;
            queue.push(root);
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop();
                for (auto w : g.neighbors(v)) {
                    auto idx = g.edge_index(v, w);
                    if (! taken[idx]) {
                        taken[idx] = true;
                        order.push_back(idx);
                    }
                    if (! seen[w]) {
                        seen[w] = true;
                        queue.push(w);
                    }
                }
            }
        }
        return order;
    }

    /// Exhaustive search over colorings with <= k colors. Colors are introduced
    /// in ascending order, which also fixes the first edge to color 1.
    class RainbowColoringSearch {
    public:
        RainbowColoringSearch(const Graph & g, int k, SearchBudget budget, RcStats & stats)
            : g_(g), k_(k), budget_(budget), stats_(stats), order_(bfs_edge_order(g)), color_(g.size(), 0),
              seen_(static_cast<std::size_t>(g.order()) << k, false)
        {
        }

        auto run() -> std::optional<EdgeColoring>
        {
            if (! assign(0, 0))
                return std::nullopt;
            EdgeColoring c;
            for (int i = 0; i < g_.size(); ++i)
                c.set(g_.edges()[i], color_[i]);
            return c;
        }

    private:
        auto assign(std::size_t depth, int used) -> bool
        {
            if (++stats_.nodes > budget_.nodes)
                throw Error(ErrorCode::BudgetExceeded, "exact rc search exceeded its node budget");
            if (! optimistic_feasible())
                return false;
            if (depth == order_.size())
                return true;
            const int edge = order_[depth];
            for (int c = 1; c <= std::min(k_, used + 1); ++c) {
                color_[edge] = c;
                if (assign(depth + 1, std::max(used, c)))
                    return true;
            }
            color_[edge] = 0;
            return false;
        }

        // Relaxation: uncolored edges are treated as wildcards that never
        // clash. If some pair has no rainbow walk even then, no completion of
        // the partial coloring works.
        auto optimistic_feasible() -> bool
        {
            const int n = g_.order();
            for (Vertex s = 0; s < n; ++s) {
                std::fill(seen_.begin(), seen_.end(), false);
                std::vector<bool> reached(n, false);
                reached[s] = true;
                int reached_count = 1;
                std::vector<std::int64_t> frontier{static_cast<std::int64_t>(s) << k_};
                seen_[frontier[0]] = true;
                while (! frontier.empty() && reached_count < n) {
                    std::vector<std::int64_t> next;
                    for (auto state : frontier) {
                        auto v = static_cast<Vertex>(state >> k_);
                        auto used = static_cast<std::uint32_t>(state & ((std::int64_t{1} << k_) - 1));
                        for (auto w : g_.neighbors(v)) {
                            int c = color_[g_.edge_index(v, w)];
                            std::uint32_t bit = c == 0 ? 0u : (1u << (c - 1));
                            if (used & bit)
                                continue;
                            auto to = (static_cast<std::int64_t>(w) << k_) | (used | bit);
                            if (seen_[to])
                                continue;
                            seen_[to] = true;
                            if (! reached[w]) {
                                reached[w] = true;
                                ++reached_count;
                            }
                            next.push_back(to);
                        }
                    }
                    frontier = std::move(next);
                }
                if (reached_count < n)
                    return false;
            }
            return true;
        }

        const Graph & g_;
        int k_;
        SearchBudget budget_;
        RcStats & stats_;
        std::vector<int> order_;
        std::vector<int> color_;
        std::vector<bool> seen_;
    };

} // namespace

auto find_hamiltonian_cycle(const Graph & g, SearchBudget budget) -> std::optional<Cycle>
{
    return HamiltonSearch(g, budget).run();
}

auto rainbow_colorable(const Graph & g, int k, SearchBudget budget, RcStats & stats) -> std::optional<EdgeColoring>
{
    if (k < 0 || k > 24)
        throw Error(ErrorCode::InfeasibleParameters, "color count out of range");
    return RainbowColoringSearch(g, k, budget, stats).run();
}

auto exact_rc(const Graph & g, int max_colors, SearchBudget budget) -> RcResult
{
    if (! is_connected(g))
        throw Error(ErrorCode::Disconnected, "exact_rc requires a connected graph");
    RcResult result;
    if (g.order() <= 1)
        return result;

    const int diam = diameter(g);
    result.explored.lower_bound = diam;
    if (max_colors < 0)
        max_colors = g.size();
    if (max_colors < diam)
        throw Error(ErrorCode::MaxColorsExceeded,
                "max_colors " + std::to_string(max_colors) + " is below the diameter " + std::to_string(diam));

    for (int k = diam; k <= max_colors; ++k) {
        if (auto witness = rainbow_colorable(g, k, budget, result.explored)) {
            result.rc = k;
            result.witness = std::move(*witness);
            return result;
        }
    }
    throw Error(ErrorCode::MaxColorsExceeded, "no rainbow coloring with at most " + std::to_string(max_colors) + " colors");
}

auto conjecture_scan(int k, int n_max, const Corpus & corpus, SearchBudget budget) -> ScanReport
{
    if (k < 1)
        throw Error(ErrorCode::InfeasibleParameters, "connectivity k must be positive");
    ScanReport report;
    report.k = k;
    for (const auto & entry : corpus.graphs) {
        const auto & g = entry.graph;
        if (g.order() > n_max)
            continue;
        if (! is_k_connected(g, k))
            throw Error(ErrorCode::InfeasibleParameters, "corpus member is not " + std::to_string(k) + "-connected");

        ScanRecord record;
        record.graph = g;
        record.bound = (g.order() + k - 1) / k;
        try {
            record.rc = exact_rc(g, -1, budget).rc;
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::BudgetExceeded)
                throw;
        }
        if (record.rc) {
            record.ok = *record.rc <= record.bound;
            if (! record.ok)
                ++report.violations;
            auto excess = *record.rc - record.bound;
            report.max_excess = report.max_excess ? std::max(*report.max_excess, excess) : excess;
        }
        else
            ++report.unknowns;
        report.records.push_back(std::move(record));
    }
    return report;
}

} // namespace rainbow
