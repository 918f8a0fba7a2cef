#include "rainbow/decomposition.hpp"

#include "rainbow/error.hpp"

#include <algorithm>
#include <map>

namespace rainbow {

auto Subgraph::empty(const Graph & g) -> Subgraph
{
    Subgraph s;
    s.has_vertex.assign(g.order(), false);
    s.has_edge.assign(g.size(), false);
    return s;
}

auto Subgraph::of_cycle(const Graph & g, const Cycle & c) -> Subgraph
{
    auto s = empty(g);
    auto closed = c.vertices;
    closed.push_back(c.vertices.front());
    s.add_ear(g, Ear{closed});
    return s;
}

void Subgraph::add_ear(const Graph & g, const Ear & ear)
{
    for (auto v : ear.vertices)
        if (! has_vertex[v]) {
            has_vertex[v] = true;
            ++vertex_count;
        }
    for (std::size_t i = 0; i + 1 < ear.vertices.size(); ++i) {
        auto idx = g.edge_index(ear.vertices[i], ear.vertices[i + 1]);
        if (idx < 0)
            throw Error(ErrorCode::MalformedLine, "ear uses a non-edge");
        if (! has_edge[idx]) {
            has_edge[idx] = true;
            ++edge_count;
        }
    }
}

namespace {

    class LongestEarSearch {
    public:
        LongestEarSearch(const Graph & g, const Subgraph & current, SearchBudget budget)
            : g_(g), current_(current), budget_(budget), on_path_(g.order(), false)
        {
            free_ = g.order() - current.vertex_count;
        }

        auto run() -> Ear
        {
            for (Vertex a = 0; a < g_.order(); ++a) {
                if (! current_.has_vertex[a])
                    continue;
                foot_ = a;
                for (auto w : g_.neighbors(a)) {
                    if (current_.has_vertex[w]) {
                        if (a < w && ! current_.has_edge[g_.edge_index(a, w)] && best_.empty())
                            best_ = {a, w};
                        continue;
                    }
                    path_ = {a};
                    extend(w);
                }
            }
            if (best_.empty())
                throw Error(ErrorCode::NoEar, "current subgraph already spans every edge");
            return Ear{best_};
        }

    private:
        auto best_length() const -> int { return static_cast<int>(best_.size()) - 1; }

        // Path so far is path_, stepping into the outside vertex w.
        void extend(Vertex w)
        {
            if (++nodes_ > budget_.nodes)
                throw Error(ErrorCode::BudgetExceeded, "longest-ear search exceeded its node budget");

            path_.push_back(w);
            on_path_[w] = true;
            --free_;
            const int length_so_far = static_cast<int>(path_.size()) - 1;

            // Best case: every remaining outside vertex joins before closing.
            if (length_so_far + free_ + 1 > best_length()) {
                for (auto x : g_.neighbors(w)) {
                    if (current_.has_vertex[x]) {
                        if (x != foot_ && foot_ < x && length_so_far + 1 > best_length()) {
                            best_ = path_;
                            best_.push_back(x);
                        }
                    }
                    else if (! on_path_[x] && length_so_far + free_ + 1 > best_length())
                        extend(x);
                }
            }

            ++free_;
            on_path_[w] = false;
            path_.pop_back();
        }

        const Graph & g_;
        const Subgraph & current_;
        SearchBudget budget_;
        std::vector<bool> on_path_;
        std::vector<Vertex> path_;
        std::vector<Vertex> best_;
        Vertex foot_ = 0;
        int free_ = 0;
        std::int64_t nodes_ = 0;
    };

    auto stage_subgraph(const Graph & g, const Subgraph & s) -> Graph
    {
        std::vector<Vertex> local(g.order(), -1);
        int next = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            if (s.has_vertex[v])
                local[v] = next++;
        std::vector<Edge> edges;
        for (int i = 0; i < g.size(); ++i)
            if (s.has_edge[i])
                edges.emplace_back(local[g.edges()[i].u], local[g.edges()[i].v]);
        return Graph(next, std::move(edges));
    }

} // namespace

auto find_longest_ear(const Graph & g, const Subgraph & current, SearchBudget budget) -> Ear
{
    return LongestEarSearch(g, current, budget).run();
}

auto ear_decomposition(const Graph & g, SearchBudget budget) -> EarDecomposition
{
    if (! is_two_connected(g))
        throw Error(ErrorCode::NotTwoConnected, "ear decomposition requires a 2-connected graph");

    EarDecomposition d;
    d.base = find_even_cycle(g);
    auto current = Subgraph::of_cycle(g, d.base);
    d.stage_orders.push_back(current.vertex_count);

    while (current.edge_count < g.size()) {
        auto ear = find_longest_ear(g, current, budget);
        current.add_ear(g, ear);
        d.ears.push_back(std::move(ear));
        d.stage_orders.push_back(current.vertex_count);
        if (d.ears.back().length() >= 2)
            d.t = d.k();
    }
    return d;
}

auto validate_decomposition(const Graph & g, const EarDecomposition & d) -> std::string
{
    if (d.base.length() % 2 != 0)
        return "base cycle has odd length";
    if (! is_valid_cycle(g, d.base))
        return "base is not a cycle of the graph";

    auto current = Subgraph::of_cycle(g, d.base);
    if (d.stage_orders.size() != d.ears.size() + 1 || d.stage_orders[0] != current.vertex_count)
        return "stage orders do not match";

    int last_long = 0;
    for (int i = 0; i < d.k(); ++i) {
        const auto & ear = d.ears[i];
        const auto label = "ear " + std::to_string(i + 1);
        if (ear.length() < 1)
            return label + " is empty";
        if (ear.foot_a() == ear.foot_b())
            return label + " has equal feet";
        if (! current.has_vertex[ear.foot_a()] || ! current.has_vertex[ear.foot_b()])
            return label + " has a foot outside the current subgraph";
        auto inner = ear.internal();
        std::vector<Vertex> sorted_inner = inner;
        std::sort(sorted_inner.begin(), sorted_inner.end());
        if (std::adjacent_find(sorted_inner.begin(), sorted_inner.end()) != sorted_inner.end())
            return label + " repeats an internal vertex";
        for (auto v : inner)
            if (current.has_vertex[v])
                return label + " has an internal vertex inside the current subgraph";
        for (std::size_t j = 0; j + 1 < ear.vertices.size(); ++j)
            if (! g.adjacent(ear.vertices[j], ear.vertices[j + 1]))
                return label + " uses a non-edge";
        if (ear.length() == 1 && current.has_edge[g.edge_index(ear.foot_a(), ear.foot_b())])
            return label + " repeats an existing edge";
        if (i > 0 && ear.length() > d.ears[i - 1].length())
            return label + " is longer than its predecessor";
        if (ear.length() >= 2)
            last_long = i + 1;

        current.add_ear(g, ear);
        if (d.stage_orders[i + 1] != current.vertex_count)
            return "stage order mismatch after " + label;
        if (! is_two_connected(stage_subgraph(g, current)))
            return "prefix through " + label + " is not 2-connected";
    }
    if (last_long != d.t)
        return "t does not index the last ear of length >= 2";
    if (current.vertex_count != g.order() || current.edge_count != g.size())
        return "ears do not cover the graph";
    return {};
}

auto prefix_graph(const Graph & g, const EarDecomposition & d, int prefix) -> Graph
{
    auto current = Subgraph::of_cycle(g, d.base);
    for (int i = 0; i < prefix && i < d.k(); ++i)
        current.add_ear(g, d.ears[i]);
    return stage_subgraph(g, current);
}

} // namespace rainbow
