#include "rainbow/graph.hpp"

#include "rainbow/error.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <queue>
#include <sstream>

namespace rainbow {

auto to_string(ErrorCode code) -> std::string_view
{
    switch (code) {
        case ErrorCode::MalformedHeader: return "MalformedHeader";
        case ErrorCode::MalformedLine: return "MalformedLine";
        case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::NotTwoConnected: return "NotTwoConnected";
        case ErrorCode::NoEvenCycle: return "NoEvenCycle";
        case ErrorCode::NoEar: return "NoEar";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::EarTooShort: return "EarTooShort";
        case ErrorCode::EvenEar: return "EvenEar";
        case ErrorCode::OddEar: return "OddEar";
        case ErrorCode::RepairExhausted: return "RepairExhausted";
        case ErrorCode::TooFewShortEars: return "TooFewShortEars";
        case ErrorCode::FeetNotInStage: return "FeetNotInStage";
        case ErrorCode::NotAChord: return "NotAChord";
        case ErrorCode::ConstructionUnverified: return "ConstructionUnverified";
        case ErrorCode::UncoloredEdge: return "UncoloredEdge";
        case ErrorCode::NotRainbowConnected: return "NotRainbowConnected";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::MaxColorsExceeded: return "MaxColorsExceeded";
        case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
        case ErrorCode::MalformedColoring: return "MalformedColoring";
    }
    return "Unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)), adjacency_(n > 0 ? n : 0)
{
    if (n < 0)
        throw Error(ErrorCode::VertexOutOfRange, "negative vertex count");
    for (const auto & e : edges_) {
        if (e.u == e.v)
            throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw Error(ErrorCode::VertexOutOfRange,
                    "edge " + std::to_string(e.u) + " " + std::to_string(e.v) + " with n = " + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw Error(ErrorCode::DuplicateEdge, std::to_string(dup->u) + " " + std::to_string(dup->v));
    for (const auto & e : edges_) {
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (auto & nbrs : adjacency_)
        std::sort(nbrs.begin(), nbrs.end());
}

auto Graph::adjacent(Vertex a, Vertex b) const -> bool
{
    return edge_index(a, b) >= 0;
}

auto Graph::edge_index(Vertex a, Vertex b) const -> int
{
    if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_)
        return -1;
    Edge key(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it == edges_.end() || *it != key)
        return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

    auto parse_ints(std::string_view line, std::vector<long long> & out) -> bool
    {
        out.clear();
        std::size_t pos = 0;
        while (pos < line.size()) {
            if (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r') {
                ++pos;
                continue;
            }
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
            if (ec != std::errc() || ptr == line.data() + pos)
                return false;
            pos = static_cast<std::size_t>(ptr - line.data());
            if (pos < line.size() && line[pos] != ' ' && line[pos] != '\t' && line[pos] != '\r')
                return false;
            out.push_back(value);
        }
        return true;
    }

    auto is_blank_or_comment(std::string_view line) -> bool
    {
        auto first = line.find_first_not_of(" \t\r");
        return first == std::string_view::npos || line[first] == '#';
    }

} // namespace

auto parse_edge_list(std::istream & in) -> Graph
{
    std::string line;
    std::vector<long long> fields;
    bool have_header = false;
    long long n = 0, m = 0;
    std::vector<Edge> edges;
    int line_no = 0;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank_or_comment(line))
            continue;
        if (! parse_ints(line, fields) || fields.size() != 2) {
            auto code = have_header ? ErrorCode::MalformedLine : ErrorCode::MalformedHeader;
            throw Error(code, "line " + std::to_string(line_no) + ": expected two integers");
        }
        if (! have_header) {
            n = fields[0];
            m = fields[1];
            if (n < 0 || m < 0 || n > 1'000'000)
                throw Error(ErrorCode::MalformedHeader, "invalid counts on line " + std::to_string(line_no));
            have_header = true;
            continue;
        }
        auto u = fields[0], v = fields[1];
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": " + line);
        if (u == v)
            throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no) + ": " + line);
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }

    if (! have_header)
        throw Error(ErrorCode::MalformedHeader, "missing header line");
    if (static_cast<long long>(edges.size()) != m)
        throw Error(ErrorCode::MalformedHeader,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    return Graph(static_cast<int>(n), std::move(edges));
}

auto parse_edge_list(std::string_view text) -> Graph
{
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

auto to_edge_list(const Graph & g) -> std::string
{
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (const auto & e : g.edges())
        out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
    return out;
}

namespace {

    auto connected_without(const Graph & g, const std::vector<bool> & removed) -> bool
    {
        int start = -1, alive = 0;
        for (int v = 0; v < g.order(); ++v)
            if (! removed[v]) {
                ++alive;
                if (start < 0)
                    start = v;
            }
        if (alive <= 1)
            return true;
        std::vector<bool> seen(g.order(), false);
        std::vector<Vertex> stack{start};
        seen[start] = true;
        int reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbors(v))
                if (! removed[w] && ! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == alive;
    }

} // namespace

auto is_connected(const Graph & g) -> bool
{
    return connected_without(g, std::vector<bool>(g.order(), false));
}

auto is_two_connected(const Graph & g) -> bool
{
    const int n = g.order();
    if (n < 3 || ! is_connected(g))
        return false;

    // Iterative DFS lowpoint computation from vertex 0.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next_child(n, 0);
    int timer = 0, root_children = 0;
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;

    while (! stack.empty()) {
        auto v = stack.back();
        auto nbrs = g.neighbors(v);
        if (next_child[v] < nbrs.size()) {
            auto w = nbrs[next_child[v]++];
            if (disc[w] < 0) {
                parent[w] = v;
                disc[w] = low[w] = timer++;
                if (v == 0)
                    ++root_children;
                stack.push_back(w);
            }
            else if (w != parent[v])
                low[v] = std::min(low[v], disc[w]);
            continue;
        }
        stack.pop_back();
        auto p = parent[v];
        if (p >= 0) {
            low[p] = std::min(low[p], low[v]);
            if (p != 0 && low[v] >= disc[p])
                return false;
        }
    }
    return root_children < 2;
}

auto is_k_connected(const Graph & g, int k) -> bool
{
    if (k <= 0)
        return true;
    const int n = g.order();
    if (n <= k || ! is_connected(g))
        return false;

    std::vector<bool> removed(n, false);
    // Enumerate every vertex subset of size 1..k-1 as a candidate separator.
    std::function<bool(int, int)> separable = [&](int from, int left) -> bool {
        if (left == 0)
            return ! connected_without(g, removed);
        for (int v = from; v < n; ++v) {
            removed[v] = true;
            bool cut = separable(v + 1, left - 1);
            removed[v] = false;
            if (cut)
                return true;
        }
        return false;
    };
    for (int size = 1; size < k; ++size)
        if (separable(0, size))
            return false;
    return true;
}

auto is_valid_cycle(const Graph & g, const Cycle & c) -> bool
{
    const int m = c.length();
    if (m < 3)
        return false;
    std::vector<bool> seen(g.order(), false);
    for (auto v : c.vertices) {
        if (v < 0 || v >= g.order() || seen[v])
            return false;
        seen[v] = true;
    }
    for (int i = 0; i < m; ++i)
        if (! g.adjacent(c.vertices[i], c.vertices[(i + 1) % m]))
            return false;
    return true;
}

auto normalize_cycle(Cycle c) -> Cycle
{
    auto & vs = c.vertices;
    if (vs.size() < 3)
        return c;
    std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
    if (vs.back() < vs[1])
        std::reverse(vs.begin() + 1, vs.end());
    return c;
}

namespace {

    /// BFS shortest path from `from` to `to` that does not use the edge between
    /// them. Empty when unreachable.
    auto shortest_path_avoiding_edge(const Graph & g, Vertex from, Vertex to) -> std::vector<Vertex>
    {
        std::vector<int> parent(g.order(), -2);
        std::queue<Vertex> queue;
        parent[from] = -1;
        queue.push(from);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : g.neighbors(v)) {
                if (v == from && w == to)
                    continue;
                if (parent[w] != -2)
                    continue;
                parent[w] = v;
                if (w == to) {
                    std::vector<Vertex> path;
                    for (int x = to; x != -1; x = parent[x])
                        path.push_back(x);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push(w);
            }
        }
        return {};
    }

    auto shortest_cycle_through(const Graph & g, Vertex root) -> Cycle
    {
        Cycle best;
        for (auto w : g.neighbors(root)) {
            auto path = shortest_path_avoiding_edge(g, root, w);
            if (path.empty())
                continue;
            auto candidate = normalize_cycle(Cycle{path});
            if (best.vertices.empty() || candidate.length() < best.length()
                    || (candidate.length() == best.length() && candidate < best))
                best = std::move(candidate);
        }
        return best;
    }

    /// Shortest ear of `cycle` leaving foot `a` along edge a-w. Empty if none.
    auto ear_from(const Graph & g, const std::vector<int> & position, Vertex a, Vertex w) -> std::vector<Vertex>
    {
        if (position[w] >= 0)
            return w == a ? std::vector<Vertex>{} : std::vector<Vertex>{a, w};
        std::vector<int> parent(g.order(), -2);
        std::queue<Vertex> queue;
        parent[w] = a;
        queue.push(w);
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto x : g.neighbors(v)) {
                if (position[x] >= 0) {
                    if (x == a)
                        continue;
                    std::vector<Vertex> path{x};
                    for (int y = v; y != a; y = parent[y])
                        path.push_back(y);
                    path.push_back(a);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                if (parent[x] != -2)
                    continue;
                parent[x] = v;
                queue.push(x);
            }
        }
        return {};
    }

} // namespace

auto find_even_cycle(const Graph & g) -> Cycle
{
    if (! is_two_connected(g))
        throw Error(ErrorCode::NotTwoConnected, "find_even_cycle requires a 2-connected graph");

    auto base = shortest_cycle_through(g, 0);
    if (base.length() % 2 == 0)
        return base;
    if (g.size() == g.order())
        throw Error(ErrorCode::NoEvenCycle, "graph is an odd cycle");

    const int m = base.length();
    std::vector<int> position(g.order(), -1);
    for (int i = 0; i < m; ++i)
        position[base.vertices[i]] = i;

    std::vector<Vertex> on_cycle = base.vertices;
    std::sort(on_cycle.begin(), on_cycle.end());

    Cycle best;
    for (auto a : on_cycle) {
        for (auto w : g.neighbors(a)) {
            auto pa = position[a];
            if (w == base.vertices[(pa + 1) % m] || w == base.vertices[(pa + m - 1) % m])
                continue;
            auto ear = ear_from(g, position, a, w);
            if (ear.empty())
                continue;
            const int ear_len = static_cast<int>(ear.size()) - 1;
            const Vertex b = ear.back();
            const int forward = (position[b] - position[a] + m) % m;
            // The two a-b segments have lengths of opposite parity; close the
            // ear with the one whose parity matches.
            const int step = (ear_len + forward) % 2 == 0 ? -1 : 1;
            std::vector<Vertex> cycle = ear;
            for (int p = (position[b] + step + m) % m; p != position[a]; p = (p + step + m) % m)
                cycle.push_back(base.vertices[p]);
            auto candidate = normalize_cycle(Cycle{std::move(cycle)});
            if (best.vertices.empty() || candidate < best)
                best = std::move(candidate);
        }
    }
    if (best.vertices.empty())
        throw Error(ErrorCode::NoEvenCycle, "no ear of the initial odd cycle");
    return best;
}

auto diameter(const Graph & g) -> int
{
    const int n = g.order();
    int best = 0;
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<Vertex> queue;
        dist[s] = 0;
        queue.push(s);
        int reached = 1;
        while (! queue.empty()) {
            auto v = queue.front();
            queue.pop();
            for (auto w : g.neighbors(v))
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    best = std::max(best, dist[w]);
                    ++reached;
                    queue.push(w);
                }
        }
        if (reached != n)
            return -1;
    }
    return best;
}

auto make_cycle(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

auto make_path(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

auto make_complete(int n) -> Graph
{
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

} // namespace rainbow
