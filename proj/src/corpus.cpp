#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <set>

namespace rainbow {

namespace {

    constexpr int max_enumerated_order = 7;

    using Rows = std::array<std::uint8_t, max_enumerated_order>;

    auto rows_of(const Graph & g) -> Rows
    {
        Rows rows{};
        for (const auto & e : g.edges()) {
            rows[e.u] |= static_cast<std::uint8_t>(1u << e.v);
            rows[e.v] |= static_cast<std::uint8_t>(1u << e.u);
        }
        return rows;
    }

    /// Upper-triangle bitstring in (0,1), (0,2), ..., (n-2,n-1) order, first
    /// pair in the most significant position.
    auto bitstring(const Rows & rows, int n, const std::vector<Vertex> & at) -> std::uint32_t
    {
        std::uint32_t bits = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                bits = (bits << 1) | ((rows[at[i]] >> at[j]) & 1u);
        return bits;
    }

    struct CanonicalResult {
        std::uint32_t bits = 0;
        std::vector<Vertex> at; // position -> original vertex
    };

    auto canonicalize(const Rows & rows, int n) -> CanonicalResult
    {
        // Refine by (degree, sorted neighbor degrees); positions are filled
        // class by class in invariant order.
        std::vector<int> degree(n);
        for (int v = 0; v < n; ++v)
            degree[v] = __builtin_popcount(rows[v]);
        std::vector<std::vector<int>> invariant(n);
        for (int v = 0; v < n; ++v) {
            invariant[v].push_back(degree[v]);
            std::vector<int> nd;
            for (int w = 0; w < n; ++w)
                if ((rows[v] >> w) & 1u)
                    nd.push_back(degree[w]);
            std::sort(nd.begin(), nd.end());
            invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
        }
        std::vector<Vertex> by_class(n);
        for (int v = 0; v < n; ++v)
            by_class[v] = v;
        std::stable_sort(by_class.begin(), by_class.end(),
                [&](Vertex a, Vertex b) { return invariant[a] < invariant[b]; });

        CanonicalResult best;
        bool have = false;
        std::vector<Vertex> at(n);
        std::vector<bool> used(n, false);
        auto recurse = [&](auto && self, int pos) -> void {
            if (pos == n) {
                auto bits = bitstring(rows, n, at);
                if (! have || bits < best.bits) {
                    best.bits = bits;
                    best.at = at;
                    have = true;
                }
                return;
            }
            const auto & wanted = invariant[by_class[pos]];
            for (int v = 0; v < n; ++v) {
                if (used[v] || invariant[v] != wanted)
                    continue;
                used[v] = true;
                at[pos] = v;
                self(self, pos + 1);
                used[v] = false;
            }
        };
        recurse(recurse, 0);
        return best;
    }

    auto graph_from_rows(const Rows & rows, int n, const std::vector<Vertex> & at) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if ((rows[at[i]] >> at[j]) & 1u)
                    edges.emplace_back(i, j);
        return Graph(n, std::move(edges));
    }

    auto key_string(int n, std::uint32_t bits) -> std::string
    {
        return std::to_string(n) + ":" + std::to_string(bits);
    }

    auto connected_rows(const Rows & rows, int n, std::uint32_t removed) -> bool
    {
        const std::uint32_t all = ((1u << n) - 1) & ~removed;
        if (all == 0)
            return true;
        std::uint32_t reached = all & (~all + 1);
        std::uint32_t frontier = reached;
        while (frontier) {
            std::uint32_t next = 0;
            for (int v = 0; v < n; ++v)
                if ((frontier >> v) & 1u)
                    next |= rows[v];
            next &= all & ~reached;
            reached |= next;
            frontier = next;
        }
        return reached == all;
    }

    auto k_connected_rows(const Rows & rows, int n, int k) -> bool
    {
        if (k <= 0)
            return true;
        if (n <= k)
            return false;
        for (std::uint32_t removed = 0; removed < (1u << n); ++removed)
            if (__builtin_popcount(removed) < k && ! connected_rows(rows, n, removed))
                return false;
        return true;
    }

    auto enumerate(int n, int connectivity) -> Corpus
    {
        Corpus corpus;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                pairs.emplace_back(i, j);

        std::map<std::uint32_t, Graph> classes;
        const std::uint64_t total = std::uint64_t{1} << pairs.size();
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Rows rows{};
            for (std::size_t p = 0; p < pairs.size(); ++p)
                if ((mask >> p) & 1u) {
                    rows[pairs[p].first] |= static_cast<std::uint8_t>(1u << pairs[p].second);
                    rows[pairs[p].second] |= static_cast<std::uint8_t>(1u << pairs[p].first);
                }
            if (! k_connected_rows(rows, n, connectivity))
                continue;
            auto canon = canonicalize(rows, n);
            if (! classes.count(canon.bits))
                classes.emplace(canon.bits, graph_from_rows(rows, n, canon.at));
        }
        for (auto & [bits, g] : classes) {
            corpus.keys.push_back(key_string(n, bits));
            corpus.graphs.push_back({std::move(g), "enumerated"});
        }
        return corpus;
    }

    /// Base cycle plus random ears and chords, then a random relabelling.
    auto random_two_connected(int n, std::mt19937_64 & rng) -> Graph
    {
        auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

        const int base = uniform(3, std::max(3, n - uniform(0, n - 3)));
        std::set<Edge> edges;
        for (int i = 0; i < base; ++i)
            edges.emplace(i, (i + 1) % base);
        int have = base;

        auto pick_feet = [&](Vertex & a, Vertex & b) {
            a = uniform(0, have - 1);
            do
                b = uniform(0, have - 1);
            while (b == a);
        };
        auto try_chord = [&]() -> bool {
            for (int attempt = 0; attempt < 32; ++attempt) {
                Vertex a, b;
                pick_feet(a, b);
                if (edges.emplace(a, b).second)
                    return true;
            }
            return false;
        };

        while (have < n) {
            if (uniform(0, 4) == 0 && try_chord())
                continue;
            const int inner = uniform(1, std::min(n - have, 4));
            Vertex a, b;
            pick_feet(a, b);
            Vertex prev = a;
            for (int i = 0; i < inner; ++i) {
                edges.emplace(prev, have);
                prev = have++;
            }
            edges.emplace(prev, b);
        }
        for (int extra = uniform(0, n / 3); extra > 0; --extra)
            try_chord();

        std::vector<Vertex> label(n);
        for (int v = 0; v < n; ++v)
            label[v] = v;
        std::shuffle(label.begin(), label.end(), rng);
        std::vector<Edge> relabelled;
        for (const auto & e : edges)
            relabelled.emplace_back(label[e.u], label[e.v]);
        return Graph(n, std::move(relabelled));
    }

} // namespace

auto canonical_key(const Graph & g) -> std::string
{
    if (g.order() > max_enumerated_order)
        throw Error(ErrorCode::InfeasibleParameters, "canonical form is limited to 7 vertices");
    return key_string(g.order(), canonicalize(rows_of(g), g.order()).bits);
}

auto canonical_form(const Graph & g) -> Graph
{
    if (g.order() > max_enumerated_order)
        throw Error(ErrorCode::InfeasibleParameters, "canonical form is limited to 7 vertices");
    auto rows = rows_of(g);
    return graph_from_rows(rows, g.order(), canonicalize(rows, g.order()).at);
}

auto build_corpus(CorpusMode mode, int n, int connectivity, int count, std::uint64_t seed) -> Corpus
{
    if (n < 1 || connectivity < 0)
        throw Error(ErrorCode::InfeasibleParameters, "n must be positive and connectivity non-negative");

    if (mode == CorpusMode::Enumerate) {
        if (n > max_enumerated_order)
            throw Error(ErrorCode::InfeasibleParameters, "enumeration is limited to n <= 7");
        return enumerate(n, connectivity);
    }

    if (connectivity > 2)
        throw Error(ErrorCode::InfeasibleParameters, "random generation only guarantees 2-connectivity");
    if (n < 3 || count < 0)
        throw Error(ErrorCode::InfeasibleParameters, "random generation needs n >= 3 and count >= 0");

    Corpus corpus;
    std::mt19937_64 rng(seed);
    std::set<std::vector<Edge>> seen;
    const std::string tag = "generated(" + std::to_string(seed) + ")";
    for (int attempts = 0; static_cast<int>(corpus.graphs.size()) < count; ++attempts) {
        if (attempts > 100 * count + 1000)
            throw Error(ErrorCode::InfeasibleParameters, "could not generate enough distinct graphs");
        auto g = random_two_connected(n, rng);
        std::vector<Edge> key(g.edges().begin(), g.edges().end());
        if (! seen.insert(key).second)
            continue;
        corpus.keys.push_back(to_edge_list(g));
        corpus.graphs.push_back({std::move(g), tag});
    }
    return corpus;
}

} // namespace rainbow
