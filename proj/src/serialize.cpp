#include "rainbow/serialize.hpp"

#include "rainbow/error.hpp"

#include <array>
#include <sstream>

namespace rainbow {

namespace {

    constexpr std::array<const char *, 16> palette{
        "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#42d4f4", "#f032e6", "#bfef45",
        "#fabed4", "#469990", "#dcbeff", "#9a6324", "#800000", "#aaffc3", "#808000", "#000075",
    };

    auto pairs_to_json(const std::vector<VertexPair> & pairs) -> json
    {
        auto out = json::array();
        for (const auto & [u, v] : pairs)
            out.push_back({u, v});
        return out;
    }

} // namespace

auto coloring_to_json(int n, const EdgeColoring & c) -> json
{
    auto edges = json::array();
    for (const auto & [e, color] : c.assignment())
        edges.push_back({e.u, e.v, color});
    return {{"n", n}, {"colors", c.color_count()}, {"edges", std::move(edges)}};
}

auto coloring_from_json(const json & j) -> EdgeColoring
{
    try {
        EdgeColoring c;
        for (const auto & entry : j.at("edges")) {
            if (! entry.is_array() || entry.size() != 3)
                throw Error(ErrorCode::MalformedColoring, "edge entries must be [u, v, color]");
            Edge e(entry[0].get<int>(), entry[1].get<int>());
            int color = entry[2].get<int>();
            if (color < 1)
                throw Error(ErrorCode::MalformedColoring, "color ids start at 1");
            if (c.contains(e))
                throw Error(ErrorCode::MalformedColoring, "edge listed twice");
            c.set(e, color);
        }
        if (j.contains("colors") && j.at("colors").get<int>() != c.color_count())
            throw Error(ErrorCode::MalformedColoring, "declared color count does not match the edges");
        return c;
    }
    catch (const json::exception & e) {
        throw Error(ErrorCode::MalformedColoring, e.what());
    }
}

auto decomposition_to_json(const EarDecomposition & d) -> json
{
    auto ears = json::array();
    for (const auto & ear : d.ears)
        ears.push_back({{"vertices", ear.vertices}});
    return {{"base", d.base.vertices}, {"ears", std::move(ears)}, {"t", d.t}};
}

auto decomposition_from_json(const json & j) -> EarDecomposition
{
    EarDecomposition d;
    d.base.vertices = j.at("base").get<std::vector<Vertex>>();
    for (const auto & ear : j.at("ears"))
        d.ears.push_back(Ear{ear.at("vertices").get<std::vector<Vertex>>()});
    d.t = j.at("t").get<int>();
    return d;
}

auto report_to_json(const RainbowReport & r) -> json
{
    return {
        {"rainbow_connected", r.rainbow_connected},
        {"noncomplete", r.noncomplete},
        {"K", r.color_count},
        {"exceptional_pairs", pairs_to_json(r.exceptional_pairs)},
        {"failing_pairs", pairs_to_json(r.failing_pairs)},
    };
}

auto trace_to_json(const ConstructionTrace & t) -> json
{
    auto steps = json::array();
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
        const auto & s = t.steps[i];
        steps.push_back({
            {"stage", i},
            {"rule", std::string(to_string(s.rule))},
            {"ear", s.ear.vertices},
            {"source_index", s.source_index},
            {"new_colors", s.new_colors},
            {"reused_colors", s.reused_colors},
            {"stage_order", s.stage_order},
        });
    }
    json out{{"route", t.hamiltonian_route ? "hamiltonian" : "ear_decomposition"}, {"steps", std::move(steps)}};
    if (t.decomposition)
        out["decomposition"] = decomposition_to_json(*t.decomposition);
    return out;
}

auto scan_record_to_json(const ScanRecord & r) -> json
{
    json rc = r.rc ? json(*r.rc) : json("unknown");
    return {{"graph", to_edge_list(r.graph)}, {"n", r.graph.order()}, {"rc", rc}, {"bound", r.bound}, {"ok", r.ok}};
}

auto coloring_to_dot(const Graph & g, const EdgeColoring & c) -> std::string
{
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v)
        out << "  " << v << ";\n";
    for (const auto & e : g.edges()) {
        out << "  " << e.u << " -- " << e.v;
        if (auto color = c.color_of(e))
            out << " [label=\"" << *color << "\", color=\"" << palette[(*color - 1) % palette.size()] << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace rainbow
