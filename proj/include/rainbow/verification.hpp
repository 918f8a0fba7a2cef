#pragma once

#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace rainbow {

using VertexPair = std::pair<Vertex, Vertex>;

struct RainbowWitness {
    VertexPair pair;
    std::vector<Vertex> path;
    std::vector<int> used_colors; // sorted
    bool complete = false;        // path length equals K
};

/// Outcome of a rainbow-connectivity and noncompleteness audit.
///
/// A pair is exceptional when it is joined by rainbow paths but every one of
/// them has length exactly K. The coloring is noncomplete when no vertex
/// occurs in more than one exceptional pair.
struct RainbowReport {
    bool rainbow_connected = false;
    bool noncomplete = false;
    int color_count = 0;
    std::vector<VertexPair> exceptional_pairs;
    std::vector<VertexPair> failing_pairs;
};

/// Shortest rainbow u-v path, ties broken lexicographically. The shortest
/// rainbow path is noncomplete whenever any noncomplete one exists, so the
/// search honours `prefer_noncomplete` without extra work.
/// Throws VertexOutOfRange, UncoloredEdge.
auto find_rainbow_path(const Graph & g, const EdgeColoring & c, Vertex u, Vertex v, bool prefer_noncomplete = true)
        -> std::optional<RainbowWitness>;

/// All-pairs sweep. Fills failing_pairs and exceptional_pairs; the noncomplete
/// flag is only meaningful when rainbow_connected holds. Throws UncoloredEdge.
auto is_rainbow_connected(const Graph & g, const EdgeColoring & c) -> RainbowReport;

/// Same sweep, but throws NotRainbowConnected unless every pair is joined.
auto is_noncomplete(const Graph & g, const EdgeColoring & c) -> RainbowReport;

/// Audits the subgraph formed by the colored edges of `c` alone; pairs in the
/// report use the original vertex ids. Never throws for disconnected stages.
auto audit_coloring(const EdgeColoring & c) -> RainbowReport;

/// Re-validates a witness: consecutive vertices adjacent, vertices distinct,
/// colors pairwise distinct and matching `used_colors`.
auto witness_is_valid(const Graph & g, const EdgeColoring & c, const RainbowWitness & w) -> bool;

} // namespace rainbow
