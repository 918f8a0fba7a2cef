#pragma once

#include "rainbow/coloring.hpp"
#include "rainbow/decomposition.hpp"
#include "rainbow/edge_coloring.hpp"
#include "rainbow/oracle.hpp"
#include "rainbow/verification.hpp"

#include <json.hpp>

#include <string>

namespace rainbow {

using json = nlohmann::json;

/// {"n":int,"colors":K,"edges":[[u,v,color],...]}, edges sorted.
auto coloring_to_json(int n, const EdgeColoring & c) -> json;
/// Inverse of coloring_to_json. Throws MalformedColoring.
auto coloring_from_json(const json & j) -> EdgeColoring;

/// {"base":[v...],"ears":[{"vertices":[v...]}...],"t":int}
auto decomposition_to_json(const EarDecomposition & d) -> json;
auto decomposition_from_json(const json & j) -> EarDecomposition;

/// {"rainbow_connected":bool,"noncomplete":bool,"K":int,
///  "exceptional_pairs":[[u,v]...],"failing_pairs":[[u,v]...]}
auto report_to_json(const RainbowReport & r) -> json;

auto trace_to_json(const ConstructionTrace & t) -> json;

/// {"graph":edge-list,"n":int,"rc":int|"unknown","bound":int,"ok":bool}
auto scan_record_to_json(const ScanRecord & r) -> json;

/// Graphviz rendering; color ids map onto a fixed 16-entry palette.
auto coloring_to_dot(const Graph & g, const EdgeColoring & c) -> std::string;

} // namespace rainbow
