#pragma once

#include "rainbow/decomposition.hpp"
#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

/// Exact backtracking from vertex 0 with degree pruning. The returned cycle is
/// normalized. Throws BudgetExceeded.
auto find_hamiltonian_cycle(const Graph & g, SearchBudget budget = {}) -> std::optional<Cycle>;

struct RcStats {
    std::int64_t nodes = 0;
    int lower_bound = 0;
};

struct RcResult {
    int rc = 0;
    EdgeColoring witness;
    RcStats explored;
};

/// Exact rainbow connection number by iterative deepening from the diameter.
/// `max_colors` < 0 means "up to the edge count". Throws Disconnected,
/// MaxColorsExceeded (no coloring with <= max_colors colors) and
/// BudgetExceeded; a result is never guessed.
auto exact_rc(const Graph & g, int max_colors = -1, SearchBudget budget = {}) -> RcResult;

/// Is there a rainbow-connecting coloring with at most k colors? The witness,
/// when present, is the first feasible assignment in search order.
auto rainbow_colorable(const Graph & g, int k, SearchBudget budget, RcStats & stats) -> std::optional<EdgeColoring>;

enum class CorpusMode { Enumerate, Random };

struct CorpusEntry {
    Graph graph;
    std::string provenance; // "enumerated" or "generated(<seed>)"
};

struct Corpus {
    std::vector<CorpusEntry> graphs;
    std::vector<std::string> keys; // dedup keys, parallel to graphs
};

/// Isomorphism-invariant key: minimum upper-triangle adjacency bitstring over
/// the vertex orders compatible with a degree-based refinement. Meant for
/// n <= 7.
auto canonical_key(const Graph & g) -> std::string;

/// Relabelling of g that realizes canonical_key.
auto canonical_form(const Graph & g) -> Graph;

/// Enumerate: every graph on n <= 7 vertices with the requested vertex
/// connectivity, one representative (canonical labelling) per isomorphism
/// class; `count` and `seed` are ignored.
/// Random: `count` 2-connected graphs on n vertices grown from a base cycle
/// by random ears and chords; connectivity must be 1 or 2.
/// Throws InfeasibleParameters.
auto build_corpus(CorpusMode mode, int n, int connectivity, int count, std::uint64_t seed) -> Corpus;

struct ScanRecord {
    Graph graph;
    std::optional<int> rc; // empty when the search budget ran out
    int bound = 0;         // ceil(n / k)
    bool ok = false;
};

struct ScanReport {
    int k = 0;
    std::vector<ScanRecord> records;
    int violations = 0;
    int unknowns = 0;
    std::optional<int> max_excess; // max of rc - bound over decided graphs
};

/// Measures rc against ceil(n/k) for each corpus member with n <= n_max.
/// Members must be k-connected (InfeasibleParameters otherwise).
auto conjecture_scan(int k, int n_max, const Corpus & corpus, SearchBudget budget = {}) -> ScanReport;

} // namespace rainbow
