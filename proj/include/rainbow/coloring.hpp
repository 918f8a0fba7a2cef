#pragma once

#include "rainbow/decomposition.hpp"
#include "rainbow/edge_coloring.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verification.hpp"

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rainbow {

enum class Rule {
    Lemma1,
    BaseT1Even,
    BaseT1Odd,
    Case1,
    Case2,
    Sub31,
    Sub32,
    Sub33,
    Lemma3Few,
    Lemma3Many,
    Chords,
};

auto to_string(Rule rule) -> std::string_view;

struct TraceStep {
    Rule rule = Rule::Lemma1;
    Ear ear;                 // for the base step: the closed base cycle
    int source_index = -1;   // 0 = base, i = i-th ear of the decomposition, -1 = none
    std::vector<int> new_colors;
    std::vector<int> reused_colors;
    int stage_order = 0;     // vertices colored after this step
    bool stage_invariant = false; // must be noncomplete, and fully noncomplete when stage_order is odd
    EdgeColoring snapshot;   // coloring after this step
};

struct ConstructionTrace {
    bool hamiltonian_route = false;
    std::optional<EarDecomposition> decomposition;
    std::vector<TraceStep> steps;
};

/// A partially built coloring: the colored stage, and one trace step per
/// colored piece (base first) in build order.
struct StageColoring {
    EdgeColoring coloring;
    std::vector<TraceStep> steps;

    auto order() const -> int { return static_cast<int>(coloring.vertices().size()); }
};

struct ConstructionResult {
    EdgeColoring coloring;
    ConstructionTrace trace;
    RainbowReport report;
};

struct ConstructOptions {
    bool try_hamiltonian = true;
    SearchBudget hamiltonian_budget{2'000'000};
    SearchBudget ear_budget{};
};

/// Colors edge i = v_i v_{i+1} (1-based) with i for i <= ceil(m/2) and
/// i - ceil(m/2) afterwards.
auto color_cycle(const Cycle & cycle) -> EdgeColoring;
/// color_cycle on the cycle 0, 1, ..., m-1.
auto color_cycle(int m) -> EdgeColoring;

/// Does the stage coloring pass the induction invariant: rainbow connected,
/// noncomplete, no exceptional pair when the stage order is odd, and at most
/// ceil(order/2) colors.
auto satisfies_stage_invariant(const EdgeColoring & c) -> bool;

/// Base even cycle with its cycle coloring, then the first ear.
/// Throws EarTooShort, RepairExhausted.
auto color_base_with_first_ear(const Cycle & base, const Ear & ear) -> StageColoring;

/// Odd ear of length 2r+1: r new colors mirrored around a reused middle
/// color, chosen as the smallest color that keeps the stage invariant.
/// Throws EvenEar, EarTooShort, RepairExhausted.
auto extend_odd_ear(StageColoring stage, const Ear & ear) -> StageColoring;

/// Even ear. An even-order stage takes the ear with its r new colors
/// repeated. An odd-order stage pairs the ear with the previously built one
/// (stage.steps.back()) and may recolor or reorder it, depending on which
/// feet of the new ear are internal to the previous ear.
/// Throws OddEar, EarTooShort, RepairExhausted.
auto extend_even_ear(StageColoring stage, const Ear & ear) -> StageColoring;

/// Base cycle plus ears with at most one ear of length 2, built by the
/// inductive case analysis. `first_index` labels ears in the trace.
auto color_ear_sequence(const Cycle & base, std::span<const Ear> ears, int first_index = 1) -> StageColoring;

/// Batch of length-2 ears whose feet are already colored. Two or three ears
/// use one new color plus a reused one (the first of three is expected to be
/// absorbed by the caller); four or more use two new colors.
/// Throws TooFewShortEars, FeetNotInStage, RepairExhausted.
auto color_short_ears(StageColoring stage, std::span<const Ear> ears, int first_index = -1) -> StageColoring;

/// Every chord gets color 1. Throws NotAChord.
auto color_chords(StageColoring stage, std::span<const Ear> chords, int first_index = -1) -> StageColoring;

/// Full construction: Hamiltonian cycle coloring when one is found,
/// otherwise the ear-decomposition route. The result is verified; anything
/// short of a rainbow coloring with <= ceil(n/2) colors raises
/// ConstructionUnverified. Throws NotTwoConnected.
auto construct_coloring(const Graph & g, const ConstructOptions & options = {}) -> ConstructionResult;

} // namespace rainbow
