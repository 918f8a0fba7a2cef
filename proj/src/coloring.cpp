#include "rainbow/coloring.hpp"

#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rainbow {

auto to_string(Rule rule) -> std::string_view
{
    switch (rule) {
        case Rule::Lemma1: return "Lemma1";
        case Rule::BaseT1Even: return "Base-t1-even";
        case Rule::BaseT1Odd: return "Base-t1-odd";
        case Rule::Case1: return "Case1";
        case Rule::Case2: return "Case2";
        case Rule::Sub31: return "Sub3.1";
        case Rule::Sub32: return "Sub3.2";
        case Rule::Sub33: return "Sub3.3";
        case Rule::Lemma3Few: return "Lemma3-few";
        case Rule::Lemma3Many: return "Lemma3-many";
        case Rule::Chords: return "Chords";
    }
    return "Unknown";
}

namespace {

    auto ceil_half(int n) -> int { return (n + 1) / 2; }

    void paint(EdgeColoring & c, const Ear & ear, const std::vector<int> & colors)
    {
        for (std::size_t i = 0; i + 1 < ear.vertices.size(); ++i)
            c.set(Edge(ear.vertices[i], ear.vertices[i + 1]), colors[i]);
    }

    auto range(int from, int to) -> std::vector<int>
    {
        std::vector<int> out;
        for (int i = from; i <= to; ++i)
            out.push_back(i);
        return out;
    }

    auto edge_color(const EdgeColoring & c, const Ear & ear, int edge_number) -> int
    {
        return *c.color_of(Edge(ear.vertices[edge_number - 1], ear.vertices[edge_number]));
    }

    /// Renumbers colors to 1..K keeping their relative order.
    auto compact(const EdgeColoring & c) -> EdgeColoring
    {
        std::set<int> used;
        for (const auto & [e, color] : c.assignment())
            used.insert(color);
        std::map<int, int> renumber;
        int next = 1;
        for (auto color : used)
            renumber[color] = next++;
        EdgeColoring out;
        for (const auto & [e, color] : c.assignment())
            out.set(e, renumber[color]);
        return out;
    }

    void push_step(StageColoring & stage, Rule rule, const Ear & ear, int source, std::vector<int> new_colors,
            std::vector<int> reused, bool invariant)
    {
        TraceStep step;
        step.rule = rule;
        step.ear = ear;
        step.source_index = source;
        step.new_colors = std::move(new_colors);
        step.reused_colors = std::move(reused);
        step.stage_order = stage.order();
        step.stage_invariant = invariant;
        step.snapshot = stage.coloring;
        stage.steps.push_back(std::move(step));
    }

    /// Drops the most recently built ear and its trace step.
    auto pop_last(StageColoring stage) -> StageColoring
    {
        const auto & ear = stage.steps.back().ear;
        EdgeColoring rest;
        std::set<Edge> removed;
        for (std::size_t i = 0; i + 1 < ear.vertices.size(); ++i)
            removed.emplace(ear.vertices[i], ear.vertices[i + 1]);
        for (const auto & [e, color] : stage.coloring.assignment())
            if (! removed.count(e))
                rest.set(e, color);
        stage.coloring = compact(rest);
        stage.steps.pop_back();
        return stage;
    }

    auto stage_has(const EdgeColoring & c, Vertex v) -> bool
    {
        auto vs = c.vertices();
        return std::binary_search(vs.begin(), vs.end(), v);
    }

    [[noreturn]] void repair_exhausted(std::string_view what, const Ear & ear)
    {
        std::string path;
        for (auto v : ear.vertices)
            path += (path.empty() ? "" : "-") + std::to_string(v);
        throw Error(ErrorCode::RepairExhausted, std::string(what) + ": no admissible color choice for ear " + path);
    }

    // Odd ear x_1..x_r, x, x_1..x_r with x reused.
    auto odd_ear(StageColoring stage, const Ear & ear, int source, std::optional<Rule> rule_override) -> StageColoring
    {
        if (ear.length() % 2 == 0)
            throw Error(ErrorCode::EvenEar, "ear of length " + std::to_string(ear.length()));
        if (ear.length() < 3)
            throw Error(ErrorCode::EarTooShort, "odd ear needs length >= 3");
        const int r = (ear.length() - 1) / 2;
        const int k = stage.coloring.color_count();
        const auto rule = rule_override.value_or(stage.steps.size() <= 1 ? Rule::BaseT1Odd : Rule::Case1);

        for (int x = 1; x <= k; ++x) {
            std::vector<int> colors = range(k + 1, k + r);
            colors.push_back(x);
            for (int i = 1; i <= r; ++i)
                colors.push_back(k + i);
            auto candidate = stage.coloring;
            paint(candidate, ear, colors);
            if (! satisfies_stage_invariant(candidate))
                continue;
            stage.coloring = std::move(candidate);
            push_step(stage, rule, ear, source, range(k + 1, k + r), {x}, true);
            return stage;
        }
        repair_exhausted(to_string(rule), ear);
    }

    // Even ear on an even-order stage: x_1..x_r repeated.
    auto even_ear_on_even_stage(StageColoring stage, const Ear & ear, int source) -> StageColoring
    {
        const int r = ear.length() / 2;
        const int k = stage.coloring.color_count();
        const auto rule = stage.steps.size() <= 1 ? Rule::BaseT1Even : Rule::Case2;
        auto colors = range(k + 1, k + r);
        auto repeat = colors;
        colors.insert(colors.end(), repeat.begin(), repeat.end());
        auto candidate = stage.coloring;
        paint(candidate, ear, colors);
        if (! satisfies_stage_invariant(candidate))
            repair_exhausted(to_string(rule), ear);
        stage.coloring = std::move(candidate);
        push_step(stage, rule, ear, source, range(k + 1, k + r), {}, true);
        return stage;
    }

    // Previous ear even, new ear disjoint from its interior: color both
    // together on top of the stage before the previous ear, with r + s - 1
    // new colors.
    auto paired_even_ears(StageColoring base, const Ear & prev, int prev_source, const Ear & ear, int source)
            -> StageColoring
    {
        const int k = base.coloring.color_count();
        const int r = prev.length() / 2;
        const int s = ear.length() / 2;

        for (const auto & q : {prev, prev.reversed()}) {
            // Previous ear: X_1..X_r twice.
            auto x_colors = range(k + 1, k + r);
            auto prev_colors = x_colors;
            prev_colors.insert(prev_colors.end(), x_colors.begin(), x_colors.end());
            StageColoring mid = base;
            paint(mid.coloring, q, prev_colors);
            if (! satisfies_stage_invariant(mid.coloring))
                continue;
            push_step(mid, Rule::Sub31, q, prev_source, x_colors, {}, true);

            const int x1 = k + 1;
            const auto y_colors = range(k + r + 1, k + r + s - 1);
            for (const auto & p : {ear, ear.reversed()}) {
                for (int x = 1; x <= k; ++x) {
                    std::vector<int> colors = y_colors;
                    colors.push_back(x);
                    colors.push_back(x1);
                    colors.insert(colors.end(), y_colors.begin(), y_colors.end());
                    auto candidate = mid.coloring;
                    paint(candidate, p, colors);
                    if (! satisfies_stage_invariant(candidate))
                        continue;
                    StageColoring out = mid;
                    out.coloring = std::move(candidate);
                    push_step(out, Rule::Sub31, p, source, y_colors, {x, x1}, true);
                    return out;
                }
            }
        }
        repair_exhausted("Sub3.1", ear);
    }

    /// Index of v on the ear, or -1.
    auto position_on(const Ear & ear, Vertex v) -> int
    {
        auto it = std::find(ear.vertices.begin(), ear.vertices.end(), v);
        return it == ear.vertices.end() ? -1 : static_cast<int>(it - ear.vertices.begin());
    }

    // New ear with exactly one foot b inside the previous ear.
    auto one_foot_inside(StageColoring stage, const Ear & prev, const Ear & ear, Vertex inner_foot, int source)
            -> StageColoring
    {
        const int k = stage.coloring.color_count();
        const int s = ear.length() / 2;
        const Ear p = ear.foot_b() == inner_foot ? ear : ear.reversed();
        const auto y_colors = range(k + 1, k + s - 1);

        // Orient the previous ear so that b lies in its first half.
        std::vector<Ear> orientations;
        for (const auto & q : {prev, prev.reversed()})
            if (position_on(q, inner_foot) <= q.length() / 2)
                orientations.push_back(q);

        for (const auto & q : orientations) {
            const int x1 = edge_color(stage.coloring, q, 1);
            for (int y = 1; y <= k; ++y) {
                std::vector<int> colors = y_colors;
                colors.push_back(x1);
                colors.push_back(y);
                colors.insert(colors.end(), y_colors.begin(), y_colors.end());
                auto candidate = stage.coloring;
                paint(candidate, p, colors);
                if (! satisfies_stage_invariant(candidate))
                    continue;
                stage.coloring = std::move(candidate);
                push_step(stage, Rule::Sub32, p, source, y_colors, {x1, y}, true);
                return stage;
            }
        }
        repair_exhausted("Sub3.2", ear);
    }

    // New ear with both feet inside the previous ear: as above, but the edge
    // before the middle takes one of the previous ear's first-half colors.
    auto both_feet_inside(StageColoring stage, const Ear & prev, const Ear & ear, int source) -> StageColoring
    {
        const int k = stage.coloring.color_count();
        const int s = ear.length() / 2;
        const int half = prev.length() / 2;
        const auto y_colors = range(k + 1, k + s - 1);

        for (const auto & q : {prev, prev.reversed()}) {
            const Ear p = position_on(q, ear.foot_a()) < position_on(q, ear.foot_b()) ? ear : ear.reversed();
            for (int j = 1; j <= half; ++j) {
                const int xj = edge_color(stage.coloring, q, j);
                for (int y = 1; y <= k; ++y) {
                    std::vector<int> colors = y_colors;
                    colors.push_back(xj);
                    colors.push_back(y);
                    colors.insert(colors.end(), y_colors.begin(), y_colors.end());
                    auto candidate = stage.coloring;
                    paint(candidate, p, colors);
                    if (! satisfies_stage_invariant(candidate))
                        continue;
                    stage.coloring = std::move(candidate);
                    push_step(stage, Rule::Sub33, p, source, y_colors, {xj, y}, true);
                    return stage;
                }
            }
        }
        repair_exhausted("Sub3.3", ear);
    }

    auto even_ear(StageColoring stage, const Ear & ear, int source) -> StageColoring;

    auto any_ear(StageColoring stage, const Ear & ear, int source) -> StageColoring
    {
        if (ear.length() % 2 == 1)
            return odd_ear(std::move(stage), ear, source, std::nullopt);
        return even_ear(std::move(stage), ear, source);
    }

    auto even_ear(StageColoring stage, const Ear & ear, int source) -> StageColoring
    {
        if (ear.length() % 2 == 1)
            throw Error(ErrorCode::OddEar, "ear of length " + std::to_string(ear.length()));
        if (ear.length() < 2)
            throw Error(ErrorCode::EarTooShort, "empty ear");
        if (stage.order() % 2 == 0)
            return even_ear_on_even_stage(std::move(stage), ear, source);

        // Odd-order stage: pair with the previously built ear.
        const auto prev = stage.steps.back().ear;
        const int prev_source = stage.steps.back().source_index;
        const auto inner = prev.internal();
        auto inside = [&](Vertex v) { return std::find(inner.begin(), inner.end(), v) != inner.end(); };
        const bool a_in = inside(ear.foot_a());
        const bool b_in = inside(ear.foot_b());

        if (a_in && b_in)
            return both_feet_inside(std::move(stage), prev, ear, source);
        if (a_in || b_in)
            return one_foot_inside(std::move(stage), prev, ear, a_in ? ear.foot_a() : ear.foot_b(), source);

        auto before = pop_last(std::move(stage));
        if (prev.length() % 2 == 1) {
            // Build the new ear first, then the odd previous ear on top.
            auto reordered = any_ear(std::move(before), ear, source);
            return odd_ear(std::move(reordered), prev, prev_source, Rule::Sub31);
        }
        return paired_even_ears(std::move(before), prev, prev_source, ear, source);
    }

    auto check_ear_attaches(const StageColoring & stage, const Ear & ear) -> void
    {
        if (ear.length() < 1 || ear.foot_a() == ear.foot_b())
            throw Error(ErrorCode::EarTooShort, "ear needs two distinct feet");
        if (! stage_has(stage.coloring, ear.foot_a()) || ! stage_has(stage.coloring, ear.foot_b()))
            throw Error(ErrorCode::FeetNotInStage, "ear feet must already be colored");
    }

    auto base_stage(const Cycle & base, Rule rule) -> StageColoring
    {
        StageColoring stage;
        stage.coloring = color_cycle(base);
        auto closed = base.vertices;
        closed.push_back(base.vertices.front());
        push_step(stage, rule, Ear{closed}, 0, range(1, ceil_half(base.length())), {}, true);
        return stage;
    }

} // namespace

auto color_cycle(const Cycle & cycle) -> EdgeColoring
{
    const int m = cycle.length();
    const int half = ceil_half(m);
    EdgeColoring c;
    for (int i = 1; i <= m; ++i)
        c.set(Edge(cycle.vertices[i - 1], cycle.vertices[i % m]), i <= half ? i : i - half);
    return c;
}

auto color_cycle(int m) -> EdgeColoring
{
    Cycle c;
    for (int i = 0; i < m; ++i)
        c.vertices.push_back(i);
    return color_cycle(c);
}

auto satisfies_stage_invariant(const EdgeColoring & c) -> bool
{
    const int order = static_cast<int>(c.vertices().size());
    if (c.color_count() > ceil_half(order))
        return false;
    auto report = audit_coloring(c);
    if (! report.rainbow_connected || ! report.noncomplete)
        return false;
    return order % 2 == 0 || report.exceptional_pairs.empty();
}

auto color_base_with_first_ear(const Cycle & base, const Ear & ear) -> StageColoring
{
    if (ear.length() < 2)
        throw Error(ErrorCode::EarTooShort, "first ear needs length >= 2");
    auto stage = base_stage(base, Rule::Lemma1);
    check_ear_attaches(stage, ear);
    return any_ear(std::move(stage), ear, 1);
}

auto extend_odd_ear(StageColoring stage, const Ear & ear) -> StageColoring
{
    if (ear.length() % 2 == 0)
        throw Error(ErrorCode::EvenEar, "ear of length " + std::to_string(ear.length()));
    check_ear_attaches(stage, ear);
    return odd_ear(std::move(stage), ear, -1, std::nullopt);
}

auto extend_even_ear(StageColoring stage, const Ear & ear) -> StageColoring
{
    if (ear.length() % 2 == 1)
        throw Error(ErrorCode::OddEar, "ear of length " + std::to_string(ear.length()));
    check_ear_attaches(stage, ear);
    return even_ear(std::move(stage), ear, -1);
}

auto color_ear_sequence(const Cycle & base, std::span<const Ear> ears, int first_index) -> StageColoring
{
    if (base.length() % 2 != 0 || base.length() < 4)
        throw Error(ErrorCode::NoEvenCycle, "the base must be an even cycle of length >= 4");
    auto stage = base_stage(base, Rule::Lemma1);
    for (std::size_t i = 0; i < ears.size(); ++i) {
        check_ear_attaches(stage, ears[i]);
        if (ears[i].length() < 2)
            throw Error(ErrorCode::EarTooShort, "chords are colored separately");
        stage = any_ear(std::move(stage), ears[i], first_index + static_cast<int>(i));
    }
    return stage;
}

auto color_short_ears(StageColoring stage, std::span<const Ear> ears, int first_index) -> StageColoring
{
    if (ears.size() < 2)
        throw Error(ErrorCode::TooFewShortEars, "need at least two ears of length 2");
    for (const auto & ear : ears) {
        if (ear.length() != 2)
            throw Error(ErrorCode::EarTooShort, "short ears must have length 2");
        check_ear_attaches(stage, ear);
    }
    auto index = [&](std::size_t i) { return first_index < 0 ? -1 : first_index + static_cast<int>(i); };

    if (ears.size() >= 4) {
        const int k = stage.coloring.color_count();
        for (std::size_t i = 0; i < ears.size(); ++i) {
            paint(stage.coloring, ears[i], {k + 1, k + 2});
            push_step(stage, Rule::Lemma3Many, ears[i], index(i), i == 0 ? std::vector<int>{k + 1, k + 2} : std::vector<int>{},
                    {}, false);
        }
        if (! audit_coloring(stage.coloring).rainbow_connected)
            repair_exhausted("Lemma3-many", ears.back());
        return stage;
    }

    std::size_t first = 0;
    if (ears.size() == 3) {
        stage = even_ear(std::move(stage), ears[0], index(0));
        first = 1;
    }
    const Ear & prev = ears[first];
    const Ear & last = ears[first + 1];
    for (auto v : {last.foot_a(), last.foot_b()})
        if (std::find(prev.vertices.begin() + 1, prev.vertices.end() - 1, v) != prev.vertices.end() - 1)
            throw Error(ErrorCode::FeetNotInStage, "short ears must attach to the earlier stage");

    const int k = stage.coloring.color_count();
    const int x1 = k + 1;
    const int target_order = stage.order() + 2;
    for (const auto & p : {last, last.reversed()}) {
        for (int x = 1; x <= k; ++x) {
            auto candidate = stage.coloring;
            paint(candidate, prev, {x1, x1});
            paint(candidate, p, {x, x1});
            if (candidate.color_count() > ceil_half(target_order) || ! audit_coloring(candidate).rainbow_connected)
                continue;
            StageColoring mid = stage;
            paint(mid.coloring, prev, {x1, x1});
            push_step(mid, Rule::Lemma3Few, prev, index(first), {x1}, {}, false);
            mid.coloring = std::move(candidate);
            push_step(mid, Rule::Lemma3Few, p, index(first + 1), {}, {x, x1}, false);
            return mid;
        }
    }
    repair_exhausted("Lemma3-few", last);
}

auto color_chords(StageColoring stage, std::span<const Ear> chords, int first_index) -> StageColoring
{
    for (std::size_t i = 0; i < chords.size(); ++i) {
        const auto & chord = chords[i];
        if (chord.length() != 1 || ! stage_has(stage.coloring, chord.foot_a())
                || ! stage_has(stage.coloring, chord.foot_b())
                || stage.coloring.contains(Edge(chord.foot_a(), chord.foot_b())))
            throw Error(ErrorCode::NotAChord, "chord endpoints must both be colored already");
        stage.coloring.set(Edge(chord.foot_a(), chord.foot_b()), 1);
        push_step(stage, Rule::Chords, chord, first_index < 0 ? -1 : first_index + static_cast<int>(i), {}, {1}, false);
    }
    return stage;
}

auto construct_coloring(const Graph & g, const ConstructOptions & options) -> ConstructionResult
{
    if (! is_two_connected(g))
        throw Error(ErrorCode::NotTwoConnected, "construct_coloring requires a 2-connected graph");

    ConstructionResult result;
    std::optional<Cycle> hamiltonian;
    if (options.try_hamiltonian) {
        try {
            hamiltonian = find_hamiltonian_cycle(g, options.hamiltonian_budget);
        }
        catch (const Error & e) {
            if (e.code() != ErrorCode::BudgetExceeded)
                throw;
        }
    }

    StageColoring stage;
    try {
        if (hamiltonian) {
            result.trace.hamiltonian_route = true;
            stage = base_stage(*hamiltonian, Rule::Lemma1);
            std::vector<Ear> chords;
            for (const auto & e : g.edges())
                if (! stage.coloring.contains(e))
                    chords.push_back(Ear{{e.u, e.v}});
            stage = color_chords(std::move(stage), chords);
        }
        else {
            auto d = ear_decomposition(g, options.ear_budget);
            const std::span<const Ear> ears(d.ears);
            int short_count = 0;
            for (int i = d.t - 1; i >= 0 && ears[i].length() == 2; --i)
                ++short_count;

            if (short_count <= 1)
                stage = color_ear_sequence(d.base, ears.subspan(0, d.t));
            else {
                const int lead = d.t - short_count;
                stage = color_ear_sequence(d.base, ears.subspan(0, lead));
                stage = color_short_ears(std::move(stage), ears.subspan(lead, short_count), lead + 1);
            }
            stage = color_chords(std::move(stage), ears.subspan(d.t), d.t + 1);
            result.trace.decomposition = std::move(d);
        }
    }
    catch (const Error & e) {
        if (e.code() == ErrorCode::RepairExhausted)
            throw Error(ErrorCode::ConstructionUnverified, e.what());
        throw;
    }

    result.coloring = std::move(stage.coloring);
    result.trace.steps = std::move(stage.steps);
    result.report = is_rainbow_connected(g, result.coloring);

    const int k = result.coloring.color_count();
    if (result.coloring.edge_count() != g.size() || ! result.coloring.contiguous())
        throw Error(ErrorCode::ConstructionUnverified, "coloring does not cover the graph with colors 1..K");
    if (k > ceil_half(g.order()))
        throw Error(ErrorCode::ConstructionUnverified,
                "used " + std::to_string(k) + " colors, bound is " + std::to_string(ceil_half(g.order())));
    if (! result.report.rainbow_connected) {
        auto [u, v] = result.report.failing_pairs.front();
        throw Error(ErrorCode::ConstructionUnverified,
                "no rainbow path between " + std::to_string(u) + " and " + std::to_string(v));
    }
    return result;
}

} // namespace rainbow
