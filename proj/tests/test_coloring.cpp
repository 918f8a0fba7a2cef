#include "brute_force.hpp"

#include "rainbow/coloring.hpp"
#include "rainbow/error.hpp"
#include "rainbow/oracle.hpp"

#include <doctest.h>

#include <set>

using namespace rainbow;
using namespace rainbow::testing;

namespace {

auto ear_colors(const EdgeColoring & c, const Ear & ear) -> std::vector<int>
{
    std::vector<int> out;
    for (std::size_t i = 0; i + 1 < ear.vertices.size(); ++i)
        out.push_back(*c.color_of(Edge(ear.vertices[i], ear.vertices[i + 1])));
    return out;
}

auto cycle_colors(int m) -> std::vector<int>
{
    auto c = color_cycle(m);
    std::vector<int> out;
    for (int i = 0; i < m; ++i)
        out.push_back(*c.color_of(Edge(i, (i + 1) % m)));
    return out;
}

auto rules_of(const StageColoring & stage) -> std::vector<Rule>
{
    std::vector<Rule> out;
    for (const auto & step : stage.steps)
        out.push_back(step.rule);
    return out;
}

auto graph_of(const EdgeColoring & c) -> Graph
{
    std::vector<Edge> edges;
    for (const auto & [e, color] : c.assignment())
        edges.push_back(e);
    return Graph(c.vertices().back() + 1, edges);
}

auto error_code_of(auto && fn) -> ErrorCode
{
    try {
        fn();
    }
    catch (const Error & e) {
        return e.code();
    }
    FAIL("expected an exception");
    return ErrorCode::MalformedLine;
}

const Cycle square{{0, 1, 2, 3}};

} // namespace

TEST_CASE("cycle colorings")
{
    CHECK(cycle_colors(4) == std::vector<int>{1, 2, 1, 2});
    CHECK(cycle_colors(5) == std::vector<int>{1, 2, 3, 1, 2});
    CHECK(cycle_colors(6) == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK(cycle_colors(3) == std::vector<int>{1, 2, 1});
}

TEST_CASE("cycle colorings are rainbow and noncomplete with antipodal exceptions")
{
    for (int m = 4; m <= 16; ++m) {
        auto report = is_noncomplete(make_cycle(m), color_cycle(m));
        CHECK(report.color_count == (m + 1) / 2);
        CHECK(report.noncomplete);
        if (m % 2 == 1) {
            CHECK(report.exceptional_pairs.empty());
            continue;
        }
        REQUIRE(static_cast<int>(report.exceptional_pairs.size()) == m / 2);
        for (const auto & [u, v] : report.exceptional_pairs)
            CHECK(v - u == m / 2);
    }
}

TEST_CASE("first ear of length 2 on an even cycle")
{
    Ear ear{{0, 4, 2}};
    auto stage = color_base_with_first_ear(square, ear);
    CHECK(ear_colors(stage.coloring, ear) == std::vector<int>{3, 3});
    CHECK(rules_of(stage) == std::vector<Rule>{Rule::Lemma1, Rule::BaseT1Even});
    CHECK(satisfies_stage_invariant(stage.coloring));
    CHECK(stage.order() == 5);
}

TEST_CASE("first ear of length 3 reuses one color in the middle")
{
    Ear ear{{0, 4, 5, 2}};
    auto stage = color_base_with_first_ear(square, ear);
    CHECK(ear_colors(stage.coloring, ear) == std::vector<int>{3, 1, 3});
    CHECK(rules_of(stage).back() == Rule::BaseT1Odd);
    CHECK(stage.coloring.color_count() == 3);
    CHECK(satisfies_stage_invariant(stage.coloring));
}

TEST_CASE("odd ear of length 5 mirrors two new colors")
{
    Ear ear{{0, 4, 5, 6, 7, 2}};
    auto stage = color_base_with_first_ear(square, ear);
    auto colors = ear_colors(stage.coloring, ear);
    CHECK(colors[0] == 3);
    CHECK(colors[1] == 4);
    CHECK(colors[2] <= 2);
    CHECK(colors[3] == 3);
    CHECK(colors[4] == 4);
    CHECK(stage.coloring.color_count() == 4);
    CHECK(satisfies_stage_invariant(stage.coloring));
}

TEST_CASE("ear argument errors")
{
    CHECK(error_code_of([] { color_base_with_first_ear(square, Ear{{0, 2}}); }) == ErrorCode::EarTooShort);
    auto stage = color_base_with_first_ear(square, Ear{{0, 4, 2}});
    CHECK(error_code_of([&] { extend_odd_ear(stage, Ear{{1, 5, 3}}); }) == ErrorCode::EvenEar);
    CHECK(error_code_of([&] { extend_even_ear(stage, Ear{{1, 5, 6, 3}}); }) == ErrorCode::OddEar);
    CHECK(error_code_of([&] { extend_even_ear(stage, Ear{{1, 5, 9}}); }) == ErrorCode::FeetNotInStage);
    CHECK(error_code_of([&] { color_ear_sequence(Cycle{{0, 1, 2}}, {}); }) == ErrorCode::NoEvenCycle);
}

TEST_CASE("second odd ear: case 1 keeps the invariant")
{
    auto stage = color_base_with_first_ear(square, Ear{{0, 4, 2}});
    stage = extend_odd_ear(stage, Ear{{1, 5, 6, 3}});
    CHECK(rules_of(stage).back() == Rule::Case1);
    CHECK(satisfies_stage_invariant(stage.coloring));
    CHECK(stage.order() == 7);
}

TEST_CASE("even ear on an even-order stage: case 2")
{
    auto stage = color_base_with_first_ear(square, Ear{{0, 4, 5, 2}});
    REQUIRE(stage.order() == 6);
    Ear ear{{1, 6, 7, 8, 3}};
    stage = extend_even_ear(stage, ear);
    CHECK(rules_of(stage).back() == Rule::Case2);
    auto colors = ear_colors(stage.coloring, ear);
    CHECK(colors == std::vector<int>{4, 5, 4, 5});
    CHECK(satisfies_stage_invariant(stage.coloring));
}

TEST_CASE("both feet inside the previous ear")
{
    Cycle base{{0, 1, 2, 3, 4, 5}};
    std::vector<Ear> ears{Ear{{0, 6, 7, 8, 3}}, Ear{{6, 9, 8}}};
    auto stage = color_ear_sequence(base, ears);
    CHECK(rules_of(stage) == std::vector<Rule>{Rule::Lemma1, Rule::BaseT1Even, Rule::Sub33});
    CHECK(stage.order() == 10);
    CHECK(satisfies_stage_invariant(stage.coloring));
    CHECK(stage.coloring.color_count() <= 5);
}

TEST_CASE("one foot inside the previous ear")
{
    Cycle base{{0, 1, 2, 3, 4, 5}};
    std::vector<Ear> ears{Ear{{0, 6, 7, 8, 3}}, Ear{{7, 9, 1}}};
    auto stage = color_ear_sequence(base, ears);
    CHECK(rules_of(stage).back() == Rule::Sub32);
    CHECK(satisfies_stage_invariant(stage.coloring));
}

TEST_CASE("disjoint even ear after an even ear")
{
    Cycle base{{0, 1, 2, 3, 4, 5}};
    std::vector<Ear> ears{Ear{{0, 6, 7, 8, 3}}, Ear{{1, 9, 4}}};
    auto stage = color_ear_sequence(base, ears);
    auto rules = rules_of(stage);
    CHECK(rules.back() == Rule::Sub31);
    CHECK(satisfies_stage_invariant(stage.coloring));
    CHECK(stage.coloring.edge_count() == 6 + 4 + 2);
}

TEST_CASE("disjoint even ear after an odd ear swaps the two")
{
    std::vector<Ear> ears{Ear{{0, 4, 2}}, Ear{{1, 5, 6, 3}}, Ear{{0, 7, 2}}};
    auto stage = color_ear_sequence(square, ears);
    auto rules = rules_of(stage);
    CHECK(rules.back() == Rule::Sub31);
    CHECK(stage.steps.back().ear.length() % 2 == 1);
    CHECK(satisfies_stage_invariant(stage.coloring));
}

TEST_CASE("two short ears share one new color")
{
    auto stage = color_ear_sequence(square, {});
    std::vector<Ear> shorts{Ear{{0, 4, 2}}, Ear{{1, 5, 3}}};
    stage = color_short_ears(stage, shorts);
    CHECK(stage.coloring.color_count() == 3);
    CHECK(rules_of(stage).back() == Rule::Lemma3Few);
    auto g = graph_of(stage.coloring);
    CHECK(bf_rainbow_connected(g, stage.coloring));
}

TEST_CASE("three short ears absorb the first one as an ordinary ear")
{
    auto stage = color_ear_sequence(square, {});
    std::vector<Ear> shorts{Ear{{0, 4, 2}}, Ear{{1, 5, 3}}, Ear{{0, 6, 2}}};
    stage = color_short_ears(stage, shorts);
    CHECK(stage.coloring.color_count() <= 4);
    CHECK(is_rainbow_connected(graph_of(stage.coloring), stage.coloring).rainbow_connected);
}

TEST_CASE("four or more short ears use two new colors")
{
    auto stage = color_ear_sequence(square, {});
    std::vector<Ear> shorts{Ear{{0, 4, 2}}, Ear{{0, 5, 2}}, Ear{{1, 6, 3}}, Ear{{1, 7, 3}}};
    stage = color_short_ears(stage, shorts);
    CHECK(stage.coloring.color_count() == 4);
    CHECK(rules_of(stage).back() == Rule::Lemma3Many);
    CHECK(is_rainbow_connected(graph_of(stage.coloring), stage.coloring).rainbow_connected);
}

TEST_CASE("short ear errors")
{
    auto stage = color_ear_sequence(square, {});
    std::vector<Ear> one{Ear{{0, 4, 2}}};
    CHECK(error_code_of([&] { color_short_ears(stage, one); }) == ErrorCode::TooFewShortEars);
    std::vector<Ear> long_ear{Ear{{0, 4, 2}}, Ear{{1, 5, 6, 3}}};
    CHECK(error_code_of([&] { color_short_ears(stage, long_ear); }) == ErrorCode::EarTooShort);
}

TEST_CASE("chords take color 1")
{
    auto stage = color_ear_sequence(square, {});
    std::vector<Ear> chords{Ear{{0, 2}}, Ear{{1, 3}}};
    stage = color_chords(stage, chords);
    CHECK(*stage.coloring.color_of(Edge(0, 2)) == 1);
    CHECK(*stage.coloring.color_of(Edge(1, 3)) == 1);
    CHECK(is_rainbow_connected(make_complete(4), stage.coloring).rainbow_connected);

    std::vector<Ear> existing{Ear{{0, 1}}};
    CHECK(error_code_of([&] { color_chords(stage, existing); }) == ErrorCode::NotAChord);
    std::vector<Ear> outside{Ear{{0, 9}}};
    CHECK(error_code_of([&] { color_chords(stage, outside); }) == ErrorCode::NotAChord);
}

TEST_CASE("construction examples")
{
    auto c6 = construct_coloring(make_cycle(6));
    CHECK(c6.coloring.color_count() == 3);
    CHECK(c6.trace.hamiltonian_route);

    ConstructOptions ears_only;
    ears_only.try_hamiltonian = false;
    auto theta = construct_coloring(theta_graph(), ears_only);
    CHECK(theta.coloring.color_count() == 3);
    CHECK_FALSE(theta.trace.hamiltonian_route);
    REQUIRE(theta.trace.decomposition);
    CHECK(theta.trace.steps.size() == 2);

    CHECK(error_code_of([] { construct_coloring(make_path(3)); }) == ErrorCode::NotTwoConnected);
}

TEST_CASE("construction is deterministic")
{
    auto corpus = build_corpus(CorpusMode::Random, 11, 2, 20, 77);
    ConstructOptions ears_only;
    ears_only.try_hamiltonian = false;
    for (const auto & entry : corpus.graphs) {
        auto a = construct_coloring(entry.graph, ears_only);
        auto b = construct_coloring(entry.graph, ears_only);
        CHECK(a.coloring == b.coloring);
        CHECK(a.trace.steps.size() == b.trace.steps.size());
    }
}

TEST_CASE("ear route: bound, rainbow connectivity and stage invariants on random graphs")
{
    ConstructOptions ears_only;
    ears_only.try_hamiltonian = false;
    std::set<Rule> fired;
    int built = 0;
    for (int n = 5; n <= 14; ++n) {
        auto corpus = build_corpus(CorpusMode::Random, n, 2, n <= 5 ? 6 : 150, 4000 + n);
        for (const auto & entry : corpus.graphs) {
            const auto & g = entry.graph;
            if (g.size() == g.order() && g.order() % 2 == 1)
                continue;
            auto result = construct_coloring(g, ears_only);
            ++built;
            REQUIRE(result.coloring.color_count() <= (n + 1) / 2);
            REQUIRE(result.report.rainbow_connected);
            REQUIRE(result.coloring.contiguous());
            if (n <= 7)
                CHECK(bf_rainbow_connected(g, result.coloring));
            for (const auto & step : result.trace.steps) {
                fired.insert(step.rule);
                if (! step.stage_invariant)
                    continue;
                auto audit = audit_coloring(step.snapshot);
                CHECK(audit.rainbow_connected);
                CHECK(audit.noncomplete);
                if (step.stage_order % 2 == 1)
                    CHECK(audit.exceptional_pairs.empty());
            }
        }
    }
    CHECK(built > 1000);
    for (auto rule : {Rule::Lemma1, Rule::BaseT1Even, Rule::BaseT1Odd, Rule::Case1, Rule::Case2, Rule::Sub31,
                 Rule::Sub32, Rule::Sub33, Rule::Lemma3Few, Rule::Lemma3Many, Rule::Chords}) {
        CAPTURE(to_string(rule));
        CHECK(fired.count(rule) == 1);
    }
}

TEST_CASE("both routes agree with the bound on the enumerated corpus")
{
    for (int n = 3; n <= 6; ++n)
        for (const auto & entry : build_corpus(CorpusMode::Enumerate, n, 2, 0, 0).graphs) {
            auto result = construct_coloring(entry.graph);
            CHECK(result.coloring.color_count() <= (n + 1) / 2);
            CHECK(bf_rainbow_connected(entry.graph, result.coloring));
        }
}
