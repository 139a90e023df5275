#include <doctest.h>

#include "morse/engine.hpp"
#include "morse/generators.hpp"
#include "morse/random.hpp"
#include "morse/topology.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

// Drives a RunState to the end with lowest-index choices, starting from
// `critical` already counted.
MorseVector finish(RunState& s, std::vector<std::size_t> critical) {
    while (!s.empty()) {
        if (s.level_exhausted()) {
            s.descend_level();
        } else if (!s.free_faces().empty()) {
            s.remove_free_pair(s.free_faces().at(0));
        } else {
            ++critical[static_cast<std::size_t>(s.level())];
            s.remove_critical(s.top_faces().at(0));
        }
    }
    return MorseVector(critical);
}

}  // namespace

TEST_CASE("selection names") {
    CHECK(to_string(Selection::UniformRandom) == "random");
    CHECK(parse_selection("revlex") == Selection::ReverseLexicographic);
    CHECK_FALSE(parse_selection("greedy").has_value());
}

TEST_CASE("A_7 outcomes depend on the first critical edge") {
    const auto c = graph_A(1);
    const HasseDiagram h(c);
    for (std::uint32_t e = 0; e < c.num_faces(1); ++e) {
        RunState s(h);
        s.remove_critical(e);
        const auto v = finish(s, {0, 1});
        const auto f = c.face(1, e);
        const bool bridge = f[0] == 3 && f[1] == 4;
        CHECK(v == (bridge ? MorseVector{2, 3} : MorseVector{1, 2}));
    }
}

TEST_CASE("single vertex") {
    const HasseDiagram h(SimplicialComplex::from_facets({{1}}));
    const auto r = run_once(h, {}, 3);
    CHECK(r.vector == MorseVector{1});
    REQUIRE(r.trace.events.size() == 1);
    CHECK(r.trace.events[0].kind == CollapseEvent::Kind::Critical);
    CHECK(r.trace.events[0].face == FaceRef{0, 0});
}

TEST_CASE("run_once is seed-deterministic and agrees with run_round") {
    const HasseDiagram h(complex_C(2, 7));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = run_once(h, {}, seed);
        const auto b = run_once(h, {}, seed);
        CHECK(a.vector == b.vector);
        CHECK(a.trace.events.size() == b.trace.events.size());
        CHECK(run_round(h, {}, seed, nullptr) == a.vector);
    }
}

TEST_CASE("traces replay to their vectors") {
    for (const auto& c : {bipyramid(), graph_A(3), bouquet_B(2, 3), dunce_hat_8(), complex_C(2, 5),
                          cyclic_polytope_boundary(4, 9), stacked_sphere(3, 15, 1), linial_meshulam(8, 0.4, 9)}) {
        const HasseDiagram h(c);
        for (auto sel : {Selection::UniformRandom, Selection::Lexicographic, Selection::ReverseLexicographic})
            for (bool fin : {false, true})
                for (std::uint64_t seed = 0; seed < 30; ++seed) {
                    const auto r = run_once(h, {sel, fin}, seed);
                    const auto verdict = verify_trace(h, r.trace);
                    CHECK_MESSAGE(verdict.ok, verdict.reason);
                    CHECK(verdict.vector == r.vector);
                    CHECK(r.vector.alternating_sum() == c.euler_characteristic());
                    CHECK(check_morse_output(c, r.vector).passed());
                }
    }
}

TEST_CASE("collapsibility certificate for the solid tetrahedron") {
    const auto c = simplex(3);
    const auto r = run_once(HasseDiagram(c), {Selection::Lexicographic, false}, 0);
    CHECK(r.vector == MorseVector{1, 0, 0, 0});
    const auto verdict = verify_trace(c, r.trace);
    CHECK(verdict.ok);
    CHECK(verdict.collapsibility_certificate);
}

TEST_CASE("verify_trace rejects illegal traces") {
    const auto c = bipyramid();
    const HasseDiagram h(c);
    auto r = run_once(h, {}, 11);

    SUBCASE("pair on a face with two cofaces") {
        CollapseTrace bad;
        bad.events.push_back({CollapseEvent::Kind::Pair, {1, 0}, {2, 0}});
        const auto v = verify_trace(h, bad);
        CHECK_FALSE(v.ok);
        CHECK(v.failed_event == 0);
    }
    SUBCASE("critical while a free face exists") {
        CollapseTrace bad;
        bad.events.push_back({CollapseEvent::Kind::Critical, {2, 0}, {}});
        bad.events.push_back({CollapseEvent::Kind::Critical, {2, 1}, {}});
        const auto v = verify_trace(h, bad);
        CHECK_FALSE(v.ok);
        CHECK(v.failed_event == 1);
    }
    SUBCASE("truncated trace") {
        r.trace.events.pop_back();
        CHECK_FALSE(verify_trace(h, r.trace).ok);
    }
    SUBCASE("critical below the top level") {
        CollapseTrace bad;
        bad.events.push_back({CollapseEvent::Kind::Critical, {1, 0}, {}});
        CHECK_FALSE(verify_trace(h, bad).ok);
    }
}

TEST_CASE("normalized runs on graphs") {
    for (int k : {1, 3, 8}) {
        const HasseDiagram h(graph_A(k));
        for (std::uint64_t seed = 0; seed < 50; ++seed) CHECK(run_once_normalized(h, {}, seed).vector == MorseVector{1, 2});
    }
    const auto tree = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    CHECK(run_once_normalized(HasseDiagram(tree), {}, 1).vector == MorseVector{1, 0});

    for (std::uint64_t g = 0; g < 20; ++g) {
        const int n = 3 + static_cast<int>(g % 9);
        const auto c = SimplicialComplex::from_facets(oracle::random_connected_graph(n, static_cast<int>(g % 7), g));
        const HasseDiagram h(c);
        const auto expected = MorseVector{1, c.num_faces(1) - c.num_faces(0) + 1};
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto r = run_once_normalized(h, {}, seed);
            CHECK(r.vector == expected);
            CHECK(verify_trace(h, r.trace).ok);
        }
    }
}

TEST_CASE("normalized runs on surfaces") {
    for (const auto& c : {bipyramid(), barycentric_subdivision(bipyramid()), boundary_of_simplex(3)}) {
        const HasseDiagram h(c);
        for (std::uint64_t seed = 0; seed < 100; ++seed)
            CHECK(run_once_normalized(h, {}, seed).vector == MorseVector{1, 0, 1});
    }
}

TEST_CASE("normalized run on a disconnected graph") {
    const auto c = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}, {4, 5}});
    const auto r = run_once_normalized(HasseDiagram(c), {}, 0);
    CHECK(r.vector == MorseVector{2, 1});
}

TEST_CASE("deterministic strategies on the dunce hat") {
    const HasseDiagram h(dunce_hat_8());
    CHECK(run_once(h, {Selection::Lexicographic, false}, 0).vector == MorseVector{1, 1, 1});
    CHECK(run_once(h, {Selection::ReverseLexicographic, false}, 0).vector == MorseVector{1, 1, 1});
    // Seeds do not matter for deterministic strategies.
    CHECK(run_once(h, {Selection::Lexicographic, false}, 99).trace.events.size() ==
          run_once(h, {Selection::Lexicographic, false}, 0).trace.events.size());
}

TEST_CASE("run_many") {
    const HasseDiagram h(graph_A(1));
    CHECK_THROWS_AS(run_many(h, 0, {}, 1), std::invalid_argument);
    const auto one = run_many(h, 1, {}, 5);
    CHECK(one.total() == 1);
    CHECK(one.counts().size() == 1);

    const auto serial = run_many(h, 3001, {}, 17, 1);
    CHECK(serial == run_many(h, 3001, {}, 17, 4));
    CHECK(serial == run_many(h, 3001, {}, 17, 7));
    CHECK(serial == run_many(h, 3001, {}, 17, 0));

    // Round i uses seed round_seed(master, i).
    Spectrum manual;
    for (std::uint64_t i = 0; i < 200; ++i) manual.record(run_once(h, {}, round_seed(17, i)).vector);
    CHECK(manual == run_many(h, 200, {}, 17, 3));

    const auto bip = run_many(HasseDiagram(bipyramid()), 500, {}, 2, 2);
    CHECK(bip.count(MorseVector{1, 0, 1}) == 500);
}

TEST_CASE("random helpers") {
    CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
    CHECK(round_seed(1, 2) != round_seed(2, 1));
    Random rng(5);
    std::vector<int> hist(3, 0);
    for (int i = 0; i < 3000; ++i) ++hist[rng.below(3)];
    for (int h : hist) CHECK(h > 850);
    for (int i = 0; i < 100; ++i) {
        const double u = rng.unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
    }
}
