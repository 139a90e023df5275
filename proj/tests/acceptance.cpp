// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "morse/engine.hpp"
#include "morse/generators.hpp"
#include "morse/hasse.hpp"
#include "morse/random.hpp"
#include "morse/spectrum.hpp"
#include "morse/topology.hpp"
#include "oracles.hpp"

using namespace morse;

namespace {

constexpr std::uint64_t kSeed = 20260415;
constexpr unsigned kWorkers = 4;

// Tolerances.
constexpr double kA7Band = 0.015;
constexpr double kSigmas = 4.0;
constexpr double kBouquetTv = 0.03;
constexpr double kC211Slack = 0.02;
constexpr double kCyclicShare = 0.99;
constexpr double kExactSeconds = 1.0;
constexpr double kEmpiricalSeconds = 5.0;
constexpr double kStackedSeconds = 60.0;
constexpr std::size_t kInvariantRounds = 100'000;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

Outcome c1_exact_a7() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto exact = exact_spectrum_bruteforce(graph_A(1));
    const double t = seconds_since(t0);
    const ExactSpectrum expected{{MorseVector{1, 2}, Rational(6, 7)}, {MorseVector{2, 3}, Rational(1, 7)}};
    std::ostringstream d;
    for (const auto& [v, p] : exact) d << v.str() << "=" << to_string(p) << " ";
    d << "in " << fmt(t) << "s";
    return {exact == expected && t < kExactSeconds, d.str()};
}

Outcome c2_empirical_a7() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = run_many(HasseDiagram(graph_A(1)), 10000, {}, kSeed, kWorkers);
    const double t = seconds_since(t0);
    const double f = s.frequency(MorseVector{1, 2});
    return {std::abs(f - 6.0 / 7) <= kA7Band && t < kEmpiricalSeconds,
            "freq(1,2)=" + fmt(f) + " target " + fmt(6.0 / 7) + " in " + fmt(t) + "s"};
}

Outcome c3_optimal_rate() {
    Outcome out;
    for (int k : {1, 4, 10}) {
        const auto s = run_many(HasseDiagram(graph_A(k)), 10000, {}, kSeed + static_cast<std::uint64_t>(k), kWorkers);
        const double p = 6.0 / (6 + k);
        const double band = kSigmas * std::sqrt(p * (1 - p) / 10000);
        const double f = s.frequency(MorseVector{1, 2});
        out.pass = out.pass && std::abs(f - p) <= band;
        out.detail += "k=" + std::to_string(k) + ": " + fmt(f) + " vs " + fmt(p) + "±" + fmt(band) + "; ";
    }
    return out;
}

Outcome c4_bouquet() {
    const auto s = run_many(HasseDiagram(bouquet_B(4, 3)), 10000, {}, kSeed, kWorkers);
    const double tv = total_variation(s, analytic_spectrum_B(4, 3));
    return {tv <= kBouquetTv, "TV=" + fmt(tv)};
}

Outcome c5_bipyramid() {
    const auto c = bipyramid();
    const bool exact_ok = exact_spectrum_bruteforce(c) == ExactSpectrum{{MorseVector{1, 0, 1}, 1}};
    const auto s = run_many(HasseDiagram(c), 10000, {}, kSeed, kWorkers);
    const auto hits = s.count(MorseVector{1, 0, 1});
    return {exact_ok && hits == 10000, "exact " + std::string(exact_ok ? "ok" : "wrong") + ", (1,0,1) in " +
                                           std::to_string(hits) + "/10000"};
}

Outcome c6_graph_lemma() {
    std::size_t bad = 0;
    std::size_t runs = 0;
    for (std::uint64_t g = 0; g < 50; ++g) {
        const int n = 2 + static_cast<int>(g % 11);
        const int extra = static_cast<int>((g * 7) % 12);
        const auto c = SimplicialComplex::from_facets(oracle::random_connected_graph(n, extra, kSeed + g));
        const HasseDiagram h(c);
        const MorseVector expected{1, c.num_faces(1) - c.num_faces(0) + 1};
        for (std::uint64_t r = 0; r < 100; ++r, ++runs) {
            const auto res = run_once_normalized(h, {}, round_seed(kSeed + g, r));
            if (res.vector != expected || !verify_trace(h, res.trace).ok) ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " mismatches in " + std::to_string(runs) + " normalized runs on 50 graphs"};
}

Outcome c7_surface_lemma() {
    Outcome out;
    const auto base = bipyramid();
    for (const auto& c : {base, barycentric_subdivision(base)}) {
        const auto s = run_many(HasseDiagram(c), 1000, {Selection::UniformRandom, true}, kSeed, kWorkers);
        const bool ok = s.count(MorseVector{1, 0, 1}) == 1000;
        out.pass = out.pass && ok;
        out.detail += "f0=" + std::to_string(c.num_faces(0)) + ": " + std::to_string(s.counts().size()) +
                      " distinct vector(s); ";
    }
    return out;
}

Outcome c8_complex_c() {
    const auto c = complex_C(2, 11);
    const auto s = run_many(HasseDiagram(c), 10000, {}, kSeed, kWorkers);
    const double bound = 12.0 / (12 + 11) + kC211Slack;
    const double f = s.frequency(MorseVector{1, 0, 3});
    bool vectors_ok = true;
    for (const auto& [v, n] : s.counts())
        vectors_ok = vectors_ok && v.alternating_sum() == 4 && v[0] >= 1 && v[2] >= 3;
    return {f <= bound && vectors_ok,
            "freq(1,0,3)=" + fmt(f) + " bound " + fmt(bound) + ", vectors " + (vectors_ok ? "consistent" : "INVALID")};
}

Outcome c9_cyclic() {
    const auto f = cyclic_polytope_boundary(4, 50).f_vector();
    const bool f_ok = f == std::vector<std::size_t>{50, 1225, 2350, 1175};
    const auto s = run_many(HasseDiagram(cyclic_polytope_boundary(4, 20)), 1000, {}, kSeed, kWorkers);
    const double share = s.frequency(MorseVector{1, 0, 0, 1});
    return {f_ok && share >= kCyclicShare,
            std::string("f-vector ") + (f_ok ? "ok" : "wrong") + ", (1,0,0,1) share " + fmt(share)};
}

Outcome c10_stacked() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto big = stacked_sphere(3, 1000, kSeed);
    const auto v = run_once(HasseDiagram(big), {}, kSeed).vector;
    const double t = seconds_since(t0);
    const std::size_t f3 = big.num_faces(3);
    const std::size_t f4 = stacked_sphere(4, 100, kSeed).num_faces(4);
    return {f3 == 2990 && f4 == 472 && t < kStackedSeconds,
            "stacked:3:1000 facets=" + std::to_string(f3) + " (want 2990), stacked:4:100 facets=" +
                std::to_string(f4) + " (want 472), round " + v.str() + " in " + fmt(t) + "s"};
}

Outcome c11_dunce() {
    const auto c = dunce_hat_8();
    const HasseDiagram h(c);
    bool degrees = true;
    for (std::uint32_t e = 0; e < h.num_faces(1); ++e) {
        const auto n = h.up(1, e).size();
        degrees = degrees && (n == 2 || n == 3);
    }
    const bool f_ok = c.f_vector() == std::vector<std::size_t>{8, 24, 17} && c.euler_characteristic() == 1;
    const bool b_ok = betti_gf2(c).values == std::vector<std::size_t>{1, 0, 0};
    const bool no_free = RunState(h).free_faces().empty();
    const auto lex = run_once(h, {Selection::Lexicographic, false}, 0).vector;
    const auto rev = run_once(h, {Selection::ReverseLexicographic, false}, 0).vector;
    const auto s = run_many(h, 10000, {}, kSeed, kWorkers);
    const auto collapses = s.count(MorseVector{1, 0, 0});
    const bool pass = degrees && f_ok && b_ok && no_free && lex == MorseVector{1, 1, 1} &&
                      rev == MorseVector{1, 1, 1} && collapses == 0;
    return {pass, "lex " + lex.str() + ", revlex " + rev.str() + ", (1,0,0) in " + std::to_string(collapses) +
                      "/10000, mode " + s.mode().str()};
}

Outcome c12_invariants() {
    const std::vector<SimplicialComplex> suite = {
        graph_A(1),           graph_A(10),           bouquet_B(4, 3),          complex_C(1, 5),
        complex_C(2, 11),     complex_C(3, 7),       bipyramid(),              barycentric_subdivision(bipyramid()),
        dunce_hat_8(),        simplex(3),            boundary_of_simplex(4),   cone(dunce_hat_8(), 9),
        cyclic_polytope_boundary(4, 12), stacked_sphere(3, 25, 3), stacked_sphere(4, 12, 5),
        linial_meshulam(8, 0.4, 1),      linial_meshulam(10, 0.3, 2)};
    std::size_t rounds = 0;
    std::size_t violations = 0;
    const std::size_t per = kInvariantRounds / suite.size() + 1;
    for (std::size_t i = 0; i < suite.size(); ++i) {
        const auto& c = suite[i];
        const HasseDiagram h(c);
        const auto betti = betti_gf2(c);
        for (std::size_t r = 0; r < per; ++r, ++rounds) {
            const Strategy strategy{Selection::UniformRandom, r % 4 == 3};
            const auto res = run_once(h, strategy, round_seed(kSeed + i, r));
            const auto verdict = verify_trace(h, res.trace);
            const auto check = check_morse_output(c, res.vector, betti);
            if (!verdict.ok || verdict.vector != res.vector || !check.passed()) ++violations;
        }
    }
    return {violations == 0 && rounds >= kInvariantRounds,
            std::to_string(violations) + " violations in " + std::to_string(rounds) + " rounds over " +
                std::to_string(suite.size()) + " complexes"};
}

Outcome c13_reproducible() {
    Outcome out;
    for (const auto& c : {complex_C(2, 11), dunce_hat_8(), stacked_sphere(3, 40, 1)}) {
        const HasseDiagram h(c);
        const auto betti = betti_gf2(c).values;
        const auto one = spectrum_report(run_many(h, 5000, {}, kSeed, 1), c.euler_characteristic(), betti, kSeed, "random");
        const auto four = spectrum_report(run_many(h, 5000, {}, kSeed, 4), c.euler_characteristic(), betti, kSeed, "random");
        out.pass = out.pass && one.dump(2) == four.dump(2);
    }
    out.detail = out.pass ? "reports byte-identical for workers 1 and 4" : "reports differ";
    return out;
}

Outcome c14_presentations() {
    std::vector<SimplicialComplex> suite = {graph_A(2), bouquet_B(3, 2), complex_C(2, 5), bipyramid(),
                                            barycentric_subdivision(bipyramid()), dunce_hat_8(), simplex(3),
                                            boundary_of_simplex(4), cyclic_polytope_boundary(4, 16),
                                            stacked_sphere(3, 60, 2), linial_meshulam(12, 0.2, 4)};
    std::size_t bad = 0;
    for (const auto& c : suite) {
        if (connected_components(c).count != 1) continue;
        const auto p = edge_path_presentation(c);
        if (p.generators != c.num_faces(1) - c.num_faces(0) + 1 || p.relators.size() != c.num_faces(2)) ++bad;
    }
    const auto dunce = edge_path_presentation(dunce_hat_8());
    const bool dunce_ok = dunce.generators == 17 && dunce.relators.size() == 17;
    return {bad == 0 && dunce_ok, std::to_string(bad) + " count mismatches; dunce hat " +
                                      std::to_string(dunce.generators) + "/" + std::to_string(dunce.relators.size())};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"A_7 exact spectrum", c1_exact_a7},
        {"A_7 empirical frequency", c2_empirical_a7},
        {"A_{k+6} optimal rate", c3_optimal_rate},
        {"bouquet binomial law", c4_bouquet},
        {"bipyramid", c5_bipyramid},
        {"graph lemma", c6_graph_lemma},
        {"surface lemma", c7_surface_lemma},
        {"C^2_11 bound", c8_complex_c},
        {"cyclic polytope", c9_cyclic},
        {"stacked spheres", c10_stacked},
        {"dunce hat", c11_dunce},
        {"per-round invariants", c12_invariants},
        {"reproducibility", c13_reproducible},
        {"edge-path counts", c14_presentations},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
