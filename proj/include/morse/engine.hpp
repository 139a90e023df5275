#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "morse/complex.hpp"
#include "morse/hasse.hpp"
#include "morse/spectrum.hpp"

namespace morse {

enum class Selection { UniformRandom, Lexicographic, ReverseLexicographic };

std::string_view to_string(Selection s);  // "random", "lex", "revlex"
std::optional<Selection> parse_selection(std::string_view name);

/// Selection rule for free and critical faces. Lexicographic takes the
/// lowest index in the level's lexicographic list, ReverseLexicographic the
/// highest. With the finisher on, a round that reaches a 1-dimensional live
/// complex finishes deterministically (see run_once_normalized).
struct Strategy {
    Selection selection = Selection::UniformRandom;
    bool deterministic_1d_finisher = false;
};

struct CollapseEvent {
    enum class Kind : std::uint8_t { Pair, Critical };
    Kind kind = Kind::Critical;
    FaceRef face;    // the free face, or the critical face
    FaceRef coface;  // Pair only
};

/// Ordered removal log of one round; replayable by verify_trace.
struct CollapseTrace {
    std::vector<CollapseEvent> events;
    // Set when the round used the 1-d finisher: critical edges on cycles are
    // then legal even while free vertices exist.
    bool finisher = false;
};

struct RoundResult {
    MorseVector vector;
    CollapseTrace trace;
};

/// One round of random discrete Morse: collapse a free (level-1)-face with
/// its coface while any exists, otherwise delete a level-face as critical;
/// descend when a level empties. `seed` drives every random choice.
RoundResult run_once(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed);

/// As run_once until the live complex is 1-dimensional. Then edges lying on
/// cycles are deleted as critical (lexicographically least first), and the
/// remaining forest is collapsed leaf by leaf (least free vertex first),
/// leaving one critical vertex per component.
RoundResult run_once_normalized(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed);

/// Trace-free variant used by run_many; `trace` may be null.
MorseVector run_round(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed, CollapseTrace* trace);

struct TraceVerdict {
    bool ok = false;
    MorseVector vector;
    std::size_t failed_event = 0;  // index of the first illegal event when !ok
    std::string reason;
    // ok and the vector is (1,0,...,0).
    bool collapsibility_certificate = false;
};

/// Replays `trace` on a fresh copy of the complex, checking that every pair
/// was free at its moment, that every critical face was top-level with no
/// free face left (or on a cycle, for finisher traces), and that the complex
/// ends empty. Independent of RunState.
TraceVerdict verify_trace(const HasseDiagram& hasse, const CollapseTrace& trace);
TraceVerdict verify_trace(const SimplicialComplex& complex, const CollapseTrace& trace);

/// `rounds` independent rounds with seeds round_seed(master_seed, i). The
/// result does not depend on `workers` (0 = hardware concurrency).
Spectrum run_many(const HasseDiagram& hasse, std::size_t rounds, Strategy strategy, std::uint64_t master_seed,
                  unsigned workers = 1);

}  // namespace morse
