#include "morse/engine.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <thread>

#include "morse/random.hpp"

namespace morse {

std::string_view to_string(Selection s) {
    switch (s) {
        case Selection::UniformRandom: return "random";
        case Selection::Lexicographic: return "lex";
        case Selection::ReverseLexicographic: return "revlex";
    }
    return "random";
}

std::optional<Selection> parse_selection(std::string_view name) {
    if (name == "random") return Selection::UniformRandom;
    if (name == "lex") return Selection::Lexicographic;
    if (name == "revlex") return Selection::ReverseLexicographic;
    return std::nullopt;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::uint32_t{0}); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[std::max(a, b)] = std::min(a, b);
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
};

void log_pair(CollapseTrace* trace, int level, std::uint32_t face, std::uint32_t coface) {
    if (trace) trace->events.push_back({CollapseEvent::Kind::Pair, {level - 1, face}, {level, coface}});
}

void log_critical(CollapseTrace* trace, int level, std::uint32_t face) {
    if (trace) trace->events.push_back({CollapseEvent::Kind::Critical, {level, face}, {}});
}

// Deterministic teardown of a live complex whose top level is 1.
void finish_graph(RunState& state, MorseVector& v, CollapseTrace* trace) {
    const HasseDiagram& h = state.hasse();

    std::vector<std::uint32_t> edges(state.top_faces().items().begin(), state.top_faces().items().end());
    std::sort(edges.begin(), edges.end());
    // Deleting the least non-bridge edge first, repeatedly, removes exactly
    // the edges outside the spanning forest that Kruskal builds from the
    // greatest edge down; a single ascending pass reproduces that order.
    DisjointSets components(h.num_faces(0));
    std::vector<char> in_forest(h.num_faces(1), 0);
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        const auto ends = h.down(1, *it);
        if (components.unite(ends[0], ends[1])) in_forest[*it] = 1;
    }
    for (std::uint32_t e : edges) {
        if (in_forest[e]) continue;
        state.remove_critical_forced(e);
        ++v.counts[1];
        log_critical(trace, 1, e);
    }

    while (!state.empty()) {
        if (state.level_exhausted()) {
            state.descend_level();
            continue;
        }
        const int level = state.level();
        if (!state.free_faces().empty()) {
            const std::uint32_t leaf = state.free_faces().min();
            log_pair(trace, level, leaf, state.remove_free_pair(leaf));
        } else {
            const std::uint32_t face = state.lowest_top_face();
            state.remove_critical(face);
            ++v.counts[static_cast<std::size_t>(level)];
            log_critical(trace, level, face);
        }
    }
}

}  // namespace

MorseVector run_round(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed, CollapseTrace* trace) {
    const bool random = strategy.selection == Selection::UniformRandom;
    RunState state(hasse, !random || strategy.deterministic_1d_finisher);
    Random rng(seed);
    MorseVector v(std::vector<std::size_t>(static_cast<std::size_t>(hasse.dimension()) + 1, 0));
    if (trace) {
        trace->events.clear();
        trace->finisher = strategy.deterministic_1d_finisher;
    }

    while (!state.empty()) {
        if (state.level_exhausted()) {
            state.descend_level();
            continue;
        }
        const int level = state.level();
        if (strategy.deterministic_1d_finisher && level == 1) {
            finish_graph(state, v, trace);
            break;
        }
        IndexSet& free = state.free_faces();
        if (!free.empty()) {
            std::uint32_t face = 0;
            switch (strategy.selection) {
                case Selection::UniformRandom: face = free.at(rng.below(free.size())); break;
                case Selection::Lexicographic: face = free.min(); break;
                case Selection::ReverseLexicographic: face = free.max(); break;
            }
            log_pair(trace, level, face, state.remove_free_pair(face));
        } else {
            std::uint32_t face = 0;
            switch (strategy.selection) {
                case Selection::UniformRandom: face = state.top_faces().at(rng.below(state.top_faces().size())); break;
                case Selection::Lexicographic: face = state.lowest_top_face(); break;
                case Selection::ReverseLexicographic: face = state.highest_top_face(); break;
            }
            state.remove_critical(face);
            ++v.counts[static_cast<std::size_t>(level)];
            log_critical(trace, level, face);
        }
    }
    return v;
}

RoundResult run_once(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed) {
    RoundResult r;
    r.vector = run_round(hasse, strategy, seed, &r.trace);
    return r;
}

RoundResult run_once_normalized(const HasseDiagram& hasse, Strategy strategy, std::uint64_t seed) {
    strategy.deterministic_1d_finisher = true;
    return run_once(hasse, strategy, seed);
}

namespace {

class Replay {
public:
    explicit Replay(const HasseDiagram& h) : h_(h) {
        const int top = h.dimension();
        for (int d = 0; d <= top; ++d) {
            alive_.emplace_back(h.num_faces(d), 1);
            remaining_.push_back(h.num_faces(d));
            std::vector<std::uint32_t> counts(h.num_faces(d));
            for (std::uint32_t i = 0; i < counts.size(); ++i) counts[i] = static_cast<std::uint32_t>(h.up(d, i).size());
            cofaces_.push_back(std::move(counts));
        }
        level_ = top;
    }

    int level() {
        while (level_ >= 0 && remaining_[static_cast<std::size_t>(level_)] == 0) --level_;
        return level_;
    }

    bool valid(FaceRef f) const {
        return f.dim >= 0 && f.dim <= h_.dimension() && f.index < h_.num_faces(f.dim);
    }
    bool alive(FaceRef f) const { return alive_[static_cast<std::size_t>(f.dim)][f.index] != 0; }
    std::uint32_t cofaces(FaceRef f) const { return cofaces_[static_cast<std::size_t>(f.dim)][f.index]; }

    bool any_free(int level) const {
        if (level <= 0) return false;
        const auto d = static_cast<std::size_t>(level) - 1;
        for (std::size_t i = 0; i < alive_[d].size(); ++i)
            if (alive_[d][i] && cofaces_[d][i] == 1) return true;
        return false;
    }

    // Whether live edge e lies on a cycle of the live graph.
    bool on_cycle(std::uint32_t e) const {
        const auto ends = h_.down(1, e);
        std::vector<char> seen(h_.num_faces(0), 0);
        std::vector<std::uint32_t> stack{ends[0]};
        seen[ends[0]] = 1;
        while (!stack.empty()) {
            const std::uint32_t u = stack.back();
            stack.pop_back();
            for (std::uint32_t f : h_.up(0, u)) {
                if (f == e || !alive_[1][f]) continue;
                const auto fe = h_.down(1, f);
                const std::uint32_t w = fe[0] == u ? fe[1] : fe[0];
                if (w == ends[1]) return true;
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        return false;
    }

    void kill(FaceRef f) {
        alive_[static_cast<std::size_t>(f.dim)][f.index] = 0;
        --remaining_[static_cast<std::size_t>(f.dim)];
        if (f.dim == 0) return;
        for (std::uint32_t r : h_.down(f.dim, f.index)) --cofaces_[static_cast<std::size_t>(f.dim) - 1][r];
    }

private:
    const HasseDiagram& h_;
    std::vector<std::vector<char>> alive_;
    std::vector<std::vector<std::uint32_t>> cofaces_;
    std::vector<std::size_t> remaining_;
    int level_;
};

}  // namespace

TraceVerdict verify_trace(const HasseDiagram& hasse, const CollapseTrace& trace) {
    TraceVerdict verdict;
    verdict.vector = MorseVector(std::vector<std::size_t>(static_cast<std::size_t>(hasse.dimension()) + 1, 0));
    Replay replay(hasse);
    auto fail = [&](std::size_t i, std::string why) {
        verdict.ok = false;
        verdict.failed_event = i;
        verdict.reason = std::move(why);
        return verdict;
    };

    for (std::size_t i = 0; i < trace.events.size(); ++i) {
        const CollapseEvent& ev = trace.events[i];
        const int level = replay.level();
        if (level < 0) return fail(i, "complex is already empty");
        if (!replay.valid(ev.face)) return fail(i, "face reference out of range");
        if (!replay.alive(ev.face)) return fail(i, "face already removed");

        if (ev.kind == CollapseEvent::Kind::Pair) {
            if (ev.face.dim != level - 1) return fail(i, "free face is not one below the current level");
            if (!replay.valid(ev.coface) || ev.coface.dim != level) return fail(i, "coface is not a current-level face");
            if (!replay.alive(ev.coface)) return fail(i, "coface already removed");
            const auto up = hasse.up(ev.face.dim, ev.face.index);
            if (!std::binary_search(up.begin(), up.end(), ev.coface.index)) return fail(i, "coface does not contain the face");
            if (replay.cofaces(ev.face) != 1)
                return fail(i, "face is not free (" + std::to_string(replay.cofaces(ev.face)) + " live cofaces)");
            replay.kill(ev.coface);
            replay.kill(ev.face);
        } else {
            if (ev.face.dim != level) return fail(i, "critical face is not of the current level");
            if (replay.cofaces(ev.face) != 0) return fail(i, "critical face still has cofaces");
            if (replay.any_free(level)) {
                const bool finisher_edge = trace.finisher && level == 1 && replay.on_cycle(ev.face.index);
                if (!finisher_edge) return fail(i, "critical face removed while free faces remain");
            }
            replay.kill(ev.face);
            ++verdict.vector.counts[static_cast<std::size_t>(level)];
        }
    }
    if (replay.level() >= 0) return fail(trace.events.size(), "trace ends before the complex is empty");
    verdict.ok = true;
    verdict.collapsibility_certificate = verdict.vector.total() == 1 && verdict.vector[0] == 1;
    return verdict;
}

TraceVerdict verify_trace(const SimplicialComplex& complex, const CollapseTrace& trace) {
    return verify_trace(HasseDiagram(complex), trace);
}

Spectrum run_many(const HasseDiagram& hasse, std::size_t rounds, Strategy strategy, std::uint64_t master_seed,
                  unsigned workers) {
    if (rounds == 0) throw std::invalid_argument("run_many needs at least one round");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, rounds));

    std::vector<Spectrum> partial(workers);
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned w) {
        try {
            const std::size_t begin = rounds * w / workers;
            const std::size_t end = rounds * (w + 1) / workers;
            for (std::size_t r = begin; r < end; ++r)
                partial[w].record(run_round(hasse, strategy, round_seed(master_seed, r), nullptr));
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Spectrum total;
    for (const auto& p : partial) total.merge(p);
    return total;
}

}  // namespace morse
