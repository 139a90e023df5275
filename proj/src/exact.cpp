#include <unordered_map>

#include "morse/hasse.hpp"
#include "morse/spectrum.hpp"

namespace morse {

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
    std::size_t operator()(const Bits& b) const {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (std::uint64_t w : b) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }
};

// Distribution of the critical counts still to come, keyed by partial vector.
using Outcome = std::map<std::vector<std::size_t>, Rational>;

class DecisionTree {
public:
    DecisionTree(const HasseDiagram& h, std::size_t max_states) : h_(h), max_states_(max_states) {
        std::size_t offset = 0;
        for (int d = 0; d <= h.dimension(); ++d) {
            offsets_.push_back(offset);
            offset += h.num_faces(d);
        }
        total_ = offset;
    }

    Outcome solve() {
        Bits all((total_ + 63) / 64, 0);
        for (std::size_t i = 0; i < total_; ++i) set(all, i, true);
        return explore(all);
    }

private:
    std::size_t id(int dim, std::uint32_t i) const { return offsets_[static_cast<std::size_t>(dim)] + i; }
    static bool get(const Bits& b, std::size_t i) { return (b[i >> 6] >> (i & 63)) & 1u; }
    static void set(Bits& b, std::size_t i, bool on) {
        if (on)
            b[i >> 6] |= std::uint64_t{1} << (i & 63);
        else
            b[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    const Outcome& explore(const Bits& state) {
        if (auto it = memo_.find(state); it != memo_.end()) return it->second;
        if (memo_.size() >= max_states_)
            throw BudgetExceeded("exact spectrum exceeds the state budget of " + std::to_string(max_states_));

        int level = h_.dimension();
        auto alive_at = [&](int d) {
            for (std::uint32_t i = 0; i < h_.num_faces(d); ++i)
                if (get(state, id(d, i))) return true;
            return false;
        };
        while (level >= 0 && !alive_at(level)) --level;

        Outcome result;
        if (level < 0) {
            result[std::vector<std::size_t>(static_cast<std::size_t>(h_.dimension()) + 1, 0)] = 1;
            return memo_.emplace(state, std::move(result)).first->second;
        }

        // (free face, its only live coface)
        std::vector<std::pair<std::uint32_t, std::uint32_t>> free;
        if (level > 0) {
            for (std::uint32_t s = 0; s < h_.num_faces(level - 1); ++s) {
                if (!get(state, id(level - 1, s))) continue;
                int live = 0;
                std::uint32_t last = 0;
                for (std::uint32_t t : h_.up(level - 1, s))
                    if (get(state, id(level, t))) {
                        ++live;
                        last = t;
                    }
                if (live == 1) free.emplace_back(s, last);
            }
        }

        if (!free.empty()) {
            const Rational weight(1, static_cast<long long>(free.size()));
            for (const auto& [s, t] : free) {
                Bits child = state;
                set(child, id(level - 1, s), false);
                set(child, id(level, t), false);
                for (const auto& [v, p] : explore(child)) result[v] += weight * p;
            }
        } else {
            std::vector<std::uint32_t> top;
            for (std::uint32_t t = 0; t < h_.num_faces(level); ++t)
                if (get(state, id(level, t))) top.push_back(t);
            const Rational weight(1, static_cast<long long>(top.size()));
            for (std::uint32_t t : top) {
                Bits child = state;
                set(child, id(level, t), false);
                for (const auto& [v, p] : explore(child)) {
                    auto shifted = v;
                    ++shifted[static_cast<std::size_t>(level)];
                    result[shifted] += weight * p;
                }
            }
        }
        return memo_.emplace(state, std::move(result)).first->second;
    }

    const HasseDiagram& h_;
    std::size_t max_states_;
    std::vector<std::size_t> offsets_;
    std::size_t total_ = 0;
    std::unordered_map<Bits, Outcome, BitsHash> memo_;
};

}  // namespace

ExactSpectrum exact_spectrum_bruteforce(const SimplicialComplex& complex, ExactBudget budget) {
    if (complex.total_faces() > budget.max_faces)
        throw BudgetExceeded("exact spectrum needs at most " + std::to_string(budget.max_faces) + " faces, complex has " +
                             std::to_string(complex.total_faces()));
    const HasseDiagram hasse(complex);
    DecisionTree tree(hasse, budget.max_states);
    ExactSpectrum out;
    for (auto& [v, p] : tree.solve()) out[MorseVector(v)] = p;
    return out;
}

}  // namespace morse
