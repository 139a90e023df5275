#include "morse/hasse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace morse {

HasseDiagram::HasseDiagram(const SimplicialComplex& complex) {
    const int top = complex.dimension();
    counts_ = complex.f_vector();
    down_.resize(static_cast<std::size_t>(top) + 1);
    up_offsets_.resize(static_cast<std::size_t>(top) + 1);
    up_.resize(static_cast<std::size_t>(top) + 1);

    std::vector<Vertex> sub;
    for (int d = 1; d <= top; ++d) {
        auto& down = down_[static_cast<std::size_t>(d)];
        down.reserve(counts_[static_cast<std::size_t>(d)] * static_cast<std::size_t>(d + 1));
        for (std::size_t i = 0; i < counts_[static_cast<std::size_t>(d)]; ++i) {
            const auto f = complex.face(d, i);
            const std::size_t first = down.size();
            // Omitting vertex `skip` from the end yields the faces in ascending order.
            for (int skip = d; skip >= 0; --skip) {
                sub.clear();
                for (int j = 0; j <= d; ++j)
                    if (j != skip) sub.push_back(f[static_cast<std::size_t>(j)]);
                down.push_back(*complex.find(sub));
            }
            std::sort(down.begin() + static_cast<std::ptrdiff_t>(first), down.end());
        }
    }

    for (int d = 0; d <= top; ++d) {
        const std::size_t n = counts_[static_cast<std::size_t>(d)];
        auto& offsets = up_offsets_[static_cast<std::size_t>(d)];
        offsets.assign(n + 1, 0);
        if (d == top) continue;
        const auto& above = down_[static_cast<std::size_t>(d) + 1];
        for (std::uint32_t f : above) ++offsets[f + 1];
        for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
        auto& up = up_[static_cast<std::size_t>(d)];
        up.resize(above.size());
        std::vector<std::uint32_t> fill(offsets.begin(), offsets.end() - 1);
        const std::size_t stride = static_cast<std::size_t>(d) + 2;
        // Cofaces are visited in ascending order, so each list comes out sorted.
        for (std::size_t t = 0; t < above.size() / stride; ++t)
            for (std::size_t k = 0; k < stride; ++k) up[fill[above[t * stride + k]]++] = static_cast<std::uint32_t>(t);
    }
}

std::size_t HasseDiagram::num_faces(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return counts_[static_cast<std::size_t>(dim)];
}

std::size_t HasseDiagram::total_faces() const {
    std::size_t total = 0;
    for (std::size_t c : counts_) total += c;
    return total;
}

std::span<const std::uint32_t> HasseDiagram::up(int dim, std::uint32_t i) const {
    const auto& offsets = up_offsets_[static_cast<std::size_t>(dim)];
    return std::span<const std::uint32_t>(up_[static_cast<std::size_t>(dim)]).subspan(offsets[i], offsets[i + 1] - offsets[i]);
}

std::span<const std::uint32_t> HasseDiagram::down(int dim, std::uint32_t i) const {
    if (dim == 0) return {};
    const auto stride = static_cast<std::size_t>(dim) + 1;
    return std::span<const std::uint32_t>(down_[static_cast<std::size_t>(dim)]).subspan(i * stride, stride);
}

std::size_t HasseDiagram::incidence_count() const {
    std::size_t total = 0;
    for (const auto& d : down_) total += d.size();
    return total;
}

// --- IndexSet ---------------------------------------------------------------

void IndexSet::reset(std::size_t universe, bool ordered) {
    items_.clear();
    pos_.assign(universe, kAbsent);
    ordered_ = ordered;
    low_ = {};
    high_ = {};
}

void IndexSet::insert(std::uint32_t i) {
    if (pos_[i] != kAbsent) return;
    pos_[i] = static_cast<std::uint32_t>(items_.size());
    items_.push_back(i);
    if (ordered_) {
        low_.push(i);
        high_.push(i);
    }
}

void IndexSet::erase(std::uint32_t i) {
    const std::uint32_t p = pos_[i];
    if (p == kAbsent) return;
    const std::uint32_t last = items_.back();
    items_[p] = last;
    pos_[last] = p;
    items_.pop_back();
    pos_[i] = kAbsent;
}

void IndexSet::set_ordered(bool ordered) {
    ordered_ = ordered;
    low_ = {};
    high_ = {};
    if (!ordered) return;
    for (std::uint32_t i : items_) {
        low_.push(i);
        high_.push(i);
    }
}

std::uint32_t IndexSet::min() {
    if (!ordered_) throw std::logic_error("IndexSet::min requires ordered mode");
    while (!contains(low_.top())) low_.pop();
    return low_.top();
}

std::uint32_t IndexSet::max() {
    if (!ordered_) throw std::logic_error("IndexSet::max requires ordered mode");
    while (!contains(high_.top())) high_.pop();
    return high_.top();
}

// --- RunState ---------------------------------------------------------------

RunState::RunState(const HasseDiagram& hasse, bool ordered) : hasse_(&hasse), ordered_(ordered) {
    const int top = hasse.dimension();
    alive_.resize(static_cast<std::size_t>(top) + 1);
    live_up_.resize(static_cast<std::size_t>(top) + 1);
    remaining_.resize(static_cast<std::size_t>(top) + 1);
    for (int d = 0; d <= top; ++d) {
        const std::size_t n = hasse.num_faces(d);
        alive_[static_cast<std::size_t>(d)].assign(n, 1);
        remaining_[static_cast<std::size_t>(d)] = n;
        auto& counts = live_up_[static_cast<std::size_t>(d)];
        counts.resize(n);
        for (std::uint32_t i = 0; i < n; ++i) counts[i] = static_cast<std::uint32_t>(hasse.up(d, i).size());
    }
    level_ = top;
    rebuild_level();
}

std::vector<std::uint32_t> RunState::live_up(FaceRef f) const {
    std::vector<std::uint32_t> out;
    if (f.dim >= hasse_->dimension()) return out;
    const auto& above = alive_[static_cast<std::size_t>(f.dim) + 1];
    for (std::uint32_t t : hasse_->up(f.dim, f.index))
        if (above[t]) out.push_back(t);
    return out;
}

std::uint32_t RunState::lowest_top_face() {
    const auto& flags = alive_[static_cast<std::size_t>(level_)];
    while (!flags[low_cursor_]) ++low_cursor_;
    return low_cursor_;
}

std::uint32_t RunState::highest_top_face() {
    const auto& flags = alive_[static_cast<std::size_t>(level_)];
    while (!flags[high_cursor_ - 1]) --high_cursor_;
    return high_cursor_ - 1;
}

std::uint32_t RunState::unique_coface(std::uint32_t free_face) const {
    const auto& above = alive_[static_cast<std::size_t>(level_)];
    for (std::uint32_t t : hasse_->up(level_ - 1, free_face))
        if (above[t]) return t;
    throw std::logic_error("face has no live coface");
}

void RunState::kill(int dim, std::uint32_t i) {
    alive_[static_cast<std::size_t>(dim)][i] = 0;
    --remaining_[static_cast<std::size_t>(dim)];
    if (dim == level_) top_.erase(i);
    if (dim == level_ - 1) free_.erase(i);
    if (dim == 0) return;
    auto& below = live_up_[static_cast<std::size_t>(dim) - 1];
    const auto& below_alive = alive_[static_cast<std::size_t>(dim) - 1];
    for (std::uint32_t r : hasse_->down(dim, i)) {
        if (!below_alive[r]) continue;
        const std::uint32_t left = --below[r];
        if (dim != level_) continue;
        if (left == 1)
            free_.insert(r);
        else if (left == 0)
            free_.erase(r);
    }
}

std::uint32_t RunState::remove_free_pair(std::uint32_t face) {
    if (level_ <= 0 || !free_.contains(face))
        throw std::logic_error("remove_free_pair: face " + std::to_string(face) + " of dimension " +
                               std::to_string(level_ - 1) + " is not free");
    const std::uint32_t coface = unique_coface(face);
    kill(level_, coface);
    kill(level_ - 1, face);
    return coface;
}

void RunState::remove_critical(std::uint32_t face) {
    if (!free_.empty()) throw std::logic_error("remove_critical called while free faces remain");
    remove_critical_forced(face);
}

void RunState::remove_critical_forced(std::uint32_t face) {
    if (level_ < 0 || face >= alive_[static_cast<std::size_t>(level_)].size() || !alive_[static_cast<std::size_t>(level_)][face])
        throw std::logic_error("remove_critical: face is not a live top-level face");
    kill(level_, face);
}

void RunState::descend_level() {
    if (level_ < 0) throw std::logic_error("descend_level on an empty state");
    if (remaining(level_) != 0) throw std::logic_error("descend_level while the current level still has faces");
    --level_;
    rebuild_level();
}

void RunState::rebuild_level() {
    if (level_ < 0) {
        top_.reset(0, false);
        free_.reset(0, false);
        return;
    }
    const std::size_t n = hasse_->num_faces(level_);
    top_.reset(n, false);
    const auto& flags = alive_[static_cast<std::size_t>(level_)];
    for (std::uint32_t i = 0; i < n; ++i)
        if (flags[i]) top_.insert(i);
    low_cursor_ = 0;
    high_cursor_ = static_cast<std::uint32_t>(n);

    if (level_ == 0) {
        free_.reset(0, ordered_);
        return;
    }
    const std::size_t m = hasse_->num_faces(level_ - 1);
    free_.reset(m, ordered_);
    const auto& below = alive_[static_cast<std::size_t>(level_) - 1];
    const auto& counts = live_up_[static_cast<std::size_t>(level_) - 1];
    for (std::uint32_t i = 0; i < m; ++i)
        if (below[i] && counts[i] == 1) free_.insert(i);
}

}  // namespace morse
