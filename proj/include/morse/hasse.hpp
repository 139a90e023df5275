#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include "morse/complex.hpp"

namespace morse {

/// Covering relations of the face poset, stored once downward (faces of
/// codimension one) and once upward (cofaces of dimension one higher).
/// Faces are addressed by (dim, lexicographic index) as in SimplicialComplex.
/// Immutable; safe to share between threads.
class HasseDiagram {
public:
    explicit HasseDiagram(const SimplicialComplex& complex);

    int dimension() const { return static_cast<int>(counts_.size()) - 1; }
    std::size_t num_faces(int dim) const;
    std::size_t total_faces() const;

    /// (dim+1)-faces containing face (dim, i), ascending.
    std::span<const std::uint32_t> up(int dim, std::uint32_t i) const;
    /// (dim-1)-faces of face (dim, i), ascending; empty for vertices.
    std::span<const std::uint32_t> down(int dim, std::uint32_t i) const;

    /// Number of covering pairs (edges of the Hasse graph, empty face excluded).
    std::size_t incidence_count() const;

private:
    std::vector<std::size_t> counts_;
    // down_[d] has stride d+1 (d >= 1).
    std::vector<std::vector<std::uint32_t>> down_;
    // CSR: up_offsets_[d] has counts_[d]+1 entries into up_[d].
    std::vector<std::vector<std::uint32_t>> up_offsets_;
    std::vector<std::vector<std::uint32_t>> up_;
};

/// Set of face indices with O(1) insert, erase and uniform sampling.
/// Optional lazy heaps answer min()/max() for the deterministic strategies;
/// they rely on an index being inserted at most once between reset() calls.
class IndexSet {
public:
    void reset(std::size_t universe, bool ordered);
    void insert(std::uint32_t i);
    void erase(std::uint32_t i);
    bool contains(std::uint32_t i) const { return i < pos_.size() && pos_[i] != kAbsent; }
    bool empty() const { return items_.empty(); }
    std::size_t size() const { return items_.size(); }
    std::uint32_t at(std::size_t k) const { return items_[k]; }
    std::span<const std::uint32_t> items() const { return items_; }

    void set_ordered(bool ordered);
    std::uint32_t min();
    std::uint32_t max();

private:
    static constexpr std::uint32_t kAbsent = 0xffffffffu;
    std::vector<std::uint32_t> items_;
    std::vector<std::uint32_t> pos_;
    bool ordered_ = false;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> low_;
    std::priority_queue<std::uint32_t> high_;
};

/// Mutable teardown state of one round over a shared HasseDiagram.
///
/// Liveness flags plus per-face live-coface counters stand in for the
/// deconstructed copy of the upward diagram. The engine works one level at a
/// time: `level()` is the dimension being removed, and the free set holds the
/// live (level-1)-faces with exactly one live coface.
class RunState {
public:
    /// All faces alive, level = top dimension, free set initialized.
    /// `ordered` enables min()/max() queries on the free set.
    explicit RunState(const HasseDiagram& hasse, bool ordered = false);

    const HasseDiagram& hasse() const { return *hasse_; }
    int level() const { return level_; }
    bool empty() const { return level_ < 0; }
    bool alive(FaceRef f) const { return alive_[static_cast<std::size_t>(f.dim)][f.index] != 0; }
    std::size_t remaining(int dim) const { return remaining_[static_cast<std::size_t>(dim)]; }
    std::size_t live_coface_count(FaceRef f) const { return live_up_[static_cast<std::size_t>(f.dim)][f.index]; }
    /// Live cofaces of `f`, filtered from the pristine upward list.
    std::vector<std::uint32_t> live_up(FaceRef f) const;

    IndexSet& free_faces() { return free_; }
    const IndexSet& free_faces() const { return free_; }
    bool is_free(FaceRef f) const { return level_ > 0 && f.dim == level_ - 1 && free_.contains(f.index); }

    /// Live faces of dimension level(); supports uniform sampling.
    const IndexSet& top_faces() const { return top_; }
    std::uint32_t lowest_top_face();
    std::uint32_t highest_top_face();

    /// The single live coface of a free face.
    std::uint32_t unique_coface(std::uint32_t free_face) const;

    /// Elementary collapse of free (level-1)-face `face` with its coface,
    /// which is returned. Throws std::logic_error if `face` is not free.
    std::uint32_t remove_free_pair(std::uint32_t face);

    /// Deletes live level-face `face` as critical. Throws std::logic_error
    /// while free faces exist or if `face` is not a live level-face.
    void remove_critical(std::uint32_t face);

    /// Deletes live level-face `face` without the empty-free-set check; used
    /// by the 1-dimensional finisher for edges lying on cycles.
    void remove_critical_forced(std::uint32_t face);

    bool level_exhausted() const { return level_ >= 0 && remaining(level_) == 0; }

    /// Moves to the next level below once the current one is empty and
    /// rebuilds the free set there. Throws std::logic_error if the level still
    /// has faces or the state is already empty.
    void descend_level();

private:
    void kill(int dim, std::uint32_t i);
    void rebuild_level();

    const HasseDiagram* hasse_;
    int level_ = -1;
    bool ordered_ = false;
    std::vector<std::vector<std::uint8_t>> alive_;
    std::vector<std::vector<std::uint32_t>> live_up_;
    std::vector<std::size_t> remaining_;
    IndexSet free_;
    IndexSet top_;
    std::uint32_t low_cursor_ = 0;
    std::uint32_t high_cursor_ = 0;
};

}  // namespace morse
