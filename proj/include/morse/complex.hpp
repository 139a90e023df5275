#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace morse {

using Vertex = std::uint32_t;

// Largest facet (in vertices) accepted by from_facets; the closure of a facet
// with n vertices has 2^n - 1 faces.
inline constexpr std::size_t kMaxFacetSize = 24;

/// Address of a face: its dimension and its position in the lexicographically
/// sorted list of faces of that dimension.
struct FaceRef {
    int dim = 0;
    std::uint32_t index = 0;

    friend auto operator<=>(const FaceRef&, const FaceRef&) = default;
};

/// A nonempty simplex given by strictly increasing vertex ids.
class Face {
public:
    /// Throws std::invalid_argument unless `vertices` is nonempty, strictly
    /// increasing and free of the id 0.
    explicit Face(std::vector<Vertex> vertices);

    /// Sorts first; rejects repeated ids.
    static Face from_unsorted(std::vector<Vertex> vertices);

    std::span<const Vertex> vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    bool contains(const Face& other) const;

    friend auto operator<=>(const Face&, const Face&) = default;

private:
    std::vector<Vertex> vertices_;
};

/// Finite abstract simplicial complex, immutable after construction.
///
/// Faces of each dimension are kept in one flat lexicographically sorted
/// array with stride dim+1, so a face is addressed by (dim, index) and found
/// by binary search.
class SimplicialComplex {
public:
    /// Builds the complex generated by `raw`. Duplicate entries are dropped
    /// and entries contained in other entries are pruned; both are recorded
    /// in the metadata flags. Throws std::invalid_argument on empty input, an
    /// empty entry, a repeated vertex id inside an entry, a zero vertex id, or
    /// an entry larger than kMaxFacetSize.
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& raw);

    int dimension() const { return static_cast<int>(levels_.size()) - 1; }
    std::size_t num_faces(int dim) const;
    std::size_t total_faces() const;

    std::span<const Vertex> face(int dim, std::size_t index) const;
    std::span<const Vertex> face(FaceRef ref) const { return face(ref.dim, ref.index); }

    /// Index of `vertices` (sorted ascending) among faces of its dimension.
    std::optional<std::uint32_t> find(std::span<const Vertex> vertices) const;
    bool contains(std::span<const Vertex> vertices) const { return find(vertices).has_value(); }

    /// Inclusion-maximal faces, sorted lexicographically.
    const std::vector<Face>& facets() const { return facets_; }
    std::vector<std::vector<Vertex>> facet_lists() const;

    bool pruned_non_maximal() const { return pruned_non_maximal_; }
    bool removed_duplicates() const { return removed_duplicates_; }

    std::vector<std::size_t> f_vector() const;
    long long euler_characteristic() const;

    bool is_pure() const;
    Vertex max_vertex() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::vector<std::vector<Vertex>> levels_;
    std::vector<Face> facets_;
    bool pruned_non_maximal_ = false;
    bool removed_duplicates_ = false;
};

}  // namespace morse
