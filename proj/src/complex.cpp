#include "morse/complex.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace morse {

namespace {

// Sorts the stride-`width` rows of `flat` lexicographically and drops repeats.
std::vector<Vertex> sort_unique_rows(const std::vector<Vertex>& flat, std::size_t width) {
    const std::size_t rows = flat.size() / width;
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    auto row = [&](std::size_t r) { return flat.begin() + static_cast<std::ptrdiff_t>(r * width); };
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(row(a), row(a) + static_cast<std::ptrdiff_t>(width), row(b),
                                            row(b) + static_cast<std::ptrdiff_t>(width));
    });
    std::vector<Vertex> out;
    out.reserve(flat.size());
    const Vertex* prev = nullptr;
    for (std::size_t r : order) {
        const Vertex* cur = &*row(r);
        if (prev != nullptr && std::equal(cur, cur + width, prev)) continue;
        out.insert(out.end(), cur, cur + width);
        prev = cur;
    }
    return out;
}

std::string describe(const std::vector<Vertex>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

}  // namespace

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("face must have at least one vertex");
    if (vertices_.front() == 0) throw std::invalid_argument("vertex ids must be positive");
    if (std::adjacent_find(vertices_.begin(), vertices_.end(), std::greater_equal<>()) != vertices_.end())
        throw std::invalid_argument("face vertices must be strictly increasing: " + describe(vertices_));
}

Face Face::from_unsorted(std::vector<Vertex> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("repeated vertex id in " + describe(vertices));
    return Face(std::move(vertices));
}

bool Face::contains(const Face& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end());
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& raw) {
    if (raw.empty()) throw std::invalid_argument("complex needs at least one facet");

    std::vector<Face> entries;
    entries.reserve(raw.size());
    std::size_t top = 0;
    for (const auto& r : raw) {
        if (r.empty()) throw std::invalid_argument("empty facet entry");
        if (r.size() > kMaxFacetSize)
            throw std::invalid_argument("facet with " + std::to_string(r.size()) + " vertices exceeds the supported maximum of " +
                                        std::to_string(kMaxFacetSize));
        entries.push_back(Face::from_unsorted(r));
        top = std::max(top, r.size());
    }
    std::sort(entries.begin(), entries.end());
    const std::size_t before = entries.size();
    entries.erase(std::unique(entries.begin(), entries.end()), entries.end());

    SimplicialComplex c;
    c.removed_duplicates_ = entries.size() != before;

    // Closure: every nonempty subset of every entry, bucketed by size.
    std::vector<std::vector<Vertex>> flat(top);
    for (const Face& e : entries) {
        const auto v = e.vertices();
        const std::size_t n = v.size();
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
            auto& bucket = flat[static_cast<std::size_t>(std::popcount(mask)) - 1];
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::uint32_t{1} << i)) bucket.push_back(v[i]);
        }
    }
    c.levels_.resize(top);
    for (std::size_t d = 0; d < top; ++d) c.levels_[d] = sort_unique_rows(flat[d], d + 1);

    // A face is a facet iff no face one dimension up contains it.
    std::vector<std::vector<char>> covered(top);
    for (std::size_t d = 0; d < top; ++d) covered[d].assign(c.num_faces(static_cast<int>(d)), 0);
    std::vector<Vertex> sub;
    for (std::size_t d = 1; d < top; ++d) {
        for (std::size_t i = 0; i < c.num_faces(static_cast<int>(d)); ++i) {
            const auto f = c.face(static_cast<int>(d), i);
            for (std::size_t skip = 0; skip <= d; ++skip) {
                sub.clear();
                for (std::size_t j = 0; j <= d; ++j)
                    if (j != skip) sub.push_back(f[j]);
                covered[d - 1][*c.find(sub)] = 1;
            }
        }
    }
    for (std::size_t d = 0; d < top; ++d)
        for (std::size_t i = 0; i < covered[d].size(); ++i)
            if (!covered[d][i]) {
                const auto f = c.face(static_cast<int>(d), i);
                c.facets_.emplace_back(std::vector<Vertex>(f.begin(), f.end()));
            }
    std::sort(c.facets_.begin(), c.facets_.end());
    c.pruned_non_maximal_ = c.facets_.size() != entries.size();
    return c;
}

std::size_t SimplicialComplex::num_faces(int dim) const {
    if (dim < 0 || dim > dimension()) return 0;
    return levels_[static_cast<std::size_t>(dim)].size() / static_cast<std::size_t>(dim + 1);
}

std::size_t SimplicialComplex::total_faces() const {
    std::size_t total = 0;
    for (int d = 0; d <= dimension(); ++d) total += num_faces(d);
    return total;
}

std::span<const Vertex> SimplicialComplex::face(int dim, std::size_t index) const {
    const auto width = static_cast<std::size_t>(dim + 1);
    return std::span<const Vertex>(levels_[static_cast<std::size_t>(dim)]).subspan(index * width, width);
}

std::optional<std::uint32_t> SimplicialComplex::find(std::span<const Vertex> vertices) const {
    const int dim = static_cast<int>(vertices.size()) - 1;
    if (dim < 0 || dim > dimension()) return std::nullopt;
    std::size_t lo = 0;
    std::size_t hi = num_faces(dim);
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        const auto f = face(dim, mid);
        if (std::lexicographical_compare(f.begin(), f.end(), vertices.begin(), vertices.end()))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < num_faces(dim)) {
        const auto f = face(dim, lo);
        if (std::equal(f.begin(), f.end(), vertices.begin(), vertices.end())) return static_cast<std::uint32_t>(lo);
    }
    return std::nullopt;
}

std::vector<std::vector<Vertex>> SimplicialComplex::facet_lists() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(facets_.size());
    for (const Face& f : facets_) out.emplace_back(f.vertices().begin(), f.vertices().end());
    return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(num_faces(d));
    return f;
}

long long SimplicialComplex::euler_characteristic() const {
    long long chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(num_faces(d));
    return chi;
}

bool SimplicialComplex::is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) { return f.dim() == dimension(); });
}

Vertex SimplicialComplex::max_vertex() const { return levels_[0].back(); }

}  // namespace morse
