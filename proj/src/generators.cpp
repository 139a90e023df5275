#include "morse/generators.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

#include "morse/hasse.hpp"
#include "morse/random.hpp"

namespace morse {

namespace {

using FacetList = std::vector<std::vector<Vertex>>;

// All subsets of {first..last} of the given size, lexicographic.
FacetList subsets(Vertex first, Vertex last, std::size_t size) {
    FacetList out;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex next) -> void {
        if (cur.size() == size) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = next; v <= last; ++v) {
            if (static_cast<std::size_t>(last - v + 1) < size - cur.size()) break;
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, first);
    return out;
}

// Facets of sigma's stellar subdivision from `apex`.
void cone_over_boundary(const std::vector<Vertex>& sigma, Vertex apex, FacetList& out) {
    for (std::size_t skip = 0; skip < sigma.size(); ++skip) {
        std::vector<Vertex> f;
        for (std::size_t j = 0; j < sigma.size(); ++j)
            if (j != skip) f.push_back(sigma[j]);
        f.push_back(apex);
        out.push_back(std::move(f));
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

SimplicialComplex bipyramid() {
    return SimplicialComplex::from_facets({{1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}, {2, 3, 4}, {2, 3, 5}});
}

SimplicialComplex graph_A(int k) {
    require(k >= 1, "graph_A needs k >= 1");
    const auto uk = static_cast<Vertex>(k);
    FacetList edges = {{1, 2}, {1, 3}, {2, 3}};
    for (Vertex v = 3; v < uk + 3; ++v) edges.push_back({v, v + 1});
    edges.push_back({uk + 3, uk + 4});
    edges.push_back({uk + 3, uk + 5});
    edges.push_back({uk + 4, uk + 5});
    return SimplicialComplex::from_facets(edges);
}

SimplicialComplex bouquet_B(int k, int s) {
    require(k >= 1 && s >= 1, "bouquet_B needs k >= 1 and s >= 1");
    const SimplicialComplex copy = graph_A(k);
    const auto shift = static_cast<Vertex>(k + 4);
    FacetList facets;
    for (int j = 0; j < s; ++j) {
        for (const Face& f : copy.facets()) {
            std::vector<Vertex> g;
            for (Vertex v : f.vertices()) g.push_back(v == 1 ? 1 : v + static_cast<Vertex>(j) * shift);
            facets.push_back(std::move(g));
        }
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex complex_C(int d, int k) {
    require(d >= 1 && k >= 1, "complex_C needs d >= 1 and k >= 1");
    require((k - 1) % d == 0, "complex_C needs k = 1 mod d");
    const int stackings = (k - 1) / d;
    const auto ud = static_cast<Vertex>(d);

    std::vector<Vertex> central;
    for (Vertex v = 1; v <= ud + 1; ++v) central.push_back(v);
    Vertex next = ud + 2;

    FacetList facets;
    for (Vertex i = 0; i <= ud; ++i) {
        std::vector<Vertex> join;  // F_i plus the edge e_i
        for (Vertex v : central)
            if (v != i + 1) join.push_back(v);
        join.push_back(next++);
        join.push_back(next++);
        for (std::size_t skip = 0; skip < join.size(); ++skip) {
            std::vector<Vertex> f;
            for (std::size_t j = 0; j < join.size(); ++j)
                if (j != skip) f.push_back(join[j]);
            facets.push_back(std::move(f));
        }
    }

    std::deque<std::vector<Vertex>> region{central};
    for (int s = 0; s < stackings; ++s) {
        const std::vector<Vertex> sigma = region.front();
        region.pop_front();
        FacetList pieces;
        cone_over_boundary(sigma, next++, pieces);
        for (auto& p : pieces) region.push_back(std::move(p));
    }
    facets.insert(facets.end(), region.begin(), region.end());
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex stack_once(const SimplicialComplex& complex, const Face& facet) {
    const auto& facets = complex.facets();
    require(facet.dim() == complex.dimension() && std::binary_search(facets.begin(), facets.end(), facet),
            "stack_once needs a facet of top dimension");
    FacetList out;
    for (const Face& f : facets)
        if (f != facet) out.emplace_back(f.vertices().begin(), f.vertices().end());
    cone_over_boundary(std::vector<Vertex>(facet.vertices().begin(), facet.vertices().end()), complex.max_vertex() + 1, out);
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex simplex(int d) {
    require(d >= 0 && static_cast<std::size_t>(d) < kMaxFacetSize, "simplex dimension out of range");
    return SimplicialComplex::from_facets(subsets(1, static_cast<Vertex>(d) + 1, static_cast<std::size_t>(d) + 1));
}

SimplicialComplex boundary_of_simplex(int d) {
    require(d >= 1 && static_cast<std::size_t>(d) <= kMaxFacetSize, "boundary_of_simplex needs d >= 1");
    return SimplicialComplex::from_facets(subsets(1, static_cast<Vertex>(d) + 1, static_cast<std::size_t>(d)));
}

SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex) {
    require(apex != 0 && !complex.contains(std::array<Vertex, 1>{apex}), "cone apex must be a fresh positive id");
    FacetList out;
    for (const Face& f : complex.facets()) {
        std::vector<Vertex> g(f.vertices().begin(), f.vertices().end());
        g.push_back(apex);
        out.push_back(std::move(g));
    }
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
    require(complex.is_pure(), "boundary_complex needs a pure complex");
    const int d = complex.dimension();
    require(d >= 1, "a 0-dimensional complex has no boundary");
    const HasseDiagram hasse(complex);
    FacetList out;
    for (std::uint32_t i = 0; i < complex.num_faces(d - 1); ++i)
        if (hasse.up(d - 1, i).size() == 1) {
            const auto f = complex.face(d - 1, i);
            out.emplace_back(f.begin(), f.end());
        }
    require(!out.empty(), "complex has empty boundary");
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex cyclic_polytope_boundary(int d, int n) {
    require(d >= 2 && d % 2 == 0, "cyclic_polytope_boundary supports even d >= 2 only");
    require(n >= d + 1, "cyclic_polytope_boundary needs n >= d + 1");
    // For even d the Gale sets are exactly the unions of d/2 disjoint pairs
    // {i, i+1} taken cyclically (n and 1 are adjacent).
    const auto un = static_cast<Vertex>(n);
    std::set<std::vector<Vertex>> facets;
    std::vector<char> used(un + 1, 0);
    std::vector<Vertex> chosen;
    auto rec = [&](auto&& self, Vertex start, int pairs_left) -> void {
        if (pairs_left == 0) {
            std::vector<Vertex> f = chosen;
            std::sort(f.begin(), f.end());
            facets.insert(std::move(f));
            return;
        }
        for (Vertex i = start; i <= un; ++i) {
            const Vertex j = i == un ? 1 : i + 1;
            if (used[i] || used[j]) continue;
            used[i] = used[j] = 1;
            chosen.push_back(i);
            chosen.push_back(j);
            self(self, i + 1, pairs_left - 1);
            chosen.resize(chosen.size() - 2);
            used[i] = used[j] = 0;
        }
    };
    rec(rec, 1, d / 2);
    return SimplicialComplex::from_facets(FacetList(facets.begin(), facets.end()));
}

SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
    require(d >= 1 && static_cast<std::size_t>(d) + 2 <= kMaxFacetSize, "stacked_sphere dimension out of range");
    require(n >= d + 2, "stacked_sphere needs n >= d + 2");
    FacetList facets = subsets(1, static_cast<Vertex>(d) + 2, static_cast<std::size_t>(d) + 1);
    Random rng(seed);
    for (auto next = static_cast<Vertex>(d) + 3; next <= static_cast<Vertex>(n); ++next) {
        const auto idx = static_cast<std::size_t>(rng.below(facets.size()));
        const std::vector<Vertex> sigma = facets[idx];
        FacetList pieces;
        cone_over_boundary(sigma, next, pieces);
        facets[idx] = std::move(pieces.front());
        for (std::size_t j = 1; j < pieces.size(); ++j) facets.push_back(std::move(pieces[j]));
    }
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    require(complex.dimension() <= 8, "barycentric_subdivision supports dimension <= 8");
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (int d = 0; d <= complex.dimension(); ++d) {
        offset.push_back(total);
        total += complex.num_faces(d);
    }
    FacetList out;
    std::vector<Vertex> prefix;
    for (const Face& facet : complex.facets()) {
        std::vector<Vertex> order(facet.vertices().begin(), facet.vertices().end());
        // Each maximal chain ending at `facet` is a vertex ordering of it.
        do {
            std::vector<Vertex> flag;
            for (std::size_t j = 0; j < order.size(); ++j) {
                prefix.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(j + 1));
                std::sort(prefix.begin(), prefix.end());
                flag.push_back(static_cast<Vertex>(offset[j] + *complex.find(prefix) + 1));
            }
            out.push_back(std::move(flag));
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return SimplicialComplex::from_facets(out);
}

SimplicialComplex linial_meshulam(int n, double p, std::uint64_t seed) {
    require(n >= 3, "linial_meshulam needs n >= 3");
    require(p >= 0.0 && p <= 1.0, "linial_meshulam needs 0 <= p <= 1");
    const auto un = static_cast<Vertex>(n);
    FacetList facets = subsets(1, un, 2);
    Random rng(seed);
    for (auto& t : subsets(1, un, 3))
        if (rng.unit() < p) facets.push_back(std::move(t));
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex dunce_hat_8() {
    // Disk vertices 0..8 run around the boundary, 9..13 are interior. The
    // three sides 0-3, 3-6, 6-0 read a, a, a^-1 with a = (1, 2, 3, 1).
    static constexpr std::array<Vertex, 9> kBoundaryLabel = {1, 2, 3, 1, 2, 3, 1, 3, 2};
    static constexpr std::array<std::array<int, 3>, 17> kDisk = {{
        {2, 13, 3}, {11, 7, 10}, {13, 4, 3}, {9, 2, 13}, {9, 1, 2}, {8, 11, 0}, {8, 11, 7}, {13, 12, 9}, {13, 12, 4},
        {0, 9, 1}, {5, 12, 4}, {5, 12, 6}, {10, 9, 12}, {10, 6, 12}, {10, 6, 7}, {11, 9, 0}, {11, 9, 10},
    }};
    auto label = [](int x) { return x < 9 ? kBoundaryLabel[static_cast<std::size_t>(x)] : static_cast<Vertex>(x - 5); };
    FacetList facets;
    for (const auto& t : kDisk) facets.push_back({label(t[0]), label(t[1]), label(t[2])});
    return SimplicialComplex::from_facets(facets);
}

}  // namespace morse
