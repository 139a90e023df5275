#pragma once

// Deliberately naive re-implementations used as test oracles. None of these
// share code with the library beyond the SimplicialComplex accessors.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "morse/complex.hpp"

namespace oracle {

using Simplex = std::vector<morse::Vertex>;

// All nonempty faces of the given facets, by brute-force subset enumeration.
inline std::vector<std::set<Simplex>> closure(const std::vector<Simplex>& facets) {
    std::vector<std::set<Simplex>> faces;
    for (const Simplex& f : facets) {
        Simplex s = f;
        std::sort(s.begin(), s.end());
        const std::size_t n = s.size();
        if (faces.size() < n) faces.resize(n);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
            Simplex sub;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) sub.push_back(s[i]);
            faces[sub.size() - 1].insert(sub);
        }
    }
    return faces;
}

inline std::vector<Simplex> faces_of(const morse::SimplicialComplex& c, int dim) {
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < c.num_faces(dim); ++i) {
        const auto f = c.face(dim, i);
        out.emplace_back(f.begin(), f.end());
    }
    return out;
}

// Rank over GF(2) by dense Gaussian elimination on rows of bytes.
inline std::size_t rank_gf2(std::vector<std::vector<std::uint8_t>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t k = c; k < cols; ++k) rows[r][k] ^= rows[rank][k];
        ++rank;
    }
    return rank;
}

// Betti numbers over GF(2) from dense boundary matrices built off the closure.
inline std::vector<std::size_t> betti_dense(const std::vector<Simplex>& facets) {
    const auto faces = closure(facets);
    const std::size_t top = faces.size();
    std::vector<std::vector<Simplex>> lists(top);
    for (std::size_t d = 0; d < top; ++d) lists[d].assign(faces[d].begin(), faces[d].end());
    std::vector<std::size_t> rank(top + 1, 0);  // rank[d] = rank of boundary from d-chains
    for (std::size_t d = 1; d < top; ++d) {
        std::vector<std::vector<std::uint8_t>> m(lists[d].size(), std::vector<std::uint8_t>(lists[d - 1].size(), 0));
        for (std::size_t i = 0; i < lists[d].size(); ++i)
            for (std::size_t skip = 0; skip <= d; ++skip) {
                Simplex sub = lists[d][i];
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
                const auto it = std::lower_bound(lists[d - 1].begin(), lists[d - 1].end(), sub);
                m[i][static_cast<std::size_t>(it - lists[d - 1].begin())] = 1;
            }
        rank[d] = rank_gf2(std::move(m));
    }
    std::vector<std::size_t> betti(top);
    for (std::size_t d = 0; d < top; ++d) betti[d] = lists[d].size() - rank[d] - rank[d + 1];
    return betti;
}

// Facets of the boundary of the cyclic d-polytope on n vertices: d-subsets of
// {1..n} such that between any two non-members an even number of members lie.
inline std::set<Simplex> gale_facets(int d, int n) {
    std::set<Simplex> out;
    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.end() - d, pick.end(), 1);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            for (int j = i + 1; j < n && ok; ++j) {
                if (pick[static_cast<std::size_t>(i)] || pick[static_cast<std::size_t>(j)]) continue;
                int between = 0;
                for (int k = i + 1; k < j; ++k) between += pick[static_cast<std::size_t>(k)];
                ok = between % 2 == 0;
            }
        if (ok) {
            Simplex s;
            for (int i = 0; i < n; ++i)
                if (pick[static_cast<std::size_t>(i)]) s.push_back(static_cast<morse::Vertex>(i + 1));
            out.insert(s);
        }
    } while (std::next_permutation(pick.begin(), pick.end()));
    return out;
}

// Number of strictly increasing chains of length k in the face poset, i.e.
// the (k-1)-faces of the barycentric subdivision, by dynamic programming.
inline std::vector<std::size_t> chain_counts(const std::vector<Simplex>& facets) {
    const auto faces = closure(facets);
    std::vector<Simplex> all;
    for (const auto& level : faces) all.insert(all.end(), level.begin(), level.end());
    std::sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) { return a.size() < b.size(); });
    const std::size_t n = all.size();
    // ending[i][k]: chains of length k+1 ending at face i
    std::vector<std::vector<std::size_t>> ending(n, std::vector<std::size_t>(faces.size(), 0));
    for (std::size_t i = 0; i < n; ++i) {
        ending[i][0] = 1;
        for (std::size_t j = 0; j < i; ++j) {
            if (all[j].size() >= all[i].size()) continue;
            if (!std::includes(all[i].begin(), all[i].end(), all[j].begin(), all[j].end())) continue;
            for (std::size_t k = 0; k + 1 < faces.size(); ++k) ending[i][k + 1] += ending[j][k];
        }
    }
    std::vector<std::size_t> f(faces.size(), 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < faces.size(); ++k) f[k] += ending[i][k];
    return f;
}

// Connected graph on n vertices: random spanning tree plus extra random edges.
inline std::vector<Simplex> random_connected_graph(int n, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<Simplex> edges;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        const auto u = static_cast<morse::Vertex>(pick(rng));
        edges.insert({u, static_cast<morse::Vertex>(v)});
    }
    std::uniform_int_distribution<int> any(1, n);
    const int max_edges = n * (n - 1) / 2;
    for (int tries = 0; tries < extra * 20 && static_cast<int>(edges.size()) < std::min(max_edges, n - 1 + extra); ++tries) {
        auto a = static_cast<morse::Vertex>(any(rng));
        auto b = static_cast<morse::Vertex>(any(rng));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
    }
    return {edges.begin(), edges.end()};
}

}  // namespace oracle
