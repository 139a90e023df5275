#include "morse/topology.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "morse/hasse.hpp"

namespace morse {

std::size_t BettiVector::total() const { return std::accumulate(values.begin(), values.end(), std::size_t{0}); }

long long BettiVector::alternating_sum() const {
    long long s = 0;
    for (std::size_t i = 0; i < values.size(); ++i) s += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(values[i]);
    return s;
}

namespace {

// Rank over GF(2) of the boundary map from dim-faces to (dim-1)-faces.
// Columns are sorted index lists; reduction keeps a pivot -> column table and
// adds columns (symmetric difference) until the lowest entry is unclaimed.
std::size_t boundary_rank(const HasseDiagram& h, int dim) {
    if (dim <= 0 || dim > h.dimension()) return 0;
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> pivots;
    std::size_t rank = 0;
    std::vector<std::uint32_t> column;
    std::vector<std::uint32_t> scratch;
    for (std::uint32_t j = 0; j < h.num_faces(dim); ++j) {
        const auto down = h.down(dim, j);
        column.assign(down.begin(), down.end());
        while (!column.empty()) {
            const auto it = pivots.find(column.back());
            if (it == pivots.end()) break;
            scratch.clear();
            std::set_symmetric_difference(column.begin(), column.end(), it->second.begin(), it->second.end(),
                                          std::back_inserter(scratch));
            column.swap(scratch);
        }
        if (!column.empty()) {
            const std::uint32_t low = column.back();
            pivots.emplace(low, column);
            ++rank;
        }
    }
    return rank;
}

}  // namespace

BettiVector betti_gf2(const SimplicialComplex& complex, std::size_t max_faces) {
    if (complex.total_faces() > max_faces)
        throw BudgetExceeded("Betti numbers need at most " + std::to_string(max_faces) + " faces");
    const HasseDiagram h(complex);
    const int top = complex.dimension();
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) ranks[static_cast<std::size_t>(d)] = boundary_rank(h, d);
    BettiVector b;
    for (int d = 0; d <= top; ++d)
        b.values.push_back(complex.num_faces(d) - ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d) + 1]);
    return b;
}

MorseCheck check_morse_output(const SimplicialComplex& complex, const MorseVector& v, const BettiVector& betti) {
    MorseCheck check;
    check.euler_ok = v.alternating_sum() == complex.euler_characteristic();
    check.inequalities_ok = v.size() == betti.values.size();
    const std::size_t n = std::max(v.size(), betti.values.size());
    for (std::size_t i = 0; i < n; ++i) {
        const long long c = i < v.size() ? static_cast<long long>(v[i]) : 0;
        const long long b = i < betti.values.size() ? static_cast<long long>(betti.values[i]) : 0;
        check.slack.push_back(c - b);
        if (c < b) check.inequalities_ok = false;
    }
    return check;
}

MorseCheck check_morse_output(const SimplicialComplex& complex, const MorseVector& v) {
    return check_morse_output(complex, v, betti_gf2(complex));
}

Components connected_components(const SimplicialComplex& complex) {
    const std::size_t n = complex.num_faces(0);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t e = 0; e < complex.num_faces(1); ++e) {
        const auto f = complex.face(1, e);
        const std::size_t a = find(*complex.find(f.first(1)));
        const std::size_t b = find(*complex.find(f.last(1)));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    Components c;
    c.label.resize(n);
    std::vector<std::size_t> id(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        const std::size_t root = find(v);
        if (id[root] == n) id[root] = c.count++;
        c.label[v] = id[root];
    }
    return c;
}

GroupPresentation edge_path_presentation(const SimplicialComplex& complex) {
    if (connected_components(complex).count != 1)
        throw std::invalid_argument("edge_path_presentation needs a connected complex");
    const HasseDiagram h(complex);
    const std::size_t edges = complex.num_faces(1);

    std::vector<char> tree(edges, 0);
    std::vector<char> seen(complex.num_faces(0), 0);
    std::queue<std::uint32_t> queue;
    queue.push(0);
    seen[0] = 1;
    while (!queue.empty()) {
        const std::uint32_t u = queue.front();
        queue.pop();
        // Edges at u ascend lexicographically, and so do their far ends.
        for (std::uint32_t e : h.up(0, u)) {
            const auto ends = h.down(1, e);
            const std::uint32_t w = ends[0] == u ? ends[1] : ends[0];
            if (seen[w]) continue;
            seen[w] = 1;
            tree[e] = 1;
            queue.push(w);
        }
    }

    GroupPresentation p;
    std::vector<int> generator_of(edges, 0);
    for (std::uint32_t e = 0; e < edges; ++e)
        if (!tree[e]) {
            generator_of[e] = static_cast<int>(++p.generators);
            p.generator_edges.push_back(e);
        }

    for (std::uint32_t t = 0; t < complex.num_faces(2); ++t) {
        const auto tri = complex.face(2, t);
        const std::array<Vertex, 2> ab{tri[0], tri[1]};
        const std::array<Vertex, 2> bc{tri[1], tri[2]};
        const std::array<Vertex, 2> ac{tri[0], tri[2]};
        std::vector<int> word;
        if (int g = generator_of[*complex.find(ab)]) word.push_back(g);
        if (int g = generator_of[*complex.find(bc)]) word.push_back(g);
        if (int g = generator_of[*complex.find(ac)]) word.push_back(-g);
        p.relators.push_back(std::move(word));
    }
    return p;
}

}  // namespace morse
