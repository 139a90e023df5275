#pragma once

#include <cstdint>
#include <vector>

#include "morse/complex.hpp"
#include "morse/spectrum.hpp"

namespace morse {

/// Betti numbers over GF(2).
struct BettiVector {
    std::vector<std::size_t> values;

    std::size_t total() const;
    long long alternating_sum() const;
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// beta_i = f_i - rank d_i - rank d_{i+1} over GF(2), by sparse column
/// reduction of the boundary matrices. Throws BudgetExceeded when the complex
/// has more than `max_faces` faces.
BettiVector betti_gf2(const SimplicialComplex& complex, std::size_t max_faces = 2'000'000);

/// Necessary conditions on a discrete Morse vector: the alternating sum equals
/// the Euler characteristic and c_i >= beta_i for all i. Passing does not
/// mean the vector is attainable.
struct MorseCheck {
    bool euler_ok = false;
    bool inequalities_ok = false;
    std::vector<long long> slack;  // c_i - beta_i
    bool passed() const { return euler_ok && inequalities_ok; }
};

MorseCheck check_morse_output(const SimplicialComplex& complex, const MorseVector& v, const BettiVector& betti);
MorseCheck check_morse_output(const SimplicialComplex& complex, const MorseVector& v);

struct Components {
    std::size_t count = 0;
    // label[i] for the i-th vertex; components are numbered by their least vertex.
    std::vector<std::size_t> label;
};

Components connected_components(const SimplicialComplex& complex);

/// Edge-path presentation of the fundamental group. Generators are the
/// edges outside a BFS spanning tree, numbered 1.. in lexicographic edge
/// order. Each triangle a<b<c gives the word ab . bc . (ac)^-1 with tree edges
/// dropped; entries are +g or -g. No simplification is attempted.
struct GroupPresentation {
    std::size_t generators = 0;
    std::vector<std::vector<int>> relators;
    std::vector<std::uint32_t> generator_edges;  // edge index of generator g at g-1
};

/// BFS starts at the least vertex and visits neighbours in ascending order.
/// Throws std::invalid_argument for disconnected input.
GroupPresentation edge_path_presentation(const SimplicialComplex& complex);

}  // namespace morse
