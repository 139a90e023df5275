#pragma once

#include <cstdint>

#include "morse/complex.hpp"

namespace morse {

/// Boundary of the bipyramid over the triangle 123 with apexes 4 and 5.
SimplicialComplex bipyramid();

/// Two triangles joined by a path of k edges: triangle {1,2,3}, path
/// 3, 4, ..., k+3, triangle {k+3, k+4, k+5}. k+5 vertices, k+6 edges.
SimplicialComplex graph_A(int k);

/// s copies of graph_A(k) glued at their least vertex (vertex 1); copy j > 0
/// shifts the other vertices by j*(k+4).
SimplicialComplex bouquet_B(int k, int s);

/// Central d-simplex S whose facets F_i each carry the boundary of the join
/// F_i * e_i with a fresh edge e_i; S is then stacked s = (k-1)/d times,
/// first-in first-out, so it is split into k simplices. Requires d >= 1,
/// k >= 1 and k = 1 mod d.
SimplicialComplex complex_C(int d, int k);

/// Replaces top-dimensional facet `facet` by the cone from a new vertex
/// (max id + 1) over its boundary. Throws std::invalid_argument if `facet`
/// is not a facet of top dimension.
SimplicialComplex stack_once(const SimplicialComplex& complex, const Face& facet);

/// Solid d-simplex on vertices 1..d+1.
SimplicialComplex simplex(int d);
/// Boundary of the d-simplex, a (d-1)-sphere with d+1 vertices.
SimplicialComplex boundary_of_simplex(int d);
/// Cone with the given apex, which must not be a vertex already.
SimplicialComplex cone(const SimplicialComplex& complex, Vertex apex);
/// Closure of the codimension-one faces lying in exactly one facet. Throws
/// std::invalid_argument for non-pure input or an empty boundary.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

/// Boundary of the cyclic d-polytope on n vertices (d even, n >= d+1);
/// facets are the d-subsets of 1..n satisfying Gale's evenness condition.
SimplicialComplex cyclic_polytope_boundary(int d, int n);

/// Stacked d-sphere: the boundary of the (d+1)-simplex stacked on
/// seed-chosen facets until it has n vertices. Facets: (d+2) + d(n-d-2).
SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed);

/// Order complex of the face poset; vertex i+1 is the i-th face in
/// (dimension, lexicographic) order.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// Complete graph on n vertices plus each triangle independently with
/// probability p. Requires n >= 3 and 0 <= p <= 1.
SimplicialComplex linial_meshulam(int n, double p, std::uint64_t seed);

/// 8-vertex, 17-triangle dunce hat: a triangle with boundary word a a a^-1,
/// each side split into three edges, interior filled by 5 vertices.
SimplicialComplex dunce_hat_8();

}  // namespace morse
