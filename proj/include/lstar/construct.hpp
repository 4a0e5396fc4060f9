#pragma once

// Polytope constructions: Cayley polytopes, free joins, lattice pyramids,
// Minkowski sums, dilations, circuits, and the standard generators.

#include "lstar/geom.hpp"

namespace lstar {

enum class CayleyEmbedding { standard, reduced };

/// Cayley polytope of P_1, ..., P_m in a common Z^d.
/// standard: conv(P_i x {e_i}) in Z^{d+m};
/// reduced:  conv(P_1 x {0}, P_i x {e_{i-1}}) in Z^{d+m-1}.
/// The dimension law dim = dim(P_1 + ... + P_m) + m - 1 is asserted.
LatticePolytope cayley(const std::vector<LatticePolytope>& polytopes,
                       CayleyEmbedding embedding = CayleyEmbedding::reduced);

/// conv(P x 0 x 0, 0 x Q x 1); dim = dim P + dim Q + 1.
LatticePolytope free_join(const LatticePolytope& p, const LatticePolytope& q);

/// conv(P x {0}, e_new).
LatticePolytope pyramid(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q);
LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps);
LatticePolytope dilate(const LatticePolytope& p, const Int& k);

/// Dimension of a Minkowski sum without building it: rank of the combined
/// edge-direction space.
std::size_t minkowski_dim(const std::vector<LatticePolytope>& ps);

/// The circuit defined by an integer tuple gamma of length d+2 with
/// gcd 1, zero sum and no zero entries: the image of the unimodular
/// simplex Delta_{d+1} under the lattice quotient along the dependence
/// direction, as a point configuration a_1..a_{d+2} with
/// sum gamma_i a_i = 0, together with its convex hull.
struct Circuit {
    PointConfiguration config;
    LatticePolytope polytope;
};

Circuit circuit(const std::vector<Int>& gamma);

LatticePolytope simplex(int d);
LatticePolytope segment(const Int& a, const Int& b);
LatticePolytope cube(int d);
LatticePolytope cross_polytope(int d);

/// The thin 4-simplex family S^(N), N even >= 2, with vertex columns
/// (N/2,0,0,0), (0,0,0,0), (0,1,0,1), (0,-1,0,1), (-1,1,2,1).
LatticePolytope sN_simplex(const Int& N);

}  // namespace lstar
