#pragma once

// Local Ehrhart theory: Stanley's toric g-polynomial on face-lattice
// intervals, the local h*-vector via the face-poset recursion, Hodge
// vectors, thinness predicates, and the closed 3D h*-diamond.

#include "lstar/ehrhart.hpp"

#include <map>

namespace lstar {

struct LocalHStar {
    std::vector<Int> lstar;  // (l*_1, ..., l*_d)
    std::vector<Int> hodge;  // lstar without leading/trailing zeros
    int dim = 0;

    IntPolynomial polynomial() const;  // sum l*_i t^i
};

/// l*-vector with leading and trailing zeros removed; empty when l* = 0.
std::vector<Int> hodge_vector(const std::vector<Int>& lstar);

/// Toric g-polynomial of the interval [bottom, top] of a face lattice,
/// ordered with `bottom` as the bottom element. Boolean intervals give 1.
IntPolynomial toric_g(const FaceLattice& lattice, std::size_t bottom, std::size_t top);

/// g([bottom, x]) for every x above bottom, in one upward pass.
std::map<std::size_t, IntPolynomial> toric_g_above(const FaceLattice& lattice, std::size_t bottom);

/// Local h*-vector by the triangular face-poset recursion
///   l*(P) = h*(P) - sum over proper faces F (empty face included) of
///           l*(F) * g([F, P]),
/// with l*(empty) = 1 and h* of each face computed intrinsically.
/// Palindromicity, nonnegativity and the interior-count identity are
/// verified before returning.
LocalHStar local_hstar(const LatticePolytope& p);

struct ThinnessFlags {
    bool thin = false;            // l* = 0
    bool trivially_thin = false;  // dim >= 2 * degree
    bool nearly_thin = false;     // hodge = (1)
};

ThinnessFlags predicates(const LatticePolytope& p);

/// The six entries of the h*-diamond of a 3-polytope, from the closed
/// combinatorial expressions in the interior counts.
struct HStarDiamond3D {
    Int h00, h10, h01, h20, h11, h02;

    std::vector<Int> middle_row() const { return {h20, h11, h02}; }
};

HStarDiamond3D diamond_3d(const LatticePolytope& p);

}  // namespace lstar
