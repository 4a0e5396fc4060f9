#pragma once

// h*-vectors from dilate counting and the binomial transform, normalized
// volumes, degrees, and the five interior counts of a 3-polytope.

#include "lstar/geom.hpp"
#include "lstar/polynomial.hpp"

namespace lstar {

struct HStarData {
    IntPolynomial hstar;
    int dim = 0;
    Int normalized_volume;
    int degree = 0;
};

/// h*-polynomial of p, computed intrinsically. Checks nonnegativity,
/// constant term 1 and the interior-point identity h*_dim = i*(P) before
/// returning.
HStarData hstar(const LatticePolytope& p);

/// d! times the Euclidean volume; the coefficient sum of h*.
Int normalized_volume(const LatticePolytope& p);

/// Ehrhart count L(m) evaluated from h* data; valid for any integer m,
/// negative arguments included (reciprocity).
Int ehrhart_eval(const HStarData& h, const Int& m);

struct InteriorCounts3D {
    Int vertices;        // v*
    Int edge_interior;   // e*
    Int facet_interior;  // f*
    Int interior;        // i*
    Int interior_2p;     // (2i)*
};

InteriorCounts3D interior_counts_3d(const LatticePolytope& p);

}  // namespace lstar
