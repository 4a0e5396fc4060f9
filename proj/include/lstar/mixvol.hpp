#pragma once

// Normalized mixed volumes by inclusion-exclusion over Minkowski sums,
// and Bernstein's degeneracy criterion. Normalization: MV(P,...,P) equals
// the normalized volume of P.

#include "lstar/geom.hpp"

namespace lstar {

/// Mixed volume of k polytopes living in Z^k.
Int mixed_volume(const std::vector<LatticePolytope>& polytopes);

/// Mixed volume of k polytopes contained in the k-dimensional subspace
/// spanned by subspace_basis, re-coordinatized into that lattice first.
Int mixed_volume(const std::vector<LatticePolytope>& polytopes,
                 const std::vector<Vec>& subspace_basis);

/// True iff some subfamily S has dim(sum of S) < |S|; forces MV = 0.
bool bernstein_zero(const std::vector<LatticePolytope>& polytopes);

}  // namespace lstar
