#pragma once

// Gale duality for spanning point configurations, primal reconstruction,
// and Lawrence twists (extending the Gale transform by centrally
// symmetric vector pairs).

#include "lstar/geom.hpp"

namespace lstar {

/// Ordered configuration of n integer vectors in Z^rank that sum to zero
/// and span Z^rank as a lattice.
struct GaleConfiguration {
    std::size_t rank = 0;
    std::vector<Vec> vectors;

    IntMatrix matrix() const;  // rank x n, vectors as columns
    void validate() const;
};

/// True iff the homogenized configuration surjects onto Z^{d+1}.
bool is_spanning(const PointConfiguration& c);

/// Gale transform: the saturated kernel of the homogenized configuration,
/// read column-wise as a vector configuration.
GaleConfiguration gale_transform(const PointConfiguration& c);

/// Primal reconstruction: a spanning point configuration whose Gale
/// transform spans the same row lattice as g. The round-trip lattice
/// equality is verified before returning.
PointConfiguration gale_inverse(const GaleConfiguration& g);

/// Appends {s, -s} for each s in sym to the Gale transform of c and maps
/// back to the primal side; the result is a spanning configuration in
/// Z^{d+2k} whose hull is the Lawrence twist.
PointConfiguration lawrence_twist(const PointConfiguration& c, const std::vector<Vec>& sym);

}  // namespace lstar
