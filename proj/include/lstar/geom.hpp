#pragma once

// Exact polyhedral geometry for lattice polytopes of dimension <= 7:
// convex hulls, facet systems, face lattices, lattice projections and
// re-coordinatization of faces, and box-scan lattice point counting.

#include "lstar/budget.hpp"
#include "lstar/intlin.hpp"

#include <cstdint>
#include <vector>

namespace lstar {

/// Ordered list of lattice points; repeats are allowed and meaningful
/// (Gale duality is order-sensitive and double points matter).
struct PointConfiguration {
    std::size_t ambient_dim = 0;
    std::vector<Vec> points;

    void validate() const;
};

/// Inequality normal * x <= offset with primitive normal.
struct Facet {
    Vec normal;
    Int offset;
};

/// Equation normal * x == value, valid on the affine span.
struct SpanEquation {
    Vec normal;
    Int value;
};

/// A lattice polytope, stored both in ambient coordinates and in an
/// intrinsic lattice coordinate system of its affine span. Vertices are
/// lex-sorted; intrinsic vertex i matches ambient vertex i. The intrinsic
/// model is y -> base + basis^T y with `basis` a saturated lattice basis
/// of (aff(P) - base) intersected with Z^ambient.
class LatticePolytope {
public:
    std::size_t ambient_dim() const { return ambient_dim_; }
    int dim() const { return dim_; }
    const std::vector<Vec>& vertices() const { return vertices_; }
    const std::vector<Vec>& intrinsic_vertices() const { return ivertices_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const std::vector<Facet>& intrinsic_facets() const { return ifacets_; }
    const std::vector<SpanEquation>& span_equations() const { return equations_; }
    const Vec& base() const { return base_; }
    const IntMatrix& lattice_basis() const { return basis_; }

    /// Intrinsic coordinates of an ambient point of the affine lattice.
    Vec to_intrinsic(const Vec& ambient_point) const;

    bool contains(const Vec& ambient_point) const;

    friend LatticePolytope hull(const PointConfiguration& config);

private:
    std::size_t ambient_dim_ = 0;
    int dim_ = -1;
    std::vector<Vec> vertices_;
    std::vector<Vec> ivertices_;
    std::vector<Facet> facets_;    // ambient representation
    std::vector<Facet> ifacets_;   // intrinsic representation
    std::vector<SpanEquation> equations_;
    Vec base_;
    IntMatrix basis_;  // dim x ambient
};

/// Convex hull with complete irredundant facet system.
LatticePolytope hull(const PointConfiguration& config);
LatticePolytope hull(std::vector<Vec> points);

/// One face of a polytope: the set of incident vertices (bitmask over the
/// polytope's sorted vertex list) and its dimension (-1 for the empty face).
struct Face {
    std::uint64_t vset = 0;
    int dim = -1;
};

/// The full graded face poset, empty face and the polytope included,
/// sorted by (dim, vertex set). Order relation is vertex-set inclusion.
class FaceLattice {
public:
    FaceLattice(std::vector<Face> faces, std::size_t n_vertices, int top_dim);

    std::size_t size() const { return faces_.size(); }
    const Face& face(std::size_t id) const { return faces_[id]; }
    std::size_t bottom() const { return 0; }
    std::size_t top() const { return faces_.size() - 1; }
    std::size_t n_vertices() const { return n_vertices_; }

    /// rank in the graded poset: dim + 1
    int rank(std::size_t id) const { return faces_[id].dim + 1; }
    bool leq(std::size_t a, std::size_t b) const {
        return (faces_[a].vset & ~faces_[b].vset) == 0;
    }

    /// number of faces of each rank 0 .. dim(P)+1
    std::vector<std::size_t> rank_profile() const;

    std::vector<std::size_t> faces_of_dim(int d) const;

private:
    std::vector<Face> faces_;
    std::size_t n_vertices_;
    int top_dim_;
};

FaceLattice face_lattice(const LatticePolytope& p);

/// A nonempty face as a full-dimensional lattice polytope in the lattice
/// of its own affine span.
LatticePolytope face_as_polytope(const LatticePolytope& p, const Face& f);

/// Image of p in the quotient lattice Z^d / saturation(span(subspace_basis)).
LatticePolytope project_along(const LatticePolytope& p, const std::vector<Vec>& subspace_basis);

/// Exact number of lattice points of dilate * p, strict inequalities when
/// interior_only. Counting is intrinsic to the affine span. Throws
/// budget_error when the scan box exceeds the cell budget.
Int count_lattice_points(const LatticePolytope& p, const Int& dilate, bool interior_only);

}  // namespace lstar
