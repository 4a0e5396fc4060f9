#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"
#include "lstar/identities.hpp"

#include <doctest.h>

using namespace lstar;

namespace {

std::vector<Int> hvec(const LatticePolytope& p) {
    HStarData h = hstar(p);
    std::vector<Int> c(h.dim + 1);
    for (int i = 0; i <= h.dim; ++i) c[i] = h.hstar.coeff(i);
    return c;
}

// exact cyclic vertex order of a convex polygon, walking its edge graph
std::vector<std::size_t> polygon_cycle(const LatticePolytope& q, const FaceLattice& L) {
    std::size_t nv = q.vertices().size();
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t id : L.faces_of_dim(1)) {
        std::vector<std::size_t> vs;
        for (std::size_t i = 0; i < nv; ++i)
            if (L.face(id).vset & (1ull << i)) vs.push_back(i);
        adj[vs[0]].push_back(vs[1]);
        adj[vs[1]].push_back(vs[0]);
    }
    std::vector<std::size_t> cyc{0, adj[0][0]};
    while (cyc.size() < nv) {
        std::size_t cur = cyc.back(), prev = cyc[cyc.size() - 2];
        cyc.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
    }
    return cyc;
}

// normalized area (2 * Euclidean) of a polygon by the shoelace formula;
// independent of any lattice point counting
Int shoelace_nvol(const LatticePolytope& q) {
    REQUIRE(q.dim() == 2);
    FaceLattice L = face_lattice(q);
    auto cyc = polygon_cycle(q, L);
    Int s = 0;
    const auto& iv = q.intrinsic_vertices();
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const Vec& a = iv[cyc[i]];
        const Vec& b = iv[cyc[(i + 1) % cyc.size()]];
        s += a[0] * b[1] - b[0] * a[1];
    }
    return abs(s);
}

// boundary lattice points of a polygon: gcd sum over the edge cycle
Int boundary_points(const LatticePolytope& q) {
    FaceLattice L = face_lattice(q);
    auto cyc = polygon_cycle(q, L);
    Int s = 0;
    const auto& iv = q.intrinsic_vertices();
    for (std::size_t i = 0; i < cyc.size(); ++i)
        s += vec_gcd(vec_sub(iv[cyc[(i + 1) % cyc.size()]], iv[cyc[i]]));
    return s;
}

// 3D normalized volume via facet pyramids over a base vertex; uses only
// determinant-level data, no counting
Int pyramid_nvol_3d(const LatticePolytope& p) {
    REQUIRE(p.dim() == 3);
    const Vec& v0 = p.intrinsic_vertices()[0];
    Int total = 0;
    FaceLattice L = face_lattice(p);
    for (std::size_t id : L.faces_of_dim(2)) {
        // skip facets containing v0
        if (L.face(id).vset & 1ull) continue;
        LatticePolytope f = face_as_polytope(p, L.face(id));
        // primitive facet inequality in intrinsic coordinates of p
        for (const Facet& fac : p.intrinsic_facets()) {
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < p.vertices().size(); ++i)
                if (dot(fac.normal, p.intrinsic_vertices()[i]) == fac.offset) mask |= 1ull << i;
            if (mask == L.face(id).vset) {
                Int height = abs(fac.offset - dot(fac.normal, v0));
                total += shoelace_nvol(f) * height;
            }
        }
    }
    return total;
}

}  // namespace

TEST_CASE("h* of the standard examples") {
    for (int d = 1; d <= 6; ++d) {
        std::vector<Int> expect(d + 1);
        expect[0] = 1;
        CHECK(hvec(simplex(d)) == expect);
    }
    CHECK(hvec(dilate(simplex(2), 2)) == std::vector<Int>{1, 3, 0});
    CHECK(hvec(cube(3)) == std::vector<Int>{1, 4, 1, 0});
    CHECK(hvec(cross_polytope(3)) == std::vector<Int>{1, 3, 3, 1});
    CHECK(hvec(segment(0, 2)) == std::vector<Int>{1, 1});
}

TEST_CASE("h* data invariants") {
    HStarData h = hstar(dilate(simplex(2), 2));
    CHECK(h.dim == 2);
    CHECK(h.normalized_volume == 4);
    CHECK(h.degree == 1);

    HStarData hc = hstar(cube(4));
    CHECK(hc.normalized_volume == 24);
    CHECK(hc.degree == 3);
}

TEST_CASE("cube counts follow the closed form (k+1)^d") {
    for (int d = 2; d <= 4; ++d)
        for (int k = 1; k <= 3; ++k) {
            Int expect = 1;
            for (int i = 0; i < d; ++i) expect *= k + 1;
            CHECK(count_lattice_points(cube(d), k, false) == expect);
        }
}

TEST_CASE("Pick's theorem agrees with the scan on random polygons") {
    Rng rng(7);
    for (int t = 0; t < 25; ++t) {
        LatticePolytope p = random_polytope(2, 5, 7, rng);
        Int A2 = shoelace_nvol(p);
        Int B = boundary_points(p);
        // L(1) = A + B/2 + 1, doubled to stay integral
        CHECK(2 * count_lattice_points(p, 1, false) == A2 + B + 2);
        CHECK(hstar(p).normalized_volume == A2);
    }
}

TEST_CASE("3D volumes agree with the facet-pyramid determinant oracle") {
    Rng rng(51);
    for (int t = 0; t < 15; ++t) {
        LatticePolytope p = random_polytope(3, 4, 7, rng);
        CHECK(hstar(p).normalized_volume == pyramid_nvol_3d(p));
    }
    CHECK(pyramid_nvol_3d(cube(3)) == 6);
}

TEST_CASE("normalized volume of the circuit triangle") {
    CHECK(normalized_volume(circuit({1, 1, 1, -3}).polytope) == 3);
    CHECK(normalized_volume(simplex(4)) == 1);
}

TEST_CASE("Ehrhart reciprocity on random polytopes") {
    Rng rng(63);
    for (int t = 0; t < 15; ++t) {
        int d = 1 + t % 3;
        LatticePolytope p = random_polytope(d, 3, d + 4, rng);
        HStarData h = hstar(p);
        for (int k = 1; k <= 2; ++k) {
            Int lhs = count_lattice_points(p, k, true);
            Int rhs = ehrhart_eval(h, -Int(k));
            if (d % 2 != 0) rhs = -rhs;
            CHECK(lhs == rhs);
        }
        CHECK(ehrhart_eval(h, 2) == count_lattice_points(p, 2, false));
        CHECK(h.hstar.coeff(1) == count_lattice_points(p, 1, false) - (d + 1));
    }
}

TEST_CASE("interior counts of the named 3-polytopes") {
    InteriorCounts3D c = interior_counts_3d(cube(3));
    CHECK(c.vertices == 8);
    CHECK(c.edge_interior == 0);
    CHECK(c.facet_interior == 0);
    CHECK(c.interior == 0);
    CHECK(c.interior_2p == 1);

    InteriorCounts3D x = interior_counts_3d(cross_polytope(3));
    CHECK(x.vertices == 6);
    CHECK(x.edge_interior == 0);
    CHECK(x.facet_interior == 0);
    CHECK(x.interior == 1);
    CHECK(x.interior_2p == 7);

    // 2*simplex(3): each of the six edges has one interior lattice point
    InteriorCounts3D s = interior_counts_3d(dilate(simplex(3), 2));
    CHECK(s.vertices == 4);
    CHECK(s.edge_interior == 6);
    CHECK(s.facet_interior == 0);
    CHECK(s.interior == 0);
    CHECK(s.interior_2p == 1);

    CHECK_THROWS_AS(interior_counts_3d(cube(2)), std::invalid_argument);
}

TEST_CASE("dimension-3 diagonal identity for the first coefficient") {
    Rng rng(17);
    for (int t = 0; t < 10; ++t) {
        LatticePolytope p = random_polytope(3, 3, 7, rng);
        InteriorCounts3D c = interior_counts_3d(p);
        Int lhs = count_lattice_points(p, 1, false) - 4;
        CHECK(lhs == (c.vertices + c.edge_interior - 4) + c.facet_interior + c.interior);
    }
}
