#include "lstar/construct.hpp"
#include "lstar/identities.hpp"
#include "lstar/localh.hpp"

#include <doctest.h>

using namespace lstar;

namespace {

std::vector<Vec> pts(const std::vector<std::vector<int>>& rows) {
    std::vector<Vec> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

IntPolynomial g_full(const LatticePolytope& p) {
    FaceLattice L = face_lattice(p);
    return toric_g(L, L.bottom(), L.top());
}

std::vector<Int> ints(const std::vector<int>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("toric g of Boolean lattices is 1") {
    for (int d = 1; d <= 5; ++d) CHECK(g_full(simplex(d)) == IntPolynomial::constant(1));
}

TEST_CASE("toric g of polygons is 1 + (m-3) t") {
    std::vector<LatticePolytope> gons = {
        simplex(2),
        cube(2),
        hull(pts({{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}})),
        hull(pts({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})),
    };
    for (std::size_t m = 3; m <= 6; ++m) {
        IntPolynomial expect(std::vector<Int>{1, Int(m) - 3});
        CHECK(g_full(gons[m - 3]) == expect);
    }
}

TEST_CASE("toric g of the cube and the octahedron") {
    CHECK(g_full(cube(3)) == IntPolynomial(std::vector<Int>{1, 4}));
    CHECK(g_full(cross_polytope(3)) == IntPolynomial(std::vector<Int>{1, 2}));
}

TEST_CASE("toric g over vertex intervals recovers lower g-polynomials") {
    FaceLattice L = face_lattice(cube(3));
    // interval [vertex, cube] is the face lattice of a triangle: g = 1
    std::size_t v = L.faces_of_dim(0)[0];
    CHECK(toric_g(L, v, L.top()) == IntPolynomial::constant(1));
    CHECK_THROWS_AS(toric_g(L, L.top(), v), std::invalid_argument);
}

TEST_CASE("local h* of the standard examples") {
    for (int d = 1; d <= 5; ++d) CHECK(local_hstar(simplex(d)).lstar == std::vector<Int>(d, 0));
    CHECK(local_hstar(segment(0, 2)).lstar == ints({1}));
    CHECK(local_hstar(cube(3)).lstar == ints({0, 1, 0}));
    CHECK(local_hstar(cross_polytope(3)).lstar == ints({1, 3, 1}));
    CHECK(local_hstar(dilate(simplex(2), 3)).lstar == ints({1, 1}));
    CHECK(local_hstar(dilate(simplex(2), 2)).lstar == ints({0, 0}));
    CHECK(local_hstar(dilate(simplex(3), 2)).lstar == ints({0, 1, 0}));
}

TEST_CASE("local h* vanishes on lattice pyramids") {
    Rng rng(8);
    for (int t = 0; t < 8; ++t) {
        LatticePolytope p = random_polytope(1 + t % 3, 3, 6, rng);
        LatticePolytope pyr = pyramid(p);
        CHECK(local_hstar(pyr).hodge.empty());
        CHECK(hstar(pyr).hstar == hstar(p).hstar);
    }
}

TEST_CASE("hodge vector trimming") {
    CHECK(hodge_vector(ints({0, 0, 1, 0, 3, 0, 1, 0, 0})) == ints({1, 0, 3, 0, 1}));
    CHECK(hodge_vector(ints({0, 0, 0})).empty());
    CHECK(hodge_vector(ints({1})) == ints({1}));
    CHECK(hodge_vector({}).empty());
}

TEST_CASE("thinness predicates") {
    ThinnessFlags f = predicates(dilate(simplex(2), 2));
    CHECK(f.thin);
    CHECK(f.trivially_thin);
    CHECK(!f.nearly_thin);

    ThinnessFlags g = predicates(segment(0, 2));
    CHECK(!g.thin);
    CHECK(!g.trivially_thin);
    CHECK(g.nearly_thin);

    ThinnessFlags h = predicates(dilate(simplex(3), 2));
    CHECK(h.nearly_thin);
    CHECK(!h.thin);

    ThinnessFlags c = predicates(cross_polytope(3));
    CHECK(!c.thin);
    CHECK(!c.nearly_thin);
}

TEST_CASE("diamond of the named 3-polytopes") {
    HStarDiamond3D d = diamond_3d(cube(3));
    CHECK(d.h00 == 4);
    CHECK(d.h10 == 0);
    CHECK(d.h20 == 0);
    CHECK(d.h11 == 1);

    HStarDiamond3D x = diamond_3d(cross_polytope(3));
    CHECK(x.h00 == 2);
    CHECK(x.h10 == 0);
    CHECK(x.h20 == 1);
    CHECK(x.h11 == 3);

    HStarDiamond3D s = diamond_3d(dilate(simplex(3), 2));
    CHECK(s.h00 == 6);
    CHECK(s.h10 == 0);
    CHECK(s.h20 == 0);
    CHECK(s.h11 == 1);

    CHECK_THROWS_AS(diamond_3d(cube(2)), std::invalid_argument);
}

TEST_CASE("recursion equals the closed 3D table on random instances") {
    Rng rng(5150);
    for (int t = 0; t < 20; ++t) {
        LatticePolytope p = random_polytope(3, 4, 4 + rng.below(7), rng);
        CHECK(local_hstar(p).lstar == diamond_3d(p).middle_row());
    }
}

TEST_CASE("3D diagonal identity between h* and the diamond") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        LatticePolytope p = random_polytope(3, 3, 7, rng);
        HStarData h = hstar(p);
        HStarDiamond3D d = diamond_3d(p);
        CHECK(h.hstar.coeff(1) == d.h00 + d.h01 + d.h02);
        CHECK(h.hstar.coeff(2) == d.h10 + d.h11);
        CHECK(h.hstar.coeff(3) == d.h20);
    }
}

TEST_CASE("free joins are multiplicative for h* and local h*") {
    LatticePolytope j = free_join(segment(0, 2), segment(0, 2));
    CHECK(j.dim() == 3);
    CHECK(hstar(j).hstar == IntPolynomial(ints({1, 2, 1})));
    CHECK(local_hstar(j).lstar == ints({0, 1, 0}));

    Rng rng(88);
    for (int t = 0; t < 6; ++t) {
        LatticePolytope p = random_polytope(1 + t % 2, 3, 4, rng);
        LatticePolytope q = random_polytope(2, 2, 5, rng);
        LatticePolytope pj = free_join(p, q);
        CHECK(hstar(pj).hstar == hstar(p).hstar * hstar(q).hstar);
        CHECK(local_hstar(pj).polynomial() ==
              local_hstar(p).polynomial() * local_hstar(q).polynomial());
    }
}

TEST_CASE("local h* of a point is empty") {
    LatticePolytope pt = hull(pts({{3, 1}}));
    LocalHStar l = local_hstar(pt);
    CHECK(l.dim == 0);
    CHECK(l.lstar.empty());
    CHECK(l.hodge.empty());
}
