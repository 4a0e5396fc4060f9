#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"
#include "lstar/gale.hpp"
#include "lstar/identities.hpp"
#include "lstar/localh.hpp"

#include <doctest.h>

#include <set>

using namespace lstar;

namespace {

std::vector<Vec> pts(const std::vector<std::vector<int>>& rows) {
    std::vector<Vec> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

std::vector<Int> ints(const std::vector<int>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("cayley of a single polytope is the polytope") {
    LatticePolytope p = dilate(simplex(2), 2);
    LatticePolytope c = cayley({p});
    CHECK(c.vertices() == p.vertices());
}

TEST_CASE("cayley of the square with itself is the cube") {
    LatticePolytope c = cayley({cube(2), cube(2)});
    CHECK(c.dim() == 3);
    CHECK(c.vertices().size() == 8);
    CHECK(hstar(c).hstar == hstar(cube(3)).hstar);
}

TEST_CASE("the wedge over the interval and twice the triangle") {
    LatticePolytope seg01 = hull(pts({{0, 0}, {1, 0}}));
    LatticePolytope w = cayley({seg01, dilate(simplex(2), 2)});
    CHECK(w.dim() == 3);
    CHECK(hstar(w).hstar == IntPolynomial(ints({1, 4, 1})));
    CHECK(hstar(w).normalized_volume == 6);
}

TEST_CASE("standard and reduced embeddings carry the same invariants") {
    Rng rng(3);
    for (int t = 0; t < 6; ++t) {
        std::vector<LatticePolytope> ps;
        int m = 2 + t % 2;
        for (int i = 0; i < m; ++i) ps.push_back(random_polytope(2, 2, 4, rng));
        LatticePolytope a = cayley(ps, CayleyEmbedding::standard);
        LatticePolytope b = cayley(ps, CayleyEmbedding::reduced);
        CHECK(a.dim() == b.dim());
        CHECK(a.ambient_dim() == b.ambient_dim() + 1);
        CHECK(hstar(a).hstar == hstar(b).hstar);
        CHECK(face_lattice(a).rank_profile() == face_lattice(b).rank_profile());
    }
}

TEST_CASE("cayley degree bound") {
    Rng rng(12);
    for (int t = 0; t < 8; ++t) {
        std::vector<LatticePolytope> ps;
        int m = 2 + t % 2;
        for (int i = 0; i < m; ++i) ps.push_back(random_polytope(2, 2, 4, rng));
        CHECK(hstar(cayley(ps)).degree <= static_cast<int>(minkowski_dim(ps)));
    }
    CHECK_THROWS_AS(cayley({}), std::invalid_argument);
    CHECK_THROWS_AS(cayley({cube(2), cube(3)}), std::invalid_argument);
}

TEST_CASE("free join basics") {
    LatticePolytope j = free_join(hull(pts({{0}})), hull(pts({{0}})));
    CHECK(j.dim() == 1);
    CHECK(normalized_volume(j) == 1);

    LatticePolytope p = dilate(simplex(2), 2);
    LatticePolytope jp = free_join(p, hull(pts({{0}})));
    LatticePolytope pyr = pyramid(p);
    CHECK(jp.dim() == pyr.dim());
    CHECK(hstar(jp).hstar == hstar(pyr).hstar);
    CHECK(local_hstar(jp).hodge.empty());
}

TEST_CASE("pyramid towers give simplices") {
    LatticePolytope p = hull(pts({{0}}));
    for (int d = 1; d <= 4; ++d) {
        p = pyramid(p);
        CHECK(p.dim() == d);
        CHECK(normalized_volume(p) == 1);
    }
}

TEST_CASE("minkowski sums and dilations") {
    LatticePolytope pent = minkowski_sum(simplex(2), cube(2));
    CHECK(pent.vertices().size() == 5);
    CHECK(normalized_volume(pent) == 7);  // Euclidean area 7/2

    LatticePolytope origin = hull(pts({{0, 0}}));
    CHECK(minkowski_sum(simplex(2), origin).vertices() == simplex(2).vertices());

    CHECK(dilate(simplex(2), 2).vertices() == hull(pts({{0, 0}, {2, 0}, {0, 2}})).vertices());
    CHECK_THROWS_AS(dilate(simplex(2), 0), std::invalid_argument);
    CHECK_THROWS_AS(minkowski_sum(cube(2), cube(3)), std::invalid_argument);
}

TEST_CASE("circuit of (1,1,-1,-1) is a unimodular square") {
    Circuit c = circuit({1, 1, -1, -1});
    CHECK(c.config.points.size() == 4);
    CHECK(c.polytope.dim() == 2);
    CHECK(c.polytope.vertices().size() == 4);
    CHECK(normalized_volume(c.polytope) == 2);
    CHECK(local_hstar(c.polytope).hodge.empty());
}

TEST_CASE("circuit of (1,1,1,-3) is the volume-3 triangle with an interior point") {
    Circuit c = circuit({1, 1, 1, -3});
    CHECK(c.polytope.dim() == 2);
    CHECK(c.polytope.vertices().size() == 3);
    CHECK(normalized_volume(c.polytope) == 3);
    CHECK(count_lattice_points(c.polytope, 1, true) == 1);
    CHECK(local_hstar(c.polytope).lstar == ints({1, 1}));
}

TEST_CASE("circuit precondition errors") {
    CHECK_THROWS_AS(circuit({1, -1, 0}), std::invalid_argument);   // zero entry
    CHECK_THROWS_AS(circuit({2, 2, -4}), std::invalid_argument);   // gcd 2
    CHECK_THROWS_AS(circuit({1, 1, -1}), std::invalid_argument);   // sum != 0
    CHECK_THROWS_AS(circuit({1, -1}), std::invalid_argument);      // too short
}

TEST_CASE("circuit configurations have exactly the one dependence gamma") {
    for (const std::vector<Int>& gamma :
         {std::vector<Int>{1, 1, 1, -3}, {1, 2, -1, -2}, {1, 1, 1, -1, -2}, {3, 1, -2, -2}}) {
        Circuit c = circuit(gamma);
        const std::size_t n = gamma.size(), d = n - 2;
        IntMatrix hom(d + 1, n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t i = 0; i < d; ++i) hom(i, j) = c.config.points[j][i];
            hom(d, j) = 1;
        }
        IntMatrix k = saturated_kernel(hom);
        REQUIRE(k.rows() == 1);
        bool pos = k.row(0) == gamma;
        Vec neg = vec_scale(gamma, Int(-1));
        CHECK((pos || k.row(0) == neg));
    }
}

TEST_CASE("S^(N) simplices") {
    LatticePolytope s2 = sN_simplex(2);
    CHECK(s2.dim() == 4);
    CHECK(s2.vertices().size() == 5);
    std::set<Vec> vs(s2.vertices().begin(), s2.vertices().end());
    CHECK(vs.count(Vec{1, 0, 0, 0}) == 1);
    CHECK(vs.count(Vec{0, 0, 0, 0}) == 1);
    CHECK(vs.count(Vec{0, 1, 0, 1}) == 1);
    CHECK(vs.count(Vec{0, -1, 0, 1}) == 1);
    CHECK(vs.count(Vec{-1, 1, 2, 1}) == 1);
    CHECK(local_hstar(s2).hodge.empty());

    CHECK_THROWS_AS(sN_simplex(3), std::invalid_argument);
    CHECK_THROWS_AS(sN_simplex(0), std::invalid_argument);
}

TEST_CASE("S^(N) is the Cayley polytope of an interval and a fixed triangle") {
    for (Int N : {Int(2), Int(4), Int(6)}) {
        LatticePolytope p1 = hull(std::vector<Vec>{Vec{0, 0, 0}, Vec{N / 2, 0, 0}});
        LatticePolytope p2 = hull(pts({{0, 1, 0}, {0, -1, 0}, {-1, 1, 2}}));
        LatticePolytope c = cayley({p1, p2});
        LatticePolytope s = sN_simplex(N);
        CHECK(c.dim() == 4);
        CHECK(hstar(c).hstar == hstar(s).hstar);
        CHECK(face_lattice(c).rank_profile() == face_lattice(s).rank_profile());
        CHECK(local_hstar(c).hodge.empty());

        // the triangle projects along the interval direction onto a copy of
        // twice the unimodular triangle
        LatticePolytope proj = project_along(p2, pts({{1, 0, 0}}));
        CHECK(hstar(proj).hstar == hstar(dilate(simplex(2), 2)).hstar);
    }
}

TEST_CASE("generators") {
    CHECK(simplex(3).dim() == 3);
    CHECK(segment(0, 2).dim() == 1);
    CHECK(count_lattice_points(segment(0, 2), 1, false) == 3);
    CHECK(cube(4).vertices().size() == 16);
    CHECK(cross_polytope(4).vertices().size() == 8);
    CHECK(normalized_volume(cross_polytope(3)) == 8);
}
