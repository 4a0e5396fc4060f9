#include "lstar/construct.hpp"
#include "lstar/identities.hpp"
#include "lstar/localh.hpp"
#include "lstar/mixvol.hpp"

#include <doctest.h>

using namespace lstar;

namespace {

std::vector<Vec> pts(const std::vector<std::vector<int>>& rows) {
    std::vector<Vec> out;
    for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
    return out;
}

std::vector<Int> ints(const std::vector<int>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("torus hypersurface polynomial of the worked examples") {
    CHECK(e_hypersurface(hstar(simplex(1))) == IntPolynomial::constant(1));
    CHECK(e_hypersurface(hstar(segment(0, 2))) == IntPolynomial::constant(2));
    CHECK(e_hypersurface(hstar(dilate(simplex(2), 2))) == IntPolynomial(ints({-5, 1})));
    CHECK(e_hypersurface(hstar(dilate(simplex(2), 2))).evaluate(1) == -4);
}

TEST_CASE("primitive part extraction") {
    for (int d = 1; d <= 4; ++d) CHECK(e_prim_from_hstar(hstar(simplex(d))).is_zero());
    CHECK(e_prim_from_hstar(hstar(dilate(simplex(2), 2))) == IntPolynomial::constant(3));
    CHECK(e_prim_from_hstar(hstar(cube(3))) == IntPolynomial(ints({4, 1})));
}

TEST_CASE("complete intersection polynomial: k=1 matches the hypersurface case") {
    Rng rng(11);
    for (int t = 0; t < 8; ++t) {
        int d = 1 + t % 3;
        LatticePolytope p = random_polytope(d, 3, d + 3, rng);
        CHECK(prop32_rhs({p}) == e_hypersurface(hstar(p)));
    }
}

TEST_CASE("complete intersection polynomial: k=d is the mixed volume") {
    CHECK(prop32_rhs({cube(2), cube(2)}) == IntPolynomial::constant(2));
    CHECK(prop32_rhs({simplex(2), cube(2)}) == IntPolynomial::constant(2));
    Rng rng(13);
    for (int t = 0; t < 5; ++t) {
        std::vector<LatticePolytope> ps;
        for (int i = 0; i < 2; ++i) ps.push_back(random_polytope(2, 3, 5, rng));
        CHECK(prop32_rhs(ps) == IntPolynomial::constant(mixed_volume(ps)));
    }
}

TEST_CASE("complete intersection polynomial handles degenerate tuples") {
    // two parallel segments: the mixed volume vanishes and so does E(Y)
    LatticePolytope s1 = hull(pts({{0, 0}, {2, 0}}));
    LatticePolytope s2 = hull(pts({{0, 0}, {3, 0}}));
    CHECK(prop32_rhs({s1, s2}).is_zero());
    CHECK(mixed_volume({s1, s2}) == 0);

    // a segment and a triangle: still the mixed volume
    LatticePolytope seg = hull(pts({{0, 0}, {1, 1}}));
    CHECK(prop32_rhs({seg, simplex(2)}) == IntPolynomial::constant(mixed_volume({seg, simplex(2)})));
}

TEST_CASE("complete intersection polynomial vanishes for k > d") {
    Rng rng(15);
    for (int t = 0; t < 5; ++t) {
        std::vector<LatticePolytope> ps;
        for (int i = 0; i < 3; ++i) ps.push_back(random_polytope(2, 2, 5, rng));
        CHECK(prop32_rhs(ps).is_zero());
    }
}

TEST_CASE("main Cayley identity on the worked wedges") {
    LatticePolytope seg01 = hull(pts({{0, 0}, {1, 0}}));
    LatticePolytope t2 = dilate(simplex(2), 2);

    CayleyInstance ci;
    ci.d = 2;
    ci.k = 1;
    ci.polytopes = {seg01, t2};
    ci.subspace_basis = pts({{1, 0}});
    MainTheoremData mt = main_theorem_rhs(ci);
    CHECK(mt.V == 1);
    CHECK(mt.situation1);
    CHECK(mt.rhs == IntPolynomial(ints({1, 4, 1})));
    CHECK(hstar(cayley(ci.polytopes)).hstar == mt.rhs);

    CayleyInstance ci2 = ci;
    ci2.polytopes[0] = hull(pts({{0, 0}, {2, 0}}));
    MainTheoremData mt2 = main_theorem_rhs(ci2);
    CHECK(mt2.V == 2);
    LatticePolytope c2 = cayley(ci2.polytopes);
    CHECK(hstar(c2).hstar == mt2.rhs);
    CHECK(local_hstar(c2).polynomial() == IntPolynomial(std::vector<Int>{0, 0, 2}));
}

TEST_CASE("main identity with k > d reduces to the signed subset sum") {
    Rng rng(19);
    CayleyInstance ci;
    ci.d = 2;
    ci.k = 3;
    for (int i = 0; i < 3; ++i) ci.polytopes.push_back(random_polytope(2, 2, 4, rng));
    ci.polytopes.push_back(random_polytope(2, 2, 5, rng));
    ci.subspace_basis = pts({{1, 0}, {0, 1}});
    MainTheoremData mt = main_theorem_rhs(ci);
    CHECK(mt.V == 0);
    CHECK(mt.situation2);
    LatticePolytope c = cayley(ci.polytopes);
    CHECK(hstar(c).hstar == mt.rhs);
    CHECK(local_hstar(c).hodge.empty());  // trivially thin
    CHECK(predicates(c).trivially_thin);
}

TEST_CASE("outside the two situations only the h* identity is claimed") {
    // P2 is a lower-dimensional non-thin segment: situation (1) fails and
    // the l* scaling genuinely breaks, while the h* identity still holds
    CayleyInstance ci;
    ci.d = 2;
    ci.k = 1;
    ci.polytopes = {hull(pts({{0, 0}, {1, 0}})), hull(pts({{0, 0}, {0, 2}}))};
    ci.subspace_basis = pts({{1, 0}});
    MainTheoremData mt = main_theorem_rhs(ci);
    CHECK(!mt.situation1);
    CHECK(!mt.situation2);
    LatticePolytope c = cayley(ci.polytopes);
    CHECK(hstar(c).hstar == mt.rhs);
    IntPolynomial scaled =
        mt.V * (IntPolynomial::t_power(1) * local_hstar(mt.projection).polynomial());
    CHECK(local_hstar(c).polynomial() != scaled);
}

TEST_CASE("local scaling under the main identity for the k=d case") {
    // cube witness of the full-dimensional tuple scenario
    LatticePolytope c = cayley({cube(2), cube(2)});
    CHECK(local_hstar(c).lstar == ints({0, 1, 0}));
    Int mv = mixed_volume({cube(2), cube(2)});
    CHECK(local_hstar(c).polynomial() == (mv - 1) * IntPolynomial::t_power(2));
}

TEST_CASE("scenario runners are deterministic given the seed") {
    auto a = run_scenario("diamond3d", 42, 5);
    auto b = run_scenario("diamond3d", 42, 5);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance == b[i].instance);
        CHECK(a[i].left == b[i].left);
        CHECK(a[i].right == b[i].right);
        CHECK(a[i].pass == b[i].pass);
    }
    auto c = run_scenario("diamond3d", 43, 5);
    bool any_diff = false;
    for (std::size_t i = 0; i < std::min(a.size(), c.size()); ++i)
        any_diff = any_diff || a[i].left != c[i].left;
    CHECK(any_diff);
}

TEST_CASE("unknown scenarios are rejected") {
    CHECK_THROWS_AS(run_scenario("nope", 1, 1), std::invalid_argument);
    CHECK(!scenario_names().empty());
}

TEST_CASE("random polytopes are full-dimensional and reproducible") {
    LatticePolytope a = random_polytope(3, 3, 7, std::uint64_t(5));
    LatticePolytope b = random_polytope(3, 3, 7, std::uint64_t(5));
    CHECK(a.dim() == 3);
    CHECK(a.vertices() == b.vertices());
    CHECK_THROWS_AS(random_polytope(0, 3, 7, std::uint64_t(5)), std::invalid_argument);
}

TEST_CASE("random cayley instances satisfy the hypotheses") {
    Rng rng(77);
    for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {2, 2}}) {
        CayleyInstance ci = random_cayley_instance(d, k, rng);
        REQUIRE(ci.polytopes.size() == static_cast<std::size_t>(k + 1));
        CHECK(static_cast<int>(minkowski_dim(ci.polytopes)) == d);
        std::vector<LatticePolytope> firstk(ci.polytopes.begin(), ci.polytopes.end() - 1);
        CHECK(minkowski_dim(firstk) <= static_cast<std::size_t>(k));
        MainTheoremData mt = main_theorem_rhs(ci);
        CHECK((mt.situation1 || mt.situation2));
    }
}

TEST_CASE("admissible gamma enumeration is sorted, nonzero, coprime and zero-sum") {
    auto gs = admissible_gammas(4, 4);
    CHECK(gs.size() == 16);
    for (const auto& g : gs) {
        Int sum = 0;
        for (const Int& x : g) {
            CHECK(x != 0);
            sum += x;
        }
        CHECK(sum == 0);
        CHECK(vec_gcd(g) == 1);
        CHECK(std::is_sorted(g.begin(), g.end()));
    }
    CHECK(admissible_gammas(3, 4).size() == 6);
    CHECK(admissible_gammas(6, 4).size() == 71);
}
