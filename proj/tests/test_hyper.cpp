#include "lstar/construct.hpp"
#include "lstar/hyper.hpp"
#include "lstar/identities.hpp"

#include <doctest.h>

using namespace lstar;

namespace {

std::vector<Rat> rats(const std::vector<std::pair<int, int>>& fr) {
    std::vector<Rat> out;
    for (auto [n, d] : fr) out.emplace_back(n, d);
    return out;
}

std::vector<Int> ints(const std::vector<int>& v) { return std::vector<Int>(v.begin(), v.end()); }

}  // namespace

TEST_CASE("alphas and betas of (1,1,1,-3)") {
    AlphaBeta ab = alphas_betas({1, 1, 1, -3});
    CHECK(ab.alphas == rats({{1, 3}, {2, 3}}));
    CHECK(ab.betas == rats({{1, 1}, {1, 1}}));
    CHECK(ab.K == 2);
    CHECK(ab.m_minus == 1);
}

TEST_CASE("alphas and betas cancel completely for (1,1,-1,-1)") {
    AlphaBeta ab = alphas_betas({1, 1, -1, -1});
    CHECK(ab.K == 0);
    CHECK(ab.alphas.empty());
    CHECK(ab.betas.empty());
    CHECK(ab.m_minus == 2);
}

TEST_CASE("alphas and betas of (1,1,1,-1,-2)") {
    AlphaBeta ab = alphas_betas({1, 1, 1, -1, -2});
    CHECK(ab.alphas == rats({{1, 2}}));
    CHECK(ab.betas == rats({{1, 1}}));
    CHECK(ab.K == 1);
    CHECK(ab.m_minus == 2);
}

TEST_CASE("coefficient formula on the worked circuits") {
    CHECK(cgf_local_hstar({1, 1, 1, -3}).lstar == ints({1, 1}));
    CHECK(cgf_local_hstar({1, 1, -1, -1}).lstar == ints({0, 0}));
    CHECK(cgf_local_hstar({1, 1, 1, -1, -2}).lstar == ints({0, 1, 0}));
}

TEST_CASE("gamma preconditions") {
    CHECK_THROWS_AS(alphas_betas({1, 0, -1}), std::invalid_argument);
    CHECK_THROWS_AS(alphas_betas({2, 2, -4}), std::invalid_argument);
    CHECK_THROWS_AS(alphas_betas({1, 1, -1}), std::invalid_argument);
    CHECK_THROWS_AS(cgf_local_hstar({1, -1}), std::invalid_argument);
}

TEST_CASE("appending symmetric pairs shifts the formula by one degree per pair") {
    std::vector<std::vector<Int>> gammas = {{1, 1, 1, -3}, {1, 2, -1, -2}, {1, 1, -1, -1}};
    std::vector<Int> ys = {1, 2, 3};
    for (const auto& gamma : gammas) {
        AlphaBeta base = alphas_betas(gamma);
        LocalHStar lbase = cgf_local_hstar(gamma);
        for (const Int& y : ys) {
            std::vector<Int> ext = gamma;
            ext.push_back(y);
            ext.push_back(-y);
            AlphaBeta e = alphas_betas(ext);
            CHECK(e.alphas == base.alphas);
            CHECK(e.betas == base.betas);
            CHECK(e.m_minus == base.m_minus + 1);

            LocalHStar lext = cgf_local_hstar(ext);
            CHECK(lext.polynomial() == IntPolynomial::t_power(1) * lbase.polynomial());
            CHECK(lext.hodge == lbase.hodge);
        }
    }
}

TEST_CASE("formula agrees with the recursion on every admissible short gamma") {
    for (int len = 3; len <= 5; ++len)
        for (const auto& gamma : admissible_gammas(len, 3)) {
            CAPTURE(gamma[0].str());
            CHECK(cgf_local_hstar(gamma).lstar == local_hstar(circuit(gamma).polytope).lstar);
        }
}

TEST_CASE("formula agrees with the recursion on length-7 witnesses (dimension 5)") {
    std::vector<std::vector<Int>> gammas = {
        {1, 1, 1, 1, -1, -1, -2},
        {2, 1, 1, -1, -1, -1, -1},
        {1, 1, 1, 1, 1, -2, -3},
        {1, 1, 1, 1, -4, 1, -1},
        {2, 2, 1, -1, -1, -1, -2},
        {3, 1, 1, -2, -1, -1, -1},
        {1, 2, 3, -4, -1, 1, -2},
    };
    for (const auto& gamma : gammas) {
        LocalHStar formula = cgf_local_hstar(gamma);
        LocalHStar direct = local_hstar(circuit(gamma).polytope);
        CHECK(formula.lstar == direct.lstar);
    }
}
