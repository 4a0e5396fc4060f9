#pragma once

// Polynomial-level evaluators for the Cayley / complete-intersection
// h*-identities, plus seeded scenario runners that verify each identity
// on generated instances.

#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"
#include "lstar/localh.hpp"

#include <cstdint>
#include <string>

namespace lstar {

/// Deterministic generator (splitmix64); identical across platforms.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
    int range(int lo, int hi) { return lo + below(hi - lo + 1); }
};

/// Tuple P_1..P_{k+1} in Z^d with the first k polytopes inside a
/// k-dimensional subspace U (U = R^d when k >= d).
struct CayleyInstance {
    std::vector<LatticePolytope> polytopes;
    std::vector<Vec> subspace_basis;  // basis of U, min(k, d) vectors
    int d = 0;
    int k = 0;
};

/// E(Z_P; t, 1) = ((-1)^{d-1} h*(t) + (t-1)^d) / t, with the exact
/// divisibility by t asserted.
IntPolynomial e_hypersurface(const HStarData& h);

/// (h*(t) - 1) / t with nonnegative coefficients asserted.
IntPolynomial e_prim_from_hstar(const HStarData& h);

/// E(Y; t, 1) for the complete intersection of P_1..P_k in the d-torus:
/// (1/t^k) sum over I of (-1)^{d_I - |I|} (t-1)^{d - d_I} h*(P^I; t),
/// with P^empty = {0}.
IntPolynomial prop32_rhs(const std::vector<LatticePolytope>& polytopes);

struct MainTheoremData {
    IntPolynomial rhs;           // V t^k h*(proj) + signed I-sum
    Int V;                       // MV(P_1..P_k), or 0 when k > d
    LatticePolytope projection;  // proj_U(P_{k+1})
    bool situation1 = false;
    bool situation2 = false;
};

MainTheoremData main_theorem_rhs(const CayleyInstance& ci);

struct VerificationReport {
    std::string scenario;
    std::string instance;
    std::string left;
    std::string right;
    bool pass = false;
    double timing_ms = 0.0;
};

std::vector<std::string> scenario_names();

/// Runs a named scenario; deterministic for a given seed. count <= 0
/// selects the scenario's default size.
std::vector<VerificationReport> run_scenario(const std::string& name, std::uint64_t seed,
                                             int count);

LatticePolytope random_polytope(int dim, int coord_bound, int n_points, Rng& rng);
LatticePolytope random_polytope(int dim, int coord_bound, int n_points, std::uint64_t seed);
CayleyInstance random_cayley_instance(int d, int k, Rng& rng);

/// All circuit tuples of the given length with entries in [-bound, bound],
/// no zeros, zero sum and gcd 1, one representative per permutation class.
std::vector<std::vector<Int>> admissible_gammas(int length, int bound);

}  // namespace lstar
