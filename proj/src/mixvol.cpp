#include "lstar/mixvol.hpp"

#include "lstar/construct.hpp"
#include "lstar/ehrhart.hpp"

namespace lstar {

namespace {

Int mixed_volume_full(const std::vector<LatticePolytope>& ps) {
    const std::size_t k = ps.size();
    Int acc = 0;
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
        std::vector<LatticePolytope> sel;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ull << i)) sel.push_back(ps[i]);
        LatticePolytope s = minkowski_sum(sel);
        Int vol = s.dim() == static_cast<int>(k) ? normalized_volume(s) : 0;
        int sign = (k - sel.size()) % 2 == 0 ? 1 : -1;
        acc += sign * vol;
    }
    Int fact = 1;
    for (std::size_t i = 2; i <= k; ++i) fact *= Int(i);
    if (acc % fact != 0) throw std::logic_error("mixed_volume: inexact division");
    Int mv = acc / fact;
    if (mv < 0) throw std::logic_error("mixed_volume: negative result");
    if (bernstein_zero(ps) && mv != 0)
        throw std::logic_error("mixed_volume: Bernstein criterion contradicted");
    return mv;
}

}  // namespace

Int mixed_volume(const std::vector<LatticePolytope>& ps) {
    if (ps.empty()) throw std::invalid_argument("mixed_volume: empty tuple");
    const std::size_t k = ps.size();
    for (const LatticePolytope& p : ps)
        if (p.ambient_dim() != k)
            throw std::invalid_argument("mixed_volume: tuple size must match ambient dimension");
    return mixed_volume_full(ps);
}

Int mixed_volume(const std::vector<LatticePolytope>& ps, const std::vector<Vec>& subspace_basis) {
    if (ps.empty()) throw std::invalid_argument("mixed_volume: empty tuple");
    const std::size_t k = ps.size();
    const std::size_t amb = ps.front().ambient_dim();
    if (subspace_basis.size() != k)
        throw std::invalid_argument("mixed_volume: subspace must have one vector per polytope");
    IntMatrix U = IntMatrix::from_rows(subspace_basis, amb);
    if (rank_of(U) != k) throw std::invalid_argument("mixed_volume: subspace basis not independent");

    // saturated basis of span(U) in Z^amb
    IntMatrix Kc = saturated_kernel(U);
    IntMatrix Bu = Kc.rows() == 0 ? IntMatrix::identity(amb) : saturated_kernel(Kc);

    std::vector<LatticePolytope> re;
    for (const LatticePolytope& p : ps) {
        if (p.ambient_dim() != amb)
            throw std::invalid_argument("mixed_volume: mixed ambient dimensions");
        std::vector<Vec> pts;
        for (const Vec& v : p.vertices()) {
            auto y = lattice_membership_solve(Bu, v);
            if (!y) throw std::invalid_argument("mixed_volume: polytope not inside the subspace");
            pts.push_back(*y);
        }
        PointConfiguration c{k, std::move(pts)};
        re.push_back(hull(c));
    }
    return mixed_volume_full(re);
}

bool bernstein_zero(const std::vector<LatticePolytope>& ps) {
    const std::size_t k = ps.size();
    for (std::uint64_t mask = 1; mask < (1ull << k); ++mask) {
        std::vector<LatticePolytope> sel;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ull << i)) sel.push_back(ps[i]);
        if (minkowski_dim(sel) < sel.size()) return true;
    }
    return false;
}

}  // namespace lstar
