#include "lstar/localh.hpp"

#include <algorithm>

namespace lstar {

IntPolynomial LocalHStar::polynomial() const {
    std::vector<Int> c(lstar.size() + 1);
    for (std::size_t i = 0; i < lstar.size(); ++i) c[i + 1] = lstar[i];
    return IntPolynomial(std::move(c));
}

std::vector<Int> hodge_vector(const std::vector<Int>& lstar) {
    std::size_t a = 0, b = lstar.size();
    while (a < b && lstar[a] == 0) ++a;
    while (b > a && lstar[b - 1] == 0) --b;
    return std::vector<Int>(lstar.begin() + a, lstar.begin() + b);
}

std::map<std::size_t, IntPolynomial> toric_g_above(const FaceLattice& L, std::size_t bottom) {
    std::vector<std::size_t> up;
    for (std::size_t x = 0; x < L.size(); ++x)
        if (L.leq(bottom, x)) up.push_back(x);
    // L's faces are sorted by dimension, so `up` is already in rank order

    std::map<std::size_t, IntPolynomial> g;
    for (std::size_t x : up) {
        const int n = L.rank(x) - L.rank(bottom);
        if (n == 0) {
            g[x] = IntPolynomial::constant(1);
            continue;
        }
        IntPolynomial f;
        Int parity = 0;
        for (std::size_t y : up) {
            if (!L.leq(y, x)) continue;
            parity += (L.rank(y) % 2 == 0) ? 1 : -1;
            if (y == x) continue;
            const int ry = L.rank(y) - L.rank(bottom);
            f += g.at(y) * IntPolynomial::binomial_power(-1, n - 1 - ry);
        }
        if (parity != 0)
            throw std::invalid_argument("toric_g: interval is not Eulerian");
        std::vector<Int> k(n / 2 + 1);
        k[0] = f.coeff(0);
        for (int i = 1; i <= (n - 1) / 2; ++i) k[i] = f.coeff(i) - f.coeff(i - 1);
        g[x] = IntPolynomial(std::move(k));
    }
    return g;
}

IntPolynomial toric_g(const FaceLattice& L, std::size_t bottom, std::size_t top) {
    if (bottom >= L.size() || top >= L.size() || !L.leq(bottom, top))
        throw std::invalid_argument("toric_g: not an interval");
    return toric_g_above(L, bottom).at(top);
}

LocalHStar local_hstar(const LatticePolytope& p) {
    const int d = p.dim();
    FaceLattice L = face_lattice(p);

    // h* of every nonempty face, re-coordinatized into its own lattice
    std::vector<IntPolynomial> h(L.size());
    for (std::size_t id = 1; id < L.size(); ++id) {
        const Face& f = L.face(id);
        h[id] = (f.dim == d) ? hstar(p).hstar : hstar(face_as_polytope(p, f)).hstar;
    }

    // triangular solve in rank order; acc[G] collects l*(F) g([F,G])
    std::vector<IntPolynomial> ell(L.size()), acc(L.size());
    for (std::size_t id = 0; id < L.size(); ++id) {
        ell[id] = (id == L.bottom()) ? IntPolynomial::constant(1) : h[id] - acc[id];
        if (id == L.top()) break;
        auto g = toric_g_above(L, id);
        for (auto& [gid, gpoly] : g) {
            if (gid == id) continue;
            acc[gid] += ell[id] * gpoly;
        }
    }

    const IntPolynomial& lp = ell[L.top()];
    if (lp.coeff(0) != 0 || lp.degree() > d)
        throw std::logic_error("local_hstar: recursion produced an invalid polynomial");

    LocalHStar out;
    out.dim = d;
    out.lstar.resize(d);
    for (int i = 1; i <= d; ++i) out.lstar[i - 1] = lp.coeff(i);
    out.hodge = hodge_vector(out.lstar);

    for (int i = 1; i <= d; ++i)
        if (out.lstar[i - 1] != out.lstar[d - i])
            throw std::logic_error("local_hstar: palindromicity violated");
    for (const Int& x : out.lstar)
        if (x < 0) throw std::logic_error("local_hstar: negative coefficient");
    if (d >= 1 && out.lstar[0] != count_lattice_points(p, 1, true))
        throw std::logic_error("local_hstar: l*_1 is not the interior point count");
    return out;
}

ThinnessFlags predicates(const LatticePolytope& p) {
    LocalHStar l = local_hstar(p);
    HStarData h = hstar(p);
    ThinnessFlags f;
    f.thin = l.hodge.empty();
    f.trivially_thin = p.dim() >= 2 * h.degree;
    f.nearly_thin = l.hodge.size() == 1 && l.hodge[0] == 1;
    return f;
}

HStarDiamond3D diamond_3d(const LatticePolytope& p) {
    if (p.dim() != 3) throw std::invalid_argument("diamond_3d: dimension must be 3");
    InteriorCounts3D c = interior_counts_3d(p);

    HStarDiamond3D dm;
    dm.h00 = c.vertices + c.edge_interior - 4;
    dm.h10 = dm.h01 = c.facet_interior;
    dm.h20 = dm.h02 = c.interior;
    dm.h11 = c.interior_2p - 4 * c.interior - c.facet_interior;

    if (dm.h00 < 0 || dm.h11 < 0)
        throw std::logic_error("diamond_3d: negative entry");
    if (dm.h20 > dm.h11)
        throw std::logic_error("diamond_3d: lower bound i* <= (2i)* - 4i* - f* violated");
    Int total = dm.h00 + dm.h10 + dm.h01 + dm.h20 + dm.h11 + dm.h02;
    if (total + 1 != normalized_volume(p))
        throw std::logic_error("diamond_3d: entries do not sum to the normalized volume");
    return dm;
}

}  // namespace lstar
