#include "lstar/ehrhart.hpp"

namespace lstar {

namespace {

Int binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    Int r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        r *= Int(n - i);
        r /= Int(i + 1);
    }
    return r;
}

// C(x, n) for arbitrary integer x
Int falling_binomial(const Int& x, std::size_t n) {
    Int num = 1;
    for (std::size_t i = 0; i < n; ++i) num *= x - Int(i);
    Int fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= Int(i);
    return num / fact;
}

bool is_unimodular_simplex(const LatticePolytope& p) {
    const std::size_t n = p.dim();
    if (p.vertices().size() != n + 1) return false;
    IntMatrix d(n, n);
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            d(i - 1, j) = p.intrinsic_vertices()[i][j] - p.intrinsic_vertices()[0][j];
    return abs(determinant(d)) == 1;
}

}  // namespace

HStarData hstar(const LatticePolytope& p) {
    const int n = p.dim();
    if (n == 0) return {IntPolynomial::constant(1), 0, 1, 0};
    if (is_unimodular_simplex(p)) return {IntPolynomial::constant(1), n, 1, 0};

    std::vector<Int> L(n + 1);
    L[0] = 1;
    for (int k = 1; k <= n; ++k) L[k] = count_lattice_points(p, k, false);

    std::vector<Int> h(n + 1);
    for (int j = 0; j <= n; ++j) {
        Int acc = 0;
        for (int i = 0; i <= j; ++i) {
            Int term = binomial(n + 1, i) * L[j - i];
            acc += (i % 2 == 0) ? term : -term;
        }
        h[j] = acc;
    }

    HStarData out;
    out.hstar = IntPolynomial(h);
    out.dim = n;
    out.normalized_volume = 0;
    for (const Int& c : h) out.normalized_volume += c;
    out.degree = std::max(out.hstar.degree(), 0);

    if (out.hstar.coeff(0) != 1 || !out.hstar.nonnegative())
        throw std::logic_error("hstar: invalid coefficient vector");
    if (h[n] != count_lattice_points(p, 1, true))
        throw std::logic_error("hstar: top coefficient is not the interior count");
    return out;
}

Int normalized_volume(const LatticePolytope& p) { return hstar(p).normalized_volume; }

Int ehrhart_eval(const HStarData& h, const Int& m) {
    Int acc = 0;
    for (int j = 0; j <= h.dim; ++j)
        acc += h.hstar.coeff(j) * falling_binomial(m + Int(h.dim - j), h.dim);
    return acc;
}

InteriorCounts3D interior_counts_3d(const LatticePolytope& p) {
    if (p.dim() != 3) throw std::invalid_argument("interior_counts_3d: dimension must be 3");
    FaceLattice L = face_lattice(p);

    InteriorCounts3D c;
    c.vertices = Int(L.faces_of_dim(0).size());

    c.edge_interior = 0;
    for (std::size_t id : L.faces_of_dim(1)) {
        std::vector<Vec> vs;
        for (std::size_t i = 0; i < p.vertices().size(); ++i)
            if (L.face(id).vset & (1ull << i)) vs.push_back(p.vertices()[i]);
        c.edge_interior += vec_gcd(vec_sub(vs[1], vs[0])) - 1;
    }

    c.facet_interior = 0;
    for (std::size_t id : L.faces_of_dim(2))
        c.facet_interior += count_lattice_points(face_as_polytope(p, L.face(id)), 1, true);

    c.interior = count_lattice_points(p, 1, true);
    c.interior_2p = count_lattice_points(p, 2, true);
    return c;
}

}  // namespace lstar
