#include "lstar/gale.hpp"

namespace lstar {

namespace {

// homogenized configuration: one row per coordinate plus the all-ones row
IntMatrix homogenized(const PointConfiguration& c) {
    const std::size_t d = c.ambient_dim, n = c.points.size();
    IntMatrix a(d + 1, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < d; ++i) a(i, j) = c.points[j][i];
        a(d, j) = 1;
    }
    return a;
}

// canonical row-lattice key: Hermite form with zero rows dropped
IntMatrix row_lattice_hnf(const IntMatrix& m) {
    IntMatrix h = hnf(m).h;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        Vec r = h.row(i);
        if (!is_zero_vec(r)) rows.push_back(std::move(r));
    }
    return IntMatrix::from_rows(rows, m.cols());
}

}  // namespace

IntMatrix GaleConfiguration::matrix() const {
    IntMatrix m(rank, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != rank)
            throw std::invalid_argument("gale configuration: wrong vector length");
        for (std::size_t i = 0; i < rank; ++i) m(i, j) = vectors[j][i];
    }
    return m;
}

void GaleConfiguration::validate() const {
    if (vectors.size() <= rank) throw std::invalid_argument("gale configuration: too few vectors");
    IntMatrix m = matrix();
    for (std::size_t i = 0; i < rank; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < vectors.size(); ++j) s += m(i, j);
        if (s != 0) throw std::invalid_argument("gale configuration: vectors do not sum to zero");
    }
    IntMatrix s = snf(m).s;
    for (std::size_t i = 0; i < rank; ++i)
        if (s(i, i) != 1)
            throw std::invalid_argument("gale configuration: vectors do not span the lattice");
}

bool is_spanning(const PointConfiguration& c) {
    c.validate();
    const std::size_t d = c.ambient_dim;
    if (c.points.size() < d + 1) return false;
    IntMatrix s = snf(homogenized(c)).s;
    for (std::size_t i = 0; i <= d; ++i)
        if (i >= std::min(s.rows(), s.cols()) || s(i, i) != 1) return false;
    return true;
}

GaleConfiguration gale_transform(const PointConfiguration& c) {
    c.validate();
    const std::size_t d = c.ambient_dim, n = c.points.size();
    if (n <= d + 1)
        throw std::invalid_argument("gale_transform: need more than d+1 points");
    if (!is_spanning(c)) throw std::invalid_argument("gale_transform: configuration not spanning");

    IntMatrix k = saturated_kernel(homogenized(c));  // (n-d-1) x n
    GaleConfiguration g;
    g.rank = n - d - 1;
    for (std::size_t j = 0; j < n; ++j) g.vectors.push_back(k.col(j));
    g.validate();
    return g;
}

PointConfiguration gale_inverse(const GaleConfiguration& g) {
    g.validate();
    const std::size_t n = g.vectors.size(), m = g.rank;
    const std::size_t d = n - m - 1;

    IntMatrix k = saturated_kernel(g.matrix());  // (d+1) x n
    Vec ones(n, Int(1));
    auto coeff = lattice_membership_solve(k, ones);
    if (!coeff)
        throw std::logic_error("gale_inverse: all-ones vector missing from the kernel lattice");
    // basis change putting the all-ones vector first
    IntMatrix w = complete_primitive_row(*coeff);
    IntMatrix kk = w * k;

    PointConfiguration c;
    c.ambient_dim = d;
    for (std::size_t j = 0; j < n; ++j) {
        Vec p(d);
        for (std::size_t i = 0; i < d; ++i) p[i] = kk(i + 1, j);
        c.points.push_back(std::move(p));
    }

    // defining property: the transform of the result spans the same row
    // lattice as the input
    IntMatrix back = gale_transform(c).matrix();
    if (row_lattice_hnf(back) != row_lattice_hnf(g.matrix()))
        throw std::logic_error("gale_inverse: round-trip lattice mismatch");
    return c;
}

PointConfiguration lawrence_twist(const PointConfiguration& c, const std::vector<Vec>& sym) {
    GaleConfiguration g = gale_transform(c);
    for (const Vec& s : sym) {
        if (s.size() != g.rank)
            throw std::invalid_argument("lawrence_twist: symmetric vector has wrong length");
        if (is_zero_vec(s)) throw std::invalid_argument("lawrence_twist: zero vector in extension");
        g.vectors.push_back(s);
        g.vectors.push_back(vec_scale(s, Int(-1)));
    }
    return gale_inverse(g);
}

}  // namespace lstar
