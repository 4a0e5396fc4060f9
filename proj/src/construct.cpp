#include "lstar/construct.hpp"

namespace lstar {

namespace {

Vec padded(const Vec& v, std::size_t extra_front, std::size_t extra_back) {
    Vec r;
    r.reserve(extra_front + v.size() + extra_back);
    r.insert(r.end(), extra_front, Int(0));
    r.insert(r.end(), v.begin(), v.end());
    r.insert(r.end(), extra_back, Int(0));
    return r;
}

}  // namespace

std::size_t minkowski_dim(const std::vector<LatticePolytope>& ps) {
    std::vector<Vec> dirs;
    std::size_t amb = ps.front().ambient_dim();
    for (const LatticePolytope& p : ps)
        for (std::size_t i = 1; i < p.vertices().size(); ++i)
            dirs.push_back(vec_sub(p.vertices()[i], p.vertices()[0]));
    if (dirs.empty()) return 0;
    return rank_of(IntMatrix::from_rows(dirs, amb));
}

LatticePolytope cayley(const std::vector<LatticePolytope>& ps, CayleyEmbedding embedding) {
    if (ps.empty()) throw std::invalid_argument("cayley: empty list");
    const std::size_t d = ps.front().ambient_dim();
    const std::size_t m = ps.size();
    for (const LatticePolytope& p : ps)
        if (p.ambient_dim() != d) throw std::invalid_argument("cayley: mixed ambient dimensions");

    std::vector<Vec> pts;
    if (embedding == CayleyEmbedding::standard) {
        for (std::size_t i = 0; i < m; ++i)
            for (const Vec& v : ps[i].vertices()) {
                Vec w = padded(v, 0, m);
                w[d + i] = 1;
                pts.push_back(std::move(w));
            }
    } else {
        for (std::size_t i = 0; i < m; ++i)
            for (const Vec& v : ps[i].vertices()) {
                Vec w = padded(v, 0, m - 1);
                if (i > 0) w[d + i - 1] = 1;
                pts.push_back(std::move(w));
            }
    }
    LatticePolytope c = hull(std::move(pts));
    if (c.dim() != static_cast<int>(minkowski_dim(ps) + m - 1))
        throw std::logic_error("cayley: dimension law violated");
    return c;
}

LatticePolytope free_join(const LatticePolytope& p, const LatticePolytope& q) {
    const std::size_t n = p.ambient_dim(), m = q.ambient_dim();
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) pts.push_back(padded(v, 0, m + 1));
    for (const Vec& w : q.vertices()) {
        Vec x = padded(w, n, 1);
        x[n + m] = 1;
        pts.push_back(std::move(x));
    }
    LatticePolytope j = hull(std::move(pts));
    if (j.dim() != p.dim() + q.dim() + 1)
        throw std::logic_error("free_join: dimension law violated");
    return j;
}

LatticePolytope pyramid(const LatticePolytope& p) {
    const std::size_t n = p.ambient_dim();
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) pts.push_back(padded(v, 0, 1));
    Vec apex(n + 1);
    apex[n] = 1;
    pts.push_back(std::move(apex));
    return hull(std::move(pts));
}

LatticePolytope minkowski_sum(const LatticePolytope& p, const LatticePolytope& q) {
    if (p.ambient_dim() != q.ambient_dim())
        throw std::invalid_argument("minkowski_sum: ambient dimension mismatch");
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices())
        for (const Vec& w : q.vertices()) pts.push_back(vec_add(v, w));
    return hull(std::move(pts));
}

LatticePolytope minkowski_sum(const std::vector<LatticePolytope>& ps) {
    if (ps.empty()) throw std::invalid_argument("minkowski_sum: empty list");
    LatticePolytope acc = ps.front();
    for (std::size_t i = 1; i < ps.size(); ++i) acc = minkowski_sum(acc, ps[i]);
    return acc;
}

LatticePolytope dilate(const LatticePolytope& p, const Int& k) {
    if (k < 1) throw std::invalid_argument("dilate: factor must be >= 1");
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) pts.push_back(vec_scale(v, k));
    return hull(std::move(pts));
}

Circuit circuit(const std::vector<Int>& gamma) {
    const std::size_t n = gamma.size();
    if (n < 3) throw std::invalid_argument("circuit: need at least 3 entries");
    Int sum = 0;
    for (const Int& g : gamma) {
        if (g == 0) throw std::invalid_argument("circuit: zero entry");
        sum += g;
    }
    if (sum != 0) throw std::invalid_argument("circuit: entries must sum to zero");
    if (vec_gcd(gamma) != 1) throw std::invalid_argument("circuit: gcd of entries must be 1");

    const std::size_t d = n - 2;
    // dependence direction of (0, e_1, ..., e_{d+1}) weighted by gamma
    Vec w(gamma.begin() + 1, gamma.end());  // length d+1, primitive
    IntMatrix col(d + 1, 1);
    for (std::size_t i = 0; i <= d; ++i) col(i, 0) = w[i];
    auto [h, u] = hnf(col);
    if (h(0, 0) != 1) throw std::logic_error("circuit: direction vector not primitive");
    // rows 2..d+1 of u give a surjection Z^{d+1} -> Z^d with kernel Z w

    std::vector<Vec> pts;
    pts.push_back(Vec(d));  // image of the origin
    for (std::size_t j = 0; j <= d; ++j) {
        Vec a(d);
        for (std::size_t i = 0; i < d; ++i) a[i] = u(i + 1, j);
        pts.push_back(std::move(a));
    }

    Circuit c;
    c.config = PointConfiguration{d, pts};
    Vec dep(d);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < d; ++k) dep[k] += gamma[i] * pts[i][k];
    if (!is_zero_vec(dep)) throw std::logic_error("circuit: dependence relation violated");
    c.polytope = hull(c.config);
    return c;
}

LatticePolytope simplex(int d) {
    if (d < 0) throw std::invalid_argument("simplex: negative dimension");
    std::vector<Vec> pts{Vec(d)};
    for (int i = 0; i < d; ++i) {
        Vec e(d);
        e[i] = 1;
        pts.push_back(std::move(e));
    }
    PointConfiguration c{static_cast<std::size_t>(d), std::move(pts)};
    return hull(c);
}

LatticePolytope segment(const Int& a, const Int& b) {
    return hull(std::vector<Vec>{Vec{a}, Vec{b}});
}

LatticePolytope cube(int d) {
    if (d < 1) throw std::invalid_argument("cube: dimension must be >= 1");
    std::vector<Vec> pts;
    for (std::uint64_t m = 0; m < (1ull << d); ++m) {
        Vec v(d);
        for (int i = 0; i < d; ++i) v[i] = (m >> i) & 1;
        pts.push_back(std::move(v));
    }
    return hull(std::move(pts));
}

LatticePolytope cross_polytope(int d) {
    if (d < 1) throw std::invalid_argument("cross_polytope: dimension must be >= 1");
    std::vector<Vec> pts;
    for (int i = 0; i < d; ++i) {
        Vec e(d), f(d);
        e[i] = 1;
        f[i] = -1;
        pts.push_back(std::move(e));
        pts.push_back(std::move(f));
    }
    return hull(std::move(pts));
}

LatticePolytope sN_simplex(const Int& N) {
    if (N < 2 || N % 2 != 0) throw std::invalid_argument("sN_simplex: N must be even and >= 2");
    Int half = N / 2;
    std::vector<Vec> pts{
        {half, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}, {0, -1, 0, 1}, {-1, 1, 2, 1}};
    return hull(std::move(pts));
}

}  // namespace lstar
