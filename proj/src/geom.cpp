#include "lstar/geom.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <unordered_map>

namespace lstar {

namespace {

std::int64_t g_budget = [] {
    if (const char* env = std::getenv("LSTAR_BUDGET")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::int64_t>(v);
    }
    return static_cast<std::int64_t>(500'000'000);
}();

}  // namespace

std::int64_t counting_budget() { return g_budget; }
void set_counting_budget(std::int64_t cells) {
    if (cells <= 0) throw std::invalid_argument("budget must be positive");
    g_budget = cells;
}

void PointConfiguration::validate() const {
    if (points.empty()) throw std::invalid_argument("point configuration is empty");
    for (const Vec& p : points)
        if (p.size() != ambient_dim)
            throw std::invalid_argument("point length does not match ambient dimension");
}

namespace {

template <typename T>
T det_bareiss(std::vector<T> a, std::size_t n) {
    if (n == 0) return T(1);
    T sign(1), prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return T(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i * n + j] = (a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j]) / prev;
        prev = a[k * n + k];
    }
    return sign * a[n * n - 1];
}

// generalized cross product of dim-1 rows in Z^dim: orthogonal to all rows,
// zero iff the rows are dependent
template <typename T>
std::vector<T> cross_normal(const std::vector<std::vector<T>>& rows, std::size_t dim) {
    std::vector<T> n(dim);
    std::vector<T> minor((dim - 1) * (dim - 1));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t r = 0; r < dim - 1; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < dim; ++c) {
                if (c == j) continue;
                minor[r * (dim - 1) + cc++] = rows[r][c];
            }
        }
        T d = det_bareiss(minor, dim - 1);
        n[j] = (j % 2 == 0) ? d : -d;
    }
    return n;
}

template <typename T>
struct FacetCandidate {
    std::vector<T> normal;
    T offset;
};

template <typename T>
std::vector<FacetCandidate<T>> enumerate_facets_impl(const std::vector<std::vector<T>>& pts,
                                                     std::size_t dim) {
    const std::size_t N = pts.size();
    std::set<std::pair<std::vector<T>, T>> seen;
    std::vector<FacetCandidate<T>> facets;

    std::vector<std::size_t> idx(dim);
    for (std::size_t i = 0; i < dim; ++i) idx[i] = i;
    std::vector<std::vector<T>> diff(dim - 1, std::vector<T>(dim));
    while (true) {
        for (std::size_t r = 1; r < dim; ++r)
            for (std::size_t c = 0; c < dim; ++c)
                diff[r - 1][c] = pts[idx[r]][c] - pts[idx[0]][c];
        std::vector<T> n = cross_normal(diff, dim);
        bool zero = std::all_of(n.begin(), n.end(), [](const T& x) { return x == 0; });
        if (!zero) {
            // primitive, sign-canonical hyperplane key
            T g(0);
            for (const T& x : n) {
                T ax = x < 0 ? T(-x) : x;
                if (g == 0) g = ax;
                else {
                    T a = g, b = ax;
                    while (b != 0) {
                        T r = a % b;
                        a = b;
                        b = r;
                    }
                    g = a;
                }
                if (g == 1) break;
            }
            if (g > 1)
                for (T& x : n) x /= g;
            bool flip = false;
            for (const T& x : n) {
                if (x == 0) continue;
                flip = x < 0;
                break;
            }
            if (flip)
                for (T& x : n) x = -x;
            T c(0);
            for (std::size_t j = 0; j < dim; ++j) c += n[j] * pts[idx[0]][j];
            if (seen.emplace(n, c).second) {
                bool above = false, below = false;
                for (std::size_t i = 0; i < N && !(above && below); ++i) {
                    T s(0);
                    for (std::size_t j = 0; j < dim; ++j) s += n[j] * pts[i][j];
                    if (s > c) above = true;
                    else if (s < c) below = true;
                }
                if (!above) {
                    facets.push_back({n, c});
                } else if (!below) {
                    for (T& x : n) x = -x;
                    facets.push_back({std::move(n), T(-c)});
                }
            }
        }
        // next combination
        std::size_t j = dim;
        while (j-- > 0) {
            if (idx[j] + (dim - j) < N) {
                ++idx[j];
                for (std::size_t k = j + 1; k < dim; ++k) idx[k] = idx[k - 1] + 1;
                break;
            }
            if (j == 0) return facets;
        }
    }
}

std::vector<Facet> enumerate_facets(const std::vector<Vec>& ipts, std::size_t dim) {
    // int64 fast path when every minor and every dot product provably fits
    Int maxabs = 0;
    for (const Vec& p : ipts)
        for (const Int& x : p) {
            Int ax = abs(x);
            if (ax > maxabs) maxabs = ax;
        }
    Int minor_bound = 1;
    for (std::size_t i = 2; i <= (dim >= 1 ? dim - 1 : 0); ++i) minor_bound *= i;
    Int span = 2 * maxabs;
    for (std::size_t i = 0; i + 1 < dim; ++i) minor_bound *= span;
    Int dot_bound = minor_bound * maxabs * Int(dim) * 4;
    const Int limit = Int(1) << 62;
    // Bareiss forms products of two minors before the exact division
    bool products_fit = minor_bound * minor_bound * 4 < limit;

    std::vector<Facet> out;
    if (products_fit && dot_bound < limit && maxabs < (Int(1) << 31)) {
        std::vector<std::vector<std::int64_t>> pts(ipts.size(), std::vector<std::int64_t>(dim));
        for (std::size_t i = 0; i < ipts.size(); ++i)
            for (std::size_t j = 0; j < dim; ++j)
                pts[i][j] = ipts[i][j].convert_to<std::int64_t>();
        for (auto& f : enumerate_facets_impl<std::int64_t>(pts, dim)) {
            Vec n(dim);
            for (std::size_t j = 0; j < dim; ++j) n[j] = f.normal[j];
            out.push_back({std::move(n), Int(f.offset)});
        }
    } else {
        for (auto& f : enumerate_facets_impl<Int>(ipts, dim))
            out.push_back({std::move(f.normal), std::move(f.offset)});
    }
    std::sort(out.begin(), out.end(), [](const Facet& a, const Facet& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    return out;
}

std::size_t affine_rank(const std::vector<Vec>& pts) {
    if (pts.empty()) return 0;
    std::vector<Vec> diffs;
    for (std::size_t i = 1; i < pts.size(); ++i) diffs.push_back(vec_sub(pts[i], pts[0]));
    if (diffs.empty()) return 0;
    return rank_of(IntMatrix::from_rows(diffs, pts[0].size()));
}

}  // namespace

Vec LatticePolytope::to_intrinsic(const Vec& ambient_point) const {
    if (ambient_point.size() != ambient_dim_)
        throw std::invalid_argument("to_intrinsic: wrong ambient dimension");
    auto y = lattice_membership_solve(basis_, vec_sub(ambient_point, base_));
    if (!y) throw std::invalid_argument("to_intrinsic: point not in the affine lattice");
    return *y;
}

bool LatticePolytope::contains(const Vec& ambient_point) const {
    for (const SpanEquation& e : equations_)
        if (dot(e.normal, ambient_point) != e.value) return false;
    auto y = lattice_membership_solve(basis_, vec_sub(ambient_point, base_));
    if (!y) return false;
    for (const Facet& f : ifacets_)
        if (dot(f.normal, *y) > f.offset) return false;
    return true;
}

LatticePolytope hull(const PointConfiguration& config) {
    config.validate();
    const std::size_t amb = config.ambient_dim;

    std::set<Vec> uniq(config.points.begin(), config.points.end());
    std::vector<Vec> pts(uniq.begin(), uniq.end());  // lex sorted

    LatticePolytope P;
    P.ambient_dim_ = amb;
    P.base_ = pts.front();

    std::vector<Vec> diffs;
    for (const Vec& p : pts) diffs.push_back(vec_sub(p, P.base_));
    bool all_zero = true;
    for (const Vec& d : diffs)
        if (!is_zero_vec(d)) {
            all_zero = false;
            break;
        }

    if (all_zero || amb == 0) {
        P.dim_ = 0;
        P.vertices_ = {P.base_};
        P.ivertices_ = {Vec{}};
        P.basis_ = IntMatrix(0, amb);
        IntMatrix eqs = IntMatrix::identity(amb);
        for (std::size_t i = 0; i < amb; ++i) P.equations_.push_back({eqs.row(i), P.base_[i]});
        return P;
    }

    IntMatrix D = IntMatrix::from_rows(diffs, amb);
    IntMatrix K = saturated_kernel(D);
    IntMatrix B = K.rows() == 0 ? IntMatrix::identity(amb) : saturated_kernel(K);
    const std::size_t dim = B.rows();
    P.dim_ = static_cast<int>(dim);
    P.basis_ = B;

    std::vector<Vec> ipts;
    ipts.reserve(pts.size());
    for (const Vec& d : diffs) {
        auto y = lattice_membership_solve(B, d);
        if (!y) throw std::logic_error("hull: saturated span basis failed");
        ipts.push_back(*y);
    }

    P.ifacets_ = enumerate_facets(ipts, dim);

    // a point is a vertex exactly when its tight facet normals span
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Vec> tight;
        for (const Facet& f : P.ifacets_)
            if (dot(f.normal, ipts[i]) == f.offset) tight.push_back(f.normal);
        if (tight.size() >= dim && rank_of(IntMatrix::from_rows(tight, dim)) == dim) {
            P.vertices_.push_back(pts[i]);
            P.ivertices_.push_back(ipts[i]);
        }
    }
    if (P.vertices_.empty()) throw std::logic_error("hull: no vertices found");

    // ambient facet representation: integer lift of each intrinsic normal
    for (const Facet& f : P.ifacets_) {
        auto lift = solve_integer(B, f.normal);
        if (!lift) throw std::logic_error("hull: facet normal lift failed");
        Vec n = *lift;
        Int c = f.offset + dot(n, P.base_);
        Int g = vec_gcd(n);
        if (g > 1) {
            // a tight lattice vertex forces divisibility of the offset
            if (c % g != 0) throw std::logic_error("hull: non-primitive facet offset");
            for (Int& x : n) x /= g;
            c /= g;
        }
        P.facets_.push_back({std::move(n), std::move(c)});
    }

    if (dim < amb) {
        IntMatrix E = saturated_kernel(B);
        for (std::size_t i = 0; i < E.rows(); ++i) {
            Vec e = E.row(i);
            P.equations_.push_back({e, dot(e, P.base_)});
        }
    }

    for (std::size_t i = 0; i < P.vertices_.size(); ++i)
        for (const Facet& f : P.ifacets_)
            if (dot(f.normal, P.ivertices_[i]) > f.offset)
                throw std::logic_error("hull: vertex violates facet");
    return P;
}

LatticePolytope hull(std::vector<Vec> points) {
    if (points.empty()) throw std::invalid_argument("hull of no points");
    PointConfiguration c{points.front().size(), std::move(points)};
    return hull(c);
}

FaceLattice::FaceLattice(std::vector<Face> faces, std::size_t n_vertices, int top_dim)
    : faces_(std::move(faces)), n_vertices_(n_vertices), top_dim_(top_dim) {}

std::vector<std::size_t> FaceLattice::rank_profile() const {
    std::vector<std::size_t> prof(top_dim_ + 2, 0);
    for (const Face& f : faces_) prof[f.dim + 1]++;
    return prof;
}

std::vector<std::size_t> FaceLattice::faces_of_dim(int d) const {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < faces_.size(); ++i)
        if (faces_[i].dim == d) ids.push_back(i);
    return ids;
}

FaceLattice face_lattice(const LatticePolytope& p) {
    const std::size_t nv = p.vertices().size();
    if (nv > 64) throw std::invalid_argument("face_lattice: more than 64 vertices");
    const std::uint64_t full = nv == 64 ? ~0ull : ((1ull << nv) - 1);

    std::vector<std::uint64_t> fmask;
    for (const Facet& f : p.intrinsic_facets()) {
        std::uint64_t m = 0;
        for (std::size_t i = 0; i < nv; ++i)
            if (dot(f.normal, p.intrinsic_vertices()[i]) == f.offset) m |= 1ull << i;
        fmask.push_back(m);
    }

    std::map<std::uint64_t, int> dim_of;
    dim_of[full] = p.dim();
    std::vector<std::uint64_t> queue{full};
    while (!queue.empty()) {
        std::uint64_t f = queue.back();
        queue.pop_back();
        for (std::uint64_t phi : fmask) {
            std::uint64_t c = f & phi;
            if (c == f || dim_of.count(c)) continue;
            std::vector<Vec> vs;
            for (std::size_t i = 0; i < nv; ++i)
                if (c & (1ull << i)) vs.push_back(p.intrinsic_vertices()[i]);
            dim_of[c] = vs.empty() ? -1 : static_cast<int>(affine_rank(vs));
            queue.push_back(c);
        }
    }
    dim_of.emplace(0, -1);

    std::vector<Face> faces;
    for (auto& [m, d] : dim_of) faces.push_back({m, d});
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vset < b.vset;
    });

    Int euler = 0;
    for (const Face& f : faces) euler += (f.dim % 2 == 0) ? 1 : -1;
    if (euler != 0) throw std::logic_error("face_lattice: Euler relation violated");

    return FaceLattice(std::move(faces), nv, p.dim());
}

LatticePolytope face_as_polytope(const LatticePolytope& p, const Face& f) {
    if (f.vset == 0) throw std::invalid_argument("face_as_polytope: empty face");
    std::vector<Vec> vs;
    for (std::size_t i = 0; i < p.vertices().size(); ++i)
        if (f.vset & (1ull << i)) vs.push_back(p.vertices()[i]);
    LatticePolytope q = hull(std::move(vs));
    if (q.dim() != f.dim) throw std::logic_error("face_as_polytope: dimension mismatch");
    return q;
}

LatticePolytope project_along(const LatticePolytope& p, const std::vector<Vec>& subspace_basis) {
    const std::size_t amb = p.ambient_dim();
    for (const Vec& v : subspace_basis)
        if (v.size() != amb) throw std::invalid_argument("project_along: wrong vector length");
    if (subspace_basis.empty()) return hull(p.vertices());

    IntMatrix U = IntMatrix::from_rows(subspace_basis, amb);
    const std::size_t k = subspace_basis.size();
    if (rank_of(U) != k) throw std::invalid_argument("project_along: basis not independent");

    // saturation of the subspace lattice, then a unimodular extension; the
    // quotient map reads off the complementary coordinates
    IntMatrix Kc = saturated_kernel(U);
    IntMatrix Bu = Kc.rows() == 0 ? IntMatrix::identity(amb) : saturated_kernel(Kc);
    auto [s, su, sv] = snf(Bu);
    for (std::size_t i = 0; i < k; ++i)
        if (s(i, i) != 1) throw std::logic_error("project_along: saturation failed");

    std::vector<Vec> images;
    for (const Vec& v : p.vertices()) {
        Vec q(amb - k);
        for (std::size_t j = 0; j < amb - k; ++j) {
            Int acc = 0;
            for (std::size_t i = 0; i < amb; ++i) acc += v[i] * sv(i, k + j);
            q[j] = acc;
        }
        images.push_back(std::move(q));
    }
    PointConfiguration c{amb - k, std::move(images)};
    return hull(c);
}

namespace {

using Rat = boost::multiprecision::cpp_rational;

Int rat_round(const Rat& r) {
    Int num = numerator(r), den = denominator(r);  // den > 0
    Int q = num / den, rem = num - q * den;
    if (rem < 0) {
        --q;
        rem += den;
    }
    if (2 * rem >= den) ++q;
    return q;
}

// Unimodular change of coordinates that shrinks the scan box: LLL over Z^D
// with the quadratic form given by the exact vertex covariance, which is
// positive definite because the vertices affinely span. Rows of the result
// are the new directions.
IntMatrix box_reduction_matrix(const std::vector<Vec>& verts, std::size_t D) {
    const Int N = static_cast<std::int64_t>(verts.size());
    IntMatrix G(D, D);
    Vec S(D);
    for (const Vec& v : verts)
        for (std::size_t i = 0; i < D; ++i) S[i] += v[i];
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j) {
            Int acc = 0;
            for (const Vec& v : verts) acc += v[i] * v[j];
            G(i, j) = N * acc - S[i] * S[j];
        }

    std::vector<Vec> b(D, Vec(D));
    for (std::size_t i = 0; i < D; ++i) b[i][i] = 1;

    std::vector<std::vector<Rat>> mu(D, std::vector<Rat>(D));
    std::vector<Rat> norm(D);  // squared norms of the Gram-Schmidt vectors
    auto gso = [&] {
        std::vector<std::vector<Rat>> bs(D, std::vector<Rat>(D));
        for (std::size_t i = 0; i < D; ++i) {
            for (std::size_t j = 0; j < D; ++j) bs[i][j] = Rat(b[i][j]);
            for (std::size_t j = 0; j < i; ++j) {
                Rat num = 0;
                // <b_i, bs_j>_G with bs_j rational
                for (std::size_t a = 0; a < D; ++a)
                    for (std::size_t c = 0; c < D; ++c) num += Rat(b[i][a] * G(a, c)) * bs[j][c];
                mu[i][j] = norm[j] == 0 ? Rat(0) : num / norm[j];
                for (std::size_t a = 0; a < D; ++a) bs[i][a] -= mu[i][j] * bs[j][a];
            }
            Rat n2 = 0;
            for (std::size_t a = 0; a < D; ++a)
                for (std::size_t c = 0; c < D; ++c) n2 += bs[i][a] * Rat(G(a, c)) * bs[i][c];
            norm[i] = n2;
        }
    };

    gso();
    std::size_t k = 1;
    int guard = 0;
    while (k < D && ++guard < 200000) {
        for (std::size_t j = k; j-- > 0;) {
            Int q = rat_round(mu[k][j]);
            if (q != 0) {
                for (std::size_t a = 0; a < D; ++a) b[k][a] -= q * b[j][a];
                gso();
            }
        }
        Rat lhs = norm[k];
        Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * norm[k - 1];
        if (lhs >= rhs) {
            ++k;
        } else {
            std::swap(b[k], b[k - 1]);
            gso();
            k = k > 1 ? k - 1 : 1;
        }
    }
    return IntMatrix::from_rows(b, D);
}

template <typename T>
Int scan_box(const std::vector<T>& lo, const std::vector<T>& hi,
             const std::vector<std::vector<T>>& normals, const std::vector<T>& offsets,
             bool strict) {
    const std::size_t D = lo.size(), F = normals.size();
    std::vector<T> x = lo;
    std::vector<T> dots(F);
    for (std::size_t f = 0; f < F; ++f) {
        T s(0);
        for (std::size_t j = 0; j < D; ++j) s += normals[f][j] * lo[j];
        dots[f] = s;
    }
    std::vector<std::vector<T>> reset(F, std::vector<T>(D));
    for (std::size_t f = 0; f < F; ++f)
        for (std::size_t j = 0; j < D; ++j) reset[f][j] = normals[f][j] * (hi[j] - lo[j]);

    Int count = 0;
    while (true) {
        bool ok = true;
        for (std::size_t f = 0; f < F; ++f) {
            if (strict ? !(dots[f] < offsets[f]) : !(dots[f] <= offsets[f])) {
                ok = false;
                break;
            }
        }
        if (ok) ++count;
        std::size_t j = 0;
        while (j < D && x[j] == hi[j]) {
            x[j] = lo[j];
            for (std::size_t f = 0; f < F; ++f) dots[f] -= reset[f][j];
            ++j;
        }
        if (j == D) break;
        ++x[j];
        for (std::size_t f = 0; f < F; ++f) dots[f] += normals[f][j];
    }
    return count;
}

}  // namespace

Int count_lattice_points(const LatticePolytope& p, const Int& dilate, bool interior_only) {
    if (dilate < 1) throw std::invalid_argument("count_lattice_points: dilate must be >= 1");
    if (p.dim() <= 0) return 1;
    const std::size_t D = p.dim();

    // scan in box-reduced coordinates; counts are unimodular invariants
    std::vector<Vec> verts = p.intrinsic_vertices();
    std::vector<Facet> fs = p.intrinsic_facets();
    if (D >= 2) {
        IntMatrix T = box_reduction_matrix(verts, D);
        IntMatrix Tinv = inverse_unimodular(T);
        for (Vec& v : verts) {
            Vec w(D);
            for (std::size_t i = 0; i < D; ++i) {
                Int acc = 0;
                for (std::size_t j = 0; j < D; ++j) acc += T(i, j) * v[j];
                w[i] = acc;
            }
            v = std::move(w);
        }
        for (Facet& f : fs) {
            Vec n(D);
            for (std::size_t j = 0; j < D; ++j) {
                Int acc = 0;
                for (std::size_t i = 0; i < D; ++i) acc += f.normal[i] * Tinv(i, j);
                n[j] = acc;
            }
            f.normal = std::move(n);
        }
    }

    Vec lo(D), hi(D);
    for (std::size_t j = 0; j < D; ++j) {
        Int mn = verts[0][j], mx = mn;
        for (const Vec& v : verts) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = mn * dilate;
        hi[j] = mx * dilate;
    }
    if (D == 1) {
        Int closed = hi[0] - lo[0] + 1;
        return interior_only ? closed - 2 : closed;
    }

    Int cells = 1;
    for (std::size_t j = 0; j < D; ++j) cells *= hi[j] - lo[j] + 1;
    if (cells > counting_budget())
        throw budget_error("lattice point scan of " + cells.str() + " cells exceeds budget of " +
                           std::to_string(counting_budget()));

    const std::size_t F = fs.size();

    // int64 fast path with a conservative per-facet overflow bound
    bool fits = true;
    const Int limit = Int(1) << 62;
    for (std::size_t j = 0; j < D && fits; ++j)
        fits = abs(lo[j]) < limit && abs(hi[j]) < limit;
    for (std::size_t f = 0; f < F && fits; ++f) {
        Int bound = abs(fs[f].offset * dilate);
        for (std::size_t j = 0; j < D; ++j)
            bound += Int(abs(fs[f].normal[j])) * (abs(lo[j]) > abs(hi[j]) ? Int(abs(lo[j])) : Int(abs(hi[j])));
        fits = bound < limit;
    }

    if (fits) {
        std::vector<std::int64_t> l64(D), h64(D), off(F);
        std::vector<std::vector<std::int64_t>> nn(F, std::vector<std::int64_t>(D));
        for (std::size_t j = 0; j < D; ++j) {
            l64[j] = lo[j].convert_to<std::int64_t>();
            h64[j] = hi[j].convert_to<std::int64_t>();
        }
        for (std::size_t f = 0; f < F; ++f) {
            off[f] = Int(fs[f].offset * dilate).convert_to<std::int64_t>();
            for (std::size_t j = 0; j < D; ++j)
                nn[f][j] = fs[f].normal[j].convert_to<std::int64_t>();
        }
        return scan_box<std::int64_t>(l64, h64, nn, off, interior_only);
    }

    std::vector<Int> off(F);
    std::vector<std::vector<Int>> nn(F, std::vector<Int>(D));
    for (std::size_t f = 0; f < F; ++f) {
        off[f] = fs[f].offset * dilate;
        nn[f] = fs[f].normal;
    }
    return scan_box<Int>(lo, hi, nn, off, interior_only);
}

}  // namespace lstar
