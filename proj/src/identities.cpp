#include "lstar/identities.hpp"

#include "lstar/gale.hpp"
#include "lstar/hyper.hpp"
#include "lstar/mixvol.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace lstar {

namespace {

IntPolynomial one_minus_t_pow(int n) {
    IntPolynomial base(std::vector<Int>{1, -1});
    IntPolynomial acc = IntPolynomial::constant(1);
    for (int i = 0; i < n; ++i) acc = acc * base;
    return acc;
}

std::vector<Int> padded_coeffs(const IntPolynomial& p, std::size_t len) {
    std::vector<Int> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = p.coeff(i);
    return c;
}

std::string vec_str(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i];
    }
    os << "]";
    return os.str();
}

}  // namespace

IntPolynomial e_hypersurface(const HStarData& h) {
    if (h.dim < 1) throw std::invalid_argument("e_hypersurface: dimension must be >= 1");
    IntPolynomial bracket = IntPolynomial::binomial_power(-1, h.dim);
    if (h.dim % 2 == 1) bracket += h.hstar;
    else bracket -= h.hstar;
    auto q = bracket.divided_by_t_power(1);
    if (!q) throw std::logic_error("e_hypersurface: bracket not divisible by t");
    return *q;
}

IntPolynomial e_prim_from_hstar(const HStarData& h) {
    if (h.dim < 1) throw std::invalid_argument("e_prim_from_hstar: dimension must be >= 1");
    IntPolynomial num = h.hstar - IntPolynomial::constant(1);
    auto q = num.divided_by_t_power(1);
    if (!q) throw std::logic_error("e_prim_from_hstar: h* has constant term != 1");
    if (!q->nonnegative()) throw std::logic_error("e_prim_from_hstar: negative coefficient");
    return *q;
}

IntPolynomial prop32_rhs(const std::vector<LatticePolytope>& ps) {
    if (ps.empty()) throw std::invalid_argument("prop32_rhs: empty tuple");
    const int d = static_cast<int>(ps.front().ambient_dim());
    const std::size_t k = ps.size();
    for (const LatticePolytope& p : ps)
        if (static_cast<int>(p.ambient_dim()) != d)
            throw std::invalid_argument("prop32_rhs: mixed ambient dimensions");

    IntPolynomial acc;
    for (std::uint64_t mask = 0; mask < (1ull << k); ++mask) {
        std::vector<LatticePolytope> sel;
        for (std::size_t i = 0; i < k; ++i)
            if (mask & (1ull << i)) sel.push_back(ps[i]);
        int d_I = sel.empty() ? 0 : static_cast<int>(minkowski_dim(sel));
        IntPolynomial h =
            sel.empty() ? IntPolynomial::constant(1) : hstar(cayley(sel)).hstar;
        IntPolynomial term = IntPolynomial::binomial_power(-1, d - d_I) * h;
        if ((d_I + static_cast<int>(sel.size())) % 2 != 0) term = Int(-1) * term;
        acc += term;
    }
    auto q = acc.divided_by_t_power(k);
    if (!q) throw std::logic_error("prop32_rhs: sum not divisible by t^k");
    return *q;
}

MainTheoremData main_theorem_rhs(const CayleyInstance& ci) {
    const int d = ci.d, k = ci.k;
    if (static_cast<int>(ci.polytopes.size()) != k + 1)
        throw std::invalid_argument("main_theorem_rhs: need k+1 polytopes");
    if (static_cast<int>(minkowski_dim(ci.polytopes)) != d)
        throw std::invalid_argument("main_theorem_rhs: tuple does not span dimension d");
    std::vector<LatticePolytope> firstk(ci.polytopes.begin(), ci.polytopes.end() - 1);
    if (static_cast<int>(minkowski_dim(firstk)) > k)
        throw std::invalid_argument("main_theorem_rhs: first k polytopes too large");

    MainTheoremData out;
    if (k <= d) {
        out.V = (k == d) ? mixed_volume(firstk) : mixed_volume(firstk, ci.subspace_basis);
    } else {
        out.V = 0;
    }
    out.projection = project_along(ci.polytopes.back(), ci.subspace_basis);

    IntPolynomial rhs = out.V * (IntPolynomial::t_power(k) * hstar(out.projection).hstar);

    out.situation1 = true;
    for (std::uint64_t mask = 0; mask + 1 < (1ull << k); ++mask) {
        // I = mask over P_1..P_k, always joined with P_{k+1}
        std::vector<LatticePolytope> sel;
        for (int i = 0; i < k; ++i)
            if (mask & (1ull << i)) sel.push_back(ci.polytopes[i]);
        sel.push_back(ci.polytopes.back());
        const int size_I = static_cast<int>(sel.size());
        const int d_I = static_cast<int>(minkowski_dim(sel));
        LatticePolytope PI = cayley(sel);
        IntPolynomial term = one_minus_t_pow(d - d_I) * hstar(PI).hstar;
        if ((k - size_I) % 2 != 0) term = Int(-1) * term;
        rhs += term;

        const int gap = size_I + (d - d_I);
        if (gap > k && !(gap == k + 1 && local_hstar(PI).hodge.empty())) out.situation1 = false;
    }
    out.situation2 = k >= d;
    out.rhs = rhs;
    return out;
}

LatticePolytope random_polytope(int dim, int coord_bound, int n_points, Rng& rng) {
    if (dim < 1 || coord_bound < 1 || n_points < dim + 1)
        throw std::invalid_argument("random_polytope: bad parameters");
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Vec> pts;
        for (int i = 0; i < n_points; ++i) {
            Vec v(dim);
            for (int j = 0; j < dim; ++j) v[j] = rng.range(0, coord_bound);
            pts.push_back(std::move(v));
        }
        LatticePolytope p = hull(std::move(pts));
        if (p.dim() == dim) return p;
    }
    throw std::runtime_error("random_polytope: resampling cap exceeded");
}

LatticePolytope random_polytope(int dim, int coord_bound, int n_points, std::uint64_t seed) {
    Rng rng(seed);
    return random_polytope(dim, coord_bound, n_points, rng);
}

namespace {

IntMatrix random_unimodular(int d, Rng& rng) {
    IntMatrix a = IntMatrix::identity(d);
    for (int step = 0; step < 2 * d; ++step) {
        int i = rng.below(d), j = rng.below(d);
        if (i == j) continue;
        a.row_axpy(i, j, Int(rng.below(2) == 0 ? 1 : -1));
    }
    return a;
}

LatticePolytope apply_matrix(const IntMatrix& a, const LatticePolytope& p) {
    std::vector<Vec> pts;
    for (const Vec& v : p.vertices()) {
        Vec w(a.rows());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            Int acc = 0;
            for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * v[j];
            w[i] = acc;
        }
        pts.push_back(std::move(w));
    }
    return hull(std::move(pts));
}

}  // namespace

CayleyInstance random_cayley_instance(int d, int k, Rng& rng) {
    if (d < 1 || k < 1) throw std::invalid_argument("random_cayley_instance: bad parameters");
    const int ku = std::min(k, d);  // dimension of U

    CayleyInstance ci;
    ci.d = d;
    ci.k = k;
    for (int i = 0; i < ku; ++i) {
        Vec e(d);
        e[i] = 1;
        ci.subspace_basis.push_back(std::move(e));
    }
    for (int i = 0; i < k; ++i) {
        // a small polytope inside U = span(e_1..e_ku)
        int npts = rng.range(2, 4);
        std::vector<Vec> pts;
        for (int t = 0; t < npts; ++t) {
            Vec v(d);
            for (int j = 0; j < ku; ++j) v[j] = rng.range(0, 2);
            pts.push_back(std::move(v));
        }
        ci.polytopes.push_back(hull(std::move(pts)));
    }
    ci.polytopes.push_back(random_polytope(d, 3, d + 4, rng));

    if (rng.below(2) == 0) {
        IntMatrix a = random_unimodular(d, rng);
        for (LatticePolytope& p : ci.polytopes) p = apply_matrix(a, p);
        for (Vec& u : ci.subspace_basis) {
            Vec w(d);
            for (int i = 0; i < d; ++i) {
                Int acc = 0;
                for (int j = 0; j < d; ++j) acc += a(i, j) * u[j];
                w[i] = acc;
            }
            u = std::move(w);
        }
    }
    return ci;
}

std::vector<std::vector<Int>> admissible_gammas(int length, int bound) {
    std::vector<std::vector<Int>> out;
    std::vector<int> cur(length);
    // nondecreasing tuples of nonzero entries in [-bound, bound]; a
    // permutation gives the identical circuit, so one ordering suffices,
    // but both sign classes are kept (they drive the formula differently)
    std::function<void(int, int, int)> rec = [&](int pos, int minval, int sum) {
        if (pos == length) {
            if (sum != 0) return;
            std::vector<Int> g(cur.begin(), cur.end());
            if (vec_gcd(g) != 1) return;
            out.push_back(std::move(g));
            return;
        }
        int remaining = length - pos - 1;
        for (int v = minval; v <= bound; ++v) {
            if (v == 0) continue;
            int s = sum + v;
            // feasibility: remaining entries are >= v and <= bound
            if (s + remaining * v > 0) break;
            if (s + remaining * bound < 0) continue;
            cur[pos] = v;
            rec(pos + 1, v, s);
        }
    };
    rec(0, -bound, 0);
    return out;
}

namespace {

using Clock = std::chrono::steady_clock;

struct ReportBuilder {
    std::string scenario;
    std::vector<VerificationReport> reports;
    Clock::time_point t0 = Clock::now();

    void add(const std::string& instance, const std::string& left, const std::string& right,
             bool pass) {
        auto t1 = Clock::now();
        double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        reports.push_back({scenario, instance, left, right, pass, ms});
        t0 = t1;
    }
};

std::vector<Int> lstar_of(const LatticePolytope& p) { return local_hstar(p).lstar; }

std::vector<Int> hstar_vec(const LatticePolytope& p) {
    HStarData h = hstar(p);
    return padded_coeffs(h.hstar, h.dim + 1);
}

void scenario_known_values(ReportBuilder& rb) {
    auto check = [&](const std::string& name, const LatticePolytope& p,
                     const std::vector<Int>& hexp, const std::vector<Int>& lexp) {
        std::vector<Int> hv = hstar_vec(p);
        std::vector<Int> lv = lstar_of(p);
        rb.add(name + " h*", vec_str(hv), vec_str(hexp), hv == hexp);
        rb.add(name + " l*", vec_str(lv), vec_str(lexp), lv == lexp);
    };
    for (int dm = 1; dm <= 6; ++dm) {
        std::vector<Int> h(dm + 1), l(dm);
        h[0] = 1;
        check("simplex d=" + std::to_string(dm), simplex(dm), h, l);
    }
    check("[0,2]", segment(0, 2), {1, 1}, {1});
    check("2*simplex(2)", dilate(simplex(2), 2), {1, 3, 0}, {0, 0});
    check("2*simplex(3)", dilate(simplex(3), 2), {1, 6, 1, 0}, {0, 1, 0});
    check("cube(3)", cube(3), {1, 4, 1, 0}, {0, 1, 0});
    check("cross(3)", cross_polytope(3), {1, 3, 3, 1}, {1, 3, 1});
    check("3*simplex(2)", dilate(simplex(2), 3), {1, 7, 1}, {1, 1});

    LatticePolytope seg01{hull(std::vector<Vec>{{0, 0}, {1, 0}})};
    LatticePolytope wedge = cayley({seg01, dilate(simplex(2), 2)});
    check("cayley([0,1]x0, 2*simplex(2))", wedge, {1, 4, 1, 0}, {0, 1, 0});
}

void scenario_diamond3d(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        LatticePolytope p = random_polytope(3, 4, rng.range(6, 10), rng);
        std::vector<Int> rec = lstar_of(p);
        std::vector<Int> closed = diamond_3d(p).middle_row();
        rb.add("random 3-polytope #" + std::to_string(i), vec_str(rec), vec_str(closed),
               rec == closed);
    }
}

void scenario_thm31(ReportBuilder& rb, Rng& rng, int count) {
    const std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {3, 2}, {2, 2}};
    for (int i = 0; i < count; ++i) {
        auto [d, k] = shapes[i % 4];
        CayleyInstance ci = random_cayley_instance(d, k, rng);
        LatticePolytope c = cayley(ci.polytopes);
        MainTheoremData mt = main_theorem_rhs(ci);
        IntPolynomial lhs = hstar(c).hstar;

        std::ostringstream desc;
        desc << "d=" << d << " k=" << k << " V=" << mt.V
             << (mt.situation1 ? " situation1" : "") << (mt.situation2 ? " situation2" : "");
        rb.add(desc.str() + " h*", lhs.to_string(), mt.rhs.to_string(), lhs == mt.rhs);

        if (mt.situation1 || mt.situation2) {
            IntPolynomial ell = local_hstar(c).polynomial();
            IntPolynomial pred =
                mt.V * (IntPolynomial::t_power(k) * local_hstar(mt.projection).polynomial());
            rb.add(desc.str() + " l* scaling", ell.to_string(), pred.to_string(), ell == pred);
        }
    }
}

void scenario_prop32(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d = 2 + (i % 2);
        std::vector<LatticePolytope> ps;
        for (int j = 0; j < d; ++j) ps.push_back(random_polytope(d, 2, d + 2, rng));
        if (i % 2 == 1) {
            // degenerate member: a segment keeps d_I < d terms in play
            Vec dir(d);
            while (is_zero_vec(dir))
                for (int j = 0; j < d; ++j) dir[j] = rng.range(0, 2);
            ps[0] = hull(std::vector<Vec>{Vec(d), dir});
        }

        IntPolynomial full = prop32_rhs(ps);
        Int mv = mixed_volume(ps);
        rb.add("d=k=" + std::to_string(d) + " #" + std::to_string(i), full.to_string(),
               IntPolynomial::constant(mv).to_string(), full == IntPolynomial::constant(mv));

        std::vector<LatticePolytope> over = ps;
        over.push_back(random_polytope(d, 2, d + 2, rng));
        IntPolynomial zero = prop32_rhs(over);
        rb.add("k=d+1 #" + std::to_string(i), zero.to_string(), "[]", zero.is_zero());

        // divisibility by t^k for the partial tuples is asserted inside
        for (int k = 1; k < d; ++k)
            prop32_rhs(std::vector<LatticePolytope>(ps.begin(), ps.begin() + k));
    }
}

void scenario_example33(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d = 2 + (i % 2);
        std::vector<LatticePolytope> ps;
        for (int j = 0; j < d; ++j) ps.push_back(random_polytope(d, 2, d + 2, rng));
        Int mv = mixed_volume(ps);
        LatticePolytope c = cayley(ps);
        IntPolynomial ell = local_hstar(c).polynomial();
        IntPolynomial expect = (mv - 1) * IntPolynomial::t_power(d);
        rb.add("d=" + std::to_string(d) + " MV=" + mv.str() + " exponent=d #" + std::to_string(i),
               ell.to_string(), expect.to_string(), ell == expect);
    }
}

PointConfiguration random_spanning_config(int d, int n, int bound, Rng& rng) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        PointConfiguration c;
        c.ambient_dim = d;
        for (int i = 0; i < n; ++i) {
            Vec v(d);
            for (int j = 0; j < d; ++j) v[j] = rng.range(0, bound);
            c.points.push_back(std::move(v));
        }
        if (is_spanning(c)) return c;
    }
    throw std::runtime_error("random_spanning_config: resampling cap exceeded");
}

void scenario_cor45(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        // keep the rare high-dimensional twists small
        int d = 1 + (i % 3);
        int k = (i % 5 == 4) ? 2 : 1;
        int bound = (d + 2 * k >= 6) ? 1 : 2;
        int n = d + 2 + rng.below(2);
        PointConfiguration c = random_spanning_config(d, n, std::max(bound, 1) + 1, rng);
        int m = static_cast<int>(c.points.size()) - d - 1;

        std::vector<Vec> sym;
        for (int s = 0; s < k; ++s) {
            Vec v(m);
            bool nonzero = false;
            while (!nonzero) {
                for (int j = 0; j < m; ++j) {
                    v[j] = rng.range(-std::min(bound + 1, 3), std::min(bound + 1, 3));
                    if (v[j] != 0) nonzero = true;
                }
            }
            sym.push_back(v);
        }

        PointConfiguration twisted = lawrence_twist(c, sym);
        LatticePolytope before = hull(c);
        LatticePolytope after = hull(twisted);

        LocalHStar lb = local_hstar(before);
        LocalHStar la = local_hstar(after);
        std::string desc = "d=" + std::to_string(d) + " k=" + std::to_string(k) + " n=" +
                           std::to_string(c.points.size()) + " #" + std::to_string(i);
        rb.add(desc + " hodge", vec_str(la.hodge), vec_str(lb.hodge), la.hodge == lb.hodge);

        int deg_before = hstar(before).degree;
        int deg_after = hstar(after).degree;
        rb.add(desc + " degree+k", std::to_string(deg_after),
               ">=" + std::to_string(deg_before + k), deg_after >= deg_before + k);
    }
}

void scenario_cor46(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d = 2 + (i % 2);
        LatticePolytope p = random_polytope(d, 3, d + 3, rng);
        Vec dir(d);
        while (is_zero_vec(dir))
            for (int j = 0; j < d; ++j) dir[j] = rng.range(-2, 2);
        Int g = vec_gcd(dir);
        for (Int& x : dir) x /= g;
        LatticePolytope interval = hull(std::vector<Vec>{Vec(d), dir});

        LatticePolytope c = cayley({interval, p});
        LatticePolytope proj = project_along(p, {dir});

        HStarData hc = hstar(c), hproj = hstar(proj), hp = hstar(p);
        IntPolynomial rhs = IntPolynomial::t_power(1) * hproj.hstar + hp.hstar;
        bool deg_ok = hc.degree >= hproj.degree + 1;
        std::string desc = "d=" + std::to_string(d) + " deg " + std::to_string(hc.degree) +
                           ">=" + std::to_string(hproj.degree + 1) + " #" + std::to_string(i);
        rb.add(desc, hc.hstar.to_string(), rhs.to_string(), hc.hstar == rhs && deg_ok);
    }
}

void scenario_cgf(ReportBuilder& rb, int count, int min_len, int max_len) {
    int done = 0;
    for (int len = min_len; len <= max_len; ++len) {
        for (const std::vector<Int>& gamma : admissible_gammas(len, 4)) {
            if (count > 0 && done >= count) return;
            LocalHStar formula = cgf_local_hstar(gamma);
            LocalHStar direct = local_hstar(circuit(gamma).polytope);
            std::ostringstream desc;
            desc << "gamma=" << vec_str(gamma);
            rb.add(desc.str(), vec_str(formula.lstar), vec_str(direct.lstar),
                   formula.lstar == direct.lstar);
            ++done;
        }
    }
}

void scenario_bk_thin(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d0 = 2 + (i % 2);           // dim of P_0
        int k = 2 + ((i / 2) % 2);      // number of degenerate polytopes
        std::vector<LatticePolytope> ps;
        ps.push_back(random_polytope(d0, 2, d0 + 3, rng));
        for (int j = 0; j < k; ++j) {
            // contained in span(e_1..e_{k-1}), so dim(P_1+...+P_k) < k
            int sub = std::min(k - 1, d0);
            std::vector<Vec> pts;
            int npts = rng.range(2, 3);
            for (int t = 0; t < npts; ++t) {
                Vec v(d0);
                for (int c2 = 0; c2 < sub; ++c2) v[c2] = rng.range(0, 2);
                pts.push_back(std::move(v));
            }
            ps.push_back(hull(std::move(pts)));
        }
        LatticePolytope c = cayley(ps);
        LocalHStar l = local_hstar(c);
        rb.add("B_k d0=" + std::to_string(d0) + " k=" + std::to_string(k) + " #" +
                   std::to_string(i),
               vec_str(l.lstar), "0", l.hodge.empty());
    }
}

void scenario_sN_family(ReportBuilder& rb, int count) {
    for (int i = 1; i <= count; ++i) {
        Int N = 2 * i;
        LatticePolytope s = sN_simplex(N);
        LocalHStar l = local_hstar(s);
        rb.add("S^(" + N.str() + ")", vec_str(l.lstar), "0", l.hodge.empty());
    }
}

void scenario_pyramids(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d = 1 + (i % 3);
        LatticePolytope p = random_polytope(d, 3, d + 3, rng);
        LatticePolytope pyr = pyramid(p);
        bool h_same = hstar(p).hstar == hstar(pyr).hstar;
        bool l_zero = local_hstar(pyr).hodge.empty();
        rb.add("pyramid d=" + std::to_string(d) + " #" + std::to_string(i),
               hstar(pyr).hstar.to_string() + (l_zero ? " l*=0" : " l*!=0"),
               hstar(p).hstar.to_string() + " l*=0", h_same && l_zero);
    }
}

void scenario_free_joins(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int dp = 1 + (i % 2), dq = 1 + ((i / 2) % 2);
        LatticePolytope p = random_polytope(dp, 3, dp + 3, rng);
        LatticePolytope q = random_polytope(dq, 3, dq + 3, rng);
        LatticePolytope j = free_join(p, q);
        bool h_ok = hstar(j).hstar == hstar(p).hstar * hstar(q).hstar;
        bool l_ok =
            local_hstar(j).polynomial() == local_hstar(p).polynomial() * local_hstar(q).polynomial();
        rb.add("join dims=(" + std::to_string(dp) + "," + std::to_string(dq) + ") #" +
                   std::to_string(i),
               hstar(j).hstar.to_string(),
               (hstar(p).hstar * hstar(q).hstar).to_string(), h_ok && l_ok);
    }
}

void scenario_mv_projection(ReportBuilder& rb, Rng& rng, int count) {
    const std::pair<int, int> shapes[] = {{2, 1}, {3, 1}, {3, 2}};
    for (int i = 0; i < count; ++i) {
        auto [d, k] = shapes[i % 3];
        std::vector<Vec> ubasis;
        for (int j = 0; j < k; ++j) {
            Vec e(d);
            e[j] = 1;
            ubasis.push_back(std::move(e));
        }
        std::vector<LatticePolytope> ps;
        for (int j = 0; j < k; ++j) {
            std::vector<Vec> pts;
            int npts = rng.range(2, 4);
            for (int t = 0; t < npts; ++t) {
                Vec v(d);
                for (int c2 = 0; c2 < k; ++c2) v[c2] = rng.range(0, 2);
                pts.push_back(std::move(v));
            }
            ps.push_back(hull(std::move(pts)));
        }
        for (int j = k; j < d; ++j) ps.push_back(random_polytope(d, 2, d + 2, rng));

        Int lhs = mixed_volume(ps);
        Int f1 = mixed_volume(std::vector<LatticePolytope>(ps.begin(), ps.begin() + k), ubasis);
        std::vector<LatticePolytope> projs;
        for (int j = k; j < d; ++j) projs.push_back(project_along(ps[j], ubasis));
        Int f2 = projs.empty() ? Int(1) : mixed_volume(projs);
        rb.add("d=" + std::to_string(d) + " k=" + std::to_string(k) + " #" + std::to_string(i),
               lhs.str(), Int(f1 * f2).str(), lhs == f1 * f2);
    }
}

void scenario_invariants(ReportBuilder& rb, Rng& rng, int count) {
    for (int i = 0; i < count; ++i) {
        int d = 1 + (i % 3);
        LatticePolytope p = random_polytope(d, 3, d + 4, rng);
        bool ok = true;
        std::string note;

        HStarData h = hstar(p);  // constant term, nonnegativity, h*_d checked inside
        local_hstar(p);          // palindromicity, nonnegativity, l*_1 checked inside
        face_lattice(p);         // Euler relation checked inside

        // Ehrhart reciprocity spot-check at k = 1, 2
        for (int k = 1; k <= 2 && ok; ++k) {
            Int lhs = count_lattice_points(p, k, true);
            Int rhs = ehrhart_eval(h, -Int(k));
            if (d % 2 != 0) rhs = -rhs;
            if (lhs != rhs) {
                ok = false;
                note = "reciprocity failed at k=" + std::to_string(k);
            }
        }
        if (d == 3 && ok) diamond_3d(p);  // Katz-Stapledon bound checked inside

        // Gale round-trip equality is asserted inside gale_inverse
        if (d <= 2 && ok) {
            PointConfiguration c = random_spanning_config(d, d + 3, 2, rng);
            gale_inverse(gale_transform(c));
        }
        rb.add("object d=" + std::to_string(d) + " #" + std::to_string(i),
               ok ? "all invariants hold" : note, "all invariants hold", ok);
    }
}

}  // namespace

std::vector<std::string> scenario_names() {
    return {"known_values", "diamond3d",  "thm31",         "prop32",     "example33",
            "cor45",        "cor46",      "cgf",           "cgf7",       "bk_thin",
            "sN_family",    "pyramids",   "free_joins",    "mv_projection", "invariants"};
}

std::vector<VerificationReport> run_scenario(const std::string& name, std::uint64_t seed,
                                             int count) {
    Rng rng(seed);
    ReportBuilder rb;
    rb.scenario = name;
    auto def = [&](int v) { return count > 0 ? count : v; };

    if (name == "known_values") scenario_known_values(rb);
    else if (name == "diamond3d") scenario_diamond3d(rb, rng, def(100));
    else if (name == "thm31") scenario_thm31(rb, rng, def(32));
    else if (name == "prop32") scenario_prop32(rb, rng, def(20));
    else if (name == "example33") scenario_example33(rb, rng, def(10));
    else if (name == "cor45") scenario_cor45(rb, rng, def(30));
    else if (name == "cor46") scenario_cor46(rb, rng, def(20));
    else if (name == "cgf") scenario_cgf(rb, count, 3, 6);
    else if (name == "cgf7") scenario_cgf(rb, count, 7, 7);
    else if (name == "bk_thin") scenario_bk_thin(rb, rng, def(10));
    else if (name == "sN_family") scenario_sN_family(rb, def(3));
    else if (name == "pyramids") scenario_pyramids(rb, rng, def(10));
    else if (name == "free_joins") scenario_free_joins(rb, rng, def(20));
    else if (name == "mv_projection") scenario_mv_projection(rb, rng, def(20));
    else if (name == "invariants") scenario_invariants(rb, rng, def(30));
    else throw std::invalid_argument("unknown scenario: " + name);

    return std::move(rb.reports);
}

}  // namespace lstar
