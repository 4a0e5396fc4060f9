#include "lstar/intlin.hpp"

#include <algorithm>
#include <limits>

namespace lstar {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vec IntMatrix::row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

Vec IntMatrix::col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::row_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += q * (*this)(j, k);
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_col(std::size_t i) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) = -(*this)(k, i);
}

void IntMatrix::col_axpy(std::size_t i, std::size_t j, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += q * (*this)(k, j);
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Int& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

namespace {

// quotient minimizing |a - q*b|, b != 0
Int nearest_div(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && 2 * abs(r) > abs(b)) q += (r > 0) == (b > 0) ? 1 : -1;
    return q;
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

HnfResult hnf(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(R);
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        // smallest nonzero entry as pivot keeps intermediate sizes modest
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (h(i, c) != 0 && (piv == R || abs(h(i, c)) < abs(h(piv, c)))) piv = i;
        if (piv == R) continue;
        h.swap_rows(r, piv);
        u.swap_rows(r, piv);
        for (bool again = true; again;) {
            again = false;
            for (std::size_t i = r + 1; i < R; ++i) {
                if (h(i, c) == 0) continue;
                Int q = nearest_div(h(i, c), h(r, c));
                h.row_axpy(i, r, -q);
                u.row_axpy(i, r, -q);
                if (h(i, c) != 0) {
                    h.swap_rows(r, i);
                    u.swap_rows(r, i);
                    again = true;
                }
            }
        }
        if (h(r, c) < 0) {
            h.negate_row(r);
            u.negate_row(r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, c), h(r, c));
            h.row_axpy(i, r, -q);
            u.row_axpy(i, r, -q);
        }
        ++r;
    }
    return {std::move(h), std::move(u)};
}

SnfResult snf(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(R);
    IntMatrix v = IntMatrix::identity(C);

    const std::size_t n = std::min(R, C);
    for (std::size_t t = 0; t < n; ++t) {
        // locate a smallest-magnitude nonzero pivot in the trailing block
        std::size_t pi = R, pj = C;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j)
                if (s(i, j) != 0 && (pi == R || abs(s(i, j)) < abs(s(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == R) break;
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (bool dirty = true; dirty;) {
            dirty = false;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (s(i, t) == 0) continue;
                Int q = nearest_div(s(i, t), s(t, t));
                s.row_axpy(i, t, -q);
                u.row_axpy(i, t, -q);
                if (s(i, t) != 0) {
                    s.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (s(t, j) == 0) continue;
                Int q = nearest_div(s(t, j), s(t, t));
                s.col_axpy(j, t, -q);
                v.col_axpy(j, t, -q);
                if (s(t, j) != 0) {
                    s.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) {
                // enforce divisibility of the remaining block by the pivot
                for (std::size_t i = t + 1; i < R && !dirty; ++i)
                    for (std::size_t j = t + 1; j < C && !dirty; ++j)
                        if (s(i, j) % s(t, t) != 0) {
                            s.row_axpy(t, i, 1);
                            u.row_axpy(t, i, 1);
                            dirty = true;
                        }
            }
        }
        if (s(t, t) < 0) {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    return {std::move(s), std::move(u), std::move(v)};
}

IntMatrix saturated_kernel(const IntMatrix& m) {
    // rows of u whose image under m^T vanishes span the full integer
    // kernel, which is saturated by construction
    auto [h, u] = hnf(m.transposed());
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        bool zero = true;
        for (std::size_t j = 0; j < h.cols() && zero; ++j) zero = h(i, j) == 0;
        if (zero) basis.push_back(u.row(i));
    }
    return IntMatrix::from_rows(basis, m.cols());
}

std::optional<Vec> solve_integer(const IntMatrix& a, const Vec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: rhs length mismatch");
    const std::size_t R = a.rows(), C = a.cols();
    if (C == 0) {
        for (const Int& x : b)
            if (x != 0) return std::nullopt;
        return Vec{};
    }
    auto [h, u] = hnf(a.transposed());  // u * a^T = h, so a * u^T = h^T
    // pivot structure of h: row p has leading nonzero at column q[p]
    std::vector<std::size_t> pivcol;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && h(i, j) == 0) ++j;
        if (j == h.cols()) break;
        pivcol.push_back(j);
    }
    Vec y(C);
    for (std::size_t p = 0; p < pivcol.size(); ++p) {
        const std::size_t q = pivcol[p];
        Int acc = b[q];
        for (std::size_t p2 = 0; p2 < p; ++p2) acc -= h(p2, q) * y[p2];
        if (acc % h(p, q) != 0) return std::nullopt;
        y[p] = acc / h(p, q);
    }
    // consistency on the remaining rows of h^T y = b
    for (std::size_t i = 0; i < R; ++i) {
        Int acc = 0;
        for (std::size_t p = 0; p < pivcol.size(); ++p) acc += h(p, i) * y[p];
        if (acc != b[i]) return std::nullopt;
    }
    Vec x(C);
    for (std::size_t p = 0; p < pivcol.size(); ++p) {
        if (y[p] == 0) continue;
        for (std::size_t j = 0; j < C; ++j) x[j] += y[p] * u(p, j);
    }
    return x;
}

std::optional<Vec> lattice_membership_solve(const IntMatrix& basis, const Vec& target) {
    if (basis.rows() == 0) {
        for (const Int& t : target)
            if (t != 0) return std::nullopt;
        return Vec{};
    }
    if (target.size() != basis.cols())
        throw std::invalid_argument("lattice_membership_solve: dimension mismatch");
    return solve_integer(basis.transposed(), target);
}

Int determinant(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: square matrix required");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

std::size_t rank_of(const IntMatrix& m) {
    // fraction-free elimination (Montante/Bareiss): entries stay minors
    IntMatrix a = m;
    const std::size_t R = a.rows(), C = a.cols();
    std::size_t r = 0;
    Int prev = 1;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t piv = R;
        for (std::size_t i = r; i < R; ++i)
            if (a(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv == R) continue;
        a.swap_rows(r, piv);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j)
                a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse_unimodular: square required");
    auto [h, u] = hnf(m);
    if (h != IntMatrix::identity(m.rows()))
        throw std::invalid_argument("inverse_unimodular: matrix is not unimodular");
    return u;
}

IntMatrix complete_primitive_row(const Vec& c) {
    const std::size_t n = c.size();
    if (n == 0) throw std::invalid_argument("complete_primitive_row: empty vector");
    IntMatrix col(n, 1);
    for (std::size_t i = 0; i < n; ++i) col(i, 0) = c[i];
    auto [h, u] = hnf(col);
    if (h(0, 0) != 1) throw std::invalid_argument("complete_primitive_row: vector not primitive");
    // u * c^T = e1, hence c equals the first column of u^{-1}; transposing
    // the inverse puts c in the first row
    return inverse_unimodular(u).transposed();
}

Int vec_gcd(const Vec& v) {
    Int g = 0;
    for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
    return g;
}

Int dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec vec_scale(const Vec& a, const Int& k) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
    return r;
}

bool is_zero_vec(const Vec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace lstar
