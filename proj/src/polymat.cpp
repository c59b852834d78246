#include "convcode/polymat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace convcode {

PolyMat::PolyMat(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), e_(rows * cols, Poly(f_)) {}

PolyMat PolyMat::identity(Field f, std::size_t n) {
    PolyMat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::one(f);
    return m;
}

PolyMat PolyMat::from_constant(const FMat& c) {
    PolyMat m(c.field(), c.rows(), c.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(c.field(), c(i, j));
    return m;
}

PolyMat PolyMat::operator*(const PolyMat& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "polynomial matrix product shape mismatch");
    PolyMat r(f_.valid() ? f_ : o.f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Poly& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                const Poly& b = o(k, j);
                if (!b.is_zero()) r(i, j) += a * b;
            }
        }
    return r;
}

PolyMat PolyMat::operator+(const PolyMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "polynomial matrix sum shape mismatch");
    PolyMat r(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

PolyMat PolyMat::transpose() const {
    PolyMat t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

PolyMat PolyMat::columns(const std::vector<std::size_t>& idx) const {
    PolyMat r(f_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
}

PolyMat PolyMat::rows_subset(const std::vector<std::size_t>& idx) const {
    PolyMat r(f_, idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
    return r;
}

PolyMat PolyMat::column_range(std::size_t c0, std::size_t n) const {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), c0);
    return columns(idx);
}

PolyMat PolyMat::row_range(std::size_t r0, std::size_t n) const {
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), r0);
    return rows_subset(idx);
}

PolyMat PolyMat::hstack(const PolyMat& a, const PolyMat& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::DimensionMismatch, "hstack row mismatch");
    PolyMat r(a.field().valid() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
}

PolyMat PolyMat::vstack(const PolyMat& a, const PolyMat& b) {
    return hstack(a.transpose(), b.transpose()).transpose();
}

int PolyMat::degree() const noexcept {
    int d = -1;
    for (const auto& p : e_) d = std::max(d, p.degree());
    return d;
}

int PolyMat::column_degree(std::size_t j) const noexcept {
    int d = -1;
    for (std::size_t i = 0; i < rows_; ++i) d = std::max(d, (*this)(i, j).degree());
    return d;
}

int PolyMat::row_degree(std::size_t i) const noexcept {
    int d = -1;
    for (std::size_t j = 0; j < cols_; ++j) d = std::max(d, (*this)(i, j).degree());
    return d;
}

FMat PolyMat::coefficient(std::size_t k) const {
    FMat c(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).coeff(k);
    return c;
}

FMat PolyMat::evaluate(Elem x) const {
    FMat c(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) c(i, j) = (*this)(i, j).eval(x);
    return c;
}

void PolyMat::swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMat::scale_column(std::size_t j, Elem c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j).scaled(c);
}

void PolyMat::add_column_multiple(std::size_t dst, std::size_t src, const Poly& f) {
    if (f.is_zero()) return;
    for (std::size_t i = 0; i < rows_; ++i) {
        const Poly& s = (*this)(i, src);
        if (!s.is_zero()) (*this)(i, dst) += f * s;
    }
}

void PolyMat::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void PolyMat::scale_row(std::size_t i, Elem c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = (*this)(i, j).scaled(c);
}

void PolyMat::add_row_multiple(std::size_t dst, std::size_t src, const Poly& f) {
    if (f.is_zero()) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        const Poly& s = (*this)(src, j);
        if (!s.is_zero()) (*this)(dst, j) += f * s;
    }
}

std::string PolyMat::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << (*this)(i, j).to_string();
        }
    }
    os << "]";
    return os.str();
}

namespace {

// Last row attaining the column degree; rows() for a zero column.
std::size_t column_pivot(const PolyMat& m, std::size_t j, int d) {
    if (d < 0) return m.rows();
    for (std::size_t i = m.rows(); i-- > 0;)
        if (m(i, j).degree() == d) return i;
    return m.rows();
}

}  // namespace

PopovResult popov_columns(const PolyMat& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows(), k = m.cols();
    PolyMat P = m;
    PolyMat U = PolyMat::identity(f, k);

    // Weak Popov by simple transformations: while two nonzero columns share a
    // pivot row, cancel the pivot of the higher-degree one.
    std::vector<int> deg(k);
    std::vector<std::size_t> piv(k);
    for (;;) {
        for (std::size_t j = 0; j < k; ++j) {
            deg[j] = P.column_degree(j);
            piv[j] = column_pivot(P, j, deg[j]);
        }
        bool changed = false;
        for (std::size_t a = 0; a < k && !changed; ++a) {
            if (deg[a] < 0) continue;
            for (std::size_t b = 0; b < k; ++b) {
                if (a == b || deg[b] < 0 || piv[a] != piv[b] || deg[a] > deg[b]) continue;
                if (deg[a] == deg[b] && a > b) continue;
                const std::size_t r = piv[a];
                const Elem c = f.div(P(r, b).lead(), P(r, a).lead());
                const Poly mult = Poly::monomial(f, f.neg(c), static_cast<std::size_t>(deg[b] - deg[a]));
                P.add_column_multiple(b, a, mult);
                U.add_column_multiple(b, a, mult);
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }

    std::vector<std::size_t> nonzero, zero;
    for (std::size_t j = 0; j < k; ++j) (deg[j] < 0 ? zero : nonzero).push_back(j);
    std::sort(nonzero.begin(), nonzero.end(), [&](std::size_t a, std::size_t b) {
        return std::tie(deg[a], piv[a]) < std::tie(deg[b], piv[b]);
    });
    std::vector<std::size_t> order = nonzero;
    order.insert(order.end(), zero.begin(), zero.end());
    P = P.columns(order);
    U = U.columns(order);
    const std::size_t r = nonzero.size();
    std::vector<int> d(r);
    std::vector<std::size_t> pv(r);
    for (std::size_t j = 0; j < r; ++j) {
        d[j] = deg[order[j]];
        pv[j] = piv[order[j]];
        const Elem inv = f.inv(P(pv[j], j).lead());
        if (inv != 1) {
            P.scale_column(j, inv);
            U.scale_column(j, inv);
        }
    }

    // Popov: reduce each column against earlier columns in (degree, pivot) order.
    for (std::size_t j = 0; j < r; ++j) {
        for (;;) {
            int best_shift = -1;
            std::size_t best = 0;
            for (std::size_t l = 0; l < j; ++l) {
                const int s = P(pv[l], j).degree() - d[l];
                if (s > best_shift) {
                    best_shift = s;
                    best = l;
                }
            }
            if (best_shift < 0) break;
            const Elem c = P(pv[best], j).lead();
            const Poly mult = Poly::monomial(f, f.neg(c), static_cast<std::size_t>(best_shift));
            P.add_column_multiple(j, best, mult);
            U.add_column_multiple(j, best, mult);
        }
    }
    (void)n;
    PopovResult res;
    res.P = P.column_range(0, r);
    res.U = std::move(U);
    res.rank = r;
    res.degrees = std::move(d);
    res.pivots = std::move(pv);
    return res;
}

PopovResult popov_rows(const PolyMat& m) {
    PopovResult c = popov_columns(m.transpose());
    c.P = c.P.transpose();
    c.U = c.U.transpose();
    return c;
}

SmithResult smith(const PolyMat& m) {
    const Field& f = m.field();
    const std::size_t R = m.rows(), C = m.cols();
    PolyMat A = m;
    PolyMat U = PolyMat::identity(f, R), Uinv = PolyMat::identity(f, R);
    PolyMat V = PolyMat::identity(f, C), Vinv = PolyMat::identity(f, C);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        A.swap_rows(a, b);
        U.swap_rows(a, b);
        Uinv.swap_columns(a, b);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Poly& g) {
        A.add_row_multiple(dst, src, g);
        U.add_row_multiple(dst, src, g);
        Uinv.add_column_multiple(src, dst, -g);
    };
    auto scale_row = [&](std::size_t i, Elem c) {
        A.scale_row(i, c);
        U.scale_row(i, c);
        Uinv.scale_column(i, f.inv(c));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        A.swap_columns(a, b);
        V.swap_columns(a, b);
        Vinv.swap_rows(a, b);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Poly& g) {
        A.add_column_multiple(dst, src, g);
        V.add_column_multiple(dst, src, g);
        Vinv.add_row_multiple(src, dst, -g);
    };

    std::size_t t = 0;
    std::vector<Poly> factors;
    while (t < std::min(R, C)) {
        // Smallest-degree nonzero entry of the trailing block becomes the pivot.
        int best = -1;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                const int d = A(i, j).degree();
                if (d >= 0 && (best < 0 || d < best)) {
                    best = d;
                    bi = i;
                    bj = j;
                }
            }
        if (best < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);

        for (;;) {
            // Bring the smallest entry of row t / column t to the pivot.
            int pd = A(t, t).degree();
            std::size_t mi = t, mj = t;
            for (std::size_t i = t + 1; i < R; ++i) {
                const int d = A(i, t).degree();
                if (d >= 0 && d < pd) {
                    pd = d;
                    mi = i;
                    mj = t;
                }
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                const int d = A(t, j).degree();
                if (d >= 0 && d < pd) {
                    pd = d;
                    mi = t;
                    mj = j;
                }
            }
            if (mi != t) swap_rows(t, mi);
            if (mj != t) swap_cols(t, mj);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (A(i, t).is_zero()) continue;
                auto [q, r] = divmod(A(i, t), A(t, t));
                add_row(i, t, -q);
                if (!r.is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (A(t, j).is_zero()) continue;
                auto [q, r] = divmod(A(t, j), A(t, t));
                add_col(j, t, -q);
                if (!r.is_zero()) clean = false;
            }
            if (!clean) continue;

            // Divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < R && divides; ++i)
                for (std::size_t j = t + 1; j < C; ++j) {
                    if (A(i, j).is_zero()) continue;
                    if (!divmod(A(i, j), A(t, t)).second.is_zero()) {
                        add_row(t, i, Poly::one(f));
                        divides = false;
                        break;
                    }
                }
            if (divides) break;
        }
        const Elem lc = A(t, t).lead();
        if (lc != 1) scale_row(t, f.inv(lc));
        factors.push_back(A(t, t));
        ++t;
    }

    SmithResult res;
    res.rank = factors.size();
    res.invariant_factors = std::move(factors);
    res.U = std::move(U);
    res.D = std::move(A);
    res.V = std::move(V);
    res.Uinv = std::move(Uinv);
    res.Vinv = std::move(Vinv);
    return res;
}

std::size_t poly_rank(const PolyMat& m) {
    PolyMat A = m;
    const std::size_t R = A.rows(), C = A.cols();
    std::size_t row = 0;
    for (std::size_t col = 0; col < C && row < R; ++col) {
        std::size_t piv = R;
        for (std::size_t i = row; i < R; ++i)
            if (!A(i, col).is_zero() && (piv == R || A(i, col).degree() < A(piv, col).degree())) piv = i;
        if (piv == R) continue;
        A.swap_rows(row, piv);
        for (std::size_t i = row + 1; i < R; ++i) {
            if (A(i, col).is_zero()) continue;
            const Poly a = A(row, col), b = A(i, col);
            for (std::size_t j = col; j < C; ++j) A(i, j) = a * A(i, j) - b * A(row, j);
            // Strip the row content to keep degrees in check.
            Poly g(A.field());
            for (std::size_t j = col; j < C; ++j) g = gcd(g, A(i, j));
            if (!g.is_zero() && !g.is_constant())
                for (std::size_t j = col; j < C; ++j) A(i, j) = exact_div(A(i, j), g);
        }
        ++row;
    }
    return row;
}

Poly poly_det(const PolyMat& m) {
    if (m.rows() != m.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square polynomial matrix");
    const Field& f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one(f);
    PolyMat A = m;
    bool negate = false;
    Poly prev = Poly::one(f);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (A(k, k).is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && A(piv, k).is_zero()) ++piv;
            if (piv == n) return Poly(f);
            A.swap_rows(k, piv);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                A(i, j) = exact_div(A(k, k) * A(i, j) - A(i, k) * A(k, j), prev);
            A(i, k) = Poly(f);
        }
        prev = A(k, k);
    }
    Poly d = A(n - 1, n - 1);
    return negate ? -d : d;
}

Poly max_minor_gcd_tall(const PolyMat& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows(), k = m.cols();
    if (k == 0) return Poly::one(f);
    if (n < k) return Poly(f);
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    Poly g(f);
    for (;;) {
        g = gcd(g, poly_det(m.rows_subset(idx)));
        if (g.is_one()) return g;
        // Next k-combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return g;
}

PolyMat right_prime_factor(const PolyMat& g) {
    const SmithResult s = smith(g);
    if (s.rank != g.cols()) fail(ErrorKind::RankDeficient, "right prime factor needs full column rank");
    return s.Uinv.column_range(0, g.cols());
}

PolyMat module_basis(const PolyMat& g) { return popov_columns(g).P; }

PolyMat right_kernel(const PolyMat& m) {
    const PopovResult p = popov_columns(m);
    const PolyMat ker = p.U.column_range(p.rank, m.cols() - p.rank);
    if (ker.cols() == 0) return ker;
    return module_basis(ker);
}

PolyMat left_kernel(const PolyMat& m) { return right_kernel(m.transpose()).transpose(); }

PolyMat saturate_columns(const PolyMat& m) {
    const Field& f = m.field();
    PolyMat B = module_basis(m);
    for (;;) {
        const FMat c0 = B.coefficient(0);
        const FMat ns = nullspace(c0);
        if (ns.cols() == 0) break;
        std::size_t j = B.cols();
        for (std::size_t i = B.cols(); i-- > 0;)
            if (ns(i, 0) != 0) {
                j = i;
                break;
            }
        std::vector<Poly> col(B.rows(), Poly(f));
        for (std::size_t i = 0; i < B.cols(); ++i) {
            if (ns(i, 0) == 0) continue;
            for (std::size_t r = 0; r < B.rows(); ++r) col[r] += B(r, i).scaled(ns(i, 0));
        }
        for (std::size_t r = 0; r < B.rows(); ++r) B(r, j) = col[r].shifted_down(1);
    }
    return B;
}

PolyMat laurent_module_basis(const PolyMat& g) { return module_basis(saturate_columns(g)); }

std::optional<std::vector<Poly>> solve_column_reduced(const PolyMat& g, const std::vector<Poly>& w) {
    const Field& f = g.field();
    const std::size_t n = g.rows(), k = g.cols();
    if (w.size() != n) fail(ErrorKind::DimensionMismatch, "word length does not match the generator");
    int dw = -1;
    for (const auto& p : w) dw = std::max(dw, p.degree());
    std::vector<Poly> m(k, Poly(f));
    if (dw < 0) return m;

    // Unknown layout: message j occupies coefficients 0..bound_j.
    std::vector<int> bound(k);
    std::vector<std::size_t> offset(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        const int d = g.column_degree(j);
        bound[j] = d < 0 ? -1 : dw - d;
        offset[j + 1] = offset[j] + static_cast<std::size_t>(std::max(bound[j] + 1, 0));
    }
    const std::size_t rows = n * static_cast<std::size_t>(dw + 1);
    FMat a(f, rows, offset[k]);
    std::vector<Elem> b(rows, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (int t = 0; t <= dw; ++t) b[i * static_cast<std::size_t>(dw + 1) + static_cast<std::size_t>(t)] = w[i].coeff(static_cast<std::size_t>(t));
        for (std::size_t j = 0; j < k; ++j) {
            const Poly& gij = g(i, j);
            for (int s = 0; s <= bound[j]; ++s)
                for (int e = 0; e <= gij.degree(); ++e) {
                    const int t = s + e;
                    if (t > dw) break;
                    a(i * static_cast<std::size_t>(dw + 1) + static_cast<std::size_t>(t), offset[j] + static_cast<std::size_t>(s)) =
                        gij.coeff(static_cast<std::size_t>(e));
                }
        }
    }
    const auto x = solve(a, b);
    if (!x) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Elem> c(x->begin() + static_cast<std::ptrdiff_t>(offset[j]), x->begin() + static_cast<std::ptrdiff_t>(offset[j + 1]));
        m[j] = Poly(f, std::move(c));
    }
    return m;
}

}  // namespace convcode
