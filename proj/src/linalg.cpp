#include "convcode/linalg.hpp"

namespace convcode {

FMat::FMat(Field f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FMat::FMat(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) fail(ErrorKind::DimensionMismatch, "FMat data size mismatch");
}

FMat FMat::identity(Field f, std::size_t n) {
    FMat m(std::move(f), n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FMat FMat::transpose() const {
    FMat t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

FMat FMat::operator*(const FMat& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "FMat product shape mismatch");
    FMat r(f_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) = f_.add(r(i, j), f_.mul(a, o(k, j)));
        }
    return r;
}

FMat FMat::operator+(const FMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "FMat sum shape mismatch");
    FMat r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = f_.add(data_[i], o.data_[i]);
    return r;
}

FMat FMat::operator-() const {
    FMat r(*this);
    for (auto& v : r.data_) v = f_.neg(v);
    return r;
}

std::vector<Elem> FMat::apply(const std::vector<Elem>& x) const {
    if (x.size() != cols_) fail(ErrorKind::DimensionMismatch, "FMat apply shape mismatch");
    std::vector<Elem> y(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) y[i] = f_.add(y[i], f_.mul((*this)(i, j), x[j]));
    return y;
}

FMat FMat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    FMat b(f_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void FMat::set_block(std::size_t r0, std::size_t c0, const FMat& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

FMat FMat::hstack(const FMat& a, const FMat& b) {
    if (a.rows() != b.rows()) fail(ErrorKind::DimensionMismatch, "hstack row mismatch");
    FMat r(a.field().valid() ? a.field() : b.field(), a.rows(), a.cols() + b.cols());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

FMat FMat::vstack(const FMat& a, const FMat& b) {
    if (a.cols() != b.cols()) fail(ErrorKind::DimensionMismatch, "vstack column mismatch");
    FMat r(a.field().valid() ? a.field() : b.field(), a.rows() + b.rows(), a.cols());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

bool FMat::is_zero() const noexcept {
    for (auto v : data_)
        if (v) return false;
    return true;
}

RowEchelon row_echelon(FMat a) {
    const Field& f = a.field();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const Elem inv = f.inv(a(row, col));
        for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(a(row, j), inv);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            const Elem factor = a(i, col);
            for (std::size_t j = col; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const FMat& a) {
    if (a.rows() == 0 || a.cols() == 0) return 0;
    return row_echelon(a).pivots.size();
}

Elem determinant(FMat a) {
    if (a.rows() != a.cols()) fail(ErrorKind::DimensionMismatch, "determinant of non-square matrix");
    const Field& f = a.field();
    const std::size_t n = a.rows();
    Elem det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a(piv, c) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
            det = f.neg(det);
        }
        det = f.mul(det, a(c, c));
        const Elem inv = f.inv(a(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a(i, c) == 0) continue;
            const Elem factor = f.mul(a(i, c), inv);
            for (std::size_t j = c; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(c, j)));
        }
    }
    return det;
}

std::optional<FMat> inverse(const FMat& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    const std::size_t n = a.rows();
    auto e = row_echelon(FMat::hstack(a, FMat::identity(a.field(), n)));
    if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
    return e.reduced.block(0, n, n, n);
}

FMat nullspace(const FMat& a) {
    const auto e = row_echelon(a);
    const Field& f = a.field();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    FMat basis(f, a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t fc = free_cols[k];
        basis(fc, k) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = f.neg(e.reduced(r, fc));
    }
    return basis;
}

std::optional<std::vector<Elem>> solve(const FMat& a, const std::vector<Elem>& b) {
    if (b.size() != a.rows()) fail(ErrorKind::DimensionMismatch, "solve right-hand side size mismatch");
    FMat aug(a.field(), a.rows(), a.cols() + 1);
    aug.set_block(0, 0, a);
    for (std::size_t i = 0; i < b.size(); ++i) aug(i, a.cols()) = b[i];
    const auto e = row_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
    std::vector<Elem> x(a.cols(), 0);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
    return x;
}

}  // namespace convcode
