#ifndef CONVCODE_LINALG_HPP
#define CONVCODE_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "convcode/field.hpp"

namespace convcode {

/// Dense matrix with constant entries in F. Empty shapes (0 x n, n x 0) are legal.
class FMat {
public:
    FMat() = default;
    FMat(Field f, std::size_t rows, std::size_t cols);
    FMat(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data);

    static FMat identity(Field f, std::size_t n);

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Elem operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }
    Elem& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }

    FMat transpose() const;
    FMat operator*(const FMat& o) const;
    FMat operator+(const FMat& o) const;
    FMat operator-() const;
    std::vector<Elem> apply(const std::vector<Elem>& x) const;

    FMat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const FMat& b);
    static FMat hstack(const FMat& a, const FMat& b);
    static FMat vstack(const FMat& a, const FMat& b);

    bool is_zero() const noexcept;
    friend bool operator==(const FMat& a, const FMat& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Elem> data_;
};

/// Reduced row echelon form result: the reduced matrix plus its pivot columns.
struct RowEchelon {
    FMat reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_echelon(FMat a);
std::size_t rank(const FMat& a);
Elem determinant(FMat a);
std::optional<FMat> inverse(const FMat& a);
/// Basis of {x : a x = 0} as the columns of the returned matrix.
FMat nullspace(const FMat& a);
/// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Elem>> solve(const FMat& a, const std::vector<Elem>& b);

}  // namespace convcode

#endif
