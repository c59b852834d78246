#ifndef CONVCODE_POLYMAT_HPP
#define CONVCODE_POLYMAT_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "convcode/linalg.hpp"
#include "convcode/poly.hpp"

namespace convcode {

/**
 * Dense matrix over F[z]. This is the working type of every normal-form
 * algorithm; the ring-tagged PolyMatrix is the public carrier and converts to
 * and from it.
 */
class PolyMat {
public:
    PolyMat() = default;
    PolyMat(Field f, std::size_t rows, std::size_t cols);

    static PolyMat identity(Field f, std::size_t n);
    static PolyMat from_constant(const FMat& m);

    const Field& field() const noexcept { return f_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Poly& operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
    Poly& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }

    PolyMat operator*(const PolyMat& o) const;
    PolyMat operator+(const PolyMat& o) const;
    PolyMat transpose() const;
    PolyMat columns(const std::vector<std::size_t>& idx) const;
    PolyMat rows_subset(const std::vector<std::size_t>& idx) const;
    PolyMat column_range(std::size_t c0, std::size_t n) const;
    PolyMat row_range(std::size_t r0, std::size_t n) const;
    static PolyMat hstack(const PolyMat& a, const PolyMat& b);
    static PolyMat vstack(const PolyMat& a, const PolyMat& b);

    /// Largest entry degree, -1 for the zero (or empty) matrix.
    int degree() const noexcept;
    /// Column degree, -1 for a zero column.
    int column_degree(std::size_t j) const noexcept;
    int row_degree(std::size_t i) const noexcept;
    bool column_is_zero(std::size_t j) const noexcept { return column_degree(j) < 0; }
    bool is_zero() const noexcept { return degree() < 0; }
    /// Matrix of the z^k coefficients.
    FMat coefficient(std::size_t k) const;
    /// Entrywise evaluation at z = x.
    FMat evaluate(Elem x) const;

    // Elementary column operations (used with mirrored transforms).
    void swap_columns(std::size_t a, std::size_t b);
    void scale_column(std::size_t j, Elem c);
    /// col_dst += f * col_src
    void add_column_multiple(std::size_t dst, std::size_t src, const Poly& f);
    void swap_rows(std::size_t a, std::size_t b);
    void scale_row(std::size_t i, Elem c);
    void add_row_multiple(std::size_t dst, std::size_t src, const Poly& f);

    std::string to_string() const;

    friend bool operator==(const PolyMat& a, const PolyMat& b) noexcept {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    Field f_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Poly> e_;
};

/// Column Popov reduction of M (n x k): M * U = [P | 0] with U unimodular,
/// P in column Popov form with full column rank r. The trailing k - r columns
/// of U form a right-prime basis of the right kernel of M.
struct PopovResult {
    PolyMat P;
    PolyMat U;
    std::size_t rank = 0;
    std::vector<int> degrees;          // column degrees of P, ascending by (degree, pivot)
    std::vector<std::size_t> pivots;   // pivot row of each column of P
};

/**
 * Column Popov form. Pivot of a column = last row attaining the column degree.
 * Popov: pivots distinct and monic, every other entry in a pivot row has
 * strictly smaller degree than that pivot, columns ordered by (degree, pivot).
 */
PopovResult popov_columns(const PolyMat& m);
/// Row Popov form via transposition: U * M = [P; 0].
PopovResult popov_rows(const PolyMat& m);

/// U * M * V = D with D "diagonal" (rows x cols), d_i | d_{i+1}, d_i monic.
/// Uinv and Vinv are the inverses of U and V.
struct SmithResult {
    PolyMat U, D, V, Uinv, Vinv;
    std::size_t rank = 0;
    std::vector<Poly> invariant_factors;  // d_1..d_rank
};
SmithResult smith(const PolyMat& m);

/// Rank over F(z) by fraction-free elimination.
std::size_t poly_rank(const PolyMat& m);
/// Determinant of a square polynomial matrix (Bareiss).
Poly poly_det(const PolyMat& m);
/// Monic gcd of all k x k minors of an n x k (n >= k) matrix; zero if rank < k.
Poly max_minor_gcd_tall(const PolyMat& m);

/// G = Gp * R with Gp right prime (n x k), G of full column rank k.
PolyMat right_prime_factor(const PolyMat& g);
/// Right-prime basis of {x : M x = 0} over F[z].
PolyMat right_kernel(const PolyMat& m);
/// Left-prime basis (as rows) of {y : y M = 0} over F[z].
PolyMat left_kernel(const PolyMat& m);

/**
 * z-saturation of the column module: the Laurent span of colspan M intersected
 * with F[z]^n. The result has full column rank r and its constant coefficient
 * matrix also has rank r. Not yet Popov-normalized.
 */
PolyMat saturate_columns(const PolyMat& m);

/// Canonical generator of a column module over F[z]: Popov basis.
PolyMat module_basis(const PolyMat& g);
/// Canonical generator of the Laurent column module: Popov basis of the saturation.
PolyMat laurent_module_basis(const PolyMat& g);

/**
 * Solve G m = w over F[z] for a column-reduced G of full column rank. The
 * predictable-degree property bounds deg m_j by deg w - deg col_j, which turns
 * the problem into one F-linear system. Returns nullopt when w is not in the
 * polynomial column module of G.
 */
std::optional<std::vector<Poly>> solve_column_reduced(const PolyMat& g, const std::vector<Poly>& w);

}  // namespace convcode

#endif
