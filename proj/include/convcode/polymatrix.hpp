#ifndef CONVCODE_POLYMATRIX_HPP
#define CONVCODE_POLYMATRIX_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "convcode/polymat.hpp"

namespace convcode {

/// Coefficient ring of a PolyMatrix: F[z], F[z, z^-1] or F(z).
enum class Ring { poly, laurent, rational };

std::string_view to_string(Ring r) noexcept;

enum class Side { column, row };
enum class PrimeSide { left, right };

/**
 * Ring-tagged matrix with entries in F(z). Every entry must belong to the
 * tagged ring; conforms() checks this. Empty shapes are allowed.
 */
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(Field f, Ring ring, std::size_t rows, std::size_t cols);

    /// Lift a polynomial matrix, tagging it with the given ring.
    static PolyMatrix from_poly(const PolyMat& m, Ring ring = Ring::poly);
    static PolyMatrix identity(Field f, std::size_t n, Ring ring = Ring::poly);

    const Field& field() const noexcept { return f_; }
    Ring ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const RationalFn& operator()(std::size_t i, std::size_t j) const noexcept { return e_[i * cols_ + j]; }
    RationalFn& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * cols_ + j]; }

    bool conforms() const noexcept;
    bool all_polynomial() const noexcept;
    bool all_laurent() const noexcept;
    /// Entries as polynomials; throws InvalidArgument when some entry is not.
    PolyMat to_poly() const;
    PolyMatrix with_ring(Ring r) const;

    PolyMatrix operator*(const PolyMatrix& o) const;
    PolyMatrix operator+(const PolyMatrix& o) const;
    PolyMatrix transpose() const;

    std::string to_string() const;

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) noexcept {
        return a.ring_ == b.ring_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    Field f_;
    Ring ring_ = Ring::poly;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<RationalFn> e_;
};

/// Multiply each column by the least common multiple of its denominators.
/// The result spans the same F(z) column space and is polynomial.
PolyMat clear_column_denominators(const PolyMatrix& m);

struct NormalForm {
    PolyMatrix P, U;
};

/**
 * Popov form over F[z] or F[z, z^-1]. Column side: P = M U; row side: P = U M.
 * Laurent input is canonicalized by saturating the module at z (the basis whose
 * constant coefficient has full rank), so that the Popov basis is unique for
 * the Laurent module.
 */
NormalForm popov_form(const PolyMatrix& m, Side side);

struct SmithForm {
    PolyMatrix U, D, V;
};
/// U M V = D with invariant factors monic (F[z]) or with unit constant term and
/// no z factor (F[z, z^-1]).
SmithForm smith_form(const PolyMatrix& m);

/// Maximal-minor primeness over the chosen ring. Throws RankDeficient.
bool is_prime(const PolyMatrix& m, PrimeSide side, Ring ring);

/// Rank over F(z).
std::size_t matrix_rank(const PolyMatrix& m);

/// c * z^k with c != 0.
bool is_laurent_unit(const Poly& p) noexcept;

}  // namespace convcode

#endif
