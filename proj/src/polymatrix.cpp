#include "convcode/polymatrix.hpp"

#include <algorithm>
#include <sstream>

namespace convcode {

std::string_view to_string(Ring r) noexcept {
    switch (r) {
        case Ring::poly: return "poly";
        case Ring::laurent: return "laurent";
        case Ring::rational: return "rational";
    }
    return "?";
}

PolyMatrix::PolyMatrix(Field f, Ring ring, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), ring_(ring), rows_(rows), cols_(cols), e_(rows * cols, RationalFn(f_)) {}

PolyMatrix PolyMatrix::from_poly(const PolyMat& m, Ring ring) {
    PolyMatrix r(m.field(), ring, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = RationalFn(m(i, j));
    return r;
}

PolyMatrix PolyMatrix::identity(Field f, std::size_t n, Ring ring) {
    return from_poly(PolyMat::identity(std::move(f), n), ring);
}

bool PolyMatrix::all_polynomial() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const RationalFn& x) { return x.is_polynomial(); });
}

bool PolyMatrix::all_laurent() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](const RationalFn& x) { return x.is_laurent(); });
}

bool PolyMatrix::conforms() const noexcept {
    switch (ring_) {
        case Ring::poly: return all_polynomial();
        case Ring::laurent: return all_laurent();
        case Ring::rational: return true;
    }
    return false;
}

PolyMat PolyMatrix::to_poly() const {
    PolyMat r(f_, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j).to_poly();
    return r;
}

PolyMatrix PolyMatrix::with_ring(Ring r) const {
    PolyMatrix m(*this);
    m.ring_ = r;
    if (!m.conforms()) fail(ErrorKind::InvalidArgument, "matrix entries do not belong to the " + std::string(convcode::to_string(r)) + " ring");
    return m;
}

namespace {
Ring wider(Ring a, Ring b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }
}  // namespace

PolyMatrix PolyMatrix::operator*(const PolyMatrix& o) const {
    if (cols_ != o.rows_) fail(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    PolyMatrix r(f_.valid() ? f_ : o.f_, wider(ring_, o.ring_), rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const RationalFn& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) = r(i, j) + a * o(k, j);
        }
    return r;
}

PolyMatrix PolyMatrix::operator+(const PolyMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) fail(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    PolyMatrix r(f_, wider(ring_, o.ring_), rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
}

PolyMatrix PolyMatrix::transpose() const {
    PolyMatrix t(f_, ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string PolyMatrix::to_string() const {
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

PolyMat clear_column_denominators(const PolyMatrix& m) {
    const Field& f = m.field();
    PolyMat r(f, m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Poly l = Poly::one(f);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            const Poly& d = m(i, j).den();
            l = exact_div(l * d, gcd(l, d));
        }
        for (std::size_t i = 0; i < m.rows(); ++i) r(i, j) = m(i, j).num() * exact_div(l, m(i, j).den());
    }
    return r;
}

bool is_laurent_unit(const Poly& p) noexcept { return p.is_monomial(); }

namespace {

void require_normal_form_ring(const PolyMatrix& m) {
    if (m.ring() == Ring::rational) fail(ErrorKind::RationalRingUnsupported, "normal forms need a polynomial or Laurent matrix");
    if (!m.conforms()) fail(ErrorKind::InvalidArgument, "matrix entries do not belong to its ring");
}

// Dense Laurent matrix used only to track transforms.
struct LMat {
    std::size_t rows, cols;
    std::vector<LaurentPoly> e;
    LMat(const Field& f, std::size_t r, std::size_t c) : rows(r), cols(c), e(r * c, LaurentPoly(f)) {}
    LaurentPoly& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return e[i * cols + j]; }
};

LMat lmat_mul(const Field& f, const LMat& a, const PolyMat& b) {
    LMat r(f, a.rows, b.cols());
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero()) r.at(i, j) = r.at(i, j) + a.at(i, k) * LaurentPoly(b(k, j));
        }
    return r;
}

PolyMatrix to_matrix(const Field& f, const LMat& m) {
    PolyMatrix r(f, Ring::laurent, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r(i, j) = RationalFn(m.at(i, j));
    return r;
}

// Per-column shifts making a Laurent matrix polynomial with z not dividing any
// nonzero column.
std::vector<int> column_min_exponents(const PolyMatrix& m) {
    std::vector<int> s(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        bool seen = false;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            const int e = m(i, j).to_laurent().min_exponent();
            s[j] = seen ? std::min(s[j], e) : e;
            seen = true;
        }
    }
    return s;
}

PolyMat shift_columns(const PolyMatrix& m, const std::vector<int>& mins) {
    PolyMat r(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).is_zero()) continue;
            const LaurentPoly l = m(i, j).to_laurent();
            r(i, j) = l.body().shifted_up(static_cast<std::size_t>(l.shift() - mins[j]));
        }
    return r;
}

NormalForm laurent_popov_columns(const PolyMatrix& m) {
    const Field& f = m.field();
    const std::size_t k = m.cols();
    const std::vector<int> mins = column_min_exponents(m);
    const PolyMat m0 = shift_columns(m, mins);

    LMat T(f, k, k);
    for (std::size_t j = 0; j < k; ++j) T.at(j, j) = LaurentPoly(Poly::one(f), -mins[j]);

    const PopovResult first = popov_columns(m0);
    T = lmat_mul(f, T, first.U);
    PolyMat B = first.P;
    const std::size_t r = first.rank;

    const LaurentPoly zinv(Poly::one(f), -1);
    for (;;) {
        const FMat ns = nullspace(B.coefficient(0));
        if (ns.cols() == 0) break;
        std::size_t j = r;
        for (std::size_t i = r; i-- > 0;)
            if (ns(i, 0) != 0) {
                j = i;
                break;
            }
        std::vector<Poly> col(B.rows(), Poly(f));
        std::vector<LaurentPoly> tcol(k, LaurentPoly(f));
        for (std::size_t i = 0; i < r; ++i) {
            const Elem c = ns(i, 0);
            if (c == 0) continue;
            for (std::size_t row = 0; row < B.rows(); ++row) col[row] += B(row, i).scaled(c);
            const LaurentPoly lc(Poly::constant(f, c));
            for (std::size_t row = 0; row < k; ++row) tcol[row] = tcol[row] + T.at(row, i) * lc;
        }
        for (std::size_t row = 0; row < B.rows(); ++row) B(row, j) = col[row].shifted_down(1);
        for (std::size_t row = 0; row < k; ++row) T.at(row, j) = tcol[row] * zinv;
    }

    const PopovResult second = popov_columns(B);
    PolyMat U2 = PolyMat::identity(f, k);
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) U2(a, b) = second.U(a, b);
    T = lmat_mul(f, T, U2);

    return {PolyMatrix::from_poly(second.P, Ring::laurent), to_matrix(f, T)};
}

}  // namespace

NormalForm popov_form(const PolyMatrix& m, Side side) {
    require_normal_form_ring(m);
    if (side == Side::row) {
        NormalForm c = popov_form(m.transpose(), Side::column);
        return {c.P.transpose(), c.U.transpose()};
    }
    if (m.ring() == Ring::laurent) return laurent_popov_columns(m);
    const PopovResult p = popov_columns(m.to_poly());
    return {PolyMatrix::from_poly(p.P), PolyMatrix::from_poly(p.U)};
}

SmithForm smith_form(const PolyMatrix& m) {
    require_normal_form_ring(m);
    const Field& f = m.field();
    if (m.ring() == Ring::poly) {
        const SmithResult s = smith(m.to_poly());
        return {PolyMatrix::from_poly(s.U), PolyMatrix::from_poly(s.D), PolyMatrix::from_poly(s.V)};
    }
    const std::vector<int> mins = column_min_exponents(m);
    const SmithResult s = smith(shift_columns(m, mins));

    // Right factor absorbs the column shifts, left factor absorbs z^v c.
    PolyMatrix V = PolyMatrix::from_poly(s.V, Ring::laurent);
    for (std::size_t i = 0; i < V.rows(); ++i)
        for (std::size_t j = 0; j < V.cols(); ++j)
            if (!V(i, j).is_zero()) V(i, j) = RationalFn(LaurentPoly(Poly::one(f), -mins[i])) * V(i, j);
    PolyMatrix U = PolyMatrix::from_poly(s.U, Ring::laurent);
    PolyMatrix D = PolyMatrix::from_poly(s.D, Ring::laurent);
    for (std::size_t i = 0; i < s.rank; ++i) {
        const Poly& d = s.D(i, i);
        const std::size_t v = d.valuation();
        const Elem c = f.inv(d.coeff(v));
        const RationalFn unit(LaurentPoly(Poly::constant(f, c), -static_cast<int>(v)));
        for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = unit * U(i, j);
        D(i, i) = unit * D(i, i);
    }
    return {U, D, V};
}

std::size_t matrix_rank(const PolyMatrix& m) { return poly_rank(clear_column_denominators(m)); }

bool is_prime(const PolyMatrix& m, PrimeSide side, Ring ring) {
    if (ring == Ring::rational) fail(ErrorKind::RationalRingUnsupported, "primeness is defined over F[z] or F[z, z^-1]");
    if (m.ring() == Ring::rational && !m.all_laurent())
        fail(ErrorKind::RationalRingUnsupported, "primeness needs a polynomial or Laurent matrix");
    if (ring == Ring::poly && !m.all_polynomial())
        fail(ErrorKind::InvalidArgument, "Laurent entries are not polynomials");
    PolyMatrix t = side == PrimeSide::left ? m.transpose() : m;
    if (t.cols() > t.rows()) fail(ErrorKind::DimensionMismatch, "primeness side does not match the matrix shape");
    PolyMat p;
    if (ring == Ring::laurent) {
        p = shift_columns(t, column_min_exponents(t));
    } else {
        p = t.to_poly();
    }
    if (poly_rank(p) != p.cols()) fail(ErrorKind::RankDeficient, "primeness test needs full rank");
    const Poly g = max_minor_gcd_tall(p);
    return ring == Ring::poly ? g.is_constant() : is_laurent_unit(g);
}

}  // namespace convcode
