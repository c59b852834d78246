#ifndef CONVCODE_PMAT_IO_HPP
#define CONVCODE_PMAT_IO_HPP

#include <string>
#include <string_view>

#include "convcode/polymatrix.hpp"

namespace convcode {

/// SyntaxError raised by parse_pmat, with 1-based position of the offending token.
class PmatSyntaxError : public Error {
public:
    PmatSyntaxError(std::size_t line, std::size_t column, const std::string& msg);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_, column_;
};

/**
 * Line-oriented matrix format:
 *
 *   # comment
 *   field <p> [<m> <c0> .. <cm>]
 *   ring poly|laurent|rational        (optional, default poly)
 *   size <rows> <cols>
 *   p <c0> <c1> ...                   one entry per line, row-major
 *   l <minexp> <c0> ...
 *   r <n0> ... | <d0> ...
 *
 * Coefficients are integers 0..q-1 (base-p digits of the field element),
 * ascending powers, with no trailing zeros; zero is "p 0", "l 0 0" or
 * "r 0 | 1". Laurent entries are allowed in laurent and rational rings,
 * rational entries only in the rational ring. Fractions are reduced on input.
 *
 * Errors: SyntaxError (as PmatSyntaxError), FieldError for a bad field line or
 * out-of-range coefficient, DimensionError for a bad size or entry count.
 */
PolyMatrix parse_pmat(std::string_view text);
PolyMatrix read_pmat_file(const std::string& path);

/// Canonical text; parse_pmat(serialize_pmat(m)) == m.
std::string serialize_pmat(const PolyMatrix& m);

}  // namespace convcode

#endif
