#ifndef CONVCODE_POLY_HPP
#define CONVCODE_POLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "convcode/field.hpp"

namespace convcode {

/// Polynomial in z over F, coefficients ascending. The highest stored
/// coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field f) : f_(std::move(f)) {}
    Poly(Field f, std::vector<Elem> coeffs);

    static Poly constant(Field f, Elem c);
    static Poly monomial(Field f, Elem c, std::size_t degree);
    static Poly one(Field f) { return constant(std::move(f), 1); }
    static Poly z(Field f) { return monomial(std::move(f), 1, 1); }

    const Field& field() const noexcept { return f_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monomial() const noexcept;
    /// Largest k with z^k | p (0 for the zero polynomial).
    std::size_t valuation() const noexcept;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(Elem c) const;
    /// Multiply by z^k.
    Poly shifted_up(std::size_t k) const;
    /// Divide by z^k, dropping the k lowest coefficients.
    Poly shifted_down(std::size_t k) const;
    /// Monic associate; zero stays zero.
    Poly monic() const;
    /// Coefficient reversal z^deg p(1/z).
    Poly reversed() const;
    /// Coefficients of degree < k.
    Poly truncated(std::size_t k) const;

    Elem eval(Elem x) const noexcept;

    /// "1+z+z^2" style rendering with integer coefficients.
    std::string to_string(const char* var = "z") const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept { return a.c_ == b.c_; }

private:
    void trim() noexcept;
    Field f_;
    std::vector<Elem> c_;
};

/// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
/// Exact quotient a / b; throws InvalidArgument if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Hamming weight: number of nonzero coefficients.
std::size_t weight(const Poly& p) noexcept;

/// z^shift * body with body(0) != 0 (unless zero, where shift is 0).
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(Field f) : body_(std::move(f)) {}
    LaurentPoly(Poly body, int shift = 0);

    const Field& field() const noexcept { return body_.field(); }
    const Poly& body() const noexcept { return body_; }
    int shift() const noexcept { return shift_; }
    bool is_zero() const noexcept { return body_.is_zero(); }
    int min_exponent() const noexcept { return shift_; }
    int max_exponent() const noexcept { return shift_ + body_.degree(); }
    Elem coeff(int e) const noexcept;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const { return {-body_, shift_}; }

    std::string to_string() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) noexcept {
        return a.shift_ == b.shift_ && a.body_ == b.body_;
    }

private:
    Poly body_;
    int shift_ = 0;
};

/// Element of F(z) in lowest terms with monic denominator.
class RationalFn {
public:
    RationalFn() = default;
    explicit RationalFn(Field f) : num_(f), den_(Poly::one(f)) {}
    RationalFn(Poly num);
    RationalFn(Poly num, Poly den);
    RationalFn(const LaurentPoly& l);

    const Field& field() const noexcept { return num_.field(); }
    const Poly& num() const noexcept { return num_; }
    const Poly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.is_one(); }
    /// Denominator is a power of z.
    bool is_laurent() const noexcept { return den_.is_monomial(); }
    LaurentPoly to_laurent() const;
    Poly to_poly() const;

    RationalFn operator+(const RationalFn& o) const;
    RationalFn operator-(const RationalFn& o) const;
    RationalFn operator*(const RationalFn& o) const;
    RationalFn operator/(const RationalFn& o) const;
    RationalFn operator-() const;
    RationalFn inverse() const;

    std::string to_string() const;
    friend bool operator==(const RationalFn& a, const RationalFn& b) noexcept {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize();
    Poly num_, den_;
};

}  // namespace convcode

#endif
