#ifndef CONVCODE_FIELD_HPP
#define CONVCODE_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "convcode/error.hpp"

namespace convcode {

/// Raw field element. For GF(p) it is the residue 0..p-1; for GF(p^m) it is the
/// coefficient vector (c_0, ..., c_{m-1}) of the reduced representative packed
/// as the base-p integer c_0 + c_1 p + ... + c_{m-1} p^{m-1}.
using Elem = std::uint32_t;

/**
 * Finite field GF(p^m) with q = p^m <= 2^16.
 *
 * A Field is a cheap handle onto immutable arithmetic tables; copies share the
 * tables. Two handles compare equal when they describe the same (p, m, modulus),
 * which is what makes elements of both interchangeable.
 */
class Field {
public:
    static constexpr std::uint32_t max_order = 1u << 16;

    /// Validating constructor. For m > 1 the modulus is the ascending coefficient
    /// list c_0..c_m of a monic irreducible polynomial; when absent a built-in
    /// modulus is used for GF(4), GF(8), GF(9) and GF(16).
    static Field make(std::uint32_t p, unsigned m = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    static Field prime(std::uint32_t p) { return make(p, 1); }

    /// Null handle; only useful as a placeholder before assignment.
    Field() = default;

    bool valid() const noexcept { return static_cast<bool>(t_); }
    std::uint32_t characteristic() const noexcept;
    unsigned degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Ascending modulus coefficients (length m + 1); empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(std::uint64_t v) const noexcept { return v < order(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;

    /// Coordinates of a over GF(p), ascending, length m.
    std::vector<std::uint32_t> coordinates(Elem a) const;

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Tables;
    explicit Field(std::shared_ptr<const Tables> t) : t_(std::move(t)) {}
    std::shared_ptr<const Tables> t_;
};

bool operator==(const Field& a, const Field& b) noexcept;

/// True iff p is prime (trial division; p < 2^32).
bool is_prime_number(std::uint64_t p) noexcept;

/// True iff the ascending coefficient list is irreducible over GF(p).
/// Exhaustive search for monic factors of degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p);

/**
 * Field element carrying its field. This is the checked public value type; the
 * polynomial code works on raw Elem values through Field for speed.
 */
class FieldElement {
public:
    FieldElement(Field f, Elem v);

    const Field& field() const noexcept { return f_; }
    Elem value() const noexcept { return v_; }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inverse() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.v_ == b.v_ && a.f_ == b.f_;
    }

private:
    void check_same(const FieldElement& o) const;
    Field f_;
    Elem v_;
};

}  // namespace convcode

#endif
