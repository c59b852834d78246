#include "convcode/field.hpp"

#include <algorithm>
#include <sstream>

namespace convcode {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::UnsupportedSize: return "UnsupportedSize";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::RationalRingUnsupported: return "RationalRingUnsupported";
        case ErrorKind::RankDeficient: return "RankDeficient";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::RationalGeneratorUnsupportedForModuleFramework:
            return "RationalGeneratorUnsupportedForModuleFramework";
        case ErrorKind::EmptyGenerator: return "EmptyGenerator";
        case ErrorKind::NotObservable: return "NotObservable";
        case ErrorKind::FrameworkMismatch: return "FrameworkMismatch";
        case ErrorKind::NotControllable: return "NotControllable";
        case ErrorKind::SpliceCheckFailed: return "SpliceCheckFailed";
        case ErrorKind::IntervalMismatch: return "IntervalMismatch";
        case ErrorKind::NotMinimal: return "NotMinimal";
        case ErrorKind::NoValidPartition: return "NoValidPartition";
        case ErrorKind::RankConditionUnachievable: return "RankConditionUnachievable";
        case ErrorKind::UnsupportedBehavior: return "UnsupportedBehavior";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::FieldError: return "FieldError";
        case ErrorKind::DimensionError: return "DimensionError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

bool is_prime_number(std::uint64_t p) noexcept {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

// Remainder of a modulo b over GF(p); b nonzero after trimming.
Coeffs poly_mod_p(Coeffs a, Coeffs b, std::uint32_t p) {
    trim(a);
    trim(b);
    const std::uint64_t lead_inv = [&] {
        std::uint64_t r = 1, base = b.back(), e = p - 2;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    }();
    while (a.size() >= b.size() && !a.empty()) {
        const std::uint64_t f = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = f * b[i] % p;
            a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<Coeffs> builtin_modulus(std::uint32_t p, unsigned m) {
    if (p == 2 && m == 2) return Coeffs{1, 1, 1};     // x^2 + x + 1
    if (p == 2 && m == 3) return Coeffs{1, 1, 0, 1};  // x^3 + x + 1
    if (p == 3 && m == 2) return Coeffs{1, 0, 1};     // x^2 + 1
    if (p == 2 && m == 4) return Coeffs{1, 1, 0, 0, 1};  // x^4 + x + 1
    return std::nullopt;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& coeffs, std::uint32_t p) {
    Coeffs f = coeffs;
    trim(f);
    if (f.size() < 2) return false;
    const unsigned deg = static_cast<unsigned>(f.size() - 1);
    if (deg == 1) return true;
    // Monic candidate divisors of degree d, 1 <= d <= deg/2, enumerated by their
    // lower coefficients in base p.
    for (unsigned d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = idx;
            for (unsigned i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            if (poly_mod_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

struct Field::Tables {
    std::uint32_t p = 0;
    unsigned m = 1;
    std::uint32_t q = 0;
    Coeffs modulus;
    std::vector<std::uint32_t> pow_p;   // p^i, i < m
    std::vector<std::uint16_t> log;     // log[0] unused
    std::vector<std::uint16_t> exp;     // length 2(q-1)
    std::vector<std::uint16_t> add_table;  // q*q entries for small odd extension fields

    Elem digit_add(Elem a, Elem b) const {
        Elem r = 0;
        for (unsigned i = 0; i < m; ++i) {
            const std::uint32_t da = a % p, db = b % p;
            a /= p;
            b /= p;
            r += ((da + db) % p) * pow_p[i];
        }
        return r;
    }

    // Schoolbook product reduced modulo the modulus; used only while building tables.
    Elem slow_mul(Elem a, Elem b) const {
        if (m == 1) return static_cast<Elem>(std::uint64_t(a) * b % p);
        Coeffs ca(m), cb(m);
        for (unsigned i = 0; i < m; ++i) {
            ca[i] = a % p;
            a /= p;
            cb[i] = b % p;
            b /= p;
        }
        Coeffs prod(2 * m - 1, 0);
        for (unsigned i = 0; i < m; ++i)
            for (unsigned j = 0; j < m; ++j)
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p);
        Coeffs r = poly_mod_p(prod, modulus, p);
        Elem out = 0;
        for (std::size_t i = 0; i < r.size(); ++i) out += r[i] * pow_p[i];
        return out;
    }
};

Field Field::make(std::uint32_t p, unsigned m, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime_number(p))
        fail(ErrorKind::NonPrimeCharacteristic, "field characteristic " + std::to_string(p) + " is not prime");
    if (m == 0) fail(ErrorKind::InvalidModulus, "extension degree must be at least 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_order) fail(ErrorKind::UnsupportedSize, "field order exceeds 2^16");
    }

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->m = m;
    t->q = static_cast<std::uint32_t>(q);
    t->pow_p.resize(m);
    for (unsigned i = 0; i < m; ++i) t->pow_p[i] = i == 0 ? 1 : t->pow_p[i - 1] * p;

    if (m > 1) {
        Coeffs mod;
        if (modulus) {
            mod = *modulus;
        } else if (auto b = builtin_modulus(p, m)) {
            mod = *b;
        } else {
            fail(ErrorKind::InvalidModulus,
                 "no built-in modulus for GF(" + std::to_string(p) + "^" + std::to_string(m) + ")");
        }
        if (mod.size() != m + 1 || mod.back() != 1)
            fail(ErrorKind::InvalidModulus, "modulus must be monic of degree " + std::to_string(m));
        for (auto c : mod)
            if (c >= p) fail(ErrorKind::InvalidModulus, "modulus coefficient out of range");
        if (!is_irreducible_mod_p(mod, p)) fail(ErrorKind::ReducibleModulus, "modulus is reducible over GF(p)");
        t->modulus = std::move(mod);
    } else if (modulus && !modulus->empty()) {
        if (modulus->size() != 2 || (*modulus)[1] != 1)
            fail(ErrorKind::InvalidModulus, "prime field modulus must be monic linear");
    }

    const std::uint32_t qq = t->q;
    t->log.assign(qq, 0);
    t->exp.assign(2 * (qq - 1), 0);
    if (qq == 2) {
        t->exp[0] = t->exp[1] = 1;
    } else {
        const auto factors = prime_factors(qq - 1);
        Elem gen = 0;
        for (Elem cand = 2; cand < qq && gen == 0; ++cand) {
            bool primitive = true;
            for (auto r : factors) {
                std::uint64_t e = (qq - 1) / r;
                Elem acc = 1, base = cand;
                while (e) {
                    if (e & 1) acc = t->slow_mul(acc, base);
                    base = t->slow_mul(base, base);
                    e >>= 1;
                }
                if (acc == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) gen = cand;
        }
        Elem x = 1;
        for (std::uint32_t i = 0; i < qq - 1; ++i) {
            t->exp[i] = static_cast<std::uint16_t>(x);
            t->exp[i + qq - 1] = static_cast<std::uint16_t>(x);
            t->log[x] = static_cast<std::uint16_t>(i);
            x = t->slow_mul(x, gen);
        }
    }
    if (p != 2 && m > 1 && qq <= 256) {
        t->add_table.resize(std::size_t(qq) * qq);
        for (Elem a = 0; a < qq; ++a)
            for (Elem b = 0; b < qq; ++b) t->add_table[std::size_t(a) * qq + b] = static_cast<std::uint16_t>(t->digit_add(a, b));
    }
    return Field(std::move(t));
}

std::uint32_t Field::characteristic() const noexcept { return t_ ? t_->p : 0; }
unsigned Field::degree() const noexcept { return t_ ? t_->m : 0; }
std::uint32_t Field::order() const noexcept { return t_ ? t_->q : 0; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept {
    static const std::vector<std::uint32_t> empty;
    return t_ ? t_->modulus : empty;
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const Tables& t = *t_;
    if (t.p == 2) return a ^ b;
    if (t.m == 1) {
        const Elem s = a + b;
        return s >= t.p ? s - t.p : s;
    }
    if (!t.add_table.empty()) return t.add_table[std::size_t(a) * t.q + b];
    return t.digit_add(a, b);
}

Elem Field::neg(Elem a) const noexcept {
    const Tables& t = *t_;
    if (t.p == 2 || a == 0) return a;
    if (t.m == 1) return t.p - a;
    Elem r = 0;
    for (unsigned i = 0; i < t.m; ++i) {
        const std::uint32_t d = a % t.p;
        a /= t.p;
        r += ((t.p - d) % t.p) * t.pow_p[i];
    }
    return r;
}

Elem Field::sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const Tables& t = *t_;
    return t.exp[std::size_t(t.log[a]) + t.log[b]];
}

Elem Field::inv(Elem a) const {
    if (a == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
    const Tables& t = *t_;
    if (t.q == 2) return 1;
    return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) fail(ErrorKind::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const Tables& t = *t_;
    const std::uint64_t l = (std::uint64_t(t.log[a]) * (e % (t.q - 1))) % (t.q - 1);
    return t.exp[l];
}

std::vector<std::uint32_t> Field::coordinates(Elem a) const {
    std::vector<std::uint32_t> out(t_->m);
    for (unsigned i = 0; i < t_->m; ++i) {
        out[i] = a % t_->p;
        a /= t_->p;
    }
    return out;
}

std::string Field::name() const {
    std::ostringstream os;
    if (!t_) return "GF(?)";
    if (t_->m == 1) {
        os << "GF(" << t_->p << ")";
    } else {
        os << "GF(" << t_->p << "^" << t_->m << ")";
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) noexcept {
    if (a.t_ == b.t_) return true;
    if (!a.t_ || !b.t_) return false;
    return a.t_->p == b.t_->p && a.t_->m == b.t_->m && a.t_->modulus == b.t_->modulus;
}

FieldElement::FieldElement(Field f, Elem v) : f_(std::move(f)), v_(v) {
    if (!f_.contains(v)) fail(ErrorKind::FieldError, "element representative out of range");
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(f_ == o.f_)) fail(ErrorKind::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.add(v_, o.v_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.sub(v_, o.v_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.mul(v_, o.v_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {f_, f_.div(v_, o.v_)};
}
FieldElement FieldElement::operator-() const { return {f_, f_.neg(v_)}; }
FieldElement FieldElement::inverse() const { return {f_, f_.inv(v_)}; }

}  // namespace convcode
