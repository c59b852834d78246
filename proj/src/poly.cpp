#include "convcode/poly.hpp"

#include <algorithm>
#include <sstream>

namespace convcode {

Poly::Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(Field f, Elem c) { return Poly(std::move(f), std::vector<Elem>{c}); }

Poly Poly::monomial(Field f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(f), std::move(v));
}

void Poly::trim() noexcept {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Poly::is_monomial() const noexcept {
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i]) return false;
    return true;
}

std::size_t Poly::valuation() const noexcept {
    std::size_t v = 0;
    while (v < c_.size() && c_[v] == 0) ++v;
    return c_.empty() ? 0 : v;
}

Poly Poly::operator+(const Poly& o) const {
    const Field& f = f_.valid() ? f_ : o.f_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(coeff(i), o.coeff(i));
    return Poly(f, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    const Field& f = f_.valid() ? f_ : o.f_;
    std::vector<Elem> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(coeff(i), o.coeff(i));
    return Poly(f, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    const Field& f = f_.valid() ? f_ : o.f_;
    if (c_.empty() || o.c_.empty()) return Poly(f);
    std::vector<Elem> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(c_[i], o.c_[j]));
    }
    return Poly(f, std::move(r));
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& v : r.c_) v = f_.neg(v);
    return r;
}

Poly Poly::scaled(Elem c) const {
    if (c == 0) return Poly(f_);
    Poly r(*this);
    for (auto& v : r.c_) v = f_.mul(v, c);
    return r;
}

Poly Poly::shifted_up(std::size_t k) const {
    if (c_.empty()) return *this;
    std::vector<Elem> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(f_, std::move(r));
}

Poly Poly::shifted_down(std::size_t k) const {
    if (k >= c_.size()) return Poly(f_);
    return Poly(f_, std::vector<Elem>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

Poly Poly::monic() const {
    if (c_.empty() || c_.back() == 1) return *this;
    return scaled(f_.inv(c_.back()));
}

Poly Poly::reversed() const {
    std::vector<Elem> r(c_.rbegin(), c_.rend());
    return Poly(f_, std::move(r));
}

Poly Poly::truncated(std::size_t k) const {
    if (k >= c_.size()) return *this;
    return Poly(f_, std::vector<Elem>(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k)));
}

Elem Poly::eval(Elem x) const noexcept {
    Elem acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_.add(f_.mul(acc, x), *it);
    return acc;
}

std::string Poly::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c_[i];
            continue;
        }
        if (c_[i] != 1) os << c_[i];
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    const Field& f = b.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    std::vector<Elem> q(a.coeffs().size() - b.coeffs().size() + 1, 0);
    const Elem lead_inv = f.inv(b.lead());
    const std::size_t bd = b.coeffs().size() - 1;
    for (std::size_t i = r.size(); i-- > bd;) {
        if (r[i] == 0) continue;
        const Elem factor = f.mul(r[i], lead_inv);
        const std::size_t shift = i - bd;
        q[shift] = factor;
        for (std::size_t j = 0; j <= bd; ++j) r[shift + j] = f.sub(r[shift + j], f.mul(factor, b.coeffs()[j]));
    }
    return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly exact_div(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

std::size_t weight(const Poly& p) noexcept {
    return static_cast<std::size_t>(std::count_if(p.coeffs().begin(), p.coeffs().end(), [](Elem c) { return c != 0; }));
}

LaurentPoly::LaurentPoly(Poly body, int shift) : body_(std::move(body)), shift_(shift) {
    if (body_.is_zero()) {
        shift_ = 0;
        return;
    }
    const std::size_t v = body_.valuation();
    if (v) {
        body_ = body_.shifted_down(v);
        shift_ += static_cast<int>(v);
    }
}

Elem LaurentPoly::coeff(int e) const noexcept {
    if (e < shift_) return 0;
    return body_.coeff(static_cast<std::size_t>(e - shift_));
}

namespace {
// Align both operands to a common minimum exponent.
std::pair<Poly, Poly> aligned(const LaurentPoly& a, const LaurentPoly& b, int& base) {
    if (a.is_zero()) {
        base = b.shift();
        return {Poly(b.field()), b.body()};
    }
    if (b.is_zero()) {
        base = a.shift();
        return {a.body(), Poly(a.field())};
    }
    base = std::min(a.shift(), b.shift());
    return {a.body().shifted_up(static_cast<std::size_t>(a.shift() - base)),
            b.body().shifted_up(static_cast<std::size_t>(b.shift() - base))};
}
}  // namespace

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    int base = 0;
    auto [x, y] = aligned(*this, o, base);
    return {x + y, base};
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    int base = 0;
    auto [x, y] = aligned(*this, o, base);
    return {x - y, base};
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const { return {body_ * o.body_, shift_ + o.shift_}; }

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < body_.coeffs().size(); ++i) {
        const Elem c = body_.coeffs()[i];
        if (c == 0) continue;
        const int e = shift_ + static_cast<int>(i);
        if (!first) os << "+";
        first = false;
        if (e == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c;
        os << "z";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

RationalFn::RationalFn(Poly num) : num_(std::move(num)), den_(Poly::one(num_.field())) {}

RationalFn::RationalFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) fail(ErrorKind::DivisionByZero, "rational function with zero denominator");
    normalize();
}

RationalFn::RationalFn(const LaurentPoly& l) {
    const Field& f = l.field();
    if (l.shift() >= 0) {
        num_ = l.body().shifted_up(static_cast<std::size_t>(l.shift()));
        den_ = Poly::one(f);
    } else {
        num_ = l.body();
        den_ = Poly::monomial(f, 1, static_cast<std::size_t>(-l.shift()));
    }
}

void RationalFn::normalize() {
    const Field& f = den_.field();
    if (num_.is_zero()) {
        num_ = Poly(f);
        den_ = Poly::one(f);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    const Elem lc = den_.lead();
    if (lc != 1) {
        const Elem inv = f.inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

LaurentPoly RationalFn::to_laurent() const {
    if (!is_laurent()) fail(ErrorKind::InvalidArgument, "rational function is not a Laurent polynomial");
    return {num_, -den_.degree()};
}

Poly RationalFn::to_poly() const {
    if (!is_polynomial()) fail(ErrorKind::InvalidArgument, "rational function is not a polynomial");
    return num_;
}

RationalFn RationalFn::operator+(const RationalFn& o) const {
    if (is_polynomial() && o.is_polynomial()) return RationalFn(num_ + o.num_);
    if (den_ == o.den_) return RationalFn(num_ + o.num_, den_);
    return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFn RationalFn::operator-(const RationalFn& o) const { return *this + (-o); }

RationalFn RationalFn::operator*(const RationalFn& o) const {
    if (is_polynomial() && o.is_polynomial()) return RationalFn(num_ * o.num_);
    return RationalFn(num_ * o.num_, den_ * o.den_);
}

RationalFn RationalFn::operator/(const RationalFn& o) const { return *this * o.inverse(); }

RationalFn RationalFn::operator-() const {
    RationalFn r(*this);
    r.num_ = -num_;
    return r;
}

RationalFn RationalFn::inverse() const {
    if (num_.is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return RationalFn(den_, num_);
}

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    if (is_laurent()) return to_laurent().to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace convcode
