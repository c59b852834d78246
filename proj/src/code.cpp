#include "convcode/code.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

namespace convcode {

std::string_view to_string(Framework f) noexcept {
    switch (f) {
        case Framework::RationalA: return "A";
        case Framework::LaurentAprime: return "Aprime";
        case Framework::CompleteB: return "B";
        case Framework::ModuleLaurentD: return "D";
        case Framework::ModulePolyDprime: return "Dprime";
    }
    return "?";
}

std::optional<Framework> parse_framework(std::string_view s) {
    std::string t;
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "a") return Framework::RationalA;
    if (t == "aprime" || t == "a'") return Framework::LaurentAprime;
    if (t == "b") return Framework::CompleteB;
    if (t == "d") return Framework::ModuleLaurentD;
    if (t == "dprime" || t == "d'") return Framework::ModulePolyDprime;
    return std::nullopt;
}

bool is_module_framework(Framework f) noexcept {
    return f == Framework::ModuleLaurentD || f == Framework::ModulePolyDprime;
}

namespace {

std::vector<int> sorted_column_degrees(const PolyMat& g) {
    std::vector<int> d(g.cols());
    for (std::size_t j = 0; j < g.cols(); ++j) d[j] = g.column_degree(j);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
}

bool generator_is_prime(const PolyMat& g, Framework fw) {
    if (!is_module_framework(fw) || g.cols() == 0) return true;
    const Poly d = max_minor_gcd_tall(g);
    return fw == Framework::ModuleLaurentD ? is_laurent_unit(d) : d.is_constant();
}

PolyMat encoder_of(const PolyMat& canonical) {
    if (canonical.cols() == 0) return canonical;
    return module_basis(right_prime_factor(canonical));
}

}  // namespace

ConvCode::ConvCode(Framework fw, PolyMat canonical, PolyMat encoder)
    : fw_(fw), generator_(std::move(canonical)), encoder_(std::move(encoder)), dfree_(std::make_shared<DistanceCache>()) {
    inv_.k = generator_.cols();
    inv_.n = generator_.rows();
    inv_.forney_indices = sorted_column_degrees(encoder_);
    inv_.kronecker_indices = sorted_column_degrees(generator_);
    const auto& idx = is_module_framework(fw_) ? inv_.kronecker_indices : inv_.forney_indices;
    inv_.degree = std::accumulate(idx.begin(), idx.end(), 0);
    inv_.controller_memory = idx.empty() ? 0 : idx.front();
    inv_.observable = generator_is_prime(generator_, fw_);
    if (inv_.observable) {
        const PolyMat h = left_kernel(encoder_);
        int m = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) m = std::max(m, h.row_degree(i));
        inv_.observer_memory = m;
    }
}

std::optional<std::optional<int>> ConvCode::cached_free_distance() const {
    std::lock_guard<std::mutex> g(dfree_->lock);
    return dfree_->value;
}

void ConvCode::cache_free_distance(std::optional<int> d) const {
    std::lock_guard<std::mutex> g(dfree_->lock);
    if (!dfree_->value) dfree_->value = d;
}

namespace {

PolyMat laurent_columns_to_poly(const PolyMatrix& m) {
    // Multiply each column by the power of z that clears negative exponents;
    // this is a unit in F[z, z^-1] and does not change the rational span.
    PolyMat r(m.field(), m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        int lo = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) lo = std::min(lo, m(i, j).to_laurent().min_exponent());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (m(i, j).is_zero()) continue;
            const LaurentPoly l = m(i, j).to_laurent();
            r(i, j) = l.body().shifted_up(static_cast<std::size_t>(l.shift() - lo));
        }
    }
    return r;
}

ConvCode make_code(Framework fw, const PolyMat& poly_generator) {
    PolyMat canonical;
    switch (fw) {
        case Framework::RationalA:
        case Framework::LaurentAprime:
        case Framework::CompleteB: {
            const PolyMat basis = module_basis(poly_generator);
            canonical = encoder_of(basis);
            return ConvCode(fw, canonical, canonical);
        }
        case Framework::ModuleLaurentD: canonical = laurent_module_basis(poly_generator); break;
        case Framework::ModulePolyDprime: canonical = module_basis(poly_generator); break;
    }
    PolyMat enc = encoder_of(canonical);
    return ConvCode(fw, std::move(canonical), std::move(enc));
}

}  // namespace

ConvCode code_from_generator(const PolyMatrix& m, Framework fw) {
    if (m.rows() == 0) fail(ErrorKind::EmptyGenerator, "generator has no rows");
    if (!m.conforms()) fail(ErrorKind::InvalidArgument, "generator entries do not belong to its ring");
    const Field& f = m.field();
    PolyMat g(f, m.rows(), m.cols());
    if (is_module_framework(fw)) {
        if (!m.all_laurent())
            fail(ErrorKind::RationalGeneratorUnsupportedForModuleFramework, "module frameworks need a polynomial or Laurent generator");
        if (fw == Framework::ModulePolyDprime) {
            if (!m.all_polynomial()) fail(ErrorKind::InvalidArgument, "a polynomial-module code needs a polynomial generator");
            g = m.to_poly();
        } else {
            g = laurent_columns_to_poly(m);
        }
    } else {
        g = m.all_laurent() ? laurent_columns_to_poly(m) : clear_column_denominators(m);
    }
    return make_code(fw, g);
}

PolyMatrix minimal_basic_encoder(const ConvCode& code) { return PolyMatrix::from_poly(code.encoder()); }

PolyMatrix parity_check(const ConvCode& code) {
    if (!code.invariants().observable) fail(ErrorKind::NotObservable, "a non-observable code has no kernel representation");
    const PolyMat h = left_kernel(code.encoder());
    const Ring ring = code.framework() == Framework::ModuleLaurentD || code.framework() == Framework::LaurentAprime
                          ? Ring::laurent
                          : Ring::poly;
    return PolyMatrix::from_poly(h, ring);
}

CodeInvariants invariants(const ConvCode& code) { return code.invariants(); }

bool is_observable(const ConvCode& code) { return code.invariants().observable; }

ConvCode observable_closure(const ConvCode& code) {
    if (!is_module_framework(code.framework()) || code.invariants().observable) return code;
    return make_code(code.framework(), code.encoder());
}

ConversionResult convert(const ConvCode& code, Framework target) {
    const Framework from = code.framework();
    const bool from_module = is_module_framework(from);
    const bool to_module = is_module_framework(target);
    if (!from_module && !to_module) return {ConvCode(target, code.generator(), code.encoder()), false, ""};
    if (from_module && !to_module) {
        const bool lost = !code.invariants().observable;
        return {make_code(target, code.encoder()), lost, lost ? "non-observable content dropped" : ""};
    }
    if (!from_module) return {make_code(target, code.encoder()), false, ""};
    if (from == target) return {code, false, ""};
    if (target == Framework::ModuleLaurentD) {
        ConvCode d = make_code(target, code.generator());
        const bool lost = !(d.generator() == code.generator());
        return {std::move(d), lost, lost ? "module not saturated at z; Laurent extension enlarges it" : ""};
    }
    // The canonical Laurent generator is saturated, so it also generates the
    // finite-support polynomial words of the Laurent module.
    return {make_code(target, code.generator()), false, ""};
}

bool codes_equal(const ConvCode& a, const ConvCode& b) {
    if (a.framework() != b.framework()) fail(ErrorKind::FrameworkMismatch, "codes live in different frameworks");
    if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "codes over different fields");
    if (a.n() != b.n()) fail(ErrorKind::DimensionMismatch, "codes of different length");
    return a.generator() == b.generator();
}

PolyMatrix column_word(const Field& f, const std::vector<Poly>& w, Ring ring) {
    PolyMatrix m(f, ring, w.size(), 1);
    for (std::size_t i = 0; i < w.size(); ++i) m(i, 0) = RationalFn(w[i]);
    return m;
}

Membership membership(const ConvCode& code, const PolyMatrix& word) {
    const Field& f = code.field();
    if (word.cols() != 1 || word.rows() != code.n()) fail(ErrorKind::DimensionMismatch, "word must be an n x 1 column");
    const Framework fw = code.framework();
    if (fw == Framework::ModulePolyDprime && !word.all_polynomial())
        fail(ErrorKind::InvalidArgument, "polynomial-module words must be polynomial");
    if (fw == Framework::ModuleLaurentD && !word.all_laurent())
        fail(ErrorKind::InvalidArgument, "Laurent-module words must be Laurent polynomials");

    // Bring the word into F[z]^n by a scalar factor s(z): a power of z for
    // Laurent words, the denominator lcm otherwise. The canonical generators
    // make polynomial solutions sufficient: A/A'/B encoders are right prime and
    // D generators have full-rank constant term.
    Poly scale = Poly::one(f);
    int shift = 0;
    std::vector<Poly> w(code.n(), Poly(f));
    if (word.all_laurent()) {
        for (std::size_t i = 0; i < code.n(); ++i)
            if (!word(i, 0).is_zero()) shift = std::min(shift, word(i, 0).to_laurent().min_exponent());
        for (std::size_t i = 0; i < code.n(); ++i) {
            if (word(i, 0).is_zero()) continue;
            const LaurentPoly l = word(i, 0).to_laurent();
            w[i] = l.body().shifted_up(static_cast<std::size_t>(l.shift() - shift));
        }
    } else {
        for (std::size_t i = 0; i < code.n(); ++i) {
            const Poly& d = word(i, 0).den();
            scale = exact_div(scale * d, gcd(scale, d));
        }
        for (std::size_t i = 0; i < code.n(); ++i) w[i] = word(i, 0).num() * exact_div(scale, word(i, 0).den());
    }
    const auto m = solve_column_reduced(code.generator(), w);
    if (!m) return {false, std::nullopt};
    const Ring ring = word.ring();
    PolyMatrix msg(f, ring, code.k(), 1);
    for (std::size_t j = 0; j < code.k(); ++j) {
        RationalFn x((*m)[j], scale);
        if (shift != 0) x = x * RationalFn(LaurentPoly(Poly::one(f), shift));
        msg(j, 0) = x;
    }
    return {true, std::move(msg)};
}

}  // namespace convcode
