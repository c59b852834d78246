#include "convcode/behavior.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <numeric>

namespace convcode {

std::string_view to_string(Axis a) noexcept { return a == Axis::Z ? "Z" : "Zplus"; }

std::optional<Axis> parse_axis(std::string_view s) {
    std::string t;
    for (char c : s) t.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (t == "z") return Axis::Z;
    if (t == "zplus" || t == "z+") return Axis::Zplus;
    return std::nullopt;
}

namespace {

PolyMat canonical_kernel(const PolyMat& p, Axis axis) {
    const PolyMat t = p.transpose();
    return (axis == Axis::Z ? laurent_module_basis(t) : module_basis(t)).transpose();
}

bool left_prime(const PolyMat& p, Axis axis) {
    if (p.rows() == 0) return true;
    const Poly g = max_minor_gcd_tall(p.transpose());
    return axis == Axis::Z ? is_laurent_unit(g) : g.is_constant();
}

}  // namespace

Behavior::Behavior(Axis axis, PolyMat kernel) : axis_(axis), kernel_(std::move(kernel)) {
    for (std::size_t i = 0; i < kernel_.rows(); ++i) inv_.kronecker_indices.push_back(kernel_.row_degree(i));
    std::sort(inv_.kronecker_indices.begin(), inv_.kronecker_indices.end(), std::greater<>());
    inv_.mcmillan_degree = std::accumulate(inv_.kronecker_indices.begin(), inv_.kronecker_indices.end(), 0);
    inv_.n = kernel_.cols();
    inv_.free_variables = kernel_.cols() - kernel_.rows();
    inv_.autonomous = kernel_.rows() == kernel_.cols();
    inv_.controllable = left_prime(kernel_, axis_);
}

WindowTrajectory window_of(const std::vector<LaurentPoly>& w, std::size_t n, int a, int b) {
    WindowTrajectory r;
    r.start = a;
    for (int t = a; t <= b; ++t) {
        std::vector<Elem> s(n, 0);
        for (std::size_t i = 0; i < n && i < w.size(); ++i) s[i] = w[i].coeff(t);
        r.symbols.push_back(std::move(s));
    }
    return r;
}

WindowTrajectory window_of(const std::vector<Poly>& w, int a, int b) {
    std::vector<LaurentPoly> l;
    for (const auto& p : w) l.emplace_back(p, 0);
    return window_of(l, w.size(), a, b);
}

std::string DyadicRational::to_string() const {
    if (exponent == 0) return num.str();
    return num.str() + "/2^" + std::to_string(exponent);
}

double DyadicRational::to_double() const { return std::ldexp(num.convert_to<double>(), -static_cast<int>(exponent)); }

Behavior behavior_from_kernel(const PolyMatrix& p, Axis axis) {
    if (!p.conforms()) fail(ErrorKind::InvalidArgument, "kernel entries do not belong to its ring");
    if (!p.all_laurent()) fail(ErrorKind::RationalRingUnsupported, "kernel must be polynomial or Laurent");
    if (axis == Axis::Zplus && !p.all_polynomial())
        fail(ErrorKind::InvalidArgument, "one-sided behaviors need a polynomial kernel");
    // Row shifts by powers of z are units of F[z, z^-1].
    PolyMat q(p.field(), p.rows(), p.cols());
    for (std::size_t i = 0; i < p.rows(); ++i) {
        int lo = 0;
        for (std::size_t j = 0; j < p.cols(); ++j)
            if (!p(i, j).is_zero()) lo = std::min(lo, p(i, j).to_laurent().min_exponent());
        for (std::size_t j = 0; j < p.cols(); ++j) {
            if (p(i, j).is_zero()) continue;
            const LaurentPoly l = p(i, j).to_laurent();
            q(i, j) = l.body().shifted_up(static_cast<std::size_t>(l.shift() - lo));
        }
    }
    return Behavior(axis, canonical_kernel(q, axis));
}

bool window_membership(const Behavior& b, const WindowTrajectory& w) {
    const Field& f = b.field();
    const PolyMat& p = b.kernel();
    for (const auto& s : w.symbols)
        if (s.size() != b.n()) fail(ErrorKind::DimensionMismatch, "window symbol length differs from n");
    for (std::size_t i = 0; i < p.rows(); ++i) {
        const int nu = p.row_degree(i);
        int first = w.start;
        if (b.axis() == Axis::Zplus) first = std::max(first, 0);
        for (int t = first; t + nu <= w.end(); ++t) {
            Elem acc = 0;
            for (std::size_t j = 0; j < p.cols(); ++j) {
                const Poly& e = p(i, j);
                for (int s = 0; s <= e.degree(); ++s) {
                    const Elem c = e.coeff(static_cast<std::size_t>(s));
                    if (c) acc = f.add(acc, f.mul(c, w.symbols[static_cast<std::size_t>(t + s - w.start)][j]));
                }
            }
            if (acc != 0) return false;
        }
    }
    return true;
}

bool is_controllable(const Behavior& b) { return b.invariants().controllable; }

Behavior controllable_part(const Behavior& b) {
    if (b.r() == 0 || b.invariants().controllable) return b;
    const SmithResult s = smith(b.kernel());
    return Behavior(b.axis(), canonical_kernel(s.Vinv.row_range(0, b.r()), b.axis()));
}

PolyMatrix image_representation(const Behavior& b) {
    if (!b.invariants().controllable) fail(ErrorKind::NotControllable, "behavior has no image representation");
    if (b.r() == 0) return PolyMatrix::identity(b.field(), b.n());
    return PolyMatrix::from_poly(right_kernel(b.kernel()));
}

Behavior arma_to_kernel(const PolyMatrix& p, const PolyMatrix& g, Axis axis) {
    if (p.rows() != g.rows()) fail(ErrorKind::DimensionMismatch, "P and G need the same number of rows");
    if (!p.all_polynomial() || !g.all_polynomial())
        fail(ErrorKind::InvalidArgument, "ARMA elimination works on polynomial matrices");
    const PolyMat pm = p.to_poly();
    const SmithResult s = smith(g.to_poly());
    const PolyMat n = s.U.row_range(s.rank, g.rows() - s.rank);
    return behavior_from_kernel(PolyMatrix::from_poly(n * pm), axis);
}

BehaviorInvariants behavior_invariants(const Behavior& b) { return b.invariants(); }

SpliceResult splice(const PolyMat& g, const std::vector<Poly>& a, const std::vector<Poly>& b, int j) {
    const Field& f = g.field();
    if (a.size() != g.cols() || b.size() != g.cols()) fail(ErrorKind::DimensionMismatch, "message length differs from k");
    if (j < 0) fail(ErrorKind::InvalidArgument, "splice time must be nonnegative");
    const int gap = std::max(g.degree(), 0) + 1;
    const std::size_t cut = static_cast<std::size_t>(j) + 1;

    auto encode = [&](const std::vector<Poly>& m) {
        std::vector<Poly> w(g.rows(), Poly(f));
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) w[r] += g(r, c) * m[c];
        return w;
    };
    std::vector<Poly> m(g.cols(), Poly(f));
    for (std::size_t c = 0; c < g.cols(); ++c) m[c] = a[c].truncated(cut) + (b[c] - b[c].truncated(cut));
    const std::vector<Poly> w = encode(m), wa = encode(a), wb = encode(b);

    int top = 0;
    for (const auto& x : w) top = std::max(top, x.degree());
    for (const auto& x : wb) top = std::max(top, x.degree());
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (int t = 0; t <= j; ++t)
            if (w[r].coeff(static_cast<std::size_t>(t)) != wa[r].coeff(static_cast<std::size_t>(t)))
                fail(ErrorKind::SpliceCheckFailed, "spliced word departs from the first codeword before the cut");
        for (int t = j + gap; t <= top; ++t)
            if (w[r].coeff(static_cast<std::size_t>(t)) != wb[r].coeff(static_cast<std::size_t>(t)))
                fail(ErrorKind::SpliceCheckFailed, "spliced word departs from the second codeword after the gap");
    }
    int deg = 0;
    for (const auto& x : w) deg = std::max(deg, x.degree());
    return {w, window_of(w, 0, deg), gap};
}

std::optional<WindowTrajectory> complete_window(const Behavior& b, int start, const PartialWindow& symbols) {
    const Field& f = b.field();
    const PolyMat& p = b.kernel();
    const std::size_t n = b.n();
    const int end = start + static_cast<int>(symbols.size()) - 1;

    std::vector<std::vector<std::size_t>> index(symbols.size(), std::vector<std::size_t>(n, 0));
    std::size_t unknowns = 0;
    for (std::size_t t = 0; t < symbols.size(); ++t) {
        if (symbols[t].size() != n) fail(ErrorKind::DimensionMismatch, "window symbol length differs from n");
        for (std::size_t i = 0; i < n; ++i)
            if (!symbols[t][i]) index[t][i] = unknowns++;
    }

    std::vector<std::vector<Elem>> rows;
    std::vector<Elem> rhs;
    for (std::size_t i = 0; i < p.rows(); ++i) {
        const int nu = p.row_degree(i);
        int first = start;
        if (b.axis() == Axis::Zplus) first = std::max(first, 0);
        for (int t = first; t + nu <= end; ++t) {
            std::vector<Elem> row(unknowns, 0);
            Elem known = 0;
            for (std::size_t j = 0; j < n; ++j) {
                const Poly& e = p(i, j);
                for (int s = 0; s <= e.degree(); ++s) {
                    const Elem c = e.coeff(static_cast<std::size_t>(s));
                    if (!c) continue;
                    const std::size_t pos = static_cast<std::size_t>(t + s - start);
                    if (symbols[pos][j]) {
                        known = f.add(known, f.mul(c, *symbols[pos][j]));
                    } else {
                        Elem& slot = row[index[pos][j]];
                        slot = f.add(slot, c);
                    }
                }
            }
            rows.push_back(std::move(row));
            rhs.push_back(f.neg(known));
        }
    }

    std::vector<Elem> x(unknowns, 0);
    if (!rows.empty()) {
        FMat a(f, rows.size(), unknowns);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < unknowns; ++c) a(r, c) = rows[r][c];
        if (unknowns == 0) {
            if (std::any_of(rhs.begin(), rhs.end(), [](Elem v) { return v != 0; })) return std::nullopt;
        } else {
            auto sol = solve(a, rhs);
            if (!sol) return std::nullopt;
            x = std::move(*sol);
        }
    }
    WindowTrajectory w;
    w.start = start;
    for (std::size_t t = 0; t < symbols.size(); ++t) {
        std::vector<Elem> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = symbols[t][i] ? *symbols[t][i] : x[index[t][i]];
        w.symbols.push_back(std::move(s));
    }
    return w;
}

std::optional<WindowTrajectory> splice_blocks(const Behavior& b, const WindowTrajectory& past,
                                              const WindowTrajectory& future, int gap) {
    if (gap < 0) fail(ErrorKind::InvalidArgument, "gap must be nonnegative");
    PartialWindow pw;
    for (const auto& s : past.symbols) pw.emplace_back(s.begin(), s.end());
    for (int g = 0; g < gap; ++g) pw.emplace_back(b.n(), std::nullopt);
    for (const auto& s : future.symbols) pw.emplace_back(s.begin(), s.end());
    return complete_window(b, past.start, pw);
}

DyadicRational sequence_metric(const WindowTrajectory& v, const WindowTrajectory& w) {
    if (v.start != w.start || v.length() != w.length())
        fail(ErrorKind::IntervalMismatch, "windows cover different intervals");
    using boost::multiprecision::cpp_int;
    unsigned top = 0;
    for (std::size_t t = 0; t < v.length(); ++t)
        top = std::max(top, static_cast<unsigned>(std::abs(v.start + static_cast<int>(t))));
    DyadicRational r;
    r.exponent = top;
    for (std::size_t t = 0; t < v.length(); ++t) {
        if (v.symbols[t].size() != w.symbols[t].size())
            fail(ErrorKind::DimensionMismatch, "symbols of different length");
        unsigned dh = 0;
        for (std::size_t i = 0; i < v.symbols[t].size(); ++i) dh += v.symbols[t][i] != w.symbols[t][i];
        if (!dh) continue;
        const unsigned at = static_cast<unsigned>(std::abs(v.start + static_cast<int>(t)));
        r.num += cpp_int(dh) << (top - at);
    }
    if (r.num == 0) {
        r.exponent = 0;
        return r;
    }
    while (r.exponent > 0 && (r.num & 1) == 0) {
        r.num >>= 1;
        --r.exponent;
    }
    return r;
}

}  // namespace convcode
