#include "convcode/realization.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "convcode/duality.hpp"

namespace convcode {

namespace {

std::vector<std::size_t> offsets_of(const std::vector<int>& e) {
    std::vector<std::size_t> off(e.size() + 1, 0);
    for (std::size_t j = 0; j < e.size(); ++j) off[j + 1] = off[j] + static_cast<std::size_t>(std::max(e[j], 0));
    return off;
}

// Controller-form realization of Y U^-1 where U is column reduced with column
// degrees e and deg col_j Y <= e_j.
Realization controller_form(const Field& f, const PolyMat& y, const PolyMat& u, const std::vector<int>& e) {
    const std::size_t k = u.cols(), p = y.rows();
    const std::vector<std::size_t> off = offsets_of(e);
    const std::size_t delta = off[k];

    FMat ac(f, delta, delta), bc(f, delta, k);
    FMat uhc(f, k, k), ulc(f, k, delta), yhc(f, p, k), ylc(f, p, delta);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t ej = static_cast<std::size_t>(std::max(e[j], 0));
        for (std::size_t i = 0; i + 1 < ej; ++i) ac(off[j] + i, off[j] + i + 1) = 1;
        if (ej > 0) bc(off[j] + ej - 1, j) = 1;
        for (std::size_t r = 0; r < k; ++r) {
            uhc(r, j) = u(r, j).coeff(ej);
            for (std::size_t i = 0; i < ej; ++i) ulc(r, off[j] + i) = u(r, j).coeff(i);
        }
        for (std::size_t r = 0; r < p; ++r) {
            yhc(r, j) = y(r, j).coeff(ej);
            for (std::size_t i = 0; i < ej; ++i) ylc(r, off[j] + i) = y(r, j).coeff(i);
        }
    }
    const auto inv = inverse(uhc);
    if (!inv) fail(ErrorKind::NoValidPartition, "input block is not column reduced");
    Realization r;
    r.A = ac + -(bc * *inv * ulc);
    r.B = bc * *inv;
    r.C = ylc + -(yhc * *inv * ulc);
    r.D = yhc * *inv;
    return r;
}

FMat power_stack(const FMat& a, const FMat& b, std::size_t count, bool columns) {
    // columns: [B, AB, ...]; otherwise [C; CA; ...] with b playing C.
    FMat acc = b;
    FMat cur = b;
    for (std::size_t i = 1; i < count; ++i) {
        cur = columns ? a * cur : cur * a;
        acc = columns ? FMat::hstack(acc, cur) : FMat::vstack(acc, cur);
    }
    return acc;
}

}  // namespace

Realization realize_code(const ConvCode& code) {
    const Field& f = code.field();
    const PolyMat& g = code.generator();
    const std::size_t n = g.rows(), k = g.cols();
    std::vector<int> e(k);
    for (std::size_t j = 0; j < k; ++j) {
        e[j] = g.column_degree(j);
        if (e[j] < 0) fail(ErrorKind::RankConditionUnachievable, "generator has a zero column");
    }
    const std::vector<std::size_t> off = offsets_of(e);
    const std::size_t delta = off[k];
    Realization r;
    r.A = FMat(f, delta, delta);
    r.B = FMat(f, delta, k);
    r.C = FMat(f, n, delta);
    r.D = g.coefficient(0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t ej = static_cast<std::size_t>(e[j]);
        if (ej == 0) continue;
        r.B(off[j], j) = 1;
        for (std::size_t i = 0; i + 1 < ej; ++i) r.A(off[j] + i + 1, off[j] + i) = 1;
        for (std::size_t i = 0; i < ej; ++i)
            for (std::size_t row = 0; row < n; ++row) r.C(row, off[j] + i) = g(row, j).coeff(i + 1);
    }
    r.g0_full_rank = rank(r.D) == k;
    return r;
}

std::vector<FMat> markov_parameters(const Realization& r, std::size_t count) {
    if (count == 0) fail(ErrorKind::InvalidArgument, "need at least one Markov parameter");
    std::vector<FMat> out{r.D};
    FMat ab = r.B;
    for (std::size_t i = 1; i < count; ++i) {
        out.push_back(r.C * ab);
        ab = r.A * ab;
    }
    return out;
}

Minimality is_minimal(const Realization& r) {
    const std::size_t d = r.state_dim();
    if (d == 0) return {true, true};
    return {rank(power_stack(r.A, r.B, d, true)) == d, rank(power_stack(r.A, r.C, d, false)) == d};
}

bool realizations_equivalent(const Realization& a, const Realization& b) {
    const Minimality ma = is_minimal(a), mb = is_minimal(b);
    if (!(ma.controllable && ma.observable && mb.controllable && mb.observable))
        fail(ErrorKind::NotMinimal, "equivalence is decided for minimal realizations");
    if (a.D.rows() != b.D.rows() || a.D.cols() != b.D.cols())
        fail(ErrorKind::DimensionMismatch, "realizations of different transfer shapes");
    if (a.state_dim() != b.state_dim()) return false;
    const std::size_t count = 2 * a.state_dim() + 1;
    return markov_parameters(a, count) == markov_parameters(b, count);
}

std::vector<int> controllability_indices(const FMat& a, const FMat& b) {
    const std::size_t d = a.rows();
    std::vector<std::size_t> gains;
    std::size_t prev = 0;
    FMat acc(a.field(), d, 0), cur = b;
    for (std::size_t i = 0; i < std::max<std::size_t>(d, 1); ++i) {
        acc = FMat::hstack(acc, cur);
        const std::size_t rk = rank(acc);
        if (rk == prev) break;
        gains.push_back(rk - prev);
        prev = rk;
        cur = a * cur;
    }
    std::vector<int> idx(b.cols(), 0);
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (auto g : gains)
            if (g > j) ++idx[j];
    std::sort(idx.begin(), idx.end(), std::greater<>());
    return idx;
}

CodePencil code_pencil(const ConvCode& code) {
    const Field& f = code.field();
    const PolyMat& g = code.generator();
    const std::size_t n = g.rows(), k = g.cols();
    const int delta = code.invariants().degree;

    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    bool found = false;
    for (;;) {
        if (poly_det(g.rows_subset(pick)).degree() == delta) {
            found = true;
            break;
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) fail(ErrorKind::NoValidPartition, "no row split with deg det U equal to the code degree");

    CodePencil p;
    p.input_rows = pick;
    for (std::size_t i = 0; i < n; ++i)
        if (!std::binary_search(pick.begin(), pick.end(), i)) p.output_rows.push_back(i);
    std::vector<int> e(k);
    for (std::size_t j = 0; j < k; ++j) e[j] = g.column_degree(j);
    p.realization = controller_form(f, g.rows_subset(p.output_rows), g.rows_subset(p.input_rows), e);
    const Realization& r = p.realization;

    const std::size_t d = r.state_dim(), ny = n - k;
    p.K = FMat(f, d + ny, d);
    p.L = FMat(f, d + ny, d);
    p.M = FMat(f, d + ny, n);
    for (std::size_t i = 0; i < d; ++i) p.K(i, i) = 1;
    p.L.set_block(0, 0, -r.A);
    p.L.set_block(d, 0, -r.C);
    for (std::size_t q = 0; q < ny; ++q) p.M(d + q, p.output_rows[q]) = 1;
    for (std::size_t q = 0; q < k; ++q) {
        const std::size_t col = p.input_rows[q];
        for (std::size_t i = 0; i < d; ++i) p.M(i, col) = f.neg(r.B(i, q));
        for (std::size_t i = 0; i < ny; ++i) p.M(d + i, col) = f.neg(r.D(i, q));
    }

    p.k_full_column_rank = rank(p.K) == d;
    p.km_full_row_rank = rank(FMat::hstack(p.K, p.M)) == d + ny;
    PolyMat pencil(f, d + ny, d + n);
    for (std::size_t i = 0; i < d + ny; ++i) {
        for (std::size_t j = 0; j < d; ++j) pencil(i, j) = Poly(f, {p.L(i, j), p.K(i, j)});
        for (std::size_t j = 0; j < n; ++j) pencil(i, d + j) = Poly::constant(f, p.M(i, j));
    }
    p.left_prime = d + ny == 0 || max_minor_gcd_tall(pencil.transpose()).is_constant();
    p.controllability_indices = controllability_indices(r.A, r.B);
    return p;
}

PencilMembership pencil_membership(const CodePencil& p, const std::vector<Poly>& v) {
    const Field& f = p.M.field();
    const std::size_t d = p.K.cols(), rows = p.K.rows(), n = p.M.cols();
    if (v.size() != n) fail(ErrorKind::DimensionMismatch, "word length differs from n");
    int dv = -1;
    for (const auto& x : v) dv = std::max(dv, x.degree());
    PencilMembership out;
    out.state.assign(d, Poly(f));
    if (dv < 0) {
        out.member = true;
        return out;
    }
    // Unknowns x_0..x_{dv-1}; equations K x_{t-1} + L x_t + M v_t = 0, t = 0..dv.
    const std::size_t steps = static_cast<std::size_t>(dv);
    FMat a(f, rows * (steps + 1), d * steps);
    std::vector<Elem> b(rows * (steps + 1), 0);
    for (std::size_t t = 0; t <= steps; ++t) {
        for (std::size_t i = 0; i < rows; ++i) {
            Elem mv = 0;
            for (std::size_t j = 0; j < n; ++j) mv = f.add(mv, f.mul(p.M(i, j), v[j].coeff(t)));
            b[t * rows + i] = f.neg(mv);
            for (std::size_t j = 0; j < d; ++j) {
                if (t < steps) a(t * rows + i, t * d + j) = p.L(i, j);
                if (t > 0) a(t * rows + i, (t - 1) * d + j) = p.K(i, j);
            }
        }
    }
    std::optional<std::vector<Elem>> x;
    if (d * steps == 0) {
        if (std::any_of(b.begin(), b.end(), [](Elem e) { return e != 0; })) return out;
        x = std::vector<Elem>{};
    } else {
        x = solve(a, b);
    }
    if (!x) return out;
    out.member = true;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Elem> c(steps);
        for (std::size_t t = 0; t < steps; ++t) c[t] = (*x)[t * d + j];
        out.state[j] = Poly(f, std::move(c));
    }
    return out;
}

BehaviorPencil behavior_pencil(const Behavior& b) {
    const Field& f = b.field();
    const CodePencil cp = code_pencil(annihilator_of_behavior(b));
    const Realization& r = cp.realization;
    const std::size_t d = r.state_dim(), n = b.n();
    const std::size_t free = cp.output_rows.size();

    // Transposed realization: state update driven by the free coordinates,
    // the remaining coordinates are read out with a sign flip.
    const FMat A = r.A.transpose(), B = r.C.transpose(), C = r.B.transpose(), D = r.D.transpose();
    BehaviorPencil p;
    p.Gp = FMat(f, d, d + free);
    p.Fp = FMat(f, d, d + free);
    p.Hp = FMat(f, n, d + free);
    for (std::size_t i = 0; i < d; ++i) p.Gp(i, i) = 1;
    p.Fp.set_block(0, 0, A);
    p.Fp.set_block(0, d, B);
    for (std::size_t q = 0; q < free; ++q) p.Hp(cp.output_rows[q], d + q) = 1;
    for (std::size_t q = 0; q < cp.input_rows.size(); ++q) {
        const std::size_t row = cp.input_rows[q];
        for (std::size_t j = 0; j < d; ++j) p.Hp(row, j) = f.neg(C(q, j));
        for (std::size_t j = 0; j < free; ++j) p.Hp(row, d + j) = f.neg(D(q, j));
    }

    p.full_row_rank = rank(p.Gp) == d;
    p.stacked_full_column_rank = rank(FMat::vstack(p.Gp, p.Hp)) == d + free;
    PolyMat pencil(f, d + n, d + free);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d + free; ++j) pencil(i, j) = Poly(f, {f.neg(p.Fp(i, j)), p.Gp(i, j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < d + free; ++j) pencil(d + i, j) = Poly::constant(f, p.Hp(i, j));
    p.right_prime = d + free == 0 || max_minor_gcd_tall(pencil).is_constant();
    return p;
}

bool pencil_window_membership(const BehaviorPencil& p, const WindowTrajectory& w) {
    const Field& f = p.Hp.field();
    const std::size_t dz = p.Hp.cols(), n = p.Hp.rows(), d = p.Gp.rows();
    const std::size_t len = w.length();
    if (len == 0) return true;
    const std::size_t eqs = d * (len - 1) + n * len;
    std::vector<Elem> b(eqs, 0);
    if (dz == 0) {
        for (const auto& s : w.symbols)
            if (std::any_of(s.begin(), s.end(), [](Elem e) { return e != 0; })) return false;
        return true;
    }
    FMat a(f, eqs, dz * len);
    std::size_t row = 0;
    for (std::size_t t = 0; t + 1 < len; ++t)
        for (std::size_t i = 0; i < d; ++i, ++row)
            for (std::size_t j = 0; j < dz; ++j) {
                a(row, (t + 1) * dz + j) = p.Gp(i, j);
                a(row, t * dz + j) = f.neg(p.Fp(i, j));
            }
    for (std::size_t t = 0; t < len; ++t)
        for (std::size_t i = 0; i < n; ++i, ++row) {
            if (w.symbols[t].size() != n) fail(ErrorKind::DimensionMismatch, "window symbol length differs from n");
            for (std::size_t j = 0; j < dz; ++j) a(row, t * dz + j) = p.Hp(i, j);
            b[row] = w.symbols[t][i];
        }
    return solve(a, b).has_value();
}

}  // namespace convcode
