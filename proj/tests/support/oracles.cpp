#include "support/oracles.hpp"

#include <algorithm>
#include <functional>

namespace testing_support {

Poly naive_det(const PolyMat& m) {
    const Field& f = m.field();
    const std::size_t n = m.rows();
    if (n == 0) return Poly::one(f);
    if (n == 1) return m(0, 0);
    Poly det(f);
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        std::vector<std::size_t> rows, cols;
        for (std::size_t i = 1; i < n; ++i) rows.push_back(i);
        for (std::size_t c = 0; c < n; ++c)
            if (c != j) cols.push_back(c);
        const Poly term = m(0, j) * naive_det(m.rows_subset(rows).columns(cols));
        det = j % 2 ? det - term : det + term;
    }
    return det;
}

namespace {

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
        if (pos == k) {
            fn(idx);
            return;
        }
        for (std::size_t i = from; i < n; ++i) {
            idx[pos] = i;
            rec(pos + 1, i + 1);
        }
    };
    rec(0, 0);
}

std::vector<std::size_t> iota(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

Poly naive_minor_gcd(const PolyMat& m) {
    const PolyMat t = m.rows() >= m.cols() ? m : m.transpose();
    const std::size_t k = t.cols();
    Poly g(m.field());
    combinations(t.rows(), k, [&](const std::vector<std::size_t>& rows) { g = gcd(g, naive_det(t.rows_subset(rows).columns(iota(k)))); });
    return g.is_zero() ? g : g.monic();
}

std::size_t naive_rank(const PolyMat& m) {
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        bool found = false;
        combinations(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            if (found) return;
            combinations(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                if (!found && !naive_det(m.rows_subset(rows).columns(cols)).is_zero()) found = true;
            });
        });
        if (found) return k;
    }
    return 0;
}

std::vector<Poly> all_polys(const Field& f, int max_deg) {
    std::vector<Poly> out;
    const std::size_t len = static_cast<std::size_t>(max_deg + 1);
    std::vector<Elem> c(len, 0);
    for (;;) {
        out.emplace_back(f, c);
        std::size_t i = 0;
        while (i < len && ++c[i] == f.order()) c[i++] = 0;
        if (i == len) break;
    }
    return out;
}

std::size_t word_weight(const std::vector<Poly>& w) {
    std::size_t s = 0;
    for (const auto& p : w)
        for (auto c : p.coeffs()) s += c != 0;
    return s;
}

namespace {

template <class Fn>
void each_message(const PolyMat& g, int bound, Fn fn) {
    const auto polys = all_polys(g.field(), bound);
    std::vector<std::size_t> idx(g.cols(), 0);
    for (;;) {
        std::vector<Poly> m;
        for (auto i : idx) m.push_back(polys[i]);
        std::vector<Poly> w(g.rows(), Poly(g.field()));
        for (std::size_t r = 0; r < g.rows(); ++r)
            for (std::size_t c = 0; c < g.cols(); ++c) w[r] = w[r] + g(r, c) * m[c];
        if (!fn(m, w)) return;
        std::size_t p = 0;
        while (p < idx.size() && ++idx[p] == polys.size()) idx[p++] = 0;
        if (p == idx.size()) return;
    }
}

}  // namespace

std::optional<int> naive_min_weight(const PolyMat& g, int bound) {
    std::optional<int> best;
    each_message(g, bound, [&](const std::vector<Poly>& m, const std::vector<Poly>& w) {
        if (std::all_of(m.begin(), m.end(), [](const Poly& p) { return p.is_zero(); })) return true;
        const int wt = static_cast<int>(word_weight(w));
        if (!best || wt < *best) best = wt;
        return true;
    });
    return best;
}

bool naive_in_span(const PolyMat& g, const std::vector<Poly>& w, int bound) {
    bool found = false;
    each_message(g, bound, [&](const std::vector<Poly>&, const std::vector<Poly>& v) {
        found = v == w;
        return !found;
    });
    return found;
}

bool naive_window_member(const PolyMat& p, const WindowTrajectory& w, Axis axis) {
    const Field& f = p.field();
    for (std::size_t i = 0; i < p.rows(); ++i) {
        const int d = std::max(p.row_degree(i), 0);
        for (int t = w.start; t + d <= w.end(); ++t) {
            if (axis == Axis::Zplus && t < 0) continue;
            Elem acc = 0;
            for (int s = 0; s <= d; ++s)
                for (std::size_t j = 0; j < p.cols(); ++j)
                    acc = f.add(acc, f.mul(p(i, j).coeff(static_cast<std::size_t>(s)),
                                           w.symbols[static_cast<std::size_t>(t + s - w.start)][j]));
            if (acc != 0) return false;
        }
    }
    return true;
}

}  // namespace testing_support
