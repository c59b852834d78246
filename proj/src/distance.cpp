#include "convcode/distance.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "convcode/realization.hpp"

namespace convcode {

std::size_t hamming_weight(const std::vector<Poly>& w) noexcept {
    std::size_t s = 0;
    for (const auto& p : w) s += weight(p);
    return s;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (r > cap / base) return cap + 1;
        r *= base;
    }
    return r;
}

// Vectors over F of length len indexed as base-q integers, least significant first.
std::vector<Elem> unpack(std::uint64_t idx, std::size_t len, std::uint32_t q) {
    std::vector<Elem> v(len);
    for (std::size_t i = 0; i < len; ++i) {
        v[i] = static_cast<Elem>(idx % q);
        idx /= q;
    }
    return v;
}

std::uint64_t pack(const std::vector<Elem>& v, std::uint32_t q) {
    std::uint64_t idx = 0;
    for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
    return idx;
}

std::size_t nonzeros(const std::vector<Elem>& v) {
    std::size_t c = 0;
    for (auto x : v) c += x != 0;
    return c;
}

std::vector<Elem> add(const Field& f, std::vector<Elem> a, const std::vector<Elem>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = f.add(a[i], b[i]);
    return a;
}

std::vector<Poly> encode(const PolyMat& g, const std::vector<Poly>& m) {
    std::vector<Poly> w(g.rows(), Poly(g.field()));
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) w[r] += g(r, c) * m[c];
    return w;
}

}  // namespace

DistanceResult free_distance(const ConvCode& code) {
    const Field& f = code.field();
    const std::size_t k = code.k();
    DistanceResult res;
    if (k == 0) {
        code.cache_free_distance(std::nullopt);
        return res;
    }
    const Realization r = realize_code(code);
    const std::size_t delta = r.state_dim();
    const std::uint32_t q = f.order();
    const std::uint64_t states = checked_pow(q, delta, trellis_budget);
    const std::uint64_t inputs = checked_pow(q, k, trellis_budget);
    if (states > trellis_budget || inputs > trellis_budget || states * inputs > trellis_budget)
        fail(ErrorKind::BudgetExceeded, "trellis too large for exhaustive search");

    // Precompute the response to each input and each state.
    std::vector<std::vector<Elem>> bu(inputs), du(inputs);
    for (std::uint64_t u = 0; u < inputs; ++u) {
        const auto uv = unpack(u, k, q);
        bu[u] = r.B.apply(uv);
        du[u] = r.D.apply(uv);
    }

    constexpr std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::size_t> dist(states, std::numeric_limits<std::size_t>::max());
    std::vector<std::uint64_t> parent(states, none), parent_input(states, 0);
    using Item = std::pair<std::size_t, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;

    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t best_from = none, best_input = 0;  // best_from == none: single-step detour

    for (std::uint64_t u = 1; u < inputs; ++u) {
        const std::size_t c = nonzeros(du[u]);
        const std::uint64_t s = pack(bu[u], q);
        if (s == 0) {
            if (c < best) {
                best = c;
                best_from = none;
                best_input = u;
            }
            continue;
        }
        if (c < dist[s]) {
            dist[s] = c;
            parent[s] = 0;
            parent_input[s] = u;
            pq.emplace(c, s);
        }
    }

    while (!pq.empty()) {
        const auto [d, s] = pq.top();
        pq.pop();
        if (d != dist[s]) continue;
        if (d >= best) break;
        ++res.states_expanded;
        const auto sv = unpack(s, delta, q);
        const auto as = r.A.apply(sv);
        const auto cs = r.C.apply(sv);
        for (std::uint64_t u = 0; u < inputs; ++u) {
            const std::size_t c = d + nonzeros(add(f, cs, du[u]));
            const std::uint64_t t = pack(add(f, as, bu[u]), q);
            if (t == 0) {
                if (c < best) {
                    best = c;
                    best_from = s;
                    best_input = u;
                }
                continue;
            }
            if (c < dist[t]) {
                dist[t] = c;
                parent[t] = s;
                parent_input[t] = u;
                pq.emplace(c, t);
            }
        }
    }

    if (best == std::numeric_limits<std::size_t>::max()) fail(ErrorKind::InvalidArgument, "no detour found in the trellis");

    // Walk back to recover the input sequence.
    std::vector<std::uint64_t> seq{best_input};
    for (std::uint64_t s = best_from; s != none && s != 0;) {
        seq.push_back(parent_input[s]);
        s = parent[s];
    }
    std::reverse(seq.begin(), seq.end());
    std::vector<std::vector<Elem>> coeffs(k, std::vector<Elem>(seq.size(), 0));
    for (std::size_t t = 0; t < seq.size(); ++t) {
        const auto uv = unpack(seq[t], k, q);
        for (std::size_t j = 0; j < k; ++j) coeffs[j][t] = uv[j];
    }
    for (std::size_t j = 0; j < k; ++j) res.message.emplace_back(f, coeffs[j]);
    res.witness = encode(code.generator(), res.message);
    res.d_free = static_cast<int>(best);

    if (hamming_weight(res.witness) != best || !membership(code, column_word(f, res.witness, code.framework() == Framework::ModuleLaurentD ? Ring::laurent : Ring::poly)).member)
        fail(ErrorKind::InvalidArgument, "free-distance witness failed verification");
    code.cache_free_distance(res.d_free);
    return res;
}

DistanceResult free_distance(const Behavior& b) {
    if (b.invariants().autonomous) return {};
    if (!b.invariants().controllable)
        fail(ErrorKind::UnsupportedBehavior, "free distance is defined here for controllable or autonomous behaviors");
    return free_distance(code_from_generator(image_representation(b), Framework::ModuleLaurentD));
}

std::optional<int> free_distance_oracle(const ConvCode& code, int degree_bound) {
    const Field& f = code.field();
    const std::size_t k = code.k();
    if (degree_bound < 0) fail(ErrorKind::InvalidArgument, "degree bound must be nonnegative");
    if (k == 0) return std::nullopt;
    const std::size_t digits = k * static_cast<std::size_t>(degree_bound + 1);
    const std::uint64_t total = checked_pow(f.order(), digits, 10'000'000);
    if (total > 10'000'000) fail(ErrorKind::BudgetExceeded, "oracle enumeration exceeds 10^7 messages");

    const PolyMat& g = code.generator();
    const std::size_t n = g.rows();
    const std::size_t len = static_cast<std::size_t>(degree_bound + std::max(g.degree(), 0) + 1);
    // basis[(j, t)] = coefficients of z^t G_j, flattened as n * len.
    std::vector<std::vector<Elem>> basis(digits, std::vector<Elem>(n * len, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t t = 0; t <= static_cast<std::size_t>(degree_bound); ++t) {
            auto& b = basis[j * static_cast<std::size_t>(degree_bound + 1) + t];
            for (std::size_t r = 0; r < n; ++r)
                for (int e = 0; e <= g(r, j).degree(); ++e) b[r * len + t + static_cast<std::size_t>(e)] = g(r, j).coeff(e);
        }

    const std::uint32_t q = f.order();
    std::vector<Elem> digit(digits, 0), word(n * len, 0);
    int best = std::numeric_limits<int>::max();
    for (std::uint64_t it = 1; it < total; ++it) {
        // Increment the mixed-radix counter and update the word by the change.
        for (std::size_t p = 0; p < digits; ++p) {
            const Elem old = digit[p];
            const Elem nxt = old + 1 == q ? 0 : old + 1;
            digit[p] = nxt;
            const Elem delta = f.sub(nxt, old);
            for (std::size_t i = 0; i < word.size(); ++i)
                if (basis[p][i]) word[i] = f.add(word[i], f.mul(delta, basis[p][i]));
            if (nxt != 0) break;
        }
        best = std::min(best, static_cast<int>(nonzeros(word)));
    }
    return best;
}

}  // namespace convcode
