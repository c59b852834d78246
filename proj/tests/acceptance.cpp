// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "convcode/crc.hpp"
#include "convcode/distance.hpp"
#include "convcode/duality.hpp"
#include "convcode/realization.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace convcode;
using namespace testing_support;

namespace {

// Wall-clock limits in seconds.
constexpr double forney_time_limit = 30.0;
constexpr double distance_time_limit = 60.0;
constexpr double crc_time_limit = 30.0;
// Miss-rate tolerance in binomial standard deviations.
constexpr double crc_sigmas = 3.0;

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Records the first failure; later checks still run but keep the first message.
class Checker {
public:
    void expect(bool ok, const std::string& what) {
        if (!ok && out_.pass) {
            out_.pass = false;
            out_.detail = what;
        }
        ++checks_;
    }
    bool ok() const { return out_.pass; }
    Outcome finish(const std::string& summary) {
        if (out_.pass) out_.detail = summary;
        return out_;
    }

private:
    Outcome out_;
    std::size_t checks_ = 0;
};

PolyMatrix pm(const PolyMat& m, Ring r = Ring::poly) { return PolyMatrix::from_poly(m, r); }

PolyMat row(const Field& f, std::initializer_list<Poly> entries) { return column(f, entries).transpose(); }

const Field& field_for(int trial) { return trial % 2 ? F3 : F2; }

Outcome forney_invariance() {
    Checker c;
    Rng rng(1001);
    int codes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = k + rng() % (5 - k);
        const PolyMat g = random_full_column_rank(f, n, k, 3, rng);
        const ConvCode base = code_from_generator(pm(g), Framework::RationalA);
        const PolyMatrix re = pm(g, Ring::rational) * random_rational_invertible(f, k, rng);
        const ConvCode moved = code_from_generator(re, Framework::RationalA);
        c.expect(moved.invariants().forney_indices == base.invariants().forney_indices,
                 "indices changed for " + g.to_string());
        c.expect(codes_equal(moved, base), "re-encoded code differs for " + g.to_string());
        ++codes;
    }
    return c.finish(std::to_string(codes) + " codes, 0 failures");
}

Outcome degree_duality() {
    Checker c;
    Rng rng(1002);
    int codes = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = k + 1 + rng() % (4 - k);
        const bool rational = trial % 3 != 0;
        const PolyMat g = rational ? random_full_column_rank(f, n, k, 3, rng) : random_right_prime(f, n, k, 3, rng);
        const ConvCode code = code_from_generator(pm(g), rational ? Framework::RationalA : Framework::ModulePolyDprime);
        if (!is_observable(code)) continue;
        const PolyMat h = parity_check(code).to_poly();
        int encoder_sum = 0, check_sum = 0;
        for (int e : code.invariants().forney_indices) encoder_sum += e;
        for (std::size_t i = 0; i < h.rows(); ++i) check_sum += h.row_degree(i);
        c.expect(encoder_sum == check_sum, "degree sums differ for " + g.to_string());
        c.expect((h * code.encoder()).is_zero(), "parity check does not annihilate " + g.to_string());
        ++codes;
    }
    c.expect(codes >= 200, "too few observable codes");
    return c.finish(std::to_string(codes) + " observable codes, 0 failures");
}

Outcome duality_round_trips() {
    Checker c;
    Rng rng(1003);
    int codes = 0, behaviors = 0, swaps = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 2 + rng() % 3, k = 1 + rng() % (n - 1);
        const Framework fw = trial % 2 ? Framework::ModuleLaurentD : Framework::ModulePolyDprime;
        const ConvCode code = code_from_generator(pm(random_right_prime(f, n, k, 2, rng)), fw);
        c.expect(codes_equal(annihilator_of_behavior(annihilator_of_code(code)), code), "double annihilator");
        ++codes;
    }
    for (int trial = 0; trial < 150; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 1 + rng() % 3, r = 1 + rng() % n;
        PolyMat p = random_full_row_rank(f, r, n, 2, rng);
        if (trial % 2) {
            PolyMat v = PolyMat::identity(f, r);
            v(0, 0) = poly(f, {1, 1});
            p = v * p;
        }
        const Behavior b = behavior_from_kernel(pm(p), Axis::Z);
        c.expect(behavior_dual(behavior_dual(b)) == controllable_part(b), "behavior double dual");
        ++behaviors;

        // Dual swaps primeness: the code generated by P^t is observable iff P is left prime.
        const ConvCode code = annihilator_of_behavior(b);
        const bool code_observable = is_observable(code);
        c.expect(code_observable == is_controllable(b), "observability of B^perp vs controllability of B");
        c.expect(is_controllable(annihilator_of_code(code)) == code_observable, "controllability of C^perp");
        ++swaps;
    }
    return c.finish(std::to_string(codes) + " codes, " + std::to_string(behaviors) + " behaviors, " +
                    std::to_string(swaps) + " primeness swaps");
}

Outcome free_distance_check() {
    Checker c;
    const ConvCode five =
        code_from_generator(pm(column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})})), Framework::ModulePolyDprime);
    c.expect(free_distance(five).d_free == 5, "[1+z^2; 1+z+z^2] is not 5");
    c.expect(free_distance_oracle(five, 8) == 5, "oracle on [1+z^2; 1+z+z^2] is not 5");
    const ConvCode even = code_from_generator(pm(column(F2, {poly(F2, {1, 1})})), Framework::ModuleLaurentD);
    c.expect(free_distance(even).d_free == 2, "<1+z> is not 2");

    Rng rng(1004);
    int codes = 0;
    for (int trial = 0; codes < 120 && trial < 1000; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 2 + rng() % 2, k = 1 + (rng() % 4 == 0 ? 1 : 0);
        const Framework fw = trial % 3 ? Framework::ModulePolyDprime : Framework::ModuleLaurentD;
        const ConvCode code = code_from_generator(pm(random_full_column_rank(f, n, k, 2, rng)), fw);
        const auto& inv = code.invariants();
        if (inv.degree > 3) continue;
        const int bound = 2 * inv.degree + inv.controller_memory + 2;
        std::optional<int> oracle;
        try {
            oracle = free_distance_oracle(code, bound);
        } catch (const Error& e) {
            if (e.kind() == ErrorKind::BudgetExceeded) continue;
            throw;
        }
        const DistanceResult r = free_distance(code);
        c.expect(r.d_free == oracle, "trellis and oracle differ for " + code.generator().to_string());
        c.expect(r.d_free && hamming_weight(r.witness) == static_cast<std::size_t>(*r.d_free), "witness weight");
        ++codes;
    }
    c.expect(codes >= 100, "too few codes within the oracle budget");
    return c.finish(std::to_string(codes) + " codes equal to the oracle; d_free 5 and 2 reproduced");
}

Outcome realization_consistency() {
    Checker c;
    Rng rng(1005);
    int codes = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 2 + rng() % 3, k = 1 + rng() % (n - 1);
        const bool observable = trial % 4 != 0;
        const PolyMat g = observable ? random_right_prime(f, n, k, 2, rng) : random_full_column_rank(f, n, k, 2, rng);
        const ConvCode code = code_from_generator(pm(g), Framework::ModulePolyDprime);
        const int delta = code.invariants().degree;
        if (delta > 4) continue;
        const Realization r = realize_code(code);
        const auto markov = markov_parameters(r, static_cast<std::size_t>(2 * delta + 2));
        for (std::size_t i = 0; i < markov.size(); ++i)
            c.expect(markov[i] == code.generator().coefficient(i), "Markov parameter mismatch");
        c.expect(r.state_dim() == static_cast<std::size_t>(delta), "state dimension differs from the degree");
        const bool obs = is_observable(code);
        const Minimality m = is_minimal(r);
        if (obs) c.expect(m.controllable && m.observable, "realization of an observable code is not minimal");
        const Minimality mp = is_minimal(code_pencil(code).realization);
        c.expect(mp.controllable && mp.observable == obs, "pencil realization minimality differs from observability");
        ++codes;
    }

    const std::vector<PolyMat> family{
        column(F2, {poly(F2, {1}), poly(F2, {0, 1})}),
        column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})}),
        column(F2, {poly(F2, {1, 1}), poly(F2, {1})}),
    };
    const auto polys = all_polys(F2, 6);
    std::size_t words = 0;
    for (const auto& g : family) {
        const ConvCode code = code_from_generator(pm(g), Framework::ModulePolyDprime);
        const CodePencil p = code_pencil(code);
        for (const Poly& a : polys)
            for (const Poly& b : polys) {
                const std::vector<Poly> w{a, b};
                c.expect(pencil_membership(p, w).member == membership(code, column_word(F2, w)).member,
                         "pencil membership differs for " + g.to_string());
                ++words;
            }
    }
    return c.finish(std::to_string(codes) + " codes; " + std::to_string(words) + " words of degree <= 6");
}

Outcome framework_equivalence() {
    Checker c;
    Rng rng(1006);
    int codes = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 2 + rng() % 2, k = 1 + rng() % (n - 1);
        const ConvCode a = code_from_generator(pm(random_full_column_rank(f, n, k, 2, rng)), Framework::RationalA);
        const ConvCode dp = convert(a, Framework::ModulePolyDprime).code;
        c.expect(codes_equal(convert(dp, Framework::RationalA).code, a), "A -> D' -> A changed the code");
        const auto d = free_distance(a).d_free;
        for (auto fw : {Framework::LaurentAprime, Framework::CompleteB, Framework::ModuleLaurentD, Framework::ModulePolyDprime}) {
            const ConvCode other = convert(a, fw).code;
            const auto& x = other.invariants();
            const auto& y = a.invariants();
            c.expect(x.n == y.n && x.k == y.k, "rate changed");
            c.expect(x.degree == y.degree, "degree changed");
            c.expect(x.forney_indices == y.forney_indices && x.kronecker_indices == y.kronecker_indices, "indices changed");
            c.expect(free_distance(other).d_free == d, "free distance changed");
        }
        ++codes;
    }
    return c.finish(std::to_string(codes) + " observable codes through all frameworks");
}

Outcome splice_controllability() {
    Checker c;
    Rng rng(1007);
    int codes = 0, pairs = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Field& f = field_for(trial);
        const std::size_t n = 2 + rng() % 2, k = 1 + rng() % (n - 1);
        const PolyMat g = code_from_generator(pm(random_full_column_rank(f, n, k, 2, rng)), Framework::ModulePolyDprime).generator();
        for (int s = 0; s < 5; ++s) {
            std::vector<Poly> a, b;
            for (std::size_t j = 0; j < k; ++j) {
                a.push_back(random_poly(f, 6, rng));
                b.push_back(random_poly(f, 6, rng));
            }
            const int at = static_cast<int>(rng() % 8);
            try {
                const SpliceResult r = splice(g, a, b, at);
                c.expect(r.gap == g.degree() + 1, "gap differs from deg G + 1");
                const auto wa = encode(g, a), wb = encode(g, b);
                for (std::size_t i = 0; i < n; ++i) {
                    for (int t = 0; t <= at; ++t)
                        c.expect(r.word[i].coeff(static_cast<std::size_t>(t)) == wa[i].coeff(static_cast<std::size_t>(t)), "past");
                    for (int t = at + r.gap; t <= at + r.gap + 20; ++t)
                        c.expect(r.word[i].coeff(static_cast<std::size_t>(t)) == wb[i].coeff(static_cast<std::size_t>(t)), "future");
                }
            } catch (const Error& e) {
                c.expect(false, std::string("splice failed: ") + e.what());
            }
            ++pairs;
        }
        ++codes;
    }
    // ker[1+z, z+z^2] forces w_1 + sigma w_2 to be constant, so a nonzero past cannot be joined to zero.
    const Behavior nc = behavior_from_kernel(pm(row(F2, {poly(F2, {1, 1}), poly(F2, {0, 1, 1})})), Axis::Z);
    const WindowTrajectory past{0, {{1, 0}, {1, 0}, {1, 0}}}, future{0, {{0, 0}, {0, 0}, {0, 0}}};
    c.expect(window_membership(nc, past) && window_membership(nc, future), "regression blocks are not in the behavior");
    bool joined = false;
    for (int gap = 0; gap <= 10; ++gap) joined = joined || splice_blocks(nc, past, future, gap).has_value();
    c.expect(!joined, "uncontrollable behavior admitted a splice");
    return c.finish(std::to_string(pairs) + " splices over " + std::to_string(codes) +
                    " codes; ker[1+z, z+z^2] refuses gaps 0..10");
}

Outcome resultant_condition() {
    Checker c;
    int agree = 0;
    for (unsigned bits = 0; bits < 64; ++bits) {
        const Elem a0 = bits & 1, a1 = bits >> 1 & 1, a2 = bits >> 2 & 1;
        const Elem b0 = bits >> 3 & 1, b1 = bits >> 4 & 1, b2 = bits >> 5 & 1;
        const FMat sylvester(F2, 4, 4, {a0, 0, b0, 0, a1, a0, b1, b0, a2, a1, b2, b1, 0, a2, 0, b2});
        const bool resultant = determinant(sylvester) != 0;
        const PolyMat g = column(F2, {poly(F2, {a0, a1, a2}), poly(F2, {b0, b1, b2})});
        const PolyMat rev = column(F2, {poly(F2, {a2, a1, a0}), poly(F2, {b2, b1, b0})});
        // Coprime as forms: prime at every finite point and at infinity.
        const auto prime = [](const PolyMat& m) { return !m.is_zero() && is_prime(pm(m), PrimeSide::right, Ring::poly); };
        const bool coprime = prime(g) && prime(rev);
        c.expect(resultant == coprime, "pattern " + std::to_string(bits));
        agree += resultant == coprime;
    }
    return c.finish(std::to_string(agree) + "/64 coefficient patterns agree");
}

Outcome crc_miss_rate_check() {
    Checker c;
    std::string summary;
    const std::vector<Poly> gens{poly(F2, {1, 1, 0, 0, 1}), poly(F2, {1, 0, 1, 1, 1, 0, 0, 0, 1})};
    for (const Poly& g : gens) {
        MissRateOptions opt;
        opt.trials = 100'000;
        opt.seed = 20240;
        const MissRate r = crc_miss_rate(CrcSpec(g), opt);
        c.expect(r.within_sigma(crc_sigmas), "miss rate outside 3 sigma for degree " + std::to_string(g.degree()));
        char buf[96];
        std::snprintf(buf, sizeof buf, "deg %d: %.5f vs %.5f; ", g.degree(), r.estimate, r.predicted);
        summary += buf;
    }
    const CrcSpec parity(poly(F2, {1, 1}));
    std::size_t words = 0;
    for (const Poly& p : all_polys(F2, 12)) {
        c.expect(crc_check(parity, p).accepted == (weight(p) % 2 == 0), "even-weight characterization");
        ++words;
    }
    return c.finish(summary + std::to_string(words) + " words for <1+z>");
}

Outcome closure_behavior_check() {
    Checker c;
    const std::vector<std::pair<PolyMat, Framework>> codes{
        {column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})}), Framework::RationalA},
        {column(F2, {poly(F2, {1}), poly(F2, {0, 1})}), Framework::RationalA},
        {column(F3, {poly(F3, {1, 2}), poly(F3, {2, 0, 1}), poly(F3, {1, 1})}), Framework::RationalA},
    };
    for (const auto& [g0, fw] : codes) {
        const ConvCode code = code_from_generator(pm(g0), fw);
        const Behavior b = closure_behavior(code);
        const PolyMat& g = code.encoder();
        const Field& f = code.field();
        std::size_t prev = 0;
        for (int n = 0; n <= 8; ++n) {
            std::vector<LaurentPoly> w;
            for (std::size_t i = 0; i < g.rows(); ++i)
                w.push_back(LaurentPoly(Poly(f, std::vector<Elem>(static_cast<std::size_t>(2 * n + 1), 1)), -n) * LaurentPoly(g(i, 0)));
            c.expect(window_membership(b, window_of(w, g.rows(), -n - 5, n + 8)), "window outside the closure");
            std::size_t wt = 0;
            for (const auto& x : w) wt += weight(x.body());
            if (n > 0) c.expect(wt > prev, "weight did not grow");
            prev = wt;
        }
    }
    return c.finish("3 codes, N = 0..8");
}

struct Criterion {
    const char* name;
    std::function<Outcome()> run;
    double time_limit;  // 0 means none
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"Forney-index invariance", forney_invariance, forney_time_limit},
        {"Degree duality", degree_duality, 0},
        {"Duality round trips", duality_round_trips, 0},
        {"Free distance", free_distance_check, distance_time_limit},
        {"Realization consistency", realization_consistency, 0},
        {"Framework equivalence", framework_equivalence, 0},
        {"Controllability of module codes", splice_controllability, 0},
        {"Resultant condition", resultant_condition, 0},
        {"CRC miss rate", crc_miss_rate_check, crc_time_limit},
        {"Closure behavior", closure_behavior_check, 0},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criteria[i].time_limit > 0 && secs >= criteria[i].time_limit) {
            o.pass = false;
            o.detail += " (over the time limit)";
        }
        failures += !o.pass;
        std::printf("%s criterion %zu: %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(), secs);
    }
    return failures == 0 ? 0 : 1;
}
