#include <doctest.h>

#include <cmath>

#include "convcode/distance.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace convcode;
using namespace testing_support;

namespace {

const Field F2 = Field::prime(2);
const Field F3 = Field::prime(3);

PolyMatrix pm(const PolyMat& m, Ring r = Ring::poly) { return PolyMatrix::from_poly(m, r); }

ConvCode code(const PolyMat& g, Framework fw = Framework::ModulePolyDprime) { return code_from_generator(pm(g), fw); }

void check_witness(const ConvCode& c, const DistanceResult& r) {
    REQUIRE(r.d_free);
    REQUIRE(hamming_weight(r.witness) == static_cast<std::size_t>(*r.d_free));
    const Ring ring = c.framework() == Framework::ModulePolyDprime ? Ring::poly : Ring::laurent;
    REQUIRE(membership(c, column_word(c.field(), r.witness, ring)).member);
    REQUIRE(encode(c.generator(), r.message) == r.witness);
}

}  // namespace

TEST_CASE("free distance examples") {
    const ConvCode c5 = code(column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})}));
    const auto r5 = free_distance(c5);
    CHECK(r5.d_free == 5);
    check_witness(c5, r5);
    CHECK(naive_min_weight(c5.generator(), 8) == 5);

    const ConvCode c2 = code(column(F2, {poly(F2, {1}), poly(F2, {0, 1})}));
    CHECK(free_distance(c2).d_free == 2);
    check_witness(c2, free_distance(c2));

    // The even-weight sequences.
    const ConvCode even = code(column(F2, {poly(F2, {1, 1})}), Framework::ModuleLaurentD);
    CHECK(free_distance(even).d_free == 2);
    check_witness(even, free_distance(even));

    CHECK(free_distance(code(PolyMat::identity(F3, 1))).d_free == 1);
    CHECK(free_distance(code(PolyMat(F2, 2, 0))).infinite());
}

TEST_CASE("oracle examples") {
    CHECK(free_distance_oracle(code(column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})})), 8) == 5);
    CHECK(free_distance_oracle(code(PolyMat::identity(F2, 1)), 3) == 1);
    CHECK(free_distance_oracle(code(column(F2, {poly(F2, {1}), poly(F2, {0, 1})})), 4) == 2);
    CHECK_FALSE(free_distance_oracle(code(PolyMat(F2, 2, 0)), 3));
    // 3^(2 * 16) messages is far beyond the enumeration budget.
    CHECK(error_kind([] { free_distance_oracle(code(PolyMat::identity(F3, 2)), 15); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("trellis search equals exhaustive enumeration") {
    Rng rng(2718);
    int checked = 0;
    for (int trial = 0; checked < 120 && trial < 600; ++trial) {
        const Field& f = trial % 2 ? F3 : F2;
        const std::size_t n = 2 + rng() % 2, k = 1 + (rng() % 4 == 0 ? 1 : 0);
        const auto fw = trial % 3 ? Framework::ModulePolyDprime : Framework::ModuleLaurentD;
        const ConvCode c = code(random_full_column_rank(f, n, k, 2, rng), fw);
        const auto& inv = c.invariants();
        if (inv.degree > 3) continue;
        const int bound = 2 * inv.degree + inv.controller_memory + 2;
        std::optional<int> oracle;
        try {
            oracle = free_distance_oracle(c, bound);
        } catch (const Error& e) {
            REQUIRE(e.kind() == ErrorKind::BudgetExceeded);
            continue;
        }
        const auto r = free_distance(c);
        CAPTURE(c.generator().to_string());
        REQUIRE(r.d_free == oracle);
        check_witness(c, r);
        // Test-side enumeration, independent of the library's oracle.
        if (std::pow(f.order(), k * static_cast<std::size_t>(std::min(bound, 6) + 1)) <= 2e5)
            REQUIRE(*r.d_free <= *naive_min_weight(c.generator(), std::min(bound, 6)));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("free distance is the same in every framework") {
    Rng rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const Field& f = trial % 2 ? F3 : F2;
        const std::size_t n = 2 + rng() % 2, k = 1 + rng() % (n - 1);
        const ConvCode c = code(random_right_prime(f, n, k, 2, rng), Framework::RationalA);
        const auto d = free_distance(c).d_free;
        REQUIRE(d);
        for (auto fw : {Framework::LaurentAprime, Framework::CompleteB, Framework::ModuleLaurentD, Framework::ModulePolyDprime})
            REQUIRE(free_distance(convert(c, fw).code).d_free == d);
    }
}

TEST_CASE("non-observable codes have a larger distance than their closure") {
    const ConvCode even = code(column(F2, {poly(F2, {1, 1})}));
    const ConvCode closure = observable_closure(even);
    CHECK(free_distance(even).d_free == 2);
    CHECK(free_distance(closure).d_free == 1);

    Rng rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        const Field& f = trial % 2 ? F3 : F2;
        const Poly p = poly(f, {random_nonzero(f, rng), 1});
        PolyMat g = random_right_prime(f, 2, 1, 2, rng);
        for (std::size_t i = 0; i < 2; ++i) g(i, 0) = g(i, 0) * p;
        const ConvCode c = code(g);
        REQUIRE_FALSE(is_observable(c));
        REQUIRE(*free_distance(c).d_free >= *free_distance(observable_closure(c)).d_free);
    }
}

TEST_CASE("behavior distance") {
    const Behavior b = behavior_from_kernel(pm(mat(F2, {{poly(F2, {0, 1}), poly(F2, {1})}})), Axis::Z);
    CHECK(free_distance(b).d_free == 2);
    PolyMat p(F2, 1, 1);
    p(0, 0) = poly(F2, {1, 1, 1});
    CHECK(free_distance(behavior_from_kernel(pm(p), Axis::Z)).infinite());
    CHECK(error_kind([] {
              free_distance(behavior_from_kernel(pm(mat(F2, {{poly(F2, {1, 1}), poly(F2, {0, 1, 1})}})), Axis::Z));
          }) == ErrorKind::UnsupportedBehavior);
}
