#include <doctest.h>

#include <thread>

#include "convcode/code.hpp"
#include "support/errors.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using namespace convcode;
using namespace testing_support;

namespace {

const Field F2 = Field::prime(2);

PolyMatrix pm(const PolyMat& m, Ring r = Ring::poly) { return PolyMatrix::from_poly(m, r); }

PolyMat col_1_z() { return column(F2, {poly(F2, {1}), poly(F2, {0, 1})}); }
PolyMat col_factor() { return column(F2, {poly(F2, {1, 1}), poly(F2, {0, 1, 1})}); }

std::vector<int> column_degrees_desc(const PolyMat& g) {
    std::vector<int> d;
    for (std::size_t j = 0; j < g.cols(); ++j) d.push_back(g.column_degree(j));
    std::sort(d.rbegin(), d.rend());
    return d;
}

}  // namespace

TEST_CASE("code_from_generator examples") {
    const ConvCode a = code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime);
    CHECK(a.invariants().kronecker_indices == std::vector<int>{1});
    CHECK(a.invariants().degree == 1);

    const ConvCode b = code_from_generator(pm(col_factor()), Framework::RationalA);
    CHECK(b.generator() == col_1_z());

    const ConvCode c = code_from_generator(pm(col_factor()), Framework::ModulePolyDprime);
    CHECK(c.generator() == col_factor());

    PolyMatrix rational(F2, Ring::rational, 1, 1);
    rational(0, 0) = RationalFn(poly(F2, {1}), poly(F2, {1, 1}));
    CHECK(error_kind([&] { code_from_generator(rational, Framework::ModuleLaurentD); }) ==
          ErrorKind::RationalGeneratorUnsupportedForModuleFramework);
    CHECK(error_kind([] { code_from_generator(PolyMatrix(F2, Ring::poly, 0, 1), Framework::RationalA); }) == ErrorKind::EmptyGenerator);
    CHECK(parse_framework("Dprime") == Framework::ModulePolyDprime);
    CHECK(parse_framework("a'") == Framework::LaurentAprime);
    CHECK_FALSE(parse_framework("c"));
}

TEST_CASE("rational generators are cleared before canonicalization") {
    // [1/(1+z); z/(1+z)] spans the same rational subspace as [1; z].
    PolyMatrix g(F2, Ring::rational, 2, 1);
    g(0, 0) = RationalFn(poly(F2, {1}), poly(F2, {1, 1}));
    g(1, 0) = RationalFn(poly(F2, {0, 1}), poly(F2, {1, 1}));
    CHECK(code_from_generator(g, Framework::RationalA).generator() == col_1_z());
    CHECK(code_from_generator(g, Framework::CompleteB).generator() == col_1_z());
}

TEST_CASE("minimal basic encoder examples") {
    CHECK(minimal_basic_encoder(code_from_generator(pm(col_factor()), Framework::RationalA)).to_poly() == col_1_z());
    CHECK(minimal_basic_encoder(code_from_generator(pm(col_1_z()), Framework::RationalA)).to_poly() == col_1_z());
    const PolyMat g = mat(F2, {{poly(F2, {1}), Poly(F2)}, {poly(F2, {0, 0, 1}), poly(F2, {1})}});
    const ConvCode c = code_from_generator(pm(g), Framework::RationalA);
    CHECK(minimal_basic_encoder(c).to_poly() == PolyMat::identity(F2, 2));
    CHECK(c.invariants().forney_indices == std::vector<int>{0, 0});
}

TEST_CASE("parity check examples") {
    const PolyMatrix h1 = parity_check(code_from_generator(pm(col_1_z()), Framework::RationalA));
    CHECK(h1.to_poly() == mat(F2, {{poly(F2, {0, 1}), poly(F2, {1})}}));

    const PolyMat g = column(F2, {poly(F2, {1, 0, 1}), poly(F2, {1, 1, 1})});
    const PolyMatrix h2 = parity_check(code_from_generator(pm(g), Framework::ModulePolyDprime));
    CHECK(h2.to_poly() == mat(F2, {{poly(F2, {1, 1, 1}), poly(F2, {1, 0, 1})}}));

    const PolyMatrix h3 = parity_check(code_from_generator(PolyMatrix::identity(F2, 1), Framework::RationalA));
    CHECK(h3.rows() == 0);
    CHECK(h3.cols() == 1);

    CHECK(error_kind([] { parity_check(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime)); }) ==
          ErrorKind::NotObservable);
}

TEST_CASE("invariant examples") {
    const ConvCode ca = code_from_generator(pm(col_1_z()), Framework::RationalA);
    const auto& a = ca.invariants();
    CHECK(a.k == 1);
    CHECK(a.n == 2);
    CHECK(a.forney_indices == std::vector<int>{1});
    CHECK(a.degree == 1);
    CHECK(a.controller_memory == 1);
    CHECK(a.observer_memory == 1);

    const ConvCode cb = code_from_generator(PolyMatrix::identity(F2, 2), Framework::RationalA);
    const auto& b = cb.invariants();
    CHECK(b.forney_indices == std::vector<int>{0, 0});
    CHECK(b.degree == 0);

    const ConvCode c = code_from_generator(pm(col_factor()), Framework::ModulePolyDprime);
    CHECK(c.invariants().kronecker_indices == std::vector<int>{2});
    CHECK(c.invariants().degree == 2);
    CHECK_FALSE(c.invariants().observable);
    CHECK_FALSE(c.invariants().observer_memory);
    const ConvCode closure = observable_closure(c);
    CHECK(closure.invariants().forney_indices == std::vector<int>{1});
    CHECK(closure.invariants().degree == 1);
}

TEST_CASE("observability examples") {
    CHECK_FALSE(is_observable(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime)));
    CHECK(is_observable(code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime)));
    const PolyMat zz = column(F2, {poly(F2, {0, 1}), poly(F2, {0, 0, 1})});
    CHECK(is_observable(code_from_generator(pm(zz, Ring::laurent), Framework::ModuleLaurentD)));
    CHECK_FALSE(is_observable(code_from_generator(pm(zz), Framework::ModulePolyDprime)));
    CHECK(is_observable(code_from_generator(pm(col_factor()), Framework::RationalA)));
}

TEST_CASE("observable closure examples") {
    const ConvCode a = observable_closure(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime));
    CHECK(a.generator() == col_1_z());
    const ConvCode b = code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime);
    CHECK(codes_equal(observable_closure(b), b));
    PolyMat crc(F2, 1, 1);
    crc(0, 0) = poly(F2, {1, 1});
    const ConvCode c = observable_closure(code_from_generator(pm(crc), Framework::ModulePolyDprime));
    CHECK(c.generator() == PolyMat::identity(F2, 1));
    CHECK(codes_equal(observable_closure(observable_closure(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime))),
                      observable_closure(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime))));
}

TEST_CASE("convert examples") {
    const auto r1 = convert(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime), Framework::RationalA);
    CHECK(r1.code.generator() == col_1_z());
    CHECK(r1.information_lost);
    CHECK(r1.note == "non-observable content dropped");

    const ConvCode a = code_from_generator(pm(col_1_z()), Framework::RationalA);
    const auto r2 = convert(a, Framework::ModulePolyDprime);
    CHECK(r2.code.framework() == Framework::ModulePolyDprime);
    CHECK(r2.code.generator() == col_1_z());
    CHECK(is_observable(r2.code));
    CHECK_FALSE(r2.information_lost);
    CHECK(codes_equal(convert(r2.code, Framework::RationalA).code, a));
}

TEST_CASE("codes_equal examples") {
    const PolyMat same = column(F2, {poly(F2, {1}) + poly(F2, {0, 1}) * Poly(F2), poly(F2, {0, 1})});
    CHECK(codes_equal(code_from_generator(pm(col_1_z()), Framework::RationalA), code_from_generator(pm(same), Framework::RationalA)));
    CHECK(codes_equal(code_from_generator(pm(col_factor()), Framework::RationalA),
                      code_from_generator(pm(col_1_z()), Framework::RationalA)));
    CHECK_FALSE(codes_equal(code_from_generator(pm(col_factor()), Framework::ModulePolyDprime),
                            code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime)));
    CHECK(error_kind([] {
              codes_equal(code_from_generator(pm(col_1_z()), Framework::RationalA),
                          code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime));
          }) == ErrorKind::FrameworkMismatch);
}

TEST_CASE("membership examples") {
    const ConvCode c = code_from_generator(pm(col_1_z()), Framework::ModulePolyDprime);
    const auto m1 = membership(c, column_word(F2, {poly(F2, {1, 1}), poly(F2, {0, 1, 1})}));
    CHECK(m1.member);
    REQUIRE(m1.message);
    CHECK(m1.message->to_poly() == column(F2, {poly(F2, {1, 1})}));
    CHECK_FALSE(membership(c, column_word(F2, {poly(F2, {1}), poly(F2, {1})})).member);

    // Laurent words in a D code: z^-1 (1, z) belongs, as does any shift.
    const ConvCode d = code_from_generator(pm(col_1_z(), Ring::laurent), Framework::ModuleLaurentD);
    PolyMatrix w(F2, Ring::laurent, 2, 1);
    w(0, 0) = RationalFn(LaurentPoly(poly(F2, {1}), -1));
    w(1, 0) = RationalFn(poly(F2, {1}));
    CHECK(membership(d, w).member);
    CHECK(error_kind([&] { membership(c, w); }) == ErrorKind::InvalidArgument);
    // Rational words in an A code.
    const ConvCode a = code_from_generator(pm(col_1_z()), Framework::RationalA);
    PolyMatrix r(F2, Ring::rational, 2, 1);
    r(0, 0) = RationalFn(poly(F2, {1}), poly(F2, {1, 1, 1}));
    r(1, 0) = RationalFn(poly(F2, {0, 1}), poly(F2, {1, 1, 1}));
    CHECK(membership(a, r).member);
    r(1, 0) = RationalFn(poly(F2, {1}), poly(F2, {1, 1, 1}));
    CHECK_FALSE(membership(a, r).member);
}

TEST_CASE("membership agrees with enumeration") {
    Rng rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Field f = trial % 2 ? Field::prime(3) : F2;
        const std::size_t n = 2 + rng() % 2;
        const PolyMat g = random_full_column_rank(f, n, 1, 2, rng);
        const ConvCode c = code_from_generator(pm(g), Framework::ModulePolyDprime);
        std::vector<Poly> w;
        if (rng() % 2) {
            w = encode(g, {random_poly(f, 2, rng)});
        } else {
            for (std::size_t i = 0; i < n; ++i) w.push_back(random_poly(f, 3, rng));
        }
        const auto m = membership(c, column_word(f, w));
        CAPTURE(g.to_string());
        REQUIRE(m.member == naive_in_span(g, w, 4));
        if (m.member) REQUIRE(encode(c.generator(), {m.message->to_poly()(0, 0)}) == w);
    }
}

TEST_CASE("Forney indices are invariant under rational re-encoding") {
    Rng rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const Field f = trial % 2 ? Field::prime(3) : F2;
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = k + 1 + rng() % (4 - k);
        const PolyMat g = random_full_column_rank(f, n, k, 3, rng);
        const ConvCode c = code_from_generator(pm(g), Framework::RationalA);
        const PolyMatrix t = random_rational_invertible(f, k, rng);
        const ConvCode c2 = code_from_generator(pm(g).with_ring(Ring::rational) * t, Framework::RationalA);
        CAPTURE(g.to_string());
        REQUIRE(c.invariants().forney_indices == c2.invariants().forney_indices);
        REQUIRE(codes_equal(c, c2));
        // The encoder is right prime and its column degrees are the indices.
        REQUIRE(naive_minor_gcd(c.encoder()).is_one());
        REQUIRE(column_degrees_desc(c.encoder()) == c.invariants().forney_indices);
    }
}

TEST_CASE("degree duality and parity checks on observable codes") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const Field f = trial % 2 ? Field::prime(3) : F2;
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = k + 1 + rng() % (4 - k);
        const ConvCode c = code_from_generator(pm(random_full_column_rank(f, n, k, 2, rng)), Framework::RationalA);
        const PolyMat h = parity_check(c).to_poly();
        REQUIRE(h.rows() == n - k);
        REQUIRE((h * c.encoder()).is_zero());
        REQUIRE(naive_minor_gcd(h).is_one());
        int sum = 0;
        for (std::size_t i = 0; i < h.rows(); ++i) sum += h.row_degree(i);
        REQUIRE(sum == c.invariants().degree);
    }
}

TEST_CASE("framework round trips on random codes") {
    Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const Field f = trial % 2 ? Field::prime(3) : F2;
        const std::size_t k = 1 + rng() % 2;
        const std::size_t n = k + 1 + rng() % 2;
        const PolyMat g = random_full_column_rank(f, n, k, 2, rng);
        const ConvCode a = code_from_generator(pm(g), Framework::RationalA);
        REQUIRE(codes_equal(convert(convert(a, Framework::ModulePolyDprime).code, Framework::RationalA).code, a));
        REQUIRE(codes_equal(convert(convert(a, Framework::ModuleLaurentD).code, Framework::LaurentAprime).code,
                            convert(a, Framework::LaurentAprime).code));
        const ConvCode d = code_from_generator(pm(g), Framework::ModulePolyDprime);
        if (is_observable(d)) {
            REQUIRE(codes_equal(observable_closure(d), d));
            REQUIRE(codes_equal(convert(convert(d, Framework::RationalA).code, Framework::ModulePolyDprime).code, d));
        } else {
            REQUIRE(convert(d, Framework::RationalA).information_lost);
        }
        // Laurent canonical generators do not depend on column shifts.
        PolyMatrix shifted = pm(g, Ring::laurent);
        for (std::size_t j = 0; j < k; ++j) {
            const RationalFn unit(LaurentPoly(Poly::one(f), static_cast<int>(rng() % 5) - 2));
            for (std::size_t i = 0; i < n; ++i) shifted(i, j) = shifted(i, j) * unit;
        }
        const PolyMatrix u = pm(random_unimodular(f, k, rng), Ring::laurent);
        REQUIRE(codes_equal(code_from_generator(shifted * u, Framework::ModuleLaurentD),
                            code_from_generator(pm(g, Ring::laurent), Framework::ModuleLaurentD)));
    }
}

TEST_CASE("free-distance cache is shared and thread safe") {
    const ConvCode c = code_from_generator(pm(col_1_z()), Framework::RationalA);
    const ConvCode copy = c;
    CHECK_FALSE(c.cached_free_distance());
    std::vector<std::thread> ts;
    for (int i = 0; i < 4; ++i) ts.emplace_back([&] { c.cache_free_distance(2); });
    for (auto& t : ts) t.join();
    REQUIRE(copy.cached_free_distance());
    CHECK(*copy.cached_free_distance() == 2);
}

TEST_CASE("resultant condition for rate 1/2 degree 2 codes over GF(2)") {
    // The Sylvester determinant of two quadratic forms vanishes exactly when
    // they share a root on the projective line, including the point at
    // infinity (a2 = b2 = 0), so it is compared with primeness of G and of
    // its reversal z^2 G(1/z).
    int nonzero = 0;
    for (unsigned bits = 0; bits < 64; ++bits) {
        const Elem a0 = bits & 1, a1 = bits >> 1 & 1, a2 = bits >> 2 & 1;
        const Elem b0 = bits >> 3 & 1, b1 = bits >> 4 & 1, b2 = bits >> 5 & 1;
        const FMat sylvester(F2, 4, 4, {a0, 0, b0, 0, a1, a0, b1, b0, a2, a1, b2, b1, 0, a2, 0, b2});
        const bool resultant = determinant(sylvester) != 0;
        nonzero += resultant;
        const PolyMat g = column(F2, {poly(F2, {a0, a1, a2}), poly(F2, {b0, b1, b2})});
        const PolyMat rev = column(F2, {poly(F2, {a2, a1, a0}), poly(F2, {b2, b1, b0})});
        const auto prime = [](const PolyMat& m) {
            return !m.is_zero() && is_prime(pm(m), PrimeSide::right, Ring::poly);
        };
        CAPTURE(bits);
        REQUIRE(resultant == (prime(g) && prime(rev)));
        if (resultant) REQUIRE(is_observable(code_from_generator(pm(g), Framework::ModulePolyDprime)));
    }
    // (q^2 - 1) q^3 coprime pairs of binary quadratic forms for q = 2.
    CHECK(nonzero == 24);
}
