#include <doctest.h>

#include "seqforge/cyclotomy.hpp"
#include "seqforge/seqcore.hpp"
#include "test_support.hpp"

using namespace seqforge;

namespace {

BinarySequence bin(const oracle::Vec& v) { return BinarySequence(std::vector<std::uint8_t>(v.begin(), v.end())); }
QuaternarySequence quat(const oracle::Vec& v) {
    return QuaternarySequence(std::vector<std::uint8_t>(v.begin(), v.end()));
}

}  // namespace

TEST_CASE("sequences validate their symbols") {
    CHECK_THROWS_AS(BinarySequence({0, 2}), DomainError);
    CHECK_THROWS_AS(QuaternarySequence({0, 4}), DomainError);
    CHECK_THROWS_AS(BinarySequence(std::vector<std::uint8_t>{}), DomainError);
    const QuaternarySequence u{0, 1, 2, 3};
    CHECK(u.size() == 4);
    CHECK(u.at_periodic(-1) == 3);
    CHECK(u.at_periodic(5) == 1);
}

TEST_CASE("cross_correlation small cases") {
    const BinarySequence s{0, 1};
    CHECK(cross_correlation(s, s, 1) == GaussianInt{-2, 0});

    const BinarySequence t{1, 0, 1, 1, 0, 0, 1};
    CHECK(cross_correlation(t, t, 0) == GaussianInt{7, 0});

    const QuaternarySequence u{0, 1, 2, 3};
    // u(i) - u(i+1) = -1 everywhere: 4 * xi^{-1} = -4i
    CHECK(cross_correlation(u, u, 1) == GaussianInt{0, -4});
}

TEST_CASE("cross_correlation rejects bad arguments") {
    const BinarySequence a{0, 1, 1};
    const BinarySequence b{0, 1};
    CHECK_THROWS_AS(cross_correlation(a, b, 0), DomainError);
    CHECK_THROWS_AS(cross_correlation(a, a, 3), DomainError);
    CHECK(cross_correlation_mod(a, a, -1) == cross_correlation(a, a, 2));
}

TEST_CASE("s2 against s5 correlates to 1 at every nonzero shift") {
    for (std::int64_t n : {13, 17, 29, 37, 41}) {
        const auto system = build_system(n, find_generator(n));
        const auto s = six_sequences(system);
        for (std::size_t tau = 1; tau < static_cast<std::size_t>(n); ++tau) {
            CHECK(cross_correlation(s[1], s[4], tau) == GaussianInt{1, 0});
        }
    }
}

TEST_CASE("auto_spectrum of the worked-example sequences") {
    const auto pair1 = fx::example_pair(1);
    const auto spec = auto_spectrum(pair1.first);
    REQUIRE(spec.length() == 25);
    const std::int64_t head[] = {25, -3, 5, -3, -7, 5};
    for (std::size_t i = 0; i < 6; ++i) CHECK(spec[i] == GaussianInt{head[i], 0});

    const BinarySequence zeros(std::vector<std::uint8_t>(9, 0));
    for (const auto& v : auto_spectrum(zeros).values) CHECK(v == GaussianInt{9, 0});

    const auto a0 = fx::example_pair(2).first;
    const auto ideal = auto_spectrum(a0);
    CHECK(ideal[0] == GaussianInt{63, 0});
    for (std::size_t tau = 1; tau < 63; ++tau) CHECK(ideal[tau] == GaussianInt{-1, 0});
}

TEST_CASE("r_max_squared and optimality") {
    CHECK(r_max_squared(auto_spectrum(fx::example_u(1))) == 4);
    CHECK(r_max_squared(auto_spectrum(fx::example_u(3))) == 4);
    CHECK(r_max_squared(CorrelationSpectrum{{{6, 0}, {0, 0}, {0, 0}}}) == 0);
    CHECK_THROWS_AS(r_max_squared(CorrelationSpectrum{{{1, 0}}}), DomainError);

    CHECK(is_optimal_even_length(fx::example_u(2)).optimal);
    CHECK(is_optimal_even_length(fx::example_u(3)).optimal);
    const auto zeros = is_optimal_even_length(QuaternarySequence{0, 0, 0, 0});
    CHECK_FALSE(zeros.optimal);
    CHECK(zeros.spectrum[1] == GaussianInt{4, 0});
    CHECK_THROWS_AS(is_optimal_even_length(QuaternarySequence{0, 1, 2}), DomainError);
}

TEST_CASE("shift, complement and support helpers") {
    const BinarySequence s{0, 1, 1};
    CHECK(shift(s, 0) == s);
    CHECK(shift(s, 1) == BinarySequence{1, 1, 0});
    CHECK(shift(s, -1) == BinarySequence{1, 0, 1});
    CHECK(complement(s) == BinarySequence{1, 0, 0});
    CHECK(complement(complement(s)) == s);
    CHECK(add_constant(s, 0) == s);
    CHECK(add_constant(s, 1) == complement(s));

    CHECK(from_support(5, {}) == BinarySequence{0, 0, 0, 0, 0});
    CHECK_THROWS_AS(from_support(5, {5}), DomainError);

    const auto system = build_system(17, 3);
    std::set<std::size_t> c01;
    for (int k : {0, 1}) {
        for (auto v : system.classes[k]) c01.insert(static_cast<std::size_t>(v));
    }
    CHECK(from_support(17, c01) == BinarySequence{0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1});
    CHECK(weight(from_support(17, c01)) == 8);
}

TEST_CASE("random properties of the correlation engine") {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 24;
        const auto sv = oracle::random_vec(rng, n, 2), tv = oracle::random_vec(rng, n, 2);
        const auto s = bin(sv), t = bin(tv);
        const auto k = static_cast<std::int64_t>(rng() % 50) - 25;
        const auto j = static_cast<std::int64_t>(rng() % 50) - 25;
        CHECK(shift(shift(s, k), j) == shift(s, k + j));
        CHECK(auto_spectrum(shift(s, k)).values == auto_spectrum(s).values);

        std::set<std::size_t> supp;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng() % 3 == 0) supp.insert(i);
        }
        CHECK(support(from_support(n, supp)) == supp);

        for (std::size_t tau = 0; tau < n; ++tau) {
            const auto r = cross_correlation(s, t, tau);
            const auto ref = oracle::correlation(sv, tv, 2, static_cast<std::int64_t>(tau));
            CHECK(r.re == ref.re);
            CHECK(r.im == 0);
            CHECK(std::abs(r.re) <= static_cast<std::int64_t>(n));
            CHECK(((r.re - static_cast<std::int64_t>(n)) % 2 + 2) % 2 == 0);
            CHECK(cross_correlation(complement(s), t, tau).re == -r.re);
            CHECK(cross_correlation(t, s, (n - tau) % n) == r);
        }

        const auto uv = oracle::random_vec(rng, n + 1, 4), vv = oracle::random_vec(rng, n + 1, 4);
        const auto u = quat(uv), v = quat(vv);
        for (std::size_t tau = 0; tau <= n; ++tau) {
            const auto r = cross_correlation(u, v, tau);
            const auto ref = oracle::correlation(uv, vv, 4, static_cast<std::int64_t>(tau));
            CHECK(r == GaussianInt{ref.re, ref.im});
            CHECK(cross_correlation(v, u, (n + 1 - tau) % (n + 1)) == r.conj());
            if (tau > 0) {
                CHECK(cross_correlation(u, u, n + 1 - tau) == cross_correlation(u, u, tau).conj());
            }
        }
    }
}

TEST_CASE("text format") {
    CHECK(parse_sequence<4>("0,1,2,3") == QuaternarySequence{0, 1, 2, 3});
    CHECK(parse_sequence<4>("[0, 1,\n 2 ,3]") == QuaternarySequence{0, 1, 2, 3});
    CHECK(parse_sequence<2>("(1,0)") == BinarySequence{1, 0});
    CHECK(format_sequence(QuaternarySequence{3, 0, 2}) == "3,0,2");
    CHECK_THROWS_AS(parse_sequence<2>("0,1,2"), DomainError);
    CHECK_THROWS_AS(parse_symbols("0,,1"), DomainError);
    CHECK_THROWS_AS(parse_symbols("[0,1"), DomainError);
    CHECK_THROWS_AS(parse_symbols("0;1"), DomainError);
    CHECK_THROWS_AS(parse_symbols(""), DomainError);
    CHECK(to_string(GaussianInt{-2, 0}) == "-2");
}
