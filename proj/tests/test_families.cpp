#include <doctest.h>

#include "seqforge/construction.hpp"
#include "seqforge/families.hpp"
#include "test_support.hpp"

using namespace seqforge;

namespace {

oracle::Vec poly_bits(std::uint32_t poly) {
    oracle::Vec p;
    for (int k = 0; (poly >> k) != 0; ++k) p.push_back(static_cast<int>((poly >> k) & 1u));
    return p;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("seqforge_test_" + name);
}

}  // namespace

TEST_CASE("field polynomials") {
    const auto f = parse_field_polynomial("1000011");
    CHECK(f.m == 6);
    CHECK(f.polynomial == 0x43u);
    CHECK(format_field_polynomial(f) == "1000011");
    CHECK(default_field(6) == f);
    CHECK_THROWS_AS(parse_field_polynomial("10a1"), DomainError);
    CHECK_THROWS_AS(parse_field_polynomial("1"), DomainError);
    CHECK_THROWS_AS(default_field(17), DomainError);
    for (int m = 2; m <= 16; ++m) {
        CHECK(default_field(m).m == m);
        CHECK(is_primitive(default_field(m)));
    }
    // x^4 + x^3 + x^2 + x + 1 is irreducible, but x has order 5.
    const auto not_primitive = parse_field_polynomial("11111");
    CHECK(order_of_x(not_primitive) == 5);
    CHECK_FALSE(is_primitive(not_primitive));
    CHECK_THROWS_AS(m_sequence(not_primitive), DomainError);
}

TEST_CASE("m-sequences match the worked example and the trace oracle") {
    CHECK(m_sequence(parse_field_polynomial("1000011")) == fx::example_pair(2).first);
    CHECK(oracle::to_vec(m_sequence(default_field(2))) == oracle::trace_sequence({1, 1, 1}));
    CHECK(m_sequence(default_field(2)) == BinarySequence{0, 1, 1});
    for (int m = 2; m <= 10; ++m) {
        const auto field = default_field(m);
        const auto s = m_sequence(field);
        CHECK(oracle::to_vec(s) == oracle::trace_sequence(poly_bits(field.polynomial)));
        CHECK(s.size() == (std::size_t{1} << m) - 1);
        CHECK(weight(s) == (std::size_t{1} << (m - 1)));
        CHECK(is_ideal(s));
    }
}

TEST_CASE("is_ideal") {
    CHECK(is_ideal(fx::example_pair(2).first));
    CHECK_FALSE(is_ideal(fx::example_pair(1).first));
    CHECK_FALSE(is_ideal(BinarySequence{0, 0, 0, 0, 0}));
    CHECK_THROWS_AS(is_ideal(BinarySequence{0, 1}), DomainError);
}

TEST_CASE("legendre pairs") {
    const auto p7 = legendre_pair(7);
    CHECK(p7.family == PairFamily::legendre);
    std::set<std::size_t> off_zero;
    for (auto i : support(p7.first)) {
        if (i) off_zero.insert(i);
    }
    CHECK(off_zero == std::set<std::size_t>{1, 2, 4});
    off_zero.clear();
    for (auto i : support(p7.second)) {
        if (i) off_zero.insert(i);
    }
    CHECK(off_zero == std::set<std::size_t>{3, 5, 6});
    CHECK(p7.params == "p=7;zero=0,1");

    const auto p5 = legendre_pair(5);
    CHECK(support(p5.first) == std::set<std::size_t>{1, 4});
    CHECK(p5.params == "p=5;zero=0,0");

    for (std::int64_t p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31}) {
        const auto pair = legendre_pair(p);
        const auto qr = oracle::squares(p);
        for (std::int64_t i = 1; i < p; ++i) {
            CHECK(pair.first[i] == (qr.count(i) ? 1 : 0));
            CHECK(pair.first[i] + pair.second[i] == 1);
        }
        for (const auto& tuple : std::vector<std::array<int, 4>>{{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}) {
            const BinarySequence* m[2] = {&pair.first, &pair.second};
            const ConstructionInput in(*m[tuple[0]], *m[tuple[1]], *m[tuple[2]], *m[tuple[3]], {0, 0, 1});
            CHECK(verify_pattern(construct(in), SpectrumPattern::ideal()).matches);
        }
    }
    CHECK_THROWS_AS(legendre_pair(9), DomainError);
    CHECK_THROWS_AS(legendre_pair(2), DomainError);
}

TEST_CASE("twin-prime pairs") {
    for (std::int64_t p : {3, 5, 11}) {
        const auto pair = twin_prime_pair(p);
        const auto n = static_cast<std::size_t>(p * (p + 2));
        CHECK(pair.length() == n);
        CHECK(pair.family == PairFamily::twin_prime);
        CHECK(pair.params == "p=" + std::to_string(p) + ";zero=0;mult_q=0;mult_p=1");
        const ConstructionInput in(pair.first, pair.second, pair.first, pair.second, {1, 0, 0});
        const auto u = construct(in);
        const auto verdict = verify_pattern(u, SpectrumPattern::with_modulus(p + 2));
        CHECK(verdict.matches);
        if (p == 3) {
            const auto spec = auto_spectrum(u);
            int minus_two_even = 0;
            for (std::size_t tau = 2; tau < spec.length(); tau += 2) minus_two_even += spec[tau].re == -2;
            CHECK(minus_two_even == 2);
            CHECK(spec[10].re == -2);
            CHECK(spec[20].re == -2);
        }
    }
    CHECK_THROWS_AS(twin_prime_pair(7), DomainError);
}

TEST_CASE("GMW pairs") {
    const auto k3 = gmw_pair(3, parse_field_polynomial("1000011"));
    const auto fixture = fx::example_pair(2);
    CHECK(k3.first == fixture.first);
    CHECK(k3.second == fixture.second);
    CHECK(k3.params == "k=3;poly=1000011");
    const auto u = construct(ConstructionInput(k3.first, k3.second, k3.first, k3.second, {0, 0, 1}));
    const auto spec = auto_spectrum(u);
    std::vector<std::size_t> minus_two;
    for (std::size_t tau = 2; tau < spec.length(); tau += 2) {
        if (spec[tau].re == -2) minus_two.push_back(tau / 2);
    }
    CHECK(minus_two == std::vector<std::size_t>{9, 18, 27, 36, 45, 54});

    const auto k2 = gmw_pair(2);
    CHECK(k2.length() == 15);
    CHECK_THROWS_AS(gmw_pair(1), DomainError);
    CHECK_THROWS_AS(gmw_pair(3, default_field(5)), DomainError);
}

TEST_CASE("pair fixtures round-trip") {
    const auto path = temp_path("pair.txt");
    auto pair = gmw_pair(3);
    save_pair(pair, path);
    const auto loaded = load_pair(path);
    CHECK(loaded.first == pair.first);
    CHECK(loaded.second == pair.second);
    CHECK(loaded.family == PairFamily::fixture);
    CHECK(loaded.origin == "gmw");
    CHECK(loaded.params == pair.params);
    CHECK(format_pair(loaded) == format_pair(pair));
    CHECK(oracle::read_file(path) == format_pair(pair));
    std::filesystem::remove(path);

    const auto ex1 = fx::example_pair(1);
    CHECK(ex1.first == BinarySequence{0, 0, 0, 1, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0});
    CHECK(ex1.second == BinarySequence{1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1});
}

TEST_CASE("malformed pair fixtures") {
    auto line_of = [](const std::string& text) -> std::size_t {
        try {
            parse_pair(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("n=3 family=legendre\n0,1,1\n0,0,1\n") == 1);
    CHECK(line_of("n=3 family=bogus params=\n0,1,1\n0,0,1\n") == 1);
    CHECK(line_of("n=x family=fixture params=\n0,1,1\n0,0,1\n") == 1);
    CHECK(line_of("n=3 family=fixture params=\n0,1,2\n0,0,1\n") == 2);
    CHECK(line_of("n=3 family=fixture params=\n0,1,1\n") == 3);
    CHECK(line_of("n=3 family=fixture params=\n0,1,1\n0,0,1\nextra\n") == 4);
    CHECK_THROWS_AS(parse_pair("n=3 family=fixture params=\n0,1,1\n0,0\n"), DomainError);
    CHECK_THROWS_AS(parse_pair("n=4 family=fixture params=\n0,1,1\n0,0,1\n"), DomainError);
    CHECK_THROWS_AS(load_pair(temp_path("does_not_exist.txt")), DomainError);
    CHECK(parse_pair_family("twin_prime") == PairFamily::twin_prime);
    CHECK(to_string(PairFamily::gmw) == "gmw");
}
