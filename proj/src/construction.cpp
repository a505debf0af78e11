#include "seqforge/construction.hpp"

#include <sstream>

#include "seqforge/detail/exact.hpp"
#include "seqforge/interleave_gray.hpp"

namespace seqforge {

namespace {

int sign_of(int bit) { return (bit & 1) ? -1 : 1; }

}  // namespace

std::string to_string(const ETriple& e) {
    return std::to_string(e.e0) + "," + std::to_string(e.e1) + "," + std::to_string(e.e2);
}

ETriple parse_e_triple(const std::string& text) {
    std::vector<int> bits;
    for (char ch : text) {
        if (ch == '0' || ch == '1') {
            bits.push_back(ch - '0');
        } else if (ch != ',' && ch != ' ' && ch != '(' && ch != ')') {
            throw DomainError("e-triple: unexpected character '" + std::string(1, ch) + "' in '" + text + "'");
        }
    }
    if (bits.size() != 3) {
        throw DomainError("e-triple: expected three bits, got '" + text + "'");
    }
    return {bits[0], bits[1], bits[2]};
}

std::array<ETriple, 8> all_e_triples() {
    std::array<ETriple, 8> out;
    for (int v = 0; v < 8; ++v) {
        out[v] = {(v >> 2) & 1, (v >> 1) & 1, v & 1};
    }
    return out;
}

std::vector<ETriple> e_triples_with_parity(int parity) {
    std::vector<ETriple> out;
    for (const auto& e : all_e_triples()) {
        if (e.parity() == (parity & 1)) out.push_back(e);
    }
    return out;
}

ConstructionInput::ConstructionInput(std::array<BinarySequence, 4> a, ETriple e) : a_(std::move(a)), e_(e) {
    const auto n = a_[0].size();
    if (n % 2 == 0) {
        throw DomainError("construction input: column length " + std::to_string(n) + " is not odd");
    }
    for (std::size_t i = 1; i < 4; ++i) {
        if (a_[i].size() != n) {
            throw DomainError("construction input: a" + std::to_string(i) + " has length " +
                              std::to_string(a_[i].size()) + ", expected " + std::to_string(n));
        }
    }
    for (int bit : {e_.e0, e_.e1, e_.e2}) {
        if (bit != 0 && bit != 1) throw DomainError("construction input: e bits must be 0 or 1");
    }
}

ConstructionInput::ConstructionInput(BinarySequence a0, BinarySequence a1, BinarySequence a2, BinarySequence a3,
                                     ETriple e)
    : ConstructionInput(std::array<BinarySequence, 4>{std::move(a0), std::move(a1), std::move(a2), std::move(a3)},
                        e) {}

std::pair<BinarySequence, BinarySequence> build_components(const ConstructionInput& input) {
    const auto lam = input.lambda();
    const auto& e = input.e();
    auto c = interleave(input.a(0), add_constant(shift(input.a(1), lam), e.e0));
    auto d = interleave(add_constant(input.a(2), e.e1), add_constant(shift(input.a(3), lam), e.e2));
    return {std::move(c), std::move(d)};
}

QuaternarySequence construct(const ConstructionInput& input) {
    const auto [c, d] = build_components(input);
    return gray_compose(c, d);
}

GaussianInt predicted_autocorrelation(const ConstructionInput& input, std::size_t tau) {
    const auto n = input.n();
    if (tau >= 2 * n) {
        throw DomainError("predicted_autocorrelation: shift " + std::to_string(tau) + " out of range");
    }
    auto R = [&](int i, int j, std::int64_t t) { return cross_correlation_mod(input.a(i), input.a(j), t).re; };
    const auto& e = input.e();
    const int sigma = sign_of(e.parity());
    const auto t0 = static_cast<std::int64_t>(tau / 2);

    if (tau % 2 == 0) {
        const auto re = R(0, 0, t0) + R(1, 1, t0) + R(2, 2, t0) + R(3, 3, t0);
        const auto im = R(0, 2, t0) - R(2, 0, t0) + sigma * (R(1, 3, t0) - R(3, 1, t0));
        return {detail::exact_half(re, "even-shift real part"),
                sign_of(e.e1) * detail::exact_half(im, "even-shift imaginary part")};
    }
    const auto t2 = t0 + input.lambda();
    const auto re = R(0, 1, t2) + R(1, 0, t2) + sigma * (R(2, 3, t2) + R(3, 2, t2));
    const auto im = R(0, 3, t2) - R(3, 0, t2) + sigma * (R(1, 2, t2) - R(2, 1, t2));
    return {sign_of(e.e0) * detail::exact_half(re, "odd-shift real part"),
            sign_of(e.e2) * detail::exact_half(im, "odd-shift imaginary part")};
}

Corollary1Verdict corollary1_check(const ConstructionInput& input) {
    auto R = [&](int i, int j, std::int64_t t) { return cross_correlation_mod(input.a(i), input.a(j), t).re; };
    const int sigma = sign_of(input.e().parity());
    const auto n = static_cast<std::int64_t>(input.n());
    auto in_zero_pm4 = [](std::int64_t v) { return v == 0 || v == 4 || v == -4; };

    for (std::int64_t t = 1; t < n; ++t) {
        const auto c1 = R(0, 0, t) + R(1, 1, t) + R(2, 2, t) + R(3, 3, t);
        if (!in_zero_pm4(c1)) return {false, 1, t, c1};
        const auto c2 = R(0, 2, t) - R(2, 0, t) + sigma * (R(1, 3, t) - R(3, 1, t));
        if (c2 != 0) return {false, 2, t, c2};
    }
    for (std::int64_t t = 0; t < n; ++t) {
        const auto c3 = R(0, 1, t) + R(1, 0, t) + sigma * (R(2, 3, t) + R(3, 2, t));
        if (!in_zero_pm4(c3)) return {false, 3, t, c3};
        const auto c4 = R(0, 3, t) - R(3, 0, t) + sigma * (R(1, 2, t) - R(2, 1, t));
        if (c4 != 0) return {false, 4, t, c4};
    }
    return {};
}

SpectrumPattern SpectrumPattern::with_modulus(std::int64_t m) {
    if (m < 1) throw DomainError("spectrum pattern modulus must be positive");
    return {Kind::modulus, m};
}

std::string to_string(const SpectrumPattern& pattern) {
    switch (pattern.kind) {
        case SpectrumPattern::Kind::ideal:
            return "ideal";
        case SpectrumPattern::Kind::modulus:
            return "modulus:" + std::to_string(*pattern.modulus);
        case SpectrumPattern::Kind::pm2:
            return "pm2";
    }
    return "unknown";
}

PatternVerdict verify_pattern(const CorrelationSpectrum& spectrum, const SpectrumPattern& pattern) {
    const auto N = spectrum.length();
    if (N % 2 != 0) {
        throw DomainError("verify_pattern: spectrum length " + std::to_string(N) + " is odd");
    }
    PatternVerdict verdict;
    verdict.r_max_squared = r_max_squared(spectrum);
    for (std::size_t tau = 1; tau < N; ++tau) {
        const auto& v = spectrum[tau];
        bool ok = false;
        std::string expected;
        switch (pattern.kind) {
            case SpectrumPattern::Kind::ideal: {
                const GaussianInt want = tau % 2 == 0 ? GaussianInt{-2, 0} : GaussianInt{0, 0};
                ok = v == want;
                expected = to_string(want);
                break;
            }
            case SpectrumPattern::Kind::modulus: {
                GaussianInt want{0, 0};
                if (tau % 2 == 0) {
                    const auto t0 = static_cast<std::int64_t>(tau / 2);
                    want = {t0 % *pattern.modulus == 0 ? -2 : 2, 0};
                }
                ok = v == want;
                expected = to_string(want);
                break;
            }
            case SpectrumPattern::Kind::pm2:
                ok = v == GaussianInt{2, 0} || v == GaussianInt{-2, 0};
                expected = "+-2";
                break;
        }
        if (!ok) {
            verdict.matches = false;
            verdict.mismatches.push_back({tau, v, std::move(expected)});
        }
    }
    return verdict;
}

PatternVerdict verify_pattern(const QuaternarySequence& u, const SpectrumPattern& pattern) {
    if (u.size() % 2 != 0) {
        throw DomainError("verify_pattern: sequence length " + std::to_string(u.size()) + " is odd");
    }
    return verify_pattern(auto_spectrum(u), pattern);
}

}  // namespace seqforge
